#include "nilstalk/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace nilstalk {

namespace {

void check_rect(const IntMatrix& a) {
    for (const auto& row : a)
        if (row.size() != a[0].size())
            throw std::invalid_argument("ragged matrix");
}

}  // namespace

SmithResult smith_normal_form(IntMatrix a) {
    SmithResult res;
    if (a.empty() || a[0].empty()) return res;
    check_rect(a);
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t t = 0;  // current pivot position

    while (t < rows && t < cols) {
        // find a nonzero pivot with minimal absolute value
        std::size_t pi = t, pj = t;
        std::int64_t best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (best == 0 || std::abs(a[i][j]) < best)) {
                    best = std::abs(a[i][j]);
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        std::swap(a[t], a[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            std::int64_t q = a[i][t] / a[t][t];
            if (q != 0)
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
            if (a[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            std::int64_t q = a[t][j] / a[t][t];
            if (q != 0)
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
            if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared, redo this pivot
        res.diagonal.push_back(std::abs(a[t][t]));
        ++t;
    }
    res.rank = static_cast<int>(res.diagonal.size());

    // enforce the divisibility chain d1 | d2 | ...
    auto& d = res.diagonal;
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d[j] % d[i] != 0) {
                std::int64_t g = std::gcd(d[i], d[j]);
                std::int64_t l = d[i] / g * d[j];
                d[i] = g;
                d[j] = l;
            }
    std::sort(d.begin(), d.end());
    return res;
}

int integer_rank(const IntMatrix& a) {
    return smith_normal_form(a).rank;
}

int rank_mod_p(IntMatrix a, std::int64_t p) {
    if (a.empty() || a[0].empty()) return 0;
    check_rect(a);
    auto mod = [p](std::int64_t v) { return ((v % p) + p) % p; };
    const std::size_t rows = a.size(), cols = a[0].size();
    for (auto& row : a)
        for (auto& v : row) v = mod(v);

    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        // modular inverse by Fermat
        std::int64_t inv = 1, base = a[r][c], e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            std::int64_t f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = mod(a[i][j] - f * a[r][j]);
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace nilstalk
