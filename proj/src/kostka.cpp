#include "nilstalk/kostka.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilstalk {

Partition Tableau::shape() const {
    std::vector<std::int64_t> parts;
    for (const auto& row : rows) parts.push_back(static_cast<std::int64_t>(row.size()));
    return Partition(parts);
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> word;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        word.insert(word.end(), it->begin(), it->end());
    return word;
}

namespace {

void fill_cell(std::vector<std::vector<int>>& rows, const std::vector<std::int64_t>& shape,
               std::vector<std::int64_t>& remaining, std::size_t r, std::size_t c,
               std::vector<Tableau>& out) {
    if (r == rows.size()) {
        out.push_back(Tableau{rows});
        return;
    }
    std::size_t nr = r, nc = c + 1;
    if (nc == static_cast<std::size_t>(shape[r])) {
        nr = r + 1;
        nc = 0;
    }
    int lo = c > 0 ? rows[r][c - 1] : 1;                    // row weakly increasing
    for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
        if (remaining[v - 1] == 0) continue;
        if (r > 0 && rows[r - 1][c] >= v) continue;         // column strictly increasing
        rows[r][c] = v;
        --remaining[v - 1];
        fill_cell(rows, shape, remaining, nr, nc, out);
        ++remaining[v - 1];
    }
}

}  // namespace

std::vector<Tableau> ssyt_enumerate(const Partition& shape, const Partition& content) {
    if (shape.size() != content.size())
        throw std::domain_error("ssyt_enumerate requires shape and content of equal size");
    std::vector<Tableau> out;
    const auto& sh = shape.parts();
    std::vector<std::vector<int>> rows(sh.size());
    for (std::size_t r = 0; r < sh.size(); ++r) rows[r].assign(sh[r], 0);
    std::vector<std::int64_t> remaining(content.parts().begin(), content.parts().end());
    if (sh.empty()) {
        out.push_back(Tableau{});
        return out;
    }
    fill_cell(rows, sh, remaining, 0, 0, out);
    return out;
}

std::int64_t charge_of_word(std::vector<int> word) {
    // content must be a partition
    if (!word.empty()) {
        int maxv = *std::max_element(word.begin(), word.end());
        std::vector<std::int64_t> counts(maxv, 0);
        for (int v : word) {
            if (v < 1) throw std::domain_error("word letters must be positive");
            ++counts[v - 1];
        }
        for (int v = 1; v < maxv; ++v)
            if (counts[v] > counts[v - 1])
                throw std::domain_error("charge requires partition content");
    }

    std::int64_t total = 0;
    while (!word.empty()) {
        int maxv = *std::max_element(word.begin(), word.end());
        const int n = static_cast<int>(word.size());

        // extract a standard subword, scanning right to left cyclically
        std::vector<int> pos(maxv, -1);
        int from = n;  // search strictly below this position first
        for (int v = 1; v <= maxv; ++v) {
            int found = -1;
            for (int i = from - 1; i >= 0; --i)
                if (word[i] == v) {
                    found = i;
                    break;
                }
            if (found < 0)  // wrap around
                for (int i = n - 1; i >= from; --i)
                    if (word[i] == v) {
                        found = i;
                        break;
                    }
            if (found < 0) throw std::domain_error("charge requires partition content");
            pos[v - 1] = found;
            from = found;
        }

        // cyclic indexing: stepping to the right costs one
        std::int64_t index = 0;
        for (int v = 2; v <= maxv; ++v) {
            if (pos[v - 1] > pos[v - 2]) ++index;
            total += index;
        }

        std::vector<bool> taken(n, false);
        for (int p : pos) taken[p] = true;
        std::vector<int> rest;
        for (int i = 0; i < n; ++i)
            if (!taken[i]) rest.push_back(word[i]);
        word = std::move(rest);
    }
    return total;
}

std::int64_t charge(const Tableau& t) {
    return charge_of_word(t.reading_word());
}

QPolynomial QPolynomial::one() { return monomial(0); }

QPolynomial QPolynomial::monomial(std::int64_t exponent, std::int64_t coefficient) {
    QPolynomial p;
    p.add_term(exponent, coefficient);
    return p;
}

void QPolynomial::add_term(std::int64_t exponent, std::int64_t coefficient) {
    if (coefficient == 0) return;
    if (exponent < 0) throw std::domain_error("negative exponent in QPolynomial");
    auto [it, inserted] = coeffs_.try_emplace(exponent, coefficient);
    if (!inserted) it->second += coefficient;
    if (it->second < 0) throw std::domain_error("negative coefficient in QPolynomial");
    if (it->second == 0) coeffs_.erase(it);
}

std::int64_t QPolynomial::coefficient(std::int64_t exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
}

std::int64_t QPolynomial::evaluate_at_one() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

std::int64_t QPolynomial::degree() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

std::string QPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : coeffs_) {
        if (!out.empty()) out += " + ";
        if (e == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += e == 1 ? "q" : "q^" + std::to_string(e);
        }
    }
    return out;
}

QPolynomial kostka_foulkes(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::domain_error("kostka_foulkes requires partitions of equal size");
    QPolynomial p;
    for (const auto& t : ssyt_enumerate(lambda, mu))
        p.add_term(charge(t), 1);
    return p;
}

QPolynomial char0_ic_stalk_poly(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::domain_error("char0_ic_stalk_poly requires partitions of equal size");
    if (!dominance_leq(mu, lambda)) return QPolynomial{};  // off the closure
    QPolynomial k = kostka_foulkes(lambda, mu);
    const std::int64_t offset = n_stat(mu) - n_stat(lambda);
    QPolynomial out;
    for (const auto& [e, c] : k.coefficients()) {
        if (offset - e < 0)
            throw std::runtime_error("stalk polynomial normalization violated");
        out.add_term(offset - e, c);
    }
    return out;
}

}  // namespace nilstalk
