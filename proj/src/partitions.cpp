#include "nilstalk/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nilstalk {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<std::int64_t> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        std::int64_t v;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse partition part '" + item + "'");
        }
        if (pos != item.size())
            throw std::invalid_argument("cannot parse partition part '" + item + "'");
        parts.push_back(v);
    }
    if (parts.empty())
        throw std::invalid_argument("empty partition string");
    return Partition(std::move(parts));
}

std::int64_t Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition conjugate(const Partition& lambda) {
    const auto& p = lambda.parts();
    std::vector<std::int64_t> out;
    if (p.empty()) return Partition{};
    for (std::int64_t i = 1; i <= p[0]; ++i) {
        std::int64_t count = 0;
        for (auto part : p)
            if (part >= i) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        throw std::domain_error("dominance order requires partitions of equal size");
    const auto& a = mu.parts();
    const auto& b = lambda.parts();
    std::int64_t sa = 0, sb = 0;
    std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa > sb) return false;
    }
    return true;
}

bool closure_contains(const Partition& lambda, const Partition& mu) {
    return dominance_leq(mu, lambda);
}

std::int64_t orbit_dim(const Partition& lambda) {
    std::int64_t n = lambda.size();
    std::int64_t s = 0;
    Partition conj = conjugate(lambda);
    for (auto c : conj.parts()) s += c * c;
    return n * n - s;
}

std::int64_t n_stat(const Partition& lambda) {
    std::int64_t s = 0;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size(); ++i)
        s += static_cast<std::int64_t>(i) * p[i];
    return s;
}

namespace {

void enumerate_rec(std::int64_t remaining, std::int64_t max_part,
                   std::vector<std::int64_t>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (std::int64_t k = std::min(max_part, remaining); k >= 1; --k) {
        prefix.push_back(k);
        enumerate_rec(remaining - k, k, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("partitions_of requires n >= 1");
    std::vector<Partition> out;
    std::vector<std::int64_t> prefix;
    enumerate_rec(n, n, prefix, out);
    return out;
}

Partition springer_dual(const Partition& lambda) {
    return conjugate(lambda);
}

bool is_ell_regular(const Partition& lambda, std::int64_t ell) {
    if (!is_prime(ell))
        throw std::domain_error("is_ell_regular requires a prime ell");
    const auto& p = lambda.parts();
    std::int64_t run = 1;
    for (std::size_t i = 1; i < p.size(); ++i) {
        run = (p[i] == p[i - 1]) ? run + 1 : 1;
        if (run >= ell) return false;
    }
    return true;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace nilstalk
