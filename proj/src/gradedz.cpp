#include "nilstalk/gradedz.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilstalk/partitions.hpp"  // is_prime

namespace nilstalk {

Coefficients Coefficients::prime_field(std::int64_t p) {
    if (!is_prime(p))
        throw std::domain_error("prime field requires a prime characteristic");
    return {Kind::PrimeField, p};
}

Coefficients Coefficients::parse(const std::string& text) {
    if (text == "q") return rational();
    if (text == "z") return integers();
    if (text.size() > 1 && text[0] == 'f') {
        std::int64_t p;
        std::size_t pos = 0;
        try {
            p = std::stoll(text.substr(1), &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coefficient spec '" + text + "'");
        }
        if (pos != text.size() - 1)
            throw std::invalid_argument("bad coefficient spec '" + text + "'");
        if (!is_prime(p))
            throw std::invalid_argument("bad coefficient spec '" + text +
                                        "' (characteristic must be prime)");
        return prime_field(p);
    }
    throw std::invalid_argument("bad coefficient spec '" + text + "' (expected q, z or f<p>)");
}

std::string Coefficients::to_string() const {
    switch (kind) {
        case Kind::Rational: return "q";
        case Kind::Integers: return "z";
        case Kind::PrimeField: return "f" + std::to_string(p);
    }
    return "?";
}

FGAbGroup FGAbGroup::free(std::int64_t r) {
    if (r < 0) throw std::invalid_argument("negative rank");
    return {r, {}};
}

FGAbGroup FGAbGroup::cyclic(std::int64_t d) {
    if (d < 1) throw std::invalid_argument("cyclic group order must be positive");
    FGAbGroup g;
    for (std::int64_t q = 2; d > 1; ++q) {
        if (d % q) continue;
        std::int64_t power = 1;
        while (d % q == 0) {
            power *= q;
            d /= q;
        }
        g.torsion.push_back(power);
    }
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

std::int64_t FGAbGroup::p_torsion_count(std::int64_t p) const {
    std::int64_t c = 0;
    for (auto d : torsion)
        if (d % p == 0) ++c;
    return c;
}

std::string FGAbGroup::to_string(const Coefficients& k) const {
    if (is_zero()) return "0";
    const bool field = k.is_field();
    std::string base = field ? "k" : "ℤ";  // Z
    std::string out;
    if (rank == 1) {
        out = base;
    } else if (rank > 1) {
        out = base + "^" + std::to_string(rank);
    }
    for (auto d : torsion) {
        if (!out.empty()) out += " ⊕ ";  // direct-sum sign
        out += "ℤ/" + std::to_string(d);
    }
    return out;
}

FGAbGroup operator+(const FGAbGroup& a, const FGAbGroup& b) {
    FGAbGroup out;
    out.rank = a.rank + b.rank;
    out.torsion = a.torsion;
    out.torsion.insert(out.torsion.end(), b.torsion.begin(), b.torsion.end());
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

void GradedGroup::set(int degree, FGAbGroup g) {
    if (coeff_.is_field() && !g.torsion.empty())
        throw std::domain_error("field-coefficient graded group cannot carry torsion");
    if (g.is_zero())
        groups_.erase(degree);
    else
        groups_[degree] = std::move(g);
}

void GradedGroup::add(int degree, const FGAbGroup& g) {
    set(degree, at(degree) + g);
}

const FGAbGroup& GradedGroup::at(int degree) const {
    static const FGAbGroup zero{};
    auto it = groups_.find(degree);
    return it == groups_.end() ? zero : it->second;
}

int GradedGroup::min_degree() const {
    if (groups_.empty()) throw std::domain_error("zero graded group has no degrees");
    return groups_.begin()->first;
}

int GradedGroup::max_degree() const {
    if (groups_.empty()) throw std::domain_error("zero graded group has no degrees");
    return groups_.rbegin()->first;
}

GradedGroup shift(const GradedGroup& c, int s) {
    GradedGroup out(c.coefficients());
    for (const auto& [d, g] : c.groups())
        out.set(d - s, g);
    return out;
}

GradedGroup truncate_le(const GradedGroup& c, int i) {
    GradedGroup out(c.coefficients());
    for (const auto& [d, g] : c.groups())
        if (d <= i) out.set(d, g);
    return out;
}

GradedGroup truncate_le_plus(const GradedGroup& c, int i) {
    if (c.coefficients().is_field())
        return truncate_le(c, i);
    GradedGroup out(c.coefficients());
    for (const auto& [d, g] : c.groups()) {
        if (d <= i)
            out.set(d, g);
        else if (d == i + 1)
            out.set(d, g.torsion_part());
    }
    return out;
}

GradedGroup dual_point(const GradedGroup& c) {
    GradedGroup out(c.coefficients());
    for (const auto& [d, g] : c.groups()) {
        if (g.rank > 0) out.add(-d, FGAbGroup::free(g.rank));
        if (!g.torsion.empty()) out.add(1 - d, g.torsion_part());
    }
    return out;
}

GradedGroup change_coefficients(const GradedGroup& c, const Coefficients& k) {
    if (c.coefficients() != Coefficients::integers())
        throw std::domain_error("change_coefficients requires integer coefficients");
    if (k == Coefficients::integers())
        throw std::domain_error("change_coefficients target must be a field");
    GradedGroup out(k);
    for (const auto& [d, g] : c.groups()) {
        if (g.rank > 0) out.add(d, FGAbGroup::free(g.rank));
        if (k.kind == Coefficients::Kind::PrimeField) {
            std::int64_t t = g.p_torsion_count(k.p);
            if (t > 0) {
                out.add(d, FGAbGroup::free(t));      // Tor in degree d
                out.add(d - 1, FGAbGroup::free(t));  // tensor in degree d-1
            }
        }
    }
    return out;
}

GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b) {
    if (a.coefficients() != b.coefficients())
        throw std::domain_error("direct_sum requires matching coefficients");
    GradedGroup out = a;
    for (const auto& [d, g] : b.groups())
        out.add(d, g);
    return out;
}

GradedGroup subtract(const GradedGroup& a, const GradedGroup& b) {
    if (a.coefficients() != b.coefficients())
        throw std::domain_error("subtract requires matching coefficients");
    if (!a.coefficients().is_field())
        throw std::domain_error("subtract is only defined over field coefficients");
    GradedGroup out(a.coefficients());
    for (const auto& [d, g] : a.groups()) {
        std::int64_t r = g.rank - b.at(d).rank;
        if (r < 0)
            throw std::domain_error("subtract: summand not contained in total at degree " +
                                    std::to_string(d));
        out.set(d, FGAbGroup::free(r));
    }
    for (const auto& [d, g] : b.groups())
        if (a.at(d).rank < g.rank)
            throw std::domain_error("subtract: summand not contained in total at degree " +
                                    std::to_string(d));
    return out;
}

std::int64_t euler(const GradedGroup& c) {
    std::int64_t chi = 0;
    for (const auto& [d, g] : c.groups())
        chi += (d % 2 == 0 ? 1 : -1) * g.rank;
    return chi;
}

}  // namespace nilstalk
