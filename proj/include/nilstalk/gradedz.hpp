#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nilstalk {

/// Selects the coefficient theory: Q, F_p or Z.
struct Coefficients {
    enum class Kind { Rational, PrimeField, Integers };

    Kind kind = Kind::Integers;
    std::int64_t p = 0;  // only meaningful for PrimeField

    static Coefficients rational() { return {Kind::Rational, 0}; }
    static Coefficients prime_field(std::int64_t p);
    static Coefficients integers() { return {Kind::Integers, 0}; }

    /// Parses "q", "z" or "f<p>" with p prime.
    static Coefficients parse(const std::string& text);

    bool is_field() const { return kind != Kind::Integers; }
    /// True iff the coefficient characteristic divides n (never for Q and Z).
    bool char_divides(std::int64_t n) const {
        return kind == Kind::PrimeField && n % p == 0;
    }
    std::string to_string() const;

    bool operator==(const Coefficients&) const = default;
};

/// Finitely generated abelian group: free rank plus elementary divisors
/// (prime powers, sorted ascending). Over field coefficients the torsion
/// list is empty and rank counts k-dimensions.
struct FGAbGroup {
    std::int64_t rank = 0;
    std::vector<std::int64_t> torsion;

    static FGAbGroup free(std::int64_t r);
    /// Z/d, stored as its prime-power elementary divisors; d = 1 gives 0.
    static FGAbGroup cyclic(std::int64_t d);

    bool is_zero() const { return rank == 0 && torsion.empty(); }
    bool is_torsion_free() const { return torsion.empty(); }
    FGAbGroup torsion_part() const { return {0, torsion}; }

    /// Number of elementary divisors that are powers of p.
    std::int64_t p_torsion_count(std::int64_t p) const;

    /// Canonical rendering, e.g. "Z^2 + Z/2 + Z/4" with the given symbols.
    std::string to_string(const Coefficients& k) const;

    bool operator==(const FGAbGroup&) const = default;
};

FGAbGroup operator+(const FGAbGroup& a, const FGAbGroup& b);  // direct sum

/// Graded finitely generated abelian group, finitely supported over the
/// integer degrees. Models H^*(K) of a bounded complex on a point.
class GradedGroup {
public:
    GradedGroup() = default;
    explicit GradedGroup(Coefficients k) : coeff_(k) {}

    const Coefficients& coefficients() const { return coeff_; }
    const std::map<int, FGAbGroup>& groups() const { return groups_; }

    void set(int degree, FGAbGroup g);
    void add(int degree, const FGAbGroup& g);
    const FGAbGroup& at(int degree) const;

    bool is_zero() const { return groups_.empty(); }
    int min_degree() const;  // throws on the zero object
    int max_degree() const;

    bool operator==(const GradedGroup&) const = default;

private:
    Coefficients coeff_ = Coefficients::integers();
    std::map<int, FGAbGroup> groups_;
};

/// Degree d of the result is degree d+s of the input: shift(C, s) = C[s].
GradedGroup shift(const GradedGroup& c, int s);

/// tau_{<= i}: keeps degrees <= i, zeroes the rest.
GradedGroup truncate_le(const GradedGroup& c, int i);

/// tau^+_{<= i}: degrees <= i kept, degree i+1 replaced by its torsion
/// part, higher degrees zero. Coincides with tau_{<= i} over fields.
GradedGroup truncate_le_plus(const GradedGroup& c, int i);

/// Point duality: free part of degree d goes to degree -d, torsion of
/// degree d to degree 1-d. An involution.
GradedGroup dual_point(const GradedGroup& c);

/// Derived coefficient change k (x)^L_Z C for C with integer coefficients.
/// Each Z/p^a in degree d contributes k in degrees d and d-1 when the
/// target characteristic is p.
GradedGroup change_coefficients(const GradedGroup& c, const Coefficients& k);

GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b);

/// Componentwise difference; requires field coefficients and B embeddable
/// in A, otherwise throws (a failed splitting hypothesis).
GradedGroup subtract(const GradedGroup& a, const GradedGroup& b);

/// Alternating rank sum; torsion ignored.
std::int64_t euler(const GradedGroup& c);

}  // namespace nilstalk
