#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilstalk/partitions.hpp"

namespace nilstalk {

/// Semistandard tableau: rows weakly increase, columns strictly increase,
/// entry multiset given by the content partition.
struct Tableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const;
    /// Row-reading word, bottom row to top row, left to right.
    std::vector<int> reading_word() const;

    bool operator==(const Tableau&) const = default;
};

/// All semistandard tableaux of the given shape and content, in a
/// deterministic order. Sizes must agree.
std::vector<Tableau> ssyt_enumerate(const Partition& shape, const Partition& content);

/// Lascoux-Schutzenberger charge of a word with partition content:
/// repeated extraction of standard subwords with the cyclic indexing rule.
std::int64_t charge_of_word(std::vector<int> word);

std::int64_t charge(const Tableau& t);

/// Polynomial in q with nonnegative integer coefficients.
class QPolynomial {
public:
    QPolynomial() = default;
    static QPolynomial one();
    static QPolynomial monomial(std::int64_t exponent, std::int64_t coefficient = 1);

    void add_term(std::int64_t exponent, std::int64_t coefficient);
    const std::map<std::int64_t, std::int64_t>& coefficients() const { return coeffs_; }
    std::int64_t coefficient(std::int64_t exponent) const;
    std::int64_t evaluate_at_one() const;
    std::int64_t degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return coeffs_.empty(); }

    std::string to_string() const;  // "1 + q + q^2"

    bool operator==(const QPolynomial&) const = default;

private:
    std::map<std::int64_t, std::int64_t> coeffs_;
};

/// K_{lambda,mu}(q) = sum over SSYT of q^charge.
QPolynomial kostka_foulkes(const Partition& lambda, const Partition& mu);

/// Characteristic-zero IC stalk Poincare polynomial for the pair of
/// orbits (lambda, mu) in sl_n: q^{n(mu)-n(lambda)} K_{lambda,mu}(1/q).
/// Exponent i corresponds to stalk degree -dim O_lambda + 2i. Zero when
/// mu is not below lambda in dominance.
QPolynomial char0_ic_stalk_poly(const Partition& lambda, const Partition& mu);

}  // namespace nilstalk
