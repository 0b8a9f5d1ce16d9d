#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace nilstalk {

/// A partition of n: weakly decreasing positive parts, no trailing zeros.
/// Labels nilpotent orbits in sl_n (Jordan block sizes) as well as Specht
/// and simple modules of the symmetric group.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::int64_t> parts);

    /// Parses a comma-separated part list, e.g. "2,1,1".
    static Partition parse(const std::string& text);

    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::int64_t size() const;  // sum of parts
    bool empty() const { return parts_.empty(); }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<std::int64_t> parts_;
};

Partition conjugate(const Partition& lambda);

/// mu <= lambda in dominance order (partial sums, zero-padded).
/// Requires equal sizes.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// O_mu contained in the closure of O_lambda; equivalent to mu <= lambda.
bool closure_contains(const Partition& lambda, const Partition& mu);

/// Complex dimension of the orbit O_lambda in sl_n, n = size(lambda):
/// n^2 - sum (lambda'_i)^2. Always even.
std::int64_t orbit_dim(const Partition& lambda);

/// n(lambda) = sum (i-1) lambda_i = sum C(lambda'_i, 2).
std::int64_t n_stat(const Partition& lambda);

/// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(std::int64_t n);

/// The Springer-correspondence relabeling between orbits and W-modules in
/// type A: transposition of partitions.
Partition springer_dual(const Partition& lambda);

/// No part value repeated ell or more times. ell must be prime.
bool is_ell_regular(const Partition& lambda, std::int64_t ell);

bool is_prime(std::int64_t n);

}  // namespace nilstalk
