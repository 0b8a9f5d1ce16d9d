#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilstalk/gradedz.hpp"

namespace nilstalk {

/// The base spaces and links the case studies need. LensSpace(m,d) is
/// S^{2m-1}/mu_d; Projective and Grassmannian are complex.
struct SpaceDescriptor {
    enum class Kind { Projective, Grassmannian, FullFlag, LensSpace };

    Kind kind = Kind::Projective;
    std::int64_t a = 0;  // proj: m; grass: k; flag: n; lens: m
    std::int64_t b = 0;  // grass: n; lens: d

    static SpaceDescriptor projective(std::int64_t m);
    static SpaceDescriptor grassmannian(std::int64_t k, std::int64_t n);
    static SpaceDescriptor full_flag(std::int64_t n);
    static SpaceDescriptor lens_space(std::int64_t m, std::int64_t d);

    /// Parses "proj:m", "grass:k,n", "flag:n", "lens:m,d".
    static SpaceDescriptor parse(const std::string& text);
    std::string to_string() const;

    /// Complex dimension; lens spaces are odd real-dimensional and throw.
    std::int64_t complex_dim() const;

    bool operator==(const SpaceDescriptor&) const = default;
};

/// Integral cohomology in closed form.
GradedGroup cohomology(const SpaceDescriptor& s);

std::int64_t euler_characteristic(const SpaceDescriptor& s);

/// Coefficients of the Gaussian binomial [n choose k]_q.
std::vector<std::int64_t> gaussian_binomial(std::int64_t k, std::int64_t n);

/// Coefficients of [n]_q! (permutations of n counted by inversions).
std::vector<std::int64_t> q_factorial(std::int64_t n);

}  // namespace nilstalk
