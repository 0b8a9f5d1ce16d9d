#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilstalk/partitions.hpp"
#include "nilstalk/stalktable.hpp"

namespace nilstalk {

/// K-group class of a complex: per-stratum Euler characteristic of the
/// stalk. Missing orbits count as zero.
struct ClassVector {
    std::map<Partition, std::int64_t> entries;

    std::int64_t at(const Partition& orbit) const;

    bool operator==(const ClassVector&) const = default;
};

ClassVector class_vector(const StalkTable& t);

/// Unitriangular integer matrix indexed by partitions, ascending dominance
/// order. In symmetric-group form the labels are the transposed
/// partitions (rows are Specht modules, columns simple modules).
struct DecompositionMatrix {
    std::vector<Partition> rows;
    std::vector<Partition> cols;
    std::vector<std::vector<std::int64_t>> entries;
    bool symmetric_group_form = false;

    std::int64_t at(const Partition& row, const Partition& col) const;

    bool operator==(const DecompositionMatrix&) const = default;
};

/// Solves char0(lambda) = sum_mu d_{lambda,mu} modp(mu) for the unique
/// unitriangular d with the families indexed by the same orbit set.
/// Throws on a non-integer, negative or inconsistent solution.
DecompositionMatrix solve_decomposition(
    const std::vector<std::pair<Partition, ClassVector>>& char0,
    const std::vector<std::pair<Partition, ClassVector>>& modp);

/// Rows relabeled by transposition (Specht modules), columns restricted to
/// the ell-regular transposes (simple modules), entries carried over.
DecompositionMatrix symmetric_group_submatrix(const DecompositionMatrix& d,
                                              std::int64_t ell);

/// Assembles the perverse-sheaf decomposition matrix of a registered case
/// ("sl2", "sl3", "sl4-22") from the computed stalk tables at the prime p.
DecompositionMatrix nilpotent_decomposition_matrix(const std::string& case_name,
                                                   std::int64_t p);

}  // namespace nilstalk
