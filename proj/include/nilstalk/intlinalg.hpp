#pragma once

#include <cstdint>
#include <vector>

namespace nilstalk {

/// Row-major integer matrix.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct SmithResult {
    std::vector<std::int64_t> diagonal;  // nonzero invariant factors, d1 | d2 | ...
    int rank = 0;
};

/// Smith normal form of an integer matrix (entries stay small in all the
/// registered cases; no overflow guard beyond int64).
SmithResult smith_normal_form(IntMatrix a);

int integer_rank(const IntMatrix& a);

int rank_mod_p(IntMatrix a, std::int64_t p);

}  // namespace nilstalk
