#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilstalk/gradedz.hpp"
#include "nilstalk/partitions.hpp"
#include "nilstalk/stalktable.hpp"

namespace nilstalk {

/// Fiber data over one stratum of a proper map: the restriction over the
/// stratum is a fibration with this fiber.
struct StratumFiberData {
    Partition orbit;
    std::int64_t stratum_dim = 0;
    GradedGroup fiber_cohomology;  // over Z, nonnegative degrees
};

/// A registered resolution (or restriction of one): source and target have
/// the same dimension, strata listed with the dense one first.
struct ResolutionDescriptor {
    std::string name;
    std::int64_t total_dim = 0;
    std::vector<StratumFiberData> strata;
};

bool is_semismall(const ResolutionDescriptor& r);
bool is_small(const ResolutionDescriptor& r);
std::vector<Partition> relevant_strata(const ResolutionDescriptor& r);

/// Stalks of pi_* k[total_dim]: fiber cohomology with coefficients changed
/// to k and shifted by total_dim.
StalkTable pushforward_stalk_table(const ResolutionDescriptor& r, const Coefficients& k);

/// total minus multiplicity copies of summand, over a field. Throws when
/// the containment fails (wrong splitting hypothesis).
GradedGroup split_subtract(const GradedGroup& total, const GradedGroup& summand,
                           std::int64_t multiplicity);

/// Registry: "springer-sl2", "minimal-sln" (n >= 2), "minimal-sp2n"
/// (n >= 1), "subreg-sln" (n >= 2), "springer-sl3-U", "richardson-sl4-22".
ResolutionDescriptor registered_resolution(const std::string& name, std::int64_t n = 0);
std::vector<std::string> registered_resolution_names();

}  // namespace nilstalk
