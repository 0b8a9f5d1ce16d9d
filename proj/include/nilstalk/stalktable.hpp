#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilstalk/gradedz.hpp"
#include "nilstalk/partitions.hpp"

namespace nilstalk {

/// The two t-structure conventions over Z; over fields they coincide.
enum class Perversity { P, PPlus };

Perversity parse_perversity(const std::string& text);  // "p" | "p+"
std::string to_string(Perversity p);

struct StalkStratum {
    Partition orbit;       // orbit label (Jordan type; (1^n) is the origin)
    std::int64_t dim = 0;  // complex dimension of the stratum
    GradedGroup stalk;

    bool operator==(const StalkStratum&) const = default;
};

/// Per-stratum restriction of an IC or pushforward complex. Strata listed
/// by decreasing dimension, open stratum first.
struct StalkTable {
    std::string case_name;
    std::vector<StalkStratum> strata;
    Coefficients coefficients;
    Perversity perversity = Perversity::P;

    const GradedGroup& stalk_at(const Partition& orbit) const;

    bool operator==(const StalkTable&) const = default;
};

}  // namespace nilstalk
