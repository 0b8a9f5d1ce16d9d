#include "nilstalk/stalktable.hpp"

#include <stdexcept>

namespace nilstalk {

Perversity parse_perversity(const std::string& text) {
    if (text == "p") return Perversity::P;
    if (text == "p+") return Perversity::PPlus;
    throw std::invalid_argument("bad perversity '" + text + "' (expected p or p+)");
}

std::string to_string(Perversity p) {
    return p == Perversity::P ? "p" : "p+";
}

const GradedGroup& StalkTable::stalk_at(const Partition& orbit) const {
    for (const auto& s : strata)
        if (s.orbit == orbit) return s.stalk;
    throw std::domain_error("no stratum labeled " + orbit.to_string());
}

}  // namespace nilstalk
