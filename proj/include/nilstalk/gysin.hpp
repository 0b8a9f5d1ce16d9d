#pragma once

#include <cstdint>
#include <map>

#include "nilstalk/gradedz.hpp"
#include "nilstalk/intlinalg.hpp"
#include "nilstalk/spaces.hpp"

namespace nilstalk {

/// Multiplication by the Euler class e in H^{2r} of a complex vector
/// bundle of rank r, on a base with free cohomology in even degrees.
/// maps[i] is the matrix of e : H^{i-2r} -> H^i on chosen bases, of shape
/// rank(i) x rank(i-2r); absent matrices are zero.
struct EulerAction {
    GradedGroup base;  // over Z
    std::int64_t bundle_rank = 1;
    std::map<int, IntMatrix> maps;
};

/// H^*(total space minus zero section, Z) via the Gysin long exact
/// sequence: cokernel of e in even degrees, kernel of e feeding odd
/// degrees. Torsion computed by Smith normal form.
GradedGroup complement_cohomology(const EulerAction& a);

/// Cotangent bundle of a projective/Grassmannian/flag base: the only
/// nonzero Euler-class map is H^0 -> H^top, the 1x1 matrix (chi(base)).
EulerAction cotangent_euler_action(const SpaceDescriptor& base);

/// O(degree_multiple/-1 tensor powers) on P^m: rank one, every map the
/// 1x1 matrix (degree_multiple) in the truncated polynomial ring basis.
EulerAction line_bundle_action_on_projective(std::int64_t m, std::int64_t degree_multiple);

}  // namespace nilstalk
