#pragma once

#include <cstdint>
#include <string>

#include "nilstalk/gradedz.hpp"
#include "nilstalk/stalktable.hpp"

namespace nilstalk {

enum class CaseKind {
    Sl2Cone,
    SlnMinimal,
    Sp2nMinimal,
    SlnSubregRestriction,
    Sl3Cone,
    Sl4TwoTwo,
};

/// A registered case study. n is the rank parameter where applicable.
struct CaseId {
    CaseKind kind = CaseKind::Sl2Cone;
    std::int64_t n = 0;

    /// Parses the CLI names: "sl2-cone", "sln-minimal", "sp2n-minimal",
    /// "sln-subreg", "sl3-cone", "sl4-two-two".
    static CaseId parse(const std::string& name, std::int64_t n = 0);
    std::string name() const;
};

/// One Deligne step over a cone: tau_{<= -1}(link_sections[dim_x]) for the
/// perversity p, the tau^+ variant for p+ over Z. link_sections is
/// RGamma(U, k) of the punctured cone, in nonnegative degrees.
GradedGroup cone_ic_stalk(const GradedGroup& link_sections, std::int64_t dim_x,
                          Perversity perversity);

/// The full stalk table of a registered case.
StalkTable ic_stalk_table(const CaseId& c, const Coefficients& k, Perversity perversity);

struct MinimalReductionVerdict {
    bool irreducible = true;
    int trivial_multiplicity = 0;
};

/// Whether the natural S_n representation stays irreducible mod ell, read
/// off the minimal-orbit stalk table.
MinimalReductionVerdict minimal_reduction_verdict(std::int64_t n, std::int64_t ell);

// Building blocks, exposed so the intermediate tables can be inspected.

/// H^*(O_min, Z) for the minimal orbit of sl_n (complement of the zero
/// section of T* P^{n-1}).
GradedGroup minimal_orbit_cohomology_sln(std::int64_t n);

/// H^*(O_min, Z) for the minimal orbit of sp_2n (O(-2) on P^{2n-1} minus
/// the zero section).
GradedGroup minimal_orbit_cohomology_sp2n(std::int64_t n);

/// RGamma(O_min of sl_n, k)[s].
GradedGroup rgamma_omin_sln(std::int64_t n, const Coefficients& k, int s);

/// RGamma of the punctured sl_3 cone cover and its two-strata base:
/// RGamma(U~, k)[6] and RGamma(U, k)[6].
GradedGroup rgamma_utilde_sl3(const Coefficients& k);
GradedGroup rgamma_u_sl3(const Coefficients& k);

/// Same for the sl_4 (2,2) closure: RGamma(U~', k)[8] and RGamma(U', k)[8].
GradedGroup rgamma_utilde_sl4(const Coefficients& k);
GradedGroup rgamma_u_sl4(const Coefficients& k);

}  // namespace nilstalk
