#include "nilstalk/stalkcalc.hpp"

#include <stdexcept>

#include "nilstalk/gysin.hpp"
#include "nilstalk/resolutions.hpp"
#include "nilstalk/spaces.hpp"

namespace nilstalk {

namespace {

Partition hook(std::int64_t head, std::int64_t ones) {
    std::vector<std::int64_t> parts;
    if (head > 0) parts.push_back(head);
    for (std::int64_t i = 0; i < ones; ++i) parts.push_back(1);
    return Partition(std::move(parts));
}

GradedGroup to_coeff(const GradedGroup& z, const Coefficients& k) {
    return k == Coefficients::integers() ? z : change_coefficients(z, k);
}

GradedGroup open_stratum_stalk(const Coefficients& k, std::int64_t total_dim) {
    GradedGroup g(k);
    g.set(static_cast<int>(-total_dim), FGAbGroup::free(1));
    return g;
}

/// Transverse-slice stalk: the IC stalk of the 2-dimensional slice cone
/// with the given link, re-placed so its top sits at -ambient_dim.
GradedGroup slice_stalk(const SpaceDescriptor& link, const Coefficients& k,
                        std::int64_t ambient_dim, Perversity perversity) {
    GradedGroup s = cone_ic_stalk(to_coeff(cohomology(link), k), 2, perversity);
    return shift(s, static_cast<int>(ambient_dim - 2));
}

void require_field_char_not(const Coefficients& k, std::int64_t bad,
                            const std::string& case_name) {
    if (!k.is_field())
        throw std::domain_error(case_name + " requires field coefficients (q or f<p>)");
    if (k.kind == Coefficients::Kind::PrimeField && k.p == bad)
        throw std::domain_error(case_name + " requires characteristic != " +
                                std::to_string(bad));
}

}  // namespace

CaseId CaseId::parse(const std::string& name, std::int64_t n) {
    auto need_n = [&](std::int64_t min_n) {
        if (n < min_n)
            throw std::domain_error("case " + name + " needs --n >= " +
                                    std::to_string(min_n));
    };
    if (name == "sl2-cone") return {CaseKind::Sl2Cone, 2};
    if (name == "sln-minimal") {
        need_n(2);
        return {CaseKind::SlnMinimal, n};
    }
    if (name == "sp2n-minimal") {
        need_n(1);
        return {CaseKind::Sp2nMinimal, n};
    }
    if (name == "sln-subreg") {
        need_n(2);
        return {CaseKind::SlnSubregRestriction, n};
    }
    if (name == "sl3-cone") return {CaseKind::Sl3Cone, 3};
    if (name == "sl4-two-two") return {CaseKind::Sl4TwoTwo, 4};
    throw std::domain_error("unknown case '" + name + "'");
}

std::string CaseId::name() const {
    switch (kind) {
        case CaseKind::Sl2Cone: return "sl2-cone";
        case CaseKind::SlnMinimal: return "sln-minimal";
        case CaseKind::Sp2nMinimal: return "sp2n-minimal";
        case CaseKind::SlnSubregRestriction: return "sln-subreg";
        case CaseKind::Sl3Cone: return "sl3-cone";
        case CaseKind::Sl4TwoTwo: return "sl4-two-two";
    }
    return "?";
}

GradedGroup cone_ic_stalk(const GradedGroup& link_sections, std::int64_t dim_x,
                          Perversity perversity) {
    if (dim_x < 1) throw std::domain_error("cone dimension must be >= 1");
    GradedGroup shifted = shift(link_sections, static_cast<int>(dim_x));
    if (perversity == Perversity::PPlus)
        return truncate_le_plus(shifted, -1);
    return truncate_le(shifted, -1);
}

GradedGroup minimal_orbit_cohomology_sln(std::int64_t n) {
    if (n < 2) throw std::domain_error("minimal orbit of sl_n needs n >= 2");
    return complement_cohomology(
        cotangent_euler_action(SpaceDescriptor::projective(n - 1)));
}

GradedGroup minimal_orbit_cohomology_sp2n(std::int64_t n) {
    if (n < 1) throw std::domain_error("minimal orbit of sp_2n needs n >= 1");
    return complement_cohomology(line_bundle_action_on_projective(2 * n - 1, 2));
}

GradedGroup rgamma_omin_sln(std::int64_t n, const Coefficients& k, int s) {
    return shift(to_coeff(minimal_orbit_cohomology_sln(n), k), s);
}

GradedGroup rgamma_utilde_sl3(const Coefficients& k) {
    GradedGroup z = complement_cohomology(
        cotangent_euler_action(SpaceDescriptor::full_flag(3)));
    return shift(to_coeff(z, k), 6);
}

GradedGroup rgamma_u_sl3(const Coefficients& k) {
    require_field_char_not(k, 3, "sl3-cone");
    return split_subtract(rgamma_utilde_sl3(k), rgamma_omin_sln(3, k, 4), 2);
}

GradedGroup rgamma_utilde_sl4(const Coefficients& k) {
    GradedGroup z = complement_cohomology(
        cotangent_euler_action(SpaceDescriptor::grassmannian(2, 4)));
    return shift(to_coeff(z, k), 8);
}

GradedGroup rgamma_u_sl4(const Coefficients& k) {
    require_field_char_not(k, 2, "sl4-two-two");
    return split_subtract(rgamma_utilde_sl4(k), rgamma_omin_sln(4, k, 6), 1);
}

StalkTable ic_stalk_table(const CaseId& c, const Coefficients& k, Perversity perversity) {
    StalkTable t;
    t.case_name = c.name();
    t.coefficients = k;
    t.perversity = k.is_field() ? Perversity::P : perversity;
    const Perversity perv = t.perversity;

    switch (c.kind) {
        case CaseKind::Sl2Cone: {
            t.strata.push_back({hook(2, 0), 2, open_stratum_stalk(k, 2)});
            GradedGroup link = to_coeff(cohomology(SpaceDescriptor::lens_space(2, 2)), k);
            t.strata.push_back({hook(1, 1), 0, cone_ic_stalk(link, 2, perv)});
            break;
        }
        case CaseKind::SlnMinimal: {
            const std::int64_t d = 2 * c.n - 2;
            t.strata.push_back({hook(2, c.n - 2), d, open_stratum_stalk(k, d)});
            GradedGroup link = to_coeff(minimal_orbit_cohomology_sln(c.n), k);
            t.strata.push_back({hook(1, c.n - 1), 0, cone_ic_stalk(link, d, perv)});
            break;
        }
        case CaseKind::Sp2nMinimal: {
            const std::int64_t d = 2 * c.n;
            t.strata.push_back({hook(2, 2 * c.n - 2), d, open_stratum_stalk(k, d)});
            GradedGroup link = to_coeff(minimal_orbit_cohomology_sp2n(c.n), k);
            t.strata.push_back({hook(1, 2 * c.n - 1), 0, cone_ic_stalk(link, d, perv)});
            break;
        }
        case CaseKind::SlnSubregRestriction: {
            const std::int64_t d = c.n * c.n - c.n;
            t.strata.push_back({hook(c.n, 0), d, open_stratum_stalk(k, d)});
            Partition subreg = c.n == 2 ? hook(1, 1) : Partition({c.n - 1, 1});
            t.strata.push_back(
                {subreg, d - 2,
                 slice_stalk(SpaceDescriptor::lens_space(2, c.n), k, d, perv)});
            break;
        }
        case CaseKind::Sl3Cone: {
            require_field_char_not(k, 3, "sl3-cone");
            t.strata.push_back({Partition({3}), 6, open_stratum_stalk(k, 6)});
            t.strata.push_back(
                {Partition({2, 1}), 4,
                 slice_stalk(SpaceDescriptor::lens_space(2, 3), k, 6, perv)});
            t.strata.push_back({hook(1, 2), 0, truncate_le(rgamma_u_sl3(k), -1)});
            break;
        }
        case CaseKind::Sl4TwoTwo: {
            require_field_char_not(k, 2, "sl4-two-two");
            t.strata.push_back({Partition({2, 2}), 8, open_stratum_stalk(k, 8)});
            t.strata.push_back(
                {Partition({2, 1, 1}), 6,
                 slice_stalk(SpaceDescriptor::lens_space(2, 2), k, 8, perv)});
            t.strata.push_back({hook(1, 3), 0, truncate_le(rgamma_u_sl4(k), -1)});
            break;
        }
    }
    return t;
}

MinimalReductionVerdict minimal_reduction_verdict(std::int64_t n, std::int64_t ell) {
    if (n < 2) throw std::domain_error("minimal_reduction_verdict needs n >= 2");
    StalkTable t = ic_stalk_table({CaseKind::SlnMinimal, n},
                                  Coefficients::prime_field(ell), Perversity::P);
    bool trivial_appears = t.stalk_at(hook(1, n - 1)).at(-1).rank > 0;
    return {!trivial_appears, trivial_appears ? 1 : 0};
}

}  // namespace nilstalk
