#include "nilstalk/resolutions.hpp"

#include <stdexcept>

#include "nilstalk/spaces.hpp"

namespace nilstalk {

namespace {

std::int64_t fiber_dim(const StratumFiberData& s) {
    if (s.fiber_cohomology.is_zero() || s.fiber_cohomology.at(0).rank < 1)
        throw std::domain_error("stratum fiber must be nonempty and connected");
    return s.fiber_cohomology.max_degree() / 2;
}

void check_descriptor(const ResolutionDescriptor& r) {
    if (r.strata.empty())
        throw std::domain_error("resolution needs at least one stratum");
    if (r.strata.front().stratum_dim != r.total_dim)
        throw std::domain_error("dense stratum must have the total dimension");
    if (fiber_dim(r.strata.front()) != 0)
        throw std::domain_error("dense stratum must have point fiber");
    for (std::size_t i = 1; i < r.strata.size(); ++i)
        if (r.strata[i].stratum_dim >= r.strata[i - 1].stratum_dim)
            throw std::domain_error("stratum dimensions must strictly decrease");
}

Partition hook(std::int64_t head, std::int64_t ones) {
    std::vector<std::int64_t> parts;
    if (head > 0) parts.push_back(head);
    for (std::int64_t i = 0; i < ones; ++i) parts.push_back(1);
    return Partition(std::move(parts));
}

GradedGroup point_fiber() {
    GradedGroup g(Coefficients::integers());
    g.set(0, FGAbGroup::free(1));
    return g;
}

GradedGroup dynkin_curve_fiber(std::int64_t n) {
    // n-1 projective lines meeting as the A_{n-1} diagram
    GradedGroup g(Coefficients::integers());
    g.set(0, FGAbGroup::free(1));
    g.set(2, FGAbGroup::free(n - 1));
    return g;
}

}  // namespace

bool is_semismall(const ResolutionDescriptor& r) {
    check_descriptor(r);
    for (const auto& s : r.strata) {
        std::int64_t codim = r.total_dim - s.stratum_dim;
        if (2 * fiber_dim(s) > codim) return false;
    }
    return true;
}

std::vector<Partition> relevant_strata(const ResolutionDescriptor& r) {
    check_descriptor(r);
    std::vector<Partition> out;
    for (const auto& s : r.strata) {
        std::int64_t codim = r.total_dim - s.stratum_dim;
        if (2 * fiber_dim(s) == codim) out.push_back(s.orbit);
    }
    return out;
}

bool is_small(const ResolutionDescriptor& r) {
    if (!is_semismall(r)) return false;
    return relevant_strata(r).size() == 1;  // just the dense stratum
}

StalkTable pushforward_stalk_table(const ResolutionDescriptor& r, const Coefficients& k) {
    check_descriptor(r);
    StalkTable t;
    t.case_name = r.name;
    t.coefficients = k;
    t.perversity = Perversity::P;
    for (const auto& s : r.strata) {
        GradedGroup fiber = k == Coefficients::integers()
                                ? s.fiber_cohomology
                                : change_coefficients(s.fiber_cohomology, k);
        t.strata.push_back({s.orbit, s.stratum_dim,
                            shift(fiber, static_cast<int>(r.total_dim))});
    }
    return t;
}

GradedGroup split_subtract(const GradedGroup& total, const GradedGroup& summand,
                           std::int64_t multiplicity) {
    if (multiplicity < 1)
        throw std::domain_error("split_subtract needs multiplicity >= 1");
    GradedGroup out = total;
    for (std::int64_t i = 0; i < multiplicity; ++i)
        out = subtract(out, summand);
    return out;
}

ResolutionDescriptor registered_resolution(const std::string& name, std::int64_t n) {
    if (name == "springer-sl2") {
        return {name, 2,
                {{hook(2, 0), 2, point_fiber()},
                 {hook(1, 1), 0, cohomology(SpaceDescriptor::projective(1))}}};
    }
    if (name == "minimal-sln") {
        if (n < 2) throw std::domain_error("minimal-sln needs n >= 2");
        return {name, 2 * n - 2,
                {{hook(2, n - 2), 2 * n - 2, point_fiber()},
                 {hook(1, n - 1), 0, cohomology(SpaceDescriptor::projective(n - 1))}}};
    }
    if (name == "minimal-sp2n") {
        if (n < 1) throw std::domain_error("minimal-sp2n needs n >= 1");
        return {name, 2 * n,
                {{hook(2, 2 * n - 2), 2 * n, point_fiber()},
                 {hook(1, 2 * n - 1), 0, cohomology(SpaceDescriptor::projective(2 * n - 1))}}};
    }
    if (name == "subreg-sln" || name == "springer-sl3-U") {
        if (name == "springer-sl3-U") n = 3;
        if (n < 2) throw std::domain_error("subreg-sln needs n >= 2");
        std::int64_t dim_cone = n * n - n;
        Partition subreg = n == 2 ? hook(1, 1) : Partition({n - 1, 1});
        return {name, dim_cone,
                {{hook(n, 0), dim_cone, point_fiber()},
                 {subreg, dim_cone - 2, dynkin_curve_fiber(n)}}};
    }
    if (name == "richardson-sl4-22") {
        return {name, 8,
                {{Partition({2, 2}), 8, point_fiber()},
                 {Partition({2, 1, 1}), 6, cohomology(SpaceDescriptor::projective(1))}}};
    }
    throw std::domain_error("unknown resolution '" + name + "'");
}

std::vector<std::string> registered_resolution_names() {
    return {"springer-sl2", "minimal-sln", "minimal-sp2n",
            "subreg-sln", "springer-sl3-U", "richardson-sl4-22"};
}

}  // namespace nilstalk
