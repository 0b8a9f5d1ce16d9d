#include "nilstalk/gysin.hpp"

#include <stdexcept>

namespace nilstalk {

namespace {

void check_base(const GradedGroup& base) {
    if (base.coefficients() != Coefficients::integers())
        throw std::domain_error("Euler action base must have integer coefficients");
    for (const auto& [d, g] : base.groups()) {
        if (d % 2 != 0)
            throw std::domain_error("Euler action base must be concentrated in even degrees");
        if (!g.is_torsion_free())
            throw std::domain_error("Euler action base must be torsion-free");
    }
}

IntMatrix matrix_at(const EulerAction& a, int degree, std::int64_t target_rank,
                    std::int64_t source_rank) {
    auto it = a.maps.find(degree);
    if (it == a.maps.end())
        return IntMatrix(target_rank, std::vector<std::int64_t>(source_rank, 0));
    const IntMatrix& m = it->second;
    if (m.size() != static_cast<std::size_t>(target_rank) ||
        (target_rank > 0 && m[0].size() != static_cast<std::size_t>(source_rank)))
        throw std::domain_error("Euler map at degree " + std::to_string(degree) +
                                " has wrong shape");
    return m;
}

}  // namespace

GradedGroup complement_cohomology(const EulerAction& a) {
    check_base(a.base);
    if (a.bundle_rank < 1)
        throw std::domain_error("bundle rank must be >= 1");
    const int two_r = static_cast<int>(2 * a.bundle_rank);
    GradedGroup out(Coefficients::integers());
    if (a.base.is_zero()) return out;
    const int top = a.base.max_degree();

    for (int i = 0; i <= top + two_r; ++i) {
        if (i % 2 == 0) {
            // H^i(complement) = Coker(e : H^{i-2r} -> H^i)
            std::int64_t target = a.base.at(i).rank;
            if (target == 0) continue;
            std::int64_t source = a.base.at(i - two_r).rank;
            if (source == 0) {
                out.add(i, FGAbGroup::free(target));
                continue;
            }
            auto snf = smith_normal_form(matrix_at(a, i, target, source));
            FGAbGroup g = FGAbGroup::free(target - snf.rank);
            for (auto d : snf.diagonal)
                if (d > 1) g = g + FGAbGroup::cyclic(d);
            out.add(i, g);
        } else {
            // H^i(complement) = Ker(e : H^{i-2r+1} -> H^{i+1})
            std::int64_t source = a.base.at(i - two_r + 1).rank;
            if (source == 0) continue;
            std::int64_t target = a.base.at(i + 1).rank;
            std::int64_t nullity =
                target == 0 ? source
                            : source - integer_rank(matrix_at(a, i + 1, target, source));
            if (nullity > 0) out.add(i, FGAbGroup::free(nullity));
        }
    }
    return out;
}

EulerAction cotangent_euler_action(const SpaceDescriptor& base) {
    if (base.kind == SpaceDescriptor::Kind::LensSpace)
        throw std::domain_error("cotangent Euler action needs an even-cohomology base");
    EulerAction a;
    a.base = cohomology(base);
    a.bundle_rank = base.complex_dim();
    std::int64_t chi = euler_characteristic(base);
    if (a.bundle_rank >= 1) {
        int top = static_cast<int>(2 * a.bundle_rank);
        a.maps[top] = IntMatrix{{chi}};
    }
    return a;
}

EulerAction line_bundle_action_on_projective(std::int64_t m, std::int64_t degree_multiple) {
    if (m < 1) throw std::domain_error("line bundle base needs m >= 1");
    EulerAction a;
    a.base = cohomology(SpaceDescriptor::projective(m));
    a.bundle_rank = 1;
    for (int i = 2; i <= 2 * m; i += 2)
        a.maps[i] = IntMatrix{{degree_multiple}};
    return a;
}

}  // namespace nilstalk
