#include <doctest.h>

#include <stdexcept>

#include "nilstalk/resolutions.hpp"
#include "nilstalk/spaces.hpp"

using namespace nilstalk;

namespace {

GradedGroup point() {
    GradedGroup g(Coefficients::integers());
    g.set(0, FGAbGroup::free(1));
    return g;
}

GradedGroup p1() { return cohomology(SpaceDescriptor::projective(1)); }

}  // namespace

TEST_CASE("registry") {
    CHECK(registered_resolution_names().size() == 6);
    for (const auto& name : registered_resolution_names()) {
        ResolutionDescriptor r = registered_resolution(name, 3);
        CHECK(r.name == name);
        CHECK(!r.strata.empty());
    }
    CHECK_THROWS_AS(registered_resolution("nope"), std::domain_error);
    CHECK_THROWS_AS(registered_resolution("minimal-sln", 1), std::domain_error);
    CHECK_THROWS_AS(registered_resolution("subreg-sln", 0), std::domain_error);
}

TEST_CASE("semismallness and relevant strata") {
    // apart from minimal-sp2n, every registered map is semismall with every
    // exceptional fiber of dimension exactly half the codimension, so none
    // is small
    for (const auto& name : registered_resolution_names()) {
        if (name == "minimal-sp2n") continue;
        ResolutionDescriptor r = registered_resolution(name, 4);
        CHECK(is_semismall(r));
        CHECK(!is_small(r));
        CHECK(relevant_strata(r).size() == r.strata.size());
    }
    // the P^{2n-1} fiber over the origin is too big once n > 1
    CHECK(is_semismall(registered_resolution("minimal-sp2n", 1)));
    CHECK(!is_semismall(registered_resolution("minimal-sp2n", 2)));
    CHECK(!is_semismall(registered_resolution("minimal-sp2n", 4)));
    // a genuinely small example: P^1 fiber over a codimension-4 stratum
    ResolutionDescriptor small{
        "toy", 6, {{Partition({3}), 6, point()}, {Partition({1, 1, 1}), 2, p1()}}};
    CHECK(is_semismall(small));
    CHECK(is_small(small));
    CHECK(relevant_strata(small) == std::vector<Partition>{Partition({3})});
    // and a non-semismall one: big fiber over a shallow stratum
    ResolutionDescriptor bad{
        "toy", 4,
        {{Partition({3}), 4, point()},
         {Partition({1, 1, 1}), 2, cohomology(SpaceDescriptor::projective(2))}}};
    CHECK(!is_semismall(bad));
}

TEST_CASE("descriptor validation") {
    ResolutionDescriptor empty{"e", 0, {}};
    CHECK_THROWS_AS(is_semismall(empty), std::domain_error);
    ResolutionDescriptor wrong_dense{"w", 4, {{Partition({2}), 2, point()}}};
    CHECK_THROWS_AS(is_semismall(wrong_dense), std::domain_error);
    ResolutionDescriptor fat_dense{"f", 2, {{Partition({2}), 2, p1()}}};
    CHECK_THROWS_AS(is_semismall(fat_dense), std::domain_error);
    ResolutionDescriptor unsorted{
        "u", 4,
        {{Partition({2, 2}), 4, point()},
         {Partition({2, 1, 1}), 0, p1()},
         {Partition({1, 1, 1, 1}), 2, p1()}}};
    CHECK_THROWS_AS(is_semismall(unsorted), std::domain_error);
}

TEST_CASE("pushforward stalks of the sl2 Springer resolution") {
    ResolutionDescriptor r = registered_resolution("springer-sl2");
    StalkTable t = pushforward_stalk_table(r, Coefficients::prime_field(2));
    CHECK(t.strata.size() == 2);
    CHECK(t.stalk_at(Partition({2})).at(-2).rank == 1);
    GradedGroup origin = t.stalk_at(Partition({1, 1}));
    CHECK(origin.at(-2).rank == 1);
    CHECK(origin.at(0).rank == 1);
    CHECK(origin.groups().size() == 2);
    // integral version keeps the same free ranks
    StalkTable z = pushforward_stalk_table(r, Coefficients::integers());
    CHECK(z.stalk_at(Partition({1, 1})).at(-2).rank == 1);
    CHECK(z.stalk_at(Partition({1, 1})).at(0).rank == 1);
}

TEST_CASE("pushforward along the sl3 Springer resolution over U") {
    StalkTable t = pushforward_stalk_table(registered_resolution("springer-sl3-U"),
                                           Coefficients::rational());
    GradedGroup sub = t.stalk_at(Partition({2, 1}));
    CHECK(sub.at(-6).rank == 1);
    CHECK(sub.at(-4).rank == 2);  // two P^1 components of the Dynkin curve
}

TEST_CASE("split subtraction") {
    GradedGroup total(Coefficients::prime_field(3));
    total.set(0, FGAbGroup::free(5));
    total.set(2, FGAbGroup::free(2));
    GradedGroup part(Coefficients::prime_field(3));
    part.set(0, FGAbGroup::free(2));
    part.set(2, FGAbGroup::free(1));
    GradedGroup rest = split_subtract(total, part, 2);
    CHECK(rest.at(0).rank == 1);
    CHECK(rest.at(2).is_zero());
    CHECK(direct_sum(direct_sum(rest, part), part) == total);
    CHECK_THROWS_AS(split_subtract(total, part, 3), std::domain_error);
    CHECK_THROWS_AS(split_subtract(total, part, 0), std::domain_error);
}
