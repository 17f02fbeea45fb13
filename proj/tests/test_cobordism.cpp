#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cobcalc/cobordism.hpp"

using namespace cobcalc;

namespace {

CobordismDatum datum(const std::string& preferred, std::vector<std::string> ends) {
    CobordismDatum d;
    d.preferred = {preferred};
    for (auto& e : ends) d.ends.push_back({e});
    return d;
}

}  // namespace

TEST_CASE("cone from cobordism") {
    CHECK(cone_from_cobordism(datum("L0", {"L1"})).str() == "L0 ~= L1");
    CHECK(cone_from_cobordism(datum("L0", {"L1", "L2"})).str() == "L0 ~= [L2[-1] -> L1]");
    CHECK(cone_from_cobordism(datum("L0", {"L1", "L2", "L3"})).str() == "L0 ~= [L3[-1] -> [L2[-1] -> L1]]");
    CHECK_THROWS_AS(cone_from_cobordism(datum("L0", {})), std::invalid_argument);
}

TEST_CASE("k0 relation rows") {
    K0Class row = k0_relation(datum("L0", {"L1", "L2"}));
    CHECK(row == K0Class::of("L0") - K0Class::of("L1") - K0Class::of("L2"));
    CHECK(k0_relation(datum("L0", {})) == K0Class::of("L0"));

    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> count(1, 8);
    std::uniform_int_distribution<int> shift(-2, 2);
    for (int trial = 0; trial < 300; ++trial) {
        CobordismDatum d;
        d.preferred = {"L0", shift(rng)};
        int n = count(rng);
        for (int j = 1; j <= n; ++j) d.ends.push_back({"L" + std::to_string(j), shift(rng)});
        K0Class lhs = k0_relation(d);
        K0Class rhs = k0_class(ConeExpr::leaf(d.preferred)) - k0_class(cone_from_cobordism(d).expr);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("rotate preferred end") {
    CobordismDatum d = datum("L0", {"L1", "L2"});
    CobordismDatum r = rotate_preferred_end(d);
    CHECK(r.preferred == GradedObject{"L2"});
    REQUIRE(r.ends.size() == 2);
    CHECK(r.ends[0] == GradedObject{"L0"});
    CHECK(r.ends[1] == GradedObject{"L1", 1});
    CHECK(k0_relation(r) == -k0_relation(d));
    // The standard cone of the rotated datum is the rotated nesting.
    CHECK(same_shape(cone_from_cobordism(r).expr,
                     rotate_decomposition(cone_from_cobordism(d)).expr));

    CobordismDatum one = datum("L0", {"L1"});
    CobordismDatum swapped = rotate_preferred_end(one);
    CHECK(swapped.preferred == GradedObject{"L1"});
    CHECK(swapped.ends == std::vector<GradedObject>{GradedObject{"L0"}});
    CHECK(k0_relation(swapped) == -k0_relation(one));

    CobordismDatum twice = rotate_preferred_end(rotate_preferred_end(d));
    CHECK((k0_relation(twice) == k0_relation(d) || k0_relation(twice) == -k0_relation(d)));
}

TEST_CASE("concatenation") {
    CobordismDatum outer = datum("L0", {"L1", "L2"});
    CobordismDatum inner = datum("L2", {"K1", "K2"});
    CobordismDatum glued = concatenate(outer, 1, inner);
    CHECK(glued.preferred == GradedObject{"L0"});
    CHECK(glued.ends == std::vector<GradedObject>{{"L1"}, {"K1"}, {"K2"}});
    CHECK(k0_relation(glued) ==
          K0Class::of("L0") - K0Class::of("L1") - K0Class::of("K1") - K0Class::of("K2"));

    // Matches composing the cone decompositions.
    IteratedDecomposition via_cones = compose_decompositions(cone_from_cobordism(outer), 1,
                                                             cone_from_cobordism(inner));
    CHECK(same_shape(cone_from_cobordism(glued).expr, via_cones.expr));

    // Relabeled one-ended inner renames the slot.
    CobordismDatum rename = concatenate(outer, 1, datum("L2", {"K1"}));
    CHECK(rename.ends == std::vector<GradedObject>{{"L1"}, {"K1"}});

    CHECK_THROWS_AS(concatenate(outer, 0, inner), std::invalid_argument);
    CHECK_THROWS_AS(concatenate(outer, 2, inner), std::invalid_argument);

    // Disjoint-slot concatenations commute.
    CobordismDatum big = datum("T", {"P1", "P2", "P3"});
    CobordismDatum a = datum("P1", {"Q1", "Q2"});
    CobordismDatum b = datum("P3", {"R1", "R2"});
    CobordismDatum ab = concatenate(concatenate(big, 0, a), 3, b);
    CobordismDatum ba = concatenate(concatenate(big, 2, b), 0, a);
    CHECK(ab.ends == ba.ends);

    // Substitution in K0: row(outer) with the slot label replaced.
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> count(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = count(rng), m = count(rng);
        std::vector<std::string> ends;
        for (int j = 1; j <= n; ++j) ends.push_back("L" + std::to_string(j));
        std::vector<std::string> kends;
        for (int j = 1; j <= m; ++j) kends.push_back("K" + std::to_string(j));
        int slot = trial % n;
        CobordismDatum out = datum("L0", ends);
        CobordismDatum inn = datum(ends[slot], kends);
        K0Class row = k0_relation(concatenate(out, slot, inn));
        K0Class subst = k0_relation(out) + k0_relation(inn);
        CHECK(row == subst);
    }
}

TEST_CASE("relation constructors and presentation") {
    GroupPresentation p;
    p.add_generator("L");
    p.add_generator("L1");
    p.add_generator("L2");
    CHECK_THROWS_AS(p.add_generator("L"), std::invalid_argument);

    Relation s = surgery_relation(p, "L", "L1", "L2");
    CHECK(s.kind == RelationKind::Surgery);
    CHECK(s.row.at("L") == 1);
    CHECK(s.row.at("L1") == -1);
    CHECK(s.row.at("L2") == -1);

    Relation i = isotopy_relation(p, "L1", "L2");
    CHECK(i.row == std::map<std::string, long long>{{"L1", 1}, {"L2", -1}});

    Relation z = zero_relation(p, "L2");
    CHECK(z.row == std::map<std::string, long long>{{"L2", 1}});

    CHECK_THROWS_AS(zero_relation(p, "nope"), std::invalid_argument);

    // present_group pinned examples.
    GroupPresentation free2;
    free2.add_generator("a");
    free2.add_generator("b");
    CHECK(present_group(free2) == AbelianGroup{2, {}});

    GroupPresentation disks;
    disks.add_generator("D0");
    disks.add_generator("D1");
    disks.add_generator("D2");
    CobordismDatum d = datum("D0", {"D1", "D2"});
    disks.add_relation(cobordism_relation(disks, d));
    CHECK(present_group(disks) == AbelianGroup{2, {}});

    GroupPresentation torsion;
    torsion.add_generator("L");
    Relation twice;
    twice.kind = RelationKind::Cobordism;
    twice.row = {{"L", 2}};
    torsion.add_relation(twice);
    CHECK(present_group(torsion) == AbelianGroup{0, {2}});

    // Round trip through the relation file format.
    GroupPresentation again = GroupPresentation::from_json(disks.to_json());
    CHECK(again.generators == disks.generators);
    REQUIRE(again.relations.size() == 1);
    CHECK(again.relations[0].row == disks.relations[0].row);
    CHECK(present_group(again) == AbelianGroup{2, {}});
    CHECK_THROWS_AS(GroupPresentation::from_json("{"), std::invalid_argument);
}

TEST_CASE("verify_theorem pinned surfaces") {
    TheoremReport r = verify_theorem(StoppedSurface::disk(3));
    CHECK(r.ok);
    CHECK(r.presented_total == AbelianGroup{2, {}});
    CHECK(r.homology_total == AbelianGroup{2, {}});

    r = verify_theorem(StoppedSurface::cylinder(1));
    CHECK(r.ok);
    CHECK(r.presented_total == AbelianGroup{1, {}});

    r = verify_theorem(StoppedSurface::connected(1, {1}));
    CHECK(r.ok);
    CHECK(r.presented_total == AbelianGroup{2, {}});

    // Stopless components go through stop insertion first.
    r = verify_theorem(StoppedSurface::cylinder(0));
    CHECK(r.ok);
    CHECK(r.components[0].stop_added);
    CHECK(r.presented_total == AbelianGroup{1, {}});
    // ... and the single generator hits a generator of homology.
    REQUIRE(r.components[0].generator_images.size() == 1);
    auto c = r.components[0].generator_images[0].free_part;
    REQUIRE(c.size() == 1);
    CHECK((c[0] == 1 || c[0] == -1));

    // Disconnected surfaces verify componentwise.
    StoppedSurface both = StoppedSurface::from_json(
        R"({"components":[{"genus":0,"boundary":[{"stops":3}]},{"genus":1,"boundary":[{"stops":1}]}]})");
    r = verify_theorem(both);
    CHECK(r.ok);
    CHECK(r.presented_total == AbelianGroup{4, {}});
    CHECK(r.text().find("MATCH") != std::string::npos);
}
