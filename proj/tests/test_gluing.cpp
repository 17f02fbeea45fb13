#include <doctest.h>

#include <stdexcept>

#include "cobcalc/gluing.hpp"

using namespace cobcalc;

TEST_CASE("add_stop") {
    GluingReport r = add_stop(StoppedSurface::disk(1), 0);
    CHECK(r.after.same_surface(StoppedSurface::disk(2)));
    CHECK(r.claim == GroupClaim::AfterGainsZ);
    CHECK(r.verdict);
    CHECK(r.group_before.rank == 0);
    CHECK(r.group_after.rank == 1);

    r = add_stop(StoppedSurface::cylinder(0), 0);
    CHECK(r.claim == GroupClaim::Isomorphism);
    CHECK(r.verdict);
    CHECK(r.group_before.rank == 1);
    CHECK(r.group_after.rank == 1);

    r = add_stop(StoppedSurface::disk(2), 0);
    CHECK(r.verdict);
    CHECK(r.group_before.rank == 1);
    CHECK(r.group_after.rank == 2);

    // chi is untouched by stop insertion.
    CHECK(euler_characteristic(r.before) == euler_characteristic(r.after));
}

TEST_CASE("attach_handle cases") {
    // Same circle: disk with two stops becomes the cylinder.
    GluingReport r = attach_handle(StoppedSurface::disk(2), {0, 0}, {0, 1});
    CHECK(r.after.same_surface(StoppedSurface::cylinder(0)));
    CHECK(r.claim == GroupClaim::Isomorphism);
    CHECK(r.verdict);
    CHECK(r.group_after == AbelianGroup{1, {}});

    // Same circle with a leftover stop: the exact-sequence case.
    r = attach_handle(StoppedSurface::disk(3), {0, 0}, {0, 1});
    CHECK(r.after.same_surface(StoppedSurface::cylinder(1, 0)));
    CHECK(r.claim == GroupClaim::BeforeGainsZ);
    CHECK(r.verdict);
    CHECK(r.group_before.rank == 2);
    CHECK(r.group_after.rank == 1);

    // Different circles of one component: genus climbs.
    r = attach_handle(StoppedSurface::cylinder(1, 1), {0, 0}, {1, 0});
    CHECK(r.after.same_surface(StoppedSurface::connected(1, {0})));
    CHECK(r.claim == GroupClaim::Isomorphism);
    CHECK(r.verdict);

    // Two components merge; two one-stop disks give back a disk.
    StoppedSurface two = StoppedSurface::from_json(
        R"({"components":[{"genus":0,"boundary":[{"stops":1}]},{"genus":0,"boundary":[{"stops":1}]}]})");
    r = attach_handle(two, {0, 0}, {1, 0});
    CHECK(r.after.same_surface(StoppedSurface::disk(0)));
    CHECK(r.claim == GroupClaim::Isomorphism);
    CHECK(r.verdict);
    CHECK(r.group_before.rank == 0);
    CHECK(r.group_after.rank == 0);

    CHECK(euler_characteristic(r.after) == euler_characteristic(two) - 1);

    CHECK_THROWS_AS(attach_handle(StoppedSurface::disk(2), {0, 0}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(attach_handle(StoppedSurface::disk(1), {0, 0}, {0, 1}), std::invalid_argument);
}

TEST_CASE("same-circle split follows the cyclic order") {
    // Four stops; the handle between positions 0 and 2 leaves one stop on
    // each of the two new circles.
    GluingReport r = attach_handle(StoppedSurface::disk(4), {0, 0}, {0, 2});
    CHECK(r.after.same_surface(StoppedSurface::cylinder(1, 1)));
    // Between positions 0 and 1 the split is 0 + 2.
    r = attach_handle(StoppedSurface::disk(4), {0, 0}, {0, 1});
    CHECK(r.after.same_surface(StoppedSurface::cylinder(0, 2)));
    // ... and the reversed feet exchange the two sides.
    r = attach_handle(StoppedSurface::disk(4), {0, 1}, {0, 0});
    CHECK(r.after.same_surface(StoppedSurface::cylinder(2, 0)));
}

TEST_CASE("glue_disk") {
    GluingReport r = glue_disk(StoppedSurface::cylinder(1, 0), 1);
    CHECK(r.after.same_surface(StoppedSurface::disk(1)));
    CHECK(r.claim == GroupClaim::BeforeGainsZ);
    CHECK(r.verdict);
    CHECK(r.group_before.rank == 1);
    CHECK(r.group_after.rank == 0);

    StoppedSurface pants = StoppedSurface::connected(0, {1, 0, 0});
    r = glue_disk(pants, 2);
    CHECK(r.after.same_surface(StoppedSurface::cylinder(1, 0)));
    CHECK(r.verdict);
    CHECK(r.group_before.rank == 2);
    CHECK(r.group_after.rank == 1);
    CHECK(euler_characteristic(r.after) == euler_characteristic(pants) + 1);

    CHECK_THROWS_AS(glue_disk(StoppedSurface::disk(0), 0), std::invalid_argument);
    CHECK_THROWS_AS(glue_disk(StoppedSurface::cylinder(1, 0), 0), std::invalid_argument);
}

TEST_CASE("circular_glue") {
    // Pair of pants onto itself: genus appears, the group survives.
    StoppedSurface pants = StoppedSurface::connected(0, {0, 0, 0});
    GluingReport r = circular_glue(pants, 1, 2);
    CHECK(r.after.same_surface(StoppedSurface::connected(1, {0})));
    CHECK(r.claim == GroupClaim::Isomorphism);
    CHECK(r.verdict);
    CHECK(r.group_before.rank == 2);
    CHECK(r.group_after.rank == 2);
    CHECK(euler_characteristic(r.after) == euler_characteristic(pants));

    // Two cylinders end to end: one Z is shed.
    StoppedSurface two = StoppedSurface::from_json(
        R"({"components":[{"genus":0,"boundary":[{"stops":0},{"stops":0}]},{"genus":0,"boundary":[{"stops":0},{"stops":0}]}]})");
    r = circular_glue(two, 1, 2);
    CHECK(r.after.same_surface(StoppedSurface::cylinder(0)));
    CHECK(r.claim == GroupClaim::BeforeGainsZ);
    CHECK(r.verdict);
    CHECK(r.group_before.rank == 2);
    CHECK(r.group_after.rank == 1);

    // Two components, both carrying stops elsewhere: isomorphism case.
    StoppedSurface stopped = StoppedSurface::from_json(
        R"({"components":[{"genus":0,"boundary":[{"stops":2},{"stops":0}]},{"genus":0,"boundary":[{"stops":1},{"stops":0}]}]})");
    r = circular_glue(stopped, 1, 3);
    CHECK(r.claim == GroupClaim::Isomorphism);
    CHECK(r.verdict);

    // Gluing the two ends of one cylinder would close the surface.
    CHECK_THROWS_AS(circular_glue(StoppedSurface::cylinder(0), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(circular_glue(StoppedSurface::cylinder(1, 0), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(circular_glue(StoppedSurface::cylinder(0), 0, 0), std::invalid_argument);
}

TEST_CASE("round trip: attach then cap") {
    // Splitting a circle with a handle and capping one of the new circles
    // undoes the split on the (g, b, s) data.
    StoppedSurface disk2 = StoppedSurface::disk(2);
    GluingReport handle = attach_handle(disk2, {0, 0}, {0, 1});
    REQUIRE(handle.after.same_surface(StoppedSurface::cylinder(0)));
    GluingReport cap = glue_disk(handle.after, 1);
    CHECK(cap.after.same_surface(StoppedSurface::disk(0)));
}

TEST_CASE("report formats") {
    GluingReport r = add_stop(StoppedSurface::cylinder(0), 0);
    std::string t = r.text();
    CHECK(t.find("operation: add_stop") != std::string::npos);
    CHECK(t.find("verdict: true") != std::string::npos);
    CHECK(r.to_json().find("\"claim\"") != std::string::npos);
}
