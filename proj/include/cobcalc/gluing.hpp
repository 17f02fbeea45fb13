#pragma once

#include <string>

#include "cobcalc/abelian_group.hpp"
#include "cobcalc/surface.hpp"

namespace cobcalc {

// A stop addressed positionally: circle is a global index, position counts
// counterclockwise within the circle.
struct StopRef {
    int circle = 0;
    int position = 0;
};

enum class GroupClaim {
    Isomorphism,       // before == after
    AfterGainsZ,       // after == before + Z   (stop insertion)
    BeforeGainsZ,      // before == after + Z   (handle, disk, circular +Z case)
};
std::string group_claim_name(GroupClaim c);

struct GluingReport {
    std::string operation;
    StoppedSurface before;
    StoppedSurface after;
    AbelianGroup group_before;
    AbelianGroup group_after;
    GroupClaim claim = GroupClaim::Isomorphism;
    bool verdict = false;

    std::string text() const;
    std::string to_json() const;
};

// Stop insertion: rank +1 when the component already had a stop, unchanged
// otherwise.
GluingReport add_stop(const StoppedSurface& s, int circle);

// One-handle attachment at two stops; the stops are consumed. Same circle:
// the circle splits in two (counterclockwise stop assignment). Different
// circles of one component: genus +1, circles merge. Different components:
// the components merge. Claim: rank -1 when stops remain, isomorphism when
// none do.
GluingReport attach_handle(const StoppedSurface& s, StopRef q_minus, StopRef q_plus);

// Glues a disk onto a stopless circle; the group sheds one Z.
GluingReport glue_disk(const StoppedSurface& s, int circle);

// Identifies two stopless circles; implemented as add_stop twice, a handle
// between the new stops, then a disk on the resulting stopless circle.
GluingReport circular_glue(const StoppedSurface& s, int c_minus, int c_plus);

}  // namespace cobcalc
