#pragma once

#include <map>
#include <string>
#include <vector>

#include "cobcalc/cell_complex.hpp"
#include "cobcalc/glued_complex.hpp"
#include "cobcalc/presentation.hpp"

namespace cobcalc {

// An embedded arc with endpoints on stop-free boundary segments, given with
// enough combinatorial routing data to cut along it: either the push-off of
// an identified side pair or the linking arc around a stop.
struct Arc {
    enum class Kind { Dual, Linking };
    Kind kind = Kind::Linking;
    std::string name;
    std::pair<int, int> end1{-1, -1};  // (circle, segment)
    std::pair<int, int> end2{-1, -1};
    std::string pair_label;  // Dual: the identified pair it runs along
    int stop_corner = -1;    // Linking: flag corner in the presentation
};

struct CutPiece {
    int chi = 0;
    int stops = 0;
    int boundary_circles = 0;
    int genus = 0;
    bool is_disk = false;
    std::vector<int> stop_corners;  // flag corners of the presentation
    std::map<std::string, long long> arc_coefficients;
};

struct ArcSystem {
    std::vector<Arc> arcs;
    std::vector<CutPiece> complement;
    bool full = false;

    int size() const { return static_cast<int>(arcs.size()); }
};

// Cuts the surface along all arcs (linking arcs first, then duals); each arc
// raises the total Euler characteristic by exactly one. Throws on arcs whose
// endpoints do not lie on boundary segments of `p`.
std::vector<CutPiece> cut_along(const PolygonPresentation& p, const ArcSystem& a);

// True iff every complementary piece is a disk with at most one stop.
bool is_full(const ArcSystem& a, const PolygonPresentation& p);

// One push-off arc per identified side pair plus a linking arc for every stop
// but one; |A| = 2g + b + s - 2 and the complement is s one-stop disks.
// Requires a connected surface with at least one stop.
ArcSystem minimal_full_arc_system(const StoppedSurface& surface);

// Cellular 1-chain representing an arc's class in H1(surface, boundary minus
// stops), in the edge indexing of `cells` (built from the same presentation).
std::vector<long long> arc_image_chain(const Arc& arc, const PolygonPresentation& p, const CellComplex& cells);

}  // namespace cobcalc
