#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cobcalc/presentation.hpp"

namespace cobcalc {

// A surface held as polygons (regions) with identified sides, supporting cuts
// along arcs. Regions are counterclockwise cyclic words of side occurrences;
// an Interior side occurs twice with opposite directions, Boundary and Cut
// sides once. corners[i] is the corner preceding occs[i]; corner ids are
// stable across splits and cuts (cut endpoints get fresh ids).
class GluedComplex {
public:
    enum class SideKind { Boundary, Interior, Cut };

    struct Side {
        SideKind kind = SideKind::Boundary;
        std::string name;         // interior pair label, or segment name
        int circle = -1;          // Boundary: source circle
        int segment = -1;         // Boundary: source segment
        int arc = -1;             // Cut: arc id
        bool alive = true;
        bool tip = false;         // residual stub of an interior edge next to a stop
        int child_tail = -1;      // after a split: sub-side holding each end
        int child_head = -1;
    };

    struct Occ {
        int side = -1;
        int dir = 1;  // +1: region traverses the side tail->head
    };

    struct Region {
        std::vector<Occ> occs;
        std::vector<int> corners;
        bool alive = true;
    };

    struct ArcInfo {
        enum class Kind { Dual, Linking } kind;
        std::string pair_label;  // Dual
        int stop_corner = -1;    // Linking (original corner id)
        int legs = 0;            // cut banks created per side
    };

    explicit GluedComplex(const PolygonPresentation& p);

    // Cuts the push-off of the identified edge `pair_label` (un-glues the
    // pair; the stop at a split vertex stays with the sub-fan holding its
    // flag corner). Returns the arc id.
    int cut_dual(const std::string& pair_label);

    // Cuts the linking arc around the stop whose flag corner is `corner_id`,
    // crossing every interior edge end in the stop's vertex fan. Returns the
    // arc id.
    int cut_linking(int corner_id);

    struct Piece {
        int chi = 0;
        int boundary_circles = 0;
        int genus = 0;
        int stops = 0;
        bool is_disk = false;
        std::vector<int> regions;
        std::vector<int> stop_corners;              // flag corner ids inside the piece
        std::map<int, long long> arc_coefficients;  // arc id -> signed multiplicity
    };
    std::vector<Piece> pieces() const;
    int total_chi() const;

    // Vertex classes of the current state.
    struct Tracing {
        std::vector<int> corner_class;   // corner id -> class (or -1 if unused)
        int num_classes = 0;
        std::vector<bool> class_is_stop;
    };
    Tracing trace() const;

    // --- vertex fan walking (used by cuts, boundary walks and arc images) ---
    struct Wedge {
        int region = -1;
        int pos = -1;
        bool operator==(const Wedge& o) const { return region == o.region && pos == o.pos; }
    };
    struct Crossing {
        int side = -1;
        Wedge from, into;          // wedges flanking the crossed side end
        int from_dir = 0;          // dir of the occurrence adjacent to `from`
        int into_dir = 0;          // dir of the partner occurrence
        bool end_is_head = false;  // which intrinsic end of the side sits at the vertex
    };
    struct FanWalk {
        std::vector<Wedge> wedges;       // starting wedge first
        std::vector<Crossing> crossings;
        int terminal_side = -1;          // non-interior side that stopped the walk
        bool terminal_at_start = false;  // blocked at that occurrence's region-start
        int terminal_region = -1;        // occurrence slot of the blocking side
        int terminal_pos = -1;
    };
    // Walks around the vertex from `start`, first crossing its forward
    // (cross_forward) or backward boundary, until a non-interior side.
    FanWalk fan_walk(Wedge start, bool cross_forward) const;

    const Side& side(int id) const { return sides_[id]; }
    const Region& region(int id) const { return regions_[id]; }
    const std::vector<Side>& all_sides() const { return sides_; }
    const std::vector<Region>& all_regions() const { return regions_; }
    const std::vector<ArcInfo>& arcs() const { return arcs_; }
    int num_corners() const { return static_cast<int>(corner_stop_.size()); }
    bool corner_is_stop(int id) const { return corner_stop_[id]; }
    bool corner_alive(int id) const;

    // Resolves which live sub-side currently holds an end of `side_id`.
    int resolve_end(int side_id, bool head) const;

    // Locates the region and position of a live corner id.
    Wedge find_corner(int corner_id) const;
    std::vector<std::pair<int, int>> occurrences(int side_id) const;  // (region, pos)

private:
    int new_corner(bool stop);
    int new_side(const Side& s);
    struct SplitResult {
        int first = -1, second = -1;          // sub-sides, tail part first
        int corner_plus = -1;                 // new corner in the + occurrence
        int corner_minus = -1;                // new corner in the - occurrence
    };
    SplitResult split_side(int side_id);
    void cut_chord(int corner_a, int corner_b, int arc_id);

    std::vector<Side> sides_;
    std::vector<Region> regions_;
    std::vector<bool> corner_stop_;
    std::vector<ArcInfo> arcs_;
};

}  // namespace cobcalc
