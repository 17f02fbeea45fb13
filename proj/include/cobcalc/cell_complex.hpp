#pragma once

#include <map>
#include <string>
#include <vector>

#include "cobcalc/abelian_group.hpp"
#include "cobcalc/glued_complex.hpp"
#include "cobcalc/presentation.hpp"
#include "cobcalc/snf.hpp"

namespace cobcalc {

// CW model of a connected stopped surface. Every boundary segment is
// subdivided at a midpoint; the marked subcomplex (a deformation retract of
// the boundary minus the stops) is {segment midpoints} plus all cells of
// stopless circles.
struct CellComplex {
    int num_vertices = 0;
    int num_edges = 0;
    int num_faces = 0;
    IntMatrix d1;  // E x V: row e = boundary of edge e
    IntMatrix d2;  // F x E: row f = boundary of face f

    std::vector<bool> marked_vertex;
    std::vector<bool> marked_edge;

    std::vector<int> edge_tail, edge_head;

    // Cell lookup for building explicit chains.
    std::map<std::string, int> interior_edge;                     // pair label -> edge
    std::map<std::pair<int, int>, std::pair<int, int>> halves;    // (circle, seg) -> (h1, h2)
    std::map<std::pair<int, int>, int> midpoint;                  // (circle, seg) -> vertex
    std::vector<int> corner_vertex;                               // corner id -> vertex

    int chi() const { return num_vertices - num_edges + num_faces; }
    void check_boundary_of_boundary() const;  // throws unless d2 * d1 == 0
    void check_marking_closed() const;
};

CellComplex build_cell_complex(const PolygonPresentation& p);

// H1 of the pair (surface, marked subcomplex) with coordinates for relative
// 1-cycles in the computed basis.
class RelativeH1 {
public:
    explicit RelativeH1(const CellComplex& c);

    const AbelianGroup& group() const { return group_; }

    struct Coords {
        std::vector<long long> free_part;
        std::vector<long long> torsion_part;
        bool operator==(const Coords& o) const = default;
    };
    // `chain` is indexed by edge; marked edges are quotiented away. Throws if
    // the chain is not a relative cycle.
    Coords coordinates(const std::vector<long long>& chain) const;

private:
    AbelianGroup group_;
    std::vector<int> edge_to_rel_;
    IntMatrix v_inv_;
    int r1_ = 0;
    IntMatrix u2_;
    int r2_ = 0;
    std::vector<long long> factors_;
};

AbelianGroup relative_homology_h1(const CellComplex& c);

// Direct sum of component H1 groups; the surface may be disconnected.
AbelianGroup surface_h1(const StoppedSurface& s);

}  // namespace cobcalc
