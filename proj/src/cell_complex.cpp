#include "cobcalc/cell_complex.hpp"

#include <stdexcept>

namespace cobcalc {

namespace {

std::vector<long long> mat_vec(const IntMatrix& m, const std::vector<long long>& x) {
    if (m.cols() != static_cast<int>(x.size())) throw std::invalid_argument("mat_vec: size mismatch");
    std::vector<long long> y(m.rows(), 0);
    for (int i = 0; i < m.rows(); ++i) {
        mint acc = 0;
        for (int j = 0; j < m.cols(); ++j) acc += m.at(i, j) * x[j];
        y[i] = to_ll(acc);
    }
    return y;
}

}  // namespace

void CellComplex::check_boundary_of_boundary() const {
    IntMatrix prod = d2 * d1;
    for (int i = 0; i < prod.rows(); ++i)
        for (int j = 0; j < prod.cols(); ++j)
            if (prod.at(i, j) != 0) throw std::logic_error("cell complex: d1 o d2 != 0");
}

void CellComplex::check_marking_closed() const {
    for (int e = 0; e < num_edges; ++e) {
        if (!marked_edge[e]) continue;
        if (!marked_vertex[edge_tail[e]] || !marked_vertex[edge_head[e]])
            throw std::logic_error("cell complex: marked subcomplex not closed under boundary");
    }
}

CellComplex build_cell_complex(const PolygonPresentation& p) {
    GluedComplex g(p);
    GluedComplex::Tracing t = g.trace();
    const ConnectedSurface& surf = p.surface;

    CellComplex c;
    c.num_vertices = t.num_classes;
    c.corner_vertex = t.corner_class;
    c.marked_vertex.assign(t.num_classes, false);

    auto add_vertex = [&](bool marked) {
        c.marked_vertex.push_back(marked);
        return c.num_vertices++;
    };

    struct EdgeRec {
        int tail, head;
        bool marked;
    };
    std::vector<EdgeRec> edges;
    auto add_edge = [&](int tail, int head, bool marked) {
        edges.push_back({tail, head, marked});
        return static_cast<int>(edges.size()) - 1;
    };

    const GluedComplex::Region& reg = g.all_regions()[0];
    const int n = static_cast<int>(reg.occs.size());

    // Stopless circles are kept whole in the marked subcomplex.
    auto circle_is_marked = [&](int circle) { return surf.boundary[circle].stops == 0; };

    std::map<int, std::pair<int, int>> side_halves;  // side id -> (h1, h2)
    std::map<int, int> side_edge;                    // interior side id -> edge
    for (int i = 0; i < n; ++i) {
        const auto& occ = reg.occs[i];
        const auto& side = g.side(occ.side);
        if (side_edge.count(occ.side) || side_halves.count(occ.side)) continue;
        int start = t.corner_class[reg.corners[i]];
        int end = t.corner_class[reg.corners[(i + 1) % n]];
        int tail = occ.dir > 0 ? start : end;
        int head = occ.dir > 0 ? end : start;
        if (side.kind == GluedComplex::SideKind::Interior) {
            int e = add_edge(tail, head, false);
            side_edge[occ.side] = e;
            c.interior_edge[side.name] = e;
        } else {
            bool circle_marked = circle_is_marked(side.circle);
            if (circle_marked) {
                c.marked_vertex[tail] = true;
                c.marked_vertex[head] = true;
            }
            int mid = add_vertex(true);
            int h1 = add_edge(tail, mid, circle_marked);
            int h2 = add_edge(mid, head, circle_marked);
            side_halves[occ.side] = {h1, h2};
            c.halves[{side.circle, side.segment}] = {h1, h2};
            c.midpoint[{side.circle, side.segment}] = mid;
        }
    }

    c.num_edges = static_cast<int>(edges.size());
    c.num_faces = 1;
    c.d1 = IntMatrix(c.num_edges, c.num_vertices);
    c.marked_edge.assign(c.num_edges, false);
    c.edge_tail.resize(c.num_edges);
    c.edge_head.resize(c.num_edges);
    for (int e = 0; e < c.num_edges; ++e) {
        c.d1.at(e, edges[e].head) += 1;
        c.d1.at(e, edges[e].tail) -= 1;
        c.marked_edge[e] = edges[e].marked;
        c.edge_tail[e] = edges[e].tail;
        c.edge_head[e] = edges[e].head;
    }

    c.d2 = IntMatrix(1, c.num_edges);
    for (int i = 0; i < n; ++i) {
        const auto& occ = reg.occs[i];
        if (g.side(occ.side).kind == GluedComplex::SideKind::Interior) {
            c.d2.at(0, side_edge[occ.side]) += occ.dir;
        } else {
            auto [h1, h2] = side_halves[occ.side];
            c.d2.at(0, h1) += occ.dir;
            c.d2.at(0, h2) += occ.dir;
        }
    }

    c.check_boundary_of_boundary();
    c.check_marking_closed();
    if (c.chi() != surf.euler_characteristic())
        throw std::logic_error("cell complex: chi mismatch with surface");
    return c;
}

RelativeH1::RelativeH1(const CellComplex& c) {
    // Relative chains: quotient by marked cells (delete their rows/columns).
    edge_to_rel_.assign(c.num_edges, -1);
    std::vector<int> rel_edges;
    for (int e = 0; e < c.num_edges; ++e)
        if (!c.marked_edge[e]) {
            edge_to_rel_[e] = static_cast<int>(rel_edges.size());
            rel_edges.push_back(e);
        }
    std::vector<int> rel_vertices;
    std::vector<int> vertex_to_rel(c.num_vertices, -1);
    for (int v = 0; v < c.num_vertices; ++v)
        if (!c.marked_vertex[v]) {
            vertex_to_rel[v] = static_cast<int>(rel_vertices.size());
            rel_vertices.push_back(v);
        }

    const int ne = static_cast<int>(rel_edges.size());
    const int nv = static_cast<int>(rel_vertices.size());

    // Column convention: m1 maps edge space to vertex space.
    IntMatrix m1(nv, ne);
    for (int j = 0; j < ne; ++j)
        for (int i = 0; i < nv; ++i) m1.at(i, j) = c.d1.at(rel_edges[j], rel_vertices[i]);
    SmithResult s1 = smith_normal_form(m1);
    r1_ = s1.rank;
    v_inv_ = s1.v_inv;

    // Express face boundaries in kernel coordinates: rows r1.. of v_inv * d2^T.
    IntMatrix m2(ne, c.num_faces);
    for (int f = 0; f < c.num_faces; ++f)
        for (int j = 0; j < ne; ++j) m2.at(j, f) = c.d2.at(f, rel_edges[j]);
    IntMatrix b = v_inv_ * m2;
    for (int i = 0; i < r1_; ++i)
        for (int f = 0; f < c.num_faces; ++f)
            if (b.at(i, f) != 0) throw std::logic_error("homology: face boundary is not a cycle");
    IntMatrix k(ne - r1_, c.num_faces);
    for (int i = r1_; i < ne; ++i)
        for (int f = 0; f < c.num_faces; ++f) k.at(i - r1_, f) = b.at(i, f);
    SmithResult s2 = smith_normal_form(k);
    r2_ = s2.rank;
    u2_ = s2.u;
    for (int i = 0; i < r2_; ++i) factors_.push_back(s2.d.at(i, i));

    group_.rank = (ne - r1_) - r2_;
    for (long long d : factors_)
        if (d >= 2) group_.torsion.push_back(d);
}

RelativeH1::Coords RelativeH1::coordinates(const std::vector<long long>& chain) const {
    const int ne = v_inv_.cols();
    std::vector<long long> z(ne, 0);
    for (int e = 0; e < static_cast<int>(chain.size()); ++e)
        if (edge_to_rel_[e] >= 0) z[edge_to_rel_[e]] = chain[e];
    std::vector<long long> w = mat_vec(v_inv_, z);
    for (int i = 0; i < r1_; ++i)
        if (w[i] != 0) throw std::invalid_argument("homology: chain is not a relative cycle");
    std::vector<long long> bot(w.begin() + r1_, w.end());
    std::vector<long long> u = mat_vec(u2_, bot);
    Coords out;
    for (size_t i = 0; i < factors_.size(); ++i) {
        long long d = factors_[i];
        if (d >= 2) {
            long long r = u[i] % d;
            if (r < 0) r += d;
            out.torsion_part.push_back(r);
        }
    }
    for (size_t i = r2_; i < u.size(); ++i) out.free_part.push_back(u[i]);
    return out;
}

AbelianGroup relative_homology_h1(const CellComplex& c) { return RelativeH1(c).group(); }

AbelianGroup surface_h1(const StoppedSurface& s) {
    s.validate();
    AbelianGroup total;
    for (const auto& comp : s.components) {
        StoppedSurface one;
        one.components.push_back(comp);
        AbelianGroup g = relative_homology_h1(build_cell_complex(canonical_presentation(one)));
        total = total.direct_sum(g);
    }
    return total;
}

}  // namespace cobcalc
