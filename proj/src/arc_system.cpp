#include "cobcalc/arc_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace cobcalc {

namespace {

void validate_endpoint(const PolygonPresentation& p, std::pair<int, int> end) {
    auto [circle, segment] = end;
    if (circle < 0 || circle >= p.surface.num_circles())
        throw std::invalid_argument("arc: endpoint circle out of range");
    int segs = std::max(p.surface.boundary[circle].stops, 1);
    if (segment < 0 || segment >= segs)
        throw std::invalid_argument("arc: endpoint segment out of range");
}

// Runs all cuts of the system on a fresh complex. Linking arcs go first (they
// must cross the interior edges fanning out of their stop); push-offs then
// simply un-glue what is left of their pair.
GluedComplex cut_all(const PolygonPresentation& p, const ArcSystem& a, std::map<int, std::string>* names) {
    for (const Arc& arc : a.arcs) {
        validate_endpoint(p, arc.end1);
        validate_endpoint(p, arc.end2);
    }
    GluedComplex g(p);
    std::vector<const Arc*> order;
    for (const Arc& arc : a.arcs)
        if (arc.kind == Arc::Kind::Linking) order.push_back(&arc);
    for (const Arc& arc : a.arcs)
        if (arc.kind == Arc::Kind::Dual) order.push_back(&arc);

    int chi = g.total_chi();
    for (const Arc* arc : order) {
        int id;
        if (arc->kind == Arc::Kind::Linking) {
            id = g.cut_linking(arc->stop_corner);
        } else {
            id = g.cut_dual(arc->pair_label);
        }
        if (names) (*names)[id] = arc->name;
        int now = g.total_chi();
        if (now != chi + 1) throw std::logic_error("cut_along: arc did not raise chi by one");
        chi = now;
    }
    return g;
}

std::vector<CutPiece> summarize(const GluedComplex& g, const std::map<int, std::string>& names) {
    std::vector<CutPiece> out;
    for (const auto& piece : g.pieces()) {
        CutPiece c;
        c.chi = piece.chi;
        c.stops = piece.stops;
        c.boundary_circles = piece.boundary_circles;
        c.genus = piece.genus;
        c.is_disk = piece.is_disk;
        c.stop_corners = piece.stop_corners;
        for (const auto& [arc, coef] : piece.arc_coefficients) c.arc_coefficients[names.at(arc)] = coef;
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const CutPiece& a, const CutPiece& b) {
        if (a.chi != b.chi) return a.chi > b.chi;
        return a.stops < b.stops;
    });
    return out;
}

// The two sub-fans at an endpoint vertex of an interior edge, split at the
// edge. The push-off endpoint rests on the terminal boundary side of the
// sub-fan that does not hold the vertex's stop flag.
struct EndpointRest {
    int side = -1;
    bool vertex_at_start = false;  // vertex sits at the side's region-start
};

EndpointRest push_off_rest(const GluedComplex& g, GluedComplex::Wedge corner_wedge, bool edge_is_forward) {
    // Near fan: walk away from the edge; far fan: walk across the edge first.
    GluedComplex::FanWalk near = g.fan_walk(corner_wedge, !edge_is_forward);
    GluedComplex::FanWalk far = g.fan_walk(corner_wedge, edge_is_forward);
    if (far.crossings.empty()) throw std::logic_error("push_off_rest: edge crossing missing");

    auto has_stop = [&](const std::vector<GluedComplex::Wedge>& wedges, size_t from) {
        for (size_t i = from; i < wedges.size(); ++i) {
            const auto& reg = g.region(wedges[i].region);
            if (g.corner_is_stop(reg.corners[wedges[i].pos])) return true;
        }
        return false;
    };
    bool stop_near = has_stop(near.wedges, 0);
    bool stop_far = has_stop(far.wedges, 1);
    if (stop_near && stop_far) throw std::logic_error("push_off_rest: stop flag on both sub-fans");

    // Keep the stop with its sub-fan; rest on the other side. Without a stop
    // the two push-offs are isotopic and the near side is the convention.
    const GluedComplex::FanWalk& chosen = stop_near ? far : near;
    EndpointRest r;
    r.side = chosen.terminal_side;
    r.vertex_at_start = chosen.terminal_at_start;
    return r;
}

std::pair<EndpointRest, EndpointRest> dual_arc_rests(const GluedComplex& g, const std::string& label) {
    int side_id = -1;
    for (int i = 0; i < static_cast<int>(g.all_sides().size()); ++i)
        if (g.side(i).alive && g.side(i).kind == GluedComplex::SideKind::Interior && g.side(i).name == label)
            side_id = i;
    if (side_id < 0) throw std::invalid_argument("dual arc: no identified pair '" + label + "'");
    auto occ = g.occurrences(side_id);
    auto plus = occ[0];
    if (g.region(plus.first).occs[plus.second].dir < 0) plus = occ[1];
    int m = static_cast<int>(g.region(plus.first).occs.size());
    GluedComplex::Wedge tail{plus.first, plus.second};
    GluedComplex::Wedge head{plus.first, (plus.second + 1) % m};
    // At the tail corner the edge is the forward boundary; at the head corner
    // the backward one.
    return {push_off_rest(g, tail, true), push_off_rest(g, head, false)};
}

std::pair<int, int> rest_segment(const GluedComplex& g, const EndpointRest& r) {
    const auto& side = g.side(r.side);
    if (side.kind != GluedComplex::SideKind::Boundary)
        throw std::logic_error("arc endpoint does not rest on a boundary segment");
    return {side.circle, side.segment};
}

}  // namespace

std::vector<CutPiece> cut_along(const PolygonPresentation& p, const ArcSystem& a) {
    std::map<int, std::string> names;
    GluedComplex g = cut_all(p, a, &names);
    return summarize(g, names);
}

bool is_full(const ArcSystem& a, const PolygonPresentation& p) {
    for (const CutPiece& piece : cut_along(p, a))
        if (!piece.is_disk || piece.stops > 1) return false;
    return true;
}

ArcSystem minimal_full_arc_system(const StoppedSurface& surface) {
    surface.validate();
    if (!surface.is_connected()) throw std::invalid_argument("minimal system: surface must be connected");
    if (surface.total_stops() < 1)
        throw std::invalid_argument("minimal system: no minimal full arc system without stops");

    PolygonPresentation p = canonical_presentation(surface);
    GluedComplex g(p);

    ArcSystem sys;

    // Linking arcs for every stop except the first flagged corner.
    std::vector<int> flags(p.stop_corners.begin(), p.stop_corners.end());
    std::sort(flags.begin(), flags.end());
    for (size_t i = 1; i < flags.size(); ++i) {
        int corner = flags[i];
        GluedComplex::Wedge w = g.find_corner(corner);
        GluedComplex::FanWalk ahead = g.fan_walk(w, true);
        GluedComplex::FanWalk behind = g.fan_walk(w, false);
        Arc arc;
        arc.kind = Arc::Kind::Linking;
        arc.stop_corner = corner;
        arc.end1 = rest_segment(g, {behind.terminal_side, behind.terminal_at_start});
        arc.end2 = rest_segment(g, {ahead.terminal_side, ahead.terminal_at_start});
        arc.name = "l" + std::to_string(i);
        sys.arcs.push_back(arc);
    }

    // One push-off per identified pair, in word order of first occurrence.
    std::vector<std::string> pair_labels;
    for (const auto& e : p.word)
        if (!p.is_free(e.label) && std::find(pair_labels.begin(), pair_labels.end(), e.label) == pair_labels.end())
            pair_labels.push_back(e.label);
    for (const std::string& label : pair_labels) {
        auto [tail_rest, head_rest] = dual_arc_rests(g, label);
        Arc arc;
        arc.kind = Arc::Kind::Dual;
        arc.pair_label = label;
        arc.end1 = rest_segment(g, tail_rest);
        arc.end2 = rest_segment(g, head_rest);
        arc.name = "d_" + label;
        sys.arcs.push_back(arc);
    }

    sys.complement = cut_along(p, sys);
    sys.full = true;
    for (const CutPiece& piece : sys.complement)
        if (!piece.is_disk || piece.stops > 1) sys.full = false;
    return sys;
}

std::vector<long long> arc_image_chain(const Arc& arc, const PolygonPresentation& p, const CellComplex& cells) {
    GluedComplex g(p);
    std::vector<long long> chain(cells.num_edges, 0);

    auto add_rest_to_vertex = [&](const EndpointRest& r, long long sign) {
        // `sign` +1: path runs from the segment midpoint toward the vertex.
        auto [circle, segment] = rest_segment(g, r);
        auto [h1, h2] = cells.halves.at({circle, segment});
        if (r.vertex_at_start)
            chain[h1] -= sign;  // mid -> tail against h1
        else
            chain[h2] += sign;  // mid -> head along h2
    };

    if (arc.kind == Arc::Kind::Dual) {
        auto [tail_rest, head_rest] = dual_arc_rests(g, arc.pair_label);
        add_rest_to_vertex(tail_rest, +1);
        chain[cells.interior_edge.at(arc.pair_label)] += 1;
        add_rest_to_vertex(head_rest, -1);
    } else {
        GluedComplex::Wedge w = g.find_corner(arc.stop_corner);
        GluedComplex::FanWalk ahead = g.fan_walk(w, true);
        GluedComplex::FanWalk behind = g.fan_walk(w, false);
        add_rest_to_vertex({behind.terminal_side, behind.terminal_at_start}, +1);
        add_rest_to_vertex({ahead.terminal_side, ahead.terminal_at_start}, -1);
    }
    return chain;
}

}  // namespace cobcalc
