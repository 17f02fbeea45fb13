#include "cobcalc/glued_complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cobcalc {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

GluedComplex::GluedComplex(const PolygonPresentation& p) {
    p.validate();
    std::map<std::string, int> count;
    for (const auto& e : p.word) count[e.label]++;

    std::map<std::string, int> by_label;
    Region r;
    for (int i = 0; i < p.size(); ++i) {
        const auto& e = p.word[i];
        int sid;
        auto it = by_label.find(e.label);
        if (it != by_label.end()) {
            sid = it->second;
        } else {
            Side s;
            s.name = e.label;
            if (count[e.label] == 2) {
                s.kind = SideKind::Interior;
            } else {
                auto seg = p.segment_of.find(e.label);
                if (seg == p.segment_of.end())
                    throw std::invalid_argument("complex: free side '" + e.label + "' has no segment record");
                s.kind = SideKind::Boundary;
                s.circle = seg->second.first;
                s.segment = seg->second.second;
            }
            sid = new_side(s);
            by_label[e.label] = sid;
        }
        r.occs.push_back({sid, e.inverse ? -1 : +1});
        r.corners.push_back(new_corner(p.stop_corners.count(i) > 0));
    }
    regions_.push_back(std::move(r));
}

int GluedComplex::new_corner(bool stop) {
    corner_stop_.push_back(stop);
    return static_cast<int>(corner_stop_.size()) - 1;
}

int GluedComplex::new_side(const Side& s) {
    sides_.push_back(s);
    return static_cast<int>(sides_.size()) - 1;
}

std::vector<std::pair<int, int>> GluedComplex::occurrences(int side_id) const {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < static_cast<int>(regions_.size()); ++r) {
        if (!regions_[r].alive) continue;
        for (int i = 0; i < static_cast<int>(regions_[r].occs.size()); ++i)
            if (regions_[r].occs[i].side == side_id) out.push_back({r, i});
    }
    return out;
}

bool GluedComplex::corner_alive(int id) const {
    for (const auto& r : regions_) {
        if (!r.alive) continue;
        for (int c : r.corners)
            if (c == id) return true;
    }
    return false;
}

GluedComplex::Wedge GluedComplex::find_corner(int corner_id) const {
    for (int r = 0; r < static_cast<int>(regions_.size()); ++r) {
        if (!regions_[r].alive) continue;
        for (int i = 0; i < static_cast<int>(regions_[r].corners.size()); ++i)
            if (regions_[r].corners[i] == corner_id) return {r, i};
    }
    throw std::logic_error("complex: corner not found");
}

int GluedComplex::resolve_end(int side_id, bool head) const {
    int s = side_id;
    while (!sides_[s].alive) {
        int next = head ? sides_[s].child_head : sides_[s].child_tail;
        if (next < 0) throw std::logic_error("complex: side end has no descendant");
        s = next;
    }
    return s;
}

GluedComplex::SplitResult GluedComplex::split_side(int side_id) {
    Side& old = sides_[side_id];
    if (!old.alive) throw std::logic_error("complex: splitting a dead side");
    if (old.kind == SideKind::Cut) throw std::logic_error("complex: splitting a cut bank");

    Side part = old;
    part.child_tail = part.child_head = -1;
    SplitResult res;
    res.first = new_side(part);   // tail part
    res.second = new_side(part);  // head part

    auto occ = occurrences(side_id);
    // Process later positions first so earlier positions stay valid when both
    // occurrences share a region.
    std::sort(occ.begin(), occ.end(), [](auto a, auto b) {
        return a.first != b.first ? a.first < b.first : a.second > b.second;
    });
    for (auto [r, i] : occ) {
        Region& reg = regions_[r];
        int dir = reg.occs[i].dir;
        int c = new_corner(false);
        if (dir > 0) {
            reg.occs[i] = {res.first, +1};
            reg.occs.insert(reg.occs.begin() + i + 1, {res.second, +1});
            reg.corners.insert(reg.corners.begin() + i + 1, c);
            res.corner_plus = c;
        } else {
            reg.occs[i] = {res.second, -1};
            reg.occs.insert(reg.occs.begin() + i + 1, {res.first, -1});
            reg.corners.insert(reg.corners.begin() + i + 1, c);
            res.corner_minus = c;
        }
    }

    Side& dead = sides_[side_id];
    dead.alive = false;
    dead.child_tail = res.first;
    dead.child_head = res.second;
    return res;
}

GluedComplex::FanWalk GluedComplex::fan_walk(Wedge start, bool cross_forward) const {
    FanWalk walk;
    walk.wedges.push_back(start);
    Wedge cur = start;
    bool forward = cross_forward;
    const int guard = 4 * static_cast<int>(corner_stop_.size()) + 8;
    for (int step = 0; step < guard; ++step) {
        const Region& reg = regions_[cur.region];
        const int m = static_cast<int>(reg.occs.size());
        int opos = forward ? cur.pos : (cur.pos - 1 + m) % m;
        const Occ& o = reg.occs[opos];
        const Side& s = sides_[o.side];
        if (s.kind != SideKind::Interior) {
            walk.terminal_side = o.side;
            walk.terminal_at_start = forward;
            walk.terminal_region = cur.region;
            walk.terminal_pos = opos;
            return walk;
        }
        // Intrinsic end of the side sitting at this vertex.
        bool end_is_head = forward ? (o.dir < 0) : (o.dir > 0);
        auto occ = occurrences(o.side);
        if (occ.size() != 2) throw std::logic_error("complex: interior side without partner");
        auto [r2, j] = (occ[0] == std::make_pair(cur.region, opos)) ? occ[1] : occ[0];
        const Region& reg2 = regions_[r2];
        int dir2 = reg2.occs[j].dir;
        int m2 = static_cast<int>(reg2.occs.size());
        if (m2 < 2) throw std::logic_error("complex: degenerate region");
        int raw = (end_is_head == (dir2 > 0)) ? j + 1 : j;
        Wedge next{r2, raw % m2};
        bool entered_forward = (raw == j);

        Crossing cr;
        cr.side = o.side;
        cr.from = cur;
        cr.into = next;
        cr.from_dir = o.dir;
        cr.into_dir = dir2;
        cr.end_is_head = end_is_head;
        walk.crossings.push_back(cr);
        walk.wedges.push_back(next);

        cur = next;
        forward = !entered_forward;
    }
    throw std::logic_error("complex: fan walk did not terminate");
}

int GluedComplex::cut_dual(const std::string& pair_label) {
    // Linking-arc cuts may have chipped stubs off this edge near its endpoint
    // stops; the push-off runs along the main part, so skip tips.
    int side_id = -1;
    for (int i = 0; i < static_cast<int>(sides_.size()); ++i)
        if (sides_[i].alive && !sides_[i].tip && sides_[i].kind == SideKind::Interior &&
            sides_[i].name == pair_label) {
            if (side_id >= 0) throw std::logic_error("cut_dual: ambiguous main part of '" + pair_label + "'");
            side_id = i;
        }
    if (side_id < 0) throw std::invalid_argument("cut_dual: no identified pair '" + pair_label + "'");

    int arc_id = static_cast<int>(arcs_.size());
    ArcInfo info;
    info.kind = ArcInfo::Kind::Dual;
    info.pair_label = pair_label;
    info.legs = 1;
    arcs_.push_back(info);

    auto occ = occurrences(side_id);
    if (occ.size() != 2) throw std::logic_error("cut_dual: pair without two occurrences");
    for (auto [r, i] : occ) {
        Side bank;
        bank.kind = SideKind::Cut;
        bank.arc = arc_id;
        bank.name = pair_label + "'";
        int bid = new_side(bank);
        regions_[r].occs[i].side = bid;  // dir preserved: +1 bank and -1 bank
    }
    sides_[side_id].alive = false;
    return arc_id;
}

void GluedComplex::cut_chord(int corner_a, int corner_b, int arc_id) {
    Wedge wa = find_corner(corner_a);
    Wedge wb = find_corner(corner_b);
    if (wa.region != wb.region) throw std::logic_error("cut_chord: corners in different regions");
    if (wa.pos == wb.pos) throw std::logic_error("cut_chord: coincident corners");
    if (corner_stop_[corner_a] || corner_stop_[corner_b])
        throw std::invalid_argument("cut_chord: arc endpoint on a stop");

    Region& old = regions_[wa.region];
    const int m = static_cast<int>(old.occs.size());
    int i = wa.pos, j = wb.pos;

    Side bankA, bankB;
    bankA.kind = bankB.kind = SideKind::Cut;
    bankA.arc = bankB.arc = arc_id;
    bankA.name = bankB.name = "cut" + std::to_string(arc_id);
    int sA = new_side(bankA);
    int sB = new_side(bankB);

    // Piece A holds occs i..j-1 and walks the chord against its orientation
    // (the chord is oriented corner_a -> corner_b); piece B walks it along.
    Region pieceA, pieceB;
    pieceA.corners.push_back(new_corner(false));  // copy of corner_a
    for (int k = i; k != j; k = (k + 1) % m) {
        pieceA.occs.push_back(old.occs[k]);
        if (k != i) pieceA.corners.push_back(old.corners[k]);
    }
    pieceA.corners.push_back(new_corner(false));  // copy of corner_b
    pieceA.occs.push_back({sA, -1});

    pieceB.corners.push_back(new_corner(false));  // copy of corner_b
    for (int k = j; k != i; k = (k + 1) % m) {
        pieceB.occs.push_back(old.occs[k]);
        if (k != j) pieceB.corners.push_back(old.corners[k]);
    }
    pieceB.corners.push_back(new_corner(false));  // copy of corner_a
    pieceB.occs.push_back({sB, +1});

    old.alive = false;
    regions_.push_back(std::move(pieceA));
    regions_.push_back(std::move(pieceB));
}

int GluedComplex::cut_linking(int corner_id) {
    if (!corner_stop_[corner_id]) throw std::invalid_argument("cut_linking: corner is not a stop");
    Wedge w0 = find_corner(corner_id);

    FanWalk ahead = fan_walk(w0, true);    // toward the segment after the stop
    FanWalk behind = fan_walk(w0, false);  // toward the segment before the stop
    if (sides_[ahead.terminal_side].kind != SideKind::Boundary ||
        sides_[behind.terminal_side].kind != SideKind::Boundary)
        throw std::logic_error("cut_linking: stop fan does not end on boundary segments");

    int arc_id = static_cast<int>(arcs_.size());
    ArcInfo info;
    info.kind = ArcInfo::Kind::Linking;
    info.stop_corner = corner_id;
    info.legs = static_cast<int>(ahead.crossings.size() + behind.crossings.size()) + 1;
    arcs_.push_back(info);

    // Both walks contribute crossings; route from the before-segment around
    // the stop to the after-segment: reversed `behind` then `ahead`.
    // Terminal of `behind` is region-end of a boundary occurrence (dir +1),
    // so the vertex sits at that side's head; for `ahead` at its tail.
    int side_before = behind.terminal_side;
    int side_after = ahead.terminal_side;

    SplitResult spB = split_side(side_before);
    int start_corner = spB.corner_plus;
    int end_side = resolve_end(side_after, /*head=*/false);
    SplitResult spA = split_side(end_side);
    int end_corner = spA.corner_plus;

    std::vector<Crossing> route;
    for (auto it = behind.crossings.rbegin(); it != behind.crossings.rend(); ++it) route.push_back(*it);
    // A crossing from `ahead` is approached from its `from` flank when
    // travelling toward the after-segment.
    for (const auto& cr : ahead.crossings) {
        Crossing flipped = cr;
        std::swap(flipped.from, flipped.into);
        std::swap(flipped.from_dir, flipped.into_dir);
        route.push_back(flipped);
    }

    int prev = start_corner;
    for (const auto& cr : route) {
        int side_now = resolve_end(cr.side, cr.end_is_head);
        SplitResult sp = split_side(side_now);
        // The stub between the crossing point and the stop vertex is not part
        // of the edge's main course any more.
        sides_[cr.end_is_head ? sp.second : sp.first].tip = true;
        // Route approaches the crossing on its `into` flank (walks recorded
        // outward from the stop corner; the route travels inward).
        int approach = (cr.into_dir > 0) ? sp.corner_plus : sp.corner_minus;
        int depart = (cr.from_dir > 0) ? sp.corner_plus : sp.corner_minus;
        cut_chord(prev, approach, arc_id);
        prev = depart;
    }
    cut_chord(prev, end_corner, arc_id);
    return arc_id;
}

GluedComplex::Tracing GluedComplex::trace() const {
    const int nc = num_corners();
    UnionFind uf(nc);
    std::vector<bool> used(nc, false);
    for (const auto& reg : regions_) {
        if (!reg.alive) continue;
        for (int c : reg.corners) used[c] = true;
    }
    for (int s = 0; s < static_cast<int>(sides_.size()); ++s) {
        if (!sides_[s].alive || sides_[s].kind != SideKind::Interior) continue;
        auto occ = occurrences(s);
        if (occ.size() != 2) throw std::logic_error("trace: interior side without partner");
        auto plus = occ[0], minus = occ[1];
        if (regions_[plus.first].occs[plus.second].dir < 0) std::swap(plus, minus);
        const auto& ra = regions_[plus.first];
        const auto& rb = regions_[minus.first];
        int mA = static_cast<int>(ra.corners.size());
        int mB = static_cast<int>(rb.corners.size());
        // Intrinsic tail: region-start of the + occurrence, region-end of the
        // - occurrence; intrinsic head the other way around.
        uf.unite(ra.corners[plus.second], rb.corners[(minus.second + 1) % mB]);
        uf.unite(ra.corners[(plus.second + 1) % mA], rb.corners[minus.second]);
    }

    Tracing t;
    t.corner_class.assign(nc, -1);
    std::map<int, int> ids;
    for (int c = 0; c < nc; ++c) {
        if (!used[c]) continue;
        int root = uf.find(c);
        auto it = ids.find(root);
        if (it == ids.end()) it = ids.emplace(root, static_cast<int>(ids.size())).first;
        t.corner_class[c] = it->second;
    }
    t.num_classes = static_cast<int>(ids.size());
    t.class_is_stop.assign(t.num_classes, false);
    for (int c = 0; c < nc; ++c)
        if (used[c] && corner_stop_[c]) t.class_is_stop[t.corner_class[c]] = true;
    return t;
}

std::vector<GluedComplex::Piece> GluedComplex::pieces() const {
    const int nr = static_cast<int>(regions_.size());
    UnionFind uf(nr);
    for (int s = 0; s < static_cast<int>(sides_.size()); ++s) {
        if (!sides_[s].alive || sides_[s].kind != SideKind::Interior) continue;
        auto occ = occurrences(s);
        if (occ.size() == 2) uf.unite(occ[0].first, occ[1].first);
    }

    Tracing t = trace();

    std::map<int, int> piece_of_root;
    std::vector<Piece> out;
    std::vector<int> region_piece(nr, -1);
    for (int r = 0; r < nr; ++r) {
        if (!regions_[r].alive) continue;
        int root = uf.find(r);
        auto it = piece_of_root.find(root);
        if (it == piece_of_root.end()) {
            it = piece_of_root.emplace(root, static_cast<int>(out.size())).first;
            out.push_back({});
        }
        region_piece[r] = it->second;
        out[it->second].regions.push_back(r);
    }

    for (Piece& piece : out) {
        std::set<int> side_set;
        std::set<int> classes;
        int stops = 0;
        std::map<int, long long> coef;
        for (int r : piece.regions) {
            const Region& reg = regions_[r];
            for (const Occ& o : reg.occs) {
                side_set.insert(o.side);
                if (sides_[o.side].kind == SideKind::Cut) coef[sides_[o.side].arc] += o.dir;
            }
            for (int c : reg.corners) {
                classes.insert(t.corner_class[c]);
                if (corner_stop_[c]) {
                    ++stops;
                    piece.stop_corners.push_back(c);
                }
            }
        }
        piece.chi = static_cast<int>(classes.size()) - static_cast<int>(side_set.size()) +
                    static_cast<int>(piece.regions.size());
        piece.stops = stops;
        for (auto& [arc, total] : coef) {
            int legs = arcs_[arc].legs;
            if (total % legs != 0) throw std::logic_error("pieces: inconsistent arc bank traversal");
            piece.arc_coefficients[arc] = total / legs;
        }

        // Count boundary cycles by hopping from the head of one non-interior
        // occurrence around its vertex fan to the next.
        std::set<std::pair<int, int>> slots;
        for (int r : piece.regions) {
            const Region& reg = regions_[r];
            for (int i = 0; i < static_cast<int>(reg.occs.size()); ++i)
                if (sides_[reg.occs[i].side].kind != SideKind::Interior) slots.insert({r, i});
        }
        int cycles = 0;
        std::set<std::pair<int, int>> seen;
        for (const auto& s0 : slots) {
            if (seen.count(s0)) continue;
            ++cycles;
            std::pair<int, int> cur = s0;
            do {
                seen.insert(cur);
                const Region& reg = regions_[cur.first];
                int m = static_cast<int>(reg.occs.size());
                FanWalk w = fan_walk({cur.first, (cur.second + 1) % m}, true);
                cur = {w.terminal_region, w.terminal_pos};
            } while (cur != s0);
        }
        piece.boundary_circles = cycles;
        int two_g = 2 - piece.chi - piece.boundary_circles;
        if (two_g < 0 || two_g % 2 != 0) throw std::logic_error("pieces: non-orientable bookkeeping");
        piece.genus = two_g / 2;
        piece.is_disk = (piece.chi == 1);
    }
    return out;
}

int GluedComplex::total_chi() const {
    int chi = 0;
    for (const Piece& p : pieces()) chi += p.chi;
    return chi;
}

}  // namespace cobcalc
