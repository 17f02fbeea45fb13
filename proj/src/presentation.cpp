#include "cobcalc/presentation.hpp"

#include <algorithm>
#include <numeric>
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

PolygonPresentation::Trace PolygonPresentation::trace_corners() const {
    const int n = size();
    if (n == 0) throw std::invalid_argument("presentation: empty word");

    // Locate the occurrences of every label.
    std::map<std::string, std::vector<int>> occ;
    for (int i = 0; i < n; ++i) occ[word[i].label].push_back(i);

    UnionFind uf(n);
    int edges = 0;
    for (const auto& [label, positions] : occ) {
        if (positions.size() == 1) {
            if (word[positions[0]].inverse)
                throw std::invalid_argument("presentation: free side '" + label + "' written inverted");
            ++edges;
            continue;
        }
        if (positions.size() != 2 || word[positions[0]].inverse == word[positions[1]].inverse)
            throw std::invalid_argument("presentation: label '" + label +
                                        "' must appear once, or twice with opposite orientation");
        int p = word[positions[0]].inverse ? positions[1] : positions[0];
        int q = (p == positions[0]) ? positions[1] : positions[0];
        // Side p maps onto side q reversed: start(p)~end(q), end(p)~start(q),
        // where corner i is the start of side i and corner i+1 its end.
        uf.unite(p, (q + 1) % n);
        uf.unite((p + 1) % n, q);
        ++edges;
    }

    Trace t;
    t.edges = edges;
    std::map<int, int> class_id;
    t.corner_class.resize(n);
    for (int i = 0; i < n; ++i) {
        int root = uf.find(i);
        auto it = class_id.find(root);
        if (it == class_id.end()) it = class_id.emplace(root, static_cast<int>(class_id.size())).first;
        t.corner_class[i] = it->second;
    }
    t.vertices = static_cast<int>(class_id.size());
    t.chi = t.vertices - t.edges + 1;

    t.class_is_stop.assign(t.vertices, false);
    for (int c : stop_corners) {
        if (c < 0 || c >= n) throw std::invalid_argument("presentation: stop corner out of range");
        t.class_is_stop[t.corner_class[c]] = true;
    }

    t.stops_per_circle.assign(surface.num_circles(), 0);
    std::vector<std::set<int>> seen(surface.num_circles());
    for (int i = 0; i < n; ++i) {
        auto it = segment_of.find(word[i].label);
        if (it == segment_of.end()) continue;
        int circle = it->second.first;
        for (int corner : {i, (i + 1) % n}) {
            int cls = t.corner_class[corner];
            if (t.class_is_stop[cls]) seen[circle].insert(cls);
        }
    }
    for (int c = 0; c < surface.num_circles(); ++c)
        t.stops_per_circle[c] = static_cast<int>(seen[c].size());
    return t;
}

void PolygonPresentation::validate() const {
    Trace t = trace_corners();
    if (t.chi != surface.euler_characteristic())
        throw std::invalid_argument("presentation: corner trace chi " + std::to_string(t.chi) +
                                    " != surface chi " + std::to_string(surface.euler_characteristic()));
    int total = 0;
    for (int c : t.stops_per_circle) total += c;
    if (total != static_cast<int>(stop_corners.size()) || total != surface.total_stops())
        throw std::invalid_argument("presentation: stop vertex count mismatch");
    for (int c = 0; c < surface.num_circles(); ++c)
        if (t.stops_per_circle[c] != surface.boundary[c].stops)
            throw std::invalid_argument("presentation: circle " + std::to_string(c) + " carries " +
                                        std::to_string(t.stops_per_circle[c]) + " stop vertices, expected " +
                                        std::to_string(surface.boundary[c].stops));
}

std::string PolygonPresentation::word_str() const {
    std::string s;
    for (const auto& e : word) {
        if (!s.empty()) s += " ";
        s += e.label;
        if (e.inverse) s += "^-1";
    }
    return s;
}

PolygonPresentation canonical_presentation(const StoppedSurface& s) {
    s.validate();
    if (!s.is_connected()) throw std::invalid_argument("canonical_presentation: surface must be connected");
    const ConnectedSurface& c = s.components[0];
    if (c.boundary.empty()) throw std::invalid_argument("canonical_presentation: empty boundary");

    PolygonPresentation p;
    p.surface = c;

    auto push = [&](const std::string& label, bool inv) { p.word.push_back({label, inv}); };
    auto push_circle_sides = [&](int j) {
        int m = std::max(c.boundary[j].stops, 1);
        for (int i = 1; i <= m; ++i) {
            std::string label = "c" + std::to_string(j + 1) + "_" + std::to_string(i);
            if (c.boundary[j].stops >= 1)
                p.stop_corners.insert(static_cast<int>(p.word.size()));  // corner before this side
            p.segment_of[label] = {j, i - 1};
            push(label, false);
        }
    };

    push_circle_sides(0);
    for (int i = 1; i <= c.genus; ++i) {
        std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
        push(a, false);
        push(b, false);
        push(a, true);
        push(b, true);
    }
    for (int j = 1; j < c.num_circles(); ++j) {
        std::string t = "t" + std::to_string(j + 1);
        push(t, false);
        push_circle_sides(j);
        push(t, true);
    }

    p.validate();
    return p;
}

}  // namespace cobcalc
