#include "cobcalc/triangulation.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>

namespace cobcalc {

namespace {

bool adjacent_mod(int u, int v, int s) {
    int d = ((v - u) % s + s) % s;
    return d == 1 || d == s - 1;
}

// Strictly between u and v going counterclockwise.
bool between_ccw(int x, int u, int v, int s) {
    int len = (v - u + s) % s;
    int off = (x - u + s) % s;
    return off > 0 && off < len;
}

bool cross(std::pair<int, int> a, std::pair<int, int> b, int s) {
    auto [p, q] = a;
    auto [r, t] = b;
    if (p == r || p == t || q == r || q == t) return false;
    return between_ccw(r, p, q, s) != between_ccw(t, p, q, s);
}

}  // namespace

void Triangulation::validate() const {
    if (polygon < 3) throw std::invalid_argument("triangulation: polygon needs at least 3 stops");
    if (static_cast<int>(diagonals.size()) != polygon - 3)
        throw std::invalid_argument("triangulation: expected " + std::to_string(polygon - 3) + " diagonals");
    for (const auto& d : diagonals) {
        auto [u, v] = d;
        if (u < 0 || v >= polygon || u >= v) throw std::invalid_argument("triangulation: bad diagonal");
        if (adjacent_mod(u, v, polygon)) throw std::invalid_argument("triangulation: diagonal joins adjacent stops");
        for (const auto& e : diagonals)
            if (cross(d, e, polygon)) throw std::invalid_argument("triangulation: crossing diagonals");
    }
}

bool Triangulation::has_diagonal(int u, int v) const {
    if (u > v) std::swap(u, v);
    return diagonals.count({u, v}) > 0;
}

std::vector<std::array<int, 3>> Triangulation::triangles() const {
    auto is_edge = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return adjacent_mod(u, v, polygon) || diagonals.count({u, v}) > 0;
    };
    // In a polygon triangulation every 3-cycle of edges bounds a triangle:
    // the region between three pairwise non-crossing chords holds no vertex.
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < polygon; ++a)
        for (int b = a + 1; b < polygon; ++b) {
            if (!is_edge(a, b)) continue;
            for (int c = b + 1; c < polygon; ++c)
                if (is_edge(b, c) && is_edge(a, c)) out.push_back({a, b, c});
        }
    if (static_cast<int>(out.size()) != polygon - 2) throw std::logic_error("triangulation: face count");
    return out;
}

std::string Triangulation::key() const {
    std::string k;
    for (const auto& [u, v] : diagonals) k += std::to_string(u) + "-" + std::to_string(v) + ";";
    return k;
}

Triangulation Triangulation::fan(int s, int apex) {
    Triangulation t;
    t.polygon = s;
    for (int k = 2; k < s - 1; ++k) {
        int u = apex % s, v = (apex + k) % s;
        if (u > v) std::swap(u, v);
        t.diagonals.insert({u, v});
    }
    t.validate();
    return t;
}

Triangulation flip(const Triangulation& t, std::pair<int, int> diagonal) {
    auto [u, v] = diagonal;
    if (u > v) std::swap(u, v);
    if (!t.diagonals.count({u, v}))
        throw std::invalid_argument("flip: not a diagonal of this triangulation");
    std::vector<int> opposite;
    for (const auto& tri : t.triangles()) {
        bool has_u = tri[0] == u || tri[1] == u || tri[2] == u;
        bool has_v = tri[0] == v || tri[1] == v || tri[2] == v;
        if (has_u && has_v)
            for (int x : tri)
                if (x != u && x != v) opposite.push_back(x);
    }
    if (opposite.size() != 2) throw std::logic_error("flip: diagonal not shared by two triangles");
    int a = std::min(opposite[0], opposite[1]);
    int b = std::max(opposite[0], opposite[1]);
    Triangulation out = t;
    out.diagonals.erase({u, v});
    out.diagonals.insert({a, b});
    out.validate();
    return out;
}

bool FlipGraph::connected() const {
    if (vertices.empty()) return true;
    std::vector<std::vector<int>> adj(vertices.size());
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(vertices.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++count;
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
    }
    return count == static_cast<int>(vertices.size());
}

std::string FlipGraph::to_dot() const {
    std::string s = "graph flips {\n";
    for (size_t i = 0; i < vertices.size(); ++i) {
        std::string label = vertices[i].key();
        if (label.empty()) label = "(none)";
        s += "  t" + std::to_string(i) + " [label=\"" + label + "\"];\n";
    }
    for (auto [a, b] : edges) s += "  t" + std::to_string(a) + " -- t" + std::to_string(b) + ";\n";
    s += "}\n";
    return s;
}

FlipGraph flip_graph(int s) {
    if (s < 3) throw std::invalid_argument("flip_graph: polygon needs at least 3 stops");
    // Enumerate triangulations of the fan sub-polygons recursively: in every
    // triangulation the side (0, s-1) lies in a triangle (0, k, s-1).
    std::map<std::pair<int, int>, std::vector<std::set<std::pair<int, int>>>> memo;
    auto chord = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return std::make_pair(u, v);
    };
    std::function<std::vector<std::set<std::pair<int, int>>>(int, int)> enumerate =
        [&](int lo, int hi) -> std::vector<std::set<std::pair<int, int>>> {
        if (hi - lo < 2) return {{}};
        auto it = memo.find({lo, hi});
        if (it != memo.end()) return it->second;
        std::vector<std::set<std::pair<int, int>>> result;
        for (int k = lo + 1; k < hi; ++k) {
            auto left = enumerate(lo, k);
            auto right = enumerate(k, hi);
            for (const auto& l : left)
                for (const auto& r : right) {
                    std::set<std::pair<int, int>> d = l;
                    d.insert(r.begin(), r.end());
                    if (k - lo > 1) d.insert(chord(lo, k));
                    if (hi - k > 1) d.insert(chord(k, hi));
                    result.push_back(std::move(d));
                }
        }
        memo[{lo, hi}] = result;
        return result;
    };

    FlipGraph graph;
    graph.polygon = s;
    std::map<std::string, int> index;
    for (auto& diag : enumerate(0, s - 1)) {
        Triangulation t;
        t.polygon = s;
        t.diagonals = std::move(diag);
        t.validate();
        index[t.key()] = static_cast<int>(graph.vertices.size());
        graph.vertices.push_back(std::move(t));
    }
    std::set<std::pair<int, int>> edge_set;
    for (int i = 0; i < static_cast<int>(graph.vertices.size()); ++i) {
        for (const auto& d : graph.vertices[i].diagonals) {
            Triangulation f = flip(graph.vertices[i], d);
            int j = index.at(f.key());
            edge_set.insert({std::min(i, j), std::max(i, j)});
        }
    }
    graph.edges.assign(edge_set.begin(), edge_set.end());
    return graph;
}

long long catalan(int n) {
    long long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

}  // namespace cobcalc
