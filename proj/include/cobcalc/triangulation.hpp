#pragma once

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cobcalc {

// Diagonal triangulation of the s-gon whose vertices are the stops 0..s-1 of
// a stopped disk. Exactly s-3 pairwise non-crossing diagonals.
struct Triangulation {
    int polygon = 0;  // s >= 3
    std::set<std::pair<int, int>> diagonals;  // (u, v) with u < v

    void validate() const;
    bool has_diagonal(int u, int v) const;
    std::vector<std::array<int, 3>> triangles() const;
    std::string key() const;

    static Triangulation fan(int s, int apex);
};

// Replaces `diagonal` by the other diagonal of the quadrilateral around it.
Triangulation flip(const Triangulation& t, std::pair<int, int> diagonal);

struct FlipGraph {
    int polygon = 0;
    std::vector<Triangulation> vertices;
    std::vector<std::pair<int, int>> edges;  // indices into `vertices`

    bool connected() const;
    std::string to_dot() const;
};

// All triangulations of the s-gon, adjacent when one flip apart. C(s-2)
// vertices (Catalan); connected.
FlipGraph flip_graph(int s);

long long catalan(int n);

}  // namespace cobcalc
