#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cobcalc/cone_expr.hpp"
#include "cobcalc/decomposition.hpp"
#include "cobcalc/rational.hpp"
#include "cobcalc/triangulation.hpp"

namespace cobcalc {

// The disk with n+1 boundary stops, indexed 0..n counterclockwise; segment j
// is the boundary interval between stop j-1 and stop j (mod n+1).
struct StoppedDisk {
    int n = 1;

    StoppedDisk() = default;
    explicit StoppedDisk(int n_) : n(n_) {
        if (n < 1) throw std::invalid_argument("disk: n >= 1 required");
    }
    int stops() const { return n + 1; }
    int mod(int j) const { return ((j % (n + 1)) + (n + 1)) % (n + 1); }
};

// Arc in the stopped disk; isotopy class given by the pair of boundary
// segments holding its ends. Arcs inside a single segment are zero objects.
struct DiskArc {
    int end_a = 0, end_b = 0;  // segment indices

    bool operator==(const DiskArc& o) const;
};

bool is_zero_object(const DiskArc& arc);

// The linking disk D_j straddles stop j (ends on segments j and j+1);
// n+1 of them, counterclockwise.
std::vector<DiskArc> linking_disks(const StoppedDisk& disk);

// Constant phase per linking disk, exact rationals.
struct GradingAssignment {
    std::vector<Rational> d;  // d_0..d_n

    int n() const { return static_cast<int>(d.size()) - 1; }
};

// deg a_j = ceil(d_{j+1} - d_j), indices mod n+1.
long long degree(int j, const GradingAssignment& g);
std::vector<long long> degree_vector(const GradingAssignment& g);

// Clockwise generators a'_j: D_{j+1} -> D_j of the opposite category reuse
// the same ceiling with the ends swapped.
long long degree_opposite(int j, const GradingAssignment& g);

// d_0 = 0, d_j = (2(j-1) - (n-1)) / 2n: degrees (0, 1, .., 1, 0), sum n-1.
GradingAssignment standard_gradings(int n);
// Negated standard gradings realize degrees (0, 1, .., 1, 0) for the a'_j.
GradingAssignment opposite_standard_gradings(int n);

// Degrees (1, 0, 0) on the three-stop disk.
GradingAssignment triangle_gradings_w2();
bool is_triangle_grading(const GradingAssignment& g);

// Identity 1_{D_j} or Reeb chord a_j : D_j -> D_{j+1}.
struct MorphismGenerator {
    enum class Kind { Identity, Chord } kind = Kind::Identity;
    int index = 0;

    static MorphismGenerator identity(int j) { return {Kind::Identity, j}; }
    static MorphismGenerator chord(int j) { return {Kind::Chord, j}; }
    bool operator==(const MorphismGenerator& o) const { return kind == o.kind && index == o.index; }
    std::string str() const;
};

int hom_rank(int j, int k, const StoppedDisk& disk);
long long generator_degree(const MorphismGenerator& m, const GradingAssignment& g);

// A_infinity composition; `inputs` in operation order (rightmost argument
// last, applied first). Strictly unital; the only other nonzero value is the
// full cycle mu^{n+1}(a_{j+n}, .., a_j) = 1_{D_j} when the degrees sum to
// n-1. Returns nullopt for zero. Throws on non-composable input.
std::optional<MorphismGenerator> mu(const std::vector<MorphismGenerator>& inputs, const GradingAssignment& g,
                                    const StoppedDisk& disk);

// A cone statement target ~= expr carrying morphism labels.
struct ConeStatement {
    GradedObject target;
    ConeExpr::Ptr expr;

    std::string str() const { return target.str() + " ~= " + print_expr(expr); }
};

struct UniversalTriangle {
    ConeStatement d0;       // D0 ~= [D1 -a1-> D2]
    ConeStatement d1_up;    // D1[1] ~= [D2 -a2-> D0]
    ConeStatement d2;       // D2 ~= [D0[-1] --a0[-1]-> D1]
    GradingAssignment gradings;
};
UniversalTriangle universal_triangle();

// Rotates target ~= [X -> Y] to X[1] ~= [Y -> target]; the connecting
// morphism label is not tracked.
ConeStatement rotate_statement(const ConeStatement& s);

struct UniversalDecomposition {
    IteratedDecomposition decomposition;        // D0 ~= [D1[-1] -> [.. -> Dn]..]
    std::vector<DiskArc> intermediate_arcs;     // alpha_1..alpha_n
    std::vector<Rational> intermediate_grades;  // interpolated alpha gradings
    std::vector<ConeStatement> steps;           // alpha_{j-1} ~= [D_{j-1}[-1] -> alpha_j]
};
UniversalDecomposition universal_decomposition(const StoppedDisk& disk);

// Dual triangulation of the (n+1)-gon: a proper subexpression spanning
// leaves i..j (1-based) is the chord (i-1, j).
Triangulation dual_triangulation(const IteratedDecomposition& d, int polygon);

// Re-brackets by one rotation: the flipped diagonal leaves the dual
// triangulation and the quadrilateral's other diagonal enters.
IteratedDecomposition bracket_flip(const IteratedDecomposition& d, std::pair<int, int> diagonal, int polygon);

}  // namespace cobcalc
