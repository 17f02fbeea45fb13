#include "cobcalc/disk_category.hpp"

#include <stdexcept>

namespace cobcalc {

bool DiskArc::operator==(const DiskArc& o) const {
    return (end_a == o.end_a && end_b == o.end_b) || (end_a == o.end_b && end_b == o.end_a);
}

bool is_zero_object(const DiskArc& arc) { return arc.end_a == arc.end_b; }

std::vector<DiskArc> linking_disks(const StoppedDisk& disk) {
    std::vector<DiskArc> out;
    for (int j = 0; j <= disk.n; ++j) out.push_back({j, disk.mod(j + 1)});
    return out;
}

long long degree(int j, const GradingAssignment& g) {
    int n = g.n();
    if (n < 0) throw std::invalid_argument("degree: empty grading assignment");
    int jn = ((j % (n + 1)) + (n + 1)) % (n + 1);
    return (g.d[(jn + 1) % (n + 1)] - g.d[jn]).ceil();
}

long long degree_opposite(int j, const GradingAssignment& g) {
    int n = g.n();
    int jn = ((j % (n + 1)) + (n + 1)) % (n + 1);
    return (g.d[jn] - g.d[(jn + 1) % (n + 1)]).ceil();
}

std::vector<long long> degree_vector(const GradingAssignment& g) {
    std::vector<long long> v;
    for (int j = 0; j <= g.n(); ++j) v.push_back(degree(j, g));
    return v;
}

GradingAssignment standard_gradings(int n) {
    if (n < 1) throw std::invalid_argument("standard_gradings: n >= 1 required");
    GradingAssignment g;
    g.d.push_back(Rational(0));
    for (int j = 1; j <= n; ++j) g.d.push_back(Rational(2 * (j - 1) - (n - 1), 2 * n));
    return g;
}

GradingAssignment opposite_standard_gradings(int n) {
    GradingAssignment g = standard_gradings(n);
    for (auto& x : g.d) x = -x;
    return g;
}

GradingAssignment triangle_gradings_w2() {
    GradingAssignment g;
    g.d = {Rational(0), Rational(1, 2), Rational(1, 4)};
    return g;
}

bool is_triangle_grading(const GradingAssignment& g) {
    return g.n() == 2 && degree_vector(g) == std::vector<long long>{1, 0, 0};
}

std::string MorphismGenerator::str() const {
    if (kind == Kind::Identity) return "1_{D" + std::to_string(index) + "}";
    return "a" + std::to_string(index);
}

int hom_rank(int j, int k, const StoppedDisk& disk) {
    if (disk.n < 2)
        throw std::domain_error(
            "hom_rank: morphism space ranks are only stated for n >= 2; "
            "the two-stop disk is out of range");
    int jj = disk.mod(j), kk = disk.mod(k);
    return (kk == jj || kk == disk.mod(jj + 1)) ? 1 : 0;
}

long long generator_degree(const MorphismGenerator& m, const GradingAssignment& g) {
    if (m.kind == MorphismGenerator::Kind::Identity) return 0;
    return degree(m.index, g);
}

namespace {

int source_of(const MorphismGenerator& m) { return m.index; }
int target_of(const MorphismGenerator& m, const StoppedDisk& disk) {
    return m.kind == MorphismGenerator::Kind::Identity ? m.index : disk.mod(m.index + 1);
}

}  // namespace

std::optional<MorphismGenerator> mu(const std::vector<MorphismGenerator>& inputs, const GradingAssignment& g,
                                    const StoppedDisk& disk) {
    if (inputs.empty()) throw std::invalid_argument("mu: empty input list");
    if (g.n() != disk.n) throw std::invalid_argument("mu: grading assignment size mismatch");
    // inputs[k-1] is the first morphism applied; source of each entry must be
    // the target of the one to its right.
    for (size_t i = 0; i + 1 < inputs.size(); ++i)
        if (source_of(inputs[i]) != target_of(inputs[i + 1], disk))
            throw std::invalid_argument("mu: inputs are not composable");

    const int k = static_cast<int>(inputs.size());
    if (k == 1) return std::nullopt;  // no differential

    int identities = 0;
    for (const auto& m : inputs)
        if (m.kind == MorphismGenerator::Kind::Identity) ++identities;
    if (identities > 0) {
        if (k == 2) return inputs[0].kind == MorphismGenerator::Kind::Identity ? inputs[1] : inputs[0];
        return std::nullopt;  // strict unitality kills higher products
    }

    // All chords: composability makes them a_{j+k-1}, .., a_j. The full cycle
    // gives the identity exactly when the degrees add up to n - 1.
    if (k != disk.n + 1) return std::nullopt;
    long long total = 0;
    for (const auto& m : inputs) total += generator_degree(m, g);
    if (total != disk.n - 1) return std::nullopt;
    return MorphismGenerator::identity(source_of(inputs.back()));
}

UniversalTriangle universal_triangle() {
    UniversalTriangle t;
    t.gradings = triangle_gradings_w2();
    auto D = [](int j, int shift = 0) { return ConeExpr::leaf(GradedObject("D" + std::to_string(j), shift)); };
    t.d0 = {GradedObject("D0"), ConeExpr::cone(D(1), D(2), MorphLabel("a1"))};
    t.d1_up = {GradedObject("D1", 1), ConeExpr::cone(D(2), D(0), MorphLabel("a2"))};
    t.d2 = {GradedObject("D2"), ConeExpr::cone(D(0, -1), D(1), MorphLabel("a0", true, -1))};
    return t;
}

ConeStatement rotate_statement(const ConeStatement& s) {
    if (s.expr->is_leaf() || !s.expr->src()->is_leaf())
        throw std::invalid_argument("rotate_statement: expected target ~= [X -> Y] with X a leaf");
    ConeStatement out;
    out.target = s.expr->src()->object().shifted(1);
    out.expr = ConeExpr::cone(s.expr->tgt(), ConeExpr::leaf(s.target));
    return out;
}

UniversalDecomposition universal_decomposition(const StoppedDisk& disk) {
    const int n = disk.n;
    UniversalDecomposition u;

    std::vector<GradedObject> parts;
    for (int j = n; j >= 1; --j) parts.push_back(GradedObject("D" + std::to_string(j)));
    u.decomposition = standard_decomposition(GradedObject("D0"), std::move(parts));

    GradingAssignment g = standard_gradings(n);
    for (int j = 1; j <= n; ++j) {
        u.intermediate_arcs.push_back({0, j});
        if (n == 1)
            u.intermediate_grades.push_back(g.d[0]);
        else
            u.intermediate_grades.push_back(g.d[0] + (g.d[n] - g.d[0]) * Rational(j - 1, n - 1));
    }
    for (int j = 2; j <= n; ++j) {
        ConeStatement step;
        step.target = GradedObject("alpha" + std::to_string(j - 1));
        ConeExpr::Ptr tail = (j == n) ? ConeExpr::leaf(GradedObject("D" + std::to_string(n)))
                                      : ConeExpr::leaf(GradedObject("alpha" + std::to_string(j)));
        step.expr = ConeExpr::cone(ConeExpr::leaf(GradedObject("D" + std::to_string(j - 1), -1)), tail);
        u.steps.push_back(std::move(step));
    }
    return u;
}

namespace {

void collect_chords(const ConeExpr::Ptr& e, int base, bool is_root, std::set<std::pair<int, int>>& out) {
    if (e->is_leaf()) return;
    int total = e->num_leaves();
    if (!is_root) out.insert({base, base + total});
    int nl = e->src()->num_leaves();
    collect_chords(e->src(), base, false, out);
    collect_chords(e->tgt(), base + nl, false, out);
}

// Rewrites the unique non-root node spanning `diag` by one rotation at its
// parent. Returns null when the diagonal is not below this node.
ConeExpr::Ptr flip_below(const ConeExpr::Ptr& e, int base, std::pair<int, int> diag) {
    if (e->is_leaf()) return nullptr;
    int nl = e->src()->num_leaves();
    int total = e->num_leaves();
    if (!e->src()->is_leaf() && std::make_pair(base, base + nl) == diag) return rotate(e);
    if (!e->tgt()->is_leaf() && std::make_pair(base + nl, base + total) == diag) return rotate_inverse(e);
    if (ConeExpr::Ptr s = flip_below(e->src(), base, diag)) return ConeExpr::cone(s, e->tgt(), e->label());
    if (ConeExpr::Ptr t = flip_below(e->tgt(), base + nl, diag)) return ConeExpr::cone(e->src(), t, e->label());
    return nullptr;
}

}  // namespace

Triangulation dual_triangulation(const IteratedDecomposition& d, int polygon) {
    if (polygon != d.expr->num_leaves() + 1)
        throw std::invalid_argument("dual_triangulation: polygon size must be #leaves + 1");
    Triangulation t;
    t.polygon = polygon;
    std::set<std::pair<int, int>> chords;
    collect_chords(d.expr, 0, true, chords);
    t.diagonals = std::move(chords);
    t.validate();
    return t;
}

IteratedDecomposition bracket_flip(const IteratedDecomposition& d, std::pair<int, int> diagonal, int polygon) {
    Triangulation t = dual_triangulation(d, polygon);
    auto [u, v] = diagonal;
    if (u > v) std::swap(u, v);
    if (!t.has_diagonal(u, v))
        throw std::invalid_argument("bracket_flip: not a diagonal of the current bracketing");
    ConeExpr::Ptr flipped = flip_below(d.expr, 0, {u, v});
    if (!flipped) throw std::logic_error("bracket_flip: diagonal present but no bracket found");
    IteratedDecomposition out = d;
    out.expr = std::move(flipped);
    return out;
}

}  // namespace cobcalc
