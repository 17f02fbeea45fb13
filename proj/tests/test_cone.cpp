#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cobcalc/cone_expr.hpp"
#include "cobcalc/decomposition.hpp"

using namespace cobcalc;

namespace {

ConeExpr::Ptr L(const std::string& name, int shift = 0) { return ConeExpr::leaf({name, shift}); }

ConeExpr::Ptr random_expr(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> label(0, 4);
    std::uniform_int_distribution<int> shift(-3, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    if (depth == 0 || coin(rng) == 0) return L("X" + std::to_string(label(rng)), shift(rng));
    return ConeExpr::cone(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
}

}  // namespace

TEST_CASE("shift_expr") {
    CHECK(print_expr(shift_expr(L("A"), 1)) == "A[1]");
    CHECK(print_expr(shift_expr(ConeExpr::cone(L("X"), L("Y")), -1)) == "[X[-1] -> Y[-1]]");
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        ConeExpr::Ptr e = random_expr(rng, 4);
        CHECK(same_shape(shift_expr(shift_expr(e, 2), -2), e));
        // shifting negates K0 per parity
        CHECK(k0_class(shift_expr(e, 3)) == -k0_class(e));
        CHECK(k0_class(shift_expr(e, 2)) == k0_class(e));
    }
}

TEST_CASE("k0_class pinned values") {
    // [A2[-1] -> A1]  ->  A1 + A2
    K0Class k = k0_class(ConeExpr::cone(L("A2", -1), L("A1")));
    CHECK(k.coeff("A1") == 1);
    CHECK(k.coeff("A2") == 1);

    CHECK(k0_class(L("A", 1)).coeff("A") == -1);

    // [[X -> Y] -> Z] -> X - Y + Z
    K0Class k2 = k0_class(ConeExpr::cone(ConeExpr::cone(L("X"), L("Y")), L("Z")));
    CHECK(k2.coeff("X") == 1);
    CHECK(k2.coeff("Y") == -1);
    CHECK(k2.coeff("Z") == 1);

    CHECK(k0_class(L("A")).str() == "A");
    CHECK((k0_class(L("A")) - k0_class(L("A"))).str() == "0");
}

TEST_CASE("rotate and its inverse") {
    ConeExpr::Ptr e = ConeExpr::cone(ConeExpr::cone(L("X"), L("Y")), L("Z"));
    ConeExpr::Ptr r = rotate(e);
    CHECK(print_expr(r) == "[X[1] -> [Y -> Z]]");
    CHECK(same_shape(rotate_inverse(r), e));
    CHECK(k0_class(r) == k0_class(e));

    CHECK_THROWS_AS(rotate(L("A")), std::invalid_argument);
    CHECK_THROWS_AS(rotate(ConeExpr::cone(L("X"), L("Y"))), std::invalid_argument);
    CHECK_THROWS_AS(rotate_inverse(ConeExpr::cone(L("X"), L("Y"))), std::invalid_argument);

    std::mt19937_64 rng(17);
    int done = 0;
    while (done < 1000) {
        ConeExpr::Ptr x = random_expr(rng, 5);
        if (x->is_leaf()) continue;
        if (!x->src()->is_leaf()) {
            ConeExpr::Ptr y = rotate(x);
            CHECK(k0_class(y) == k0_class(x));
            CHECK(same_shape(rotate_inverse(y), x));
            ++done;
        }
        if (!x->tgt()->is_leaf()) {
            ConeExpr::Ptr y = rotate_inverse(x);
            CHECK(k0_class(y) == k0_class(x));
            CHECK(same_shape(rotate(y), x));
            ++done;
        }
    }
}

TEST_CASE("standard decomposition and K0 relation") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> count(1, 10);
    for (int trial = 0; trial < 200; ++trial) {
        int n = count(rng);
        std::vector<GradedObject> parts;
        for (int j = 1; j <= n; ++j) parts.push_back({"A" + std::to_string(j)});
        IteratedDecomposition d = standard_decomposition({"A"}, parts);
        K0Class k = k0_class(d.expr);
        for (int j = 1; j <= n; ++j) CHECK(k.coeff("A" + std::to_string(j)) == 1);
        CHECK(d.relation_row() == K0Class::of("A") - k);
    }

    IteratedDecomposition d3 =
        standard_decomposition({"A"}, {{"A1"}, {"A2"}, {"A3"}});
    CHECK(print_expr(d3.expr) == "[A3[-1] -> [A2[-1] -> A1]]");
}

TEST_CASE("rotate_decomposition") {
    IteratedDecomposition d = standard_decomposition({"A"}, {{"A1"}, {"A2"}});
    IteratedDecomposition r = rotate_decomposition(d);
    CHECK(r.target == GradedObject{"A2"});
    CHECK(r.str() == "A2 ~= [A1 -> A]");
    // K0: A2 = A - A1, the input relation rearranged.
    CHECK(r.relation_row() == -d.relation_row());

    IteratedDecomposition one = standard_decomposition({"A"}, {{"A1"}});
    IteratedDecomposition r1 = rotate_decomposition(one);
    CHECK(r1.str() == "A1 ~= A");

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> count(1, 8);
    std::uniform_int_distribution<int> shift(-2, 2);
    for (int trial = 0; trial < 300; ++trial) {
        int n = count(rng);
        std::vector<GradedObject> parts;
        for (int j = 1; j <= n; ++j) parts.push_back({"A" + std::to_string(j), shift(rng)});
        IteratedDecomposition in = standard_decomposition({"A", shift(rng)}, parts);
        IteratedDecomposition out = rotate_decomposition(in);
        CHECK(out.relation_row() == -in.relation_row());
    }
}

TEST_CASE("compose_decompositions") {
    IteratedDecomposition outer = standard_decomposition({"A"}, {{"A1"}, {"A2"}});
    IteratedDecomposition inner = standard_decomposition({"A2"}, {{"B1"}, {"B2"}});
    IteratedDecomposition both = compose_decompositions(outer, 1, inner);
    REQUIRE(both.parts.size() == 3);
    CHECK(both.parts[0] == GradedObject{"A1"});
    CHECK(both.parts[1] == GradedObject{"B1"});
    CHECK(both.parts[2] == GradedObject{"B2"});
    K0Class k = K0Class::of("A") - K0Class::of("A1") - K0Class::of("B1") - K0Class::of("B2");
    CHECK(both.relation_row() == k);

    // Trivial inner decomposition leaves the outer untouched.
    IteratedDecomposition trivial = standard_decomposition({"A2"}, {{"A2"}});
    IteratedDecomposition same = compose_decompositions(outer, 1, trivial);
    CHECK(same.parts == outer.parts);
    CHECK(same_shape(same.expr, outer.expr));

    // Mismatched labels or shifts are rejected.
    IteratedDecomposition shifted = standard_decomposition({"A2", 1}, {{"B1"}});
    CHECK_THROWS_AS(compose_decompositions(outer, 1, shifted), std::invalid_argument);
    CHECK_THROWS_AS(compose_decompositions(outer, 0, inner), std::invalid_argument);

    // Splicing at disjoint slots commutes, and nesting associates.
    IteratedDecomposition big = standard_decomposition({"T"}, {{"P1"}, {"P2"}, {"P3"}});
    IteratedDecomposition d1 = standard_decomposition({"P1"}, {{"Q1"}, {"Q2"}});
    IteratedDecomposition d3 = standard_decomposition({"P3"}, {{"R1"}});
    IteratedDecomposition ab = compose_decompositions(compose_decompositions(big, 0, d1), 3, d3);
    IteratedDecomposition ba = compose_decompositions(compose_decompositions(big, 2, d3), 0, d1);
    CHECK(ab.parts == ba.parts);

    IteratedDecomposition inner2 = standard_decomposition({"Q2"}, {{"S1"}, {"S2"}});
    IteratedDecomposition left = compose_decompositions(compose_decompositions(big, 0, d1), 1, inner2);
    IteratedDecomposition right = compose_decompositions(big, 0, compose_decompositions(d1, 1, inner2));
    CHECK(left.parts == right.parts);
    CHECK(left.relation_row() == right.relation_row());
}

TEST_CASE("left_associate") {
    IteratedDecomposition two = standard_decomposition({"A"}, {{"A1"}, {"A2"}});
    CHECK(print_expr(left_associate(two)) == "[A2[-1] -> A1]");

    IteratedDecomposition one = standard_decomposition({"A"}, {{"A1"}});
    CHECK(print_expr(left_associate(one)) == "A1");

    IteratedDecomposition three = standard_decomposition({"A"}, {{"A1"}, {"A2"}, {"A3"}});
    CHECK(print_expr(left_associate(three)) == "[[A3[-2] -> A2[-1]] -> A1]");

    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> count(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        int n = count(rng);
        std::vector<GradedObject> parts;
        for (int j = 1; j <= n; ++j) parts.push_back({"A" + std::to_string(j)});
        IteratedDecomposition d = standard_decomposition({"A"}, parts);
        CHECK(k0_class(left_associate(d)) == k0_class(d.expr));
    }
}

TEST_CASE("expression grammar round trip") {
    for (std::string text : {
             "A",
             "A[-3]",
             "[X -> Y]",
             "[X[-1] -> [Y -> Z[2]]]",
             "[D1 -a1-> D2]",
             "[D0[-1] --a0[-1]-> D1]",
             "[[A[1] -f-> B] -g[2]-> C[-1]]",
         }) {
        CHECK(print_expr(parse_expr(text)) == text);
    }
    CHECK_THROWS_AS(parse_expr("[A -> "), std::invalid_argument);
    CHECK_THROWS_AS(parse_expr("A]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expr(""), std::invalid_argument);

    // Morphism labels never affect K0.
    ConeExpr::Ptr with = parse_expr("[D1 -a1-> D2]");
    ConeExpr::Ptr without = parse_expr("[D1 -> D2]");
    CHECK(k0_class(with) == k0_class(without));
    CHECK(same_shape(with, without));
}
