#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cobcalc/disk_category.hpp"

using namespace cobcalc;

TEST_CASE("linking disks and zero objects") {
    StoppedDisk w2(2);
    auto disks = linking_disks(w2);
    REQUIRE(disks.size() == 3);
    CHECK(disks[0] == DiskArc{0, 1});
    CHECK(disks[1] == DiskArc{1, 2});
    CHECK(disks[2] == DiskArc{2, 0});
    for (const DiskArc& d : disks) CHECK_FALSE(is_zero_object(d));

    CHECK(is_zero_object(DiskArc{2, 2}));
    CHECK(linking_disks(StoppedDisk(1)).size() == 2);

    // The intermediate arcs of the universal decomposition are never zero.
    for (const DiskArc& a : universal_decomposition(StoppedDisk(5)).intermediate_arcs)
        CHECK_FALSE(is_zero_object(a));
}

TEST_CASE("hom ranks") {
    StoppedDisk w4(4);
    CHECK(hom_rank(1, 1, w4) == 1);
    CHECK(hom_rank(0, 2, w4) == 0);
    CHECK(hom_rank(4, 0, w4) == 1);  // indexing mod n+1
    CHECK_THROWS_AS(hom_rank(0, 1, StoppedDisk(1)), std::domain_error);

    for (int n = 2; n <= 6; ++n) {
        StoppedDisk disk(n);
        for (int j = 0; j <= n; ++j) {
            int total = 0;
            for (int k = 0; k <= n; ++k) total += hom_rank(j, k, disk);
            CHECK(total == 2);
            // periodicity in both arguments
            CHECK(hom_rank(j, j + 1, disk) == hom_rank(j + (n + 1), j + 1 - (n + 1), disk));
        }
    }
}

TEST_CASE("degrees and standard gradings") {
    GradingAssignment flat;
    flat.d = {Rational(0), Rational(0)};
    CHECK(degree(0, flat) == 0);

    GradingAssignment half;
    half.d = {Rational(0), Rational(1, 2)};
    CHECK(degree(0, half) == 1);

    GradingAssignment std2 = standard_gradings(2);
    CHECK(std2.d == std::vector<Rational>{Rational(0), Rational(-1, 4), Rational(1, 4)});
    CHECK(degree_vector(std2) == std::vector<long long>{0, 1, 0});
    CHECK(degree(1, std2) == 1);

    CHECK(degree_vector(standard_gradings(3)) == std::vector<long long>{0, 1, 1, 0});
    CHECK(standard_gradings(3).d ==
          std::vector<Rational>{Rational(0), Rational(-1, 3), Rational(0), Rational(1, 3)});
    CHECK(degree_vector(standard_gradings(1)) == std::vector<long long>{0, 0});

    // Exact rational arithmetic: degree vector (0,1,..,1,0), sum n-1, n large.
    for (int n = 1; n <= 100; ++n) {
        std::vector<long long> v = degree_vector(standard_gradings(n));
        long long sum = 0;
        for (size_t j = 0; j < v.size(); ++j) {
            sum += v[j];
            long long want = (j == 0 || j == v.size() - 1) ? 0 : 1;
            CHECK(v[j] == want);
        }
        CHECK(sum == n - 1);
    }

    // Opposite-direction chords with the negated gradings get the same vector.
    for (int n = 2; n <= 8; ++n) {
        GradingAssignment opp = opposite_standard_gradings(n);
        for (int j = 0; j <= n; ++j) {
            long long want = (j == 0 || j == n) ? 0 : 1;
            CHECK(degree_opposite(j, opp) == want);
        }
    }
}

TEST_CASE("triangle gradings") {
    GradingAssignment t = triangle_gradings_w2();
    CHECK(t.d == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1, 4)});
    CHECK(degree_vector(t) == std::vector<long long>{1, 0, 0});
    CHECK(is_triangle_grading(t));
    long long sum = 0;
    for (long long x : degree_vector(t)) sum += x;
    CHECK(sum == 1);

    GradingAssignment other;
    other.d = {Rational(0), Rational(3, 4), Rational(1, 2)};
    CHECK(is_triangle_grading(other));
    CHECK_FALSE(is_triangle_grading(standard_gradings(2)));
}

TEST_CASE("mu composition") {
    StoppedDisk w2(2);
    GradingAssignment tri = triangle_gradings_w2();

    // Strict units.
    auto r = mu({MorphismGenerator::identity(1), MorphismGenerator::chord(0)}, tri, w2);
    REQUIRE(r.has_value());
    CHECK(*r == MorphismGenerator::chord(0));
    r = mu({MorphismGenerator::chord(0), MorphismGenerator::identity(0)}, tri, w2);
    REQUIRE(r.has_value());
    CHECK(*r == MorphismGenerator::chord(0));
    r = mu({MorphismGenerator::identity(2), MorphismGenerator::identity(2)}, tri, w2);
    REQUIRE(r.has_value());
    CHECK(*r == MorphismGenerator::identity(2));

    // mu^3 over the full cycle with triangle gradings is the identity.
    std::vector<MorphismGenerator> cycle{MorphismGenerator::chord(2), MorphismGenerator::chord(1),
                                         MorphismGenerator::chord(0)};
    r = mu(cycle, tri, w2);
    REQUIRE(r.has_value());
    CHECK(*r == MorphismGenerator::identity(0));

    // Degree sum 2 instead of 1: zero.
    GradingAssignment wrong;
    wrong.d = {Rational(0), Rational(1, 3), Rational(2, 3)};
    CHECK(degree_vector(wrong) == std::vector<long long>{1, 1, 0});
    CHECK_FALSE(mu(cycle, wrong, w2).has_value());

    // Chord pairs vanish, as do higher products with an identity inside.
    CHECK_FALSE(mu({MorphismGenerator::chord(1), MorphismGenerator::chord(0)}, tri, w2).has_value());
    CHECK_FALSE(mu({MorphismGenerator::chord(2), MorphismGenerator::identity(2), MorphismGenerator::chord(1)},
                   tri, w2)
                    .has_value());
    CHECK_FALSE(mu({MorphismGenerator::chord(0)}, tri, w2).has_value());
    CHECK_THROWS_AS(mu({MorphismGenerator::chord(0), MorphismGenerator::chord(0)}, tri, w2),
                    std::invalid_argument);
    CHECK_THROWS_AS(mu({}, tri, w2), std::invalid_argument);

    // n = 1: the two chords compose to the identity under flat gradings.
    StoppedDisk w1(1);
    GradingAssignment flat1 = standard_gradings(1);
    auto comp = mu({MorphismGenerator::chord(1), MorphismGenerator::chord(0)}, flat1, w1);
    REQUIRE(comp.has_value());
    CHECK(*comp == MorphismGenerator::identity(0));
}

TEST_CASE("degree bookkeeping of nonzero products") {
    // Every nonzero mu^k satisfies deg(out) = sum deg(in) + 2 - k.
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> den(1, 12);
    std::uniform_int_distribution<int> num(-24, 24);
    for (int n = 1; n <= 6; ++n) {
        StoppedDisk disk(n);
        for (int trial = 0; trial < 300; ++trial) {
            GradingAssignment g;
            for (int j = 0; j <= n; ++j) g.d.push_back(Rational(num(rng), den(rng)));
            // identity-absorbing mu^2
            int j = trial % (n + 1);
            auto r = mu({MorphismGenerator::identity(disk.mod(j + 1)), MorphismGenerator::chord(j)}, g, disk);
            REQUIRE(r.has_value());
            CHECK(generator_degree(*r, g) == generator_degree(MorphismGenerator::chord(j), g));
            // full cycle
            std::vector<MorphismGenerator> cycle;
            for (int i = n; i >= 0; --i) cycle.push_back(MorphismGenerator::chord(disk.mod(j + i)));
            long long sum = 0;
            for (const auto& m : cycle) sum += generator_degree(m, g);
            auto full = mu(cycle, g, disk);
            if (sum == n - 1) {
                REQUIRE(full.has_value());
                CHECK(*full == MorphismGenerator::identity(j));
                CHECK(generator_degree(*full, g) == sum + 2 - (n + 1) + 0);
            } else {
                CHECK_FALSE(full.has_value());
            }
        }
    }
}

TEST_CASE("universal triangle") {
    UniversalTriangle t = universal_triangle();
    CHECK(t.d0.str() == "D0 ~= [D1 -a1-> D2]");
    CHECK(t.d1_up.str() == "D1[1] ~= [D2 -a2-> D0]");
    CHECK(t.d2.str() == "D2 ~= [D0[-1] --a0[-1]-> D1]");
    CHECK(is_triangle_grading(t.gradings));

    K0Class k = k0_class(t.d0.expr);
    CHECK(k == K0Class::of("D2") - K0Class::of("D1"));

    // Rotating cycles through the statements (up to a total shift).
    ConeStatement r1 = rotate_statement(t.d0);
    CHECK(r1.target == t.d1_up.target);
    CHECK(same_shape(r1.expr, t.d1_up.expr));
    ConeStatement r2 = rotate_statement(r1);
    CHECK(r2.target == t.d2.target.shifted(1));
    CHECK(same_shape(r2.expr, shift_expr(t.d2.expr, 1)));
    ConeStatement r3 = rotate_statement(r2);
    CHECK(r3.target == t.d0.target.shifted(1));
    CHECK(same_shape(r3.expr, shift_expr(t.d0.expr, 1)));
}

TEST_CASE("universal decomposition") {
    StoppedDisk w2(2);
    UniversalDecomposition u2 = universal_decomposition(w2);
    CHECK(u2.decomposition.str() == "D0 ~= [D1[-1] -> D2]");

    UniversalDecomposition u1 = universal_decomposition(StoppedDisk(1));
    CHECK(u1.decomposition.str() == "D0 ~= D1");

    UniversalDecomposition u3 = universal_decomposition(StoppedDisk(3));
    CHECK(u3.decomposition.str() == "D0 ~= [D1[-1] -> [D2[-1] -> D3]]");
    REQUIRE(u3.steps.size() == 2);
    CHECK(u3.steps[0].str() == "alpha1 ~= [D1[-1] -> alpha2]");
    CHECK(u3.steps[1].str() == "alpha2 ~= [D2[-1] -> D3]");

    for (int n = 1; n <= 8; ++n) {
        UniversalDecomposition u = universal_decomposition(StoppedDisk(n));
        CHECK(u.intermediate_arcs.front() == linking_disks(StoppedDisk(n))[0]);
        CHECK(u.intermediate_arcs.back() == linking_disks(StoppedDisk(n))[n]);
        K0Class k = k0_class(u.decomposition.expr);
        for (int j = 1; j <= n; ++j) CHECK(k.coeff("D" + std::to_string(j)) == 1);
        CHECK(k.coeff("D0") == 0);
        // Left-associated form carries shifts D_j[j-n].
        ConeExpr::Ptr left = left_associate(u.decomposition);
        CHECK(k0_class(left) == k);
        const ConeExpr* walk = left.get();
        for (int j = n; j >= 2; --j) {
            REQUIRE_FALSE(walk->is_leaf());
            const ConeExpr* tgt = walk->tgt().get();
            REQUIRE(tgt->is_leaf());
            CHECK(tgt->object() == GradedObject{"D" + std::to_string(j), j - n});
            walk = walk->src().get();
        }
        CHECK(walk->is_leaf());
        CHECK(walk->object() == GradedObject{"D1", 1 - n});
    }
}

TEST_CASE("bracket flips against polygon flips") {
    for (int n = 3; n <= 8; ++n) {
        UniversalDecomposition u = universal_decomposition(StoppedDisk(n));
        IteratedDecomposition cur = u.decomposition;
        int polygon = n + 1;
        // Right-nested: the fan from vertex n.
        CHECK(dual_triangulation(cur, polygon).diagonals == Triangulation::fan(polygon, polygon - 1).diagonals);
        K0Class k = k0_class(cur.expr);
        int flips = 0;
        for (int j = 1; j <= n - 2; ++j) {
            Triangulation before = dual_triangulation(cur, polygon);
            std::pair<int, int> diag{j, n};
            IteratedDecomposition next = bracket_flip(cur, diag, polygon);
            Triangulation after = dual_triangulation(next, polygon);
            // One flip apart, and the same flip on the polygon side.
            CHECK(after.diagonals == flip(before, diag).diagonals);
            CHECK(k0_class(next.expr) == k);
            // Flipping the fresh diagonal undoes the move.
            std::pair<int, int> fresh{-1, -1};
            for (const auto& d : after.diagonals)
                if (!before.diagonals.count(d)) fresh = d;
            REQUIRE(fresh.first >= 0);
            IteratedDecomposition back = bracket_flip(next, fresh, polygon);
            CHECK(same_shape(back.expr, cur.expr));
            cur = next;
            ++flips;
        }
        CHECK(flips == n - 2);
        // Left-nested: the fan from vertex 0.
        CHECK(dual_triangulation(cur, polygon).diagonals == Triangulation::fan(polygon, 0).diagonals);
        CHECK(same_shape(cur.expr, left_associate(u.decomposition)));
    }

    UniversalDecomposition u = universal_decomposition(StoppedDisk(4));
    CHECK_THROWS_AS(bracket_flip(u.decomposition, {0, 2}, 5), std::invalid_argument);
}
