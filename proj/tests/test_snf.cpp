#include <doctest.h>

#include <random>

#include "cobcalc/abelian_group.hpp"
#include "cobcalc/snf.hpp"

using namespace cobcalc;

namespace {

void check_snf(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    CHECK(product_chain_equals({&s.u, &m, &s.v}, s.d));
    IntMatrix id = IntMatrix::identity(m.cols());
    CHECK(product_chain_equals({&s.v, &s.v_inv}, id));
    CHECK(s.u.is_unimodular());
    CHECK(s.v.is_unimodular());
    for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) {
        long long d = s.d.at(i, i);
        CHECK(d >= 0);
        if (i + 1 < std::min(m.rows(), m.cols())) {
            long long next = s.d.at(i + 1, i + 1);
            if (d == 0) CHECK(next == 0);
            if (d > 0) CHECK(next % d == 0);
        }
    }
    for (int i = 0; i < s.d.rows(); ++i)
        for (int j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form on pinned matrices") {
    IntMatrix id = IntMatrix::identity(2);
    SmithResult s = smith_normal_form(id);
    CHECK(s.d == id);
    CHECK(s.rank == 2);

    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    m.at(1, 0) = 6;
    m.at(1, 1) = 8;
    SmithResult s2 = smith_normal_form(m);
    CHECK(s2.d.at(0, 0) == 2);
    CHECK(s2.d.at(1, 1) == 4);
    CHECK(s2.rank == 2);
    check_snf(m);

    IntMatrix z(1, 1);
    SmithResult s3 = smith_normal_form(z);
    CHECK(s3.d.at(0, 0) == 0);
    CHECK(s3.rank == 0);
}

TEST_CASE("smith normal form on random matrices") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> dim(1, 8);
    std::uniform_int_distribution<long long> entry(-9, 9);
    for (int trial = 0; trial < 300; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
        check_snf(m);
    }
}

TEST_CASE("cokernel and group printing") {
    CHECK(cokernel(IntMatrix(0, 2), 2) == AbelianGroup{2, {}});

    IntMatrix rel(1, 3);
    rel.at(0, 0) = 1;
    rel.at(0, 1) = -1;
    rel.at(0, 2) = -1;
    CHECK(cokernel(rel, 3) == AbelianGroup{2, {}});

    IntMatrix two(1, 1);
    two.at(0, 0) = 2;
    CHECK(cokernel(two, 1) == AbelianGroup{0, {2}});

    CHECK(AbelianGroup{0, {}}.str() == "0");
    CHECK(AbelianGroup{1, {}}.str() == "Z^1");
    CHECK(AbelianGroup{2, {2, 4}}.str() == "Z^2 + Z/2 + Z/4");
    for (std::string s : {"0", "Z^1", "Z^3 + Z/2", "Z^2 + Z/2 + Z/6"}) {
        CHECK(AbelianGroup::parse(s).str() == s);
    }
    CHECK(AbelianGroup::parse("Z") == AbelianGroup{1, {}});
}

TEST_CASE("group invariance under stacked relation rows") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> entry(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix rel(3, 4);
        for (int i = 0; i < rel.rows(); ++i)
            for (int j = 0; j < rel.cols(); ++j) rel.at(i, j) = entry(rng);
        AbelianGroup before = cokernel(rel, 4);
        // Append an integer combination of the existing rows.
        IntMatrix more(4, 4);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j) more.at(i, j) = rel.at(i, j);
        long long c1 = entry(rng), c2 = entry(rng), c3 = entry(rng);
        for (int j = 0; j < 4; ++j)
            more.at(3, j) = c1 * rel.at(0, j) + c2 * rel.at(1, j) + c3 * rel.at(2, j);
        CHECK(cokernel(more, 4) == before);
    }
}
