#pragma once

#include <string>
#include <vector>

#include "cobcalc/snf.hpp"

namespace cobcalc {

// Finitely generated abelian group in invariant-factor form: Z^rank plus
// Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
struct AbelianGroup {
    int rank = 0;
    std::vector<long long> torsion;

    bool operator==(const AbelianGroup& o) const { return rank == o.rank && torsion == o.torsion; }
    bool operator!=(const AbelianGroup& o) const { return !(*this == o); }
    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool is_free() const { return torsion.empty(); }

    AbelianGroup direct_sum(const AbelianGroup& o) const;

    // "0", "Z^r", "Z^r + Z/d1 + ...". Round-trips through parse_group.
    std::string str() const;
    static AbelianGroup parse(const std::string& s);
};

// Cokernel Z^generators / row-space(relations); `relations` is a
// (#relations x #generators) matrix.
AbelianGroup cokernel(const IntMatrix& relations, int generators);

}  // namespace cobcalc
