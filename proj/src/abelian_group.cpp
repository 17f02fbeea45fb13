#include "cobcalc/abelian_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cobcalc {

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& o) const {
    // Merge two invariant-factor lists back into chain form via SNF of the
    // block-diagonal relation matrix.
    AbelianGroup out;
    out.rank = rank + o.rank;
    if (torsion.empty()) { out.torsion = o.torsion; return out; }
    if (o.torsion.empty()) { out.torsion = torsion; return out; }
    int k = static_cast<int>(torsion.size() + o.torsion.size());
    IntMatrix rel(k, k);
    int i = 0;
    for (long long d : torsion) { rel.at(i, i) = d; ++i; }
    for (long long d : o.torsion) { rel.at(i, i) = d; ++i; }
    AbelianGroup c = cokernel(rel, k);
    out.torsion = c.torsion;
    return out;
}

std::string AbelianGroup::str() const {
    if (is_trivial()) return "0";
    std::string s;
    if (rank > 0) s = "Z^" + std::to_string(rank);
    for (long long d : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + std::to_string(d);
    }
    return s;
}

AbelianGroup AbelianGroup::parse(const std::string& s) {
    AbelianGroup g;
    if (s == "0") return g;
    size_t pos = 0;
    auto fail = [&]() { throw std::invalid_argument("AbelianGroup: cannot parse '" + s + "'"); };
    while (pos < s.size()) {
        if (s[pos] != 'Z') fail();
        ++pos;
        if (pos < s.size() && s[pos] == '^') {
            size_t end;
            g.rank += std::stoi(s.substr(pos + 1), &end);
            pos += 1 + end;
        } else if (pos < s.size() && s[pos] == '/') {
            size_t end;
            g.torsion.push_back(std::stoll(s.substr(pos + 1), &end));
            pos += 1 + end;
        } else {
            g.rank += 1;
        }
        if (pos < s.size()) {
            if (s.compare(pos, 3, " + ") != 0) fail();
            pos += 3;
        }
    }
    // Re-normalize in case the input listed factors out of chain order.
    if (!g.torsion.empty()) {
        int k = static_cast<int>(g.torsion.size());
        IntMatrix rel(k, k);
        for (int i = 0; i < k; ++i) rel.at(i, i) = g.torsion[i];
        g.torsion = cokernel(rel, k).torsion;
    }
    return g;
}

AbelianGroup cokernel(const IntMatrix& relations, int generators) {
    if (relations.cols() != generators)
        throw std::invalid_argument("cokernel: relation width != generator count");
    SmithResult s = smith_normal_form(relations);
    AbelianGroup g;
    g.rank = generators - s.rank;
    for (int i = 0; i < s.rank; ++i) {
        long long d = to_ll(s.d.at(i, i));
        if (d >= 2) g.torsion.push_back(d);
    }
    return g;
}

}  // namespace cobcalc
