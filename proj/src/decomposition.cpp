#include "cobcalc/decomposition.hpp"

#include <stdexcept>

namespace cobcalc {

K0Class IteratedDecomposition::relation_row() const {
    K0Class row = k0_class(ConeExpr::leaf(target)) - k0_class(expr);
    return row;
}

std::string IteratedDecomposition::str() const { return target.str() + " ~= " + print_expr(expr); }

IteratedDecomposition standard_decomposition(GradedObject target, std::vector<GradedObject> parts) {
    if (parts.empty()) throw std::invalid_argument("decomposition: needs at least one part");
    ConeExpr::Ptr e = ConeExpr::leaf(parts[0]);
    for (size_t j = 1; j < parts.size(); ++j)
        e = ConeExpr::cone(ConeExpr::leaf(parts[j].shifted(-1)), e);
    return {std::move(target), std::move(parts), std::move(e)};
}

IteratedDecomposition rotate_decomposition(const IteratedDecomposition& d) {
    if (d.parts.empty()) throw std::invalid_argument("rotate_decomposition: empty decomposition");
    const size_t n = d.parts.size();
    IteratedDecomposition out;
    out.target = d.parts[n - 1];
    for (size_t j = n - 1; j-- > 0;) out.parts.push_back(d.parts[j]);
    out.parts.push_back(d.target);
    ConeExpr::Ptr e = ConeExpr::leaf(d.target);
    for (size_t j = 0; j + 1 < n; ++j) e = ConeExpr::cone(ConeExpr::leaf(d.parts[j]), e);
    out.expr = std::move(e);
    return out;
}

IteratedDecomposition compose_decompositions(const IteratedDecomposition& outer, int slot,
                                             const IteratedDecomposition& inner) {
    if (slot < 0 || slot >= static_cast<int>(outer.parts.size()))
        throw std::invalid_argument("compose: slot out of range");
    if (!(inner.target == outer.parts[slot]))
        throw std::invalid_argument("compose: inner target '" + inner.target.str() +
                                    "' does not match outer part '" + outer.parts[slot].str() + "'");
    std::vector<GradedObject> parts;
    for (int j = 0; j < static_cast<int>(outer.parts.size()); ++j) {
        if (j == slot)
            parts.insert(parts.end(), inner.parts.begin(), inner.parts.end());
        else
            parts.push_back(outer.parts[j]);
    }
    return standard_decomposition(outer.target, std::move(parts));
}

ConeExpr::Ptr left_associate(const IteratedDecomposition& d) {
    // Re-nest from the part list so the input bracketing does not matter.
    ConeExpr::Ptr e = standard_decomposition(d.target, d.parts).expr;
    while (!e->is_leaf() && !e->tgt()->is_leaf()) e = rotate_inverse(e);
    return e;
}

}  // namespace cobcalc
