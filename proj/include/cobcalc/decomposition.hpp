#pragma once

#include <vector>

#include "cobcalc/cone_expr.hpp"

namespace cobcalc {

// An iterated cone decomposition target ~= expr whose parts are A1..An,
// innermost first. The standard expression is the right-nested
// [An[-1] -> [A_{n-1}[-1] -> ... -> [A2[-1] -> A1]...]]; rewriting keeps the
// part list and replaces expr by an isomorphic bracketing.
struct IteratedDecomposition {
    GradedObject target;
    std::vector<GradedObject> parts;
    ConeExpr::Ptr expr;

    // target - sum of parts, as a K0 row; always equals
    // k0_class(target leaf) - k0_class(expr).
    K0Class relation_row() const;
    std::string str() const;
};

// Builds the standard right-nested expression; parts must be nonempty.
IteratedDecomposition standard_decomposition(GradedObject target, std::vector<GradedObject> parts);

// Re-prefers the last part: from target ~= [An[-1] -> ...] to
// An ~= [A_{n-1} -> [... -> [A1 -> target]...]] (unshifted nesting).
IteratedDecomposition rotate_decomposition(const IteratedDecomposition& d);

// Substitutes `inner` (a decomposition of the part at
// `slot`) into `outer`; the result is the standard decomposition on the
// spliced part list. Throws on target/part mismatch (label and shift).
IteratedDecomposition compose_decompositions(const IteratedDecomposition& outer, int slot,
                                             const IteratedDecomposition& inner);

// Moves all brackets to the left by repeated inverse rotations:
// [[...[An[1-n] -> A_{n-1}[2-n]] -> ... -> A2[-1]] -> A1].
ConeExpr::Ptr left_associate(const IteratedDecomposition& d);

}  // namespace cobcalc
