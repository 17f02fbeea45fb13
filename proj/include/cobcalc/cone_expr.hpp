#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

namespace cobcalc {

struct GradedObject {
    std::string label;
    int shift = 0;  // A[k]

    GradedObject() = default;
    GradedObject(std::string l, int k = 0) : label(std::move(l)), shift(k) {}
    GradedObject shifted(int k) const { return {label, shift + k}; }
    bool operator==(const GradedObject& o) const { return label == o.label && shift == o.shift; }
    std::string str() const;
};

// Inert decoration on a cone arrow; never affects K0 or shape comparisons.
struct MorphLabel {
    std::string name;
    bool negative = false;
    int shift = 0;

    MorphLabel() = default;
    MorphLabel(std::string n, bool neg = false, int k = 0) : name(std::move(n)), negative(neg), shift(k) {}
    std::string str() const;
};

// Shifted iterated mapping cones: Leaf(A[k]) or [src -> tgt].
class ConeExpr {
public:
    using Ptr = std::shared_ptr<const ConeExpr>;

    static Ptr leaf(GradedObject obj);
    static Ptr cone(Ptr src, Ptr tgt, std::optional<MorphLabel> label = std::nullopt);

    bool is_leaf() const { return !src_; }
    const GradedObject& object() const;           // leaf only
    const Ptr& src() const { return src_; }
    const Ptr& tgt() const { return tgt_; }
    const std::optional<MorphLabel>& label() const { return label_; }

    int num_leaves() const;
    std::string str() const;

private:
    ConeExpr() = default;
    GradedObject obj_;
    Ptr src_, tgt_;
    std::optional<MorphLabel> label_;
};

// Formal integer sum of object labels; class(A[k]) = (-1)^k A and
// class([X -> Y]) = Y - X.
class K0Class {
public:
    K0Class() = default;
    static K0Class of(const std::string& label, long long coeff = 1);

    K0Class operator+(const K0Class& o) const;
    K0Class operator-(const K0Class& o) const;
    K0Class operator-() const;
    bool operator==(const K0Class& o) const { return coeffs_ == o.coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long long coeff(const std::string& label) const;
    const std::map<std::string, long long>& coeffs() const { return coeffs_; }

    std::string str() const;  // "0", "L1 + 2 L2 - L3"

private:
    std::map<std::string, long long> coeffs_;
    void prune(const std::string& key);
};

// Structural equality on objects and shifts, ignoring morphism labels.
bool same_shape(const ConeExpr::Ptr& a, const ConeExpr::Ptr& b);

ConeExpr::Ptr shift_expr(const ConeExpr::Ptr& e, int k);
K0Class k0_class(const ConeExpr::Ptr& e);

// The rewrite [[X -> Y] -> Z] ~ [X[1] -> [Y -> Z]] (and back). Both
// throw std::invalid_argument on a shape mismatch; labels on the rearranged
// arrows are dropped.
ConeExpr::Ptr rotate(const ConeExpr::Ptr& e);
ConeExpr::Ptr rotate_inverse(const ConeExpr::Ptr& e);

// Grammar: A | A[k] | [E -> E] | [E -f-> E] | [E --f[k]-> E].
std::string print_expr(const ConeExpr::Ptr& e);
ConeExpr::Ptr parse_expr(const std::string& text);

}  // namespace cobcalc
