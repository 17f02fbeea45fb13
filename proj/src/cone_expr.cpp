#include "cobcalc/cone_expr.hpp"

#include <cctype>
#include <stdexcept>

namespace cobcalc {

std::string GradedObject::str() const {
    if (shift == 0) return label;
    return label + "[" + std::to_string(shift) + "]";
}

std::string MorphLabel::str() const {
    std::string s = negative ? "-" + name : name;
    if (shift != 0) s += "[" + std::to_string(shift) + "]";
    return s;
}

ConeExpr::Ptr ConeExpr::leaf(GradedObject obj) {
    auto e = std::shared_ptr<ConeExpr>(new ConeExpr());
    e->obj_ = std::move(obj);
    return e;
}

ConeExpr::Ptr ConeExpr::cone(Ptr src, Ptr tgt, std::optional<MorphLabel> label) {
    if (!src || !tgt) throw std::invalid_argument("cone: null operand");
    auto e = std::shared_ptr<ConeExpr>(new ConeExpr());
    e->src_ = std::move(src);
    e->tgt_ = std::move(tgt);
    e->label_ = std::move(label);
    return e;
}

const GradedObject& ConeExpr::object() const {
    if (!is_leaf()) throw std::logic_error("object(): not a leaf");
    return obj_;
}

int ConeExpr::num_leaves() const {
    if (is_leaf()) return 1;
    return src_->num_leaves() + tgt_->num_leaves();
}

std::string ConeExpr::str() const { return print_expr(is_leaf() ? leaf(obj_) : cone(src_, tgt_, label_)); }

K0Class K0Class::of(const std::string& label, long long coeff) {
    K0Class k;
    if (coeff != 0) k.coeffs_[label] = coeff;
    return k;
}

void K0Class::prune(const std::string& key) {
    auto it = coeffs_.find(key);
    if (it != coeffs_.end() && it->second == 0) coeffs_.erase(it);
}

K0Class K0Class::operator+(const K0Class& o) const {
    K0Class out = *this;
    for (const auto& [k, v] : o.coeffs_) {
        out.coeffs_[k] += v;
        out.prune(k);
    }
    return out;
}

K0Class K0Class::operator-(const K0Class& o) const { return *this + (-o); }

K0Class K0Class::operator-() const {
    K0Class out;
    for (const auto& [k, v] : coeffs_) out.coeffs_[k] = -v;
    return out;
}

long long K0Class::coeff(const std::string& label) const {
    auto it = coeffs_.find(label);
    return it == coeffs_.end() ? 0 : it->second;
}

std::string K0Class::str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : coeffs_) {
        if (s.empty()) {
            if (v < 0) s += "-";
        } else {
            s += v < 0 ? " - " : " + ";
        }
        long long a = v < 0 ? -v : v;
        if (a != 1) s += std::to_string(a) + " ";
        s += k;
    }
    return s;
}

bool same_shape(const ConeExpr::Ptr& a, const ConeExpr::Ptr& b) {
    if (a->is_leaf() != b->is_leaf()) return false;
    if (a->is_leaf()) return a->object() == b->object();
    return same_shape(a->src(), b->src()) && same_shape(a->tgt(), b->tgt());
}

ConeExpr::Ptr shift_expr(const ConeExpr::Ptr& e, int k) {
    if (k == 0) return e;
    if (e->is_leaf()) return ConeExpr::leaf(e->object().shifted(k));
    std::optional<MorphLabel> label = e->label();
    if (label) label->shift += k;
    return ConeExpr::cone(shift_expr(e->src(), k), shift_expr(e->tgt(), k), label);
}

K0Class k0_class(const ConeExpr::Ptr& e) {
    if (e->is_leaf()) {
        const GradedObject& o = e->object();
        long long sign = (o.shift % 2 == 0) ? 1 : -1;
        return K0Class::of(o.label, sign);
    }
    return k0_class(e->tgt()) - k0_class(e->src());
}

ConeExpr::Ptr rotate(const ConeExpr::Ptr& e) {
    if (e->is_leaf() || e->src()->is_leaf())
        throw std::invalid_argument("rotate: expression does not match [[X -> Y] -> Z]");
    const ConeExpr::Ptr& inner = e->src();
    return ConeExpr::cone(shift_expr(inner->src(), 1), ConeExpr::cone(inner->tgt(), e->tgt()));
}

ConeExpr::Ptr rotate_inverse(const ConeExpr::Ptr& e) {
    if (e->is_leaf() || e->tgt()->is_leaf())
        throw std::invalid_argument("rotate_inverse: expression does not match [X[1] -> [Y -> Z]]");
    const ConeExpr::Ptr& inner = e->tgt();
    return ConeExpr::cone(ConeExpr::cone(shift_expr(e->src(), -1), inner->src()), inner->tgt());
}

std::string print_expr(const ConeExpr::Ptr& e) {
    if (e->is_leaf()) return e->object().str();
    std::string arrow = e->label() ? "-" + e->label()->str() + "->" : "->";
    return "[" + print_expr(e->src()) + " " + arrow + " " + print_expr(e->tgt()) + "]";
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse error at " + std::to_string(pos) + ": " + why);
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string name() {
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        if (pos == start) fail("expected a name");
        return s.substr(start, pos - start);
    }
    int integer() {
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stoi(s.substr(start, pos - start));
    }
    int opt_shift() {
        if (!eat('[')) return 0;
        int k = integer();
        if (!eat(']')) fail("expected ']'");
        return k;
    }

    ConeExpr::Ptr expr() {
        skip_ws();
        if (eat('[')) {
            ConeExpr::Ptr src = expr();
            skip_ws();
            if (!eat('-')) fail("expected arrow");
            std::optional<MorphLabel> label;
            if (!eat('>')) {
                MorphLabel m;
                m.negative = eat('-');
                m.name = name();
                m.shift = opt_shift();
                label = m;
                if (!eat('-') || !eat('>')) fail("expected '->' after morphism label");
            }
            ConeExpr::Ptr tgt = expr();
            skip_ws();
            if (!eat(']')) fail("expected ']'");
            return ConeExpr::cone(std::move(src), std::move(tgt), std::move(label));
        }
        GradedObject o;
        o.label = name();
        o.shift = opt_shift();
        return ConeExpr::leaf(std::move(o));
    }
};

}  // namespace

ConeExpr::Ptr parse_expr(const std::string& text) {
    Parser p(text);
    ConeExpr::Ptr e = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

}  // namespace cobcalc
