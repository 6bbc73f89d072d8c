#include "nefres/linexpr.hpp"

namespace nefres {

std::string rational_str(Rational q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

LinExpr LinExpr::var(const std::string& name, Rational coeff) {
    LinExpr e;
    e.coeffs_[name] = coeff;
    e.prune();
    return e;
}

Rational LinExpr::coeff(const std::string& name) const {
    auto it = coeffs_.find(name);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

std::optional<std::int64_t> LinExpr::as_integer() const {
    if (!is_constant() || constant_.denominator() != 1) return std::nullopt;
    return constant_.numerator();
}

LinExpr LinExpr::substitute(const std::string& name, const LinExpr& value) const {
    auto it = coeffs_.find(name);
    if (it == coeffs_.end()) return *this;
    Rational k = it->second;
    LinExpr out = *this;
    out.coeffs_.erase(name);
    out += k * value;
    return out;
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
    for (const auto& [v, c] : o.coeffs_) coeffs_[v] += c;
    constant_ += o.constant_;
    prune();
    return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
    return *this += -o;
}

LinExpr& LinExpr::operator*=(Rational k) {
    for (auto& [v, c] : coeffs_) c *= k;
    constant_ *= k;
    prune();
    return *this;
}

void LinExpr::prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = it->second == Rational(0) ? coeffs_.erase(it) : std::next(it);
}

std::string LinExpr::str() const {
    std::string s;
    for (const auto& [v, c] : coeffs_) {
        Rational a = c;
        if (!s.empty()) {
            s += a < Rational(0) ? " - " : " + ";
            if (a < Rational(0)) a = -a;
        } else if (a < Rational(0)) {
            s += "-";
            a = -a;
        }
        if (a != Rational(1)) s += rational_str(a) + "*";
        s += v;
    }
    if (s.empty()) return rational_str(constant_);
    if (constant_ != Rational(0)) s += (constant_ < Rational(0) ? " - " : " + ") + rational_str(constant_ < Rational(0) ? -constant_ : constant_);
    return s;
}

}  // namespace nefres
