#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace nefres {

using Rational = boost::rational<std::int64_t>;

/// Affine expression sum_i a_i x_i + b with rational coefficients.
class LinExpr {
public:
    LinExpr() = default;
    LinExpr(std::int64_t c) : constant_(c) {}
    LinExpr(Rational c) : constant_(c) {}
    static LinExpr var(const std::string& name, Rational coeff = 1);

    const std::map<std::string, Rational>& coeffs() const { return coeffs_; }
    Rational constant() const { return constant_; }
    Rational coeff(const std::string& name) const;

    bool is_constant() const { return coeffs_.empty(); }
    /// Integer value when constant with denominator 1.
    std::optional<std::int64_t> as_integer() const;

    LinExpr substitute(const std::string& name, const LinExpr& value) const;

    LinExpr& operator+=(const LinExpr& o);
    LinExpr& operator-=(const LinExpr& o);
    LinExpr& operator*=(Rational k);
    friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
    friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
    friend LinExpr operator*(Rational k, LinExpr a) { return a *= k; }
    friend LinExpr operator*(std::int64_t k, LinExpr a) { return a *= Rational(k); }
    LinExpr operator-() const { return Rational(-1) * *this; }

    bool operator==(const LinExpr&) const = default;

    std::string str() const;

private:
    void prune();

    std::map<std::string, Rational> coeffs_;
    Rational constant_{0};
};

std::string rational_str(Rational q);

}  // namespace nefres
