#pragma once

#include "baskakov/rational.hpp"

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace baskakov {

/// Dense univariate polynomial in x over the rationals.
///
/// coeffs()[i] is the coefficient of x^i. Trailing zeros are never stored, so
/// the zero polynomial has an empty coefficient sequence and equality is
/// plain sequence equality.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs);
    explicit Poly(std::vector<Rational> coeffs);
    /// Constant polynomial.
    explicit Poly(const Rational& c);

    static Poly monomial(int degree, const Rational& c = Rational(1));
    /// x
    static Poly x() { return monomial(1); }
    /// X = x(1+x)
    static Poly big_x();

    std::span<const Rational> coeffs() const { return coeffs_; }
    /// Coefficient of x^i; zero beyond the degree.
    Rational coeff(int i) const;
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    Poly operator-() const;
    friend bool operator==(const Poly&, const Poly&) = default;

    Poly derivative() const;
    /// k-th derivative.
    Poly derivative(int k) const;
    Poly pow(int exponent) const;
    /// Exact value at a rational point (Horner).
    Rational eval(const Rational& at) const;
    /// Double-precision value with coefficients rounded once.
    double eval(double at) const;
    /// Coefficients rounded to doubles, index = power.
    std::vector<double> to_doubles() const;

    /// Expanded form like "-(1/22)x - (1/22)x^2"; "0" for the zero polynomial.
    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Horner evaluation of a double coefficient vector (index = power).
double horner(std::span<const double> coeffs, double x);

}  // namespace baskakov
