#include "baskakov/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace baskakov {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s, 10));
        return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
    } catch (const std::domain_error&) {
        throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    }
}

double Rational::to_double() const {
    // mpq_get_d truncates; splitting off the exponent keeps the quotient exact
    // to within a single rounding.
    if (is_zero()) return 0.0;
    long num_exp = 0;
    long den_exp = 0;
    const double num_m = mpz_get_d_2exp(&num_exp, q_.get_num_mpz_t());
    const double den_m = mpz_get_d_2exp(&den_exp, q_.get_den_mpz_t());
    return std::ldexp(num_m / den_m, static_cast<int>(num_exp - den_exp));
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::pow(int exponent) const {
    if (exponent < 0) return Rational(1) / pow(-exponent);
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace baskakov
