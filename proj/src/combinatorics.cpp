#include "baskakov/combinatorics.hpp"

#include <stdexcept>

namespace baskakov {

namespace {

std::vector<std::vector<Integer>> build_table(int cap, bool first_kind) {
    std::vector<std::vector<Integer>> t(static_cast<std::size_t>(cap) + 1);
    for (int p = 0; p <= cap; ++p) {
        t[p].assign(static_cast<std::size_t>(p) + 1, Integer(0));
        t[p][0] = (p == 0) ? 1 : 0;
        for (int r = 1; r <= p; ++r) {
            const Integer above = (r <= p - 1) ? t[p - 1][r] : Integer(0);
            const Integer factor = first_kind ? Integer(p - 1) : Integer(r);
            t[p][r] = factor * above + t[p - 1][r - 1];
        }
    }
    return t;
}

Integer stirling_uncached(int p, int r, bool first_kind) {
    // Row by row recurrence for orders beyond the cap.
    std::vector<Integer> row{Integer(1)};
    for (int q = 1; q <= p; ++q) {
        std::vector<Integer> next(static_cast<std::size_t>(q) + 1, Integer(0));
        for (int j = 1; j <= q; ++j) {
            const Integer above = (j <= q - 1) ? row[j] : Integer(0);
            const Integer factor = first_kind ? Integer(q - 1) : Integer(j);
            next[j] = factor * above + row[j - 1];
        }
        row = std::move(next);
    }
    return row[r];
}

}  // namespace

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Rational rising_factorial(const Rational& a, int r) {
    if (r < 0) throw std::invalid_argument("rising_factorial: negative order");
    Rational out(1);
    for (int i = 0; i < r; ++i) out *= a + Rational(i);
    return out;
}

double rising_factorial(int a, int r) {
    double out = 1.0;
    for (int i = 0; i < r; ++i) out *= static_cast<double>(a + i);
    return out;
}

Integer falling_factorial(long m, int r) {
    Integer out(1);
    for (int i = 0; i < r; ++i) out *= Integer(m - i);
    return out;
}

Poly falling_factorial_poly(long n, int k) {
    if (k < 0) throw std::invalid_argument("falling_factorial_poly: negative order");
    Poly out{1};
    for (int i = 0; i < k; ++i) out = out * Poly{Rational(-i), Rational(n)};
    return out;
}

Integer factorial(int k) {
    if (k < 0) throw std::invalid_argument("factorial: negative argument");
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

StirlingTables::StirlingTables(int cap)
    : cap_(cap), second_(build_table(cap, false)), first_(build_table(cap, true)) {
    if (cap < 0) throw std::invalid_argument("StirlingTables: negative cap");
}

Integer StirlingTables::second_kind(int p, int r) const {
    if (p < 0 || r < 0 || r > p) return 0;
    if (p > cap_) return stirling_uncached(p, r, false);
    return second_[p][r];
}

Integer StirlingTables::first_kind(int p, int r) const {
    if (p < 0 || r < 0 || r > p) return 0;
    if (p > cap_) return stirling_uncached(p, r, true);
    return first_[p][r];
}

const StirlingTables& StirlingTables::instance() {
    static const StirlingTables tables;
    return tables;
}

}  // namespace baskakov
