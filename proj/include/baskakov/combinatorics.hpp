#pragma once

#include "baskakov/poly.hpp"
#include "baskakov/rational.hpp"

#include <vector>

namespace baskakov {

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// Rising factorial (a)_r = a(a+1)...(a+r-1); (a)_0 = 1.
Rational rising_factorial(const Rational& a, int r);

/// Double-precision rising factorial for integer base.
double rising_factorial(int a, int r);

/// Falling factorial [m]_r = m(m-1)...(m-r+1) for integer m.
Integer falling_factorial(long m, int r);

/// [nx]_k = prod_{i<k} (n x - i) expanded as a polynomial in x.
Poly falling_factorial_poly(long n, int k);

Integer factorial(int k);

/// Memoised triangular tables of Stirling numbers up to a fixed order.
///
/// Second kind: x^p = sum_r S(p,r) [x]_r, from S(p,r) = r S(p-1,r) + S(p-1,r-1).
/// First kind (unsigned), from s(p,r) = (p-1) s(p-1,r) + s(p-1,r-1): the
/// rising factorial expands as x(x+1)...(x+p-1) = sum_r s(p,r) x^r and the
/// falling one as [x]_p = sum_r (-1)^{p-r} s(p,r) x^r.
///
/// Immutable after construction; out-of-range indices give 0, and orders above
/// the cap are computed on the fly without caching.
class StirlingTables {
public:
    static constexpr int kDefaultCap = 32;

    explicit StirlingTables(int cap = kDefaultCap);

    int cap() const { return cap_; }
    Integer second_kind(int p, int r) const;
    Integer first_kind(int p, int r) const;

    /// Shared instance with the default cap.
    static const StirlingTables& instance();

private:
    int cap_;
    std::vector<std::vector<Integer>> second_;
    std::vector<std::vector<Integer>> first_;
};

/// S(p, r), second kind.
inline Integer stirling2(int p, int r) { return StirlingTables::instance().second_kind(p, r); }
/// s(p, r), unsigned first kind.
inline Integer stirling1(int p, int r) { return StirlingTables::instance().first_kind(p, r); }

}  // namespace baskakov
