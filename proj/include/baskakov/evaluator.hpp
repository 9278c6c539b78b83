#pragma once

#include "baskakov/coeffs.hpp"

#include <functional>
#include <span>
#include <vector>

namespace baskakov {

/// Samples f_k = f(k/n), k = 0..K. The only access an approximation has to the
/// target function.
struct SampleSet {
    int n = 1;
    std::vector<double> values;

    int last_index() const { return static_cast<int>(values.size()) - 1; }
    double abscissa(int k) const { return static_cast<double>(k) / n; }

    /// Samples f at k/n for k = 0..K.
    static SampleSet from_function(int n, int K, const std::function<double(double)>& f);
};

/// How the series is cut after N terms.
enum class Truncation {
    /// Derivatives of the truncated operator V_{n,N} f: differences treat
    /// samples past N as zero, and the k-range stays 0..N.
    exact,
    /// Differences use only f_0..f_N and the k-range shrinks to 0..N-p.
    shrink,
};

struct QIConfig {
    int n = 1;
    int r = 0;
    int N = 5;
    Truncation truncation = Truncation::exact;

    /// N = 5n.
    static QIConfig with_default_terms(int n, int r) { return {n, r, 5 * n}; }
};

/// v_{k,n}(x) for k = 0..N. When (1+x)^{-n} would underflow the row is
/// computed with a shared scale: true value = values[k] * exp(log_scale).
struct BasisRow {
    int n = 1;
    int N = 0;
    double x = 0.0;
    std::vector<double> values;
    double log_scale = 0.0;

    bool rescaled() const { return log_scale != 0.0; }
    double value(int k) const;
};

/// Below this the leading basis value is carried in log space.
inline constexpr double kRescaleThreshold = 1e-280;

BasisRow basis_row(int n, double x, int N);

/// Upper bound on sum_{k>N} v_{k,n}(x) from a geometric majorant of the term
/// ratio y(n+k)/(k+1); +inf when the majorant does not converge yet.
double basis_tail_bound(int n, double x, int N);

/// Delta^p u_k for k = 0..size-1-p. Throws std::invalid_argument if p >= size.
std::vector<double> forward_diff(std::span<const double> values, int p);

/// sum_{k<=N} f_k v_{k,n}(x).
double baskakov_eval(const SampleSet& s, int N, double x);

/// D^p V_{n,N} f(x) = (n)_p sum_k (Delta^p f_k) v_{k,n+p}(x).
double deriv_eval(const SampleSet& s, int N, int p, double x, Truncation truncation = Truncation::exact);

/// eta polynomials of one table rounded to doubles once.
class EtaPolys {
public:
    explicit EtaPolys(const CoeffTable& eta);

    int n() const { return n_; }
    int r_max() const { return static_cast<int>(coeffs_.size()) - 1; }
    double operator()(int k, double x) const { return horner(coeffs_.at(static_cast<std::size_t>(k)), x); }

private:
    int n_;
    std::vector<std::vector<double>> coeffs_;
};

/// Shared, lazily built EtaPolys for n with at least r_max orders.
/// Thread-safe; the reference stays valid for the life of the process.
const EtaPolys& eta_polys(int n, int r_max = kDefaultRMax);

/// Left quasi-interpolant sum_{k<=r} eta_k(x) D^k V_{n,N} f(x).
double qi_eval(const SampleSet& s, const QIConfig& cfg, double x, const EtaPolys& eta);
double qi_eval(const SampleSet& s, const QIConfig& cfg, double x);

/// (1+x)^{-n} sum_k C(n+order+k-1, k) d_k y^k with y = x/(1+x), the series
/// shape shared by the closed-form corrections.
double shifted_series(int n, int order, std::span<const double> diffs, double x);

/// Differences of order p over the first N+1 samples under the given rule.
std::vector<double> truncated_differences(const SampleSet& s, int N, int p, Truncation truncation);

/// Closed-form QI for r in {2,3,4}, written in y = x/(1+x); independent of the
/// eta tables. Throws std::invalid_argument for other r.
double qi_eval_closed(const SampleSet& s, const QIConfig& cfg, double x);

}  // namespace baskakov
