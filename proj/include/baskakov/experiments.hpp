#pragma once

#include "baskakov/coeffs.hpp"
#include "baskakov/evaluator.hpp"
#include "baskakov/functions.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace baskakov {

/// Series length as a function of n: multiplier*n, or a fixed count.
struct TermRule {
    int multiplier = 5;
    std::optional<int> absolute;

    int terms(int n) const { return absolute ? *absolute : multiplier * n; }
    std::string str() const;
    /// "5n", "6n", or a plain count such as "300".
    static TermRule parse(std::string_view text);
};

/// Samples at grid density n for k = 0..K.
using SampleProvider = std::function<SampleSet(int n, int K)>;

SampleProvider sampler(const TestFunction& f);

/// sup over a uniform grid of |f - V^{(r)}_{n,N} f|, one row per n.
struct ErrorTable {
    std::string function_id;
    double a = 0.0;
    double b = 2.0;
    double step = 0.002;
    std::vector<int> n_list;
    std::vector<int> r_list;
    std::vector<std::vector<double>> entries;  // [n index][r index]
    TermRule terms;
    Truncation truncation = Truncation::exact;
};

/// Grid a, a+step, ..., b (end point included when it falls on the grid).
std::vector<double> uniform_grid(double a, double b, double step);

ErrorTable error_table(std::string function_id, const SampleProvider& samples,
                       const std::function<double(double)>& reference, const std::vector<int>& n_list,
                       const std::vector<int>& r_list, double a = 0.0, double b = 2.0, double step = 0.002,
                       TermRule terms = {}, Truncation truncation = Truncation::exact);
ErrorTable error_table(const TestFunction& f, const std::vector<int>& n_list, const std::vector<int>& r_list,
                       double a = 0.0, double b = 2.0, double step = 0.002, TermRule terms = {},
                       Truncation truncation = Truncation::exact);

/// n^{r+1} (f(x) - V^{(q)}_n f(x)) for q = 2r+1 (or 2r for the even variant)
/// and the limit predicted from the asymptotic eta polynomials.
struct RateReport {
    std::string function_id;
    int r = 1;
    int qi_order = 3;
    double x = 1.0;
    std::vector<int> n_list;
    std::vector<double> scaled;
    double target = 0.0;
};

/// eta_bar_k(x) as a double; eta_bar_0 = 1, eta_bar_1 = 0.
double eta_bar(int k, double x);

RateReport voronovskaya_check(const TestFunction& f, int r, double x, const std::vector<int>& n_list,
                              bool even_order = false, TermRule terms = {10, std::nullopt});

/// Exact V^{(q)}_n p (x) for a polynomial p, with V_n p from the theta operator.
Rational qi_exact(const Poly& p, int n, int q, const Rational& x);

/// Exact counterpart of RateReport for p = x^{2r+2} and the odd order 2r+1.
struct PolyRateReport {
    int r = 1;
    Rational x;
    std::vector<int> n_list;
    std::vector<Rational> scaled;
    Rational target;
};

PolyRateReport polynomial_voronovskaya(int r, const Rational& x, const std::vector<int>& n_list);

/// n^l coeff_r^(n)(x) / bar_r(x), l = ceil(r/2), evaluated exactly.
struct ScalingRow {
    int n = 1;
    Rational x;
    Rational ratio;
};

std::vector<ScalingRow> theorem2_scaling(int r, Family family, const std::vector<Rational>& x_points,
                                         const std::vector<int>& n_list);

/// Largest relative gap between qi_eval and qi_eval_closed over x_points,
/// r in {2, 3, 4}.
double two_path_gap(const TestFunction& f, int n, int r, const std::vector<double>& x_points, TermRule terms = {});

/// Closed form of eta_r D^r V_n f for r = 5..9: prefactor * tau_r(y) * series.
struct TauForm {
    int r = 5;
    int y_power = 2;
    bool one_plus_y = true;
    std::vector<double> z_coeffs;  // index = power of z
    double prefactor = 0.0;

    /// tau_r(y), with z = y + 1/y expanded so y = 0 is safe.
    double tau(double y) const;
};

/// tau_5..tau_9 as printed; tau_6 without its trailing stray factor.
TauForm printed_tau_form(int r, int n);

struct TauRow {
    double x = 0.0;
    double generic = 0.0;
    double closed = 0.0;
    double rel_diff = 0.0;
};

struct TauReport {
    int r = 5;
    int n = 10;
    std::string function_id;
    std::vector<TauRow> rows;
    double max_rel_diff = 0.0;
    /// Systematic mismatch threshold on max_rel_diff.
    static constexpr double kMismatchThreshold = 1e-9;
    bool consistent() const { return max_rel_diff <= kMismatchThreshold; }
};

TauReport tau_consistency(int r, int n, const std::vector<double>& x_points, const TestFunction& f,
                          TermRule terms = {});

}  // namespace baskakov
