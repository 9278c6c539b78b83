#include "baskakov/experiments.hpp"

#include "baskakov/combinatorics.hpp"
#include "baskakov/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace baskakov {

std::string TermRule::str() const { return absolute ? std::to_string(*absolute) : std::to_string(multiplier) + "n"; }

TermRule TermRule::parse(std::string_view text) {
    const bool scaled = !text.empty() && text.back() == 'n';
    const std::string_view digits = scaled ? text.substr(0, text.size() - 1) : text;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || value < 1)
        throw std::invalid_argument("term rule must look like '5n' or '300', got '" + std::string(text) + "'");
    if (scaled) return {value, std::nullopt};
    return {0, value};
}

SampleProvider sampler(const TestFunction& f) {
    return [&f](int n, int K) { return SampleSet::from_function(n, K, f.value); };
}

std::vector<double> uniform_grid(double a, double b, double step) {
    if (!(step > 0.0) || b < a) throw std::invalid_argument("uniform_grid: bad interval or step");
    const auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
    std::vector<double> xs(count);
    for (std::size_t i = 0; i < count; ++i) xs[i] = a + static_cast<double>(i) * step;
    return xs;
}

ErrorTable error_table(std::string function_id, const SampleProvider& samples,
                       const std::function<double(double)>& reference, const std::vector<int>& n_list,
                       const std::vector<int>& r_list, double a, double b, double step, TermRule terms,
                       Truncation truncation) {
    if (n_list.empty() || r_list.empty()) throw std::invalid_argument("error_table: empty n or r list");
    if (a < 0.0) throw std::invalid_argument("error_table: interval must lie in [0, inf)");
    const int r_top = *std::max_element(r_list.begin(), r_list.end());
    if (*std::min_element(r_list.begin(), r_list.end()) < 0) throw std::invalid_argument("error_table: negative r");

    ErrorTable table{std::move(function_id), a, b, step, n_list, r_list, {}, terms, truncation};
    const auto grid = uniform_grid(a, b, step);
    std::vector<double> truth(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) truth[i] = reference(grid[i]);

    for (int n : n_list) {
        const int N = terms.terms(n);
        if (r_top > N) throw std::invalid_argument("error_table: r exceeds N");
        const SampleSet s = samples(n, N);
        if (s.n != n || s.last_index() < N)
            throw std::invalid_argument("error_table: insufficient samples for n = " + std::to_string(n) +
                                        " (need k up to " + std::to_string(N) + ")");
        const EtaPolys& eta = eta_polys(n, r_top);
        // errors[i][j]: grid point i, order r_list[j]
        std::vector<std::vector<double>> errors(grid.size(), std::vector<double>(r_list.size()));
        parallel_for(grid.size(), [&](std::size_t i) {
            const double x = grid[i];
            std::vector<double> derivs(static_cast<std::size_t>(r_top) + 1);
            for (int k = 0; k <= r_top; ++k)
                if (k != 1) derivs[k] = deriv_eval(s, N, k, x, truncation);
            for (std::size_t j = 0; j < r_list.size(); ++j) {
                double acc = derivs[0];
                for (int k = 2; k <= r_list[j]; ++k) {
                    const double e = eta(k, x);
                    if (e != 0.0) acc += e * derivs[k];
                }
                errors[i][j] = std::abs(truth[i] - acc);
            }
        });
        std::vector<double> row(r_list.size(), 0.0);
        for (const auto& e : errors)
            for (std::size_t j = 0; j < row.size(); ++j) row[j] = std::max(row[j], e[j]);
        table.entries.push_back(std::move(row));
    }
    return table;
}

ErrorTable error_table(const TestFunction& f, const std::vector<int>& n_list, const std::vector<int>& r_list,
                       double a, double b, double step, TermRule terms, Truncation truncation) {
    return error_table(f.id, sampler(f), f.value, n_list, r_list, a, b, step, terms, truncation);
}

double eta_bar(int k, double x) {
    if (k < 0) throw std::invalid_argument("eta_bar: negative index");
    if (k == 0) return 1.0;
    if (k == 1) return 0.0;
    return asymptotic_poly(k, Family::eta).poly.eval(x);
}

RateReport voronovskaya_check(const TestFunction& f, int r, double x, const std::vector<int>& n_list, bool even_order,
                              TermRule terms) {
    if (r < 0 || 2 * r + 2 > kMaxDerivativeOrder)
        throw std::invalid_argument("voronovskaya_check: r outside the registry's derivative range");
    RateReport rep{f.id, r, even_order ? 2 * r : 2 * r + 1, x, n_list, {}, 0.0};
    rep.target = eta_bar(2 * r + 2, x) * f.derivative(2 * r + 2, x);
    if (even_order) rep.target += eta_bar(2 * r + 1, x) * f.derivative(2 * r + 1, x);
    const double fx = f.value(x);
    for (int n : n_list) {
        const int N = terms.terms(n);
        const SampleSet s = SampleSet::from_function(n, N, f.value);
        const QIConfig cfg{n, rep.qi_order, N, Truncation::exact};
        rep.scaled.push_back(std::pow(static_cast<double>(n), r + 1) * (fx - qi_eval(s, cfg, x)));
    }
    return rep;
}

Rational qi_exact(const Poly& p, int n, int q, const Rational& x) {
    if (q < 0) throw std::invalid_argument("qi_exact: negative order");
    const int top = std::max(p.degree(), 1);
    const Poly vp = apply_differential_operator(theta_recurrence(n, top), p);
    const CoeffTable eta = eta_recurrence(n, std::max(q, 1));
    Rational acc;
    Poly d = vp;
    for (int k = 0; k <= q && !d.is_zero(); ++k) {
        acc += eta[k].eval(x) * d.eval(x);
        d = d.derivative();
    }
    return acc;
}

PolyRateReport polynomial_voronovskaya(int r, const Rational& x, const std::vector<int>& n_list) {
    if (r < 0) throw std::invalid_argument("polynomial_voronovskaya: negative r");
    const int degree = 2 * r + 2;
    const Poly p = Poly::monomial(degree);
    PolyRateReport rep{r, x, n_list, {}, asymptotic_poly(degree, Family::eta).poly.eval(x) * Rational(factorial(degree))};
    for (int n : n_list) {
        const Rational err = p.eval(x) - qi_exact(p, n, 2 * r + 1, x);
        rep.scaled.push_back(Rational(n).pow(r + 1) * err);
    }
    return rep;
}

std::vector<ScalingRow> theorem2_scaling(int r, Family family, const std::vector<Rational>& x_points,
                                         const std::vector<int>& n_list) {
    const AsymptoticPoly bar = asymptotic_poly(r, family);
    std::vector<ScalingRow> rows;
    for (int n : n_list) {
        const CoeffTable t = make_table(family, n, r);
        const Rational scale = Rational(n).pow(bar.scaling_power());
        for (const auto& x : x_points) {
            const Rational limit = bar.poly.eval(x);
            if (limit.is_zero()) throw std::invalid_argument("theorem2_scaling: limit vanishes at x");
            rows.push_back({n, x, scale * t[r].eval(x) / limit});
        }
    }
    return rows;
}

double two_path_gap(const TestFunction& f, int n, int r, const std::vector<double>& x_points, TermRule terms) {
    const int N = terms.terms(n);
    const SampleSet s = SampleSet::from_function(n, N, f.value);
    const QIConfig cfg{n, r, N, Truncation::exact};
    double worst = 0.0;
    for (double x : x_points) {
        const double generic = qi_eval(s, cfg, x);
        const double closed = qi_eval_closed(s, cfg, x);
        const double scale = std::max(std::abs(generic), std::abs(closed));
        if (scale > 0.0) worst = std::max(worst, std::abs(generic - closed) / scale);
    }
    return worst;
}

double TauForm::tau(double y) const {
    // y^a (1+y)^b sum_i c_i z^i = sum_i c_i y^{a-i} (1+y^2)^i (1+y)^b
    double acc = 0.0;
    for (std::size_t i = 0; i < z_coeffs.size(); ++i)
        acc += z_coeffs[i] * std::pow(y, y_power - static_cast<int>(i)) * std::pow(1.0 + y * y, static_cast<int>(i));
    return one_plus_y ? acc * (1.0 + y) : acc;
}

TauForm printed_tau_form(int r, int n) {
    const double m = n;
    TauForm t;
    t.r = r;
    switch (r) {
        case 5:
            t = {5, 2, true, {-5.0 * m, 6.0}, 4.0 * m / 120.0};
            break;
        case 6:
            t = {6, 3, false, {3.0 * m * m - 34.0 * m - 24.0, -(26.0 * m - 24.0), 24.0}, -5.0 * m / 720.0};
            break;
        case 7:
            t = {7, 3, true, {5.0 * (7.0 * m * m - 14.0 * m - 120.0), -154.0 * m, 120.0}, 6.0 * m / 5040.0};
            break;
        case 8:
            t = {8, 4, false,
                 {-5.0 * (3.0 * m * m * m - 100.0 * m * m + 340.0 * m + 544.0), 4.0 * (85.0 * m * m - 152.0 * m - 110.0),
                  -36.0 * (29.0 * m - 20.0), 720.0},
                 -7.0 * m / 40320.0};
            break;
        case 9: {
            const double g2 = 36.0 * (223.0 * m + 120.0);
            const double g1 = 4.0 * (826.0 * m * m - 1197.0 * m - 360.0);
            const double g0 = 5.0 * (63.0 * m * m * m - 490.0 * m * m - 1152.0 * m + 1152.0);
            t = {9, 4, true, {-g0, g1, -g2, 5040.0}, 8.0 * m / 362880.0};
            break;
        }
        default:
            throw std::invalid_argument("printed_tau_form: r must be in 5..9");
    }
    return t;
}

TauReport tau_consistency(int r, int n, const std::vector<double>& x_points, const TestFunction& f, TermRule terms) {
    const TauForm form = printed_tau_form(r, n);
    const int N = terms.terms(n);
    const SampleSet s = SampleSet::from_function(n, N, f.value);
    const EtaPolys& eta = eta_polys(n, r);
    const auto diffs = truncated_differences(s, N, r, Truncation::exact);
    TauReport rep{r, n, f.id, {}, 0.0};
    for (double x : x_points) {
        TauRow row{x, 0.0, 0.0, 0.0};
        row.generic = eta(r, x) * deriv_eval(s, N, r, x, Truncation::exact);
        const double y = x / (1.0 + x);
        row.closed = form.prefactor * form.tau(y) * shifted_series(n, r, diffs, x);
        const double scale = std::max(std::abs(row.generic), std::abs(row.closed));
        row.rel_diff = scale > 0.0 ? std::abs(row.generic - row.closed) / scale : 0.0;
        rep.max_rel_diff = std::max(rep.max_rel_diff, row.rel_diff);
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace baskakov
