#include "baskakov/lebesgue.hpp"

#include "baskakov/combinatorics.hpp"
#include "baskakov/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace baskakov {

namespace {

std::vector<double> binomial_row(int k) {
    std::vector<double> c(static_cast<std::size_t>(k) + 1, 1.0);
    for (int i = 1; i <= k; ++i) c[i] = c[i - 1] * (k - i + 1) / i;
    return c;
}

void check_args(int n, int r, double x, const EtaPolys& eta) {
    if (!(x >= 0.0)) throw std::invalid_argument("evaluation point must be >= 0");
    if (n < 1 || r < 0) throw std::invalid_argument("need n >= 1 and r >= 0");
    if (eta.n() != n || eta.r_max() < r) throw std::invalid_argument("eta table does not match (n, r)");
}

}  // namespace

std::vector<double> quasi_lagrange_row(int n, int r, double x, int N, const EtaPolys& eta) {
    check_args(n, r, x, eta);
    std::vector<double> row(static_cast<std::size_t>(N) + 1, 0.0);
    for (int k = 0; k <= r; ++k) {
        const double e = eta(k, x);
        if (e == 0.0) continue;
        const BasisRow basis = basis_row(n + k, x, N);
        const double scale = basis.rescaled() ? std::exp(basis.log_scale) : 1.0;
        const auto binom = binomial_row(k);
        const double factor = e * (k % 2 ? -1.0 : 1.0) * rising_factorial(n, k) * scale;
        for (int j = 0; j <= N; ++j) {
            double d = 0.0;
            for (int i = 0; i <= k; ++i) {
                const int m = j - k + i;
                if (m < 0) continue;
                d += ((k - i) % 2 ? -binom[i] : binom[i]) * basis.values[m];
            }
            row[j] += factor * d;
        }
    }
    return row;
}

std::vector<double> quasi_lagrange_row(int n, int r, double x, int N) {
    return quasi_lagrange_row(n, r, x, N, eta_polys(n, r));
}

double quasi_lagrange_tail_bound(int n, int r, double x, int N, const EtaPolys& eta) {
    check_args(n, r, x, eta);
    // |v^{(r)}_j| <= sum_k |eta_k| (n)_k sum_i C(k,i) v_{j-k+i,n+k}; every shifted
    // index past N is at least N-k+1.
    double bound = 0.0;
    for (int k = 0; k <= r; ++k) {
        const double e = std::abs(eta(k, x));
        if (e == 0.0) continue;
        bound += e * rising_factorial(n, k) * std::ldexp(1.0, k) * basis_tail_bound(n + k, x, std::max(0, N - k));
    }
    return bound;
}

LebesgueValue lebesgue_value(int n, int r, double x, int N, const EtaPolys& eta, double tail_tolerance) {
    int terms = std::max(N, r);
    double tail = quasi_lagrange_tail_bound(n, r, x, terms, eta);
    while (!(tail < tail_tolerance)) {
        terms += std::max(terms / 2, 16);
        tail = quasi_lagrange_tail_bound(n, r, x, terms, eta);
    }
    double sum = 0.0;
    for (double v : quasi_lagrange_row(n, r, x, terms, eta)) sum += std::abs(v);
    return {sum, terms, tail};
}

double lebesgue_function(int n, int r, double x, int N) {
    return lebesgue_value(n, r, x, N, eta_polys(n, r)).value;
}

LebesgueEstimate norm_estimate(int n, int r, double x_max, double coarse_step, int refine_levels) {
    if (!(x_max > 0.0) || !(coarse_step > 0.0) || refine_levels < 0)
        throw std::invalid_argument("norm_estimate: bad search parameters");
    const EtaPolys& eta = eta_polys(n, r);
    const int N = lebesgue_terms(n, r);
    LebesgueEstimate est{n, r, x_max, coarse_step, refine_levels, 0.0, 0.0};

    // Scan lo + i*step for i = 0..count-1; first maximum wins on ties.
    const auto scan = [&](double lo, double step, std::size_t count) {
        std::vector<double> values(count);
        parallel_for(count, [&](std::size_t i) {
            const double x = std::min(x_max, lo + static_cast<double>(i) * step);
            values[i] = lebesgue_value(n, r, x, N, eta).value;
        });
        for (std::size_t i = 0; i < count; ++i) {
            if (values[i] > est.value) {
                est.value = values[i];
                est.argmax = std::min(x_max, lo + static_cast<double>(i) * step);
            }
        }
    };

    scan(0.0, coarse_step, static_cast<std::size_t>(std::floor(x_max / coarse_step + 1e-9)) + 1);
    double step = coarse_step;
    for (int level = 0; level < refine_levels; ++level) {
        const double centre = est.argmax;
        const double lo = std::max(0.0, centre - step);
        const double hi = std::min(x_max, centre + step);
        step /= 10.0;
        scan(lo, step, static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1);
    }
    return est;
}

}  // namespace baskakov
