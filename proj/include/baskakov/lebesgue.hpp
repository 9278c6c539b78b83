#pragma once

#include "baskakov/evaluator.hpp"

#include <vector>

namespace baskakov {

/// Default omitted-tail tolerance for Lebesgue sums.
inline constexpr double kLebesgueTailTolerance = 1e-10;

/// Starting truncation for Lebesgue sums: 10n + 20r.
inline int lebesgue_terms(int n, int r) { return 10 * n + 20 * r; }

/// v^{(r)}_{j,n}(x) = sum_{k<=r} eta_k(x) D^k v_{j,n}(x) for j = 0..N, with
/// D^k v_{j,n} = (-1)^k (n)_k sum_i (-1)^{k-i} C(k,i) v_{j-k+i,n+k}.
std::vector<double> quasi_lagrange_row(int n, int r, double x, int N, const EtaPolys& eta);
std::vector<double> quasi_lagrange_row(int n, int r, double x, int N);

/// Bound on sum_{j>N} |v^{(r)}_{j,n}(x)|.
double quasi_lagrange_tail_bound(int n, int r, double x, int N, const EtaPolys& eta);

struct LebesgueValue {
    double value = 0.0;
    int terms = 0;
    double tail_bound = 0.0;
};

/// sum_j |v^{(r)}_{j,n}(x)|. N is the starting truncation; it grows until the
/// omitted tail is below tail_tolerance.
LebesgueValue lebesgue_value(int n, int r, double x, int N, const EtaPolys& eta,
                             double tail_tolerance = kLebesgueTailTolerance);
double lebesgue_function(int n, int r, double x, int N);

struct LebesgueEstimate {
    int n = 0;
    int r = 0;
    double x_max = 10.0;
    double coarse_step = 0.01;
    int refine_levels = 3;
    double value = 1.0;
    double argmax = 0.0;
};

/// max of the Lebesgue function on [0, x_max]: a scan at coarse_step, then
/// refine_levels passes around the best point, each with a tenth of the step.
LebesgueEstimate norm_estimate(int n, int r, double x_max = 10.0, double coarse_step = 0.01, int refine_levels = 3);

}  // namespace baskakov
