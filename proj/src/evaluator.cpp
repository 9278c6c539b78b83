#include "baskakov/evaluator.hpp"

#include "baskakov/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace baskakov {

namespace {

void require_nonnegative(double x) {
    if (!(x >= 0.0)) throw std::invalid_argument("evaluation point must be >= 0");
}

void require_terms(const SampleSet& s, int N) {
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    if (N > s.last_index())
        throw std::invalid_argument("need samples up to k = " + std::to_string(N) + ", have " +
                                    std::to_string(s.last_index()));
}

// Rescale once a running value passes this, to keep the row finite.
constexpr double kGrowthLimit = 1e250;

}  // namespace

SampleSet SampleSet::from_function(int n, int K, const std::function<double(double)>& f) {
    if (n < 1 || K < 0) throw std::invalid_argument("SampleSet: need n >= 1 and K >= 0");
    SampleSet s{n, {}};
    s.values.reserve(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) s.values.push_back(f(static_cast<double>(k) / n));
    return s;
}

double BasisRow::value(int k) const {
    const double v = values.at(static_cast<std::size_t>(k));
    return log_scale == 0.0 ? v : v * std::exp(log_scale);
}

BasisRow basis_row(int n, double x, int N) {
    require_nonnegative(x);
    if (n < 1 || N < 0) throw std::invalid_argument("basis_row: need n >= 1 and N >= 0");
    BasisRow row{n, N, x, std::vector<double>(static_cast<std::size_t>(N) + 1, 0.0), 0.0};
    if (x == 0.0) {
        row.values[0] = 1.0;
        return row;
    }
    const double y = x / (1.0 + x);
    const double log_lead = -n * std::log1p(x);
    double v = 0.0;
    if (log_lead < std::log(kRescaleThreshold)) {
        row.log_scale = log_lead;
        v = 1.0;
    } else {
        v = std::exp(log_lead);
    }
    row.values[0] = v;
    for (int k = 0; k < N; ++k) {
        v *= y * (n + k) / (k + 1);
        if (row.log_scale != 0.0 && v > kGrowthLimit) {
            for (int j = 0; j <= k; ++j) row.values[j] /= kGrowthLimit;
            v /= kGrowthLimit;
            row.log_scale += std::log(kGrowthLimit);
        }
        row.values[k + 1] = v;
    }
    return row;
}

double basis_tail_bound(int n, double x, int N) {
    require_nonnegative(x);
    if (x == 0.0) return 0.0;
    const double y = x / (1.0 + x);
    // v_{N+1} in log form, then the ratio bound for all later terms.
    const double log_next = std::lgamma(n + N + 1.0) - std::lgamma(N + 2.0) - std::lgamma(static_cast<double>(n)) +
                            (N + 1.0) * std::log(y) - n * std::log1p(x);
    const double ratio = y * (n + N + 1.0) / (N + 2.0);
    if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
    return std::exp(log_next) / (1.0 - ratio);
}

std::vector<double> forward_diff(std::span<const double> values, int p) {
    if (p < 0) throw std::invalid_argument("forward_diff: negative order");
    if (static_cast<std::size_t>(p) >= values.size())
        throw std::invalid_argument("forward_diff: order exceeds sequence length");
    std::vector<double> d(values.begin(), values.end());
    for (int pass = 0; pass < p; ++pass) {
        for (std::size_t k = 0; k + 1 < d.size(); ++k) d[k] = d[k + 1] - d[k];
        d.pop_back();
    }
    return d;
}

std::vector<double> truncated_differences(const SampleSet& s, int N, int p, Truncation truncation) {
    require_terms(s, N);
    if (p > N) throw std::invalid_argument("derivative order exceeds N");
    std::vector<double> head(s.values.begin(), s.values.begin() + N + 1);
    if (truncation == Truncation::exact) head.resize(head.size() + static_cast<std::size_t>(p), 0.0);
    return forward_diff(head, p);
}

namespace {

// sum_k d_k v_{k,m}(x) over the given coefficients.
double weighted_basis_sum(int m, double x, std::span<const double> d) {
    if (d.empty()) return 0.0;
    const BasisRow row = basis_row(m, x, static_cast<int>(d.size()) - 1);
    double acc = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k) acc += d[k] * row.values[k];
    return row.rescaled() ? acc * std::exp(row.log_scale) : acc;
}

}  // namespace

double baskakov_eval(const SampleSet& s, int N, double x) {
    require_nonnegative(x);
    require_terms(s, N);
    return weighted_basis_sum(s.n, x, std::span<const double>(s.values.data(), static_cast<std::size_t>(N) + 1));
}

double deriv_eval(const SampleSet& s, int N, int p, double x, Truncation truncation) {
    require_nonnegative(x);
    if (p < 0) throw std::invalid_argument("deriv_eval: negative order");
    if (p == 0) return baskakov_eval(s, N, x);
    const auto d = truncated_differences(s, N, p, truncation);
    return rising_factorial(s.n, p) * weighted_basis_sum(s.n + p, x, d);
}

EtaPolys::EtaPolys(const CoeffTable& eta) : n_(eta.n) {
    if (eta.family != Family::eta) throw std::invalid_argument("EtaPolys needs an eta table");
    coeffs_.reserve(eta.polys.size());
    for (const auto& p : eta.polys) coeffs_.push_back(p.to_doubles());
}

const EtaPolys& eta_polys(int n, int r_max) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const EtaPolys>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot || slot->r_max() < r_max)
        slot = std::make_unique<const EtaPolys>(eta_recurrence(n, std::max(r_max, kDefaultRMax)));
    return *slot;
}

double qi_eval(const SampleSet& s, const QIConfig& cfg, double x, const EtaPolys& eta) {
    require_nonnegative(x);
    if (cfg.n != s.n || eta.n() != s.n) throw std::invalid_argument("qi_eval: n mismatch between inputs");
    if (cfg.r < 0 || cfg.r > eta.r_max()) throw std::invalid_argument("qi_eval: eta table does not cover r");
    if (cfg.r > cfg.N) throw std::invalid_argument("qi_eval: r exceeds N");
    double acc = baskakov_eval(s, cfg.N, x);
    for (int k = 2; k <= cfg.r; ++k) {
        const double e = eta(k, x);
        if (e == 0.0) continue;
        acc += e * deriv_eval(s, cfg.N, k, x, cfg.truncation);
    }
    return acc;
}

double qi_eval(const SampleSet& s, const QIConfig& cfg, double x) {
    return qi_eval(s, cfg, x, eta_polys(cfg.n, std::max(cfg.r, kDefaultRMax)));
}

double shifted_series(int n, int order, std::span<const double> diffs, double x) {
    require_nonnegative(x);
    if (diffs.empty()) return 0.0;
    if (x == 0.0) return std::pow(1.0 + x, -n) * diffs[0];
    const double y = x / (1.0 + x);
    // term_k = (1+x)^{-n} C(n+order+k-1, k) y^k
    double term = std::pow(1.0 + x, -n);
    double acc = 0.0;
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        acc += diffs[k] * term;
        term *= y * (n + order + static_cast<double>(k)) / (static_cast<double>(k) + 1.0);
    }
    return acc;
}

double qi_eval_closed(const SampleSet& s, const QIConfig& cfg, double x) {
    require_nonnegative(x);
    if (cfg.r < 2 || cfg.r > 4) throw std::invalid_argument("qi_eval_closed: r must be 2, 3 or 4");
    if (cfg.n != s.n) throw std::invalid_argument("qi_eval_closed: n mismatch");
    require_terms(s, cfg.N);
    const int n = cfg.n;
    const double nd = n;
    // V_n f = (1+x)^{-n} sum_k C(n+k-1,k) f_k y^k.
    double acc = shifted_series(n, 0, std::span<const double>(s.values.data(), static_cast<std::size_t>(cfg.N) + 1), x);
    if (x == 0.0) return acc;
    const double y = x / (1.0 + x);
    const auto series = [&](int order) {
        const auto d = truncated_differences(s, cfg.N, order, cfg.truncation);
        return shifted_series(n, order, d, x);
    };
    acc += -0.5 * nd * y * series(2);
    if (cfg.r >= 3) acc += nd / 3.0 * y * (1.0 + y) * series(3);
    // y^2 (2z - (n-2)) with z = y + 1/y, expanded to avoid 1/y.
    if (cfg.r >= 4) acc += -nd / 8.0 * (2.0 * y + 2.0 * y * y * y - (nd - 2.0) * y * y) * series(4);
    return acc;
}

}  // namespace baskakov
