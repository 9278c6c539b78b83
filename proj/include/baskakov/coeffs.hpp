#pragma once

#include "baskakov/poly.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace baskakov {

/// theta: coefficients of V_n = sum theta_r D^r; eta: coefficients of the
/// inverse U_n = sum eta_r D^r (both acting on polynomials).
enum class Family { theta, eta };
enum class Method { recurrence, direct };

std::string_view to_string(Family f);
std::string_view to_string(Method m);
Family parse_family(std::string_view s);

inline constexpr int kDefaultRMax = 12;
inline constexpr int kRMaxCap = 32;

/// theta_r^(n) or eta_r^(n) for one fixed n, r = 0..r_max.
struct CoeffTable {
    int n = 1;
    Family family = Family::theta;
    Method method = Method::recurrence;
    std::vector<Poly> polys;

    int r_max() const { return static_cast<int>(polys.size()) - 1; }
    const Poly& operator[](int r) const { return polys.at(static_cast<std::size_t>(r)); }
};

/// n(r+1) theta_{r+1} = X (D theta_r + theta_{r-1}), theta_0 = 1, theta_1 = 0.
CoeffTable theta_recurrence(int n, int r_max = kDefaultRMax);

/// (n+r)(r+1) eta_{r+1} = -r(1+2x) eta_r - X eta_{r-1}, eta_0 = 1, eta_1 = 0.
CoeffTable eta_recurrence(int n, int r_max = kDefaultRMax);

/// w_p = V_n m_p = n^{-p} sum_r S(p,r) (n)_r x^r.
Poly w_poly(int n, int p);

/// pi_k = (w_k - x^k) / k!.
Poly pi_poly(int n, int k);

/// theta_r by inverting the unit lower-triangular system in pi_2..pi_r.
Poly theta_direct(int n, int r);

/// rho_k = [nx]_k / (k! (n)_k).
Poly rho_poly(int n, int k);

/// eta_k = sum_j (-1)^j x^j/j! rho_{k-j}.
Poly eta_direct(int n, int r);

/// Full table built from the direct constructions.
CoeffTable direct_table(Family family, int n, int r_max = kDefaultRMax);

CoeffTable make_table(Family family, int n, int r_max = kDefaultRMax, Method method = Method::recurrence);

/// Limit of n^l * theta_r^(n) (or eta) as n grows, l = ceil(r/2).
struct AsymptoticPoly {
    int r = 2;
    Family family = Family::theta;
    Poly poly;

    int scaling_power() const { return (r + 1) / 2; }
};

/// Closed-form limit polynomial for index r >= 2. Throws std::invalid_argument
/// for r < 2.
AsymptoticPoly asymptotic_poly(int r, Family family);

/// sum_{r} table[r] * D^r p. Throws std::invalid_argument when the table is
/// too short to reach deg p.
Poly apply_differential_operator(const CoeffTable& table, const Poly& p);

/// First r <= r_max where the recurrence and the direct construction differ.
std::optional<int> first_disagreement(Family family, int n, int r_max = kDefaultRMax);

/// First s <= degree with (sum eta_r D^r)(sum theta_r D^r) x^s != x^s.
std::optional<int> inverse_identity_failure(int n, int degree);

/// {"n":..,"family":..,"method":..,"coefficients":[{"r":0,"coeffs":["p/q",..]},..]}
nlohmann::json to_json(const CoeffTable& table);
CoeffTable coeff_table_from_json(const nlohmann::json& j);

}  // namespace baskakov
