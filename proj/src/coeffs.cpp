#include "baskakov/coeffs.hpp"

#include "baskakov/combinatorics.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace baskakov {

namespace {

void check_args(int n, int r_max) {
    if (n < 1) throw std::invalid_argument("coefficient tables need n >= 1");
    if (r_max < 0 || r_max > kRMaxCap)
        throw std::invalid_argument("r_max must lie in [0, " + std::to_string(kRMaxCap) + "]");
}

Rational inv_factorial(int k) { return Rational(Integer(1), factorial(k)); }

}  // namespace

std::string_view to_string(Family f) { return f == Family::theta ? "theta" : "eta"; }

std::string_view to_string(Method m) { return m == Method::recurrence ? "recurrence" : "direct"; }

Family parse_family(std::string_view s) {
    if (s == "theta") return Family::theta;
    if (s == "eta") return Family::eta;
    throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

CoeffTable theta_recurrence(int n, int r_max) {
    check_args(n, r_max);
    CoeffTable t{n, Family::theta, Method::recurrence, {}};
    t.polys.reserve(static_cast<std::size_t>(r_max) + 1);
    t.polys.emplace_back(Rational(1));
    if (r_max >= 1) t.polys.emplace_back();
    const Poly big_x = Poly::big_x();
    for (int r = 1; r < r_max; ++r) {
        Poly next = big_x * (t.polys[r].derivative() + t.polys[r - 1]);
        next *= Rational(Integer(1), Integer(n) * (r + 1));
        t.polys.push_back(std::move(next));
    }
    return t;
}

CoeffTable eta_recurrence(int n, int r_max) {
    check_args(n, r_max);
    CoeffTable t{n, Family::eta, Method::recurrence, {}};
    t.polys.reserve(static_cast<std::size_t>(r_max) + 1);
    t.polys.emplace_back(Rational(1));
    if (r_max >= 1) t.polys.emplace_back();
    const Poly big_x = Poly::big_x();
    const Poly one_plus_2x{1, 2};
    for (int r = 1; r < r_max; ++r) {
        Poly next = Rational(-r) * (one_plus_2x * t.polys[r]) - big_x * t.polys[r - 1];
        next *= Rational(Integer(1), Integer(n + r) * (r + 1));
        t.polys.push_back(std::move(next));
    }
    return t;
}

Poly w_poly(int n, int p) {
    if (n < 1 || p < 0) throw std::invalid_argument("w_poly: need n >= 1, p >= 0");
    std::vector<Rational> cs(static_cast<std::size_t>(p) + 1);
    for (int r = 0; r <= p; ++r) cs[r] = Rational(stirling2(p, r)) * rising_factorial(Rational(n), r);
    Poly w(std::move(cs));
    w *= Rational(1) / Rational(n).pow(p);
    return w;
}

Poly pi_poly(int n, int k) {
    Poly p = w_poly(n, k) - Poly::monomial(k);
    p *= inv_factorial(k);
    return p;
}

Poly theta_direct(int n, int r) {
    if (n < 1 || r < 0) throw std::invalid_argument("theta_direct: need n >= 1, r >= 0");
    if (r == 0) return Poly{1};
    if (r == 1) return {};
    Poly out;
    for (int k = 0; k <= r - 2; ++k) {
        Poly term = Poly::monomial(k, inv_factorial(k)) * pi_poly(n, r - k);
        if (k % 2) out -= term;
        else out += term;
    }
    return out;
}

Poly rho_poly(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("rho_poly: need n >= 1, k >= 0");
    Poly p = falling_factorial_poly(n, k);
    p *= Rational(1) / (Rational(factorial(k)) * rising_factorial(Rational(n), k));
    return p;
}

Poly eta_direct(int n, int r) {
    if (n < 1 || r < 0) throw std::invalid_argument("eta_direct: need n >= 1, r >= 0");
    Poly out;
    for (int j = 0; j <= r; ++j) {
        Poly term = Poly::monomial(j, inv_factorial(j)) * rho_poly(n, r - j);
        if (j % 2) out -= term;
        else out += term;
    }
    return out;
}

CoeffTable direct_table(Family family, int n, int r_max) {
    check_args(n, r_max);
    CoeffTable t{n, family, Method::direct, {}};
    for (int r = 0; r <= r_max; ++r)
        t.polys.push_back(family == Family::theta ? theta_direct(n, r) : eta_direct(n, r));
    return t;
}

CoeffTable make_table(Family family, int n, int r_max, Method method) {
    if (method == Method::direct) return direct_table(family, n, r_max);
    return family == Family::theta ? theta_recurrence(n, r_max) : eta_recurrence(n, r_max);
}

AsymptoticPoly asymptotic_poly(int r, Family family) {
    if (r < 2) throw std::invalid_argument("asymptotic_poly: index must be >= 2");
    const Poly big_x = Poly::big_x();
    AsymptoticPoly a{r, family, {}};
    if (r % 2 == 0) {
        // theta_bar_{2m} = X^m / (2^m m!), eta_bar_{2m} = (-1)^m X^m / (2^m m!)
        const int m = r / 2;
        Rational c(Integer(1), (Integer(1) << m) * factorial(m));
        if (family == Family::eta && m % 2) c = -c;
        a.poly = big_x.pow(m) * c;
    } else {
        // theta_bar_{2m-1} = (1+2x) X^{m-1} / (3 2^{m-1} (m-2)!)
        // eta_bar_{2m-1} = (-1)^m (1+2x) X^{m-1} / (3 2^{m-2} (m-2)!)
        const int m = (r + 1) / 2;
        const int shift = family == Family::theta ? m - 1 : m - 2;
        Rational c(Integer(1), Integer(3) * (Integer(1) << shift) * factorial(m - 2));
        if (family == Family::eta && m % 2) c = -c;
        a.poly = Poly{1, 2} * big_x.pow(m - 1) * c;
    }
    return a;
}

Poly apply_differential_operator(const CoeffTable& table, const Poly& p) {
    if (p.degree() > table.r_max())
        throw std::invalid_argument("apply_differential_operator: table shorter than polynomial degree");
    Poly out;
    Poly d = p;
    for (int r = 0; r <= p.degree(); ++r) {
        out += table[r] * d;
        d = d.derivative();
    }
    return out;
}

std::optional<int> first_disagreement(Family family, int n, int r_max) {
    const CoeffTable rec = make_table(family, n, r_max, Method::recurrence);
    const CoeffTable dir = direct_table(family, n, r_max);
    for (int r = 0; r <= r_max; ++r)
        if (rec[r] != dir[r]) return r;
    return std::nullopt;
}

std::optional<int> inverse_identity_failure(int n, int degree) {
    const CoeffTable theta = theta_recurrence(n, std::max(degree, 1));
    const CoeffTable eta = eta_recurrence(n, std::max(degree, 1));
    for (int s = 0; s <= degree; ++s) {
        const Poly m = Poly::monomial(s);
        if (apply_differential_operator(eta, apply_differential_operator(theta, m)) != m) return s;
    }
    return std::nullopt;
}

nlohmann::json to_json(const CoeffTable& table) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int r = 0; r <= table.r_max(); ++r) {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : table[r].coeffs()) cs.push_back(c.str());
        coeffs.push_back({{"r", r}, {"coeffs", std::move(cs)}});
    }
    return {{"n", table.n},
            {"family", std::string(to_string(table.family))},
            {"method", std::string(to_string(table.method))},
            {"coefficients", std::move(coeffs)}};
}

CoeffTable coeff_table_from_json(const nlohmann::json& j) {
    CoeffTable t;
    t.n = j.at("n").get<int>();
    t.family = parse_family(j.at("family").get<std::string>());
    const auto method = j.at("method").get<std::string>();
    if (method == "recurrence") t.method = Method::recurrence;
    else if (method == "direct") t.method = Method::direct;
    else throw std::invalid_argument("unknown method '" + method + "'");
    const auto& entries = j.at("coefficients");
    t.polys.resize(entries.size());
    for (const auto& e : entries) {
        const auto r = e.at("r").get<std::size_t>();
        if (r >= t.polys.size()) throw std::invalid_argument("coefficient index out of range");
        std::vector<Rational> cs;
        for (const auto& c : e.at("coeffs")) cs.push_back(Rational::parse(c.get<std::string>()));
        t.polys[r] = Poly(std::move(cs));
    }
    return t;
}

}  // namespace baskakov
