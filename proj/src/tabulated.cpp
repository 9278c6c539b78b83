#include "baskakov/tabulated.hpp"

#include "baskakov/combinatorics.hpp"

#include <stdexcept>

namespace baskakov {

namespace {

// prefactor * base * sum_k c_k X^k
Poly closed_form(const Rational& prefactor, const Poly& base, const std::vector<Rational>& x_coeffs) {
    const Poly big_x = Poly::big_x();
    Poly sum;
    Poly power{1};
    for (const auto& c : x_coeffs) {
        sum += power * c;
        power = power * big_x;
    }
    return base * sum * prefactor;
}

Rational poly_n(long n, std::initializer_list<long> coeffs_high_to_low) {
    Rational acc;
    for (long c : coeffs_high_to_low) acc = acc * Rational(n) + Rational(c);
    return acc;
}

Rational theta_prefactor(int n, int r) {
    return Rational(1) / (Rational(factorial(r)) * Rational(n).pow(r - 1));
}

Rational eta_prefactor(int n, long denom, int r) {
    return Rational(1) / (Rational(denom) * rising_factorial(Rational(n + 1), r - 1));
}

const Poly& big_x() {
    static const Poly p = Poly::big_x();
    return p;
}

const Poly& big_x_odd() {
    static const Poly p = Poly::big_x() * Poly{1, 2};
    return p;
}

std::vector<TabulatedEntry> build_entries() {
    std::vector<TabulatedEntry> out;
    using F = std::function<Poly(int)>;

    out.push_back({Family::theta, 5,
                   F([](int n) {
                       return closed_form(theta_prefactor(n, 5), big_x_odd(), {1, poly_n(n, {10, 12})});
                   }),
                   "X/(5! n^4) (2x+1)(1+(10n+12)X)", std::nullopt, ""});

    out.push_back({Family::theta, 6,
                   F([](int n) {
                       return closed_form(theta_prefactor(n, 6), big_x(),
                                          {1, Rational(5) * poly_n(n, {1, 6}), Rational(5) * poly_n(n, {3, 26, 24})});
                   }),
                   "X/(6! n^5) (1+5((n+6)X+(3n^2+26n+24)X^2)",
                   F([](int n) {
                       return closed_form(theta_prefactor(n, 6), big_x(),
                                          {1, Rational(5) * poly_n(n, {5, 6}), Rational(5) * poly_n(n, {3, 26, 24})});
                   }),
                   "X/(6! n^5) (1+5((5n+6)X+(3n^2+26n+24)X^2))"});

    out.push_back({Family::theta, 7,
                   F([](int n) {
                       return closed_form(theta_prefactor(n, 7), big_x_odd(),
                                          {1, Rational(4) * poly_n(n, {14, 15}), Rational(3) * poly_n(n, {35, 154, 120})});
                   }),
                   "X/(7! n^6) (2x+1)(1+4(14n+15)X+3(35n^2+154n+120)X^2)", std::nullopt, ""});

    out.push_back({Family::theta, 8,
                   F([](int n) {
                       return closed_form(theta_prefactor(n, 8), big_x(),
                                          {1, poly_n(n, {119, 126}), poly_n(n, {490, 2156, 1680}),
                                           poly_n(n, {105, 2380, 7308, 5040})});
                   }),
                   "X/(8! n^7) (1+a1 X+a2 X^2+a3 X^3), a1=119n+126, a2=490n^2+2156n+1680, "
                   "a3=105n^3+2380n^2+7308n+5040",
                   std::nullopt, ""});

    // c3 is printed as "1260n^3 13216n^2+32112n+20160": no operator between the
    // first two terms, so there is no printed value to evaluate.
    out.push_back({Family::theta, 9, std::nullopt,
                   "X/(9! n^8) (2x+1)(1+c1 X+c2 X^2+c3 X^3), c1=246n+252, c2=1918n^2+6948n+5040, "
                   "c3=1260n^3 13216n^2+32112n+20160",
                   F([](int n) {
                       return closed_form(theta_prefactor(n, 9), big_x_odd(),
                                          {1, poly_n(n, {246, 252}), poly_n(n, {1918, 6948, 5040}),
                                           poly_n(n, {1260, 13216, 32112, 20160})});
                   }),
                   "c3=1260n^3+13216n^2+32112n+20160"});

    out.push_back({Family::theta, 10,
                   F([](int n) {
                       return closed_form(theta_prefactor(n, 10), big_x(),
                                          {1, poly_n(n, {501, 510}), poly_n(n, {6825, 24438, 17640}),
                                           poly_n(n, {9450, 99120, 240840, 151200}),
                                           poly_n(n, {945, 44100, 303660, 623376, 362880})});
                   }),
                   "X/(10! n^9) (1+d1 X+d2 X^2+d3 X^3+d4 X^4), d1=501n+510, d2=6825n^2+24438n+17640, "
                   "d3=9450n^3+99120n^2+240840n+151200, d4=945n^4+44100n^3+303660n^2+623376n+362880",
                   std::nullopt, ""});

    out.push_back({Family::theta, 11,
                   F([](int n) {
                       return closed_form(theta_prefactor(n, 11), big_x_odd(),
                                          {1, poly_n(n, {1012, 1020}), poly_n(n, {22935, 75834, 52920}),
                                           poly_n(n, {56980, 465960, 1013760, 604800}),
                                           poly_n(n, {17325, 352660, 1839420, 3318480, 1814400})});
                   }),
                   "X/(11! n^10) (2x+1)(1+e1 X+e2 X^2+e3 X^3+e4 X^4), e1=1012n+1020, "
                   "e2=22935n^2+75834n+52920, e3=56980n^3+465960n^2+1013760n+604800, "
                   "e4=17325n^4+352660n^3+1839420n^2+3318480n+1814400",
                   std::nullopt, ""});

    out.push_back({Family::eta, 5,
                   F([](int n) {
                       return closed_form(eta_prefactor(n, 30, 5), big_x_odd(), {6, -poly_n(n, {5, -12})});
                   }),
                   "X/(30 (n+1)_4) (2x+1)(6-(5n-12)X)", std::nullopt, ""});

    out.push_back({Family::eta, 6,
                   F([](int n) {
                       return closed_form(-eta_prefactor(n, 144, 6), Poly::x(),
                                          {24, Rational(-2) * poly_n(n, {13, -60}), poly_n(n, {3, -86, 120})});
                   }),
                   "-x/(144 (n+1)_5) (24-2(13n-60)X+(3n^2-86n+120)X^2)",
                   F([](int n) {
                       return closed_form(-eta_prefactor(n, 144, 6), big_x(),
                                          {24, Rational(-2) * poly_n(n, {13, -60}), poly_n(n, {3, -86, 120})});
                   }),
                   "-X/(144 (n+1)_5) (24-2(13n-60)X+(3n^2-86n+120)X^2)"});

    out.push_back({Family::eta, 7,
                   F([](int n) {
                       return closed_form(eta_prefactor(n, 840, 7), big_x_odd(),
                                          {120, -poly_n(n, {154, -480}), poly_n(n, {35, -378, 360})});
                   }),
                   "X/(840 (n+1)_6) (2x+1)(120-(154n-480)X+(35n^2-378n+360)X^2)", std::nullopt, ""});

    out.push_back({Family::eta, 8,
                   F([](int n) {
                       return closed_form(-eta_prefactor(n, 5760, 8), big_x(),
                                          {720, poly_n(n, {-1044, 5040}), poly_n(n, {340, -5784, 10080}),
                                           poly_n(n, {-15, 1180, -7092, 5040})});
                   }),
                   "-X/(5760 (n+1)_7) (720+a1 X+a2 X^2+a3 X^3), a1=-1044n+5040, a2=340n^2-5784n+10080, "
                   "a3=-15n^3+1180n^2-7092n+5040",
                   std::nullopt, ""});

    out.push_back({Family::eta, 9,
                   F([](int n) {
                       return closed_form(eta_prefactor(n, 45360, 9), big_x_odd(),
                                          {5040, poly_n(n, {-8028, 30240}), poly_n(n, {3304, -36900, 50400}),
                                           poly_n(n, {-315, 9058, -35928, 20160})});
                   }),
                   "X/(45360 (n+1)_8) (2x+1)(5040+c1 X+c2 X^2+c3 X^3), c1=-8028n+30240, "
                   "c2=3304n^2-36900n+50400, c3=-315n^3+9058n^2-35928n+20160",
                   std::nullopt, ""});

    out.push_back({Family::eta, 10,
                   F([](int n) {
                       return closed_form(-eta_prefactor(n, 403200, 10), big_x(),
                                          {40320, poly_n(n, {-69264, 362880}), poly_n(n, {33740, -528912, 1088640}),
                                           poly_n(n, {-4900, 199640, -1214880, 1209600}),
                                           poly_n(n, {105, -17500, 273420, -787824, 362880})});
                   }),
                   "-X/(403200 (n+1)_9) (40320+d1 X+d2 X^2+d3 X^3+d4 X^4), d1=-69264n+362880, "
                   "d2=33740n^2-528912n+1088640, d3=-4900n^3+199640n^2-1214880n+1209600, "
                   "d4=105n^4-17500n^3+273420n^2-787824n+362880",
                   std::nullopt, ""});

    const auto eta11_bracket = [](int n) -> std::vector<Rational> {
        return {362880, poly_n(n, {-663696, 2903040}), poly_n(n, {367884, -4424112, 7620480}),
                poly_n(n, {-70532, 1854072, -8680320, 7257600}),
                poly_n(n, {3465, -207284, 2096028, -4664880, 1814400})};
    };
    out.push_back({Family::eta, 11,
                   F([eta11_bracket](int n) {
                       return closed_form(-eta_prefactor(n, 3991680, 11), big_x(), eta11_bracket(n));
                   }),
                   "-X/(3991680 (n+1)_10) (362880+e1 X+e2 X^2+e3 X^3+e4 X^4), e1=-663696n+2903040, "
                   "e2=367884n^2-4424112n+7620480, e3=-70532n^3+1854072n^2-8680320n+7257600, "
                   "e4=3465n^4-207284n^3+2096028n^2-4664880n+1814400",
                   F([eta11_bracket](int n) {
                       return closed_form(eta_prefactor(n, 3991680, 11), big_x_odd(), eta11_bracket(n));
                   }),
                   "+X/(3991680 (n+1)_10) (2x+1)(362880+e1 X+...+e4 X^4) with e1..e4 as printed"});
    return out;
}

// Exact division a / b; throws if the remainder is nonzero.
Poly exact_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    Poly rem = a;
    std::vector<Rational> q(static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)));
    const Rational lead = b.coeff(b.degree());
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int shift = rem.degree() - b.degree();
        const Rational c = rem.coeff(rem.degree()) / lead;
        q[static_cast<std::size_t>(shift)] = c;
        rem -= Poly::monomial(shift, c) * b;
    }
    if (!rem.is_zero()) throw std::invalid_argument("exact_divide: nonzero remainder");
    return Poly(std::move(q));
}

}  // namespace

const std::vector<TabulatedEntry>& tabulated_entries() {
    static const std::vector<TabulatedEntry> entries = build_entries();
    return entries;
}

std::vector<TabulatedCheck> verify_tabulated(int n_lo, int n_hi) {
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("verify_tabulated: bad n range");
    std::vector<CoeffTable> thetas;
    std::vector<CoeffTable> etas;
    for (int n = n_lo; n <= n_hi; ++n) {
        thetas.push_back(theta_recurrence(n, 11));
        etas.push_back(eta_recurrence(n, 11));
    }
    std::vector<TabulatedCheck> out;
    for (const auto& e : tabulated_entries()) {
        TabulatedCheck c;
        c.family = e.family;
        c.r = e.r;
        c.printed_text = e.printed_text;
        c.corrected_text = e.corrected_text;
        c.printed_parses = e.printed.has_value();
        c.printed_matches = c.printed_parses;
        c.has_correction = e.corrected.has_value();
        c.correction_matches = c.has_correction;
        for (int n = n_lo; n <= n_hi; ++n) {
            const auto& table = (e.family == Family::theta ? thetas : etas)[static_cast<std::size_t>(n - n_lo)];
            const Poly& truth = table[e.r];
            if (c.printed_parses && c.printed_matches && (*e.printed)(n) != truth) {
                c.printed_matches = false;
                c.first_mismatch_n = n;
            }
            if (c.has_correction && c.correction_matches && (*e.corrected)(n) != truth) c.correction_matches = false;
        }
        out.push_back(std::move(c));
    }
    return out;
}

Poly interpolate(const std::vector<int>& nodes, const std::vector<Rational>& values) {
    if (nodes.size() != values.size() || nodes.empty())
        throw std::invalid_argument("interpolate: node/value size mismatch");
    Poly out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Poly basis{1};
        Rational denom(1);
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (i == j) continue;
            basis = basis * Poly{Rational(-nodes[j]), Rational(1)};
            denom *= Rational(nodes[i] - nodes[j]);
        }
        out += basis * (values[i] / denom);
    }
    return out;
}

std::vector<Rational> x_power_coefficients(const Poly& p, const Poly& base) {
    Poly q = exact_divide(p, base);
    const Poly big_x = Poly::big_x();
    std::vector<Rational> out;
    if (q.is_zero()) return out;
    if (q.degree() % 2) throw std::invalid_argument("x_power_coefficients: odd-degree cofactor");
    out.resize(static_cast<std::size_t>(q.degree() / 2) + 1);
    while (!q.is_zero()) {
        if (q.degree() % 2) throw std::invalid_argument("x_power_coefficients: not a polynomial in X");
        const int k = q.degree() / 2;
        const Rational c = q.coeff(q.degree());
        out[static_cast<std::size_t>(k)] = c;
        q -= big_x.pow(k) * c;
    }
    return out;
}

}  // namespace baskakov
