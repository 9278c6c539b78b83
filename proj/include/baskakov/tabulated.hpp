#pragma once

// Transcriptions of the published closed forms of theta_r^(n), eta_r^(n) for
// r = 5..11, and their verification against the recurrence.
//
// Each closed form is a polynomial in x whose coefficients are rational
// functions of n with numerators of degree <= 4 inside each X-power. Exact
// agreement at 14 consecutive values of n therefore certifies the identity.

#include "baskakov/coeffs.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace baskakov {

struct TabulatedEntry {
    Family family;
    int r;
    /// Expression as printed; std::nullopt when the printed form is not a
    /// well-formed expression.
    std::optional<std::function<Poly(int n)>> printed;
    std::string printed_text;
    /// Corrected expression for entries known to be misprinted.
    std::optional<std::function<Poly(int n)>> corrected;
    std::string corrected_text;
};

const std::vector<TabulatedEntry>& tabulated_entries();

struct TabulatedCheck {
    Family family = Family::theta;
    int r = 0;
    /// Printed form equals the recurrence at every tested n (false when the
    /// printed form does not parse).
    bool printed_matches = false;
    bool printed_parses = true;
    /// First n where the printed form disagrees.
    std::optional<int> first_mismatch_n;
    bool has_correction = false;
    bool correction_matches = false;
    std::string printed_text;
    std::string corrected_text;

    /// Mismatch that no verified correction accounts for.
    bool unexplained() const { return !printed_matches && !(has_correction && correction_matches); }
};

/// Compares every entry with eta/theta_recurrence at n = n_lo..n_hi.
std::vector<TabulatedCheck> verify_tabulated(int n_lo = 1, int n_hi = 14);

/// Lagrange interpolation through (n_i, values_i) with exact rationals;
/// coefficient i of the result multiplies n^i.
Poly interpolate(const std::vector<int>& nodes, const std::vector<Rational>& values);

/// Reads the coefficient of X^k (k >= 0) in the cofactor c(x) of a polynomial
/// written as base(x) * sum_k c_k X^k. Throws std::invalid_argument if the
/// division is not exact.
std::vector<Rational> x_power_coefficients(const Poly& p, const Poly& base);

}  // namespace baskakov
