#include "baskakov/functions.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace baskakov {

namespace {

void check_order(int k) {
    if (k < 0 || k > kMaxDerivativeOrder) throw std::invalid_argument("derivative order out of range");
}

double factorial_d(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// D^k 1/(1+x^2) = Im[(-1)^k k! (x - i)^{-(k+1)}]
double runge_derivative(int k, double x) {
    const std::complex<double> z(x, -1.0);
    const std::complex<double> v = (k % 2 ? -1.0 : 1.0) * factorial_d(k) / std::pow(z, k + 1);
    return v.imag();
}

// D^k exp(-x^2) = (-1)^k H_k(x) exp(-x^2), physicists' Hermite polynomials.
double gauss_derivative(int k, double x) {
    double h_prev = 1.0;
    double h = 2.0 * x;
    if (k == 0) h = 1.0;
    for (int j = 1; j < k; ++j) {
        const double next = 2.0 * x * h - 2.0 * j * h_prev;
        h_prev = h;
        h = next;
    }
    return (k % 2 ? -1.0 : 1.0) * h * std::exp(-x * x);
}

double log1p_derivative(int k, double x) {
    if (k == 0) return std::log1p(x);
    return (k % 2 ? 1.0 : -1.0) * factorial_d(k - 1) / std::pow(1.0 + x, k);
}

// Leibniz rule on sin(6x) * 1/(1+x^2).
double damped_sine_derivative(int k, double x) {
    double acc = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= k; ++j) {
        const double sine = std::pow(6.0, j) * std::sin(6.0 * x + j * std::numbers::pi / 2.0);
        acc += binom * sine * runge_derivative(k - j, x);
        binom = binom * (k - j) / (j + 1);
    }
    return acc;
}

std::vector<TestFunction> build_registry() {
    std::vector<TestFunction> r;
    r.push_back({"exp-neg", "exp(-x)", [](double x) { return std::exp(-x); },
                 [](int k, double x) {
                     check_order(k);
                     return (k % 2 ? -1.0 : 1.0) * std::exp(-x);
                 }});
    r.push_back({"runge", "1/(1+x^2)", [](double x) { return 1.0 / (1.0 + x * x); },
                 [](int k, double x) {
                     check_order(k);
                     return runge_derivative(k, x);
                 }});
    r.push_back({"gauss", "exp(-x^2)", [](double x) { return std::exp(-x * x); },
                 [](int k, double x) {
                     check_order(k);
                     return gauss_derivative(k, x);
                 }});
    r.push_back({"log1p", "ln(1+x)", [](double x) { return std::log1p(x); },
                 [](int k, double x) {
                     check_order(k);
                     return log1p_derivative(k, x);
                 }});
    r.push_back({"damped-sine", "sin(6x)/(1+x^2)", [](double x) { return std::sin(6.0 * x) / (1.0 + x * x); },
                 [](int k, double x) {
                     check_order(k);
                     return damped_sine_derivative(k, x);
                 }});
    return r;
}

}  // namespace

const std::vector<TestFunction>& function_registry() {
    static const std::vector<TestFunction> registry = build_registry();
    return registry;
}

const TestFunction& find_function(std::string_view id) {
    for (const auto& f : function_registry())
        if (f.id == id) return f;
    throw std::invalid_argument("unknown function id '" + std::string(id) + "'");
}

}  // namespace baskakov
