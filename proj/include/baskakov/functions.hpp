#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace baskakov {

/// Highest derivative order the registry functions provide.
inline constexpr int kMaxDerivativeOrder = 12;

struct TestFunction {
    std::string id;
    std::string formula;
    std::function<double(double)> value;
    /// D^k f(x) for 0 <= k <= kMaxDerivativeOrder, in closed form.
    std::function<double(int, double)> derivative;
};

/// exp-neg: exp(-x); runge: 1/(1+x^2); gauss: exp(-x^2); log1p: ln(1+x);
/// damped-sine: sin(6x)/(1+x^2).
const std::vector<TestFunction>& function_registry();

/// Throws std::invalid_argument for an unknown id.
const TestFunction& find_function(std::string_view id);

}  // namespace baskakov
