#pragma once

#include "baskakov/experiments.hpp"
#include "baskakov/lebesgue.hpp"
#include "baskakov/tabulated.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace baskakov {

enum class Format { csv, json, markdown, paper };

Format parse_format(std::string_view s);

/// Two significant digits: "4.0(-2)" below 0.1, "0.64" in [0.1, 1), "1.5" above.
std::string format_paper(double v);

/// Fixed "%.6e" rendering used by csv/json/markdown outputs.
std::string format_sci(double v);

struct NormTable {
    std::vector<int> n_list;
    std::vector<int> r_list;
    std::vector<std::vector<LebesgueEstimate>> cells;  // [n index][r index]
};

NormTable norm_table(const std::vector<int>& n_list, const std::vector<int>& r_list, double x_max = 10.0,
                     double coarse_step = 0.01, int refine_levels = 3);

std::string render(const ErrorTable& t, Format f);
std::string render(const NormTable& t, Format f);
std::string render(const RateReport& r, Format f);
std::string render(const TauReport& r, Format f);

/// Human-readable verification summary for the tabulated coefficients.
std::string render_errata(const std::vector<TabulatedCheck>& checks);

}  // namespace baskakov
