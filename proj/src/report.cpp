#include "baskakov/report.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace baskakov {

Format parse_format(std::string_view s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    if (s == "markdown" || s == "md") return Format::markdown;
    if (s == "paper" || s == "paper-style") return Format::paper;
    throw std::invalid_argument("unknown output format '" + std::string(s) + "'");
}

std::string format_paper(double v) {
    if (std::isnan(v)) return "nan";
    if (v == 0.0) return "0";
    char buf[64];
    const double mag = std::abs(v);
    if (mag >= 0.1 && mag < 100.0) {
        std::snprintf(buf, sizeof buf, "%.2g", v);
        return buf;
    }
    int e = static_cast<int>(std::floor(std::log10(mag)));
    double m = mag / std::pow(10.0, e);
    m = std::round(m * 10.0) / 10.0;
    if (m >= 10.0) {
        m /= 10.0;
        ++e;
    }
    std::snprintf(buf, sizeof buf, "%s%.1f(%d)", v < 0 ? "-" : "", m, e);
    return buf;
}

std::string format_sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string truncation_name(Truncation t) { return t == Truncation::exact ? "exact" : "shrink"; }

}  // namespace

NormTable norm_table(const std::vector<int>& n_list, const std::vector<int>& r_list, double x_max, double coarse_step,
                     int refine_levels) {
    NormTable t{n_list, r_list, {}};
    for (int n : n_list) {
        std::vector<LebesgueEstimate> row;
        for (int r : r_list) row.push_back(norm_estimate(n, r, x_max, coarse_step, refine_levels));
        t.cells.push_back(std::move(row));
    }
    return t;
}

std::string render(const ErrorTable& t, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::csv:
            os << "n,r,N,sup_error\n";
            for (std::size_t i = 0; i < t.n_list.size(); ++i)
                for (std::size_t j = 0; j < t.r_list.size(); ++j)
                    os << t.n_list[i] << ',' << t.r_list[j] << ',' << t.terms.terms(t.n_list[i]) << ','
                       << format_sci(t.entries[i][j]) << '\n';
            break;
        case Format::json: {
            nlohmann::json j{{"function", t.function_id},
                             {"interval", {t.a, t.b}},
                             {"step", t.step},
                             {"N_rule", t.terms.str()},
                             {"truncation", truncation_name(t.truncation)},
                             {"n", t.n_list},
                             {"r", t.r_list}};
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : t.entries) rows.push_back(row);
            j["errors"] = std::move(rows);
            os << j.dump(2) << '\n';
            break;
        }
        case Format::markdown:
        case Format::paper: {
            const bool paper = f == Format::paper;
            os << "| n |";
            for (int r : t.r_list) os << ' ' << r << " |";
            os << "\n|---|";
            for (std::size_t j = 0; j < t.r_list.size(); ++j) os << "---|";
            os << '\n';
            for (std::size_t i = 0; i < t.n_list.size(); ++i) {
                os << "| " << t.n_list[i] << " |";
                for (double e : t.entries[i]) os << ' ' << (paper ? format_paper(e) : format_sci(e)) << " |";
                os << '\n';
            }
            break;
        }
    }
    return os.str();
}

std::string render(const NormTable& t, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::csv:
            os << "n,r,norm,argmax\n";
            for (std::size_t i = 0; i < t.n_list.size(); ++i)
                for (std::size_t j = 0; j < t.r_list.size(); ++j)
                    os << t.n_list[i] << ',' << t.r_list[j] << ',' << fixed(t.cells[i][j].value, 6) << ','
                       << fixed(t.cells[i][j].argmax, 5) << '\n';
            break;
        case Format::json: {
            nlohmann::json cells = nlohmann::json::array();
            for (const auto& row : t.cells)
                for (const auto& c : row)
                    cells.push_back({{"n", c.n},
                                     {"r", c.r},
                                     {"norm", c.value},
                                     {"argmax", c.argmax},
                                     {"x_max", c.x_max},
                                     {"coarse_step", c.coarse_step},
                                     {"refine_levels", c.refine_levels}});
            os << nlohmann::json{{"cells", std::move(cells)}}.dump(2) << '\n';
            break;
        }
        case Format::markdown:
        case Format::paper: {
            os << "| n \\ r |";
            for (int r : t.r_list) os << ' ' << r << " |";
            os << "\n|---|";
            for (std::size_t j = 0; j < t.r_list.size(); ++j) os << "---|";
            os << '\n';
            for (std::size_t i = 0; i < t.n_list.size(); ++i) {
                os << "| " << t.n_list[i] << " |";
                for (const auto& c : t.cells[i]) os << ' ' << fixed(c.value, f == Format::paper ? 2 : 4) << " |";
                os << '\n';
            }
            break;
        }
    }
    return os.str();
}

std::string render(const RateReport& r, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::csv:
            os << "n,scaled_error,target\n";
            for (std::size_t i = 0; i < r.n_list.size(); ++i)
                os << r.n_list[i] << ',' << format_sci(r.scaled[i]) << ',' << format_sci(r.target) << '\n';
            break;
        case Format::json:
            os << nlohmann::json{{"function", r.function_id},
                                 {"r", r.r},
                                 {"qi_order", r.qi_order},
                                 {"x", r.x},
                                 {"n", r.n_list},
                                 {"scaled_error", r.scaled},
                                 {"target", r.target}}
                      .dump(2)
               << '\n';
            break;
        case Format::markdown:
        case Format::paper:
            os << "| n | n^" << r.r + 1 << " (f - V^(" << r.qi_order << ") f)(" << r.x << ") | target |\n|---|---|---|\n";
            for (std::size_t i = 0; i < r.n_list.size(); ++i)
                os << "| " << r.n_list[i] << " | " << format_sci(r.scaled[i]) << " | " << format_sci(r.target)
                   << " |\n";
            break;
    }
    return os.str();
}

std::string render(const TauReport& r, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::csv:
            os << "r,n,x,generic,closed,rel_diff\n";
            for (const auto& row : r.rows)
                os << r.r << ',' << r.n << ',' << fixed(row.x, 4) << ',' << format_sci(row.generic) << ','
                   << format_sci(row.closed) << ',' << format_sci(row.rel_diff) << '\n';
            break;
        case Format::json: {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : r.rows)
                rows.push_back(
                    {{"x", row.x}, {"generic", row.generic}, {"closed", row.closed}, {"rel_diff", row.rel_diff}});
            os << nlohmann::json{{"r", r.r},
                                 {"n", r.n},
                                 {"function", r.function_id},
                                 {"max_rel_diff", r.max_rel_diff},
                                 {"consistent", r.consistent()},
                                 {"rows", std::move(rows)}}
                      .dump(2)
               << '\n';
            break;
        }
        case Format::markdown:
        case Format::paper:
            os << "tau_" << r.r << " (n = " << r.n << ", " << r.function_id << "): max rel diff "
               << format_sci(r.max_rel_diff) << (r.consistent() ? " consistent" : " MISMATCH (suspected misprint)")
               << '\n';
            break;
    }
    return os.str();
}

std::string render_errata(const std::vector<TabulatedCheck>& checks) {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << to_string(c.family) << '_' << c.r << ": ";
        if (c.printed_matches) {
            os << "matches recurrence\n";
            continue;
        }
        os << (c.printed_parses ? "printed form differs from recurrence" : "printed form is malformed");
        if (c.first_mismatch_n) os << " (first at n = " << *c.first_mismatch_n << ')';
        os << "\n  printed:   " << c.printed_text << '\n';
        if (c.has_correction)
            os << "  corrected: " << c.corrected_text
               << (c.correction_matches ? "  [verified against recurrence]" : "  [correction does NOT verify]") << '\n';
        else
            os << "  no correction on file\n";
    }
    return os.str();
}

}  // namespace baskakov
