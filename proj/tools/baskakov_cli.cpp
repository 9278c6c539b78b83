#include "baskakov/coeffs.hpp"
#include "baskakov/evaluator.hpp"
#include "baskakov/experiments.hpp"
#include "baskakov/functions.hpp"
#include "baskakov/lebesgue.hpp"
#include "baskakov/report.hpp"
#include "baskakov/tabulated.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bk = baskakov;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kData = 3 };

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_int(std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return v;
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
    return v;
}

// "10,20,30", "2..9", or a mix such as "1,3..5".
std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_int(item));
            continue;
        }
        const int lo = parse_int(std::string_view(item).substr(0, dots));
        const int hi = parse_int(std::string_view(item).substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("empty range '" + item + "'");
        for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::pair<double, double> parse_interval(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("interval must look like 'a,b'");
    return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// CSV with header "k,value" and rows k = 0, 1, 2, ... in order.
bk::SampleSet read_samples(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open sample file '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw DataError("sample file is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "k,value") throw DataError("sample file header must be 'k,value'");
    bk::SampleSet s{n, {}};
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        try {
            if (comma == std::string::npos) throw std::invalid_argument("missing comma");
            const int k = parse_int(std::string_view(line).substr(0, comma));
            if (k != s.last_index() + 1)
                throw std::invalid_argument("expected k = " + std::to_string(s.last_index() + 1));
            s.values.push_back(parse_double(line.substr(comma + 1)));
        } catch (const std::invalid_argument& e) {
            throw DataError("sample file line " + std::to_string(row) + ": " + e.what());
        }
    }
    if (s.values.empty()) throw DataError("sample file has no rows");
    return s;
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out) throw DataError("cannot write '" + output + "'");
    out << text;
}

// coeffs ---------------------------------------------------------------------

struct CoeffsArgs {
    int n = 10;
    std::string family = "theta";
    std::optional<int> r;
    int r_max = bk::kDefaultRMax;
    std::string method = "recurrence";
    bool json = false;
    bool verify = false;
    std::string output;
};

int run_coeffs_verify(const CoeffsArgs& a) {
    std::ostringstream os;
    bool ok = true;
    for (bk::Family fam : {bk::Family::theta, bk::Family::eta}) {
        for (int n = 1; n <= 8; ++n) {
            if (const auto r = bk::first_disagreement(fam, n, a.r_max)) {
                os << "cross-check " << bk::to_string(fam) << " n = " << n << ": recurrence and direct differ at r = "
                   << *r << '\n';
                ok = false;
            }
        }
    }
    if (ok) os << "cross-check: recurrence equals direct construction for n = 1..8, r <= " << a.r_max << '\n';

    std::vector<bk::TabulatedCheck> checks;
    for (auto& c : bk::verify_tabulated(1, 14))
        if (c.r <= a.r_max) checks.push_back(std::move(c));
    if (!checks.empty()) {
        os << "tabulated forms, n = 1..14:\n" << bk::render_errata(checks);
        for (const auto& c : checks)
            if (c.unexplained()) {
                os << "UNEXPLAINED mismatch: " << bk::to_string(c.family) << '_' << c.r << '\n';
                ok = false;
            }
    }
    emit(os.str(), a.output);
    return ok ? kOk : kMismatch;
}

int run_coeffs(const CoeffsArgs& a) {
    if (a.r_max < 0 || a.r_max > bk::kRMaxCap)
        throw std::invalid_argument("--r-max must lie in 0.." + std::to_string(bk::kRMaxCap));
    if (a.verify) return run_coeffs_verify(a);
    if (a.n < 1) throw std::invalid_argument("--n must be >= 1");
    const bk::Method method = a.method == "direct" ? bk::Method::direct : bk::Method::recurrence;
    if (a.r) {
        if (*a.r < 0 || *a.r > bk::kRMaxCap) throw std::invalid_argument("--r out of range");
        const bk::CoeffTable t = bk::make_table(bk::parse_family(a.family), a.n, std::max(*a.r, 1), method);
        emit(t[*a.r].str() + '\n', a.output);
        return kOk;
    }
    const bk::CoeffTable t = bk::make_table(bk::parse_family(a.family), a.n, a.r_max, method);
    if (a.json) {
        emit(bk::to_json(t).dump(2) + '\n', a.output);
        return kOk;
    }
    std::ostringstream os;
    for (int r = 0; r <= t.r_max(); ++r) os << bk::to_string(t.family) << '_' << r << " = " << t[r].str() << '\n';
    emit(os.str(), a.output);
    return kOk;
}

// approx ---------------------------------------------------------------------

struct ApproxArgs {
    std::string fn;
    std::string samples;
    std::string n = "10";
    std::string r = "1";
    std::string n_rule = "5n";
    std::string truncation = "exact";
    std::optional<double> at;
    std::string interval = "0,2";
    double step = 0.002;
    std::string format = "markdown";
    bool paper_style = false;
    std::string output;
};

int run_approx(const ApproxArgs& a) {
    if (a.fn.empty() == a.samples.empty()) throw std::invalid_argument("give exactly one of --fn and --samples");
    const auto n_list = parse_int_list(a.n);
    const auto r_list = parse_int_list(a.r);
    const bk::TermRule rule = bk::TermRule::parse(a.n_rule);
    const bk::Truncation trunc = a.truncation == "shrink" ? bk::Truncation::shrink : bk::Truncation::exact;
    if (a.truncation != "shrink" && a.truncation != "exact")
        throw std::invalid_argument("--truncation must be exact or shrink");
    for (int n : n_list)
        if (n < 1) throw std::invalid_argument("--n values must be >= 1");
    for (int r : r_list)
        if (r < 0 || r > bk::kRMaxCap) throw std::invalid_argument("--r values out of range");

    std::optional<bk::SampleSet> file_samples;
    if (!a.samples.empty()) {
        if (n_list.size() != 1) throw std::invalid_argument("--samples needs a single --n");
        if (!a.at) throw std::invalid_argument("--samples needs --at (no reference function for an error table)");
        file_samples = read_samples(a.samples, n_list.front());
    }
    const bk::TestFunction* f = a.fn.empty() ? nullptr : &bk::find_function(a.fn);

    if (a.at) {
        if (*a.at < 0.0) throw std::invalid_argument("--at must be >= 0");
        std::ostringstream os;
        const bool single = n_list.size() == 1 && r_list.size() == 1;
        if (!single) os << "n,r,x,value\n";
        for (int n : n_list) {
            const int N = rule.terms(n);
            const bk::SampleSet s = f ? bk::SampleSet::from_function(n, N, f->value) : *file_samples;
            if (s.last_index() < N)
                throw DataError("need samples k = 0.." + std::to_string(N) + ", have 0.." +
                                std::to_string(s.last_index()));
            for (int r : r_list) {
                if (r > N) throw std::invalid_argument("r exceeds N");
                const double v = bk::qi_eval(s, bk::QIConfig{n, r, N, trunc}, *a.at);
                if (single)
                    os << format_value(v) << '\n';
                else
                    os << n << ',' << r << ',' << format_value(*a.at) << ',' << format_value(v) << '\n';
            }
        }
        emit(os.str(), a.output);
        return kOk;
    }

    const auto [lo, hi] = parse_interval(a.interval);
    const bk::ErrorTable t = bk::error_table(*f, n_list, r_list, lo, hi, a.step, rule, trunc);
    emit(bk::render(t, a.paper_style ? bk::Format::paper : bk::parse_format(a.format)), a.output);
    return kOk;
}

// norms ----------------------------------------------------------------------

struct NormsArgs {
    std::string n = "8,16,24,32,40,48";
    std::string r = "2..9";
    double x_max = 10.0;
    double step = 0.01;
    int refine = 3;
    std::string format = "paper";
    std::string output;
};

int run_norms(const NormsArgs& a) {
    const auto n_list = parse_int_list(a.n);
    const auto r_list = parse_int_list(a.r);
    for (int n : n_list)
        if (n < 1) throw std::invalid_argument("--n values must be >= 1");
    for (int r : r_list)
        if (r < 0 || r > bk::kRMaxCap) throw std::invalid_argument("--r values out of range");
    if (!(a.x_max > 0.0) || !(a.step > 0.0) || a.refine < 0) throw std::invalid_argument("bad scan parameters");
    const bk::NormTable t = bk::norm_table(n_list, r_list, a.x_max, a.step, a.refine);
    emit(bk::render(t, bk::parse_format(a.format)), a.output);
    return kOk;
}

// rates ----------------------------------------------------------------------

struct RatesArgs {
    std::string fn = "exp-neg";
    int r = 1;
    std::string x = "1";
    std::string n = "32,64,128,256";
    bool even = false;
    std::string n_rule = "10n";
    bool poly = false;
    std::string format = "markdown";
    std::string output;
};

int run_rates(const RatesArgs& a) {
    const auto n_list = parse_int_list(a.n);
    for (int n : n_list)
        if (n < 1) throw std::invalid_argument("--n values must be >= 1");
    if (a.poly) {
        const bk::PolyRateReport rep = bk::polynomial_voronovskaya(a.r, bk::Rational::parse(a.x), n_list);
        std::ostringstream os;
        os << "n,scaled_error,target\n";
        for (std::size_t i = 0; i < n_list.size(); ++i)
            os << n_list[i] << ',' << rep.scaled[i].str() << ',' << rep.target.str() << '\n';
        emit(os.str(), a.output);
        return kOk;
    }
    const bk::RateReport rep =
        bk::voronovskaya_check(bk::find_function(a.fn), a.r, parse_double(a.x), n_list, a.even, bk::TermRule::parse(a.n_rule));
    emit(bk::render(rep, bk::parse_format(a.format)), a.output);
    return kOk;
}

// verify ---------------------------------------------------------------------

int run_verify(const std::string& output) {
    std::ostringstream os;
    bool ok = true;
    auto line = [&](bool pass, const std::string& what) {
        os << (pass ? "ok       " : "MISMATCH ") << what << '\n';
        ok = ok && pass;
    };

    bool cross = true;
    for (bk::Family fam : {bk::Family::theta, bk::Family::eta})
        for (int n = 1; n <= 8; ++n) cross = cross && !bk::first_disagreement(fam, n, 12);
    line(cross, "recurrence vs direct coefficients, n = 1..8, r <= 12");

    const auto checks = bk::verify_tabulated(1, 14);
    bool tab = true;
    for (const auto& c : checks) tab = tab && !c.unexplained();
    line(tab, "tabulated forms r = 5..11 (known misprints corrected)");

    bool inverse = true;
    for (int n : {2, 5, 10}) inverse = inverse && !bk::inverse_identity_failure(n, 10);
    line(inverse, "inverse identity on polynomials of degree <= 10, n = 2, 5, 10");

    const auto xs = bk::uniform_grid(0.0, 2.0, 0.05);
    double gap = 0.0;
    for (const auto& f : bk::function_registry())
        for (int r = 2; r <= 4; ++r) gap = std::max(gap, bk::two_path_gap(f, 20, r, xs));
    line(gap <= 1e-12, "generic vs closed-form quasi-interpolant, r = 2..4 (max rel gap " + bk::format_sci(gap) + ")");

    os << "\nerrata:\n" << bk::render_errata(checks) << "\nclosed forms tau_5..tau_9 (n = 10, exp-neg):\n";
    for (int r = 5; r <= 9; ++r)
        os << bk::render(bk::tau_consistency(r, 10, xs, bk::find_function("exp-neg")), bk::Format::markdown);
    emit(os.str(), output);
    return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Baskakov operators and their left quasi-interpolants"};
    app.require_subcommand(1);

    CoeffsArgs ca;
    auto* coeffs = app.add_subcommand("coeffs", "theta/eta coefficient polynomials as exact rationals");
    coeffs->add_option("--n", ca.n, "Operator index n");
    coeffs->add_option("--family", ca.family, "theta or eta");
    coeffs->add_option("--r", ca.r, "Print only coefficient r");
    coeffs->add_option("--r-max", ca.r_max, "Highest r in the table");
    coeffs->add_option("--method", ca.method, "recurrence or direct")->check(CLI::IsMember({"recurrence", "direct"}));
    coeffs->add_flag("--json", ca.json, "JSON output");
    coeffs->add_flag("--verify", ca.verify, "Cross-check constructions and tabulated forms");
    coeffs->add_option("--output,-o", ca.output, "Output file");

    ApproxArgs aa;
    auto* approx = app.add_subcommand("approx", "Quasi-interpolant values or sup-error tables");
    auto* fn_opt = approx->add_option("--fn", aa.fn, "Registry function id");
    approx->add_option("--samples", aa.samples, "CSV file with header k,value")->excludes(fn_opt);
    approx->add_option("--n", aa.n, "n values, e.g. 10,20,30");
    approx->add_option("--r", aa.r, "Orders, e.g. 1,3,5 or 2..9");
    approx->add_option("--N-rule", aa.n_rule, "Series length: '5n' or a count");
    approx->add_option("--truncation", aa.truncation, "exact or shrink");
    approx->add_option("--at", aa.at, "Evaluate at a single x");
    approx->add_option("--interval", aa.interval, "Error interval a,b");
    approx->add_option("--step", aa.step, "Grid step");
    approx->add_option("--format", aa.format, "csv, json, markdown or paper");
    approx->add_flag("--paper-style", aa.paper_style, "Two-digit d.d(-e) table");
    approx->add_option("--output,-o", aa.output, "Output file");

    NormsArgs na;
    auto* norms = app.add_subcommand("norms", "Sup norms of the quasi-interpolants on [0, x_max]");
    norms->add_option("--n", na.n, "n values");
    norms->add_option("--r", na.r, "Orders, e.g. 2..9");
    norms->add_option("--x-max", na.x_max, "Right end of the scan");
    norms->add_option("--step", na.step, "Coarse scan step");
    norms->add_option("--refine", na.refine, "Refinement passes");
    norms->add_option("--format", na.format, "csv, json, markdown or paper");
    norms->add_option("--output,-o", na.output, "Output file");

    RatesArgs ra;
    auto* rates = app.add_subcommand("rates", "Scaled errors n^{r+1}(f - V^(2r+1) f)(x)");
    rates->add_option("--fn", ra.fn, "Registry function id");
    rates->add_option("--r", ra.r, "r");
    rates->add_option("--x", ra.x, "Point x (p/q with --poly)");
    rates->add_option("--n", ra.n, "n values");
    rates->add_flag("--even", ra.even, "Use the even order 2r");
    rates->add_option("--N-rule", ra.n_rule, "Series length: '10n' or a count");
    rates->add_flag("--poly", ra.poly, "Exact check on x^{2r+2}");
    rates->add_option("--format", ra.format, "csv, json, markdown or paper");
    rates->add_option("--output,-o", ra.output, "Output file");

    std::string verify_output;
    auto* verify = app.add_subcommand("verify", "Run the built-in consistency checks");
    verify->add_option("--output,-o", verify_output, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*coeffs) return run_coeffs(ca);
        if (*approx) return run_approx(aa);
        if (*norms) return run_norms(na);
        if (*rates) return run_rates(ra);
        if (*verify) return run_verify(verify_output);
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kData;
    }
    return kUsage;
}
