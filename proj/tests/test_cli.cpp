#include "baskakov/coeffs.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#ifndef BASKAKOV_CLI
#error "BASKAKOV_CLI must point at the command-line binary"
#endif

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(BASKAKOV_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("coeffs examples") {
    CHECK(run("coeffs --n 10 --family eta --r 2").out == "-(1/22)x - (1/22)x^2\n");
    CHECK(run("coeffs --n 1 --family theta --r 1").out == "0\n");
    const Run table = run("coeffs --n 3 --family theta --r-max 4");
    CHECK(table.code == 0);
    CHECK(table.out.find("theta_2 = (1/6)x + (1/6)x^2\n") != std::string::npos);
    CHECK(run("coeffs --n 3 --family theta --r 4 --method direct").out ==
          run("coeffs --n 3 --family theta --r 4").out);
}

TEST_CASE("coeffs verify lists the misprints and succeeds") {
    const Run r = run("coeffs --verify --r-max 11");
    CHECK(r.code == 0);
    CHECK(r.out.find("theta_9: printed form is malformed") != std::string::npos);
    CHECK(r.out.find("c3=1260n^3+13216n^2+32112n+20160") != std::string::npos);
    CHECK(r.out.find("eta_6: printed form differs") != std::string::npos);
    CHECK(r.out.find("UNEXPLAINED") == std::string::npos);
}

TEST_CASE("coeffs json re-parses to equal rationals") {
    const Run r = run("coeffs --n 6 --family eta --r-max 12 --json");
    REQUIRE(r.code == 0);
    const auto table = baskakov::coeff_table_from_json(nlohmann::json::parse(r.out));
    CHECK(table.polys == baskakov::eta_recurrence(6, 12).polys);
}

TEST_CASE("approx single values") {
    CHECK(run("approx --fn exp-neg --n 10 --r 0 --at 0").out == "1\n");
    const Run r = run("approx --fn exp-neg --n 20 --r 3 --at 1.0");
    CHECK(r.code == 0);
    CHECK(std::abs(std::stod(r.out) - std::exp(-1.0)) < 1e-3);
}

TEST_CASE("approx from a sample file") {
    const auto path = temp_file("baskakov_cli_samples.csv");
    {
        std::ofstream out(path);
        out << "k,value\n";
        char buf[64];
        for (int k = 0; k <= 100; ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", std::exp(-k / 20.0));
            out << k << ',' << buf << '\n';
        }
    }
    const Run from_file = run("approx --samples " + path.string() + " --n 20 --r 3 --at 1.0");
    const Run from_fn = run("approx --fn exp-neg --n 20 --r 3 --at 1.0");
    CHECK(from_file.code == 0);
    CHECK(from_file.out == from_fn.out);
    // 5n = 200 samples needed for n = 40
    CHECK(run("approx --samples " + path.string() + " --n 40 --r 3 --at 1.0").code == 3);
    std::filesystem::remove(path);
}

TEST_CASE("malformed sample files are data errors") {
    const auto path = temp_file("baskakov_cli_bad.csv");
    {
        std::ofstream out(path);
        out << "k,value\n0,1\n2,0.5\n";
    }
    CHECK(run("approx --samples " + path.string() + " --n 1 --r 0 --at 0.5").code == 3);
    {
        std::ofstream out(path);
        out << "index,f\n0,1\n";
    }
    CHECK(run("approx --samples " + path.string() + " --n 1 --r 0 --at 0.5").code == 3);
    CHECK(run("approx --samples /nonexistent/file.csv --n 1 --r 0 --at 0.5").code == 3);
    std::filesystem::remove(path);
}

TEST_CASE("paper-style error table") {
    const Run r = run("approx --fn exp-neg --n 10,20 --r 1,3 --paper-style");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("| n | 1 | 3 |\n", 0) == 0);
    CHECK(r.out.find("| 10 | 4.1(-2) | 2.7(-3) |") != std::string::npos);
}

TEST_CASE("norms and rates") {
    CHECK(run("norms --n 8 --r 0").out.find("| 8 | 1.00 |") != std::string::npos);
    const Run rates = run("rates --fn exp-neg --r 1 --x 1 --n 32,64,128,256 --format csv");
    CHECK(rates.code == 0);
    CHECK(rates.out.rfind("n,scaled_error,target\n32,", 0) == 0);
    const Run poly = run("rates --poly --r 1 --x 1 --n 10");
    CHECK(poly.code == 0);
    CHECK(poly.out.find(",12\n") != std::string::npos);  // eta_bar_4(1) * 4! = (4/8) * 24
}

TEST_CASE("output is deterministic") {
    const std::string args = "approx --fn damped-sine --n 10,20 --r 1,5,9 --format json";
    CHECK(run(args).out == run(args).out);
    const std::string norms = "norms --n 8,16 --r 2,3 --format csv";
    CHECK(run(norms).out == run(norms).out);
}

TEST_CASE("verify subcommand") {
    const Run r = run("verify");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("ok ", 0) == 0);
    CHECK(r.out.find("\nMISMATCH ") == std::string::npos);
    CHECK(r.out.find("tau_5 (n = 10, exp-neg)") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run("").code == 2);
    CHECK(run("coeffs --n").code == 2);
    CHECK(run("coeffs --n 0 --r 2").code == 2);
    CHECK(run("coeffs --r-max 99").code == 2);
    CHECK(run("approx --n 10 --r 1 --at 0").code == 2);
    CHECK(run("approx --fn exp-neg --samples x.csv --n 10").code == 2);
    CHECK(run("approx --fn nope --n 10 --r 1 --at 0").code == 2);
    CHECK(run("norms --r 5..2").code == 2);
    CHECK(run("approx --fn exp-neg --n 10 --r 1 --format xml").code == 2);
    CHECK(run("--help").code == 0);
}

}
