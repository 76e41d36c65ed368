// covtest: score tests for covariance structure, with a dimension-corrected
// variant calibrated for p comparable to (or exceeding) n.
//
// Subcommands:
//   test      evaluate the statistics on a data CSV against a chosen null
//   simulate  Monte Carlo size/power of a statistic on synthetic data
//   curve     power across a grid of alternative fractions v0
//   verify    closed-form correction terms vs their quadrature oracles

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "covtest/core_stats.hpp"
#include "covtest/csv_io.hpp"
#include "covtest/errors.hpp"
#include "covtest/mp_law.hpp"
#include "covtest/quadrature.hpp"
#include "covtest/rmt_clt.hpp"
#include "covtest/simulation.hpp"
#include "covtest/test_statistics.hpp"

namespace {

using covtest::BetaMode;
using covtest::Tail;
using nlohmann::json;

struct CommonTestOptions {
    std::optional<double> beta;
    bool estimate_beta = false;
    int kappa = 2;
    bool two_sided = false;
    std::string output = "json";
    std::string out_path;
};

int env_workers() {
    const char* raw = std::getenv("COVTEST_THREADS");
    if (raw == nullptr || *raw == '\0')
        return 0;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 0)
        throw covtest::ConfigError(
            "COVTEST_THREADS must be a non-negative integer (0 = auto)");
    return static_cast<int>(v);
}

std::ostream& open_sink(const std::string& out_path, std::ofstream& file) {
    if (out_path.empty())
        return std::cout;
    file.open(out_path);
    if (!file)
        throw covtest::IoError("cannot open output file: " + out_path);
    return file;
}

covtest::NullSpec parse_null(const std::string& spec) {
    if (spec == "identity")
        return covtest::NullSpec::identity();
    if (spec == "sphericity")
        return covtest::NullSpec::sphericity();
    // Anything else is a CSV file holding the null covariance, optionally
    // written as file:<path> to disambiguate from the keywords above.
    std::string path = spec;
    if (path.rfind("file:", 0) == 0)
        path = path.substr(5);
    return covtest::NullSpec::general(covtest::read_cov_csv(path));
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json result_to_json(const covtest::TestResult& r, double alpha) {
    json j;
    j["statistic"] = r.statistic;
    if (r.reference == covtest::Reference::ChiSquare) {
        j["reference"] = "chi_square";
        j["df"] = r.df;
    } else {
        j["reference"] = "normal";
        j["tail"] = r.tail == Tail::Upper ? "upper" : "two_sided";
    }
    j["p_value"] = r.p_value;
    j["alpha"] = alpha;
    j["reject"] = r.reject_at(alpha);
    if (r.detail) {
        j["detail"] = {{"rst_raw", r.detail->rst_raw},
                       {"f_qn_g", r.detail->f_qn_g},
                       {"mu_g", r.detail->mu_g},
                       {"upsilon_g", r.detail->upsilon_g},
                       {"q_n", r.detail->q_n},
                       {"beta_used", r.detail->beta_used}};
    }
    return j;
}

const char* kTestCsvHeader =
    "test,statistic,reference,df,p_value,tail,rst_raw,f_qn_g,mu_g,upsilon_g,"
    "q_n,beta_used";

std::string result_to_csv_row(const std::string& name,
                              const covtest::TestResult& r) {
    std::string row = name;
    row += ',' + fmt_double(r.statistic);
    if (r.reference == covtest::Reference::ChiSquare) {
        row += ",chi_square," + std::to_string(r.df);
    } else {
        row += ",normal,";
    }
    row += ',' + fmt_double(r.p_value);
    row += ',';
    if (r.reference == covtest::Reference::Normal)
        row += r.tail == Tail::Upper ? "upper" : "two_sided";
    for (int k = 0; k < 6; ++k)
        row += ',';
    if (r.detail) {
        // Rewrite the trailing blanks with the detail cells.
        row.resize(row.size() - 6);
        row += ',' + fmt_double(r.detail->rst_raw);
        row += ',' + fmt_double(r.detail->f_qn_g);
        row += ',' + fmt_double(r.detail->mu_g);
        row += ',' + fmt_double(r.detail->upsilon_g);
        row += ',' + fmt_double(r.detail->q_n);
        row += ',' + fmt_double(r.detail->beta_used);
    }
    return row;
}

BetaMode beta_mode_for_test(const CommonTestOptions& opt) {
    if (opt.beta && opt.estimate_beta)
        throw covtest::ConfigError("--beta and --estimate-beta are exclusive");
    if (opt.beta)
        return BetaMode::known(*opt.beta);
    // Estimating from the data is the safe default on real observations.
    return BetaMode::estimate();
}

BetaMode beta_mode_for_family(const CommonTestOptions& opt, covtest::Family f) {
    if (opt.beta && opt.estimate_beta)
        throw covtest::ConfigError("--beta and --estimate-beta are exclusive");
    if (opt.estimate_beta)
        return BetaMode::estimate();
    if (opt.beta)
        return BetaMode::known(*opt.beta);
    // Family defaults: Gaussian entries have zero excess, the standardized
    // Gamma(4, 1/2) entries have fourth-cumulant parameter 1.5.
    return BetaMode::known(f == covtest::Family::Gaussian ? 0.0 : 1.5);
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> seed) {
    if (seed)
        return *seed;
    std::random_device rd;
    const std::uint64_t drawn =
        (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::fprintf(stderr, "seed: %" PRIu64 "\n", drawn);
    return drawn;
}

std::vector<double> parse_v0_grid(const std::string& text) {
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        double start = 0.0, step = 0.0, end = 0.0;
        char colon1 = 0, colon2 = 0;
        std::istringstream ss(text);
        if (!(ss >> start >> colon1 >> step >> colon2 >> end) ||
            colon1 != ':' || colon2 != ':' || !(step > 0.0))
            throw covtest::ConfigError(
                "--v0-grid expects start:step:end with step > 0");
        for (int i = 0;; ++i) {
            const double v = start + i * step;
            if (v > end + 1e-12 * std::max(1.0, std::abs(end)))
                break;
            grid.push_back(v);
        }
    } else {
        std::stringstream ss(text);
        std::string cell;
        while (std::getline(ss, cell, ','))
            if (!cell.empty())
                grid.push_back(std::stod(cell));
    }
    if (grid.empty())
        throw covtest::ConfigError("--v0-grid produced no points");
    for (double v : grid)
        if (!(v >= 0.0) || !(v <= 1.0))
            throw covtest::ConfigError("--v0-grid values must lie in [0, 1]");
    return grid;
}

// ---------------------------------------------------------------------------
// test
// ---------------------------------------------------------------------------

int run_test(const std::string& data_path,
             const std::string& null_text,
             const std::string& which,
             double alpha,
             const CommonTestOptions& opt) {
    const covtest::DataMatrix data = covtest::read_data_csv(data_path);
    const covtest::NullSpec null = parse_null(null_text);
    const Tail tail = opt.two_sided ? Tail::TwoSided : Tail::Upper;

    std::vector<std::pair<std::string, covtest::TestResult>> results;
    if (which == "rst" || which == "both")
        results.emplace_back("rst", covtest::rst_statistic(data, null));
    if (which == "crst" || which == "both")
        results.emplace_back("crst",
                             covtest::crst_statistic(data, null,
                                                     beta_mode_for_test(opt),
                                                     opt.kappa, tail));

    std::ofstream file;
    std::ostream& sink = open_sink(opt.out_path, file);
    if (opt.output == "json") {
        if (results.size() == 1) {
            sink << result_to_json(results.front().second, alpha).dump(2)
                 << "\n";
        } else {
            json j;
            for (const auto& [name, r] : results)
                j[name] = result_to_json(r, alpha);
            sink << j.dump(2) << "\n";
        }
    } else {
        sink << kTestCsvHeader << "\n";
        for (const auto& [name, r] : results)
            sink << result_to_csv_row(name, r) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// simulate / curve
// ---------------------------------------------------------------------------

std::unique_ptr<covtest::TestStatistic> make_statistic(
    const std::string& which, const CommonTestOptions& opt, covtest::Family f) {
    const Tail tail = opt.two_sided ? Tail::TwoSided : Tail::Upper;
    if (which == "rst")
        return std::make_unique<covtest::RstTest>();
    return std::make_unique<covtest::CrstTest>(beta_mode_for_family(opt, f),
                                               opt.kappa, tail);
}

json report_to_json(const covtest::SimulationReport& r) {
    return json{{"test", r.test_name},
                {"family",
                 r.scenario.family == covtest::Family::Gaussian ? "gaussian"
                                                                : "gamma"},
                {"hypothesis",
                 r.scenario.hypothesis == covtest::Hypothesis::Null ? "null"
                 : r.scenario.hypothesis == covtest::Hypothesis::Alt1
                     ? "alt1"
                     : "alt2"},
                {"n", r.scenario.n},
                {"p", r.scenario.p},
                {"v0", r.scenario.v0},
                {"alpha", r.alpha},
                {"reps", r.replications},
                {"rejections", r.rejections},
                {"rate", r.rate},
                {"ci_low", r.ci95.first},
                {"ci_high", r.ci95.second},
                {"seed", r.master_seed},
                {"elapsed_s", r.elapsed_seconds}};
}

int run_simulate(const covtest::ScenarioSpec& scenario,
                 const std::string& which,
                 double alpha,
                 int reps,
                 std::optional<std::uint64_t> seed,
                 const CommonTestOptions& opt) {
    const auto stat = make_statistic(which, opt, scenario.family);
    const auto report =
        covtest::run_monte_carlo(scenario, *stat, alpha, reps,
                                 resolve_seed(seed), env_workers());
    std::ofstream file;
    std::ostream& sink = open_sink(opt.out_path, file);
    if (opt.output == "json")
        sink << report_to_json(report).dump(2) << "\n";
    else
        sink << covtest::SimulationReport::csv_header() << "\n"
             << report.csv_row() << "\n";
    return 0;
}

int run_curve(const covtest::ScenarioSpec& base,
              const std::string& which,
              const std::string& grid_text,
              double alpha,
              int reps,
              std::optional<std::uint64_t> seed,
              const CommonTestOptions& opt) {
    const auto stat = make_statistic(which, opt, base.family);
    const auto grid = parse_v0_grid(grid_text);
    const auto reports =
        covtest::power_curve(base, *stat, grid, alpha, reps,
                             resolve_seed(seed), env_workers());
    std::ofstream file;
    std::ostream& sink = open_sink(opt.out_path, file);
    if (opt.output == "json") {
        json j = json::array();
        for (const auto& r : reports)
            j.push_back(report_to_json(r));
        sink << j.dump(2) << "\n";
    } else {
        sink << covtest::SimulationReport::csv_header() << "\n";
        for (const auto& r : reports)
            sink << r.csv_row() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string closed, oracle, diff, note;
};

VerifyCheck run_check(const std::string& name,
                      double tolerance,
                      const std::function<double()>& closed,
                      const std::function<double()>& oracle) {
    VerifyCheck check;
    check.name = name;
    try {
        const double c = closed();
        const double o = oracle();
        const double d = std::abs(c - o);
        check.closed = fmt_double(c);
        check.oracle = fmt_double(o);
        check.diff = fmt_double(d);
        check.pass = d < tolerance;
        if (!check.pass)
            check.note = "diff exceeds " + fmt_double(tolerance);
    } catch (const std::exception& e) {
        check.pass = false;
        check.closed = check.oracle = check.diff = "-";
        check.note = e.what();
    }
    return check;
}

int run_verify(double q, int kappa, double beta, double tol, double radius) {
    using namespace covtest;
    const auto g = [](double x) { return (x - 1.0) * (x - 1.0); };
    std::vector<VerifyCheck> checks;

    checks.push_back(run_check(
        "mp_normalization", 1e-7, [] { return 1.0; },
        [&] {
            return mp_integral_numeric([](double) { return 1.0; }, MPIndex(q), tol);
        }));
    checks.push_back(run_check(
        "mp_first_moment", 1e-7, [] { return 1.0; },
        [&] {
            return mp_integral_numeric([](double x) { return x; }, MPIndex(q), tol);
        }));
    checks.push_back(run_check(
        "f_qn_g", 1e-7, [&] { return mp_integral_g(MPIndex(q)); },
        [&] { return mp_integral_numeric(g, MPIndex(q), tol); }));
    checks.push_back(run_check(
        "helper_cos", 1e-8,
        [&] { return helper_integral_cos(-(1.0 + q) / (2.0 * std::sqrt(q))); },
        [&] {
            const double d0 = -(1.0 + q) / (2.0 * std::sqrt(q));
            if (!(d0 < -1.0))
                throw DomainError("helper_cos oracle: d0 must be < -1");
            return adaptive_simpson(
                [d0](double t) { return 1.0 / (std::cos(t) + d0); }, 0.0,
                2.0 * std::numbers::pi, tol);
        }));
    checks.push_back(run_check(
        "mu_g", 1e-6,
        [&] { return mean_correction(RmtParams(q, kappa, beta)); },
        [&] { return mean_correction_numeric(RmtParams(q, kappa, beta), tol); }));
    checks.push_back(run_check(
        "mu_g_beta_part_radius", 1e-6,
        [&] { return beta * q; },
        [&] {
            return mean_correction_beta_part_numeric(RmtParams(q, kappa, beta),
                                                     radius, tol);
        }));
    checks.push_back(run_check(
        "upsilon_g", 1e-4,
        [&] { return var_correction(RmtParams(q, kappa, beta)); },
        [&] { return var_correction_numeric(RmtParams(q, kappa, beta), tol); }));
    const auto component = [&](int d1, int d2) {
        return upsilon_component_numeric(d1, d2, RmtParams(q, kappa, beta), 0.3,
                                         0.6, tol);
    };
    checks.push_back(run_check(
        "upsilon_z1_z2", 1e-6, [&] { return kappa * q; },
        [&] { return component(1, 1); }));
    checks.push_back(run_check(
        "upsilon_z1sq_z2", 1e-6, [&] { return 2.0 * kappa * q * (1.0 + q); },
        [&] { return component(2, 1); }));
    checks.push_back(run_check(
        "upsilon_z1_z2sq", 1e-6, [&] { return 2.0 * kappa * q * (1.0 + q); },
        [&] { return component(1, 2); }));
    checks.push_back(run_check(
        "upsilon_z1sq_z2sq", 1e-5,
        [&] { return kappa * (4.0 * q + 10.0 * q * q + 4.0 * q * q * q); },
        [&] { return component(2, 2); }));

    std::printf("%-22s %16s %16s %12s  %s\n", "check", "closed", "oracle",
                "|diff|", "result");
    int failures = 0;
    for (const auto& c : checks) {
        std::printf("%-22s %16s %16s %12s  %s%s%s\n", c.name.c_str(),
                    c.closed.c_str(), c.oracle.c_str(), c.diff.c_str(),
                    c.pass ? "PASS" : "FAIL", c.note.empty() ? "" : " : ",
                    c.note.c_str());
        if (!c.pass)
            ++failures;
    }
    std::printf("%d/%zu checks passed\n", static_cast<int>(checks.size()) - failures,
                checks.size());
    return failures == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Score tests for covariance structure with a high-dimensional "
                 "correction"};
    app.require_subcommand(1);

    // --- test ---
    auto* test_cmd =
        app.add_subcommand("test", "Evaluate statistics on a data CSV");
    std::string data_path, null_text = "identity", which_test = "crst";
    CommonTestOptions test_opt;
    test_cmd->add_option("--data", data_path, "Observations CSV (rows = observations)")
        ->required();
    test_cmd->add_option("--null", null_text,
                         "identity | sphericity | [file:]path to a covariance CSV");
    test_cmd->add_option("--test", which_test, "rst | crst | both")
        ->check(CLI::IsMember({"rst", "crst", "both"}));
    double test_alpha = 0.05;
    test_cmd->add_option("--alpha", test_alpha,
                         "Level for the reported reject decision (default 0.05)");
    test_cmd->add_option("--beta", test_opt.beta,
                         "Known fourth-cumulant parameter (default: estimate)");
    test_cmd->add_flag("--estimate-beta", test_opt.estimate_beta,
                       "Estimate the fourth-cumulant parameter from the data");
    test_cmd->add_option("--kappa", test_opt.kappa, "2 = real data, 1 = complex")
        ->check(CLI::IsMember({1, 2}));
    test_cmd->add_flag("--two-sided", test_opt.two_sided,
                       "Two-sided normal rejection region");
    test_cmd->add_option("--output", test_opt.output, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    test_cmd->add_option("--out", test_opt.out_path, "Write to file instead of stdout");

    // --- simulate ---
    auto* sim_cmd = app.add_subcommand(
        "simulate", "Monte Carlo rejection rate on synthetic data");
    std::string family_text = "gaussian", hypothesis_text = "null",
                which_sim = "crst";
    covtest::ScenarioSpec scenario;
    double alpha = 0.05;
    int reps = 10000;
    std::optional<std::uint64_t> seed;
    CommonTestOptions sim_opt;
    sim_opt.output = "csv";
    sim_cmd->add_option("--family", family_text, "gaussian | gamma")
        ->check(CLI::IsMember({"gaussian", "gamma"}))
        ->required();
    sim_cmd->add_option("--n", scenario.n, "Observations per replication")->required();
    sim_cmd->add_option("--p", scenario.p, "Dimension")->required();
    sim_cmd->add_option("--hypothesis", hypothesis_text, "null | alt1 | alt2")
        ->check(CLI::IsMember({"null", "alt1", "alt2"}));
    sim_cmd->add_option("--v0", scenario.v0,
                        "Fraction of components with modified variance");
    sim_cmd->add_option("--mu0", scenario.mu0, "Gaussian mean (default 2)");
    sim_cmd->add_option("--test", which_sim, "rst | crst")
        ->check(CLI::IsMember({"rst", "crst"}));
    sim_cmd->add_option("--alpha", alpha, "Test level (default 0.05)");
    sim_cmd->add_option("--reps", reps, "Replications (default 10000)");
    sim_cmd->add_option("--seed", seed, "Master seed (default: OS entropy, printed)");
    sim_cmd->add_option("--beta", sim_opt.beta,
                        "Known fourth-cumulant parameter (default: family value)");
    sim_cmd->add_flag("--estimate-beta", sim_opt.estimate_beta,
                      "Estimate the fourth-cumulant parameter per replication");
    sim_cmd->add_option("--kappa", sim_opt.kappa, "2 = real data, 1 = complex")
        ->check(CLI::IsMember({1, 2}));
    sim_cmd->add_flag("--two-sided", sim_opt.two_sided,
                      "Two-sided normal rejection region");
    sim_cmd->add_option("--output", sim_opt.output, "csv | json")
        ->check(CLI::IsMember({"json", "csv"}));
    sim_cmd->add_option("--out", sim_opt.out_path, "Write to file instead of stdout");

    // --- curve ---
    auto* curve_cmd = app.add_subcommand(
        "curve", "Power across a grid of alternative fractions v0");
    std::string curve_family = "gaussian", curve_hypothesis = "alt1",
                which_curve = "crst", grid_text;
    covtest::ScenarioSpec curve_base;
    double curve_alpha = 0.05;
    int curve_reps = 10000;
    std::optional<std::uint64_t> curve_seed;
    CommonTestOptions curve_opt;
    curve_opt.output = "csv";
    curve_cmd->add_option("--family", curve_family, "gaussian | gamma")
        ->check(CLI::IsMember({"gaussian", "gamma"}))
        ->required();
    curve_cmd->add_option("--n", curve_base.n, "Observations per replication")
        ->required();
    curve_cmd->add_option("--p", curve_base.p, "Dimension")->required();
    curve_cmd->add_option("--hypothesis", curve_hypothesis, "alt1 | alt2")
        ->check(CLI::IsMember({"alt1", "alt2"}));
    curve_cmd->add_option("--v0-grid", grid_text,
                          "start:step:end or comma-separated values")
        ->required();
    curve_cmd->add_option("--mu0", curve_base.mu0, "Gaussian mean (default 2)");
    curve_cmd->add_option("--test", which_curve, "rst | crst")
        ->check(CLI::IsMember({"rst", "crst"}));
    curve_cmd->add_option("--alpha", curve_alpha, "Test level (default 0.05)");
    curve_cmd->add_option("--reps", curve_reps, "Replications per grid point");
    curve_cmd->add_option("--seed", curve_seed,
                          "Master seed (default: OS entropy, printed)");
    curve_cmd->add_option("--beta", curve_opt.beta,
                          "Known fourth-cumulant parameter (default: family value)");
    curve_cmd->add_flag("--estimate-beta", curve_opt.estimate_beta,
                        "Estimate the fourth-cumulant parameter per replication");
    curve_cmd->add_option("--kappa", curve_opt.kappa, "2 = real data, 1 = complex")
        ->check(CLI::IsMember({1, 2}));
    curve_cmd->add_flag("--two-sided", curve_opt.two_sided,
                        "Two-sided normal rejection region");
    curve_cmd->add_option("--output", curve_opt.output, "csv | json")
        ->check(CLI::IsMember({"json", "csv"}));
    curve_cmd->add_option("--out", curve_opt.out_path,
                          "Write to file instead of stdout");

    // --- verify ---
    auto* verify_cmd = app.add_subcommand(
        "verify", "Closed-form correction terms vs quadrature oracles");
    double vq = 0.5, vbeta = 0.5, vtol = 1e-9, vradius = 0.5;
    int vkappa = 2;
    verify_cmd->add_option("--q", vq, "Dimension ratio (default 0.5)");
    verify_cmd->add_option("--kappa", vkappa, "2 = real, 1 = complex")
        ->check(CLI::IsMember({1, 2}));
    verify_cmd->add_option("--beta", vbeta,
                           "Fourth-cumulant parameter (default 0.5)");
    verify_cmd->add_option("--tol", vtol, "Quadrature tolerance (default 1e-9)");
    verify_cmd->add_option("--radius", vradius,
                           "Contour radius for the mean's beta part");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (test_cmd->parsed())
            return run_test(data_path, null_text, which_test, test_alpha,
                            test_opt);
        if (sim_cmd->parsed()) {
            scenario.family = family_text == "gaussian"
                                  ? covtest::Family::Gaussian
                                  : covtest::Family::Gamma;
            scenario.hypothesis = hypothesis_text == "null"
                                      ? covtest::Hypothesis::Null
                                  : hypothesis_text == "alt1"
                                      ? covtest::Hypothesis::Alt1
                                      : covtest::Hypothesis::Alt2;
            return run_simulate(scenario, which_sim, alpha, reps, seed, sim_opt);
        }
        if (curve_cmd->parsed()) {
            curve_base.family = curve_family == "gaussian"
                                    ? covtest::Family::Gaussian
                                    : covtest::Family::Gamma;
            curve_base.hypothesis = curve_hypothesis == "alt1"
                                        ? covtest::Hypothesis::Alt1
                                        : covtest::Hypothesis::Alt2;
            return run_curve(curve_base, which_curve, grid_text, curve_alpha,
                             curve_reps, curve_seed, curve_opt);
        }
        if (verify_cmd->parsed())
            return run_verify(vq, vkappa, vbeta, vtol, vradius);
        std::fprintf(stderr, "no subcommand selected\n");
        return 1;
    } catch (const covtest::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const covtest::DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const covtest::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const covtest::QuadratureError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
