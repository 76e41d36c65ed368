#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "covtest/data_matrix.hpp"
#include "covtest/null_spec.hpp"
#include "covtest/test_statistics.hpp"

namespace covtest {

/// Observation family for synthetic samples.
enum class Family { Gaussian, Gamma };

/// Which data-generating regime a scenario draws from.
enum class Hypothesis {
    Null, ///< covariance exactly the identity
    Alt1, ///< a leading fraction v0 of components gets a fixed variance bump
    Alt2  ///< a leading fraction v0 gets a bump shrinking like 1/sqrt(np)
};

/**
 * @brief Synthetic-experiment description.
 *
 * Components are independent. Gaussian draws have mean mu0; gamma draws are
 * iid Gamma(4, 1/2) under the null (mean 2, variance 1). Under Alt1 the first
 * floor(v0 * p) components switch to variance 2 (Gaussian: sd sqrt(2);
 * gamma: Gamma(2, 1)); under Alt2 they switch to variance c = 1 + 20/sqrt(np)
 * (Gaussian: sd sqrt(c); gamma: Gamma(4/c, c/2), keeping mean 2).
 *
 * Invariants: n >= 2, p >= 1, v0 in [0, 1] (0 unless an alternative),
 * and every gamma shape parameter >= 1.
 */
struct ScenarioSpec {
    Family family = Family::Gaussian;
    int n = 0;
    int p = 0;
    Hypothesis hypothesis = Hypothesis::Null;
    double v0 = 0.0;
    double mu0 = 2.0; ///< Gaussian mean; irrelevant to the statistics

    void validate() const;

    /// Number of leading components whose variance is modified.
    [[nodiscard]] int modified_components() const;

    /// Variance of the modified components (1 under the null).
    [[nodiscard]] double bump_variance() const;
};

/// Aggregate outcome of a Monte Carlo run.
struct SimulationReport {
    ScenarioSpec scenario;
    std::string test_name;
    double alpha = 0.0;
    int replications = 0;
    long rejections = 0;
    double rate = 0.0;
    std::pair<double, double> ci95{0.0, 0.0};
    std::uint64_t master_seed = 0;
    double elapsed_seconds = 0.0; ///< wall clock; excluded from determinism

    /// CSV row matching the documented simulate schema (includes elapsed_s).
    [[nodiscard]] std::string csv_row() const;

    /// Everything except the wall-clock column; equal runs compare equal.
    [[nodiscard]] std::string deterministic_key() const;

    static const char* csv_header();
};

/// One synthetic sample; all randomness is a pure function of rep_seed.
DataMatrix generate_sample(const ScenarioSpec& scenario, std::uint64_t rep_seed);

/// Wilson score interval for a binomial proportion at the given z quantile.
std::pair<double, double> wilson_interval(long successes,
                                          long trials,
                                          double z = 1.959963984540054);

/**
 * @brief Run `replications` independent tests of H0 against the scenario's
 *        generator and report the rejection rate at level alpha.
 *
 * Replication r uses the substream split_seed(master_seed, r), so the report
 * is identical for any worker count and any execution order. workers = 0
 * means one worker per available hardware thread.
 */
SimulationReport run_monte_carlo(const ScenarioSpec& scenario,
                                 const TestStatistic& test,
                                 double alpha,
                                 int replications,
                                 std::uint64_t master_seed,
                                 int workers = 0,
                                 const NullSpec& null = NullSpec::identity());

/// run_monte_carlo over a grid of v0 values, one report per grid point.
std::vector<SimulationReport> power_curve(const ScenarioSpec& base,
                                          const TestStatistic& test,
                                          const std::vector<double>& v0_grid,
                                          double alpha,
                                          int replications,
                                          std::uint64_t master_seed,
                                          int workers = 0,
                                          const NullSpec& null = NullSpec::identity());

} // namespace covtest
