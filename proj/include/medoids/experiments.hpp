#pragma once

#include "medoids/bandit.hpp"
#include "medoids/dataset.hpp"
#include "medoids/metrics.hpp"
#include "medoids/result.hpp"
#include "medoids/synthetic.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace medoids {

enum class Algorithm { pam, fastpam1, banditpam, voronoi };

std::string_view algorithm_name(Algorithm algorithm) noexcept;
Algorithm        parse_algorithm(std::string_view name);

struct ExperimentRecord {
    std::size_t   n = 0;
    std::size_t   k = 0;
    std::string   metric;
    std::string   algorithm;
    std::uint64_t seed = 0;
    double        loss = 0.0;
    double        loss_ratio_vs_pam = 0.0;  ///< 0 when no PAM reference was run
    std::size_t   swap_count = 0;
    std::uint64_t distance_evals_total = 0;
    double        distance_evals_per_iteration = 0.0;
    double        wall_time_ms = 0.0;  ///< nondeterministic

    bool operator==(const ExperimentRecord&) const = default;
};

/// Options shared by every solver run from the harness.
struct RunOptions {
    SearchConfig  search;
    std::size_t   max_swaps      = 100;
    std::size_t   voronoi_iters  = 100;
};

/// Runs one solver on a dataset. Voronoi starts from k distinct points drawn with `seed`.
FitResult run_algorithm(const Dataset& dataset, Metric metric, std::size_t k, Algorithm algorithm,
                        const RunOptions& options, std::uint64_t seed);

ExperimentRecord make_record(const Dataset& dataset, const FitResult& fit, std::uint64_t seed, double wall_time_ms);

/// Seed for repetition `rep` at grid point `n` of a run with `master` seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t n, std::uint64_t rep);

/// Seeded sample of `count` distinct indices from [0, population).
std::vector<std::size_t> subsample_indices(std::size_t population, std::size_t count, std::uint64_t seed);

/// For every (n, rep): subsample n points without replacement, run naive PAM
/// as the reference and each algorithm, and record loss / PAM loss.
std::vector<ExperimentRecord> run_experiment_loss_ratio(const Dataset&                dataset,
                                                        Metric                        metric,
                                                        std::span<const std::size_t>  n_grid,
                                                        std::size_t                   k,
                                                        std::span<const Algorithm>    algorithms,
                                                        std::size_t                   reps,
                                                        std::uint64_t                 seed,
                                                        const RunOptions&             options = {});

struct ScalingResult {
    std::vector<ExperimentRecord> records;
    double                        slope = 0.0;  ///< mean over reps of the per-rep log-log slope
    std::vector<double>           slopes;       ///< one per rep
};

/// Generates `base` at each n of the grid (seed derived per (n, rep)), runs the
/// algorithm and fits log(evals per iteration) against log(n).
ScalingResult run_experiment_scaling(const SyntheticSpec&          base,
                                     Metric                        metric,
                                     std::span<const std::size_t>  n_grid,
                                     std::size_t                   k,
                                     Algorithm                     algorithm,
                                     std::size_t                   reps,
                                     std::uint64_t                 seed,
                                     const RunOptions&             options = {});

/// Least-squares slope of log(y) on log(x). Needs >= 3 points, all positive.
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

struct LinearFit {
    double slope     = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
LinearFit fit_linear(std::span<const double> x, std::span<const double> y);

}  // namespace medoids
