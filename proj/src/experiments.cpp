#include "medoids/experiments.hpp"

#include "medoids/banditpam.hpp"
#include "medoids/errors.hpp"
#include "medoids/exact.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace medoids {

std::string_view algorithm_name(Algorithm algorithm) noexcept {
    switch (algorithm) {
        case Algorithm::pam:
            return "pam";
        case Algorithm::fastpam1:
            return "fastpam1";
        case Algorithm::banditpam:
            return "banditpam";
        case Algorithm::voronoi:
            return "voronoi";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
    if (name == "pam") return Algorithm::pam;
    if (name == "fastpam1") return Algorithm::fastpam1;
    if (name == "banditpam") return Algorithm::banditpam;
    if (name == "voronoi") return Algorithm::voronoi;
    throw ArgumentError("unknown algorithm: " + std::string(name));
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t n, std::uint64_t rep) {
    std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                      static_cast<std::uint32_t>(n),      static_cast<std::uint32_t>(n >> 32),
                      static_cast<std::uint32_t>(rep),    static_cast<std::uint32_t>(rep >> 32)};
    std::uint32_t words[2];
    seq.generate(std::begin(words), std::end(words));
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::vector<std::size_t> subsample_indices(std::size_t population, std::size_t count, std::uint64_t seed) {
    if (count > population) {
        throw ArgumentError("cannot draw " + std::to_string(count) + " distinct points from " +
                            std::to_string(population));
    }
    std::vector<std::size_t> indices(population);
    std::iota(indices.begin(), indices.end(), 0);
    std::mt19937_64 rng(seed);
    // partial Fisher-Yates
    for (std::size_t i = 0; i < count; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, population - 1);
        std::swap(indices[i], indices[pick(rng)]);
    }
    indices.resize(count);
    return indices;
}

FitResult run_algorithm(const Dataset& dataset, Metric metric, std::size_t k, Algorithm algorithm,
                        const RunOptions& options, std::uint64_t seed) {
    const DistanceOracle oracle(dataset, metric);
    switch (algorithm) {
        case Algorithm::pam:
            return run_pam(oracle, k, PamVariant::naive, options.max_swaps);
        case Algorithm::fastpam1:
            return run_pam(oracle, k, PamVariant::fastpam1, options.max_swaps);
        case Algorithm::banditpam: {
            SearchConfig config = options.search;
            config.seed         = seed;
            return fit(oracle, k, config, options.max_swaps);
        }
        case Algorithm::voronoi: {
            if (k < 1 || k > dataset.size()) {
                throw ArgumentError("k must be in [1, n]");
            }
            const auto init = subsample_indices(dataset.size(), k, seed);
            return voronoi_iteration(oracle, init, options.voronoi_iters);
        }
    }
    throw ArgumentError("unknown algorithm");
}

ExperimentRecord make_record(const Dataset& dataset, const FitResult& fit, std::uint64_t seed, double wall_time_ms) {
    ExperimentRecord record;
    record.n                            = dataset.size();
    record.k                            = fit.k;
    record.metric                       = std::string(metric_name(fit.metric));
    record.algorithm                    = fit.algorithm;
    record.seed                         = seed;
    record.loss                         = fit.loss;
    record.swap_count                   = fit.swap_count;
    record.distance_evals_total         = fit.distance_evals.total();
    record.distance_evals_per_iteration =
        static_cast<double>(record.distance_evals_total) / static_cast<double>(fit.swap_count + 1);
    record.wall_time_ms = wall_time_ms;
    return record;
}

namespace {

ExperimentRecord timed_run(const Dataset& dataset, Metric metric, std::size_t k, Algorithm algorithm,
                           const RunOptions& options, std::uint64_t seed) {
    const auto start   = std::chrono::steady_clock::now();
    const auto result  = run_algorithm(dataset, metric, k, algorithm, options, seed);
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    return make_record(dataset, result, seed, elapsed.count());
}

}  // namespace

std::vector<ExperimentRecord> run_experiment_loss_ratio(const Dataset&                dataset,
                                                        Metric                        metric,
                                                        std::span<const std::size_t>  n_grid,
                                                        std::size_t                   k,
                                                        std::span<const Algorithm>    algorithms,
                                                        std::size_t                   reps,
                                                        std::uint64_t                 seed,
                                                        const RunOptions&             options) {
    std::vector<ExperimentRecord> records;
    for (const auto n : n_grid) {
        for (std::size_t rep = 0; rep < reps; ++rep) {
            const std::uint64_t rep_seed = derive_seed(seed, n, rep);
            const Dataset       sample   = dataset.subset(subsample_indices(dataset.size(), n, rep_seed));

            ExperimentRecord reference = timed_run(sample, metric, k, Algorithm::pam, options, rep_seed);
            const double     pam_loss  = reference.loss;
            for (const auto algorithm : algorithms) {
                ExperimentRecord record = algorithm == Algorithm::pam
                                              ? reference
                                              : timed_run(sample, metric, k, algorithm, options, rep_seed);
                // identical losses give exactly 1 even when both are 0
                record.loss_ratio_vs_pam = record.loss == pam_loss ? 1.0 : record.loss / pam_loss;
                records.push_back(std::move(record));
            }
        }
    }
    return records;
}

ScalingResult run_experiment_scaling(const SyntheticSpec&          base,
                                     Metric                        metric,
                                     std::span<const std::size_t>  n_grid,
                                     std::size_t                   k,
                                     Algorithm                     algorithm,
                                     std::size_t                   reps,
                                     std::uint64_t                 seed,
                                     const RunOptions&             options) {
    if (n_grid.size() < 3) {
        throw ArgumentError("scaling experiment needs at least 3 grid points");
    }
    if (reps < 1) {
        throw ArgumentError("scaling experiment needs at least one repetition");
    }
    ScalingResult result;
    std::vector<double> xs;
    for (const auto n : n_grid) {
        xs.push_back(static_cast<double>(n));
    }
    for (std::size_t rep = 0; rep < reps; ++rep) {
        std::vector<double> ys;
        for (const auto n : n_grid) {
            SyntheticSpec spec = base;
            spec.n             = n;
            spec.seed          = derive_seed(seed, n, rep);
            const Dataset data = generate(spec);
            result.records.push_back(timed_run(data, metric, k, algorithm, options, spec.seed));
            ys.push_back(result.records.back().distance_evals_per_iteration);
        }
        result.slopes.push_back(fit_loglog_slope(xs, ys));
    }
    result.slope = std::accumulate(result.slopes.begin(), result.slopes.end(), 0.0) /
                   static_cast<double>(result.slopes.size());
    return result;
}

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw ArgumentError("linear fit needs two equally sized series of length >= 2");
    }
    const double count = static_cast<double>(x.size());
    const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / count;
    const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / count;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mean_x) * (x[i] - mean_x);
        sxy += (x[i] - mean_x) * (y[i] - mean_y);
        syy += (y[i] - mean_y) * (y[i] - mean_y);
    }
    if (sxx == 0.0) {
        throw ArgumentError("linear fit needs at least two distinct x values");
    }
    LinearFit fit;
    fit.slope     = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

double fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() < 3) {
        throw ArgumentError("log-log slope needs at least 3 points");
    }
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
            throw ArgumentError("log-log slope needs positive values");
        }
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
    }
    return fit_linear(lx, ly).slope;
}

}  // namespace medoids
