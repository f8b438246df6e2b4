#pragma once

#include "medoids/oracle.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace medoids {

/// Hyperparameters of one adaptive search.
struct SearchConfig {
    std::size_t           batch_size = 100;
    std::optional<double> delta;  ///< per-arm error probability; unset means 1 / (1000 |targets|)
    double                ci_multiplier = 1.0;  ///< +inf disables elimination
    double                sigma_floor   = 1e-9;
    std::uint64_t         seed          = 0;
    bool                  verify_swaps  = true;  ///< exact re-check of a SWAP winner before accepting it

    double delta_for(std::size_t target_count) const;
    /// Throws ArgumentError on B = 0, delta outside (0, 1), negative multiplier or floor.
    void validate() const;

    bool operator==(const SearchConfig&) const = default;
};

/// Random generator behind every sampled batch.
using SearchRng = std::mt19937_64;

struct ArmStats {
    double      mean_est  = 0.0;
    double      ci_radius = std::numeric_limits<double>::infinity();
    std::size_t n_sampled = 0;
    double      sigma     = 0.0;
    bool        alive     = true;
    /// mean_est came from the exact full pass rather than sampling
    bool exact = false;
    /// the first batch (used for sigma) also backs mean_est
    bool sigma_batch_reused = true;
};

/// One best-arm problem: targets are arms 0..target_count()-1, each with an
/// objective g(arm, reference) averaged over references 0..reference_count()-1.
class ArmEvaluator {
  public:
    virtual ~ArmEvaluator() = default;

    virtual std::size_t target_count() const    = 0;
    virtual std::size_t reference_count() const = 0;

    /// out[a * refs.size() + r] = g(arms[a], refs[r]). Distance evaluations
    /// made here are counted under `phase`.
    virtual void evaluate(std::span<const std::size_t> arms,
                          std::span<const std::size_t> refs,
                          Phase                        phase,
                          std::span<double>            out) const = 0;
};

/// Population standard deviation, floored.
double population_std(std::span<const double> values, double floor);

struct SigmaEstimate {
    std::vector<double> sigmas;    ///< one per arm
    std::vector<double> g_values;  ///< arms x batch, row-major; reused as first samples
};

SigmaEstimate estimate_sigmas(const ArmEvaluator&           evaluator,
                              std::span<const std::size_t> arms,
                              std::span<const std::size_t> first_batch,
                              double                       sigma_floor,
                              Phase                        phase = Phase::sigma_est);

/// multiplier * sigma * sqrt(ln(1/delta) / n_used). Throws ArgumentError when n_used is 0.
double confidence_radius(double sigma, double delta, std::size_t n_used, double ci_multiplier);

struct SearchResult {
    std::size_t           winner = 0;
    std::vector<ArmStats> arms;
    bool                  used_exact_fallback = false;
    std::size_t           iterations          = 0;
    std::uint64_t         g_calls             = 0;
    /// Exact objective sum of the winner when it came out of the fallback.
    std::optional<double> winner_exact_sum;
};

/// Successive-elimination best-arm search (minimisation).
///
/// Each round draws one batch of `batch_size` references with replacement,
/// shared by every surviving arm; sigma comes from the first batch. Arms whose
/// lower bound exceeds the best upper bound among survivors are dropped. When
/// sampled references reach reference_count() with several survivors left,
/// their objectives are computed exactly and the smallest (lowest index on
/// ties) wins.
SearchResult adaptive_search(const ArmEvaluator& evaluator,
                             const SearchConfig& config,
                             SearchRng&          rng,
                             Phase               search_phase);

/// Exact objective sums for `arms` over every reference, accumulated in
/// reference order.
std::vector<double> exact_sums(const ArmEvaluator& evaluator, std::span<const std::size_t> arms, Phase phase);

}  // namespace medoids
