#pragma once

#include "medoids/bandit.hpp"
#include "medoids/cluster_state.hpp"
#include "medoids/exact.hpp"
#include "medoids/result.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace medoids {

/// Medoid/non-medoid pair treated as one arm of the SWAP search.
struct PairArm {
    std::size_t medoid    = 0;
    std::size_t candidate = 0;

    bool operator==(const PairArm&) const = default;
};

/// BUILD objective at reference j: (d(x, x_j) - d1[j]) ^ 0, or d(x, x_j)
/// before the first medoid. One counted evaluation.
double build_arm_g(const ClusterState& state, const DistanceOracle& oracle, std::size_t candidate, std::size_t j,
                   Phase phase = Phase::build);

/// SWAP objective at reference j (FastPAM1 form). One counted evaluation.
double swap_arm_g(const ClusterState& state, const DistanceOracle& oracle, PairArm arm, std::size_t j,
                  Phase phase = Phase::swap);

/// Arms: non-medoids in ascending index order. References: all points.
class BuildArms final : public ArmEvaluator {
  public:
    BuildArms(const ClusterState& state, const DistanceOracle& oracle);

    std::size_t target_count() const override { return candidates_.size(); }
    std::size_t reference_count() const override { return oracle_.size(); }
    void evaluate(std::span<const std::size_t> arms, std::span<const std::size_t> refs, Phase phase,
                  std::span<double> out) const override;

    std::size_t candidate(std::size_t arm) const { return candidates_[arm]; }

  private:
    const ClusterState&      state_;
    const DistanceOracle&    oracle_;
    std::vector<std::size_t> candidates_;
};

/// Arms: (medoid position, candidate index) ascending. Within one evaluate()
/// call each d(x, x_j) is computed once and shared by the k arms with candidate x.
class SwapArms final : public ArmEvaluator {
  public:
    SwapArms(const ClusterState& state, const DistanceOracle& oracle);

    std::size_t target_count() const override { return state_.medoids.size() * candidates_.size(); }
    std::size_t reference_count() const override { return oracle_.size(); }
    void evaluate(std::span<const std::size_t> arms, std::span<const std::size_t> refs, Phase phase,
                  std::span<double> out) const override;

    PairArm pair(std::size_t arm) const;

  private:
    const ClusterState&      state_;
    const DistanceOracle&    oracle_;
    std::vector<std::size_t> candidates_;
};

BuildOutput banditpam_build(const DistanceOracle& oracle, std::size_t k, const SearchConfig& config, SearchRng& rng);

std::optional<SwapMove> banditpam_swap_once(const ClusterState&  state,
                                            const DistanceOracle& oracle,
                                            const SearchConfig&   config,
                                            SearchRng&            rng);

/// Full solver. Deterministic given (dataset, metric, k, config).
FitResult fit(const DistanceOracle& oracle, std::size_t k, const SearchConfig& config, std::size_t max_swaps = 100);

}  // namespace medoids
