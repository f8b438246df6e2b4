#pragma once

#include "medoids/cluster_state.hpp"
#include "medoids/result.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace medoids {

struct BuildOutput {
    ClusterState                 state;
    std::vector<TrajectoryEvent> trajectory;
};

/// A proposed swap. `delta` is the loss change measured by the scan that
/// produced it.
struct SwapMove {
    std::size_t medoid_out = 0;
    std::size_t point_in   = 0;
    double      delta      = 0.0;

    bool operator==(const SwapMove&) const = default;
};

enum class PamVariant { naive, fastpam1 };

/// Greedy BUILD. Step l scans every non-medoid against all n references
/// ((n - l) * n evaluations under Phase::build); the winner is added through
/// apply_add. Ties go to the smallest candidate index.
BuildOutput pam_build(const DistanceOracle& oracle, std::size_t k);

/// Scans all k(n-k) pairs and computes each post-swap loss directly.
/// Returns the best pair if it strictly lowers the loss.
std::optional<SwapMove> pam_swap_once_naive(const ClusterState& state, const DistanceOracle& oracle);

/// Same decision as the naive scan, with one distance per (candidate,
/// reference) shared across all medoids: (n-k) * n evaluations.
std::optional<SwapMove> pam_swap_once_fastpam1(const ClusterState& state, const DistanceOracle& oracle);

FitResult run_pam(const DistanceOracle& oracle, std::size_t k, PamVariant variant, std::size_t max_swaps = 100);

/// Alternating assignment / per-cluster medoid update from `init`.
/// A medoid moves only to a strictly cheaper cluster member. Stops when the
/// medoid set is unchanged or after `max_iters` updates.
FitResult voronoi_iteration(const DistanceOracle&         oracle,
                            std::span<const std::size_t> init,
                            std::size_t                  max_iters = 100);

}  // namespace medoids
