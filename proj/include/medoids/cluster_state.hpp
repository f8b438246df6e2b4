#pragma once

#include "medoids/oracle.hpp"

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace medoids {

/// d2 value when only one medoid exists. It is the largest finite double so
/// that min() against it always picks the real distance.
inline constexpr double kNoSecondMedoid = std::numeric_limits<double>::max();

/// Current medoids plus per-point nearest/second-nearest medoid caches.
///
/// `medoids` keeps insertion order; a swap replaces the outgoing medoid in
/// place, so positions are stable and are used for tie-breaking. Nearest-medoid
/// ties go to the smallest medoid index.
struct ClusterState {
    std::vector<std::size_t> medoids;
    std::vector<std::size_t> nearest;
    std::vector<double>      d1;
    std::vector<double>      d2;
    double                   loss = 0.0;

    bool operator==(const ClusterState&) const = default;

    bool is_medoid(std::size_t index) const noexcept;
    /// Position of `index` in `medoids`, or medoids.size() if absent.
    std::size_t position_of(std::size_t index) const noexcept;
};

/// Starting point for BUILD: no medoids, d1 = d2 = kNoSecondMedoid, loss 0.
ClusterState empty_state(std::size_t n);

/// Sum over points of the distance to the closest medoid; |medoids|*n evaluations.
double total_loss(const DistanceOracle& oracle, std::span<const std::size_t> medoids, Phase phase = Phase::cache);

/// Builds caches from scratch with |medoids|*n evaluations.
ClusterState init_state(const DistanceOracle& oracle, std::span<const std::size_t> medoids, Phase phase = Phase::cache);

/// Adds one medoid using n evaluations. Result equals init_state on the enlarged set.
void apply_add(ClusterState& state, const DistanceOracle& oracle, std::size_t new_medoid, Phase phase = Phase::cache);

/// Replaces `medoid_out` by `point_in` at the same position and rebuilds the
/// caches from scratch (|M|*n evaluations).
void apply_swap(ClusterState& state,
                const DistanceOracle& oracle,
                std::size_t medoid_out,
                std::size_t point_in,
                Phase       phase = Phase::cache);

}  // namespace medoids
