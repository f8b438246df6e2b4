#pragma once

#include "medoids/cluster_state.hpp"

#include <algorithm>
#include <cstddef>

namespace medoids {

// Per-reference terms of the BUILD and SWAP objectives. Shared by the exact
// scans and the sampled arm evaluators so both sum identical values.

/// Loss change at reference j from adding candidate x, given dist = d(x, x_j).
/// With no medoids yet the objective is the plain distance.
inline double build_gain(const ClusterState& state, std::size_t j, double dist) noexcept {
    if (state.medoids.empty()) {
        return dist;
    }
    return std::min(dist - state.d1[j], 0.0);
}

/// Loss change at reference j from swapping medoid m out for candidate x,
/// given dist = d(x, x_j). Depends on m only through nearest[j] == m.
inline double swap_delta(const ClusterState& state, std::size_t medoid, std::size_t j, double dist) noexcept {
    const double kept = state.nearest[j] == medoid ? state.d2[j] : state.d1[j];
    return std::min(kept, dist) - state.d1[j];
}

}  // namespace medoids
