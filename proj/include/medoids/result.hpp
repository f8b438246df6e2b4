#pragma once

#include "medoids/bandit.hpp"
#include "medoids/cluster_state.hpp"
#include "medoids/metrics.hpp"
#include "medoids/oracle.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace medoids {

enum class EventKind { build_add, swap, voronoi_update };

std::string_view event_kind_name(EventKind kind) noexcept;

struct TrajectoryEvent {
    EventKind   kind = EventKind::build_add;
    std::size_t chosen = 0;    ///< added medoid, or the medoid swapped out
    std::size_t swapped_in = 0;  ///< swap only
    double        loss_after          = 0.0;
    std::uint64_t eval_count_snapshot = 0;

    /// Equality ignoring the evaluation counter.
    bool same_step(const TrajectoryEvent& other) const noexcept {
        return kind == other.kind && chosen == other.chosen && swapped_in == other.swapped_in &&
               loss_after == other.loss_after;
    }
};

struct FitResult {
    std::vector<std::size_t>     medoids;
    std::vector<std::size_t>     assignments;
    double                       loss       = 0.0;
    std::size_t                  swap_count = 0;
    std::vector<TrajectoryEvent> trajectory;
    PhaseCounts                  distance_evals;

    std::string                 algorithm;
    std::size_t                 k = 0;
    Metric                      metric = Metric::l2;
    std::optional<SearchConfig> search_config;
};

/// Fills medoids, assignments and loss from a final state.
void assign_from_state(FitResult& result, const ClusterState& state);

}  // namespace medoids
