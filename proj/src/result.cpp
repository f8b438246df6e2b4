#include "medoids/result.hpp"

namespace medoids {

std::string_view event_kind_name(EventKind kind) noexcept {
    switch (kind) {
        case EventKind::build_add:
            return "build_add";
        case EventKind::swap:
            return "swap";
        case EventKind::voronoi_update:
            return "voronoi_update";
    }
    return "unknown";
}

void assign_from_state(FitResult& result, const ClusterState& state) {
    result.medoids     = state.medoids;
    result.assignments = state.nearest;
    result.loss        = state.loss;
}

}  // namespace medoids
