#include "medoids/cluster_state.hpp"

#include "medoids/errors.hpp"
#include "medoids/kahan.hpp"

#include <algorithm>
#include <string>

namespace medoids {

namespace {

void check_index(const DistanceOracle& oracle, std::size_t index) {
    if (index >= oracle.size()) {
        throw ArgumentError("point index " + std::to_string(index) + " out of range for n = " +
                            std::to_string(oracle.size()));
    }
}

void check_medoid_set(const DistanceOracle& oracle, std::span<const std::size_t> medoids) {
    if (medoids.empty()) {
        throw ArgumentError("medoid set must not be empty");
    }
    std::vector<bool> seen(oracle.size(), false);
    for (const auto m : medoids) {
        check_index(oracle, m);
        if (seen[m]) {
            throw ArgumentError("duplicate medoid index " + std::to_string(m));
        }
        seen[m] = true;
    }
}

double sum_d1(const std::vector<double>& d1) {
    KahanSum sum;
    for (const double value : d1) {
        sum.add(value);
    }
    return sum.value();
}

// Folds one medoid distance into point j's (nearest, d1, d2) triple.
// Ties on d1 go to the smaller medoid index.
void fold(ClusterState& state, std::size_t j, std::size_t medoid, double dist) {
    const bool closer = dist < state.d1[j] || (dist == state.d1[j] && medoid < state.nearest[j]);
    if (closer) {
        state.d2[j]      = state.d1[j];
        state.d1[j]      = dist;
        state.nearest[j] = medoid;
    } else if (dist < state.d2[j]) {
        state.d2[j] = dist;
    }
}

}  // namespace

bool ClusterState::is_medoid(std::size_t index) const noexcept {
    return std::find(medoids.begin(), medoids.end(), index) != medoids.end();
}

std::size_t ClusterState::position_of(std::size_t index) const noexcept {
    return static_cast<std::size_t>(std::find(medoids.begin(), medoids.end(), index) - medoids.begin());
}

ClusterState empty_state(std::size_t n) {
    ClusterState state;
    state.nearest.assign(n, n);
    state.d1.assign(n, kNoSecondMedoid);
    state.d2.assign(n, kNoSecondMedoid);
    return state;
}

double total_loss(const DistanceOracle& oracle, std::span<const std::size_t> medoids, Phase phase) {
    check_medoid_set(oracle, medoids);
    const std::size_t n = oracle.size();
    std::vector<double> best(n, kNoSecondMedoid);
    for (const auto m : medoids) {
        for (std::size_t j = 0; j < n; ++j) {
            best[j] = std::min(best[j], oracle.distance(m, j, phase));
        }
    }
    return sum_d1(best);
}

ClusterState init_state(const DistanceOracle& oracle, std::span<const std::size_t> medoids, Phase phase) {
    check_medoid_set(oracle, medoids);
    const std::size_t n = oracle.size();
    ClusterState state = empty_state(n);
    state.medoids.assign(medoids.begin(), medoids.end());
    for (const auto m : medoids) {
        for (std::size_t j = 0; j < n; ++j) {
            fold(state, j, m, oracle.distance(m, j, phase));
        }
    }
    state.loss = sum_d1(state.d1);
    return state;
}

void apply_add(ClusterState& state, const DistanceOracle& oracle, std::size_t new_medoid, Phase phase) {
    check_index(oracle, new_medoid);
    if (state.is_medoid(new_medoid)) {
        throw ArgumentError("point " + std::to_string(new_medoid) + " is already a medoid");
    }
    ClusterState next = state;
    next.medoids.push_back(new_medoid);
    for (std::size_t j = 0; j < oracle.size(); ++j) {
        fold(next, j, new_medoid, oracle.distance(new_medoid, j, phase));
    }
    next.loss = sum_d1(next.d1);
    state     = std::move(next);
}

void apply_swap(ClusterState& state,
                const DistanceOracle& oracle,
                std::size_t medoid_out,
                std::size_t point_in,
                Phase       phase) {
    check_index(oracle, point_in);
    const std::size_t position = state.position_of(medoid_out);
    if (position == state.medoids.size()) {
        throw ArgumentError("point " + std::to_string(medoid_out) + " is not a medoid");
    }
    if (state.is_medoid(point_in)) {
        throw ArgumentError("point " + std::to_string(point_in) + " is already a medoid");
    }
    std::vector<std::size_t> medoids = state.medoids;
    medoids[position]                = point_in;
    state                            = init_state(oracle, medoids, phase);
}

}  // namespace medoids
