#include "medoids/oracle.hpp"

#include "medoids/errors.hpp"

#include <numeric>
#include <string>

namespace medoids {

std::string_view phase_name(Phase phase) noexcept {
    switch (phase) {
        case Phase::build:
            return "build";
        case Phase::swap:
            return "swap";
        case Phase::exact_fallback:
            return "exact_fallback";
        case Phase::sigma_est:
            return "sigma_est";
        case Phase::cache:
            return "cache";
    }
    return "unknown";
}

std::uint64_t PhaseCounts::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

PhaseCounts operator-(const PhaseCounts& lhs, const PhaseCounts& rhs) noexcept {
    PhaseCounts diff;
    for (std::size_t i = 0; i < kPhaseCount; ++i) {
        diff.counts[i] = lhs.counts[i] - rhs.counts[i];
    }
    return diff;
}

DistanceOracle::DistanceOracle(const Dataset& dataset, Metric metric)
  : dataset_(dataset)
  , metric_(metric) {
    const bool vector_data = dataset.kind() == PointKind::vector;
    if (vector_data != is_vector_metric(metric)) {
        throw ConfigError("metric '" + std::string(metric_name(metric)) + "' cannot be applied to " +
                          (vector_data ? "vector" : "tree") + " data");
    }
}

double DistanceOracle::distance(std::size_t i, std::size_t j, Phase phase) const {
    counts_[static_cast<std::size_t>(phase)].fetch_add(1, std::memory_order_relaxed);
    switch (metric_) {
        case Metric::l1:
            return l1_distance(dataset_.vector(i), dataset_.vector(j));
        case Metric::l2:
            return l2_distance(dataset_.vector(i), dataset_.vector(j));
        case Metric::cosine:
            return cosine_distance(dataset_.vector(i), dataset_.vector(j));
        case Metric::tree_edit:
            return static_cast<double>(tree_edit_distance(dataset_.postorder(i), dataset_.postorder(j)));
    }
    return 0.0;
}

std::uint64_t DistanceOracle::eval_count() const noexcept {
    return phase_counts().total();
}

PhaseCounts DistanceOracle::phase_counts() const noexcept {
    PhaseCounts snapshot;
    for (std::size_t i = 0; i < kPhaseCount; ++i) {
        snapshot.counts[i] = counts_[i].load(std::memory_order_relaxed);
    }
    return snapshot;
}

void DistanceOracle::reset() noexcept {
    for (auto& count : counts_) {
        count.store(0, std::memory_order_relaxed);
    }
}

}  // namespace medoids
