#pragma once

#include "medoids/dataset.hpp"
#include "medoids/metrics.hpp"

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace medoids {

/// Label attached to every counted distance evaluation.
///   build          BUILD candidate search
///   swap           SWAP candidate search
///   exact_fallback exact passes after sampling ran out, and swap verification
///   sigma_est      first sampled batch of an adaptive search (sigma estimate)
///   cache          nearest-medoid cache maintenance and loss evaluation
enum class Phase : std::uint8_t { build, swap, exact_fallback, sigma_est, cache };

inline constexpr std::size_t kPhaseCount = 5;

std::string_view phase_name(Phase phase) noexcept;

struct PhaseCounts {
    std::array<std::uint64_t, kPhaseCount> counts{};

    std::uint64_t operator[](Phase phase) const noexcept { return counts[static_cast<std::size_t>(phase)]; }
    std::uint64_t total() const noexcept;

    friend PhaseCounts operator-(const PhaseCounts& lhs, const PhaseCounts& rhs) noexcept;
    bool operator==(const PhaseCounts&) const = default;
};

/// Metric evaluator over a dataset with an exact per-phase call counter.
///
/// The oracle borrows the dataset, which must outlive it. Counters are
/// atomic so concurrent callers never lose increments.
class DistanceOracle {
  public:
    /// Throws ConfigError when the metric does not apply to the dataset's point kind.
    DistanceOracle(const Dataset& dataset, Metric metric);

    DistanceOracle(const DistanceOracle&)            = delete;
    DistanceOracle& operator=(const DistanceOracle&) = delete;

    /// d(x_i, x_j). The first argument is the medoid or candidate side.
    /// Counts one evaluation under `phase`, including when i == j.
    double distance(std::size_t i, std::size_t j, Phase phase) const;

    const Dataset& dataset() const noexcept { return dataset_; }
    Metric         metric() const noexcept { return metric_; }
    std::size_t    size() const noexcept { return dataset_.size(); }

    std::uint64_t eval_count() const noexcept;
    PhaseCounts   phase_counts() const noexcept;
    void          reset() noexcept;

  private:
    const Dataset& dataset_;
    Metric         metric_;

    mutable std::array<std::atomic<std::uint64_t>, kPhaseCount> counts_{};
};

}  // namespace medoids
