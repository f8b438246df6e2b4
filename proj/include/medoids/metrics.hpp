#pragma once

#include <span>
#include <string>
#include <string_view>

namespace medoids {

enum class Metric { l1, l2, cosine, tree_edit };

/// CLI spelling: "l1", "l2", "cosine", "tree-edit".
std::string_view metric_name(Metric metric) noexcept;
Metric           parse_metric(std::string_view name);

constexpr bool is_vector_metric(Metric metric) noexcept { return metric != Metric::tree_edit; }

// All vector metrics throw ArgumentError on dimension mismatch.
double l1_distance(std::span<const double> a, std::span<const double> b);
double l2_distance(std::span<const double> a, std::span<const double> b);

/// 1 - cos(a, b), in [0, 2]. Zero-norm input throws DomainError.
double cosine_distance(std::span<const double> a, std::span<const double> b);

}  // namespace medoids
