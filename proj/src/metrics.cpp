#include "medoids/metrics.hpp"

#include "medoids/errors.hpp"

#include <algorithm>
#include <cmath>

namespace medoids {

namespace {

void check_dims(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw ArgumentError("dimension mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
}

}  // namespace

std::string_view metric_name(Metric metric) noexcept {
    switch (metric) {
        case Metric::l1:
            return "l1";
        case Metric::l2:
            return "l2";
        case Metric::cosine:
            return "cosine";
        case Metric::tree_edit:
            return "tree-edit";
    }
    return "unknown";
}

Metric parse_metric(std::string_view name) {
    if (name == "l1") return Metric::l1;
    if (name == "l2") return Metric::l2;
    if (name == "cosine") return Metric::cosine;
    if (name == "tree-edit" || name == "tree_edit") return Metric::tree_edit;
    throw ArgumentError("unknown metric: " + std::string(name));
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
    check_dims(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += std::abs(a[i] - b[i]);
    }
    return sum;
}

double l2_distance(std::span<const double> a, std::span<const double> b) {
    check_dims(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

double cosine_distance(std::span<const double> a, std::span<const double> b) {
    check_dims(a, b);
    double dot = 0.0, norm_a = 0.0, norm_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        norm_a += a[i] * a[i];
        norm_b += b[i] * b[i];
    }
    if (norm_a == 0.0 || norm_b == 0.0) {
        throw DomainError("cosine distance of a zero-norm vector");
    }
    // rounding can push the cosine slightly outside [-1, 1]
    const double similarity = dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
    return std::clamp(1.0 - similarity, 0.0, 2.0);
}

}  // namespace medoids
