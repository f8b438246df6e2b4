#pragma once

#include "medoids/dataset.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace medoids {

enum class SyntheticKind { gaussian_mixture, heavy_tail_concentrated };

SyntheticKind parse_synthetic_kind(std::string_view name);

struct SyntheticSpec {
    SyntheticKind kind        = SyntheticKind::gaussian_mixture;
    std::size_t   n           = 100;
    std::size_t   d           = 2;
    std::size_t   clusters    = 5;
    double        cluster_std = 1.0;
    std::uint64_t seed        = 0;
};

/// Spacing between neighbouring gaussian_mixture centers.
inline constexpr double kCenterSpacing = 10.0;

/// gaussian_mixture: cluster centers are distinct nodes, drawn with the seed,
/// of a clusters x clusters grid in the first two coordinates; point i is
/// drawn around center i % clusters with isotropic noise.
/// heavy_tail_concentrated: n - 3 points in one tight blob at the origin plus
/// three distant outliers.
Dataset generate(const SyntheticSpec& spec);

}  // namespace medoids
