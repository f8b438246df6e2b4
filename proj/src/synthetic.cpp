#include "medoids/synthetic.hpp"

#include "medoids/errors.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace medoids {

SyntheticKind parse_synthetic_kind(std::string_view name) {
    if (name == "gaussian" || name == "gaussian_mixture") return SyntheticKind::gaussian_mixture;
    if (name == "heavytail" || name == "heavy_tail_concentrated") return SyntheticKind::heavy_tail_concentrated;
    throw ArgumentError("unknown generator: " + std::string(name));
}

Dataset generate(const SyntheticSpec& spec) {
    if (spec.clusters < 1 || spec.n < spec.clusters) {
        throw ArgumentError("synthetic spec needs n >= clusters >= 1");
    }
    if (spec.d < 1) {
        throw ArgumentError("synthetic spec needs d >= 1");
    }
    if (spec.cluster_std < 0.0) {
        throw ArgumentError("cluster_std must be non-negative");
    }

    std::mt19937_64                  rng(spec.seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    std::vector<double>              values(spec.n * spec.d, 0.0);
    auto point = [&](std::size_t i) { return values.begin() + static_cast<std::ptrdiff_t>(i * spec.d); };

    if (spec.kind == SyntheticKind::gaussian_mixture) {
        // distinct nodes of a clusters x clusters grid (a line when d = 1)
        const std::size_t side  = spec.clusters;
        const std::size_t nodes = spec.d > 1 ? side * side : side;
        std::vector<std::size_t> grid(nodes);
        std::iota(grid.begin(), grid.end(), 0);
        for (std::size_t c = 0; c < spec.clusters; ++c) {
            std::uniform_int_distribution<std::size_t> pick(c, nodes - 1);
            std::swap(grid[c], grid[pick(rng)]);
        }
        for (std::size_t i = 0; i < spec.n; ++i) {
            const std::size_t node = grid[i % spec.clusters];
            auto              p    = point(i);
            p[0]                   = kCenterSpacing * static_cast<double>(node % side);
            if (spec.d > 1) {
                p[1] = kCenterSpacing * static_cast<double>(node / side);
            }
            for (std::size_t dim = 0; dim < spec.d; ++dim) {
                p[static_cast<std::ptrdiff_t>(dim)] += spec.cluster_std * noise(rng);
            }
        }
        return Dataset::from_flat(std::move(values), spec.d);
    }

    // blob at the origin; outliers far out along distinct directions
    const std::size_t outliers = std::min<std::size_t>(3, spec.n - 1);
    const double      far      = 20.0 * kCenterSpacing;
    for (std::size_t i = 0; i < spec.n - outliers; ++i) {
        auto p = point(i);
        for (std::size_t dim = 0; dim < spec.d; ++dim) {
            p[static_cast<std::ptrdiff_t>(dim)] = spec.cluster_std * noise(rng);
        }
    }
    for (std::size_t o = 0; o < outliers; ++o) {
        auto p = point(spec.n - outliers + o);
        p[static_cast<std::ptrdiff_t>(o % spec.d)] = far * static_cast<double>(o + 1) * (o % 2 == 0 ? 1.0 : -1.0);
    }
    return Dataset::from_flat(std::move(values), spec.d);
}

}  // namespace medoids
