#include "medoids/dataset.hpp"

#include "medoids/errors.hpp"

#include <string>

namespace medoids {

Dataset Dataset::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) {
        throw ArgumentError("dataset must contain at least one point");
    }
    const std::size_t dim = rows.front().size();
    std::vector<double> values;
    values.reserve(rows.size() * dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != dim) {
            throw ArgumentError("ragged rows: row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                " values, expected " + std::to_string(dim));
        }
        values.insert(values.end(), rows[i].begin(), rows[i].end());
    }
    return from_flat(std::move(values), dim);
}

Dataset Dataset::from_flat(std::vector<double> values, std::size_t dim) {
    if (dim == 0) {
        throw ArgumentError("vector points need dimensionality >= 1");
    }
    if (values.empty() || values.size() % dim != 0) {
        throw ArgumentError("flat buffer size " + std::to_string(values.size()) + " is not a positive multiple of " +
                            std::to_string(dim));
    }
    Dataset dataset;
    dataset.kind_   = PointKind::vector;
    dataset.dim_    = dim;
    dataset.n_      = values.size() / dim;
    dataset.values_ = std::move(values);
    return dataset;
}

Dataset Dataset::from_trees(std::vector<TreeNode> trees) {
    if (trees.empty()) {
        throw ArgumentError("dataset must contain at least one point");
    }
    Dataset dataset;
    dataset.kind_ = PointKind::tree;
    dataset.n_    = trees.size();
    dataset.postorders_.reserve(trees.size());
    for (const auto& tree : trees) {
        dataset.postorders_.emplace_back(tree);
    }
    dataset.trees_ = std::move(trees);
    return dataset;
}

std::span<const double> Dataset::vector(std::size_t i) const {
    if (kind_ != PointKind::vector) {
        throw ConfigError("dataset holds trees, not vectors");
    }
    return std::span<const double>(values_).subspan(i * dim_, dim_);
}

const TreeNode& Dataset::tree(std::size_t i) const {
    if (kind_ != PointKind::tree) {
        throw ConfigError("dataset holds vectors, not trees");
    }
    return trees_.at(i);
}

const PostorderTree& Dataset::postorder(std::size_t i) const {
    if (kind_ != PointKind::tree) {
        throw ConfigError("dataset holds vectors, not trees");
    }
    return postorders_.at(i);
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
    for (const auto index : indices) {
        if (index >= n_) {
            throw ArgumentError("subset index " + std::to_string(index) + " out of range");
        }
    }
    if (kind_ == PointKind::tree) {
        std::vector<TreeNode> trees;
        trees.reserve(indices.size());
        for (const auto index : indices) {
            trees.push_back(trees_[index]);
        }
        return from_trees(std::move(trees));
    }
    std::vector<double> values;
    values.reserve(indices.size() * dim_);
    for (const auto index : indices) {
        const auto row = vector(index);
        values.insert(values.end(), row.begin(), row.end());
    }
    return from_flat(std::move(values), dim_);
}

}  // namespace medoids
