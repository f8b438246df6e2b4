#pragma once

#include "medoids/tree.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace medoids {

enum class PointKind { vector, tree };

/// Immutable point collection. Vector points are stored row-major in one
/// contiguous buffer; tree points keep both the parsed tree and its postorder
/// form so the edit distance never re-flattens.
class Dataset {
  public:
    /// Throws ArgumentError if `rows` is empty, any row is empty, or rows are ragged.
    static Dataset from_rows(const std::vector<std::vector<double>>& rows);
    static Dataset from_flat(std::vector<double> values, std::size_t dim);
    static Dataset from_trees(std::vector<TreeNode> trees);

    std::size_t size() const noexcept { return n_; }
    PointKind   kind() const noexcept { return kind_; }
    /// Dimensionality of vector points; 0 for tree datasets.
    std::size_t dim() const noexcept { return dim_; }

    std::span<const double> vector(std::size_t i) const;
    const TreeNode&         tree(std::size_t i) const;
    const PostorderTree&    postorder(std::size_t i) const;

    /// New dataset holding the listed points in the listed order.
    Dataset subset(std::span<const std::size_t> indices) const;

  private:
    Dataset() = default;

    PointKind                  kind_ = PointKind::vector;
    std::size_t                n_    = 0;
    std::size_t                dim_  = 0;
    std::vector<double>        values_;
    std::vector<TreeNode>      trees_;
    std::vector<PostorderTree> postorders_;
};

}  // namespace medoids
