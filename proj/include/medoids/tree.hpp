#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace medoids {

/// Rooted ordered labeled tree. Child order is significant.
struct TreeNode {
    std::string           label;
    std::vector<TreeNode> children;

    bool operator==(const TreeNode&) const = default;

    std::size_t size() const;
};

/// Parses `node := LABEL [ '(' node (',' node)* ')' ]` with LABEL = [A-Za-z0-9_]+.
/// Whitespace is not permitted. Throws ParseError with the failing offset.
TreeNode parse_tree(std::string_view text);

/// Inverse of parse_tree.
std::string to_string(const TreeNode& tree);

/// Postorder flattening used by the edit-distance dynamic program.
struct PostorderTree {
    std::vector<std::string> labels;    // labels[i] of the i-th node in postorder
    std::vector<std::size_t> leftmost;  // postorder index of the leftmost leaf under i
    std::vector<std::size_t> keyroots;  // ascending

    explicit PostorderTree(const TreeNode& root);

    std::size_t size() const noexcept { return labels.size(); }
};

/// Unit-cost ordered tree edit distance (Zhang-Shasha).
std::size_t tree_edit_distance(const PostorderTree& a, const PostorderTree& b);
std::size_t tree_edit_distance(const TreeNode& a, const TreeNode& b);

}  // namespace medoids
