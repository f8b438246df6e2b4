#include "medoids/tree.hpp"

#include "medoids/errors.hpp"

#include <algorithm>
#include <cctype>

namespace medoids {

std::size_t TreeNode::size() const {
    std::size_t total = 1;
    for (const auto& child : children) {
        total += child.size();
    }
    return total;
}

namespace {

bool is_label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class TreeParser {
  public:
    explicit TreeParser(std::string_view text)
      : text_(text) {}

    TreeNode parse() {
        TreeNode root = parse_node();
        if (pos_ != text_.size()) {
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        }
        return root;
    }

  private:
    TreeNode parse_node() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_label_char(text_[pos_])) {
            ++pos_;
        }
        if (pos_ == start) {
            fail(pos_ < text_.size() ? "expected label, found '" + std::string(1, text_[pos_]) + "'"
                                     : "expected label, found end of input");
        }
        TreeNode node{std::string(text_.substr(start, pos_ - start)), {}};
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            node.children.push_back(parse_node());
            while (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                node.children.push_back(parse_node());
            }
            if (pos_ >= text_.size() || text_[pos_] != ')') {
                fail("expected ',' or ')'");
            }
            ++pos_;
        }
        return node;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError("tree parse error at offset " + std::to_string(pos_) + ": " + message, 0, pos_);
    }

    std::string_view text_;
    std::size_t      pos_ = 0;
};

void serialize(const TreeNode& node, std::string& out) {
    out += node.label;
    if (node.children.empty()) {
        return;
    }
    out += '(';
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        serialize(node.children[i], out);
    }
    out += ')';
}

// Returns the postorder index of the leftmost leaf below `node`.
std::size_t flatten(const TreeNode& node, PostorderTree& out) {
    std::size_t leftmost = 0;
    bool        first    = true;
    for (const auto& child : node.children) {
        const std::size_t child_leftmost = flatten(child, out);
        if (first) {
            leftmost = child_leftmost;
            first    = false;
        }
    }
    const std::size_t self = out.labels.size();
    out.labels.push_back(node.label);
    out.leftmost.push_back(first ? self : leftmost);
    return first ? self : leftmost;
}

}  // namespace

TreeNode parse_tree(std::string_view text) {
    return TreeParser(text).parse();
}

std::string to_string(const TreeNode& tree) {
    std::string out;
    serialize(tree, out);
    return out;
}

PostorderTree::PostorderTree(const TreeNode& root) {
    flatten(root, *this);
    // a keyroot is the last node (in postorder) sharing its leftmost leaf
    std::vector<bool> seen(labels.size(), false);
    for (std::size_t i = labels.size(); i-- > 0;) {
        if (!seen[leftmost[i]]) {
            seen[leftmost[i]] = true;
            keyroots.push_back(i);
        }
    }
    std::sort(keyroots.begin(), keyroots.end());
}

std::size_t tree_edit_distance(const PostorderTree& a, const PostorderTree& b) {
    const std::size_t na = a.size();
    const std::size_t nb = b.size();

    // tree_dist[i][j]: distance between the subtrees rooted at postorder i and j
    std::vector<std::size_t> tree_dist(na * nb, 0);
    std::vector<std::size_t> forest((na + 1) * (nb + 1), 0);

    for (const std::size_t ki : a.keyroots) {
        for (const std::size_t kj : b.keyroots) {
            const std::size_t li   = a.leftmost[ki];
            const std::size_t lj   = b.leftmost[kj];
            const std::size_t rows = ki - li + 2;
            const std::size_t cols = kj - lj + 2;
            // forest[r][c]: forest a[li .. li+r-1] vs b[lj .. lj+c-1]
            auto fd = [&](std::size_t r, std::size_t c) -> std::size_t& { return forest[r * cols + c]; };

            fd(0, 0) = 0;
            for (std::size_t r = 1; r < rows; ++r) fd(r, 0) = fd(r - 1, 0) + 1;
            for (std::size_t c = 1; c < cols; ++c) fd(0, c) = fd(0, c - 1) + 1;

            for (std::size_t r = 1; r < rows; ++r) {
                const std::size_t i = li + r - 1;
                for (std::size_t c = 1; c < cols; ++c) {
                    const std::size_t j        = lj + c - 1;
                    const std::size_t del_ins  = std::min(fd(r - 1, c), fd(r, c - 1)) + 1;
                    if (a.leftmost[i] == li && b.leftmost[j] == lj) {
                        const std::size_t relabel = fd(r - 1, c - 1) + (a.labels[i] == b.labels[j] ? 0 : 1);
                        fd(r, c)                  = std::min(del_ins, relabel);
                        tree_dist[i * nb + j]     = fd(r, c);
                    } else {
                        const std::size_t pr = a.leftmost[i] - li;
                        const std::size_t pc = b.leftmost[j] - lj;
                        fd(r, c)             = std::min(del_ins, fd(pr, pc) + tree_dist[i * nb + j]);
                    }
                }
            }
        }
    }
    return tree_dist[(na - 1) * nb + (nb - 1)];
}

std::size_t tree_edit_distance(const TreeNode& a, const TreeNode& b) {
    return tree_edit_distance(PostorderTree(a), PostorderTree(b));
}

}  // namespace medoids
