#include "doctest.h"

#include "medoids/errors.hpp"
#include "medoids/metrics.hpp"
#include "medoids/tree.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace medoids;

TEST_CASE("l1") {
    const std::vector<double> a = {0, 0}, b = {1, 2}, c = {-1, 1}, d = {1, -1};
    CHECK(l1_distance(b, b) == 0.0);
    CHECK(l1_distance(a, b) == 3.0);
    CHECK(l1_distance(c, d) == 4.0);
    CHECK(l1_distance(d, c) == 4.0);
    CHECK_THROWS_AS(l1_distance(a, std::vector<double>{1.0}), ArgumentError);
}

TEST_CASE("l2") {
    const std::vector<double> a = {0, 0}, b = {3, 4}, c = {1, 1}, d = {2, 2};
    CHECK(l2_distance(b, b) == 0.0);
    CHECK(l2_distance(a, b) == 5.0);
    CHECK(l2_distance(c, d) == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(l2_distance(a, std::vector<double>{1, 2, 3}), ArgumentError);
}

TEST_CASE("cosine") {
    const std::vector<double> x = {1, 0}, y = {0, 1}, neg = {-1, 0}, z = {0, 0}, w = {0.3, 0.7};
    CHECK(cosine_distance(w, w) == 0.0);
    CHECK(cosine_distance(x, y) == doctest::Approx(1.0));
    CHECK(cosine_distance(x, neg) == doctest::Approx(2.0));
    CHECK_THROWS_AS(cosine_distance(x, z), DomainError);
    CHECK_THROWS_AS(cosine_distance(z, z), DomainError);
}

TEST_CASE("metric names round trip") {
    for (auto metric : {Metric::l1, Metric::l2, Metric::cosine, Metric::tree_edit}) {
        CHECK(parse_metric(metric_name(metric)) == metric);
    }
    CHECK_THROWS_AS(parse_metric("hamming"), ArgumentError);
}

TEST_CASE("parse_tree") {
    CHECK(parse_tree("a") == TreeNode{"a", {}});
    const auto tree = parse_tree("a(b,c(d))");
    REQUIRE(tree.children.size() == 2);
    CHECK(tree.children[0] == TreeNode{"b", {}});
    CHECK(tree.children[1].label == "c");
    CHECK(tree.children[1].children == std::vector<TreeNode>{TreeNode{"d", {}}});
    CHECK(tree.size() == 4);
    CHECK(to_string(tree) == "a(b,c(d))");
    CHECK(parse_tree("If_1(x,Move_2(y_z))").children[1].label == "Move_2");

    try {
        parse_tree("a(");
        FAIL("expected parse error");
    } catch (const ParseError& error) {
        CHECK(error.offset() == 2);
    }
    for (const char* bad : {"", "(a)", "a()", "a(b,)", "a(b", "a b", "a)", "a(b))"}) {
        CHECK_THROWS_AS(parse_tree(bad), ParseError);
    }
}

namespace {

// Exhaustive oracle: breadth-first search over forests using single
// insert / delete / relabel operations.
struct Node {
    char              label;
    std::vector<Node> kids;
};
using Forest = std::vector<Node>;

std::size_t count(const Forest& forest) {
    std::size_t total = 0;
    for (const auto& node : forest) total += 1 + count(node.kids);
    return total;
}

std::string key(const Forest& forest) {
    std::string out;
    for (const auto& node : forest) {
        out += node.label;
        out += '(' + key(node.kids) + ')';
    }
    return out;
}

void neighbors(const Forest& list, std::size_t total, std::size_t cap, std::vector<Forest>& out) {
    for (std::size_t i = 0; i < list.size(); ++i) {
        Forest relabeled   = list;
        relabeled[i].label = list[i].label == 'a' ? 'b' : 'a';
        out.push_back(relabeled);

        Forest deleted(list.begin(), list.begin() + i);
        deleted.insert(deleted.end(), list[i].kids.begin(), list[i].kids.end());
        deleted.insert(deleted.end(), list.begin() + i + 1, list.end());
        out.push_back(deleted);

        std::vector<Forest> inner;
        neighbors(list[i].kids, total, cap, inner);
        for (auto& kids : inner) {
            Forest changed  = list;
            changed[i].kids = std::move(kids);
            out.push_back(std::move(changed));
        }
    }
    if (total < cap) {
        for (std::size_t i = 0; i <= list.size(); ++i) {
            for (std::size_t j = i; j <= list.size(); ++j) {
                for (char label : {'a', 'b'}) {
                    Forest inserted(list.begin(), list.begin() + i);
                    inserted.push_back(Node{label, Forest(list.begin() + i, list.begin() + j)});
                    inserted.insert(inserted.end(), list.begin() + j, list.end());
                    out.push_back(std::move(inserted));
                }
            }
        }
    }
}

std::map<std::string, std::size_t> bfs(const Forest& source, std::size_t cap, std::map<std::string, Forest>* seen_states) {
    std::map<std::string, std::size_t> dist;
    std::queue<Forest>                 queue;
    dist[key(source)] = 0;
    queue.push(source);
    while (!queue.empty()) {
        const Forest current = queue.front();
        queue.pop();
        const std::size_t d = dist[key(current)];
        if (seen_states) (*seen_states)[key(current)] = current;
        std::vector<Forest> next;
        neighbors(current, count(current), cap, next);
        for (auto& forest : next) {
            const auto k = key(forest);
            if (!dist.count(k)) {
                dist[k] = d + 1;
                queue.push(std::move(forest));
            }
        }
    }
    return dist;
}

TreeNode to_tree(const Node& node) {
    TreeNode tree{std::string(1, node.label), {}};
    for (const auto& kid : node.kids) tree.children.push_back(to_tree(kid));
    return tree;
}

}  // namespace

TEST_CASE("tree edit distance examples") {
    CHECK(tree_edit_distance(parse_tree("a(b,c(d))"), parse_tree("a(b,c(d))")) == 0);
    CHECK(tree_edit_distance(parse_tree("a"), parse_tree("b")) == 1);
    CHECK(tree_edit_distance(parse_tree("a(b)"), parse_tree("a")) == 1);
    CHECK(tree_edit_distance(parse_tree("a(b,c)"), parse_tree("a(c)")) == 1);
    // classic Zhang-Shasha example
    CHECK(tree_edit_distance(parse_tree("f(d(a,c(b)),e)"), parse_tree("f(c(d(a,b)),e)")) == 2);
}

TEST_CASE("tree edit distance equals exhaustive search on trees up to 4 nodes") {
    constexpr std::size_t cap = 4;
    std::map<std::string, Forest> states;
    bfs(Forest{}, cap, &states);
    std::vector<Forest> trees;
    for (const auto& [k, forest] : states) {
        if (forest.size() == 1) trees.push_back(forest);
    }
    REQUIRE(trees.size() == 2 + 4 + 2 * 8 + 5 * 16);

    std::size_t pairs = 0;
    for (const auto& a : trees) {
        const auto dist  = bfs(a, cap, nullptr);
        const auto tree_a = to_tree(a.front());
        for (const auto& b : trees) {
            const auto expected = dist.at(key(b));
            CHECK(tree_edit_distance(tree_a, to_tree(b.front())) == expected);
            ++pairs;
        }
    }
    CHECK(pairs == 102 * 102);
}

namespace {

TreeNode random_tree(std::mt19937_64& rng, std::size_t nodes) {
    // attach each new node under a random existing one, as its last child
    std::vector<std::vector<std::size_t>> kids(nodes);
    std::vector<char>                     labels(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
        labels[i] = static_cast<char>('a' + rng() % 3);
        if (i > 0) kids[rng() % i].push_back(i);
    }
    std::function<TreeNode(std::size_t)> build = [&](std::size_t i) {
        TreeNode node{std::string(1, labels[i]), {}};
        for (auto c : kids[i]) node.children.push_back(build(c));
        return node;
    };
    return build(0);
}

}  // namespace

TEST_CASE("tree edit distance is a metric on random small trees") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_tree(rng, 1 + rng() % 6);
        const auto b = random_tree(rng, 1 + rng() % 6);
        const auto c = random_tree(rng, 1 + rng() % 6);
        const auto ab = tree_edit_distance(a, b), bc = tree_edit_distance(b, c), ac = tree_edit_distance(a, c);
        CHECK(tree_edit_distance(a, a) == 0);
        CHECK(ab == tree_edit_distance(b, a));
        CHECK(ac <= ab + bc);
        CHECK(parse_tree(to_string(a)) == a);
    }
}
