#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "f2q/gf2.hpp"
#include "f2q/rational.hpp"

namespace f2q {

/// Directed forest on nodes 0..n-1; edges run parent -> child. Each node has
/// at most one parent and the edge set is acyclic. Edges are kept sorted
/// ascending by (parent, child).
struct Forest {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Validates invariants (bounds, single parent, acyclicity) and sorts edges.
Forest make_forest(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

/// fenwick(0, n-1): connect E to floor((S+E)/2), recurse on both halves.
Forest build_fenwick(std::size_t n);

/// sierpinski(0, 3^k-1) for the smallest power of three >= n, then delete
/// nodes with index >= n together with their incident edges; orphaned
/// subtrees become independent roots.
Forest build_sierpinski(std::size_t n);

using ForestObjective = std::function<Rational(const Forest&)>;

/// Greedy edge deletion: sweep edges in ascending (parent, child) order,
/// delete an edge iff the objective strictly decreases, repeat full passes
/// until a pass deletes nothing.
Forest prune_sierpinski(const Forest& f, const ForestObjective& objective);

/// R[i][j] = 1 iff j != i and j is reachable from i along parent->child edges.
BitMatrix transitive_closure(const Forest& f);

/// G = R + I. Unit diagonal; invertible for every forest.
BitMatrix completion_matrix(const Forest& f);

/// Lines "parent child", ascending.
std::string forest_str(const Forest& f);
Forest forest_parse(std::size_t n, const std::string& text);

/// Rooted ternary tree; nodes labeled 0..n-1 breadth-first, left to right.
/// Each node has exactly three child slots (upper, middle, lower); a slot
/// holds either a node index or kLeaf.
struct TernaryTree {
  static constexpr std::size_t kLeaf = std::numeric_limits<std::size_t>::max();
  std::size_t n = 0;
  std::vector<std::array<std::size_t, 3>> children;
  std::vector<std::size_t> roots;
};

/// Complete tree on the largest m = (3^h - 1)/2 <= n nodes; the remaining
/// n - m nodes replace leaves of the next level breadth-first, left to right.
TernaryTree build_ternary_tree(std::size_t n);

enum class Branch : unsigned char { upper = 0, middle = 1, lower = 2 };

struct PathStep {
  std::size_t node;
  Branch branch;
  bool operator==(const PathStep&) const = default;
};
using TreePath = std::vector<PathStep>;

/// All 2n+1 root-to-leaf paths, depth-first with upper < middle < lower.
std::vector<TreePath> enumerate_paths(const TernaryTree& t);

std::string ternary_tree_str(const TernaryTree& t);

}  // namespace f2q
