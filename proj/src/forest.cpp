#include "f2q/forest.hpp"

#include <algorithm>
#include <sstream>

namespace f2q {

Forest make_forest(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  if (n < 1) throw Error("make_forest: n must be >= 1");
  std::vector<std::size_t> parent(n, TernaryTree::kLeaf);
  for (auto [p, c] : edges) {
    if (p >= n || c >= n) throw IndexOutOfRange("make_forest: edge endpoint out of range");
    if (p == c) throw Error("make_forest: self-loop");
    if (parent[c] != TernaryTree::kLeaf) throw Error("make_forest: node has two parents");
    parent[c] = p;
  }
  // Walking parent links must terminate at a root for every node.
  std::vector<int> state(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t u = v;
    std::vector<std::size_t> trail;
    while (u != TernaryTree::kLeaf && state[u] == 0) {
      state[u] = 1;
      trail.push_back(u);
      u = parent[u];
    }
    if (u != TernaryTree::kLeaf && state[u] == 1) throw Error("make_forest: cycle detected");
    for (std::size_t t : trail) state[t] = 2;
  }
  std::sort(edges.begin(), edges.end());
  return Forest{n, std::move(edges)};
}

namespace {

void fenwick_rec(std::size_t s, std::size_t e,
                 std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (s == e) return;
  std::size_t mid = (s + e) / 2;
  edges.emplace_back(e, mid);
  fenwick_rec(s, mid, edges);
  fenwick_rec(mid + 1, e, edges);
}

void sierpinski_rec(std::size_t s, std::size_t e,
                    std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (s == e) return;
  std::size_t size = e - s + 1;
  if (size % 3 != 0 || (size / 3 - 1) % 2 != 0)
    throw Error("sierpinski: interval size is not a power of three");
  std::size_t left = s + (size / 3 - 1) / 2;
  std::size_t center = (s + e) / 2;
  std::size_t right = e - (left - s);
  edges.emplace_back(center, left);
  edges.emplace_back(center, right);
  std::size_t t = 2 * (left - s);
  sierpinski_rec(s, s + t, edges);
  sierpinski_rec(s + t + 1, s + 2 * t + 1, edges);
  sierpinski_rec(s + 2 * t + 2, e, edges);
}

}  // namespace

Forest build_fenwick(std::size_t n) {
  if (n < 1) throw Error("build_fenwick: n must be >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  fenwick_rec(0, n - 1, edges);
  return make_forest(n, std::move(edges));
}

Forest build_sierpinski(std::size_t n) {
  if (n < 1) throw Error("build_sierpinski: n must be >= 1");
  std::size_t p = 1;
  while (p < n) p *= 3;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (p > 1) sierpinski_rec(0, p - 1, edges);
  // Delete nodes with index >= n together with their incident edges.
  std::erase_if(edges, [n](const auto& e) { return e.first >= n || e.second >= n; });
  return make_forest(n, std::move(edges));
}

Forest prune_sierpinski(const Forest& f, const ForestObjective& objective) {
  Forest cur = f;
  Rational best = objective(cur);
  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t idx = 0;
    while (idx < cur.edges.size()) {
      Forest trial = cur;
      trial.edges.erase(trial.edges.begin() + static_cast<std::ptrdiff_t>(idx));
      Rational v = objective(trial);
      if (v < best) {
        cur = std::move(trial);
        best = v;
        changed = true;
      } else {
        ++idx;
      }
    }
  }
  return cur;
}

BitMatrix transitive_closure(const Forest& f) {
  const std::size_t n = f.n;
  std::vector<std::vector<std::size_t>> children(n);
  std::vector<bool> is_child(n, false);
  for (auto [p, c] : f.edges) {
    children[p].push_back(c);
    is_child[c] = true;
  }
  BitMatrix r(n, n);
  // Post-order over each root so descendant rows are complete before parents.
  std::vector<bool> done(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (is_child[root] || done[root]) continue;
    std::vector<std::pair<std::size_t, bool>> stack{{root, false}};
    while (!stack.empty()) {
      auto [u, expanded] = stack.back();
      stack.pop_back();
      if (expanded) {
        auto urow = r.row(u);
        for (std::size_t c : children[u]) {
          r.set(u, c, true);
          auto crow = r.row(c);
          for (std::size_t w = 0; w < urow.size(); ++w) urow[w] |= crow[w];
        }
        done[u] = true;
      } else {
        stack.emplace_back(u, true);
        for (std::size_t c : children[u]) stack.emplace_back(c, false);
      }
    }
  }
  return r;
}

BitMatrix completion_matrix(const Forest& f) {
  BitMatrix g = transitive_closure(f);
  for (std::size_t i = 0; i < f.n; ++i) g.set(i, i, true);
  return g;
}

std::string forest_str(const Forest& f) {
  std::ostringstream out;
  for (auto [p, c] : f.edges) out << p << ' ' << c << '\n';
  return out.str();
}

Forest forest_parse(std::size_t n, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::size_t p, c;
    if (!(ls >> p >> c)) throw Error("forest_parse: expected 'parent child' per line");
    edges.emplace_back(p, c);
  }
  return make_forest(n, std::move(edges));
}

namespace {

std::size_t level_start(std::size_t l) {
  std::size_t pow = 1;
  for (std::size_t i = 0; i < l; ++i) pow *= 3;
  return (pow - 1) / 2;
}

}  // namespace

TernaryTree build_ternary_tree(std::size_t n) {
  if (n < 1) throw Error("build_ternary_tree: n must be >= 1");
  TernaryTree t;
  t.n = n;
  t.roots = {0};
  t.children.assign(n, {TernaryTree::kLeaf, TernaryTree::kLeaf, TernaryTree::kLeaf});
  for (std::size_t u = 0; u < n; ++u) {
    std::size_t l = 0;
    while (level_start(l + 1) <= u) ++l;
    std::size_t p = u - level_start(l);
    for (std::size_t c = 0; c < 3; ++c) {
      std::size_t v = level_start(l + 1) + 3 * p + c;
      if (v < n) t.children[u][c] = v;
    }
  }
  return t;
}

namespace {

void paths_rec(const TernaryTree& t, std::size_t u, TreePath& prefix,
               std::vector<TreePath>& out) {
  for (std::size_t c = 0; c < 3; ++c) {
    prefix.push_back({u, static_cast<Branch>(c)});
    std::size_t v = t.children[u][c];
    if (v == TernaryTree::kLeaf)
      out.push_back(prefix);
    else
      paths_rec(t, v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<TreePath> enumerate_paths(const TernaryTree& t) {
  std::vector<TreePath> out;
  out.reserve(2 * t.n + 1);
  TreePath prefix;
  for (std::size_t root : t.roots) paths_rec(t, root, prefix, out);
  return out;
}

std::string ternary_tree_str(const TernaryTree& t) {
  std::ostringstream out;
  for (std::size_t u = 0; u < t.n; ++u)
    for (std::size_t c = 0; c < 3; ++c)
      if (t.children[u][c] != TernaryTree::kLeaf) out << u << ' ' << t.children[u][c] << '\n';
  return out.str();
}

}  // namespace f2q
