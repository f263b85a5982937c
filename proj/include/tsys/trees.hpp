#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tsys/errors.hpp"
#include "tsys/structures.hpp"
#include "tsys/transfer.hpp"

namespace tsys {

enum class Color { blue = 0, green = 1, red = 2 };

inline const char* color_name(Color c) {
  switch (c) {
    case Color::blue:
      return "blue";
    case Color::green:
      return "green";
    case Color::red:
      return "red";
  }
  return "?";
}

/// A rooted tree with at most one blue, one green and one red child per
/// node. Canonical child order is blue < green < red.
struct TricoloredTree {
  struct Node {
    int parent = -1;
    Color parent_color = Color::blue;
    std::array<int, 3> child = {-1, -1, -1};  // indexed by Color
  };

  std::vector<Node> nodes;
  int root = 0;

  int size() const { return static_cast<int>(nodes.size()); }
  int child_of(int v, Color c) const {
    return nodes[v].child[static_cast<int>(c)];
  }
};

/// Builds and validates a tree from a parent/child/color edge list over
/// node ids {0..m-1}.
inline TricoloredTree tree_from_edges(
    int m, const std::vector<std::tuple<int, int, Color>>& edges) {
  if (m < 1) throw Error("a tricolored tree needs at least one node");
  if (static_cast<int>(edges.size()) != m - 1)
    throw Error("a tree on " + std::to_string(m) + " nodes needs exactly " +
                std::to_string(m - 1) + " edges");
  TricoloredTree t;
  t.nodes.resize(m);
  for (const auto& [parent, child, color] : edges) {
    if (parent < 0 || parent >= m || child < 0 || child >= m)
      throw Error("tree edge names a node outside {0..m-1}");
    if (t.nodes[child].parent != -1)
      throw Error("node " + std::to_string(child) + " has two parents");
    if (t.child_of(parent, color) != -1)
      throw Error("node " + std::to_string(parent) + " has two " +
                  color_name(color) + " children");
    t.nodes[child].parent = parent;
    t.nodes[child].parent_color = color;
    t.nodes[parent].child[static_cast<int>(color)] = child;
  }
  int root = -1;
  for (int v = 0; v < m; ++v)
    if (t.nodes[v].parent == -1) {
      if (root != -1) throw Error("tree has two roots");
      root = v;
    }
  if (root == -1) throw Error("tree has a cycle (no root)");
  t.root = root;
  std::vector<int> stack = {root};
  int seen = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int c = 0; c < 3; ++c)
      if (t.nodes[v].child[c] != -1) stack.push_back(t.nodes[v].child[c]);
  }
  if (seen != m) throw Error("tree is not connected");
  return t;
}

inline std::vector<std::tuple<int, int, Color>> tree_edges(
    const TricoloredTree& t) {
  std::vector<std::tuple<int, int, Color>> out;
  for (int v = 0; v < t.size(); ++v)
    for (int c = 0; c < 3; ++c)
      if (t.nodes[v].child[c] != -1)
        out.emplace_back(v, t.nodes[v].child[c], static_cast<Color>(c));
  std::sort(out.begin(), out.end());
  return out;
}

/// The unique admissible left-to-right labeling: blue subtrees entirely
/// left of their node, green subtrees right, red subtrees right of the node
/// and of its whole green subtree. Computed by the traversal
/// (blue subtree, node, green subtree, red subtree).
inline std::vector<int> admissible_order(const TricoloredTree& t) {
  std::vector<int> label(t.size(), -1);
  int next = 0;
  auto walk = [&](auto&& self, int v) -> void {
    if (t.child_of(v, Color::blue) != -1) self(self, t.child_of(v, Color::blue));
    label[v] = next++;
    if (t.child_of(v, Color::green) != -1)
      self(self, t.child_of(v, Color::green));
    if (t.child_of(v, Color::red) != -1) self(self, t.child_of(v, Color::red));
  };
  walk(walk, t.root);
  internal_check(next == t.size(), "admissible_order: tree not connected");
  return label;
}

/// Relabels nodes so ids coincide with the admissible ordering.
inline TricoloredTree canonicalized(const TricoloredTree& t) {
  const std::vector<int> label = admissible_order(t);
  TricoloredTree out;
  out.nodes.resize(t.size());
  out.root = label[t.root];
  for (int v = 0; v < t.size(); ++v) {
    const auto& src = t.nodes[v];
    auto& dst = out.nodes[label[v]];
    dst.parent = src.parent == -1 ? -1 : label[src.parent];
    dst.parent_color = src.parent_color;
    for (int c = 0; c < 3; ++c)
      dst.child[c] = src.child[c] == -1 ? -1 : label[src.child[c]];
  }
  return out;
}

/// Shape-and-color serialization, invariant under relabeling. Trees compare
/// equal iff their canonical keys match.
inline std::string canonical_key(const TricoloredTree& t) {
  std::string out;
  auto walk = [&](auto&& self, int v) -> void {
    for (int c = 0; c < 3; ++c)
      if (t.nodes[v].child[c] != -1) {
        out += "bgr"[c];
        self(self, t.nodes[v].child[c]);
      }
    out += '.';
  };
  walk(walk, t.root);
  return out;
}

inline bool tree_equal(const TricoloredTree& a, const TricoloredTree& b) {
  return canonical_key(a) == canonical_key(b);
}

namespace detail {

// Max admissible label of the red-green component of each node, for a
// canonically labeled tree.
inline std::vector<int> red_green_component_max(const TricoloredTree& t) {
  const int m = t.size();
  std::vector<int> comp(m);
  for (int v = 0; v < m; ++v) comp[v] = v;
  auto find = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  for (int v = 0; v < m; ++v)
    for (Color c : {Color::green, Color::red}) {
      const int ch = t.child_of(v, c);
      if (ch != -1) {
        const int a = find(v), b = find(ch);
        if (a != b) comp[a] = b;
      }
    }
  std::vector<int> cmax(m, -1);
  for (int v = 0; v < m; ++v) cmax[find(v)] = std::max(cmax[find(v)], v);
  std::vector<int> out(m);
  for (int v = 0; v < m; ++v) out[v] = cmax[find(v)];
  return out;
}

inline std::vector<int> subtree_max(const TricoloredTree& t) {
  std::vector<int> out(t.size());
  auto walk = [&](auto&& self, int v) -> int {
    int best = v;
    for (int c = 0; c < 3; ++c)
      if (t.nodes[v].child[c] != -1)
        best = std::max(best, self(self, t.nodes[v].child[c]));
    return out[v] = best;
  };
  walk(walk, t.root);
  return out;
}

inline TransferSystem chain_system_from_pi(const LatticePtr& chain,
                                           const std::vector<int>& pi) {
  BitRel rel(static_cast<int>(pi.size()));
  for (int i = 0; i < static_cast<int>(pi.size()); ++i)
    for (int j = i; j <= pi[i]; ++j) rel.set(i, j);
  return TransferSystem(chain, std::move(rel));
}

}  // namespace detail

/// The composition-closed pair on the chain [m-1] encoded by a tricolored
/// tree: pi_{R'}(x) is the maximum of x's red-green component, pi_R(x) is x
/// itself or the rightmost descendant of x's green child.
inline StructurePair tree_to_pair(const TricoloredTree& tree) {
  const TricoloredTree t = canonicalized(tree);
  const int m = t.size();
  const std::vector<int> comp_max = detail::red_green_component_max(t);
  const std::vector<int> sub_max = detail::subtree_max(t);

  std::vector<int> pi(m), pi_prime(m);
  for (int v = 0; v < m; ++v) {
    const int g = t.child_of(v, Color::green);
    pi[v] = g == -1 ? v : sub_max[g];
    pi_prime[v] = comp_max[v];
  }

  const LatticePtr chain = FiniteLattice::chain(m - 1);
  return StructurePair(detail::chain_system_from_pi(chain, pi),
                       detail::chain_system_from_pi(chain, pi_prime));
}

/// Inverse of tree_to_pair on composition-closed pairs. Green children are
/// the minimal R-related strict successors within a red-green component,
/// red edges are recovered by an ascending scan, and every remaining forest
/// root hangs blue under pi_{R'}(x) + 1, except the global root.
inline TricoloredTree pair_to_tree(const StructurePair& p) {
  if (!is_cc_pair(p))
    throw NotCompositionClosed(
        "pair_to_tree requires a composition closed pair");
  const std::vector<int> pi = pi_map(p.R());
  const std::vector<int> pi_prime = pi_map(p.R_prime());
  const int m = static_cast<int>(pi.size());

  TricoloredTree t;
  t.nodes.resize(m);
  auto attach = [&](int parent, int child, Color c) {
    internal_check(t.nodes[child].parent == -1,
                   "pair_to_tree: node acquired two parents");
    internal_check(t.child_of(parent, c) == -1,
                   "pair_to_tree: duplicate child color");
    t.nodes[child].parent = parent;
    t.nodes[child].parent_color = c;
    t.nodes[parent].child[static_cast<int>(c)] = child;
  };

  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y <= pi[x]; ++y)
      if (pi_prime[y] == pi_prime[x]) {
        attach(x, y, Color::green);
        break;
      }

  for (int x = 0; x < m; ++x)
    for (int y = pi[x] + 1; y < m; ++y)
      if (pi_prime[y] == pi_prime[x]) {
        // minimal y in x's component with not(x R y); it is x's red child
        // unless an earlier node already claimed it
        if (t.nodes[y].parent == -1) attach(x, y, Color::red);
        break;
      }

  int global_root = -1;
  for (int x = 0; x < m; ++x) {
    if (t.nodes[x].parent != -1) continue;
    if (pi_prime[x] == pi_prime[m - 1]) {
      internal_check(global_root == -1, "pair_to_tree: two global roots");
      global_root = x;
      continue;
    }
    const int blue_parent = pi_prime[x] + 1;
    internal_check(blue_parent < m, "pair_to_tree: blue parent out of range");
    attach(blue_parent, x, Color::blue);
  }
  internal_check(global_root != -1, "pair_to_tree: no global root");
  t.root = global_root;
  const std::vector<int> labels = admissible_order(t);
  for (int v = 0; v < m; ++v)
    internal_check(labels[v] == v, "pair_to_tree: non-admissible labeling");
  return t;
}

/// A tree encodes a model structure iff no red edge
/// hangs below a non-red edge, i.e. every red edge's source is reached from
/// the root by red edges alone.
inline bool is_model_tree(const TricoloredTree& t) {
  std::vector<bool> on_red_spine(t.size(), false);
  for (int v = t.root; v != -1; v = t.child_of(v, Color::red))
    on_red_spine[v] = true;
  for (int v = 0; v < t.size(); ++v)
    if (t.child_of(v, Color::red) != -1 && !on_red_spine[v]) return false;
  return true;
}

/// Recolors every blue edge green and vice versa. An involution; on model
/// trees it preserves model status and the weak-equivalence classes.
inline TricoloredTree blue_green_swap(const TricoloredTree& t) {
  TricoloredTree out = t;
  for (auto& node : out.nodes) {
    std::swap(node.child[static_cast<int>(Color::blue)],
              node.child[static_cast<int>(Color::green)]);
    if (node.parent != -1) {
      if (node.parent_color == Color::blue)
        node.parent_color = Color::green;
      else if (node.parent_color == Color::green)
        node.parent_color = Color::blue;
    }
  }
  return out;
}

/// The blue-green components of a model tree, as the interval partition of
/// {0..m-1} formed by the weak-equivalence classes.
inline std::vector<std::vector<int>> weak_classes(const TricoloredTree& tree) {
  if (!is_model_tree(tree))
    throw NotAModelTree("weak_classes requires a model tree");
  const TricoloredTree t = canonicalized(tree);
  const int m = t.size();
  std::vector<int> comp(m);
  for (int v = 0; v < m; ++v) comp[v] = v;
  auto find = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  for (int v = 0; v < m; ++v)
    for (Color c : {Color::blue, Color::green}) {
      const int ch = t.child_of(v, c);
      if (ch != -1) {
        const int a = find(v), b = find(ch);
        if (a != b) comp[a] = b;
      }
    }
  std::vector<std::vector<int>> classes;
  for (int v = 0; v < m; ++v)
    if (!classes.empty() && find(v) == find(classes.back().front()))
      classes.back().push_back(v);
    else
      classes.push_back({v});
  int distinct = 0;
  for (int v = 0; v < m; ++v)
    if (find(v) == v) ++distinct;
  internal_check(static_cast<int>(classes.size()) == distinct,
                 "weak_classes: a component is not an interval");
  return classes;
}

/// All tricolored trees with m nodes in canonical-key order; counted by
/// 1/(2m+1) * binom(3m, m).
inline std::vector<TricoloredTree> enumerate_trees(int m) {
  if (m < 1) throw Error("enumerate_trees requires at least one node");
  // cache[k] holds canonically labeled k-node trees
  std::vector<std::vector<TricoloredTree>> cache(m + 1);
  auto append_shifted = [](TricoloredTree& dst, const TricoloredTree& sub,
                           int offset) {
    for (int v = 0; v < sub.size(); ++v) {
      const auto& src = sub.nodes[v];
      auto& node = dst.nodes[offset + v];
      node.parent = src.parent == -1 ? -1 : src.parent + offset;
      node.parent_color = src.parent_color;
      for (int c = 0; c < 3; ++c)
        node.child[c] = src.child[c] == -1 ? -1 : src.child[c] + offset;
    }
  };
  for (int k = 1; k <= m; ++k) {
    for (int a = 0; a < k; ++a)
      for (int b = 0; a + b < k; ++b) {
        const int c = k - 1 - a - b;
        const int root = a;
        auto with_red = [&](const TricoloredTree& partial) {
          if (c == 0) {
            cache[k].push_back(partial);
            return;
          }
          for (const TricoloredTree& red : cache[c]) {
            TricoloredTree t = partial;
            append_shifted(t, red, a + 1 + b);
            t.nodes[root].child[static_cast<int>(Color::red)] =
                red.root + a + 1 + b;
            t.nodes[red.root + a + 1 + b].parent = root;
            t.nodes[red.root + a + 1 + b].parent_color = Color::red;
            cache[k].push_back(std::move(t));
          }
        };
        auto with_green = [&](const TricoloredTree& partial) {
          if (b == 0) {
            with_red(partial);
            return;
          }
          for (const TricoloredTree& green : cache[b]) {
            TricoloredTree t = partial;
            append_shifted(t, green, a + 1);
            t.nodes[root].child[static_cast<int>(Color::green)] =
                green.root + a + 1;
            t.nodes[green.root + a + 1].parent = root;
            t.nodes[green.root + a + 1].parent_color = Color::green;
            with_red(t);
          }
        };
        TricoloredTree base;
        base.nodes.resize(k);
        base.root = root;
        if (a == 0) {
          with_green(base);
        } else {
          for (const TricoloredTree& blue : cache[a]) {
            TricoloredTree t = base;
            append_shifted(t, blue, 0);
            t.nodes[root].child[static_cast<int>(Color::blue)] = blue.root;
            t.nodes[blue.root].parent = root;
            t.nodes[blue.root].parent_color = Color::blue;
            with_green(t);
          }
        }
      }
  }
  std::vector<TricoloredTree> out = std::move(cache[m]);
  std::sort(out.begin(), out.end(),
            [](const TricoloredTree& a, const TricoloredTree& b) {
              return canonical_key(a) < canonical_key(b);
            });
  return out;
}

}  // namespace tsys
