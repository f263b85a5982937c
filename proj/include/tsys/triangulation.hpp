#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "tsys/errors.hpp"
#include "tsys/trees.hpp"

namespace tsys {

/// A stacked triangulation, stored as insertion history rather than
/// geometry. Internal vertices are numbered in insertion order; vertex k
/// subdivides the face whose corners are insertions[k]. Vertex 0 always
/// subdivides the outer triangle, whose corners carry the three colors.
struct StackedTriangulation {
  static constexpr int corner_red = -1;
  static constexpr int corner_blue = -2;
  static constexpr int corner_green = -3;

  std::vector<std::array<int, 3>> insertions;

  int internal_count() const { return static_cast<int>(insertions.size()); }
  friend bool operator==(const StackedTriangulation&,
                         const StackedTriangulation&) = default;
};

namespace detail {

struct TriFace {
  std::array<int, 3> v;
  std::array<Color, 3> col;  // color each corner presents into this face
};

inline std::array<int, 3> face_key(std::array<int, 3> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Replays an insertion history, tracking faces, presented corner colors,
// derived edge colors and the induced tree structure.
struct TriReplay {
  std::vector<TriFace> face_of;                 // face split by vertex k
  std::vector<std::array<Color, 3>> edge_color; // color of edge k--face.v[i]
  std::vector<int> parent;                      // deepest internal corner
  std::vector<Color> parent_color;
  std::vector<int> depth;
};

inline TriReplay replay(const StackedTriangulation& s) {
  const int m = s.internal_count();
  if (m < 1)
    throw InvalidTriangulation("a stacked triangulation has at least the base vertex");
  const std::array<int, 3> outer = {StackedTriangulation::corner_red,
                                    StackedTriangulation::corner_blue,
                                    StackedTriangulation::corner_green};
  if (face_key(s.insertions[0]) != face_key(outer))
    throw InvalidTriangulation("vertex 0 must subdivide the outer triangle");

  std::map<std::array<int, 3>, TriFace> faces;
  faces[face_key(outer)] =
      TriFace{outer, {Color::red, Color::blue, Color::green}};

  TriReplay r;
  r.face_of.resize(m);
  r.edge_color.resize(m);
  r.parent.assign(m, -1);
  r.parent_color.assign(m, Color::red);
  r.depth.assign(m, 0);

  for (int k = 0; k < m; ++k) {
    const auto it = faces.find(face_key(s.insertions[k]));
    if (it == faces.end())
      throw InvalidTriangulation("insertion " + std::to_string(k) +
                                 " names a face that does not exist");
    const TriFace f = it->second;
    faces.erase(it);
    r.face_of[k] = f;

    int deepest = -1;
    for (int i = 0; i < 3; ++i) {
      r.edge_color[k][i] = f.col[i];
      const int c = f.v[i];
      if (c >= 0 && (deepest == -1 || r.depth[c] > r.depth[deepest]))
        deepest = c;
    }
    if (deepest >= 0) {
      r.parent[k] = deepest;
      r.depth[k] = r.depth[deepest] + 1;
      for (int i = 0; i < 3; ++i)
        if (f.v[i] == deepest) r.parent_color[k] = f.col[i];
    } else if (k != 0) {
      throw InvalidTriangulation("only the base vertex splits the outer face");
    }

    for (int omit = 0; omit < 3; ++omit) {
      const int i = (omit + 1) % 3, j = (omit + 2) % 3;
      TriFace nf{{f.v[i], f.v[j], k}, {f.col[i], f.col[j], f.col[omit]}};
      faces[face_key(nf.v)] = nf;
    }
  }
  return r;
}

}  // namespace detail

/// Colored edges (vertex, other endpoint, color) added over the replay;
/// endpoints < 0 are the outer corners.
inline std::vector<std::tuple<int, int, Color>> triangulation_edges(
    const StackedTriangulation& s) {
  const detail::TriReplay r = detail::replay(s);
  std::vector<std::tuple<int, int, Color>> out;
  for (int k = 0; k < s.internal_count(); ++k)
    for (int i = 0; i < 3; ++i)
      out.emplace_back(k, r.face_of[k].v[i], r.edge_color[k][i]);
  return out;
}

/// The tricolored tree on internal vertices: each vertex attaches to the
/// deepest internal corner of the face it subdivides, with the color that
/// corner presents there.
inline TricoloredTree triangulation_to_tree(const StackedTriangulation& s) {
  const detail::TriReplay r = detail::replay(s);
  const int m = s.internal_count();
  TricoloredTree t;
  t.nodes.resize(m);
  t.root = 0;
  for (int k = 1; k < m; ++k) {
    const int p = r.parent[k];
    const Color c = r.parent_color[k];
    internal_check(p >= 0, "triangulation_to_tree: missing parent");
    internal_check(t.child_of(p, c) == -1,
                   "triangulation_to_tree: duplicate child color");
    t.nodes[k].parent = p;
    t.nodes[k].parent_color = c;
    t.nodes[p].child[static_cast<int>(c)] = k;
  }
  return t;
}

/// Rebuilds a stacked triangulation realizing the tree, replaying
/// insertions parent-before-child. The face a node must subdivide, the one
/// owned by its parent and presenting the edge color there, is unique at
/// every step, so the replay is deterministic.
inline StackedTriangulation tree_to_triangulation(const TricoloredTree& tree) {
  const int m = tree.size();
  std::vector<int> order;
  order.reserve(m);
  auto walk = [&](auto&& self, int v) -> void {
    order.push_back(v);
    for (int c = 0; c < 3; ++c)
      if (tree.nodes[v].child[c] != -1) self(self, tree.nodes[v].child[c]);
  };
  walk(walk, tree.root);
  internal_check(static_cast<int>(order.size()) == m,
                 "tree_to_triangulation: disconnected tree");

  StackedTriangulation s;
  std::vector<int> tri_id(m, -1);
  // owned[(vertex, color)] = the face it would hand to a child of that color
  std::map<std::pair<int, int>, detail::TriFace> owned;
  auto open_sectors = [&](int id, const detail::TriFace& f) {
    for (int omit = 0; omit < 3; ++omit) {
      const int i = (omit + 1) % 3, j = (omit + 2) % 3;
      detail::TriFace nf{{f.v[i], f.v[j], id},
                         {f.col[i], f.col[j], f.col[omit]}};
      owned[{id, static_cast<int>(f.col[omit])}] = nf;
    }
  };

  for (int step = 0; step < m; ++step) {
    const int v = order[step];
    tri_id[v] = step;
    if (v == tree.root) {
      const detail::TriFace outer{{StackedTriangulation::corner_red,
                                   StackedTriangulation::corner_blue,
                                   StackedTriangulation::corner_green},
                                  {Color::red, Color::blue, Color::green}};
      s.insertions.push_back(outer.v);
      open_sectors(step, outer);
    } else {
      const int p = tri_id[tree.nodes[v].parent];
      const int c = static_cast<int>(tree.nodes[v].parent_color);
      const auto it = owned.find({p, c});
      internal_check(it != owned.end(),
                     "tree_to_triangulation: parent sector already used");
      const detail::TriFace f = it->second;
      owned.erase(it);
      s.insertions.push_back(f.v);
      open_sectors(step, f);
    }
  }
  return s;
}

}  // namespace tsys
