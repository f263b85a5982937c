#pragma once

#include <array>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tsys/errors.hpp"
#include "tsys/lattice.hpp"
#include "tsys/noncrossing.hpp"
#include "tsys/structures.hpp"
#include "tsys/transfer.hpp"
#include "tsys/trees.hpp"
#include "tsys/triangulation.hpp"

namespace tsys {

using Json = nlohmann::ordered_json;

inline Json lattice_to_json(const FiniteLattice& L) {
  if (L.is_chain()) return Json{{"chain", L.size() - 1}};
  std::vector<std::vector<bool>> leq(L.size(), std::vector<bool>(L.size()));
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y) leq[x][y] = L.le(x, y);
  return Json{{"size", L.size()}, {"leq", leq}};
}

inline LatticePtr lattice_from_json(const Json& j) {
  if (!j.is_object()) throw Error("lattice JSON must be an object");
  if (j.contains("chain")) return FiniteLattice::chain(j.at("chain").get<int>());
  if (!j.contains("size") || !j.contains("leq"))
    throw Error("lattice JSON needs either \"chain\" or \"size\"+\"leq\"");
  const int n = j.at("size").get<int>();
  if (n < 1) throw Error("lattice size must be positive");
  const auto& rows = j.at("leq");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw Error("lattice \"leq\" must be an n x n boolean matrix");
  BitRel leq(n);
  for (int x = 0; x < n; ++x) {
    if (!rows[x].is_array() || static_cast<int>(rows[x].size()) != n)
      throw Error("lattice \"leq\" must be an n x n boolean matrix");
    for (int y = 0; y < n; ++y)
      if (rows[x][y].get<bool>()) leq.set(x, y);
  }
  return FiniteLattice::from_order(leq);
}

inline Json relation_pairs_json(const BitRel& rel) {
  Json out = Json::array();
  for (int x = 0; x < rel.size(); ++x)
    for (int y = 0; y < rel.size(); ++y)
      if (x != y && rel.at(x, y)) out.push_back(Json::array({x, y}));
  return out;
}

inline BitRel relation_from_pairs_json(int size, const Json& pairs) {
  if (!pairs.is_array()) throw Error("\"pairs\" must be an array of [x, y]");
  BitRel rel = BitRel::identity(size);
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2)
      throw Error("\"pairs\" entries must be two-element arrays");
    const int x = p[0].get<int>();
    const int y = p[1].get<int>();
    if (x < 0 || x >= size || y < 0 || y >= size)
      throw Error("pair (" + std::to_string(x) + ", " + std::to_string(y) +
                  ") is outside the lattice");
    rel.set(x, y);
  }
  return rel;
}

inline Json transfer_to_json(const TransferSystem& R) {
  return Json{{"lattice", lattice_to_json(R.lattice())},
              {"pairs", relation_pairs_json(R.rel())}};
}

inline TransferSystem transfer_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lattice") || !j.contains("pairs"))
    throw Error("transfer system JSON needs \"lattice\" and \"pairs\"");
  LatticePtr L = lattice_from_json(j.at("lattice"));
  BitRel rel = relation_from_pairs_json(L->size(), j.at("pairs"));
  return TransferSystem(std::move(L), std::move(rel));
}

inline Json pair_to_json(const StructurePair& p, bool with_flags = true) {
  Json out{{"lattice", lattice_to_json(p.lattice())},
           {"R", relation_pairs_json(p.R().rel())},
           {"R_prime", relation_pairs_json(p.R_prime().rel())}};
  if (with_flags)
    out["kind_flags"] = Json{{"cc", is_cc_pair(p)},
                             {"model", is_model_pair(p)},
                             {"compatible", is_compatible_pair(p)}};
  return out;
}

inline StructurePair pair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lattice") || !j.contains("R") ||
      !j.contains("R_prime"))
    throw Error("pair JSON needs \"lattice\", \"R\" and \"R_prime\"");
  LatticePtr L = lattice_from_json(j.at("lattice"));
  TransferSystem r(L, relation_from_pairs_json(L->size(), j.at("R")));
  TransferSystem rp(L, relation_from_pairs_json(L->size(), j.at("R_prime")));
  return StructurePair(std::move(r), std::move(rp));
}

inline Json partition_to_json(const NoncrossingPartition& p) {
  return Json{{"n", p.n()}, {"blocks", p.blocks()}};
}

inline NoncrossingPartition partition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("blocks"))
    throw Error("partition JSON needs \"n\" and \"blocks\"");
  return NoncrossingPartition(
      j.at("n").get<int>(),
      j.at("blocks").get<std::vector<std::vector<int>>>());
}

/// Trees serialize with canonical (admissible) node ids.
inline Json tree_to_json(const TricoloredTree& t) {
  const TricoloredTree c = canonicalized(t);
  Json edges = Json::array();
  for (const auto& [parent, child, color] : tree_edges(c))
    edges.push_back(Json::array({parent, child, color_name(color)}));
  return Json{{"m", c.size()}, {"edges", edges}};
}

inline TricoloredTree tree_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("edges"))
    throw Error("tree JSON needs \"m\" and \"edges\"");
  std::vector<std::tuple<int, int, Color>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3)
      throw Error("tree edges must be [parent, child, color]");
    const std::string name = e[2].get<std::string>();
    Color c;
    if (name == "blue")
      c = Color::blue;
    else if (name == "green")
      c = Color::green;
    else if (name == "red")
      c = Color::red;
    else
      throw Error("unknown edge color \"" + name + "\"");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>(), c);
  }
  return tree_from_edges(j.at("m").get<int>(), edges);
}

namespace detail {

inline Json triangulation_vertex_json(int v) {
  switch (v) {
    case StackedTriangulation::corner_red:
      return "X_red";
    case StackedTriangulation::corner_blue:
      return "X_blue";
    case StackedTriangulation::corner_green:
      return "X_green";
    default:
      return v;
  }
}

inline int triangulation_vertex_from_json(const Json& j) {
  if (j.is_number_integer()) {
    const int v = j.get<int>();
    if (v < 0) throw Error("internal triangulation vertices are nonnegative");
    return v;
  }
  const std::string name = j.get<std::string>();
  if (name == "X_red") return StackedTriangulation::corner_red;
  if (name == "X_blue") return StackedTriangulation::corner_blue;
  if (name == "X_green") return StackedTriangulation::corner_green;
  throw Error("unknown triangulation corner \"" + name + "\"");
}

}  // namespace detail

inline Json triangulation_to_json(const StackedTriangulation& s) {
  Json ins = Json::array();
  for (const auto& face : s.insertions)
    ins.push_back(Json::array({detail::triangulation_vertex_json(face[0]),
                               detail::triangulation_vertex_json(face[1]),
                               detail::triangulation_vertex_json(face[2])}));
  return Json{{"insertions", ins}};
}

inline StackedTriangulation triangulation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("insertions"))
    throw Error("triangulation JSON needs \"insertions\"");
  StackedTriangulation s;
  for (const auto& face : j.at("insertions")) {
    if (!face.is_array() || face.size() != 3)
      throw Error("triangulation insertions must be corner triples");
    s.insertions.push_back({detail::triangulation_vertex_from_json(face[0]),
                            detail::triangulation_vertex_from_json(face[1]),
                            detail::triangulation_vertex_from_json(face[2])});
  }
  detail::replay(s);  // validates
  return s;
}

}  // namespace tsys
