#pragma once

#include <cstddef>
#include <thread>
#include <utility>
#include <vector>

#include "tsys/bitrel.hpp"
#include "tsys/errors.hpp"
#include "tsys/lattice.hpp"
#include "tsys/poset.hpp"
#include "tsys/transfer.hpp"

namespace tsys {

/// Classification of an ordered pair of transfer systems R <= R'.
/// model implies composition_closed implies premodel.
enum class PairKind { premodel, composition_closed, model, compatible };

/// The three orderings carried by the set of transfer systems on a lattice:
/// inclusion <=, the composition-closed refinement, and the model refinement.
enum class OrderKind { inclusion, cc, model };

/// An ordered pair (R, R') with R <= R': a premodel structure.
class StructurePair {
 public:
  StructurePair(TransferSystem r, TransferSystem r_prime)
      : r_(std::move(r)), r_prime_(std::move(r_prime)) {
    if (!(r_.lattice() == r_prime_.lattice()))
      throw DimensionMismatch("StructurePair: ambient lattices differ");
    if (!r_.rel().subset_of(r_prime_.rel()))
      throw NotAPremodelPair("StructurePair requires R <= R'");
  }

  const TransferSystem& R() const { return r_; }
  const TransferSystem& R_prime() const { return r_prime_; }
  const FiniteLattice& lattice() const { return r_.lattice(); }

 private:
  TransferSystem r_;
  TransferSystem r_prime_;
};

namespace detail {

// Composition closure criterion: L' ∘ R ⊆ R ∘ L', with L' the left class
// of R' precomputed by the caller.
inline bool cc_holds(const BitRel& rel_r, const BitRel& left_r_prime) {
  return compose(left_r_prime, rel_r).subset_of(compose(rel_r, left_r_prime));
}

// Two-out-of-three for W over all composable triples x <= y <= z.
inline bool two_out_of_three(const FiniteLattice& L, const BitRel& w) {
  const int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!L.le(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!L.le(y, z)) continue;
        const int have =
            int(w.at(x, y)) + int(w.at(y, z)) + int(w.at(x, z));
        if (have == 2) return false;
      }
    }
  return true;
}

inline bool compatible_holds(const FiniteLattice& L, const BitRel& rel_r,
                             const BitRel& rel_r_prime) {
  const int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!L.le(y, x) || !rel_r.at(y, x)) continue;
      for (int z = 0; z < n; ++z) {
        if (!L.le(z, x)) continue;
        if (rel_r_prime.at(L.meet(y, z), y) && !rel_r_prime.at(z, x))
          return false;
      }
    }
  return true;
}

// Runs fn(i) for i in [0, m) split across threads. Cells are independent
// and written into pre-sized storage, so the result is schedule-independent.
template <typename Fn>
inline void parallel_rows(int m, Fn&& fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  const int workers =
      m >= 64 ? static_cast<int>(hw ? (hw > 8 ? 8 : hw) : 1) : 1;
  if (workers <= 1) {
    for (int i = 0; i < m; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < m; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

// Relation matrix over an enumerated family of transfer systems; edge (i, j)
// iff systems[i] <= systems[j] and the kind's pair predicate holds.
inline BitRel pair_grid(const std::vector<TransferSystem>& systems,
                        PairKind kind) {
  const int m = static_cast<int>(systems.size());
  internal_check(m > 0, "pair_grid needs a nonempty enumeration");
  const FiniteLattice& L = systems.front().lattice();

  std::vector<BitRel> lefts;
  if (kind == PairKind::composition_closed || kind == PairKind::model) {
    lefts.resize(m);
    parallel_rows(m, [&](int j) {
      lefts[j] = lifting_left(L, systems[j].rel());
    });
  }

  BitRel grid(m);
  parallel_rows(m, [&](int i) {
    for (int j = 0; j < m; ++j) {
      if (!systems[i].rel().subset_of(systems[j].rel())) continue;
      bool edge = true;
      switch (kind) {
        case PairKind::premodel:
          break;
        case PairKind::composition_closed:
          edge = cc_holds(systems[i].rel(), lefts[j]);
          break;
        case PairKind::model:
          edge = two_out_of_three(L, compose(systems[i].rel(), lefts[j]));
          break;
        case PairKind::compatible:
          edge = compatible_holds(L, systems[i].rel(), systems[j].rel());
          break;
      }
      if (edge) grid.set(i, j);
    }
  });
  return grid;
}

}  // namespace detail

/// True iff the weak equivalences W = R ∘ L' are closed under composition;
/// equivalently L' ∘ R ⊆ R ∘ L'.
inline bool is_cc_pair(const StructurePair& p) {
  const BitRel lp =
      detail::lifting_left(p.lattice(), p.R_prime().rel());
  return detail::cc_holds(p.R().rel(), lp);
}

/// True iff W satisfies two-out-of-three on every composable triple.
inline bool is_model_pair(const StructurePair& p) {
  const MorphismClass w = weak_equivalences(p.R(), p.R_prime());
  return detail::two_out_of_three(p.lattice(), w.rel);
}

/// The coinduction-derived compatibility condition: for all x and all
/// y, z <= x, if y R x and (y ∧ z) R' y then z R' x.
inline bool is_compatible_pair(const StructurePair& p) {
  return detail::compatible_holds(p.lattice(), p.R().rel(),
                                  p.R_prime().rel());
}

inline bool pair_has_kind(const StructurePair& p, PairKind kind) {
  switch (kind) {
    case PairKind::premodel:
      return true;
    case PairKind::composition_closed:
      return is_cc_pair(p);
    case PairKind::model:
      return is_model_pair(p);
    case PairKind::compatible:
      return is_compatible_pair(p);
  }
  return false;
}

/// The chosen ordering on an enumerated family of transfer systems, indexed
/// by canonical enumeration order. The result is checked to be a partial
/// order; transitivity is what makes the refinements orders at all.
inline PosetRelation order_poset(const std::vector<TransferSystem>& systems,
                                 OrderKind kind) {
  PairKind pk = PairKind::premodel;
  if (kind == OrderKind::cc) pk = PairKind::composition_closed;
  if (kind == OrderKind::model) pk = PairKind::model;
  BitRel grid = detail::pair_grid(systems, pk);
  internal_check(grid.is_reflexive(), "order_poset: relation not reflexive");
  internal_check(grid.is_antisymmetric(),
                 "order_poset: relation not antisymmetric");
  internal_check(grid.is_transitive(), "order_poset: relation not transitive");
  return PosetRelation(std::move(grid));
}

inline PosetRelation order_poset(const LatticePtr& lattice, OrderKind kind) {
  return order_poset(enumerate_transfer_systems(lattice), kind);
}

/// All ordered pairs (R, R') with R <= R' passing the kind's predicate, in
/// lexicographic order of canonical indices.
inline std::vector<StructurePair> enumerate_structures(
    const std::vector<TransferSystem>& systems, PairKind kind) {
  const BitRel grid = detail::pair_grid(systems, kind);
  std::vector<StructurePair> out;
  for (int i = 0; i < grid.size(); ++i)
    for (int j = 0; j < grid.size(); ++j)
      if (grid.at(i, j)) out.emplace_back(systems[i], systems[j]);
  return out;
}

inline std::vector<StructurePair> enumerate_structures(
    const LatticePtr& lattice, PairKind kind) {
  return enumerate_structures(enumerate_transfer_systems(lattice), kind);
}

/// Least upper bound of two transfer systems in the composition-closed
/// refinement order: the intersection of all their common upper bounds
/// drawn from the full enumeration.
inline TransferSystem cc_join(const std::vector<TransferSystem>& systems,
                              const TransferSystem& a,
                              const TransferSystem& b) {
  internal_check(!systems.empty(), "cc_join needs the full enumeration");
  const FiniteLattice& L = a.lattice();
  if (!(L == b.lattice()))
    throw DimensionMismatch("cc_join: ambient lattices differ");

  auto is_upper = [&](const TransferSystem& s, const BitRel& left_s) {
    return a.rel().subset_of(s.rel()) && b.rel().subset_of(s.rel()) &&
           detail::cc_holds(a.rel(), left_s) &&
           detail::cc_holds(b.rel(), left_s);
  };

  BitRel acc = L.order();
  bool found = false;
  for (const TransferSystem& s : systems) {
    const BitRel left_s = detail::lifting_left(L, s.rel());
    if (is_upper(s, left_s)) {
      acc &= s.rel();
      found = true;
    }
  }
  internal_check(found, "cc_join: no upper bound found (maximal missing?)");

  TransferSystem join(a.lattice_ptr(), std::move(acc));
  const BitRel left_join = detail::lifting_left(L, join.rel());
  internal_check(is_upper(join, left_join),
                 "cc_join: intersection is not an upper bound");
  bool in_set = false;
  for (const TransferSystem& s : systems)
    if (s.rel() == join.rel()) {
      in_set = true;
      break;
    }
  internal_check(in_set, "cc_join: result not among enumerated systems");
  return join;
}

inline TransferSystem cc_join(const TransferSystem& a,
                              const TransferSystem& b) {
  return cc_join(enumerate_transfer_systems(a.lattice_ptr()), a, b);
}

}  // namespace tsys
