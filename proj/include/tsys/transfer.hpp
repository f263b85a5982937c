#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "tsys/bitrel.hpp"
#include "tsys/errors.hpp"
#include "tsys/lattice.hpp"

namespace tsys {

/// True iff `rel` is a transfer system on L: a reflexive transitive
/// refinement of the lattice order that is closed under restriction,
/// i.e. x rel y and z <= y imply (x ∧ z) rel z.
inline bool is_transfer_system(const FiniteLattice& L, const BitRel& rel) {
  if (rel.size() != L.size())
    throw DimensionMismatch("relation size does not match lattice size");
  if (!rel.subset_of(L.order())) return false;
  if (!rel.is_reflexive() || !rel.is_transitive()) return false;
  const int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!rel.at(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (L.le(z, y) && !rel.at(L.meet(x, z), z)) return false;
    }
  return true;
}

namespace detail {

// Smallest transfer system containing `rel`, as a fixpoint alternating
// transitive closure and restriction closure. Terminates because the
// relation only grows inside a finite set.
inline void transfer_close(const FiniteLattice& L, BitRel& rel) {
  const int n = L.size();
  for (int i = 0; i < n; ++i) rel.set(i, i);
  bool changed = true;
  while (changed) {
    changed = rel.close_transitively();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!rel.at(x, y)) continue;
        for (int z = 0; z < n; ++z) {
          if (!L.le(z, y)) continue;
          const int m = L.meet(x, z);
          if (!rel.at(m, z)) {
            rel.set(m, z);
            changed = true;
          }
        }
      }
  }
}

}  // namespace detail

/// A transfer system: the right class R of the unique weak factorization
/// system it determines on its ambient lattice. Identities are included.
class TransferSystem {
 public:
  TransferSystem(LatticePtr lattice, BitRel rel)
      : lattice_(std::move(lattice)), rel_(std::move(rel)) {
    if (!is_transfer_system(*lattice_, rel_))
      throw Error("relation is not a transfer system on the given lattice");
  }

  static TransferSystem trivial(LatticePtr lattice) {
    BitRel r = BitRel::identity(lattice->size());
    return TransferSystem(std::move(lattice), std::move(r));
  }

  static TransferSystem maximal(LatticePtr lattice) {
    BitRel r = lattice->order();
    return TransferSystem(std::move(lattice), std::move(r));
  }

  const FiniteLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const BitRel& rel() const { return rel_; }
  bool contains(int x, int y) const { return rel_.at(x, y); }

  /// Non-identity related pairs in lexicographic order.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < rel_.size(); ++x)
      for (int y = 0; y < rel_.size(); ++y)
        if (x != y && rel_.at(x, y)) out.emplace_back(x, y);
    return out;
  }

  friend bool operator==(const TransferSystem& a, const TransferSystem& b) {
    return a.lattice() == b.lattice() && a.rel_ == b.rel_;
  }

  /// Canonical row-major bit-string order of the underlying relation.
  static int compare(const TransferSystem& a, const TransferSystem& b) {
    return BitRel::compare(a.rel_, b.rel_);
  }

 private:
  LatticePtr lattice_;
  BitRel rel_;
};

/// A class of morphisms of the lattice-as-category: a set of comparable
/// pairs containing all identities. Carrier for left classes and weak
/// equivalences; not necessarily a transfer system.
struct MorphismClass {
  LatticePtr lattice;
  BitRel rel;
  bool contains(int x, int y) const { return rel.at(x, y); }
};

/// Smallest transfer system containing `rel`; requires rel to refine the
/// lattice order.
inline TransferSystem transfer_closure(LatticePtr lattice, BitRel rel) {
  if (rel.size() != lattice->size())
    throw DimensionMismatch("relation size does not match lattice size");
  if (!rel.subset_of(lattice->order()))
    throw Error("transfer_closure: relation must refine the lattice order");
  detail::transfer_close(*lattice, rel);
  return TransferSystem(std::move(lattice), std::move(rel));
}

namespace detail {

// Left lifting complement of rel in the poset-lifting sense:
// (x, y) lifts against every (a, b) in rel, which for posets reduces to
// x <= a and y <= b implying y <= a.
inline BitRel lifting_left(const FiniteLattice& L, const BitRel& rel) {
  const int n = L.size();
  BitRel lc(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!L.le(x, y)) continue;
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) {
        if (!L.le(x, a)) continue;
        for (int b = 0; b < n; ++b)
          if (rel.at(a, b) && L.le(y, b) && !L.le(y, a)) {
            ok = false;
            break;
          }
      }
      if (ok) lc.set(x, y);
    }
  return lc;
}

}  // namespace detail

/// The left class of the weak factorization system determined by R.
inline MorphismClass left_class(const TransferSystem& R) {
  return {R.lattice_ptr(), detail::lifting_left(R.lattice(), R.rel())};
}

/// The unique z with x L z R y, for x <= y. Existence and uniqueness are
/// forced by the weak factorization system axioms; a miss signals a broken
/// TransferSystem invariant.
inline int factorize(const TransferSystem& R, int x, int y) {
  const FiniteLattice& L = R.lattice();
  if (!L.le(x, y)) throw Error("factorize requires x <= y");
  const BitRel lc = detail::lifting_left(L, R.rel());
  for (int z = 0; z < L.size(); ++z)
    if (lc.at(x, z) && R.contains(z, y)) return z;
  throw NoFactorization("no factorization of (" + std::to_string(x) + ", " +
                        std::to_string(y) + ")");
}

/// Weak equivalences W = R ∘ L' of the premodel structure (R, R').
inline MorphismClass weak_equivalences(const TransferSystem& R,
                                       const TransferSystem& R_prime) {
  if (!(R.lattice() == R_prime.lattice()))
    throw DimensionMismatch("weak_equivalences: ambient lattices differ");
  if (!R.rel().subset_of(R_prime.rel()))
    throw NotAPremodelPair("weak_equivalences requires R <= R'");
  const BitRel lp = detail::lifting_left(R.lattice(), R_prime.rel());
  return {R.lattice_ptr(), compose(R.rel(), lp)};
}

/// Complete, duplicate-free list of all transfer systems on L, sorted by
/// the canonical row-major bit-string order.
///
/// DFS over the non-identity comparable pairs: each pair is either excluded
/// (added to a forbidden set) or included followed by transfer closure; a
/// branch dies as soon as the closure meets the forbidden set. Every leaf
/// is a distinct transfer system.
inline std::vector<TransferSystem> enumerate_transfer_systems(
    const LatticePtr& lattice) {
  const FiniteLattice& L = *lattice;
  const int n = L.size();
  std::vector<std::pair<int, int>> slots;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && L.le(x, y)) slots.emplace_back(x, y);

  std::vector<TransferSystem> out;
  BitRel forbidden(n);
  auto rec = [&](auto&& self, const BitRel& cur, std::size_t t) -> void {
    if (t == slots.size()) {
      out.emplace_back(lattice, cur);
      return;
    }
    const auto [x, y] = slots[t];
    if (cur.at(x, y)) {
      self(self, cur, t + 1);
      return;
    }
    forbidden.set(x, y);
    self(self, cur, t + 1);
    forbidden.set(x, y, false);
    BitRel grown = cur;
    grown.set(x, y);
    detail::transfer_close(L, grown);
    if (!grown.intersects(forbidden)) self(self, grown, t + 1);
  };
  rec(rec, BitRel::identity(n), 0);

  std::sort(out.begin(), out.end(), [](const TransferSystem& a,
                                       const TransferSystem& b) {
    return TransferSystem::compare(a, b) < 0;
  });
  return out;
}

/// pi_R(i) = max{ j : i R j } on a chain. Inflationary and idempotent; its
/// nonempty fibers are the blocks of the associated noncrossing partition.
inline std::vector<int> pi_map(const TransferSystem& R) {
  if (!R.lattice().is_chain())
    throw NotAChain("pi_map requires a chain-ambient transfer system");
  const int n = R.lattice().size();
  std::vector<int> pi(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (R.contains(i, j)) pi[i] = j;
  return pi;
}

/// theta_R(i) = max{ j < i : j R i } + 1 on a chain, with max(∅) = -1.
/// Equivalently the least y with y L i.
inline std::vector<int> theta_map(const TransferSystem& R) {
  if (!R.lattice().is_chain())
    throw NotAChain("theta_map requires a chain-ambient transfer system");
  const int n = R.lattice().size();
  std::vector<int> theta(n);
  for (int i = 0; i < n; ++i) {
    int best = -1;
    for (int j = 0; j < i; ++j)
      if (R.contains(j, i)) best = j;
    theta[i] = best + 1;
  }
  return theta;
}

}  // namespace tsys
