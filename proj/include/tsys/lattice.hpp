#pragma once

#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tsys/bitrel.hpp"
#include "tsys/errors.hpp"
#include "tsys/poset.hpp"

namespace tsys {

class FiniteLattice;
using LatticePtr = std::shared_ptr<const FiniteLattice>;

/// A finite lattice on elements {0, ..., size-1}: the order relation plus
/// total meet and join tables. Immutable after construction and freely
/// shareable across threads.
class FiniteLattice {
 public:
  /// The total order 0 < 1 < ... < n (n+1 elements); meet = min, join = max.
  static LatticePtr chain(int n) {
    if (n < 0) throw Error("chain: n must be nonnegative");
    BitRel leq(n + 1);
    for (int x = 0; x <= n; ++x)
      for (int y = x; y <= n; ++y) leq.set(x, y);
    return from_order(leq);
  }

  /// Builds a lattice from an arbitrary order relation. Throws
  /// NotAPartialOrder, or NotALattice naming the first pair without a meet
  /// or join.
  static LatticePtr from_order(const BitRel& leq) {
    PosetRelation p(leq);  // validates the order axioms
    const int n = p.size();
    if (n == 0) throw Error("lattice must have at least one element");
    const BitRel down = transpose(leq);
    std::vector<int> meet(static_cast<std::size_t>(n) * n);
    std::vector<int> join(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int glb = detail::least_cover(down, detail::row_and(down, x, y));
        if (glb < 0) throw NotALattice(x, y, "no greatest lower bound");
        const int lub = detail::least_cover(leq, detail::row_and(leq, x, y));
        if (lub < 0) throw NotALattice(x, y, "no least upper bound");
        meet[static_cast<std::size_t>(x) * n + y] = glb;
        join[static_cast<std::size_t>(x) * n + y] = lub;
      }
    int bottom = 0;
    int top = 0;
    for (int x = 1; x < n; ++x) {
      bottom = meet[static_cast<std::size_t>(bottom) * n + x];
      top = join[static_cast<std::size_t>(top) * n + x];
    }
    return LatticePtr(new FiniteLattice(leq, std::move(meet), std::move(join),
                                        bottom, top));
  }

  /// The Boolean lattice of subsets of an `atoms`-element set.
  static LatticePtr boolean(int atoms) {
    if (atoms < 0 || atoms > 20) throw Error("boolean: atom count out of range");
    const int n = 1 << atoms;
    BitRel leq(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if ((x & y) == x) leq.set(x, y);
    return from_order(leq);
  }

  /// The divisors of n ordered by divisibility.
  static LatticePtr divisors(int n) {
    if (n < 1) throw Error("divisors: n must be positive");
    std::vector<int> ds;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) ds.push_back(d);
    BitRel leq(static_cast<int>(ds.size()));
    for (std::size_t i = 0; i < ds.size(); ++i)
      for (std::size_t j = 0; j < ds.size(); ++j)
        if (ds[j] % ds[i] == 0) leq.set(static_cast<int>(i), static_cast<int>(j));
    return from_order(leq);
  }

  int size() const { return leq_.size(); }
  bool le(int x, int y) const { return leq_.at(x, y); }
  const BitRel& order() const { return leq_; }

  int meet(int x, int y) const {
    check_index(x);
    check_index(y);
    return meet_[static_cast<std::size_t>(x) * size() + y];
  }

  int join(int x, int y) const {
    check_index(x);
    check_index(y);
    return join_[static_cast<std::size_t>(x) * size() + y];
  }

  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool is_chain() const {
    for (int x = 0; x < size(); ++x)
      for (int y = x; y < size(); ++y)
        if (!le(x, y)) return false;
    return true;
  }

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.leq_ == b.leq_;
  }

 private:
  FiniteLattice(BitRel leq, std::vector<int> meet, std::vector<int> join,
                int bottom, int top)
      : leq_(std::move(leq)),
        meet_(std::move(meet)),
        join_(std::move(join)),
        bottom_(bottom),
        top_(top) {}

  void check_index(int x) const {
    if (x < 0 || x >= size())
      throw std::out_of_range("lattice element index " + std::to_string(x) +
                              " out of range [0, " + std::to_string(size()) +
                              ")");
  }

  BitRel leq_;
  std::vector<int> meet_;
  std::vector<int> join_;
  int bottom_;
  int top_;
};

}  // namespace tsys
