#pragma once

#include <cstdint>
#include <vector>

#include "tsys/bitrel.hpp"
#include "tsys/errors.hpp"

namespace tsys {

/// A validated partial order on {0, ..., size-1}.
class PosetRelation {
 public:
  explicit PosetRelation(BitRel leq) : leq_(std::move(leq)) {
    if (!leq_.is_reflexive())
      throw NotAPartialOrder("relation is not reflexive");
    if (!leq_.is_antisymmetric())
      throw NotAPartialOrder("relation is not antisymmetric");
    if (!leq_.is_transitive())
      throw NotAPartialOrder("relation is not transitive");
  }

  int size() const { return leq_.size(); }
  bool le(int a, int b) const { return leq_.at(a, b); }
  const BitRel& rel() const { return leq_; }

 private:
  BitRel leq_;
};

/// A comparable pair lo <= hi in some ambient poset.
struct Interval {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

namespace detail {

// z in `mask` whose row covers all of `mask`, or -1. `rows` maps each z to
// the set of elements above (or below) it.
inline int least_cover(const BitRel& rows, const std::vector<std::uint64_t>& mask) {
  const int n = rows.size();
  const int words = rows.row_words();
  for (int z = 0; z < n; ++z) {
    if (!((mask[z / 64] >> (z % 64)) & 1u)) continue;
    const std::uint64_t* rz = rows.row(z);
    bool covers = true;
    for (int k = 0; k < words; ++k)
      if (mask[k] & ~rz[k]) {
        covers = false;
        break;
      }
    if (covers) return z;
  }
  return -1;
}

inline std::vector<std::uint64_t> row_and(const BitRel& r, int x, int y) {
  std::vector<std::uint64_t> out(r.row_words());
  const std::uint64_t* rx = r.row(x);
  const std::uint64_t* ry = r.row(y);
  for (int k = 0; k < r.row_words(); ++k) out[k] = rx[k] & ry[k];
  return out;
}

}  // namespace detail

/// True iff every pair of elements has both a least upper bound and a
/// greatest lower bound in P.
inline bool is_lattice_poset(const PosetRelation& p) {
  const int n = p.size();
  const BitRel& up = p.rel();
  const BitRel down = transpose(up);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      if (detail::least_cover(up, detail::row_and(up, x, y)) < 0) return false;
      if (detail::least_cover(down, detail::row_and(down, x, y)) < 0)
        return false;
    }
  return true;
}

/// All pairs (lo, hi) with lo <= hi, in lexicographic order of (lo, hi).
inline std::vector<Interval> intervals(const PosetRelation& p) {
  std::vector<Interval> out;
  for (int lo = 0; lo < p.size(); ++lo)
    for (int hi = 0; hi < p.size(); ++hi)
      if (p.le(lo, hi)) out.push_back({lo, hi});
  return out;
}

}  // namespace tsys
