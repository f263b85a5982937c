#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "tsys/errors.hpp"
#include "tsys/lattice.hpp"
#include "tsys/transfer.hpp"

namespace tsys {

namespace detail {

// Block id per element, or throws NotAPartition.
inline std::vector<int> block_ids(int n,
                                  const std::vector<std::vector<int>>& blocks) {
  if (n < 0) throw NotAPartition("partition ground set must be {0..n}, n >= 0");
  std::vector<int> id(n + 1, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw NotAPartition("empty block");
    for (int e : blocks[b]) {
      if (e < 0 || e > n)
        throw NotAPartition("element " + std::to_string(e) +
                            " outside {0.." + std::to_string(n) + "}");
      if (id[e] != -1)
        throw NotAPartition("element " + std::to_string(e) +
                            " appears in two blocks");
      id[e] = static_cast<int>(b);
    }
  }
  for (int e = 0; e <= n; ++e)
    if (id[e] == -1)
      throw NotAPartition("element " + std::to_string(e) + " is uncovered");
  return id;
}

}  // namespace detail

/// True iff the given partition of {0..n} is noncrossing: there are no
/// a < b < c < d with a, c in one block and b, d in a different block.
inline bool is_noncrossing(int n, const std::vector<std::vector<int>>& blocks) {
  const std::vector<int> id = detail::block_ids(n, blocks);
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d)
          if (id[a] == id[c] && id[b] == id[d] && id[a] != id[b]) return false;
  return true;
}

/// A noncrossing partition of {0..n} in normal form: each block sorted,
/// blocks sorted by their minimum.
class NoncrossingPartition {
 public:
  NoncrossingPartition(int n, std::vector<std::vector<int>> blocks)
      : n_(n), blocks_(std::move(blocks)) {
    if (!is_noncrossing(n_, blocks_))
      throw CrossingPartition("partition has a crossing");
    for (auto& b : blocks_) std::sort(b.begin(), b.end());
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
  }

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  friend bool operator==(const NoncrossingPartition&,
                         const NoncrossingPartition&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

/// The noncrossing partition whose blocks are the nonempty fibers of pi_R.
inline NoncrossingPartition partition_of(const TransferSystem& R) {
  const std::vector<int> pi = pi_map(R);  // throws NotAChain off-chain
  std::map<int, std::vector<int>> fibers;
  for (int i = 0; i < static_cast<int>(pi.size()); ++i)
    fibers[pi[i]].push_back(i);
  std::vector<std::vector<int>> blocks;
  blocks.reserve(fibers.size());
  for (auto& [v, fiber] : fibers) blocks.push_back(std::move(fiber));
  return NoncrossingPartition(static_cast<int>(pi.size()) - 1,
                              std::move(blocks));
}

/// The unique transfer system with partition_of(result) == p:
/// i R j iff i <= j <= max(block(i)).
inline TransferSystem transfer_of(const NoncrossingPartition& p) {
  const int n = p.n();
  std::vector<int> block_max(n + 1);
  for (const auto& b : p.blocks())
    for (int e : b) block_max[e] = b.back();
  BitRel rel(n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= block_max[i]; ++j) rel.set(i, j);
  return TransferSystem(FiniteLattice::chain(n), std::move(rel));
}

/// The Kreweras (refinement) order on transfer systems of a chain, read
/// off as the composition identity pi_{R'} ∘ pi_R = pi_{R'}.
inline bool kreweras_leq(const TransferSystem& R,
                         const TransferSystem& R_prime) {
  if (!(R.lattice() == R_prime.lattice()))
    throw DimensionMismatch("kreweras_leq: ambient lattices differ");
  const std::vector<int> pi = pi_map(R);
  const std::vector<int> pi_prime = pi_map(R_prime);
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (pi_prime[pi[i]] != pi_prime[i]) return false;
  return true;
}

}  // namespace tsys
