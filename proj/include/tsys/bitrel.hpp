#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "tsys/errors.hpp"

namespace tsys {

/// Square boolean relation on {0, ..., size-1}. Rows are packed into 64-bit
/// words so that closures, compositions and subset tests reduce to word ops.
class BitRel {
 public:
  BitRel() = default;
  explicit BitRel(int size)
      : size_(size),
        row_words_(size == 0 ? 1 : (size + 63) / 64),
        bits_(static_cast<std::size_t>(size) * row_words_, 0) {}

  static BitRel identity(int size) {
    BitRel r(size);
    for (int i = 0; i < size; ++i) r.set(i, i);
    return r;
  }

  int size() const { return size_; }
  int row_words() const { return row_words_; }

  bool at(int i, int j) const {
    return (bits_[idx(i, j / 64)] >> (j % 64)) & 1u;
  }

  void set(int i, int j, bool value = true) {
    std::uint64_t& w = bits_[idx(i, j / 64)];
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    if (value)
      w |= mask;
    else
      w &= ~mask;
  }

  const std::uint64_t* row(int i) const { return bits_.data() + idx(i, 0); }
  std::uint64_t* row(int i) { return bits_.data() + idx(i, 0); }

  int count() const {
    int c = 0;
    for (std::uint64_t w : bits_) c += std::popcount(w);
    return c;
  }

  bool subset_of(const BitRel& other) const {
    check_same_size(other);
    for (std::size_t k = 0; k < bits_.size(); ++k)
      if (bits_[k] & ~other.bits_[k]) return false;
    return true;
  }

  bool intersects(const BitRel& other) const {
    check_same_size(other);
    for (std::size_t k = 0; k < bits_.size(); ++k)
      if (bits_[k] & other.bits_[k]) return true;
    return false;
  }

  BitRel& operator&=(const BitRel& other) {
    check_same_size(other);
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] &= other.bits_[k];
    return *this;
  }

  BitRel& operator|=(const BitRel& other) {
    check_same_size(other);
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] |= other.bits_[k];
    return *this;
  }

  friend bool operator==(const BitRel& a, const BitRel& b) = default;

  bool is_reflexive() const {
    for (int i = 0; i < size_; ++i)
      if (!at(i, i)) return false;
    return true;
  }

  bool is_antisymmetric() const {
    for (int i = 0; i < size_; ++i)
      for (int j = i + 1; j < size_; ++j)
        if (at(i, j) && at(j, i)) return false;
    return true;
  }

  bool is_transitive() const {
    for (int i = 0; i < size_; ++i)
      for (int k = 0; k < size_; ++k)
        if (at(i, k))
          for (int j = 0; j < size_; ++j)
            if (at(k, j) && !at(i, j)) return false;
    return true;
  }

  /// Floyd-Warshall over rows. Returns true when the relation grew.
  bool close_transitively() {
    const int before = count();
    for (int k = 0; k < size_; ++k)
      for (int i = 0; i < size_; ++i)
        if (at(i, k)) or_row(i, k);
    return count() != before;
  }

  /// Row-major bit-string order: the first differing pair (i, j) decides,
  /// absent bit first. This is the canonical-form ordering used for
  /// deterministic enumeration output.
  static int compare(const BitRel& a, const BitRel& b) {
    a.check_same_size(b);
    for (std::size_t k = 0; k < a.bits_.size(); ++k) {
      const std::uint64_t d = a.bits_[k] ^ b.bits_[k];
      if (d) {
        const std::uint64_t low = d & (~d + 1);
        return (a.bits_[k] & low) ? 1 : -1;
      }
    }
    return 0;
  }

  const std::vector<std::uint64_t>& words() const { return bits_; }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(size_);
    for (std::uint64_t w : bits_)
      h = h * 0x9e3779b97f4a7c15ull + static_cast<std::size_t>(w);
    return h;
  }

 private:
  std::size_t idx(int i, int k) const {
    return static_cast<std::size_t>(i) * row_words_ + k;
  }

  void or_row(int dst, int src) {
    std::uint64_t* d = row(dst);
    const std::uint64_t* s = bits_.data() + idx(src, 0);
    for (int k = 0; k < row_words_; ++k) d[k] |= s[k];
  }

  void check_same_size(const BitRel& other) const {
    if (size_ != other.size_)
      throw DimensionMismatch("relation sizes differ: " +
                              std::to_string(size_) + " vs " +
                              std::to_string(other.size_));
  }

  int size_ = 0;
  int row_words_ = 1;
  std::vector<std::uint64_t> bits_;
};

/// Relation composition, first `first` then `second`:
/// (x, y) is related iff there is z with first(x, z) and second(z, y).
inline BitRel compose(const BitRel& second, const BitRel& first) {
  if (second.size() != first.size())
    throw DimensionMismatch("compose: relation sizes differ");
  const int n = first.size();
  BitRel out(n);
  for (int x = 0; x < n; ++x) {
    std::uint64_t* dst = out.row(x);
    for (int z = 0; z < n; ++z)
      if (first.at(x, z)) {
        const std::uint64_t* src = second.row(z);
        for (int k = 0; k < out.row_words(); ++k) dst[k] |= src[k];
      }
  }
  return out;
}

inline BitRel transpose(const BitRel& r) {
  BitRel out(r.size());
  for (int i = 0; i < r.size(); ++i)
    for (int j = 0; j < r.size(); ++j)
      if (r.at(i, j)) out.set(j, i);
  return out;
}

}  // namespace tsys
