#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace zerosum {

/// A fixed-width set of residues {0, ..., n-1} with cyclic translation.
/// This is the reachable-sum set for subset-sum DP over Z_n.
class ModularBitset {
 public:
  explicit ModularBitset(std::size_t n = 0) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t modulus() const noexcept { return n_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  /// {(x + k) mod n : x in *this}.
  ModularBitset translated(std::size_t k) const {
    ModularBitset out(n_);
    if (n_ == 0) return out;
    k %= n_;
    if (k == 0) return *this;
    // low part: bits x < n-k move up by k; high part: bits x >= n-k wrap to x+k-n.
    shift_up_into(out, k);
    shift_down_into(out, n_ - k);
    return out;
  }

  ModularBitset& operator|=(const ModularBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  friend bool operator==(const ModularBitset&, const ModularBitset&) = default;

 private:
  void shift_up_into(ModularBitset& out, std::size_t k) const {
    const std::size_t word_shift = k >> 6, bit_shift = k & 63;
    for (std::size_t i = words_.size(); i-- > word_shift;) {
      std::uint64_t v = words_[i - word_shift] << bit_shift;
      if (bit_shift && i - word_shift > 0) v |= words_[i - word_shift - 1] >> (64 - bit_shift);
      out.words_[i] |= v;
    }
    out.clear_tail();
  }

  void shift_down_into(ModularBitset& out, std::size_t k) const {
    const std::size_t word_shift = k >> 6, bit_shift = k & 63;
    for (std::size_t i = 0; i + word_shift < words_.size(); ++i) {
      std::uint64_t v = words_[i + word_shift] >> bit_shift;
      if (bit_shift && i + word_shift + 1 < words_.size()) {
        v |= words_[i + word_shift + 1] << (64 - bit_shift);
      }
      out.words_[i] |= v;
    }
  }

  void clear_tail() noexcept {
    if (n_ & 63) words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }

  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace zerosum
