#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zerosum/group.hpp"

namespace zerosum {

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Number of multisets of the given length over `values` distinct values.
inline std::uint64_t multiset_count(std::uint64_t values, std::uint64_t length) noexcept {
  if (values == 0) return length == 0 ? 1 : 0;
  return binomial(values + length - 1, length);
}

/// Visits every nondecreasing sequence of `length` >= 1 over [0, values)
/// whose first (least) entry is `first`, in lexicographic order.
template <class Visit>
void for_each_multiset(ElementIndex values, std::size_t length, ElementIndex first,
                       Visit&& visit) {
  if (length == 0 || first >= values) return;
  std::vector<ElementIndex> seq(length, first);
  const std::span<const ElementIndex> view(seq);
  while (true) {
    visit(view);
    std::size_t i = length;
    while (i > 1 && seq[i - 1] == values - 1) --i;
    if (i == 1) return;
    const ElementIndex v = ++seq[i - 1];
    for (std::size_t j = i; j < length; ++j) seq[j] = v;
  }
}

/// Unit action on multisets over Z_n held as multiplicity vectors.
/// A sorted sequence is lexicographically smaller than another of the same
/// length iff, at the first value where the multiplicities differ, it has more
/// copies of that value.
class UnitOrbits {
 public:
  explicit UnitOrbits(std::int64_t n);

  std::int64_t modulus() const noexcept { return n_; }
  std::span<const std::int64_t> units() const noexcept { return units_; }

  struct Classification {
    bool canonical = false;
    /// Number of distinct multisets u*S (the orbit size).
    std::uint64_t orbit_size = 0;
  };

  /// `sorted` must be nondecreasing residues in [0, n).
  Classification classify(std::span<const ElementIndex> sorted) const;

 private:
  std::int64_t n_;
  std::vector<std::int64_t> units_;
  // product_[u_index * n + x] = u*x mod n
  std::vector<ElementIndex> product_;
  mutable std::vector<std::uint32_t> counts_;
  mutable std::vector<std::uint32_t> image_;
};

}  // namespace zerosum
