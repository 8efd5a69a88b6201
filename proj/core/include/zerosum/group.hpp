#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace zerosum {

/// Coordinates of an element of Z_{n1} x ... x Z_{nr}; coords[j] lies in [0, n_j).
struct GroupElement {
  std::vector<std::int64_t> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Dense index of an element. Index order coincides with lexicographic
/// order on coordinates (the first factor is the most significant digit).
using ElementIndex = std::uint32_t;

/// A finite abelian group Z_{n1} x ... x Z_{nr}, fixed at construction.
///
/// Elements carry no reference to their group; every operation takes the
/// group explicitly. The order is limited to 2^31 so that element indices
/// and sums of two residues stay within machine words.
class AbelianGroup {
 public:
  static constexpr std::int64_t kMaxOrder = std::int64_t{1} << 31;

  explicit AbelianGroup(std::vector<std::int64_t> factors);

  static AbelianGroup cyclic(std::int64_t n) { return AbelianGroup({n}); }

  std::span<const std::int64_t> factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  std::int64_t order() const noexcept { return order_; }

  /// True iff the factor orders are pairwise coprime.
  bool is_cyclic() const noexcept { return cyclic_; }

  bool contains(const GroupElement& g) const noexcept;
  GroupElement zero() const;

  ElementIndex encode(const GroupElement& g) const;
  GroupElement decode(ElementIndex index) const;

  /// Index arithmetic: the mixed-radix counterparts of add / negate.
  ElementIndex add_index(ElementIndex a, ElementIndex b) const noexcept;
  ElementIndex negate_index(ElementIndex a) const noexcept;

  /// "Z6", "Z2xZ4".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<std::int64_t> factors_;
  std::vector<std::int64_t> strides_;
  std::int64_t order_ = 1;
  bool cyclic_ = true;
};

/// Componentwise (a_j + b_j) mod n_j. Throws InvalidElement on a dimension
/// or range mismatch.
GroupElement element_add(const AbelianGroup& group, const GroupElement& a,
                         const GroupElement& b);
GroupElement element_negate(const AbelianGroup& group, const GroupElement& a);
GroupElement element_scale(const AbelianGroup& group, std::int64_t t,
                           const GroupElement& a);

/// Smallest t >= 1 with t*g = 0, i.e. lcm_j n_j / gcd(n_j, g_j).
std::int64_t element_order(const AbelianGroup& group, const GroupElement& g);

/// A finite multiset of group elements kept in canonical (sorted) order.
class ZSequence {
 public:
  explicit ZSequence(AbelianGroup group, std::vector<GroupElement> entries = {});

  /// Build from dense element indices.
  static ZSequence from_indices(AbelianGroup group,
                                std::span<const ElementIndex> indices);

  const AbelianGroup& group() const noexcept { return group_; }
  const std::vector<GroupElement>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Sorted dense indices of the entries.
  std::vector<ElementIndex> indices() const;

  /// Distinct entries paired with their multiplicities, in canonical order.
  std::vector<std::pair<GroupElement, std::size_t>> multiplicities() const;

  friend bool operator==(const ZSequence& a, const ZSequence& b) {
    return a.group_ == b.group_ && a.entries_ == b.entries_;
  }

 private:
  AbelianGroup group_;
  std::vector<GroupElement> entries_;
};

/// Lexicographically least canonical multiset in the orbit {u*S : gcd(u,n)=1}.
/// Only single-factor groups Z_n are supported.
ZSequence canonical_orbit_representative(const AbelianGroup& group,
                                         const ZSequence& sequence);

std::int64_t gcd64(std::int64_t a, std::int64_t b) noexcept;
std::int64_t lcm64(std::int64_t a, std::int64_t b) noexcept;

/// Units of Z_n in increasing order.
std::vector<std::int64_t> units_mod(std::int64_t n);

}  // namespace zerosum

template <>
struct std::hash<zerosum::GroupElement> {
  std::size_t operator()(const zerosum::GroupElement& g) const noexcept {
    std::size_t seed = g.coords.size();
    for (auto c : g.coords) {
      seed ^= std::hash<std::int64_t>{}(c) + 0x9e3779b9 + (seed << 6) + (seed >> 2);
    }
    return seed;
  }
};
