#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zerosum/group.hpp"

namespace zerosum {

/// MZ value: a positive length, or the explicit infinity sentinel when no
/// nonempty zero-sum subsequence exists.
class MzValue {
 public:
  static MzValue infinity() noexcept { return MzValue(); }
  static MzValue finite(std::int64_t length) noexcept { return MzValue(length); }

  bool is_finite() const noexcept { return length_ != kInfinity; }
  bool is_infinite() const noexcept { return length_ == kInfinity; }

  /// Only meaningful when finite.
  std::int64_t value() const noexcept { return length_; }

  /// "3" or "infinity".
  std::string to_string() const;

  /// Infinity compares greater than every finite length.
  friend auto operator<=>(const MzValue&, const MzValue&) = default;

 private:
  static constexpr std::int64_t kInfinity = INT64_MAX;
  MzValue() noexcept = default;
  explicit MzValue(std::int64_t length) noexcept : length_(length) {}

  std::int64_t length_ = kInfinity;
};

/// Sigma(S): every value reached by a nonempty sub-multiset of S, with the
/// smallest cardinality reaching it.
class SumSet {
 public:
  SumSet(AbelianGroup group, std::vector<std::uint32_t> min_length);

  const AbelianGroup& group() const noexcept { return group_; }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool contains(const GroupElement& g) const;
  std::optional<std::size_t> min_length(const GroupElement& g) const;

  /// (element, min_length) pairs in canonical element order.
  std::vector<std::pair<GroupElement, std::size_t>> entries() const;
  std::vector<GroupElement> keys() const;

  /// Dense table indexed by ElementIndex; 0 marks an unreachable value.
  std::span<const std::uint32_t> table() const noexcept { return min_length_; }

 private:
  AbelianGroup group_;
  std::vector<std::uint32_t> min_length_;
  std::size_t size_ = 0;
};

struct MZResult {
  MzValue value = MzValue::infinity();
  /// Present iff value is finite: a shortest nonempty zero-sum sub-multiset.
  std::optional<ZSequence> witness;
};

/// Largest group order the dense sum-set tables accept.
inline constexpr std::int64_t kMaxDenseOrder = std::int64_t{1} << 24;

SumSet sumset(const ZSequence& s);
MZResult mz(const ZSequence& s);
std::size_t support_size(const ZSequence& s);
bool is_zero_sum_free(const ZSequence& s);

/// Index-level MZ without witness reconstruction; `entries` in any order.
MzValue mz_length(const AbelianGroup& group, std::span<const ElementIndex> entries);

/// Index-level reachable set (no lengths), as a dense 0/1 table.
std::vector<std::uint8_t> reachable_sums(const AbelianGroup& group,
                                         std::span<const ElementIndex> entries);

}  // namespace zerosum
