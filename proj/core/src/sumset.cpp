#include "zerosum/sumset.hpp"

#include <algorithm>

#include "zerosum/errors.hpp"
#include "zerosum/modular_bitset.hpp"

namespace zerosum {

namespace {

constexpr std::int64_t kMaxHistoryCells = std::int64_t{1} << 27;

void require_dense(const AbelianGroup& group) {
  if (group.order() > kMaxDenseOrder) {
    throw ResourceError("group " + group.to_string() + " is too large for dense sum-set tables");
  }
}

// One 0/1-knapsack step of the min-length DP: table <- min(table, prev + g) and g itself.
void relax(const AbelianGroup& group, std::vector<std::uint32_t>& table, ElementIndex g) {
  const std::vector<std::uint32_t> prev = table;
  const auto n = static_cast<ElementIndex>(group.order());
  if (group.rank() == 1) {
    for (ElementIndex x = 0; x < n; ++x) {
      if (!prev[x]) continue;
      ElementIndex y = x + g;
      if (y >= n) y -= n;
      const std::uint32_t cand = prev[x] + 1;
      if (!table[y] || cand < table[y]) table[y] = cand;
    }
  } else {
    for (ElementIndex x = 0; x < n; ++x) {
      if (!prev[x]) continue;
      const ElementIndex y = group.add_index(x, g);
      const std::uint32_t cand = prev[x] + 1;
      if (!table[y] || cand < table[y]) table[y] = cand;
    }
  }
  table[g] = 1;
}

}  // namespace

std::string MzValue::to_string() const {
  return is_finite() ? std::to_string(length_) : std::string("infinity");
}

SumSet::SumSet(AbelianGroup group, std::vector<std::uint32_t> min_length)
    : group_(std::move(group)), min_length_(std::move(min_length)) {
  if (static_cast<std::int64_t>(min_length_.size()) != group_.order()) {
    throw InvalidElement("sum-set table size does not match the group order");
  }
  size_ = static_cast<std::size_t>(
      std::count_if(min_length_.begin(), min_length_.end(), [](auto v) { return v != 0; }));
}

bool SumSet::contains(const GroupElement& g) const {
  return min_length_[group_.encode(g)] != 0;
}

std::optional<std::size_t> SumSet::min_length(const GroupElement& g) const {
  const auto v = min_length_[group_.encode(g)];
  if (!v) return std::nullopt;
  return v;
}

std::vector<std::pair<GroupElement, std::size_t>> SumSet::entries() const {
  std::vector<std::pair<GroupElement, std::size_t>> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < min_length_.size(); ++i) {
    if (min_length_[i]) out.emplace_back(group_.decode(static_cast<ElementIndex>(i)), min_length_[i]);
  }
  return out;
}

std::vector<GroupElement> SumSet::keys() const {
  std::vector<GroupElement> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < min_length_.size(); ++i) {
    if (min_length_[i]) out.push_back(group_.decode(static_cast<ElementIndex>(i)));
  }
  return out;
}

SumSet sumset(const ZSequence& s) {
  const auto& group = s.group();
  require_dense(group);
  std::vector<std::uint32_t> table(static_cast<std::size_t>(group.order()), 0);
  for (auto g : s.indices()) relax(group, table, g);
  return SumSet(group, std::move(table));
}

MzValue mz_length(const AbelianGroup& group, std::span<const ElementIndex> entries) {
  require_dense(group);
  std::vector<std::uint32_t> table(static_cast<std::size_t>(group.order()), 0);
  for (auto g : entries) {
    if (g == 0) return MzValue::finite(1);
    relax(group, table, g);
  }
  return table[0] ? MzValue::finite(table[0]) : MzValue::infinity();
}

MZResult mz(const ZSequence& s) {
  const auto& group = s.group();
  require_dense(group);
  const auto entries = s.indices();
  if (static_cast<std::int64_t>(entries.size() + 1) * group.order() > kMaxHistoryCells) {
    throw ResourceError("sequence too long for witness reconstruction over " + group.to_string());
  }
  // history[i] is the table after the first i entries.
  std::vector<std::vector<std::uint32_t>> history;
  history.reserve(entries.size() + 1);
  history.emplace_back(static_cast<std::size_t>(group.order()), 0);
  for (auto g : entries) {
    history.push_back(history.back());
    relax(group, history.back(), g);
  }
  MZResult result;
  std::uint32_t length = history.back()[0];
  if (!length) return result;
  result.value = MzValue::finite(length);

  std::vector<ElementIndex> picked;
  ElementIndex target = 0;
  for (std::size_t k = entries.size(); k > 0 && length > 0; --k) {
    const ElementIndex g = entries[k - 1];
    if (history[k - 1][target] == length) continue;
    picked.push_back(g);
    if (length == 1) break;
    target = group.add_index(target, group.negate_index(g));
    --length;
  }
  result.witness = ZSequence::from_indices(group, picked);
  return result;
}

std::size_t support_size(const ZSequence& s) { return s.multiplicities().size(); }

bool is_zero_sum_free(const ZSequence& s) {
  const auto reach = reachable_sums(s.group(), s.indices());
  return !reach[0];
}

std::vector<std::uint8_t> reachable_sums(const AbelianGroup& group,
                                         std::span<const ElementIndex> entries) {
  require_dense(group);
  const auto n = static_cast<std::size_t>(group.order());
  std::vector<std::uint8_t> out(n, 0);
  if (group.rank() == 1) {
    ModularBitset reach(n);
    for (auto g : entries) {
      ModularBitset next = reach.translated(g);
      next |= reach;
      next.set(g);
      reach = std::move(next);
    }
    for (std::size_t x = 0; x < n; ++x) out[x] = reach.test(x);
    return out;
  }
  std::vector<std::uint8_t> prev;
  for (auto g : entries) {
    prev = out;
    for (std::size_t x = 0; x < n; ++x) {
      if (prev[x]) out[group.add_index(static_cast<ElementIndex>(x), g)] = 1;
    }
    out[g] = 1;
  }
  return out;
}

}  // namespace zerosum
