#include "zerosum/group.hpp"

#include <algorithm>
#include <numeric>

#include "zerosum/errors.hpp"

namespace zerosum {

std::int64_t gcd64(std::int64_t a, std::int64_t b) noexcept {
  return std::gcd(a, b);
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) noexcept {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

std::vector<std::int64_t> units_mod(std::int64_t n) {
  std::vector<std::int64_t> units;
  if (n == 1) {
    units.push_back(0);  // Z_1 = {0}, and 0 acts as the identity there
    return units;
  }
  for (std::int64_t u = 1; u < n; ++u) {
    if (std::gcd(u, n) == 1) units.push_back(u);
  }
  return units;
}

AbelianGroup::AbelianGroup(std::vector<std::int64_t> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidGroup("a group needs at least one cyclic factor");
  for (auto n : factors_) {
    if (n < 1) throw InvalidGroup("cyclic factor orders must be >= 1");
    if (order_ > kMaxOrder / n) throw InvalidGroup("group order exceeds 2^31");
    order_ *= n;
  }
  strides_.assign(factors_.size(), 1);
  for (std::size_t j = factors_.size(); j-- > 1;) {
    strides_[j - 1] = strides_[j] * factors_[j];
  }
  for (std::size_t i = 0; i < factors_.size() && cyclic_; ++i) {
    for (std::size_t j = i + 1; j < factors_.size(); ++j) {
      if (std::gcd(factors_[i], factors_[j]) != 1) {
        cyclic_ = false;
        break;
      }
    }
  }
}

bool AbelianGroup::contains(const GroupElement& g) const noexcept {
  if (g.coords.size() != factors_.size()) return false;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (g.coords[j] < 0 || g.coords[j] >= factors_[j]) return false;
  }
  return true;
}

GroupElement AbelianGroup::zero() const {
  return GroupElement{std::vector<std::int64_t>(factors_.size(), 0)};
}

ElementIndex AbelianGroup::encode(const GroupElement& g) const {
  if (!contains(g)) throw InvalidElement("element does not belong to " + to_string());
  std::int64_t index = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) index += g.coords[j] * strides_[j];
  return static_cast<ElementIndex>(index);
}

GroupElement AbelianGroup::decode(ElementIndex index) const {
  GroupElement g;
  g.coords.resize(factors_.size());
  std::int64_t rest = index;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    g.coords[j] = rest / strides_[j];
    rest %= strides_[j];
  }
  return g;
}

ElementIndex AbelianGroup::add_index(ElementIndex a, ElementIndex b) const noexcept {
  if (factors_.size() == 1) {
    std::int64_t s = std::int64_t{a} + b;
    if (s >= order_) s -= order_;
    return static_cast<ElementIndex>(s);
  }
  std::int64_t ra = a, rb = b, out = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    std::int64_t da = ra / strides_[j], db = rb / strides_[j];
    ra %= strides_[j];
    rb %= strides_[j];
    std::int64_t d = da + db;
    if (d >= factors_[j]) d -= factors_[j];
    out += d * strides_[j];
  }
  return static_cast<ElementIndex>(out);
}

ElementIndex AbelianGroup::negate_index(ElementIndex a) const noexcept {
  std::int64_t ra = a, out = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    std::int64_t d = ra / strides_[j];
    ra %= strides_[j];
    out += (d == 0 ? 0 : factors_[j] - d) * strides_[j];
  }
  return static_cast<ElementIndex>(out);
}

std::string AbelianGroup::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (j) out += 'x';
    out += 'Z' + std::to_string(factors_[j]);
  }
  return out;
}

namespace {

void require_member(const AbelianGroup& group, const GroupElement& g) {
  if (g.coords.size() != group.rank()) {
    throw InvalidElement("element has " + std::to_string(g.coords.size()) +
                         " coordinates, group " + group.to_string() + " has " +
                         std::to_string(group.rank()) + " factors");
  }
  if (!group.contains(g)) {
    throw InvalidElement("element coordinates out of range for " + group.to_string());
  }
}

}  // namespace

GroupElement element_add(const AbelianGroup& group, const GroupElement& a,
                         const GroupElement& b) {
  require_member(group, a);
  require_member(group, b);
  GroupElement out = a;
  const auto n = group.factors();
  for (std::size_t j = 0; j < n.size(); ++j) {
    out.coords[j] = (a.coords[j] + b.coords[j]) % n[j];
  }
  return out;
}

GroupElement element_negate(const AbelianGroup& group, const GroupElement& a) {
  require_member(group, a);
  GroupElement out = a;
  const auto n = group.factors();
  for (std::size_t j = 0; j < n.size(); ++j) out.coords[j] = (n[j] - a.coords[j]) % n[j];
  return out;
}

GroupElement element_scale(const AbelianGroup& group, std::int64_t t,
                           const GroupElement& a) {
  require_member(group, a);
  GroupElement out = a;
  const auto n = group.factors();
  for (std::size_t j = 0; j < n.size(); ++j) {
    __int128 v = static_cast<__int128>(t % n[j]) * a.coords[j] % n[j];
    if (v < 0) v += n[j];
    out.coords[j] = static_cast<std::int64_t>(v);
  }
  return out;
}

std::int64_t element_order(const AbelianGroup& group, const GroupElement& g) {
  require_member(group, g);
  std::int64_t order = 1;
  const auto n = group.factors();
  for (std::size_t j = 0; j < n.size(); ++j) {
    order = lcm64(order, n[j] / std::gcd(n[j], g.coords[j]));
  }
  return order;
}

ZSequence::ZSequence(AbelianGroup group, std::vector<GroupElement> entries)
    : group_(std::move(group)), entries_(std::move(entries)) {
  for (const auto& g : entries_) require_member(group_, g);
  std::sort(entries_.begin(), entries_.end());
}

ZSequence ZSequence::from_indices(AbelianGroup group,
                                  std::span<const ElementIndex> indices) {
  std::vector<GroupElement> entries;
  entries.reserve(indices.size());
  for (auto i : indices) {
    if (i >= group.order()) throw InvalidElement("element index out of range");
    entries.push_back(group.decode(i));
  }
  return ZSequence(std::move(group), std::move(entries));
}

std::vector<ElementIndex> ZSequence::indices() const {
  std::vector<ElementIndex> out;
  out.reserve(entries_.size());
  for (const auto& g : entries_) out.push_back(group_.encode(g));
  return out;
}

std::vector<std::pair<GroupElement, std::size_t>> ZSequence::multiplicities() const {
  std::vector<std::pair<GroupElement, std::size_t>> out;
  for (const auto& g : entries_) {
    if (!out.empty() && out.back().first == g) {
      ++out.back().second;
    } else {
      out.emplace_back(g, 1);
    }
  }
  return out;
}

ZSequence canonical_orbit_representative(const AbelianGroup& group,
                                         const ZSequence& sequence) {
  if (group.rank() != 1) {
    throw UnsupportedSymmetry("unit-orbit reduction needs a single cyclic factor, got " +
                              group.to_string());
  }
  if (!(sequence.group() == group)) {
    throw InvalidElement("sequence is over " + sequence.group().to_string() + ", not " +
                         group.to_string());
  }
  const std::int64_t n = group.order();
  std::vector<std::int64_t> best;
  for (const auto& g : sequence.entries()) best.push_back(g.coords[0]);
  std::vector<std::int64_t> candidate(best.size());
  for (std::int64_t u : units_mod(n)) {
    for (std::size_t i = 0; i < best.size(); ++i) {
      candidate[i] = static_cast<std::int64_t>(
          static_cast<__int128>(u) * sequence.entries()[i].coords[0] % n);
    }
    std::sort(candidate.begin(), candidate.end());
    if (candidate < best) best = candidate;
  }
  std::vector<GroupElement> entries;
  entries.reserve(best.size());
  for (auto v : best) entries.push_back(GroupElement{{v}});
  return ZSequence(group, std::move(entries));
}

}  // namespace zerosum
