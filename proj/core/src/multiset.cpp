#include "zerosum/multiset.hpp"

#include <algorithm>
#include <limits>

namespace zerosum {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: r stays C(n-k+i, i)
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

UnitOrbits::UnitOrbits(std::int64_t n) : n_(n), units_(units_mod(n)) {
  const auto size = static_cast<std::size_t>(n);
  product_.resize(units_.size() * size);
  for (std::size_t ui = 0; ui < units_.size(); ++ui) {
    for (std::size_t x = 0; x < size; ++x) {
      product_[ui * size + x] = static_cast<ElementIndex>(
          static_cast<std::int64_t>(x) * units_[ui] % n);
    }
  }
  counts_.assign(size, 0);
  image_.assign(size, 0);
}

UnitOrbits::Classification UnitOrbits::classify(std::span<const ElementIndex> sorted) const {
  const auto size = static_cast<std::size_t>(n_);
  std::fill(counts_.begin(), counts_.end(), 0);
  for (auto x : sorted) ++counts_[x];
  Classification out{true, 0};
  std::size_t stabilizer = 0;
  for (std::size_t ui = 0; ui < units_.size(); ++ui) {
    std::fill(image_.begin(), image_.end(), 0);
    const ElementIndex* mul = &product_[ui * size];
    for (std::size_t x = 0; x < size; ++x) image_[mul[x]] += counts_[x];
    std::size_t v = 0;
    while (v < size && image_[v] == counts_[v]) ++v;
    if (v == size) {
      ++stabilizer;
    } else if (image_[v] > counts_[v]) {
      out.canonical = false;
    }
  }
  out.orbit_size = units_.size() / stabilizer;
  return out;
}

}  // namespace zerosum
