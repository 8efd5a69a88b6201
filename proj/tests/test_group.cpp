#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/group.hpp"
#include "zerosum/parse.hpp"
#include "zerosum/sumset.hpp"

using namespace zerosum;

namespace {

GroupElement el(std::initializer_list<std::int64_t> c) { return GroupElement{c}; }

ZSequence seq_of(std::int64_t n, std::vector<std::int64_t> values) {
  std::vector<GroupElement> e;
  for (auto v : values) e.push_back(el({v}));
  return ZSequence(AbelianGroup::cyclic(n), e);
}

std::vector<std::int64_t> values_of(const ZSequence& s) {
  std::vector<std::int64_t> out;
  for (const auto& g : s.entries()) out.push_back(g.coords[0]);
  return out;
}

}  // namespace

TEST_CASE("group construction and validation") {
  const AbelianGroup g({2, 4});
  CHECK(g.order() == 8);
  CHECK(g.rank() == 2);
  CHECK_FALSE(g.is_cyclic());
  CHECK(g.to_string() == "Z2xZ4");
  CHECK(AbelianGroup({2, 3}).is_cyclic());
  CHECK(AbelianGroup::cyclic(1).order() == 1);
  CHECK_THROWS_AS(AbelianGroup({}), InvalidGroup);
  CHECK_THROWS_AS(AbelianGroup({0}), InvalidGroup);
  CHECK_THROWS_AS(AbelianGroup({-3}), InvalidGroup);
  CHECK_THROWS_AS(AbelianGroup({1 << 16, 1 << 16}), InvalidGroup);
}

TEST_CASE("element_add examples") {
  CHECK(element_add(AbelianGroup::cyclic(6), el({2}), el({3})) == el({5}));
  CHECK(element_add(AbelianGroup::cyclic(5), el({1}), el({4})) == el({0}));
  CHECK(element_add(AbelianGroup({2, 4}), el({1, 3}), el({1, 2})) == el({0, 1}));
  CHECK_THROWS_AS(element_add(AbelianGroup({2, 4}), el({1}), el({1, 2})), InvalidElement);
  CHECK_THROWS_AS(element_add(AbelianGroup::cyclic(4), el({4}), el({1})), InvalidElement);
}

TEST_CASE("element_order examples") {
  CHECK(element_order(AbelianGroup::cyclic(6), el({2})) == 3);
  CHECK(element_order(AbelianGroup::cyclic(9), el({0})) == 1);
  CHECK(element_order(AbelianGroup::cyclic(5), el({1})) == 5);
  CHECK(element_order(AbelianGroup({2, 4}), el({1, 2})) == 2);
  CHECK(element_order(AbelianGroup({4, 6}), el({1, 2})) == 12);
}

TEST_CASE("addition is associative and commutative with identity 0") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::int64_t> factors;
    const int r = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < r; ++j) factors.push_back(1 + static_cast<std::int64_t>(rng() % 9));
    const AbelianGroup g(factors);
    auto rand_el = [&] { return g.decode(static_cast<ElementIndex>(rng() % g.order())); };
    const auto a = rand_el(), b = rand_el(), c = rand_el();
    CHECK(element_add(g, a, b) == element_add(g, b, a));
    CHECK(element_add(g, element_add(g, a, b), c) == element_add(g, a, element_add(g, b, c)));
    CHECK(element_add(g, a, g.zero()) == a);
    CHECK(element_add(g, a, element_negate(g, a)) == g.zero());
  }
}

TEST_CASE("element order is the least annihilating multiple") {
  for (const auto& factors : std::vector<std::vector<std::int64_t>>{{12}, {2, 6}, {3, 3}, {4, 4}}) {
    const AbelianGroup g(factors);
    for (std::int64_t i = 0; i < g.order(); ++i) {
      const auto x = g.decode(static_cast<ElementIndex>(i));
      const auto t = element_order(g, x);
      CHECK(element_scale(g, t, x) == g.zero());
      for (std::int64_t s = 1; s < t; ++s) CHECK(element_scale(g, s, x) != g.zero());
    }
  }
}

TEST_CASE("index encoding is lexicographic and consistent with arithmetic") {
  const AbelianGroup g({3, 4, 2});
  for (ElementIndex i = 0; i + 1 < g.order(); ++i) {
    CHECK(g.decode(i) < g.decode(i + 1));
    CHECK(g.encode(g.decode(i)) == i);
  }
  for (ElementIndex i = 0; i < g.order(); ++i) {
    for (ElementIndex j = 0; j < g.order(); ++j) {
      CHECK(g.decode(g.add_index(i, j)) == element_add(g, g.decode(i), g.decode(j)));
    }
    CHECK(g.decode(g.negate_index(i)) == element_negate(g, g.decode(i)));
  }
}

TEST_CASE("sequences are canonical multisets") {
  const auto a = seq_of(6, {3, 1, 2, 1});
  const auto b = seq_of(6, {1, 1, 2, 3});
  CHECK(a == b);
  CHECK(values_of(a) == std::vector<std::int64_t>{1, 1, 2, 3});
  CHECK(a.multiplicities().size() == 3);
  CHECK(a.multiplicities()[0].second == 2);
  CHECK_THROWS_AS(seq_of(6, {6}), InvalidElement);
  const auto idx = a.indices();
  CHECK(ZSequence::from_indices(a.group(), idx) == a);
}

TEST_CASE("canonical orbit representative") {
  // The orbit is {(1,3,3),(1,1,2),(3,4,4),(2,2,4)} once each image is sorted.
  CHECK(oracle::orbit_min(5, {1, 3, 3}) == std::vector<std::int64_t>{1, 1, 2});
  CHECK(values_of(canonical_orbit_representative(AbelianGroup::cyclic(5), seq_of(5, {1, 3, 3}))) ==
        std::vector<std::int64_t>{1, 1, 2});
  for (auto s : std::vector<std::vector<std::int64_t>>{{1, 3, 3}, {2, 1, 1}, {3, 4, 4}, {4, 2, 2}}) {
    CHECK(values_of(canonical_orbit_representative(AbelianGroup::cyclic(5), seq_of(5, s))) ==
          std::vector<std::int64_t>{1, 1, 2});
  }
  CHECK(values_of(canonical_orbit_representative(AbelianGroup::cyclic(7), seq_of(7, {0, 0, 0}))) ==
        std::vector<std::int64_t>{0, 0, 0});
  CHECK(values_of(canonical_orbit_representative(AbelianGroup::cyclic(6),
                                                 seq_of(6, {2, 2, 3, 1, 1, 1}))) ==
        oracle::orbit_min(6, {2, 2, 3, 1, 1, 1}));
  CHECK_THROWS_AS(canonical_orbit_representative(AbelianGroup({2, 2}),
                                                 ZSequence(AbelianGroup({2, 2}))),
                  UnsupportedSymmetry);
}

TEST_CASE("orbit representative: idempotent, constant on orbits, matches brute force") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 14);
    std::vector<std::int64_t> v(1 + rng() % 7);
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % n);
    const auto g = AbelianGroup::cyclic(n);
    const auto rep = canonical_orbit_representative(g, seq_of(n, v));
    CHECK(values_of(rep) == oracle::orbit_min(n, v));
    CHECK(canonical_orbit_representative(g, rep) == rep);
    for (auto u : units_mod(n)) {
      std::vector<std::int64_t> w;
      for (auto x : v) w.push_back(u * x % n);
      const auto image = seq_of(n, w);
      CHECK(canonical_orbit_representative(g, image) == rep);
      CHECK(mz(image).value == mz(seq_of(n, v)).value);
      CHECK(support_size(image) == support_size(seq_of(n, v)));
    }
  }
}

TEST_CASE("units and gcd helpers") {
  CHECK(units_mod(12) == std::vector<std::int64_t>{1, 5, 7, 11});
  CHECK(units_mod(1) == std::vector<std::int64_t>{0});
  CHECK(gcd64(12, 18) == 6);
  CHECK(lcm64(4, 6) == 12);
}
