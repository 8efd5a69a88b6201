#include "doctest.h"
#include "oracles.hpp"
#include "random_sequences.hpp"
#include "zerosum/davenport.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/sumset.hpp"
#include "zerosum/verifier.hpp"

using namespace zerosum;

TEST_CASE("cyclic groups") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    const auto r = davenport(AbelianGroup::cyclic(n));
    CHECK(r.value == n);
    CHECK(r.witness.size() == static_cast<std::size_t>(n - 1));
    CHECK(is_zero_sum_free(r.witness));
  }
}

TEST_CASE("small non-cyclic groups against brute force") {
  const std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> cases = {
      {{2, 2}, 3}, {{3, 3}, 5}, {{2, 4}, 5}, {{2, 2, 2}, 4}};
  for (const auto& [factors, expected] : cases) {
    const AbelianGroup g(factors);
    const auto r = davenport(g);
    CHECK(r.value == expected);
    CHECK(oracle::davenport(factors) == expected);
    CHECK(is_zero_sum_free(r.witness));
    CHECK(r.witness.size() == static_cast<std::size_t>(expected - 1));
  }
}

TEST_CASE("D(G) <= |G| with equality iff cyclic, all |G| <= 16") {
  for (std::int64_t order = 1; order <= 16; ++order) {
    for (const auto& g : verify::abelian_groups_of_order(order)) {
      const auto d = davenport(g).value;
      CHECK(d <= order);
      CHECK((d == order) == g.is_cyclic());
      if (order <= 9) CHECK(d == oracle::davenport(testutil::factors_of(g)));
    }
  }
}

TEST_CASE("sharding does not change the result or the witness") {
  for (const auto& g : {AbelianGroup({2, 4}), AbelianGroup({3, 3}), AbelianGroup::cyclic(10),
                        AbelianGroup({2, 2, 2})}) {
    const auto one = davenport(g, {.shards = 1});
    for (unsigned shards : {2u, 4u, 8u}) {
      DavenportOptions opts;
      opts.shards = shards;
      const auto many = davenport(g, opts);
      CHECK(many.value == one.value);
      CHECK(many.witness == one.witness);
    }
  }
}

TEST_CASE("sequences of length D(G) always contain a zero sum of length <= D(G)") {
  std::mt19937_64 rng(3);
  for (const auto& g : {AbelianGroup({2, 4}), AbelianGroup({3, 3}), AbelianGroup({2, 6})}) {
    const auto d = davenport(g).value;
    for (int trial = 0; trial < 200; ++trial) {
      const ZSequence s(g, testutil::random_entries(rng, g, static_cast<std::size_t>(d)));
      const auto m = mz(s).value;
      REQUIRE(m.is_finite());
      CHECK(m.value() <= d);
    }
  }
}

TEST_CASE("budgets") {
  DavenportOptions tiny;
  tiny.max_nodes = 10;
  CHECK_THROWS_AS(davenport(AbelianGroup({4, 4}), tiny), ResourceError);
  DavenportOptions small;
  small.max_order = 8;
  CHECK_THROWS_AS(davenport(AbelianGroup::cyclic(9), small), ResourceError);
}
