// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "random_sequences.hpp"
#include "zerosum/class_group.hpp"
#include "zerosum/davenport.hpp"
#include "zerosum/parse.hpp"
#include "zerosum/sumset.hpp"
#include "zerosum/verifier.hpp"

using namespace zerosum;
using nlohmann::json;

namespace {

/// Collects sub-check outcomes for one criterion.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      failed_ = true;
      notes_.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool ok() const { return !failed_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  bool failed_ = false;
  std::vector<std::string> notes_;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Checks&)> body;
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

ZSequence seq(const char* group, const char* text) { return parse_sequence(parse_group(group), text); }

std::string keys_of(const SumSet& s) {
  std::string out;
  for (const auto& g : s.keys()) out += (out.empty() ? "" : ",") + format_element(g);
  return "{" + out + "}";
}

void criterion_1(Checks& c) {
  const auto a = mz(seq("Z5", "1,3,3"));
  c.expect(a.value.is_infinite() && !a.witness, "mz(Z5,(1,3,3)) = infinity");
  c.expect(support_size(seq("Z5", "1,3,3")) == 2, "supp(Z5,(1,3,3)) = 2");

  const auto b = mz(seq("Z6", "2,2,3,1,1,1"));
  c.expect(b.value == MzValue::finite(3), "mz(Z6,(2,2,3,1,1,1)) = 3");
  c.expect(b.witness && format_sequence(*b.witness) == "1,2,3", "witness 2+3+1 = 0");
  c.expect(support_size(seq("Z6", "2,2,3,1,1,1")) == 3, "supp(Z6,(2,2,3,1,1,1)) = 3");

  const auto sigma = keys_of(sumset(seq("Z5", "1,1,4")));
  c.expect(sigma == "{0,1,2,4}", "sumset(Z5,(1,1,4)) = {0,1,2,4}, got " + sigma);

  c.expect(mz(seq("Z4", "2,2,1,1")).value == MzValue::finite(2), "mz(Z4,(2,2,1,1)) = 2");
  c.expect(mz(seq("Z4", "2,2,1,3")).value == MzValue::finite(2), "mz(Z4,(2,2,1,3)) = 2");
  c.expect(support_size(seq("Z4", "2,2,1,3")) == 3, "supp(Z4,(2,2,1,3)) = 3");
  c.note("mz(Z5,(1,3,3)) = " + a.value.to_string() + ", mz(Z6,(2,2,3,1,1,1)) = " +
         b.value.to_string() + ", sumset(Z5,(1,1,4)) = " + sigma);
}

void criterion_2(Checks& c) {
  const auto r = cli({"verify", "all", "--n-max", "11", "--json", "--no-timing"});
  c.expect(r.code == 0, "verify all --n-max 11 exits 0 (got " + std::to_string(r.code) + ")");
  const auto j = json::parse(r.out);
  const std::set<std::string> wanted = {verify::statement::kSupportBound,
                                        verify::statement::kMinimalZeroSum,
                                        verify::statement::kShortZeroSum,
                                        verify::statement::kExtremalStructure};
  std::map<std::string, std::set<std::int64_t>> seen;
  std::uint64_t raw11 = 0, reduced11 = 0;
  for (const auto& rep : j["reports"]) {
    const std::string id = rep["statement_id"];
    if (!wanted.count(id)) continue;
    const std::int64_t n = rep["parameters"]["n"];
    seen[id].insert(n);
    c.expect(rep["violation_count"] == 0, id + " n=" + std::to_string(n) + " has violations");
    c.expect(rep["instances_checked"] > 0, id + " n=" + std::to_string(n) + " checked nothing");
    if (id == verify::statement::kSupportBound && n == 11) {
      raw11 = rep["raw_instances"];
      reduced11 = rep["instances_checked"];
      c.expect(rep["orbit_reduced"] == true, "n=11 is unit-orbit reduced");
    }
  }
  for (const auto& id : wanted) {
    const std::int64_t lo = (id == verify::statement::kSupportBound ||
                             id == verify::statement::kExtremalStructure) ? 2 : 1;
    for (std::int64_t n = lo; n <= 11; ++n) {
      c.expect(seen[id].count(n) == 1, id + " missing n=" + std::to_string(n));
    }
  }
  c.expect(raw11 == 352716, "raw space at n=11 is C(21,11) = 352716, got " + std::to_string(raw11));
  c.note("n=11: " + std::to_string(raw11) + " raw multisets in " + std::to_string(reduced11) +
         " unit orbits; " + std::to_string(j["reports"].size()) + " reports, all passed");
}

void criterion_3(Checks& c) {
  for (std::int64_t n = 5; n <= 10; ++n) {
    const auto r = verify::verify_extremal_structure(n);
    c.expect(r.passed(), "extremal-structure n=" + std::to_string(n) + " passes");
    const auto& realized = r.values.at("realized_s");
    for (auto s : realized) {
      c.expect(s == 0 || s == 1 || s == n - 2 || s == n - 1,
               "n=" + std::to_string(n) + " realizes s=" + std::to_string(s));
    }
    const auto it = r.examples.find("s=1");
    const bool has_s1 = it != r.examples.end() && !it->second.empty();
    c.expect(has_s1, "n=" + std::to_string(n) + " has an s=1 extremal instance");
    if (!has_s1) continue;
    // The witness must have the n-1 copies of a, plus 2a shape.
    const auto w = parse_sequence(AbelianGroup::cyclic(n), it->second.front());
    const auto m = w.multiplicities();
    const bool shape = m.size() == 2 && [&] {
      for (int k = 0; k < 2; ++k) {
        const auto& a = m[k].first;
        const auto& b = m[1 - k].first;
        if (m[k].second == static_cast<std::size_t>(n - 1) && m[1 - k].second == 1 &&
            element_order(w.group(), a) == n &&
            element_add(w.group(), a, a) == b) {
          return true;
        }
      }
      return false;
    }();
    c.expect(shape, "n=" + std::to_string(n) + " s=1 witness has shape a^(n-1),2a");
    c.expect(mz(w).value == MzValue::finite(n - 1) && support_size(w) == 2,
             "n=" + std::to_string(n) + " s=1 witness has MZ = n-1, supp = 2");
    c.note("n=" + std::to_string(n) + ": realized s = {" + join(realized) + "}, s=1 witness " +
           it->second.front());
  }
}

void criterion_4(Checks& c) {
  for (std::int64_t n = 2; n <= 12; ++n) {
    const auto d = davenport(AbelianGroup::cyclic(n)).value;
    c.expect(d == n, "D(Z" + std::to_string(n) + ") = " + std::to_string(d));
  }
  const std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> small = {
      {{2, 2}, 3}, {{3, 3}, 5}, {{2, 4}, 5}};
  std::string summary;
  for (const auto& [factors, expected] : small) {
    const AbelianGroup g(factors);
    const auto lib = davenport(g).value;
    const auto brute = oracle::davenport(factors);
    c.expect(lib == expected && brute == expected,
             "D(" + g.to_string() + "): library " + std::to_string(lib) + ", brute force " +
                 std::to_string(brute) + ", expected " + std::to_string(expected));
    summary += " D(" + g.to_string() + ")=" + std::to_string(lib);
  }
  int non_cyclic = 0;
  for (std::int64_t order = 1; order <= 16; ++order) {
    for (const auto& g : verify::abelian_groups_of_order(order)) {
      if (g.is_cyclic()) continue;
      ++non_cyclic;
      const auto d = davenport(g).value;
      c.expect(d < order, "D(" + g.to_string() + ") = " + std::to_string(d) + " < |G|");
    }
  }
  c.note("D(Z_n) = n for 2 <= n <= 12;" + summary + "; " + std::to_string(non_cyclic) +
         " non-cyclic groups of order <= 16 all have D(G) < |G|");
}

void criterion_5(Checks& c) {
  std::uint64_t instances = 0;
  for (std::int64_t n = 1; n <= 10; ++n) {
    const auto r = verify::verify_sumset_lemmas(AbelianGroup::cyclic(n), 6);
    c.expect(r.passed(), "sumset-lemmas Z" + std::to_string(n) + ": " +
                             std::to_string(r.violation_count) + " violations");
    instances += r.raw_instances;
  }
  c.note(std::to_string(instances) + " zero-sum-free multisets of length <= 6 over Z_n, n <= 10");
}

void criterion_6(Checks& c) {
  for (std::int64_t n = 1; n <= 6; ++n) {
    const auto r = verify::verify_egz(n);
    c.expect(r.passed(), "egz n=" + std::to_string(n) + " passes");
    const auto it = r.slices.find("sharpness-confirmed");
    c.expect(it != r.slices.end() && it->second == 1,
             "egz n=" + std::to_string(n) + " sharpness witness confirmed");
  }
  c.note("every length-(2n-1) multiset over Z_n, n <= 6, has an n-term zero sum; 0^(n-1)1^(n-1) has none");
}

void criterion_7(Checks& c) {
  std::mt19937_64 rng(20261015);
  int cyclic = 0, non_cyclic = 0, mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = testutil::random_group(rng, 12);
    (g.is_cyclic() ? cyclic : non_cyclic)++;
    const auto len = static_cast<std::size_t>(rng() % 15);
    const auto entries = testutil::random_entries(rng, g, len);
    const ZSequence s(g, entries);
    const auto factors = testutil::factors_of(g);
    const auto coords = testutil::coords_of(entries);
    const auto brute = oracle::subset_sums(factors, coords);
    std::map<std::vector<std::int64_t>, std::size_t> dp;
    for (const auto& [e, l] : sumset(s).entries()) dp[e.coords] = l;
    const auto expected = oracle::min_zero_sum(factors, coords);
    const auto got = mz(s).value;
    const bool same_mz = expected ? got == MzValue::finite(static_cast<std::int64_t>(*expected))
                                  : got.is_infinite();
    if (dp != brute || !same_mz) ++mismatches;
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + " of 1000 sequences disagree");
  c.expect(cyclic > 0 && non_cyclic > 0, "both cyclic and non-cyclic groups sampled");
  c.note("1000 sequences (" + std::to_string(cyclic) + " cyclic, " + std::to_string(non_cyclic) +
         " non-cyclic groups): sumset and mz match the 2^len oracle exactly");
}

void criterion_8(Checks& c) {
  using namespace quad;
  const QuadOrder o(26);
  auto ideal = [&](std::int64_t a, std::int64_t b) {
    const QuadElement g[] = {{a, 0}, {b, 1}};
    return ideal_from_generators(o, g);
  };
  const auto cg = class_group(o);
  c.expect(cg.order_h() == 6 && cg.is_cyclic(), "Cl(Q(sqrt(-26))) = Z6");

  const auto p1 = ideal(5, 2), p2 = ideal(2, 0), p3 = ideal(3, 1);
  const auto cube = ideal_pow(o, p1, 3), fourth = ideal_pow(o, p1, 4);
  c.expect(cube == p2, "p1^3 = <2, sqrt(-26)> as HNF ideals: p1^3 = " + format_ideal(o, cube) +
                           " (norm " + std::to_string(ideal_norm(cube)) + "), <2, sqrt(-26)> has norm " +
                           std::to_string(ideal_norm(p2)));
  c.expect(fourth == p3, "p1^4 = <3, 1+sqrt(-26)> as HNF ideals: p1^4 = " + format_ideal(o, fourth) +
                             " (norm " + std::to_string(ideal_norm(fourth)) +
                             "), <3, 1+sqrt(-26)> has norm " + std::to_string(ideal_norm(p3)));
  const bool classes = ideal_class(cg, o, cube) == ideal_class(cg, o, p2) &&
                       ideal_class(cg, o, fourth) == ideal_class(cg, o, p3);
  c.expect(classes, "[p1^3] = [<2, sqrt(-26)>] and [p1^4] = [<3, 1+sqrt(-26)>] in Cl(K)");
  c.note(std::string("class equalities [p1^3] = [p2], [p1^4] = [p3]: ") + (classes ? "hold" : "fail"));

  const auto prod = ideal_mul(o, ideal_mul(o, p1, p1), p3);
  const auto gen = is_principal(o, prod);
  c.expect(gen.has_value(), "p1^2 p3 is principal");
  if (gen) {
    const auto assoc = associates(o, *gen);
    const bool is_assoc = std::find(assoc.begin(), assoc.end(), QuadElement{-7, -1}) != assoc.end();
    c.expect(is_assoc, "generator " + o.format(*gen) + " is a unit associate of -7-sqrt(-26)");
    c.expect(o.norm(*gen) == 75, "generator has norm 75");
    const QuadElement g[] = {*gen};
    c.expect(ideal_from_generators(o, g) == prod, "<generator> = p1^2 p3 as HNF ideals");
    c.expect(is_irreducible(o, *gen), "generator is irreducible");
    c.note("p1^2 p3 = " + format_ideal(o, prod) + " = <" + o.format(*gen) + ">, norm 75, irreducible");
  }

  const std::vector<QuadIdeal> list = {p1, p1, p1, p2, p3, p3};
  const auto r = find_short_principal_product(o, list);
  c.expect(r.support == 3 && r.bound == 4, "s = 3, n - s + 1 = 4");
  c.expect(r.indices.size() == 3 && r.within_bound, "subset of size 3 <= 4");
  c.expect(r.product == prod, "product of the subset is p1^2 p3");
  c.expect(r.irreducible == true, "its generator is irreducible");
}

void criterion_9(Checks& c) {
  const std::vector<std::pair<std::int64_t, std::int64_t>> known = {{-4, 1}, {-20, 2}, {-23, 3}, {-104, 6}};
  for (const auto& [disc, h] : known) {
    const std::int64_t d = disc % 4 == 0 ? -disc / 4 : -disc;
    const auto lib = quad::class_group(quad::QuadOrder(d)).order_h();
    const auto scan = oracle::class_number(disc);
    c.expect(lib == h && scan == h, "h(" + std::to_string(disc) + "): library " + std::to_string(lib) +
                                        ", scan " + std::to_string(scan) + ", expected " + std::to_string(h));
  }
  int fields = 0;
  for (std::int64_t disc = -3; disc >= -1000; --disc) {
    if (!oracle::is_fundamental(disc)) continue;
    ++fields;
    const auto a = quad::reduced_forms(disc);
    const auto b = quad::reduced_forms_by_scan(disc);
    c.expect(a == b, "enumeration paths disagree at D = " + std::to_string(disc));
    c.expect(static_cast<std::int64_t>(a.size()) == oracle::class_number(disc),
             "class number disagrees with the scan at D = " + std::to_string(disc));
  }
  c.note("h(-4)=1, h(-20)=2, h(-23)=3, h(-104)=6; both enumeration paths agree on " +
         std::to_string(fields) + " fundamental discriminants with |D| <= 1000");
}

void criterion_10(Checks& c) {
  // Criteria 2-6 all run inside `verify all --n-max 11`.
  std::string reference;
  for (const char* shards : {"1", "4", "8"}) {
    const auto r = cli({"verify", "all", "--n-max", "11", "--json", "--no-timing", "--shards", shards});
    c.expect(r.code == 0, std::string("verify all with --shards ") + shards + " passes");
    if (reference.empty()) reference = r.out;
    c.expect(r.out == reference, std::string("--shards ") + shards + " output differs from --shards 1");
  }
  for (const auto& g : {AbelianGroup({2, 4}), AbelianGroup({3, 3}), AbelianGroup::cyclic(12)}) {
    const auto one = davenport(g, {.shards = 1});
    for (unsigned shards : {4u, 8u}) {
      DavenportOptions o;
      o.shards = shards;
      const auto many = davenport(g, o);
      c.expect(many.value == one.value && many.witness == one.witness,
               "Davenport search on " + g.to_string() + " depends on the shard count");
    }
  }
  c.note("verify all --n-max 11 JSON is byte-identical for 1, 4 and 8 shards (" +
         std::to_string(reference.size()) + " bytes)");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked examples, bit-exact", 1.0, criterion_1},
      {2, "support bound and companions, exhaustive to n = 11", 300.0, criterion_2},
      {3, "extremal s-values and s = 1 witnesses, 5 <= n <= 10", 0, criterion_3},
      {4, "Davenport constants", 120.0, criterion_4},
      {5, "sum-set lemmas, length <= 6 over Z_n, n <= 10", 0, criterion_5},
      {6, "Erdos-Ginzburg-Ziv for n <= 6 with sharpness", 60.0, criterion_6},
      {7, "DP vs 2^len oracle on 1000 random sequences", 0, criterion_7},
      {8, "Q(sqrt(-26)) worked example, bit-exact", 5.0, criterion_8},
      {9, "class numbers and enumeration cross-check", 0, criterion_9},
      {10, "determinism across 1, 4, 8 shards", 0, criterion_10},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(checks);
    } catch (const std::exception& e) {
      checks.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "runtime %.3f s exceeds %.0f s", secs, cr.limit_seconds);
      checks.expect(secs < cr.limit_seconds, buf);
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (checks.ok() ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.title
              << " (" << timing << ")\n";
    for (const auto& note : checks.notes()) std::cout << "      " << note << '\n';
    if (!checks.ok()) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
