#include "zerosum/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include "zerosum/davenport.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/multiset.hpp"
#include "zerosum/parse.hpp"

namespace zerosum::verify {

namespace {

constexpr std::size_t kMaxExamples = 20;

// Partial results for one shard; merged in shard order.
struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t raw = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;
  std::map<std::string, std::uint64_t> slices;
  std::map<std::string, std::set<std::int64_t>> values;
  std::map<std::string, std::vector<std::string>> examples;

  void violation(std::string check, std::string sequence, std::string observed,
                 std::string expected) {
    ++violation_count;
    if (violations.size() < VerificationReport::kMaxListedViolations) {
      violations.push_back({std::move(check), std::move(sequence), std::move(observed),
                            std::move(expected)});
    }
  }

  void example(const std::string& label, const std::string& sequence) {
    auto& list = examples[label];
    if (list.size() < kMaxExamples) list.push_back(sequence);
  }

  void merge(Tally&& o) {
    checked += o.checked;
    raw += o.raw;
    violation_count += o.violation_count;
    for (auto& v : o.violations) {
      if (violations.size() >= VerificationReport::kMaxListedViolations) break;
      violations.push_back(std::move(v));
    }
    for (const auto& [k, v] : o.slices) slices[k] += v;
    for (auto& [k, v] : o.values) values[k].insert(v.begin(), v.end());
    for (auto& [k, list] : o.examples) {
      for (auto& s : list) example(k, s);
    }
  }
};

// Runs task(i) for i in [0, count) on `shards` threads and merges the
// per-task tallies in index order.
template <class Task>
Tally run_sharded(std::size_t count, unsigned shards, Task&& task) {
  std::vector<Tally> parts(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        parts[i] = task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads =
      static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(shards, count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Tally total;
  for (auto& p : parts) total.merge(std::move(p));
  return total;
}

VerificationReport finish(std::string id, std::vector<std::pair<std::string, ParamValue>> params,
                          bool orbit_reduced, Tally&& tally,
                          std::chrono::steady_clock::time_point start) {
  VerificationReport r;
  r.statement_id = std::move(id);
  r.parameters = std::move(params);
  r.instances_checked = tally.checked;
  r.raw_instances = tally.raw;
  r.orbit_reduced = orbit_reduced;
  r.violation_count = tally.violation_count;
  r.violations = std::move(tally.violations);
  std::sort(r.violations.begin(), r.violations.end());
  r.slices = std::move(tally.slices);
  for (auto& [k, v] : tally.values) r.values[k] = std::vector<std::int64_t>(v.begin(), v.end());
  r.examples = std::move(tally.examples);
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return r;
}

MzKernel resolve_kernel(const VerifyOptions& options) {
  if (options.mz) return options.mz;
  return [](const AbelianGroup& g, std::span<const ElementIndex> s) { return mz_length(g, s); };
}

std::string format_indices(std::span<const ElementIndex> seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq[i]);
  }
  return out;
}

void require_budget(std::uint64_t raw, const VerifyOptions& options, const std::string& what) {
  if (raw > options.budget) {
    throw ResourceError(what + " needs " + std::to_string(raw) +
                        " raw instances, budget is " + std::to_string(options.budget));
  }
}

void require_size(std::int64_t n, std::int64_t min, const std::string& what) {
  if (n < min) {
    throw DomainError(what + " needs n >= " + std::to_string(min) + ", got " + std::to_string(n));
  }
}

// Distinct values with multiplicities of a sorted index sequence.
struct Profile {
  std::size_t support = 0;
  std::size_t max_multiplicity = 0;
  ElementIndex most_common = 0;
};

Profile profile(std::span<const ElementIndex> sorted) {
  Profile p;
  std::size_t run = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] != sorted[i - 1]) {
      ++p.support;
      run = 0;
    }
    ++run;
    if (run > p.max_multiplicity) {
      p.max_multiplicity = run;
      p.most_common = sorted[i];
    }
  }
  return p;
}

// Enumerates every length-`length` multiset over Z_n (one per unit orbit when
// reducing), sharded by least element. check(seq, tally) does the work.
template <class Check>
Tally enumerate_cyclic(std::int64_t n, std::size_t length, const VerifyOptions& options,
                       Check&& check) {
  const auto values = static_cast<ElementIndex>(n);
  return run_sharded(static_cast<std::size_t>(n), options.shards, [&](std::size_t first) {
    Tally tally;
    UnitOrbits orbits(n);
    for_each_multiset(values, length, static_cast<ElementIndex>(first),
                      [&](std::span<const ElementIndex> seq) {
                        if (options.orbit_reduction) {
                          const auto cls = orbits.classify(seq);
                          if (!cls.canonical) return;
                          tally.raw += cls.orbit_size;
                        } else {
                          tally.raw += 1;
                        }
                        ++tally.checked;
                        check(seq, tally);
                      });
    return tally;
  });
}

std::int64_t order_in_cyclic(std::int64_t n, ElementIndex g) { return n / gcd64(n, g); }

}  // namespace

bool has_zero_sum_of_length(std::int64_t n, std::span<const ElementIndex> entries,
                            std::size_t length) {
  if (n < 1 || n > 64) throw DomainError("cardinality-constrained zero sums need 1 <= n <= 64");
  const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  auto rotate = [&](std::uint64_t x, std::int64_t k) -> std::uint64_t {
    k %= n;
    if (k == 0) return x;
    return ((x << k) | (x >> (n - k))) & mask;
  };
  // reach[c]: residues reachable by exactly c of the entries seen so far.
  std::vector<std::uint64_t> reach(length + 1, 0);
  reach[0] = 1;
  for (auto g : entries) {
    for (std::size_t c = length; c >= 1; --c) reach[c] |= rotate(reach[c - 1], g);
  }
  return reach[length] & 1u;
}

VerificationReport verify_support_bound(std::int64_t n, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_size(n, 2, statement::kSupportBound);
  require_budget(multiset_count(n, n), options, statement::kSupportBound);
  const AbelianGroup group = AbelianGroup::cyclic(n);
  const auto kernel = resolve_kernel(options);
  Tally tally = enumerate_cyclic(n, n, options, [&](auto seq, Tally& t) {
    const MzValue m = kernel(group, seq);
    const auto p = profile(seq);
    if (m.is_infinite() || m.value() < 1 || m.value() > n) {
      t.violation("mz-in-range", format_indices(seq), m.to_string(), "1..n");
      return;
    }
    const std::int64_t s = n - m.value();
    t.values["realized_mz"].insert(m.value());
    if (static_cast<std::int64_t>(p.support) > s + 1) {
      t.violation("support-bound", format_indices(seq), "supp=" + std::to_string(p.support),
                  "supp<=" + std::to_string(s + 1));
    }
    if (n >= 3 && s == 1) {
      ++t.slices["mz=n-1"];
      t.example("mz=n-1", format_indices(seq));
      if (p.support != 2) {
        t.violation("mz=n-1", format_indices(seq), "supp=" + std::to_string(p.support), "supp=2");
      }
    }
    if (n >= 3 && s == 2) {
      ++t.slices["mz=n-2"];
      if (p.support > 3) {
        t.violation("mz=n-2", format_indices(seq), "supp=" + std::to_string(p.support), "supp<=3");
      }
    }
  });
  return finish(statement::kSupportBound, {{"n", n}}, options.orbit_reduction, std::move(tally),
                start);
}

VerificationReport verify_minimal_zero_sum(std::int64_t n, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_size(n, 1, statement::kMinimalZeroSum);
  require_budget(multiset_count(n, n), options, statement::kMinimalZeroSum);
  const AbelianGroup group = AbelianGroup::cyclic(n);
  const auto kernel = resolve_kernel(options);
  Tally tally = enumerate_cyclic(n, n, options, [&](auto seq, Tally& t) {
    std::int64_t total = 0;
    for (auto g : seq) total = (total + g) % n;
    if (total != 0) return;
    const MzValue m = kernel(group, seq);
    if (m != MzValue::finite(n)) return;
    ++t.slices["hypothesis"];
    t.example("hypothesis", format_indices(seq));
    const auto p = profile(seq);
    if (p.support != 1) {
      t.violation("constant", format_indices(seq), "supp=" + std::to_string(p.support), "supp=1");
    } else if (order_in_cyclic(n, seq[0]) != n) {
      t.violation("generator", format_indices(seq),
                  "ord=" + std::to_string(order_in_cyclic(n, seq[0])), "ord=" + std::to_string(n));
    }
  });
  return finish(statement::kMinimalZeroSum, {{"n", n}}, options.orbit_reduction, std::move(tally),
                start);
}

VerificationReport verify_extremal_structure(std::int64_t n, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_size(n, 2, statement::kExtremalStructure);
  require_budget(multiset_count(n, n), options, statement::kExtremalStructure);
  const AbelianGroup group = AbelianGroup::cyclic(n);
  const auto kernel = resolve_kernel(options);
  const std::set<std::int64_t> allowed{0, 1, n - 2, n - 1};
  Tally tally = enumerate_cyclic(n, n, options, [&](auto seq, Tally& t) {
    const MzValue m = kernel(group, seq);
    if (m.is_infinite() || m.value() < 1 || m.value() > n) {
      t.violation("mz-in-range", format_indices(seq), m.to_string(), "1..n");
      return;
    }
    const std::int64_t s = n - m.value();
    const auto p = profile(seq);
    if (s == 1 && n >= 4) {
      ++t.slices["mz=n-1"];
      // n-1 copies of a generator a, plus 2a.
      const ElementIndex a = p.most_common;
      const auto twice = static_cast<ElementIndex>((2 * std::int64_t{a}) % n);
      bool shaped = p.support == 2 && p.max_multiplicity == static_cast<std::size_t>(n - 1) &&
                    order_in_cyclic(n, a) == n;
      if (shaped) {
        for (auto g : seq) shaped = shaped && (g == a || g == twice);
      }
      if (!shaped) {
        t.violation("mz=n-1-shape", format_indices(seq), "not (a^(n-1), 2a)", "(a^(n-1), 2a), ord(a)=n");
      }
    }
    if (static_cast<std::int64_t>(p.support) != s + 1) return;
    ++t.slices["extremal"];
    t.values["realized_s"].insert(s);
    t.example("s=" + std::to_string(s), format_indices(seq));
    if (static_cast<std::int64_t>(p.max_multiplicity) < n - s) {
      t.violation("concentration", format_indices(seq),
                  "max multiplicity " + std::to_string(p.max_multiplicity),
                  ">= " + std::to_string(n - s));
    }
    if (!allowed.contains(s)) {
      t.violation("s-values", format_indices(seq), "s=" + std::to_string(s), "s in {0,1,n-2,n-1}");
    }
  });
  return finish(statement::kExtremalStructure, {{"n", n}}, options.orbit_reduction,
                std::move(tally), start);
}

VerificationReport verify_short_zero_sum(std::int64_t n, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_size(n, 1, statement::kShortZeroSum);
  require_budget(multiset_count(n, n), options, statement::kShortZeroSum);
  const AbelianGroup group = AbelianGroup::cyclic(n);
  const auto kernel = resolve_kernel(options);
  Tally tally = enumerate_cyclic(n, n, options, [&](auto seq, Tally& t) {
    const MzValue m = kernel(group, seq);
    const auto support = static_cast<std::int64_t>(profile(seq).support);
    const std::int64_t bound = n - support + 1;
    ++t.slices["supp=" + std::to_string(support)];
    if (m.is_infinite() || m.value() > bound) {
      t.violation("short-zero-sum", format_indices(seq), "mz=" + m.to_string(),
                  "mz<=" + std::to_string(bound));
    }
  });
  return finish(statement::kShortZeroSum, {{"n", n}}, options.orbit_reduction, std::move(tally),
                start);
}

VerificationReport verify_egz(std::int64_t n, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_size(n, 1, statement::kEgz);
  if (n > 64) throw ResourceError("egz check supports n <= 64");
  const auto length = static_cast<std::size_t>(2 * n - 1);
  require_budget(multiset_count(n, length), options, statement::kEgz);
  Tally tally = enumerate_cyclic(n, length, options, [&](auto seq, Tally& t) {
    if (!has_zero_sum_of_length(n, seq, static_cast<std::size_t>(n))) {
      t.violation("egz", format_indices(seq), "no n-element zero sum", "n-element zero sum");
    }
  });
  // Sharpness: n-1 zeros and n-1 ones have no n-element zero sum.
  std::vector<ElementIndex> sharp(static_cast<std::size_t>(n - 1), 0);
  sharp.insert(sharp.end(), static_cast<std::size_t>(n - 1), n == 1 ? 0 : 1);
  const std::string sharp_text = format_indices(sharp);
  tally.examples["sharpness"].push_back(sharp_text);
  if (has_zero_sum_of_length(n, sharp, static_cast<std::size_t>(n))) {
    tally.violation("egz-sharpness", sharp_text, "n-element zero sum", "no n-element zero sum");
  } else {
    tally.slices["sharpness-confirmed"] = 1;
  }
  return finish(statement::kEgz, {{"n", n}}, options.orbit_reduction, std::move(tally), start);
}

VerificationReport verify_sumset_lemmas(const AbelianGroup& group, std::size_t k_max,
                                        const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (group.order() > 4096) throw ResourceError("sumset-lemmas supports |G| <= 4096");
  const bool reduce = options.orbit_reduction && group.rank() == 1;
  const auto n = static_cast<ElementIndex>(group.order());
  std::atomic<std::uint64_t> nodes{0};

  auto format_seq = [&](std::span<const ElementIndex> seq) {
    return group.rank() == 1 ? format_indices(seq)
                             : format_sequence(ZSequence::from_indices(group, seq));
  };

  auto check_node = [&](std::span<const ElementIndex> seq, const std::vector<std::uint8_t>& sigma,
                        Tally& t) {
    const std::size_t k = seq.size();
    const std::size_t size = static_cast<std::size_t>(std::count(sigma.begin(), sigma.end(), 1));
    const auto p = profile(seq);
    const std::string text = format_seq(seq);
    ++t.slices["length=" + std::to_string(k)];

    if (sigma != reachable_sums(group, seq)) {
      t.violation("sumset-consistency", text, "incremental != DP", "equal");
    }
    if (size < k) {
      t.violation("size>=length", text, std::to_string(size), ">=" + std::to_string(k));
    }
    if (size + 1 < k + p.support) {
      t.violation("size>=length-1+supp", text, std::to_string(size),
                  ">=" + std::to_string(k - 1 + p.support));
    }
    if (size == k && k <= static_cast<std::size_t>(n)) {
      ++t.slices["size=length"];
      if (p.support != 1) {
        t.violation("size=length-forces-constant", text, "supp=" + std::to_string(p.support),
                    "supp=1");
      }
    }
    // Remove one copy of each distinct value and re-check the update law.
    std::vector<ElementIndex> prefix;
    for (std::size_t i = 0; i < k; ++i) {
      if (i > 0 && seq[i] == seq[i - 1]) continue;
      const ElementIndex g = seq[i];
      prefix.assign(seq.begin(), seq.end());
      prefix.erase(prefix.begin() + static_cast<std::ptrdiff_t>(i));
      const auto sub = reachable_sums(group, prefix);
      std::vector<std::uint8_t> rebuilt = sub;
      for (ElementIndex x = 0; x < n; ++x) {
        if (sub[x]) rebuilt[group.add_index(x, g)] = 1;
      }
      rebuilt[g] = 1;
      ++t.slices["one-step-extensions"];
      if (rebuilt != sigma) {
        t.violation("update-law", text, "Sigma(S) != Sigma(P) u (Sigma(P)+g) u {g}",
                    "equal for g=" + std::to_string(g));
      }
      const auto sub_size = static_cast<std::size_t>(std::count(sub.begin(), sub.end(), 1));
      if (size < sub_size + 1) {
        t.violation("one-step-growth", text, std::to_string(size) + " vs " + std::to_string(sub_size),
                    "growth >= 1");
      }
    }
  };

  Tally tally = run_sharded(n, options.shards, [&](std::size_t first) {
    Tally t;
    if (first == 0 || k_max == 0) return t;
    UnitOrbits orbits(reduce ? group.order() : 1);
    std::vector<ElementIndex> seq;
    // Depth-first over zero-sum-free multisets with the given least element.
    auto visit = [&](auto&& self, const std::vector<std::uint8_t>& sigma) -> void {
      if (nodes.fetch_add(1) >= options.budget) {
        throw ResourceError("sumset-lemmas exceeded the node budget of " +
                            std::to_string(options.budget));
      }
      bool check = true;
      std::uint64_t weight = 1;
      if (reduce) {
        const auto cls = orbits.classify(seq);
        check = cls.canonical;
        weight = cls.orbit_size;
      }
      if (check) {
        ++t.checked;
        t.raw += weight;
        check_node(seq, sigma, t);
      }
      if (seq.size() == k_max) return;
      for (ElementIndex g = seq.back(); g < n; ++g) {
        if (sigma[group.negate_index(g)]) continue;  // would create a zero sum
        std::vector<std::uint8_t> next = sigma;
        for (ElementIndex x = 0; x < n; ++x) {
          if (sigma[x]) next[group.add_index(x, g)] = 1;
        }
        next[g] = 1;
        seq.push_back(g);
        self(self, next);
        seq.pop_back();
      }
    };
    const auto g = static_cast<ElementIndex>(first);
    std::vector<std::uint8_t> sigma(n, 0);
    sigma[g] = 1;
    seq.push_back(g);
    visit(visit, sigma);
    return t;
  });
  return finish(statement::kSumsetLemmas,
                {{"group", group.to_string()}, {"k_max", static_cast<std::int64_t>(k_max)}},
                reduce, std::move(tally), start);
}

VerificationReport verify_davenport_table(std::int64_t max_order, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_size(max_order, 1, statement::kDavenportTable);
  if (max_order > 64) throw ResourceError("davenport-table supports |G| <= 64");
  std::vector<AbelianGroup> groups;
  for (std::int64_t order = 1; order <= max_order; ++order) {
    for (auto& g : abelian_groups_of_order(order)) groups.push_back(std::move(g));
  }
  DavenportOptions dopts;
  dopts.max_order = max_order;
  dopts.max_nodes = options.budget;
  dopts.shards = options.shards;
  Tally tally;
  for (const auto& group : groups) {
    const auto result = davenport(group, dopts);
    const std::string name = group.to_string();
    ++tally.checked;
    ++tally.raw;
    tally.values["D(" + name + ")"].insert(result.value);
    tally.examples["witness(" + name + ")"].push_back(format_sequence(result.witness));
    ++tally.slices[group.is_cyclic() ? "cyclic" : "non-cyclic"];
    if (result.value > group.order()) {
      tally.violation("upper-bound", name, "D=" + std::to_string(result.value),
                      "D<=" + std::to_string(group.order()));
    }
    if ((result.value == group.order()) != group.is_cyclic()) {
      tally.violation("equality-iff-cyclic", name, "D=" + std::to_string(result.value),
                      group.is_cyclic() ? "D=|G|" : "D<|G|");
    }
    if (static_cast<std::int64_t>(result.witness.size()) != result.value - 1 ||
        !is_zero_sum_free(result.witness)) {
      tally.violation("witness", name, format_sequence(result.witness),
                      "zero-sum-free of length D-1");
    }
  }
  return finish(statement::kDavenportTable, {{"max_order", max_order}}, false, std::move(tally),
                start);
}

std::vector<VerificationReport> verify_all(const SuiteOptions& suite, const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  const std::int64_t n_max = suite.n_max;
  for (std::int64_t n = 2; n <= n_max; ++n) out.push_back(verify_support_bound(n, options));
  for (std::int64_t n = 1; n <= n_max; ++n) out.push_back(verify_minimal_zero_sum(n, options));
  for (std::int64_t n = 2; n <= n_max; ++n) out.push_back(verify_extremal_structure(n, options));
  for (std::int64_t n = 1; n <= n_max; ++n) out.push_back(verify_short_zero_sum(n, options));
  for (std::int64_t n = 2; n <= std::min(n_max, suite.sumset_n_max); ++n) {
    out.push_back(verify_sumset_lemmas(AbelianGroup::cyclic(n), suite.k_max, options));
  }
  for (std::int64_t n = 1; n <= std::min(n_max, suite.egz_n_max); ++n) {
    out.push_back(verify_egz(n, options));
  }
  out.push_back(verify_davenport_table(suite.davenport_max_order, options));
  return out;
}

VerificationReport verify_statement(const std::string& id, std::int64_t n,
                                    const VerifyOptions& options, const AbelianGroup* group,
                                    std::size_t k_max) {
  if (id == statement::kSupportBound) return verify_support_bound(n, options);
  if (id == statement::kMinimalZeroSum) return verify_minimal_zero_sum(n, options);
  if (id == statement::kExtremalStructure) return verify_extremal_structure(n, options);
  if (id == statement::kShortZeroSum) return verify_short_zero_sum(n, options);
  if (id == statement::kEgz) return verify_egz(n, options);
  if (id == statement::kDavenportTable) return verify_davenport_table(n, options);
  if (id == statement::kSumsetLemmas) {
    return verify_sumset_lemmas(group ? *group : AbelianGroup::cyclic(n), k_max, options);
  }
  throw DomainError("unknown statement id '" + id + "'");
}

std::vector<std::string> statement_ids() {
  return {statement::kSupportBound, statement::kMinimalZeroSum, statement::kExtremalStructure,
          statement::kSumsetLemmas,  statement::kShortZeroSum,   statement::kEgz,
          statement::kDavenportTable};
}

std::vector<AbelianGroup> abelian_groups_of_order(std::int64_t order) {
  if (order < 1) throw InvalidGroup("group order must be >= 1");
  if (order == 1) return {AbelianGroup::cyclic(1)};
  std::vector<AbelianGroup> out;
  std::vector<std::int64_t> factors;
  // Invariant factors n1 | n2 | ... with product `order`; each next factor is a
  // multiple of the previous one and must still divide what remains.
  auto build = [&](auto&& self, std::int64_t remaining, std::int64_t previous) -> void {
    if (remaining == 1) {
      out.emplace_back(factors);
      return;
    }
    for (std::int64_t f = previous; f <= remaining; f += previous) {
      if (f < 2 || remaining % f != 0) continue;
      // The remaining factors are multiples of f, so f must divide remaining/f.
      if (remaining / f != 1 && (remaining / f) % f != 0) continue;
      factors.push_back(f);
      self(self, remaining / f, f);
      factors.pop_back();
    }
  };
  build(build, order, 1);
  // Cyclic group first.
  std::stable_sort(out.begin(), out.end(),
                   [](const AbelianGroup& a, const AbelianGroup& b) { return a.rank() < b.rank(); });
  return out;
}

}  // namespace zerosum::verify
