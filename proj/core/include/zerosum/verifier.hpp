#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "zerosum/group.hpp"
#include "zerosum/report.hpp"
#include "zerosum/sumset.hpp"

namespace zerosum::verify {

/// Computes MZ for a sequence given as element indices. Tests substitute a
/// deliberately wrong kernel to show the checks are not vacuous.
using MzKernel = std::function<MzValue(const AbelianGroup&, std::span<const ElementIndex>)>;

struct VerifyOptions {
  /// Worker threads. Work is split by least element and merged in that order,
  /// so reports do not depend on this value.
  unsigned shards = 1;
  /// Enumerate one multiset per unit orbit (single-factor groups only).
  bool orbit_reduction = true;
  /// Maximum raw multisets (or search nodes) a single check may visit.
  std::uint64_t budget = 10'000'000;
  /// Empty means zerosum::mz_length.
  MzKernel mz;
};

namespace statement {
inline constexpr const char* kSupportBound = "support-bound";
inline constexpr const char* kMinimalZeroSum = "minimal-zero-sum";
inline constexpr const char* kExtremalStructure = "extremal-structure";
inline constexpr const char* kSumsetLemmas = "sumset-lemmas";
inline constexpr const char* kShortZeroSum = "short-zero-sum";
inline constexpr const char* kEgz = "egz";
inline constexpr const char* kDavenportTable = "davenport-table";
}  // namespace statement

/// For every length-n multiset S over Z_n with MZ(S) = n - s: supp(S) <= s + 1.
/// Slices "mz=n-1" (supp is exactly 2 there, n >= 3) and "mz=n-2" (supp <= 3,
/// n >= 3) are checked in the same pass.
VerificationReport verify_support_bound(std::int64_t n, const VerifyOptions& options = {});

/// A length-n multiset over Z_n that sums to 0 with MZ(S) = n is g,...,g with
/// ord(g) = n.
VerificationReport verify_minimal_zero_sum(std::int64_t n, const VerifyOptions& options = {});

/// Sequences attaining supp(S) = s + 1 where MZ(S) = n - s:
///  - MZ(S) = n - 1, n >= 4 forces n-1 copies of a generator a plus 2a;
///  - some value occurs at least n - s times;
///  - s lies in {0, 1, n-2, n-1}.
/// values["realized_s"] lists the s that occur; examples["s=1"] holds witnesses.
VerificationReport verify_extremal_structure(std::int64_t n, const VerifyOptions& options = {});

/// Over all zero-sum-free multisets of length 1..k_max over G:
/// |Sigma| >= k, |Sigma| >= k - 1 + supp, the one-element update law with
/// growth >= 1, and |Sigma| = k (k <= |G|) only for constant sequences.
VerificationReport verify_sumset_lemmas(const AbelianGroup& group, std::size_t k_max,
                                        const VerifyOptions& options = {});

/// Every length-n multiset over Z_n with supp = s has MZ <= n - s + 1.
VerificationReport verify_short_zero_sum(std::int64_t n, const VerifyOptions& options = {});

/// Every length-(2n-1) multiset over Z_n has n elements summing to 0, and
/// (0^{n-1}, 1^{n-1}) does not.
VerificationReport verify_egz(std::int64_t n, const VerifyOptions& options = {});

/// D(G) <= |G| with equality iff G is cyclic, for every group of order <= max_order.
VerificationReport verify_davenport_table(std::int64_t max_order,
                                          const VerifyOptions& options = {});

struct SuiteOptions {
  std::int64_t n_max = 11;
  std::int64_t sumset_n_max = 10;
  std::size_t k_max = 6;
  std::int64_t egz_n_max = 6;
  std::int64_t davenport_max_order = 16;
};

/// Every statement at every size up to the suite limits, each capped at n_max
/// except the Davenport table, which has its own order limit.
std::vector<VerificationReport> verify_all(const SuiteOptions& suite,
                                           const VerifyOptions& options = {});

/// Runs one statement by id. `n` is the size parameter (max order for the
/// Davenport table); `group` and `k_max` are used by sumset-lemmas only.
VerificationReport verify_statement(const std::string& id, std::int64_t n,
                                    const VerifyOptions& options = {},
                                    const AbelianGroup* group = nullptr,
                                    std::size_t k_max = 6);

std::vector<std::string> statement_ids();

/// Abelian groups of the given order in invariant-factor form n1 | n2 | ...
std::vector<AbelianGroup> abelian_groups_of_order(std::int64_t order);

/// Does some n-element sub-multiset of `entries` sum to 0 in Z_n? (n <= 64)
bool has_zero_sum_of_length(std::int64_t n, std::span<const ElementIndex> entries,
                            std::size_t length);

}  // namespace zerosum::verify
