#pragma once

#include <cstdint>

#include "zerosum/group.hpp"

namespace zerosum {

struct DavenportOptions {
  /// Largest |G| the search accepts.
  std::int64_t max_order = 4096;
  /// Total DFS nodes across all shards before giving up with ResourceError.
  std::uint64_t max_nodes = 200'000'000;
  /// Worker threads; shards are first elements, merged by max length.
  unsigned shards = 1;
};

struct DavenportResult {
  /// D(G) = 1 + the maximal length of a zero-sum-free sequence.
  std::int64_t value = 1;
  /// First zero-sum-free sequence of length value-1 in lexicographic DFS order.
  ZSequence witness;
  std::uint64_t nodes = 0;
};

/// Exact Davenport constant by depth-first search over canonically ordered
/// zero-sum-free multisets. Each extension g must be >= the previous element
/// and keep 0 out of the sum set, which is updated as S u (S+g) u {g}.
DavenportResult davenport(const AbelianGroup& group, const DavenportOptions& options = {});

}  // namespace zerosum
