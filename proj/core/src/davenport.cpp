#include "zerosum/davenport.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "zerosum/errors.hpp"
#include "zerosum/modular_bitset.hpp"

namespace zerosum {

namespace {

// Reachable-sum set with translation; bitset rotation for Z_n, index
// arithmetic otherwise.
class ReachSet {
 public:
  explicit ReachSet(const AbelianGroup& group)
      : group_(&group), bits_(static_cast<std::size_t>(group.order())) {}

  bool test(ElementIndex x) const { return bits_.test(x); }
  std::size_t count() const { return bits_.count(); }

  ReachSet extended(ElementIndex g) const {
    ReachSet out(*group_);
    if (group_->rank() == 1) {
      out.bits_ = bits_.translated(g);
    } else {
      const auto n = static_cast<ElementIndex>(group_->order());
      for (ElementIndex x = 0; x < n; ++x) {
        if (bits_.test(x)) out.bits_.set(group_->add_index(x, g));
      }
    }
    out.bits_ |= bits_;
    out.bits_.set(g);
    return out;
  }

 private:
  const AbelianGroup* group_;
  ModularBitset bits_;
};

struct ShardOutcome {
  std::size_t best = 0;
  std::vector<ElementIndex> witness;
  std::uint64_t nodes = 0;
  bool exhausted_budget = false;
};

class Search {
 public:
  Search(const AbelianGroup& group, std::atomic<std::uint64_t>& node_counter,
         std::uint64_t max_nodes)
      : group_(group),
        ceiling_(static_cast<std::size_t>(group.order()) - 1),
        node_counter_(node_counter),
        max_nodes_(max_nodes) {}

  ShardOutcome run(ElementIndex first) {
    ShardOutcome out;
    ReachSet empty(group_);
    path_.assign(1, first);
    best_ = 0;
    extend(empty.extended(first), first);
    out.best = best_;
    out.witness = best_path_;
    out.nodes = nodes_;
    out.exhausted_budget = exhausted_;
    return out;
  }

 private:
  void extend(const ReachSet& reach, ElementIndex last) {
    if (exhausted_) return;
    ++nodes_;
    if ((nodes_ & 0x3ff) == 0 && node_counter_.fetch_add(0x400) + 0x400 > max_nodes_) {
      exhausted_ = true;
      return;
    }
    if (path_.size() > best_) {
      best_ = path_.size();
      best_path_ = path_;
    }
    const auto n = static_cast<ElementIndex>(group_.order());
    for (ElementIndex g = last; g < n; ++g) {
      // Adding g creates a zero sum iff g = 0 or -g is already reachable.
      if (g == 0 || reach.test(group_.negate_index(g))) continue;
      ReachSet next = reach.extended(g);
      // Each further element grows the sum set by at least one, and 0 stays out.
      const std::size_t room = ceiling_ - next.count();
      if (path_.size() + 1 + room <= best_) continue;
      path_.push_back(g);
      extend(next, g);
      path_.pop_back();
      if (exhausted_) return;
    }
  }

  const AbelianGroup& group_;
  std::size_t ceiling_;
  std::atomic<std::uint64_t>& node_counter_;
  std::uint64_t max_nodes_;
  std::vector<ElementIndex> path_;
  std::vector<ElementIndex> best_path_;
  std::size_t best_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

DavenportResult davenport(const AbelianGroup& group, const DavenportOptions& options) {
  if (group.order() > options.max_order) {
    throw ResourceError("Davenport search budget is |G| <= " + std::to_string(options.max_order) +
                        ", got " + group.to_string());
  }
  const auto n = static_cast<ElementIndex>(group.order());
  // Shard f covers sequences whose least element is f; 0 is never usable.
  std::vector<ShardOutcome> outcomes(n);
  std::atomic<std::uint64_t> node_counter{0};
  std::atomic<ElementIndex> next_shard{1};
  auto worker = [&] {
    for (ElementIndex f = next_shard++; f < n; f = next_shard++) {
      Search search(group, node_counter, options.max_nodes);
      outcomes[f] = search.run(f);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.shards, n));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  DavenportResult result{1, ZSequence(group), 0};
  std::size_t best = 0;
  const ShardOutcome* winner = nullptr;
  for (const auto& o : outcomes) {
    result.nodes += o.nodes;
    if (o.exhausted_budget) {
      throw ResourceError("Davenport search exceeded " + std::to_string(options.max_nodes) +
                          " nodes on " + group.to_string());
    }
    if (result.nodes > options.max_nodes) {
      throw ResourceError("Davenport search exceeded " + std::to_string(options.max_nodes) +
                          " nodes on " + group.to_string());
    }
    if (o.best > best) {
      best = o.best;
      winner = &o;
    }
  }
  result.value = static_cast<std::int64_t>(best) + 1;
  if (winner) result.witness = ZSequence::from_indices(group, winner->witness);
  return result;
}

}  // namespace zerosum
