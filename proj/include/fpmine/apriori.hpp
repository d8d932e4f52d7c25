#pragma once

#include <cstdint>
#include <vector>

#include "fpmine/database.hpp"
#include "fpmine/rational.hpp"

namespace fpmine {

struct SupportThreshold {
  Ratio relative;                // fraction of the database
  std::uint32_t absolute = 1;    // required transaction count

  // absolute = max(1, floor(relative * n)), computed exactly.
  static SupportThreshold from_relative(const Ratio& relative, std::size_t num_transactions);
};

struct FrequentItemset {
  Itemset items;
  std::uint32_t count = 0;  // number of containing transactions

  friend bool operator==(const FrequentItemset& a, const FrequentItemset& b) {
    return a.count == b.count && a.items == b.items;
  }
};

// L_k (or a counted candidate set): all entries of size k, distinct, in
// ascending lexicographic order.
struct LevelSet {
  std::size_t k = 0;
  std::vector<FrequentItemset> entries;
};

struct MiningResult {
  std::vector<LevelSet> levels;               // L1, L2, ...; the first empty level is not stored
  std::vector<std::size_t> candidate_counts;  // |C_k| after pruning, aligned with levels
  std::size_t scans = 0;                      // full database scans == levels.size()

  std::size_t total_frequent() const {
    std::size_t n = 0;
    for (const LevelSet& level : levels) n += level.entries.size();
    return n;
  }
};

// Per-level counters filled when mining is instrumented (see MineOptions).
struct LevelStats {
  std::size_t k = 0;
  std::size_t joined = 0;    // candidates out of the join step
  std::size_t pruned = 0;    // remaining after subset pruning
  std::size_t frequent = 0;  // meeting the threshold
  double millis = 0.0;       // wall clock for the level's pass
};

struct MineOptions {
  unsigned threads = 1;                      // workers for support counting
  std::vector<LevelStats>* stats = nullptr;  // appended per computed level when set
};

// Frequent 1-itemsets with exact counts, ascending by item id.
LevelSet frequent_one(const TransactionDatabase& db, const SupportThreshold& threshold);

// Agrawal-Srikant join of a level with itself: pairs agreeing on all but
// their last item produce one candidate with both last items appended in
// ascending order. Output is lexicographically sorted and duplicate-free.
std::vector<Itemset> join(const LevelSet& prev);

// Keeps the candidates all of whose (k-1)-subsets are members of prev;
// input order is preserved.
std::vector<Itemset> prune(const std::vector<Itemset>& candidates, const LevelSet& prev);

// counts[i] = number of transactions containing candidates[i] as a subset.
// Transactions may be partitioned across threads; results are identical for
// any thread count.
std::vector<std::uint32_t> count_support(const TransactionDatabase& db,
                                         const std::vector<Itemset>& candidates,
                                         unsigned threads = 1);

// Level-wise search: frequent_one, then join -> prune -> count -> filter
// until a level comes up empty. Empty databases yield an empty result.
MiningResult mine(const TransactionDatabase& db, const SupportThreshold& threshold,
                  const MineOptions& options = {});

// Exhaustive reference: enumerates every non-empty subset of the items that
// occur in db and counts it directly. Kept deliberately independent of the
// join/prune/count path so the two can check each other. Throws
// std::domain_error when more than 20 distinct items occur.
MiningResult brute_force_frequent(const TransactionDatabase& db,
                                  const SupportThreshold& threshold);

}  // namespace fpmine
