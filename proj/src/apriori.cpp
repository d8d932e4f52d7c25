#include "fpmine/apriori.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace fpmine {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// C(n, k) saturated at cap; exact below it.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: divides a product of i consecutive integers
    if (r >= cap) return cap;
  }
  return r;
}

// Calls fn(subset) for every k-subset of the sorted sequence, in
// lexicographic order. k = 0 yields the empty set once.
template <typename Fn>
void for_each_k_subset(const Itemset& items, std::size_t k, Fn&& fn) {
  if (k > items.size()) return;
  Itemset subset(k);
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) {
    idx[i] = i;
    subset[i] = items[i];
  }
  while (true) {
    fn(subset);
    // advance the rightmost index that can still move
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == items.size() - k + i - 1) --i;
    if (i == 0) return;
    --i;
    ++idx[i];
    subset[i] = items[idx[i]];
    for (std::size_t j = i + 1; j < k; ++j) {
      idx[j] = idx[j - 1] + 1;
      subset[j] = items[idx[j]];
    }
  }
}

struct CandidateIndex {
  std::size_t k = 0;
  // positions, not a single index: the input list may repeat an itemset
  std::unordered_map<Itemset, std::vector<std::size_t>, ItemsetHash> positions;
};

void count_range(const TransactionDatabase& db, const std::vector<CandidateIndex>& groups,
                 std::size_t begin, std::size_t end, std::vector<std::uint32_t>& counts) {
  std::vector<char> marked(db.catalog.size(), 0);
  for (std::size_t t = begin; t < end; ++t) {
    const Itemset& txn = db.transactions[t];
    for (const CandidateIndex& group : groups) {
      if (group.k > txn.size()) continue;
      const std::uint64_t subsets = binomial_capped(txn.size(), group.k, group.positions.size() + 1);
      if (subsets <= group.positions.size()) {
        // few subsets: enumerate them and probe the index
        for_each_k_subset(txn, group.k, [&](const Itemset& subset) {
          if (auto it = group.positions.find(subset); it != group.positions.end()) {
            for (std::size_t pos : it->second) ++counts[pos];
          }
        });
      } else {
        // few candidates: test each against a mark vector of the transaction
        for (ItemId id : txn) marked[id] = 1;
        for (const auto& [itemset, positions] : group.positions) {
          bool contained = true;
          for (ItemId id : itemset) {
            if (!marked[id]) {
              contained = false;
              break;
            }
          }
          if (contained) {
            for (std::size_t pos : positions) ++counts[pos];
          }
        }
        for (ItemId id : txn) marked[id] = 0;
      }
    }
  }
}

}  // namespace

SupportThreshold SupportThreshold::from_relative(const Ratio& relative, std::size_t num_transactions) {
  if (relative < Ratio(0, 1) || relative > Ratio(1, 1)) {
    throw std::invalid_argument("relative support must lie in [0, 1]");
  }
  const std::int64_t floored =
      relative.num() * static_cast<std::int64_t>(num_transactions) / relative.den();
  return SupportThreshold{relative, static_cast<std::uint32_t>(std::max<std::int64_t>(1, floored))};
}

LevelSet frequent_one(const TransactionDatabase& db, const SupportThreshold& threshold) {
  std::vector<std::uint32_t> counts(db.catalog.size(), 0);
  for (const Itemset& txn : db.transactions) {
    for (ItemId id : txn) ++counts[id];
  }
  LevelSet level{1, {}};
  for (ItemId id = 0; id < counts.size(); ++id) {
    if (counts[id] >= threshold.absolute) level.entries.push_back({{id}, counts[id]});
  }
  return level;
}

std::vector<Itemset> join(const LevelSet& prev) {
  std::vector<Itemset> candidates;
  const auto& entries = prev.entries;
  std::size_t lo = 0;
  while (lo < entries.size()) {
    // block of entries sharing the first k-1 items
    std::size_t hi = lo + 1;
    while (hi < entries.size() &&
           std::equal(entries[lo].items.begin(), entries[lo].items.end() - 1,
                      entries[hi].items.begin(), entries[hi].items.end() - 1)) {
      ++hi;
    }
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < hi; ++j) {
        Itemset candidate = entries[i].items;
        candidate.push_back(entries[j].items.back());
        candidates.push_back(std::move(candidate));
      }
    }
    lo = hi;
  }
  return candidates;
}

std::vector<Itemset> prune(const std::vector<Itemset>& candidates, const LevelSet& prev) {
  std::unordered_set<Itemset, ItemsetHash> members;
  members.reserve(prev.entries.size());
  for (const FrequentItemset& entry : prev.entries) members.insert(entry.items);

  std::vector<Itemset> kept;
  Itemset subset;
  for (const Itemset& candidate : candidates) {
    bool closed = true;
    for (std::size_t drop = 0; drop < candidate.size(); ++drop) {
      subset.clear();
      for (std::size_t i = 0; i < candidate.size(); ++i) {
        if (i != drop) subset.push_back(candidate[i]);
      }
      if (!members.contains(subset)) {
        closed = false;
        break;
      }
    }
    if (closed) kept.push_back(candidate);
  }
  return kept;
}

std::vector<std::uint32_t> count_support(const TransactionDatabase& db,
                                         const std::vector<Itemset>& candidates,
                                         unsigned threads) {
  std::vector<std::uint32_t> counts(candidates.size(), 0);
  if (candidates.empty() || db.transactions.empty()) return counts;

  std::vector<CandidateIndex> groups;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::size_t k = candidates[i].size();
    auto it = std::find_if(groups.begin(), groups.end(),
                           [k](const CandidateIndex& g) { return g.k == k; });
    if (it == groups.end()) {
      groups.push_back(CandidateIndex{k, {}});
      it = groups.end() - 1;
    }
    it->positions[candidates[i]].push_back(i);
  }

  const std::size_t n = db.transactions.size();
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(std::max(1u, threads), n));
  if (workers == 1) {
    count_range(db, groups, 0, n, counts);
    return counts;
  }

  // partial counts per worker, merged by addition: bitwise independent of
  // the partitioning
  std::vector<std::vector<std::uint32_t>> partials(workers,
                                                   std::vector<std::uint32_t>(candidates.size(), 0));
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      count_range(db, groups, begin, end, partials[w]);
    });
  }
  for (std::thread& worker : pool) worker.join();
  for (const auto& partial : partials) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += partial[i];
  }
  return counts;
}

MiningResult mine(const TransactionDatabase& db, const SupportThreshold& threshold,
                  const MineOptions& options) {
  MiningResult result;

  auto start = Clock::now();
  LevelSet level = frequent_one(db, threshold);
  if (options.stats) {
    options.stats->push_back(
        {1, db.catalog.size(), db.catalog.size(), level.entries.size(), millis_since(start)});
  }
  if (level.entries.empty()) return result;
  result.candidate_counts.push_back(db.catalog.size());
  result.levels.push_back(std::move(level));

  while (true) {
    const LevelSet& prev = result.levels.back();
    const std::size_t k = prev.k + 1;
    start = Clock::now();
    const std::vector<Itemset> joined = join(prev);
    std::vector<Itemset> kept = prune(joined, prev);
    if (kept.empty()) {
      if (options.stats) options.stats->push_back({k, joined.size(), 0, 0, millis_since(start)});
      break;
    }
    const std::vector<std::uint32_t> counts = count_support(db, kept, options.threads);
    LevelSet next{k, {}};
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (counts[i] >= threshold.absolute) next.entries.push_back({std::move(kept[i]), counts[i]});
    }
    if (options.stats) {
      options.stats->push_back({k, joined.size(), kept.size(), next.entries.size(), millis_since(start)});
    }
    if (next.entries.empty()) break;
    result.candidate_counts.push_back(kept.size());
    result.levels.push_back(std::move(next));
  }

  result.scans = result.levels.size();
  return result;
}

namespace {

// Self-contained recursive k-combination walk over the occurring items;
// shares nothing with the join/prune/count machinery above.
void enumerate_combinations(const Itemset& universe, std::size_t k, std::size_t from,
                            Itemset& prefix, const TransactionDatabase& db,
                            std::uint32_t min_count, LevelSet& out, std::size_t& examined) {
  if (prefix.size() == k) {
    ++examined;
    std::uint32_t count = 0;
    for (const Itemset& txn : db.transactions) {
      if (std::includes(txn.begin(), txn.end(), prefix.begin(), prefix.end())) ++count;
    }
    if (count >= min_count) out.entries.push_back({prefix, count});
    return;
  }
  for (std::size_t i = from; i + (k - prefix.size()) <= universe.size(); ++i) {
    prefix.push_back(universe[i]);
    enumerate_combinations(universe, k, i + 1, prefix, db, min_count, out, examined);
    prefix.pop_back();
  }
}

}  // namespace

MiningResult brute_force_frequent(const TransactionDatabase& db,
                                  const SupportThreshold& threshold) {
  Itemset occurring;
  {
    std::vector<char> seen(db.catalog.size(), 0);
    for (const Itemset& txn : db.transactions) {
      for (ItemId id : txn) seen[id] = 1;
    }
    for (ItemId id = 0; id < seen.size(); ++id) {
      if (seen[id]) occurring.push_back(id);
    }
  }
  if (occurring.size() > 20) {
    throw std::domain_error("brute_force_frequent: " + std::to_string(occurring.size()) +
                            " distinct items exceed the 2^20 enumeration guard");
  }

  MiningResult result;
  for (std::size_t k = 1; k <= occurring.size(); ++k) {
    LevelSet level{k, {}};
    std::size_t examined = 0;
    Itemset prefix;
    enumerate_combinations(occurring, k, 0, prefix, db, threshold.absolute, level, examined);
    if (level.entries.empty()) break;
    result.candidate_counts.push_back(examined);
    result.levels.push_back(std::move(level));
  }
  result.scans = result.levels.size();
  return result;
}

}  // namespace fpmine
