#include "fpmine/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fpmine {

std::uint64_t poisson(SplitMix64& rng, double mean) {
  if (mean <= 0) {
    return 0;
  }
  if (mean > 30) {
    const double half = mean / 2;
    return poisson(rng, half) + poisson(rng, mean - half);
  }
  const double limit = std::exp(-mean);
  std::uint64_t k = 0;
  double product = rng.next_unit();
  while (product > limit) {
    ++k;
    product *= rng.next_unit();
  }
  return k;
}

void GenParams::validate() const {
  if (num_transactions == 0) {
    throw std::invalid_argument("number of transactions must be positive");
  }
  if (!(avg_transaction_length > 0)) {
    throw std::invalid_argument("average transaction length must be positive");
  }
  if (!(avg_pattern_length > 0)) {
    throw std::invalid_argument("average pattern length must be positive");
  }
  if (num_items == 0) {
    throw std::invalid_argument("number of items must be positive");
  }
  if (num_patterns == 0) {
    throw std::invalid_argument("number of patterns must be positive");
  }
  if (avg_pattern_length > avg_transaction_length) {
    throw std::invalid_argument(
        "average pattern length must not exceed average transaction length");
  }
  if (avg_transaction_length > static_cast<double>(num_items)) {
    throw std::invalid_argument(
        "average transaction length must not exceed the number of items");
  }
}

namespace {

// size distinct items, uniform over the universe: a partial Fisher-Yates
// shuffle of the identity permutation, re-used across calls.
Itemset draw_distinct(SplitMix64& rng, std::vector<ItemId>& scratch,
                      std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(
                                  rng.next_below(scratch.size() - i));
    std::swap(scratch[i], scratch[j]);
  }
  Itemset picked(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(size));
  canonicalize(picked);
  return picked;
}

std::size_t clamp_size(std::uint64_t drawn, std::size_t num_items) {
  if (drawn < 1) {
    return 1;
  }
  return std::min<std::size_t>(static_cast<std::size_t>(drawn), num_items);
}

bool insert_if_absent(Itemset& txn, ItemId item) {
  auto pos = std::lower_bound(txn.begin(), txn.end(), item);
  if (pos != txn.end() && *pos == item) {
    return false;
  }
  txn.insert(pos, item);
  return true;
}

}  // namespace

TransactionDatabase generate(const GenParams& params) {
  params.validate();

  TransactionDatabase db;
  for (std::size_t i = 0; i < params.num_items; ++i) {
    db.catalog.intern("item" + std::to_string(i));
  }

  SplitMix64 rng(params.seed);
  std::vector<ItemId> scratch(params.num_items);
  std::iota(scratch.begin(), scratch.end(), ItemId{0});

  std::vector<Itemset> patterns;
  patterns.reserve(params.num_patterns);
  for (std::size_t i = 0; i < params.num_patterns; ++i) {
    const std::size_t size =
        clamp_size(poisson(rng, params.avg_pattern_length), params.num_items);
    patterns.push_back(draw_distinct(rng, scratch, size));
  }

  db.transactions.reserve(params.num_transactions);
  for (std::size_t t = 0; t < params.num_transactions; ++t) {
    const std::size_t target =
        clamp_size(poisson(rng, params.avg_transaction_length), params.num_items);

    Itemset txn;
    // Compose from base patterns, dropping each item with probability 1/2
    // (the corruption step). The draw budget is capped so a run of patterns
    // whose items are already present cannot loop forever.
    for (std::size_t draws = 0; txn.size() < target && draws < 2 * target; ++draws) {
      const Itemset& pattern =
          patterns[static_cast<std::size_t>(rng.next_below(patterns.size()))];
      for (ItemId item : pattern) {
        if (rng.next_unit() < 0.5) {
          continue;
        }
        insert_if_absent(txn, item);
        if (txn.size() == target) {
          break;
        }
      }
    }
    // Pad with uniform random items until the target length is reached.
    while (txn.size() < target) {
      insert_if_absent(txn, static_cast<ItemId>(rng.next_below(params.num_items)));
    }
    db.transactions.push_back(std::move(txn));
  }
  return db;
}

}  // namespace fpmine
