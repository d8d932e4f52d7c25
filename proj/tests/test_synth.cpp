#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fpmine/synth.hpp"

using namespace fpmine;

namespace {

GenParams shaped(std::size_t transactions, double t, double i, std::size_t items,
                 std::size_t patterns, std::uint64_t seed) {
  GenParams params;
  params.num_transactions = transactions;
  params.avg_transaction_length = t;
  params.avg_pattern_length = i;
  params.num_items = items;
  params.num_patterns = patterns;
  params.seed = seed;
  return params;
}

}  // namespace

TEST_CASE("splitmix64 matches the published output sequence") {
  // reference vectors computed independently from the three constants
  SplitMix64 zero(0);
  CHECK(zero.next() == 0xE220A8397B1DCDAFULL);
  CHECK(zero.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(zero.next() == 0x06C45D188009454FULL);
  CHECK(zero.next() == 0xF88BB8A8724C81ECULL);
  CHECK(zero.next() == 0x1B39896A51A8749BULL);

  SplitMix64 fortytwo(42);
  CHECK(fortytwo.next() == 0xBDD732262FEB6E95ULL);
  CHECK(fortytwo.next() == 0x28EFE333B266F103ULL);

  SplitMix64 beef(0xDEADBEEFULL);
  CHECK(beef.next() == 0x4ADFB90F68C9EB9BULL);
  CHECK(beef.next() == 0xDE586A3141A10922ULL);
}

TEST_CASE("unit doubles and bounded draws are reproducible") {
  SplitMix64 rng(42);
  CHECK(rng.next_unit() == 0.7415648787718233);
  CHECK(rng.next_unit() == 0.1599103928769201);
  CHECK(rng.next_unit() == 0.27860113025513866);

  SplitMix64 seven(7);
  const std::vector<std::uint64_t> expected = {11, 48, 22, 47, 10, 45};
  for (std::uint64_t want : expected) {
    CHECK(seven.next_below(52) == want);
  }
}

TEST_CASE("unit doubles stay in the half-open interval") {
  SplitMix64 rng(99);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("poisson sampling hits the requested mean") {
  SplitMix64 rng(2024);
  const auto sample_mean = [&rng](double mean, int draws) {
    std::uint64_t total = 0;
    for (int i = 0; i < draws; ++i) {
      total += poisson(rng, mean);
    }
    return static_cast<double>(total) / draws;
  };

  CHECK(sample_mean(4.0, 20000) == doctest::Approx(4.0).epsilon(0.05));
  // means above 30 go through the recursive split
  CHECK(sample_mean(50.0, 5000) == doctest::Approx(50.0).epsilon(0.05));
  CHECK(poisson(rng, 0.0) == 0);

  SplitMix64 a(5), b(5);
  for (int i = 0; i < 100; ++i) {
    CHECK(poisson(a, 7.5) == poisson(b, 7.5));
  }
}

TEST_CASE("parameter validation catches each violation") {
  CHECK_NOTHROW(shaped(100, 10, 4, 50, 10, 1).validate());
  CHECK_THROWS_AS(shaped(0, 10, 4, 50, 10, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(shaped(100, 0, 4, 50, 10, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(shaped(100, 10, 0, 50, 10, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(shaped(100, 10, 4, 0, 10, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(shaped(100, 10, 4, 50, 0, 1).validate(), std::invalid_argument);
  // avgPattern > avgTransaction and avgTransaction > items
  CHECK_THROWS_AS(shaped(100, 4, 10, 50, 10, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(shaped(100, 60, 4, 50, 10, 1).validate(), std::invalid_argument);
}

TEST_CASE("generation is a pure function of the parameters") {
  const GenParams params = shaped(200, 8, 3, 64, 12, 0xFEEDULL);
  const TransactionDatabase a = generate(params);
  const TransactionDatabase b = generate(params);
  CHECK(a == b);

  GenParams reseeded = params;
  reseeded.seed = 0xFEED + 1;
  CHECK(!(generate(reseeded) == a));
}

TEST_CASE("generated databases are well formed") {
  const GenParams params = shaped(500, 6, 2, 40, 8, 31337);
  const TransactionDatabase db = generate(params);

  CHECK(db.size() == 500);
  CHECK(db.catalog.size() == 40);
  CHECK(db.catalog.label(0) == "item0");
  CHECK(db.catalog.label(39) == "item39");
  for (const Itemset& txn : db.transactions) {
    CHECK(!txn.empty());
    CHECK(txn.size() <= 40);
    CHECK(is_canonical(txn));
    CHECK(txn.back() < 40);
  }
}

TEST_CASE("a single-item universe produces single-item transactions") {
  const TransactionDatabase db = generate(shaped(50, 1, 1, 1, 3, 9));
  CHECK(db.size() == 50);
  for (const Itemset& txn : db.transactions) {
    CHECK(txn == Itemset{0});
  }
}

TEST_CASE("the empirical mean length tracks the T parameter") {
  for (std::uint64_t seed : {1ULL, 77ULL, 4096ULL}) {
    const TransactionDatabase db = generate(shaped(2000, 8, 3, 120, 20, seed));
    std::size_t total = 0;
    for (const Itemset& txn : db.transactions) {
      total += txn.size();
    }
    const double mean = static_cast<double>(total) / static_cast<double>(db.size());
    CHECK(mean == doctest::Approx(8.0).epsilon(0.15));
  }
}

TEST_CASE("pattern reuse makes pattern items collide across transactions") {
  // with few patterns, the generated data is skewed: the most common item
  // must be well above the uniform expectation T/numItems
  const TransactionDatabase db = generate(shaped(2000, 10, 4, 200, 5, 123));
  std::vector<std::size_t> counts(db.catalog.size(), 0);
  for (const Itemset& txn : db.transactions) {
    for (ItemId id : txn) {
      ++counts[id];
    }
  }
  std::size_t best = 0;
  for (std::size_t c : counts) {
    best = std::max(best, c);
  }
  // uniform would put ~2000 * 10 / 200 = 100 on each item
  CHECK(best > 200);
}
