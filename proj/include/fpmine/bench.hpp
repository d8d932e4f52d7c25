#pragma once

#include <string>
#include <vector>

#include "fpmine/apriori.hpp"
#include "fpmine/database.hpp"
#include "fpmine/rational.hpp"

namespace fpmine {

// One instrumented mining run: a row of counters per level pass plus totals.
struct BenchReport {
  Ratio threshold;                   // relative minimum support
  std::uint32_t required_count = 0;  // absolute count at this threshold
  std::vector<LevelStats> rows;      // one per computed level, terminating pass included
  std::size_t scans = 0;             // full database scans
  std::size_t total_frequent = 0;
  double total_millis = 0.0;
};

BenchReport bench_one(const TransactionDatabase& db, const Ratio& threshold,
                      unsigned threads = 1);

// One report per threshold, in the given order.
std::vector<BenchReport> bench(const TransactionDatabase& db,
                               const std::vector<Ratio>& thresholds,
                               unsigned threads = 1);

// Aligned table, one row per level. Timings are wall-clock and vary between
// runs, so they are only included when asked for; without them the output is
// a pure function of the input database.
std::string format_bench_text(const BenchReport& report, bool with_timings);

// CSV block: a "# minsup=<s> ..." comment line, a header, one row per level
// ("level,join,prune,frequent,millis"). millis is 0 unless with_timings.
std::string format_bench_csv(const BenchReport& report, bool with_timings);

}  // namespace fpmine
