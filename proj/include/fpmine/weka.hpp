#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpmine/apriori.hpp"
#include "fpmine/database.hpp"
#include "fpmine/rational.hpp"
#include "fpmine/rules.hpp"

namespace fpmine {

enum class MetricType {
  kConfidence = 0,  // -T 0; the only supported metric
};

struct WekaParams {
  int num_rules = 10;                            // -N
  MetricType metric = MetricType::kConfidence;   // -T
  Ratio min_metric{9, 10};                       // -C
  Ratio delta{1, 20};                            // -D
  Ratio upper_bound{1, 1};                       // -U
  Ratio lower_bound{1, 10};                      // -M

  void validate() const;  // throws std::invalid_argument
};

struct WekaRun {
  Ratio final_min_support;          // support of the last completed cycle
  std::uint32_t required_count = 0; // absolute count at that support
  std::size_t cycles = 0;
  MiningResult levels;              // mining result of the final cycle
  std::vector<AssociationRule> best_rules;  // ranked, at most num_rules
  std::size_t instances = 0;
  WekaParams params;
};

// Iterative support lowering: cycle i mines at upper_bound - i*delta (exact
// decimal arithmetic) and stops once at least num_rules rules reach
// min_metric, or once the next support would drop below lower_bound (that
// aborted cycle is not counted; the previous cycle's results are returned,
// or an empty run with cycles = 0 if none completed).
WekaRun run_associator(const TransactionDatabase& db, const WekaParams& params,
                       unsigned threads = 1);

// Metric rendering: round half-up to two decimals, strip trailing zeros and
// a trailing point. 11/15 -> "0.73", 1 -> "1", 7/10 -> "0.7".
std::string format_metric(const Ratio& value);

std::string format_rule(const ItemCatalog& catalog, const AssociationRule& rule);

// The associator text report: run-information header, "Apriori" banner,
// support/metric/cycle lines, per-level sizes, and the numbered best-rule
// listing. Pure function of its arguments.
std::string format_report(const WekaRun& run, const ItemCatalog& catalog,
                          const std::string& relation, const std::string& scheme,
                          const std::vector<std::string>& attribute_names);

}  // namespace fpmine
