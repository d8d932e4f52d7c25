#include "fpmine/weka.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace fpmine {
namespace {

bool rules_qualify(const std::vector<AssociationRule>& rules, int wanted) {
  return rules.size() >= static_cast<std::size_t>(wanted);
}

}  // namespace

void WekaParams::validate() const {
  if (num_rules < 1) {
    throw std::invalid_argument("number of rules must be at least 1");
  }
  if (metric != MetricType::kConfidence) {
    throw std::invalid_argument("unsupported metric type");
  }
  if (min_metric < Ratio(0, 1) || min_metric > Ratio(1, 1)) {
    throw std::invalid_argument("minimum metric must lie in [0, 1]");
  }
  if (!(delta > Ratio(0, 1))) {
    throw std::invalid_argument("delta must be positive");
  }
  if (upper_bound < Ratio(0, 1) || upper_bound > Ratio(1, 1)) {
    throw std::invalid_argument("upper bound must lie in [0, 1]");
  }
  if (lower_bound < Ratio(0, 1) || lower_bound > upper_bound) {
    throw std::invalid_argument("lower bound must lie in [0, upper bound]");
  }
}

WekaRun run_associator(const TransactionDatabase& db, const WekaParams& params,
                       unsigned threads) {
  params.validate();
  if (db.transactions.empty()) {
    throw std::invalid_argument("cannot run the associator on an empty database");
  }

  WekaRun run;
  run.instances = db.size();
  run.params = params;
  run.final_min_support = params.upper_bound;

  MineOptions options;
  options.threads = threads;

  bool have_cycle = false;
  for (std::size_t i = 1;; ++i) {
    const Ratio support = params.upper_bound - params.delta * static_cast<std::int64_t>(i);
    if (support < params.lower_bound) {
      break;  // would undershoot the floor; keep the previous cycle
    }

    const SupportThreshold threshold = SupportThreshold::from_relative(support, db.size());
    MiningResult result = mine(db, threshold, options);
    std::vector<AssociationRule> rules = generate_rules(result, params.min_metric);

    run.final_min_support = support;
    run.required_count = threshold.absolute;
    run.cycles = i;
    have_cycle = true;

    if (rules_qualify(rules, params.num_rules)) {
      run.best_rules = rank(std::move(rules), static_cast<std::size_t>(params.num_rules));
      run.levels = std::move(result);
      return run;
    }
    run.best_rules = rank(std::move(rules), static_cast<std::size_t>(params.num_rules));
    run.levels = std::move(result);
  }

  if (!have_cycle) {
    run.final_min_support = params.upper_bound;
    run.required_count = 0;
    run.cycles = 0;
    run.levels = MiningResult{};
    run.best_rules.clear();
  }
  return run;
}

std::string format_metric(const Ratio& value) {
  // Hundredths, rounded half-up: h = floor((200p + q) / (2q)) for p/q >= 0.
  const std::int64_t p = value.num();
  const std::int64_t q = value.den();
  const std::int64_t hundredths = (200 * p + q) / (2 * q);
  std::string out = std::to_string(hundredths / 100);
  const std::int64_t frac = hundredths % 100;
  if (frac != 0) {
    out += '.';
    out += static_cast<char>('0' + frac / 10);
    if (frac % 10 != 0) {
      out += static_cast<char>('0' + frac % 10);
    }
  }
  return out;
}

std::string format_rule(const ItemCatalog& catalog, const AssociationRule& rule) {
  std::ostringstream out;
  out << format_itemset(catalog, rule.antecedent) << ' ' << rule.antecedent_count
      << " ==> " << format_itemset(catalog, rule.consequent) << ' ' << rule.rule_count
      << "    conf:(" << format_metric(rule.confidence()) << ')';
  return out.str();
}

std::string format_report(const WekaRun& run, const ItemCatalog& catalog,
                          const std::string& relation, const std::string& scheme,
                          const std::vector<std::string>& attribute_names) {
  std::ostringstream out;
  out << "==== Run information ====\n\n";
  out << "Scheme:       " << scheme << '\n';
  out << "Relation:     " << relation << '\n';
  out << "Instances:    " << run.instances << '\n';
  out << "Attributes:   " << attribute_names.size() << '\n';
  for (const std::string& name : attribute_names) {
    out << "              " << name << '\n';
  }
  out << "\n==== Associator model (full training set) ====\n\n";
  out << "Apriori\n=====\n\n";
  out << "Minimum support: " << to_scheme_decimal(run.final_min_support) << " ("
      << run.required_count << " instances)\n";
  out << "Minimum metric <confidence>: " << to_scheme_decimal(run.params.min_metric) << '\n';
  out << "Number of cycles performed: " << run.cycles << '\n';
  out << "\nGenerated sets of large itemsets:\n";
  for (const LevelSet& level : run.levels.levels) {
    out << "\nSize of set of large itemsets L(" << level.k << "): "
        << level.entries.size() << '\n';
  }
  out << "\nBest rules found:\n\n";
  int width = 1;
  for (std::size_t n = run.best_rules.size(); n >= 10; n /= 10) {
    ++width;
  }
  for (std::size_t i = 0; i < run.best_rules.size(); ++i) {
    std::string index = std::to_string(i + 1);
    out << std::string(static_cast<std::size_t>(width) - index.size(), ' ') << index
        << ". " << format_rule(catalog, run.best_rules[i]) << '\n';
  }
  return out.str();
}

}  // namespace fpmine
