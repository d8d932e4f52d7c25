#include "fpmine/rules.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace fpmine {

std::vector<AssociationRule> generate_rules(const MiningResult& result,
                                            const Ratio& min_confidence) {
  if (min_confidence < Ratio(0, 1) || min_confidence > Ratio(1, 1)) {
    throw std::invalid_argument("min_confidence must lie in [0, 1]");
  }

  std::unordered_map<Itemset, std::uint32_t, ItemsetHash> support;
  for (const LevelSet& level : result.levels) {
    for (const FrequentItemset& entry : level.entries) support.emplace(entry.items, entry.count);
  }

  std::vector<AssociationRule> rules;
  Itemset antecedent;
  Itemset consequent;
  for (const LevelSet& level : result.levels) {
    if (level.k < 2) continue;
    for (const FrequentItemset& whole : level.entries) {
      const std::size_t size = whole.items.size();
      // split masks: bit p sends items[p] to the antecedent
      for (std::uint32_t mask = 1; mask + 1 < (1u << size); ++mask) {
        antecedent.clear();
        consequent.clear();
        for (std::size_t p = 0; p < size; ++p) {
          ((mask >> p) & 1u ? antecedent : consequent).push_back(whole.items[p]);
        }
        const auto it = support.find(antecedent);
        if (it == support.end()) {
          throw std::logic_error("generate_rules: mining result lacks the support of a subset; "
                                 "downward closure violated");
        }
        // whole.count / it->second >= min_confidence, cross-multiplied
        if (Ratio(whole.count, it->second) >= min_confidence) {
          rules.push_back({antecedent, consequent, it->second, whole.count});
        }
      }
    }
  }
  return rules;
}

bool rule_order_before(const AssociationRule& a, const AssociationRule& b) {
  const std::uint64_t conf_a = static_cast<std::uint64_t>(a.rule_count) * b.antecedent_count;
  const std::uint64_t conf_b = static_cast<std::uint64_t>(b.rule_count) * a.antecedent_count;
  if (conf_a != conf_b) return conf_a > conf_b;
  if (a.rule_count != b.rule_count) return a.rule_count > b.rule_count;
  if (a.antecedent.size() != b.antecedent.size()) return a.antecedent.size() < b.antecedent.size();
  if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
  return a.consequent < b.consequent;
}

std::vector<AssociationRule> rank(std::vector<AssociationRule> rules, std::size_t limit) {
  std::sort(rules.begin(), rules.end(), rule_order_before);
  if (rules.size() > limit) rules.resize(limit);
  return rules;
}

}  // namespace fpmine
