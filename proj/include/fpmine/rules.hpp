#pragma once

#include <cstdint>
#include <vector>

#include "fpmine/apriori.hpp"
#include "fpmine/database.hpp"
#include "fpmine/rational.hpp"

namespace fpmine {

// antecedent => consequent, both non-empty and disjoint. Confidence is the
// exact count quotient; it only leaves rational form for display.
struct AssociationRule {
  Itemset antecedent;
  Itemset consequent;
  std::uint32_t antecedent_count = 0;  // support of the antecedent
  std::uint32_t rule_count = 0;        // support of antecedent ∪ consequent

  Ratio confidence() const { return Ratio(rule_count, antecedent_count); }

  friend bool operator==(const AssociationRule& a, const AssociationRule& b) {
    return a.antecedent == b.antecedent && a.consequent == b.consequent &&
           a.antecedent_count == b.antecedent_count && a.rule_count == b.rule_count;
  }
};

// Emits A => Z\A for every frequent Z with |Z| >= 2 and every non-empty
// proper subset A, keeping rules whose confidence is >= min_confidence
// (compared exactly; boundary rules are kept). All counts are read from the
// result; a subset count missing from it (a downward-closure violation)
// raises std::logic_error.
std::vector<AssociationRule> generate_rules(const MiningResult& result, const Ratio& min_confidence);

// Ranking order: confidence desc, rule count desc, antecedent size asc,
// antecedent lexicographic, consequent lexicographic. Total on distinct rules.
bool rule_order_before(const AssociationRule& a, const AssociationRule& b);

std::vector<AssociationRule> rank(std::vector<AssociationRule> rules, std::size_t limit);

}  // namespace fpmine
