#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fpmine/database.hpp"

namespace fpmine {

// Parse failure, carrying the 1-based input line it was detected on.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct ArffAttribute {
  std::string name;
  std::vector<std::string> values;  // declared nominal domain, in order
};

struct ArffDataset {
  std::string relation;
  std::vector<ArffAttribute> attributes;
  // one row per instance, one declared-value index per attribute
  std::vector<std::vector<std::uint32_t>> instances;
};

// Supported ARFF subset: `@relation <name>`, nominal `@attribute <name>
// {v1, v2, ...}` declarations, `@data`, CSV rows. Keywords are
// case-insensitive; '%' comment lines and blank lines are ignored. Values
// are case-sensitive and unquoted.
ArffDataset parse_arff(std::string_view text);

// Default item mapping: one catalog item per (attribute, declared value)
// pair, labelled "name=value", in declaration order; every instance becomes
// a transaction with exactly one item per attribute.
TransactionDatabase arff_to_transactions(const ArffDataset& dataset);

// Basket-style mapping: items are attribute names (one per attribute, in
// declaration order) and a transaction holds the attributes whose observed
// value equals present_value. Throws std::invalid_argument if some
// attribute does not declare present_value.
TransactionDatabase arff_to_transactions(const ArffDataset& dataset,
                                         std::string_view present_value);

// Basket text: one transaction per non-blank line, items separated by
// commas and/or whitespace, optional "<id>:" prefix (everything before the
// first ':' on a line), '#' comment lines. Items are interned in
// first-occurrence order; duplicate labels within a line collapse. Item
// labels must not contain ':', ',', '#' or whitespace.
TransactionDatabase parse_basket(std::string_view text);

// Inverse of parse_basket for databases whose items all occur: re-parsing
// the rendered text yields an identical database. Transactions that are
// empty are not representable and are skipped.
std::string render_basket(const TransactionDatabase& db);

// One TRUE/FALSE attribute per catalog item; a row holds TRUE exactly for
// the items of its transaction.
std::string render_arff(const TransactionDatabase& db, std::string_view relation);

std::string render_arff(const ArffDataset& dataset);

}  // namespace fpmine
