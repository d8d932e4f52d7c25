#include "fpmine/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace fpmine {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Walks input line by line, tracking 1-based line numbers. A trailing
// newline terminates the last line instead of opening an empty one.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : rest_(text), more_(!text.empty()) {}

  bool next(std::string_view& line) {
    if (!more_) return false;
    const std::size_t nl = rest_.find('\n');
    if (nl == std::string_view::npos) {
      line = rest_;
      rest_ = {};
      more_ = false;
    } else {
      line = rest_.substr(0, nl);
      rest_.remove_prefix(nl + 1);
      more_ = !rest_.empty();
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number_;
    return true;
  }

  std::size_t number() const noexcept { return number_; }

 private:
  std::string_view rest_;
  std::size_t number_ = 0;
  bool more_ = false;
};

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

}  // namespace

ArffDataset parse_arff(std::string_view text) {
  ArffDataset ds;
  LineReader reader(text);
  std::string_view line;

  bool saw_relation = false;
  bool in_data = false;
  std::unordered_set<std::string> attr_names;
  // per-attribute value -> index, for row decoding
  std::vector<std::unordered_map<std::string, std::uint32_t, StringHash, std::equal_to<>>> domains;

  while (reader.next(line)) {
    const std::string_view trimmed = trim(line);
    if (trimmed.empty() || trimmed.front() == '%') continue;

    if (!in_data && trimmed.front() == '@') {
      const std::size_t ws = trimmed.find_first_of(" \t");
      const std::string keyword = to_lower(trimmed.substr(0, ws));
      const std::string_view rest =
          ws == std::string_view::npos ? std::string_view{} : trim(trimmed.substr(ws));

      if (keyword == "@relation") {
        if (saw_relation) throw ParseError(reader.number(), "duplicate @relation");
        if (rest.empty()) throw ParseError(reader.number(), "@relation without a name");
        ds.relation = std::string(rest);
        saw_relation = true;
      } else if (keyword == "@attribute") {
        if (!saw_relation) throw ParseError(reader.number(), "@attribute before @relation");
        const std::size_t brace = rest.find('{');
        if (brace == std::string_view::npos) {
          throw ParseError(reader.number(),
                           "only nominal attributes are supported: missing '{' in '" +
                               std::string(rest) + "'");
        }
        const std::string name(trim(rest.substr(0, brace)));
        if (name.empty()) throw ParseError(reader.number(), "attribute without a name");
        if (!attr_names.insert(name).second) {
          throw ParseError(reader.number(), "duplicate attribute name '" + name + "'");
        }
        const std::size_t close = rest.find('}', brace);
        if (close == std::string_view::npos || !trim(rest.substr(close + 1)).empty()) {
          throw ParseError(reader.number(), "malformed value list for attribute '" + name + "'");
        }
        ArffAttribute attr{name, {}};
        auto& domain = domains.emplace_back();
        for (std::string_view value : split_csv(rest.substr(brace + 1, close - brace - 1))) {
          if (value.empty()) {
            throw ParseError(reader.number(), "empty value in attribute '" + name + "'");
          }
          if (!domain.emplace(std::string(value), static_cast<std::uint32_t>(attr.values.size())).second) {
            throw ParseError(reader.number(),
                             "duplicate value '" + std::string(value) + "' in attribute '" + name + "'");
          }
          attr.values.emplace_back(value);
        }
        ds.attributes.push_back(std::move(attr));
      } else if (keyword == "@data") {
        if (!saw_relation || ds.attributes.empty()) {
          throw ParseError(reader.number(), "@data before @relation/@attribute declarations");
        }
        in_data = true;
      } else {
        throw ParseError(reader.number(), "unsupported directive '" + keyword + "'");
      }
      continue;
    }

    if (!in_data) {
      throw ParseError(reader.number(), "unexpected content before @data");
    }

    const std::vector<std::string_view> fields = split_csv(trimmed);
    if (fields.size() != ds.attributes.size()) {
      throw ParseError(reader.number(), "row has " + std::to_string(fields.size()) +
                                            " values, expected " +
                                            std::to_string(ds.attributes.size()));
    }
    std::vector<std::uint32_t> row(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const auto it = domains[i].find(fields[i]);
      if (it == domains[i].end()) {
        throw ParseError(reader.number(), "value '" + std::string(fields[i]) +
                                              "' not in the declared domain of attribute '" +
                                              ds.attributes[i].name + "'");
      }
      row[i] = it->second;
    }
    ds.instances.push_back(std::move(row));
  }

  if (!in_data) throw ParseError(reader.number(), "missing @data section");
  return ds;
}

TransactionDatabase arff_to_transactions(const ArffDataset& dataset) {
  TransactionDatabase db;
  // item id = catalog position of "name=value", declaration order
  std::vector<std::uint32_t> offsets(dataset.attributes.size());
  for (std::size_t a = 0; a < dataset.attributes.size(); ++a) {
    offsets[a] = static_cast<std::uint32_t>(db.catalog.size());
    for (const std::string& value : dataset.attributes[a].values) {
      db.catalog.intern(dataset.attributes[a].name + "=" + value);
    }
  }
  db.transactions.reserve(dataset.instances.size());
  for (const auto& row : dataset.instances) {
    Itemset txn(row.size());
    for (std::size_t a = 0; a < row.size(); ++a) txn[a] = offsets[a] + row[a];
    db.transactions.push_back(std::move(txn));
  }
  return db;
}

TransactionDatabase arff_to_transactions(const ArffDataset& dataset,
                                         std::string_view present_value) {
  TransactionDatabase db;
  std::vector<std::uint32_t> present_index(dataset.attributes.size());
  for (std::size_t a = 0; a < dataset.attributes.size(); ++a) {
    const auto& values = dataset.attributes[a].values;
    const auto it = std::find(values.begin(), values.end(), present_value);
    if (it == values.end()) {
      throw std::invalid_argument("attribute '" + dataset.attributes[a].name +
                                  "' does not declare value '" + std::string(present_value) + "'");
    }
    present_index[a] = static_cast<std::uint32_t>(it - values.begin());
    db.catalog.intern(dataset.attributes[a].name);
  }
  db.transactions.reserve(dataset.instances.size());
  for (const auto& row : dataset.instances) {
    Itemset txn;
    for (std::size_t a = 0; a < row.size(); ++a) {
      if (row[a] == present_index[a]) txn.push_back(static_cast<ItemId>(a));
    }
    db.transactions.push_back(std::move(txn));
  }
  return db;
}

TransactionDatabase parse_basket(std::string_view text) {
  TransactionDatabase db;
  LineReader reader(text);
  std::string_view line;
  while (reader.next(line)) {
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    bool had_prefix = false;
    if (const std::size_t colon = body.find(':'); colon != std::string_view::npos) {
      body = trim(body.substr(colon + 1));
      had_prefix = true;
    }

    Itemset txn;
    std::size_t pos = 0;
    while (pos < body.size()) {
      const std::size_t sep = body.find_first_of(", \t", pos);
      const std::string_view label =
          body.substr(pos, sep == std::string_view::npos ? sep : sep - pos);
      if (!label.empty()) txn.push_back(db.catalog.intern(label));
      if (sep == std::string_view::npos) break;
      pos = sep + 1;
    }
    if (txn.empty()) {
      if (had_prefix) throw ParseError(reader.number(), "transaction with no items");
      continue;  // separators only, treat like a blank line
    }
    canonicalize(txn);
    db.transactions.push_back(std::move(txn));
  }
  return db;
}

std::string render_basket(const TransactionDatabase& db) {
  std::string out;
  for (const Itemset& txn : db.transactions) {
    if (txn.empty()) continue;
    out += format_itemset(db.catalog, txn, ", ");
    out += '\n';
  }
  return out;
}

std::string render_arff(const TransactionDatabase& db, std::string_view relation) {
  std::string out;
  out += "@relation ";
  out += relation;
  out += '\n';
  for (const std::string& label : db.catalog.labels()) {
    out += "@attribute " + label + " {TRUE, FALSE}\n";
  }
  out += "@data\n";
  std::vector<char> present(db.catalog.size());
  for (const Itemset& txn : db.transactions) {
    std::fill(present.begin(), present.end(), 0);
    for (ItemId id : txn) present[id] = 1;
    for (std::size_t i = 0; i < present.size(); ++i) {
      if (i > 0) out += ',';
      out += present[i] ? "TRUE" : "FALSE";
    }
    out += '\n';
  }
  return out;
}

std::string render_arff(const ArffDataset& dataset) {
  std::string out;
  out += "@relation " + dataset.relation + "\n";
  for (const ArffAttribute& attr : dataset.attributes) {
    out += "@attribute " + attr.name + " {";
    for (std::size_t i = 0; i < attr.values.size(); ++i) {
      if (i > 0) out += ", ";
      out += attr.values[i];
    }
    out += "}\n";
  }
  out += "@data\n";
  for (const auto& row : dataset.instances) {
    for (std::size_t a = 0; a < row.size(); ++a) {
      if (a > 0) out += ',';
      out += dataset.attributes[a].values[row[a]];
    }
    out += '\n';
  }
  return out;
}

}  // namespace fpmine
