#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fpmine {

// Dense item index, contiguous from 0 in catalog insertion order.
using ItemId = std::uint32_t;

// Canonical itemset: ids strictly ascending, no duplicates. A k-itemset is
// simply an Itemset of length k; transactions use the same representation.
using Itemset = std::vector<ItemId>;

void canonicalize(Itemset& items);
bool is_canonical(const Itemset& items);

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

// Bijective label <-> id interning. Ids are assigned in insertion order.
class ItemCatalog {
 public:
  ItemId intern(std::string_view label);
  std::optional<ItemId> find(std::string_view label) const;

  const std::string& label(ItemId id) const { return labels_.at(id); }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const ItemCatalog& a, const ItemCatalog& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, ItemId, StringHash, std::equal_to<>> index_;
};

struct TransactionDatabase {
  ItemCatalog catalog;
  std::vector<Itemset> transactions;

  std::size_t size() const noexcept { return transactions.size(); }

  friend bool operator==(const TransactionDatabase& a, const TransactionDatabase& b) {
    return a.catalog == b.catalog && a.transactions == b.transactions;
  }
};

std::string format_itemset(const ItemCatalog& catalog, const Itemset& items,
                           std::string_view separator = " ");

struct ItemsetHash {
  std::size_t operator()(const Itemset& items) const noexcept {
    // FNV-1a over the id words
    std::uint64_t h = 1469598103934665603ull;
    for (ItemId id : items) {
      h ^= id;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace fpmine
