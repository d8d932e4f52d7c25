#include "fpmine/database.hpp"

#include <algorithm>

namespace fpmine {

void canonicalize(Itemset& items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
}

bool is_canonical(const Itemset& items) {
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (items[i - 1] >= items[i]) return false;
  }
  return true;
}

ItemId ItemCatalog::intern(std::string_view label) {
  if (auto it = index_.find(label); it != index_.end()) return it->second;
  const ItemId id = static_cast<ItemId>(labels_.size());
  labels_.emplace_back(label);
  index_.emplace(labels_.back(), id);
  return id;
}

std::optional<ItemId> ItemCatalog::find(std::string_view label) const {
  if (auto it = index_.find(label); it != index_.end()) return it->second;
  return std::nullopt;
}

std::string format_itemset(const ItemCatalog& catalog, const Itemset& items,
                           std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += separator;
    out += catalog.label(items[i]);
  }
  return out;
}

}  // namespace fpmine
