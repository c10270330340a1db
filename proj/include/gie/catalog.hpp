#pragma once

#include "gie/core.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gie {

struct CatalogEntry {
    std::string id;
    StdState state;
    StateClass class_tag = StateClass::Generic;
    std::map<std::string, double> expected;

    std::optional<double> get(const std::string& key) const;
};

/// Fixed list of reference states, in a stable order.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& id);

}  // namespace gie
