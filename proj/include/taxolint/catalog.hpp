#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taxolint/profile.hpp"

namespace taxolint {

enum class Category {
    Aggregate,
    AmountOfMatter,
    Plurality,
    Object,
    PhysicalBody,
    OrdinaryObject,
    Event,
    Feature,
    Quality,
    Abstraction,
};

struct CategoryProfile {
    Category category;
    MetaProfile profile;          // all catalog categories are rigid
    bool no_proper_parts = false; // catalog note on Quality; not graph-checked
};

// The fixed built-in top-level category catalog.
const std::vector<CategoryProfile>& category_catalog();

const CategoryProfile& catalog_entry(Category c);

std::string to_string(Category c);
std::optional<Category> category_from_string(const std::string& name);

}  // namespace taxolint
