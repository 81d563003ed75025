#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "taxolint/annotations.hpp"
#include "taxolint/catalog.hpp"
#include "taxolint/checker.hpp"
#include "taxolint/taxonomy.hpp"

namespace taxolint {

struct BackboneResult {
    Taxonomy backbone;
    std::vector<std::string> removed;  // audit, sorted by name
};

// Keep rigid concepts (and, by default, concepts with unknown rigidity);
// children of removed concepts are re-attached to each nearest retained
// ancestor so reachability among retained concepts is preserved.
BackboneResult extract_backbone(const Taxonomy& taxonomy, const AnnotationSet& annotations,
                                bool keep_unknown_rigidity = true);

struct ImportedEntry {
    std::string name;
    std::string original_parent;  // original direct parents, comma-joined
};

struct MappingRow {
    std::vector<std::string> covered;
    std::vector<std::pair<std::string, std::string>> rejected;  // (name, reason)
    std::vector<ImportedEntry> imported;
};

struct MappingReport {
    std::map<Category, MappingRow> rows;
    std::vector<Violation> incompatibilities;  // from per-placement validation
    std::size_t skipped = 0;                   // placements with all-unknown slots
};

struct MappingResult {
    Taxonomy cleaned;
    MappingReport report;
    // Input annotations plus profiles for the synthetic category roots, so
    // the cleaned tree can be re-checked downstream.
    AnnotationSet cleaned_annotations;
};

// Build a fresh taxonomy rooted at the ten catalog categories and apply the
// COVER / REJECT / IMPORT directives in file order. A directive target may
// be a catalog category name or a concept already placed by an earlier
// directive. Rejection reasons are taken from matching check violations.
MappingResult apply_mapping(const Taxonomy& taxonomy, const AnnotationSet& annotations);

// Display name of a synthetic category root in the cleaned tree.
std::string category_root_name(Category c);

}  // namespace taxolint
