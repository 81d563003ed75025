#pragma once

#include <map>
#include <string>
#include <vector>

#include "taxolint/annotations.hpp"
#include "taxolint/catalog.hpp"
#include "taxolint/profile.hpp"
#include "taxolint/taxonomy.hpp"

namespace taxolint {

enum class ViolationKind {
    Rigidity,
    Unity,
    Extensionality,
    Concreteness,
    RoleOverType,
    InstanceMixing,
    MetaLevelMixing,
    CategoryIncompatible,
};

enum class Repair { DropEdge, Reannotate, ConvertToInstanceOf, MoveConcept };

struct Violation {
    ViolationKind kind;
    std::string subject;
    std::string object;              // offending partner; empty when none
    std::vector<std::string> path;   // witnessing IS_A chain, subject first
    std::string explanation;
    Repair suggested_repair;
};

std::string to_string(ViolationKind k);
std::string to_string(Repair r);

struct PairCheck {
    std::vector<ViolationKind> kinds;
    int skipped_rules = 0;  // rules suppressed by UNKNOWN deciding slots
};

// The "anti-F cannot subsume F" rule table over one (subsumee, subsumer)
// profile pair, plus the role-over-type rule. UNKNOWN in a deciding slot
// suppresses that rule rather than guessing.
PairCheck check_pair(const MetaProfile& lower, const MetaProfile& upper);

struct CheckReport {
    std::vector<Violation> violations;  // sorted by (kind, subject, object)
    std::size_t skipped = 0;            // pairs/assignments with suppressed rules
    std::map<ViolationKind, std::size_t> stats;
    std::vector<std::string> warnings;
};

// Formal-property checks over the full transitive IS_A closure.
CheckReport check_taxonomy(const Taxonomy& taxonomy, const AnnotationSet& annotations);

// Declared individuals placed via IS_A, or individuals that subsume.
std::vector<Violation> check_instances(const Taxonomy& taxonomy,
                                       const AnnotationSet& annotations);

// IS_A pairs in the transitive closure crossing the object/meta boundary.
std::vector<Violation> check_meta_levels(const Taxonomy& taxonomy,
                                         const AnnotationSet& annotations);

struct AssignmentCheck {
    std::vector<Violation> violations;
    int skipped_slots = 0;
};

// Slot-by-slot compatibility of a concept's effective profile against a
// catalog category profile; UNKNOWN never conflicts.
AssignmentCheck check_category_assignment(ConceptId id, Category category,
                                          const Taxonomy& taxonomy,
                                          const AnnotationSet& annotations);

// Everything at once: pair checks, instance mixing, meta-level mixing, and
// the annotation file's category assignments.
CheckReport full_check(const Taxonomy& taxonomy, const AnnotationSet& annotations);

void sort_violations(std::vector<Violation>& violations);

}  // namespace taxolint
