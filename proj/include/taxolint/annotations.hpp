#pragma once

#include <istream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "taxolint/catalog.hpp"
#include "taxolint/profile.hpp"
#include "taxolint/taxonomy.hpp"

namespace taxolint {

enum class DirectiveKind { Cover, Reject, Import };

struct MappingDirective {
    std::string name;
    DirectiveKind kind;
    // A catalog category name, or the name of a concept already placed in
    // the cleaned tree by an earlier directive.
    std::string target;
};

struct AnnotationSet {
    std::map<std::string, MetaProfile> profiles;
    std::set<std::string> individuals;
    std::map<std::string, Category> category_assignments;
    std::vector<MappingDirective> directives;

    const MetaProfile* profile_of(const std::string& name) const {
        auto it = profiles.find(name);
        return it == profiles.end() ? nullptr : &it->second;
    }
};

struct ParsedAnnotations {
    AnnotationSet annotations;
    std::vector<std::string> warnings;
};

// Line-oriented annotation format: `P name tokens...`, `I name`,
// `A name CATEGORY`, `M name COVER|REJECT|IMPORT TARGET`, `#` comments.
ParsedAnnotations parse_annotations(std::istream& in);

// The concept's own annotated profile with identity upgraded to CARRIES_IC
// when any ancestor supplies an identity criterion. No other slot inherits.
MetaProfile effective_profile(ConceptId id, const Taxonomy& taxonomy,
                              const AnnotationSet& annotations);

enum class SuggestedProperty { Rigidity, Unity, Extensionality, Concreteness };

struct Suggestion {
    SuggestedProperty property;
    // true: the concept must not carry the anti-property (some descendant is
    // positive); false: it must not carry the property with necessity (some
    // descendant is anti).
    bool forbid_anti;
    std::vector<std::string> witnesses;  // sorted descendant names
};

std::string describe(const Suggestion& s);

// Children-inspection guideline: scan all descendants' effective profiles
// and derive what polarity this concept itself could not consistently take.
std::vector<Suggestion> suggest_from_children(ConceptId id, const Taxonomy& taxonomy,
                                              const AnnotationSet& annotations);

}  // namespace taxolint
