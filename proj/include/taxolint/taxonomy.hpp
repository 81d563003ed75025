#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "taxolint/errors.hpp"

namespace taxolint {

using ConceptId = std::uint32_t;

enum class EdgeKind { IsA, InstanceOf };

struct Concept {
    ConceptId id = 0;
    std::string name;                  // unique within the taxonomy
    std::vector<std::string> lemmas;   // non-empty
    std::string gloss;
    std::string topic;
    std::string external_id;           // e.g. WordNet numeric synset id
};

struct Edge {
    ConceptId child;
    ConceptId parent;
    EdgeKind kind;
};

// Directed-acyclic taxonomy over named concepts. IS_A edges form a DAG
// (multiple parents allowed); INSTANCE_OF children are leaves and may not
// act as classes. Set-valued query results are returned sorted by name.
class Taxonomy {
public:
    ConceptId add_concept(std::string name, std::vector<std::string> lemmas,
                          std::string gloss = "", std::string topic = "",
                          std::string external_id = "");

    void add_edge(ConceptId child, ConceptId parent, EdgeKind kind);

    const Concept& concept_of(ConceptId id) const;
    std::optional<ConceptId> find(std::string_view name) const;
    ConceptId require(std::string_view name) const;

    std::size_t size() const { return concepts_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    // All concepts reachable via one or more IS_A edges, excluding the
    // concept itself. Sorted by name.
    std::vector<ConceptId> ancestors(ConceptId id) const;

    // Inverse of ancestors over IS_A edges. Sorted by name.
    std::vector<ConceptId> descendants(ConceptId id) const;

    // Direct neighbours, any edge kind. Sorted by name.
    std::vector<ConceptId> parents(ConceptId id) const;
    std::vector<ConceptId> children(ConceptId id) const;

    // Direct IS_A parents, sorted by name.
    std::vector<ConceptId> isa_parents(ConceptId id) const;
    std::vector<ConceptId> isa_children(ConceptId id) const;

    // Has an outgoing INSTANCE_OF edge (i.e. is placed as an individual).
    bool is_instance(ConceptId id) const;
    // Is the child of at least one IS_A edge.
    bool has_isa_placement(ConceptId id) const;

    // Shortest IS_A chain from `from` up to `to`, inclusive of both ends,
    // ties broken lexicographically by name. Empty if unreachable.
    std::vector<std::string> shortest_isa_path(ConceptId from, ConceptId to) const;

    // All concept ids sorted by name.
    std::vector<ConceptId> all_sorted() const;

    bool name_less(ConceptId a, ConceptId b) const {
        return concepts_[a].name < concepts_[b].name;
    }

private:
    void check_id(ConceptId id) const;
    bool reaches_via_isa(ConceptId from, ConceptId to) const;
    std::vector<ConceptId> sorted_by_name(std::vector<ConceptId> ids) const;

    std::vector<Concept> concepts_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, ConceptId> by_name_;
    std::vector<std::vector<ConceptId>> out_isa_;   // child -> IS_A parents
    std::vector<std::vector<ConceptId>> in_isa_;    // parent -> IS_A children
    std::vector<std::vector<ConceptId>> out_inst_;  // child -> INSTANCE_OF parents
    std::vector<std::vector<ConceptId>> in_inst_;   // parent -> INSTANCE_OF children

    // Lazily filled ancestor cache, invalidated by any mutation.
    mutable std::vector<std::optional<std::vector<ConceptId>>> ancestor_cache_;
};

}  // namespace taxolint
