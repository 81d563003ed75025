#include "taxolint/taxonomy.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace taxolint {

ConceptId Taxonomy::add_concept(std::string name, std::vector<std::string> lemmas,
                                std::string gloss, std::string topic,
                                std::string external_id) {
    if (name.empty()) throw Error("concept name must be non-empty");
    if (lemmas.empty()) throw Error("concept " + name + " must have at least one lemma");
    if (by_name_.count(name)) throw DuplicateName(name);

    const auto id = static_cast<ConceptId>(concepts_.size());
    by_name_.emplace(name, id);
    concepts_.push_back(Concept{id, std::move(name), std::move(lemmas),
                                std::move(gloss), std::move(topic), std::move(external_id)});
    out_isa_.emplace_back();
    in_isa_.emplace_back();
    out_inst_.emplace_back();
    in_inst_.emplace_back();
    ancestor_cache_.clear();
    return id;
}

void Taxonomy::add_edge(ConceptId child, ConceptId parent, EdgeKind kind) {
    check_id(child);
    check_id(parent);
    if (child == parent) throw Error("self edge on " + concepts_[child].name);

    // Instances are leaves: no IS_A out of them, no edges into them.
    if (is_instance(parent))
        throw InstanceAsClassError(concepts_[parent].name);
    if (is_instance(child) && kind == EdgeKind::IsA)
        throw InstanceAsClassError(concepts_[child].name);
    if (kind == EdgeKind::InstanceOf && (!in_isa_[child].empty() || !in_inst_[child].empty()))
        throw InstanceAsClassError(concepts_[child].name);

    if (kind == EdgeKind::IsA && reaches_via_isa(parent, child))
        throw CycleError(concepts_[child].name, concepts_[parent].name);

    edges_.push_back(Edge{child, parent, kind});
    if (kind == EdgeKind::IsA) {
        out_isa_[child].push_back(parent);
        in_isa_[parent].push_back(child);
    } else {
        out_inst_[child].push_back(parent);
        in_inst_[parent].push_back(child);
    }
    ancestor_cache_.clear();
}

const Concept& Taxonomy::concept_of(ConceptId id) const {
    check_id(id);
    return concepts_[id];
}

std::optional<ConceptId> Taxonomy::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

ConceptId Taxonomy::require(std::string_view name) const {
    auto id = find(name);
    if (!id) throw UnknownConcept(std::string(name));
    return *id;
}

std::vector<ConceptId> Taxonomy::ancestors(ConceptId id) const {
    check_id(id);
    if (ancestor_cache_.size() != concepts_.size())
        ancestor_cache_.assign(concepts_.size(), std::nullopt);
    if (ancestor_cache_[id]) return *ancestor_cache_[id];

    std::vector<bool> seen(concepts_.size(), false);
    std::vector<ConceptId> stack{id};
    std::vector<ConceptId> result;
    while (!stack.empty()) {
        const ConceptId c = stack.back();
        stack.pop_back();
        for (ConceptId p : out_isa_[c]) {
            if (!seen[p]) {
                seen[p] = true;
                result.push_back(p);
                stack.push_back(p);
            }
        }
    }
    result = sorted_by_name(std::move(result));
    ancestor_cache_[id] = result;
    return result;
}

std::vector<ConceptId> Taxonomy::descendants(ConceptId id) const {
    check_id(id);
    std::vector<bool> seen(concepts_.size(), false);
    std::vector<ConceptId> stack{id};
    std::vector<ConceptId> result;
    while (!stack.empty()) {
        const ConceptId c = stack.back();
        stack.pop_back();
        for (ConceptId ch : in_isa_[c]) {
            if (!seen[ch]) {
                seen[ch] = true;
                result.push_back(ch);
                stack.push_back(ch);
            }
        }
    }
    return sorted_by_name(std::move(result));
}

std::vector<ConceptId> Taxonomy::parents(ConceptId id) const {
    check_id(id);
    std::vector<ConceptId> out = out_isa_[id];
    out.insert(out.end(), out_inst_[id].begin(), out_inst_[id].end());
    return sorted_by_name(std::move(out));
}

std::vector<ConceptId> Taxonomy::children(ConceptId id) const {
    check_id(id);
    std::vector<ConceptId> in = in_isa_[id];
    in.insert(in.end(), in_inst_[id].begin(), in_inst_[id].end());
    return sorted_by_name(std::move(in));
}

std::vector<ConceptId> Taxonomy::isa_parents(ConceptId id) const {
    check_id(id);
    return sorted_by_name(out_isa_[id]);
}

std::vector<ConceptId> Taxonomy::isa_children(ConceptId id) const {
    check_id(id);
    return sorted_by_name(in_isa_[id]);
}

bool Taxonomy::is_instance(ConceptId id) const {
    check_id(id);
    return !out_inst_[id].empty();
}

bool Taxonomy::has_isa_placement(ConceptId id) const {
    check_id(id);
    return !out_isa_[id].empty();
}

std::vector<std::string> Taxonomy::shortest_isa_path(ConceptId from, ConceptId to) const {
    check_id(from);
    check_id(to);
    // Distance of every node up to `to` (BFS over reversed IS_A edges),
    // then walk up from `from`, greedily taking the name-least parent
    // that stays on a shortest path.
    constexpr auto kInf = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> dto(concepts_.size(), kInf);
    dto[to] = 0;
    std::deque<ConceptId> queue{to};
    while (!queue.empty()) {
        const ConceptId c = queue.front();
        queue.pop_front();
        for (ConceptId ch : in_isa_[c]) {
            if (dto[ch] == kInf) {
                dto[ch] = dto[c] + 1;
                queue.push_back(ch);
            }
        }
    }
    if (dto[from] == kInf) return {};

    std::vector<std::string> path{concepts_[from].name};
    ConceptId cur = from;
    while (cur != to) {
        ConceptId best = cur;
        for (ConceptId p : sorted_by_name(out_isa_[cur])) {
            if (dto[p] != kInf && dto[p] + 1 == dto[cur]) {
                best = p;
                break;
            }
        }
        cur = best;
        path.push_back(concepts_[cur].name);
    }
    return path;
}

std::vector<ConceptId> Taxonomy::all_sorted() const {
    std::vector<ConceptId> ids(concepts_.size());
    for (ConceptId i = 0; i < concepts_.size(); ++i) ids[i] = i;
    return sorted_by_name(std::move(ids));
}

void Taxonomy::check_id(ConceptId id) const {
    if (id >= concepts_.size())
        throw UnknownConcept("#" + std::to_string(id));
}

bool Taxonomy::reaches_via_isa(ConceptId from, ConceptId to) const {
    if (from == to) return true;
    std::vector<bool> seen(concepts_.size(), false);
    std::vector<ConceptId> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
        const ConceptId c = stack.back();
        stack.pop_back();
        for (ConceptId p : out_isa_[c]) {
            if (p == to) return true;
            if (!seen[p]) {
                seen[p] = true;
                stack.push_back(p);
            }
        }
    }
    return false;
}

std::vector<ConceptId> Taxonomy::sorted_by_name(std::vector<ConceptId> ids) const {
    std::sort(ids.begin(), ids.end(),
              [this](ConceptId a, ConceptId b) { return concepts_[a].name < concepts_[b].name; });
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

}  // namespace taxolint
