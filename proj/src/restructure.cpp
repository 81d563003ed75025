#include "taxolint/restructure.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "taxolint/errors.hpp"

namespace taxolint {

namespace {

bool retained_in_backbone(const MetaProfile& p, bool keep_unknown) {
    if (p.rigidity == Rigidity::Rigid) return true;
    if (p.rigidity == Rigidity::Unknown) return keep_unknown;
    return false;
}

}  // namespace

BackboneResult extract_backbone(const Taxonomy& taxonomy, const AnnotationSet& annotations,
                                bool keep_unknown_rigidity) {
    const std::size_t n = taxonomy.size();
    std::vector<bool> retained(n, false);
    for (ConceptId id = 0; id < n; ++id)
        retained[id] = retained_in_backbone(effective_profile(id, taxonomy, annotations),
                                            keep_unknown_rigidity);

    // Nearest retained ancestors over IS_A, memoized. The IS_A graph is
    // acyclic, so plain recursion terminates.
    std::vector<std::optional<std::vector<ConceptId>>> nearest(n);
    auto nearest_retained = [&](auto&& self, ConceptId id) -> const std::vector<ConceptId>& {
        if (nearest[id]) return *nearest[id];
        std::set<ConceptId> acc;
        if (retained[id]) {
            acc.insert(id);
        } else {
            for (ConceptId p : taxonomy.isa_parents(id))
                for (ConceptId a : self(self, p)) acc.insert(a);
        }
        nearest[id] = std::vector<ConceptId>(acc.begin(), acc.end());
        return *nearest[id];
    };

    BackboneResult out;
    std::vector<ConceptId> new_id(n, 0);
    for (ConceptId id : taxonomy.all_sorted()) {
        const Concept& c = taxonomy.concept_of(id);
        if (retained[id])
            new_id[id] = out.backbone.add_concept(c.name, c.lemmas, c.gloss, c.topic, c.external_id);
        else
            out.removed.push_back(c.name);
    }

    std::vector<std::vector<Edge>> edges_by_child(n);
    for (const Edge& e : taxonomy.edges()) edges_by_child[e.child].push_back(e);

    std::set<std::tuple<ConceptId, ConceptId, int>> added;
    for (ConceptId id : taxonomy.all_sorted()) {
        if (!retained[id]) continue;
        for (const Edge& e : edges_by_child[id]) {
            std::vector<ConceptId> targets;
            if (retained[e.parent]) targets.push_back(e.parent);
            else targets = nearest_retained(nearest_retained, e.parent);
            for (ConceptId t : targets) {
                if (t == id) continue;
                if (!added.insert({id, t, static_cast<int>(e.kind)}).second) continue;
                out.backbone.add_edge(new_id[id], new_id[t], e.kind);
            }
        }
    }
    return out;
}

std::string category_root_name(Category c) {
    switch (c) {
        case Category::Aggregate: return "Aggregate";
        case Category::AmountOfMatter: return "Amount_Of_Matter";
        case Category::Plurality: return "Plurality";
        case Category::Object: return "Object";
        case Category::PhysicalBody: return "Physical_Body";
        case Category::OrdinaryObject: return "Ordinary_Object";
        case Category::Event: return "Event";
        case Category::Feature: return "Feature";
        case Category::Quality: return "Quality";
        case Category::Abstraction: return "Abstraction";
    }
    return "?";
}

MappingResult apply_mapping(const Taxonomy& taxonomy, const AnnotationSet& annotations) {
    MappingResult out;
    out.cleaned_annotations = annotations;

    std::map<std::string, Category> root_of;  // cleaned concept name -> governing category
    for (const auto& entry : category_catalog()) {
        const std::string name = category_root_name(entry.category);
        out.cleaned.add_concept(name, {name});
        root_of[name] = entry.category;
        out.cleaned_annotations.profiles[name] = entry.profile;
        out.report.rows[entry.category];  // materialize every row
    }

    // Rejection reasons come from the source taxonomy's own check report.
    const CheckReport source_report = full_check(taxonomy, annotations);
    auto reason_for = [&](const std::string& name) -> std::string {
        for (const auto& v : source_report.violations)
            if (v.subject == name) return v.explanation;
        return "rejected by directive";
    };

    std::set<std::string> directed;  // names that carry their own directive
    for (const auto& d : annotations.directives) directed.insert(d.name);

    std::set<std::string> processed;
    std::set<std::tuple<std::string, std::string, int>> added_edges;
    std::vector<std::pair<ConceptId, Category>> placed;  // source id + governing category

    auto copy_concept = [&](ConceptId src) -> ConceptId {
        const Concept& c = taxonomy.concept_of(src);
        if (auto existing = out.cleaned.find(c.name)) return *existing;
        return out.cleaned.add_concept(c.name, c.lemmas, c.gloss, c.topic, c.external_id);
    };

    for (const auto& d : annotations.directives) {
        if (!processed.insert(d.name).second) continue;  // first directive wins
        const auto subject = taxonomy.find(d.name);
        if (!subject) throw UnknownDirectiveTarget(d.name);

        // Target: a catalog category, or a concept already placed.
        Category governing;
        std::string target_name;
        if (const auto cat = category_from_string(d.target)) {
            governing = *cat;
            target_name = category_root_name(*cat);
        } else if (out.cleaned.find(d.target) && root_of.count(d.target)) {
            governing = root_of.at(d.target);
            target_name = d.target;
        } else {
            throw UnknownDirectiveTarget(d.target);
        }
        MappingRow& row = out.report.rows[governing];

        if (d.kind == DirectiveKind::Reject) {
            row.rejected.emplace_back(d.name, reason_for(d.name));
            continue;
        }

        // Surviving subtree: the subject plus descendants without their own
        // directive (those are placed, or rejected, by their own line).
        std::set<ConceptId> members{*subject};
        std::deque<ConceptId> queue{*subject};
        while (!queue.empty()) {
            const ConceptId cur = queue.front();
            queue.pop_front();
            for (ConceptId ch : taxonomy.children(cur)) {
                if (directed.count(taxonomy.concept_of(ch).name)) continue;
                if (members.insert(ch).second) queue.push_back(ch);
            }
        }

        for (ConceptId m : members) {
            copy_concept(m);
            root_of[taxonomy.concept_of(m).name] = governing;
            placed.emplace_back(m, governing);
        }
        for (const Edge& e : taxonomy.edges()) {
            if (!members.count(e.child) || !members.count(e.parent)) continue;
            const auto key = std::tuple(taxonomy.concept_of(e.child).name,
                                        taxonomy.concept_of(e.parent).name, static_cast<int>(e.kind));
            if (!added_edges.insert(key).second) continue;
            out.cleaned.add_edge(out.cleaned.require(taxonomy.concept_of(e.child).name),
                                 out.cleaned.require(taxonomy.concept_of(e.parent).name), e.kind);
        }

        const EdgeKind attach_kind =
            taxonomy.is_instance(*subject) ? EdgeKind::InstanceOf : EdgeKind::IsA;
        const auto key = std::tuple(d.name, target_name, static_cast<int>(attach_kind));
        if (added_edges.insert(key).second)
            out.cleaned.add_edge(out.cleaned.require(d.name), out.cleaned.require(target_name),
                                 attach_kind);

        if (d.kind == DirectiveKind::Cover) {
            row.covered.push_back(d.name);
        } else {
            std::string parents;
            for (ConceptId p : taxonomy.parents(*subject)) {
                if (!parents.empty()) parents += ",";
                parents += taxonomy.concept_of(p).name;
            }
            row.imported.push_back({d.name, parents});
        }
    }

    std::sort(placed.begin(), placed.end(), [&](const auto& a, const auto& b) {
        return taxonomy.concept_of(a.first).name < taxonomy.concept_of(b.first).name;
    });
    placed.erase(std::unique(placed.begin(), placed.end()), placed.end());
    for (const auto& [id, cat] : placed) {
        const auto ac = check_category_assignment(id, cat, taxonomy, annotations);
        if (ac.skipped_slots > 0) ++out.report.skipped;
        out.report.incompatibilities.insert(out.report.incompatibilities.end(),
                                            ac.violations.begin(), ac.violations.end());
    }
    sort_violations(out.report.incompatibilities);

    for (auto& [cat, row] : out.report.rows) {
        std::sort(row.covered.begin(), row.covered.end());
        std::sort(row.rejected.begin(), row.rejected.end());
        std::sort(row.imported.begin(), row.imported.end(),
                  [](const ImportedEntry& a, const ImportedEntry& b) { return a.name < b.name; });
    }
    return out;
}

}  // namespace taxolint
