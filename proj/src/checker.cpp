#include "taxolint/checker.hpp"

#include <algorithm>
#include <tuple>

namespace taxolint {

namespace {

bool carries_unity(Unity u) {
    return u == Unity::Unity || u == Unity::WholeNoCommonRelation;
}

std::string role_name(MetaCategory c) {
    return c == MetaCategory::MaterialRole ? "material role" : "formal role";
}

}  // namespace

std::string to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::Rigidity: return "RIGIDITY";
        case ViolationKind::Unity: return "UNITY";
        case ViolationKind::Extensionality: return "EXTENSIONALITY";
        case ViolationKind::Concreteness: return "CONCRETENESS";
        case ViolationKind::RoleOverType: return "ROLE_OVER_TYPE";
        case ViolationKind::InstanceMixing: return "INSTANCE_MIXING";
        case ViolationKind::MetaLevelMixing: return "META_LEVEL_MIXING";
        case ViolationKind::CategoryIncompatible: return "CATEGORY_INCOMPATIBLE";
    }
    return "?";
}

std::string to_string(Repair r) {
    switch (r) {
        case Repair::DropEdge: return "DROP_EDGE";
        case Repair::Reannotate: return "REANNOTATE";
        case Repair::ConvertToInstanceOf: return "CONVERT_TO_INSTANCE_OF";
        case Repair::MoveConcept: return "MOVE_CONCEPT";
    }
    return "?";
}

PairCheck check_pair(const MetaProfile& lower, const MetaProfile& upper) {
    PairCheck out;

    if (lower.rigidity == Rigidity::Unknown || upper.rigidity == Rigidity::Unknown)
        ++out.skipped_rules;
    else if (upper.rigidity == Rigidity::AntiRigid && lower.rigidity == Rigidity::Rigid)
        out.kinds.push_back(ViolationKind::Rigidity);

    if (lower.unity == Unity::Unknown || upper.unity == Unity::Unknown)
        ++out.skipped_rules;
    else if (upper.unity == Unity::AntiUnity && carries_unity(lower.unity))
        out.kinds.push_back(ViolationKind::Unity);

    if (lower.extensionality == Extensionality::Unknown ||
        upper.extensionality == Extensionality::Unknown)
        ++out.skipped_rules;
    else if (upper.extensionality == Extensionality::AntiExtensional &&
             lower.extensionality == Extensionality::Extensional)
        out.kinds.push_back(ViolationKind::Extensionality);

    if (lower.concreteness == Concreteness::Unknown || upper.concreteness == Concreteness::Unknown)
        ++out.skipped_rules;
    else if (upper.concreteness == Concreteness::NonConcrete &&
             lower.concreteness == Concreteness::Concrete)
        out.kinds.push_back(ViolationKind::Concreteness);

    const bool role_rule_decidable =
        lower.rigidity != Rigidity::Unknown && lower.identity != Identity::Unknown &&
        lower.notional_dependence != NotionalDep::Unknown &&
        upper.rigidity != Rigidity::Unknown && upper.identity != Identity::Unknown &&
        upper.notional_dependence != NotionalDep::Unknown;
    if (!role_rule_decidable) {
        ++out.skipped_rules;
    } else {
        const auto upper_cat = classify_meta_category(upper);
        if ((upper_cat == MetaCategory::MaterialRole || upper_cat == MetaCategory::FormalRole) &&
            classify_meta_category(lower) == MetaCategory::Type)
            out.kinds.push_back(ViolationKind::RoleOverType);
    }
    return out;
}

void sort_violations(std::vector<Violation>& violations) {
    std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
        return std::tuple(static_cast<int>(a.kind), a.subject, a.object, a.explanation) <
               std::tuple(static_cast<int>(b.kind), b.subject, b.object, b.explanation);
    });
}

CheckReport check_taxonomy(const Taxonomy& taxonomy, const AnnotationSet& annotations) {
    CheckReport report;
    for (const auto& [name, profile] : annotations.profiles)
        if (!taxonomy.find(name))
            report.warnings.push_back("annotated name not in taxonomy: " + name);

    for (ConceptId c : taxonomy.all_sorted()) {
        const MetaProfile lower = effective_profile(c, taxonomy, annotations);
        for (ConceptId a : taxonomy.ancestors(c)) {
            const MetaProfile upper = effective_profile(a, taxonomy, annotations);
            const PairCheck pc = check_pair(lower, upper);
            if (pc.skipped_rules > 0) ++report.skipped;
            if (pc.kinds.empty()) continue;
            const std::string& subject = taxonomy.concept_of(c).name;
            const std::string& object = taxonomy.concept_of(a).name;
            const auto path = taxonomy.shortest_isa_path(c, a);
            for (ViolationKind kind : pc.kinds) {
                std::string why;
                switch (kind) {
                    case ViolationKind::Rigidity:
                        why = "anti-rigid " + object + " cannot subsume rigid " + subject;
                        break;
                    case ViolationKind::Unity:
                        why = "anti-unity " + object + " cannot subsume essential-whole " + subject;
                        break;
                    case ViolationKind::Extensionality:
                        why = "anti-extensional " + object + " cannot subsume extensional " + subject;
                        break;
                    case ViolationKind::Concreteness:
                        why = "non-concrete " + object + " cannot subsume concrete " + subject +
                              " (concreteness rule extends the published anti-F list)";
                        break;
                    case ViolationKind::RoleOverType:
                        why = role_name(classify_meta_category(upper)) + " " + object +
                              " cannot subsume type " + subject;
                        break;
                    default:
                        break;
                }
                report.violations.push_back({kind, subject, object, path, why, Repair::DropEdge});
            }
        }
    }
    sort_violations(report.violations);
    for (const auto& v : report.violations) ++report.stats[v.kind];
    return report;
}

std::vector<Violation> check_instances(const Taxonomy& taxonomy,
                                       const AnnotationSet& annotations) {
    std::vector<Violation> out;
    for (const auto& name : annotations.individuals) {
        const auto id = taxonomy.find(name);
        if (!id) continue;
        if (taxonomy.has_isa_placement(*id)) {
            const auto parents = taxonomy.isa_parents(*id);
            const std::string parent = taxonomy.concept_of(parents.front()).name;
            out.push_back({ViolationKind::InstanceMixing, name, parent,
                           {name, parent},
                           "individual " + name + " is attached to " + parent +
                               " via IS_A; instantiation is not subsumption",
                           Repair::ConvertToInstanceOf});
        }
        const auto kids = taxonomy.children(*id);
        if (!kids.empty()) {
            const std::string child = taxonomy.concept_of(kids.front()).name;
            out.push_back({ViolationKind::InstanceMixing, name, child,
                           {child, name},
                           "individual " + name + " subsumes " + child +
                               "; an individual is not a class",
                           Repair::Reannotate});
        }
    }
    sort_violations(out);
    return out;
}

std::vector<Violation> check_meta_levels(const Taxonomy& taxonomy,
                                         const AnnotationSet& annotations) {
    std::vector<Violation> out;
    for (ConceptId c : taxonomy.all_sorted()) {
        const bool c_meta = effective_profile(c, taxonomy, annotations).meta_level;
        for (ConceptId a : taxonomy.ancestors(c)) {
            const bool a_meta = effective_profile(a, taxonomy, annotations).meta_level;
            if (c_meta == a_meta) continue;
            const std::string& subject = taxonomy.concept_of(c).name;
            const std::string& object = taxonomy.concept_of(a).name;
            out.push_back({ViolationKind::MetaLevelMixing, subject, object,
                           taxonomy.shortest_isa_path(c, a),
                           (c_meta ? "meta-level " : "object-level ") + subject +
                               " is placed under " + (a_meta ? "meta-level " : "object-level ") +
                               object,
                           Repair::MoveConcept});
        }
    }
    sort_violations(out);
    return out;
}

AssignmentCheck check_category_assignment(ConceptId id, Category category,
                                          const Taxonomy& taxonomy,
                                          const AnnotationSet& annotations) {
    AssignmentCheck out;
    const MetaProfile p = effective_profile(id, taxonomy, annotations);
    const MetaProfile& cat = catalog_entry(category).profile;
    const std::string& subject = taxonomy.concept_of(id).name;
    const std::string target = to_string(category);

    auto emit = [&](const std::string& slot, const std::string& concept_val,
                    const std::string& category_val) {
        out.violations.push_back({ViolationKind::CategoryIncompatible, subject, target, {},
                                  slot + " conflict: " + subject + " is " + concept_val +
                                      " but " + target + " requires " + category_val,
                                  Repair::Reannotate});
    };

    if (p.rigidity == Rigidity::Unknown || cat.rigidity == Rigidity::Unknown)
        ++out.skipped_slots;
    else if ((p.rigidity == Rigidity::AntiRigid && cat.rigidity == Rigidity::Rigid) ||
             (p.rigidity == Rigidity::Rigid && cat.rigidity == Rigidity::AntiRigid))
        emit("rigidity", p.rigidity == Rigidity::AntiRigid ? "~R" : "+R",
             cat.rigidity == Rigidity::Rigid ? "+R" : "~R");

    if (p.dependence == Dependence::Unknown || cat.dependence == Dependence::Unknown)
        ++out.skipped_slots;
    else if (p.dependence != cat.dependence)
        emit("dependence", p.dependence == Dependence::Dependent ? "+D" : "-D",
             cat.dependence == Dependence::Dependent ? "+D" : "-D");

    auto unity_token = [](Unity u) {
        return u == Unity::Unity ? "+U" : u == Unity::AntiUnity ? "~U" : "*U";
    };
    if (p.unity == Unity::Unknown || cat.unity == Unity::Unknown)
        ++out.skipped_slots;
    else if ((p.unity == Unity::AntiUnity) != (cat.unity == Unity::AntiUnity))
        emit("unity", unity_token(p.unity), unity_token(cat.unity));

    if (p.extensionality == Extensionality::Unknown ||
        cat.extensionality == Extensionality::Unknown)
        ++out.skipped_slots;
    else if (p.extensionality != cat.extensionality)
        emit("extensionality", p.extensionality == Extensionality::Extensional ? "+E" : "~E",
             cat.extensionality == Extensionality::Extensional ? "+E" : "~E");

    if (p.concreteness == Concreteness::Unknown || cat.concreteness == Concreteness::Unknown)
        ++out.skipped_slots;
    else if (p.concreteness != cat.concreteness)
        emit("concreteness", p.concreteness == Concreteness::Concrete ? "+C" : "~C",
             cat.concreteness == Concreteness::Concrete ? "+C" : "~C");

    sort_violations(out.violations);
    return out;
}

CheckReport full_check(const Taxonomy& taxonomy, const AnnotationSet& annotations) {
    CheckReport report = check_taxonomy(taxonomy, annotations);

    for (const auto& name : annotations.individuals)
        if (!taxonomy.find(name))
            report.warnings.push_back("declared individual not in taxonomy: " + name);
    for (const auto& [name, cat] : annotations.category_assignments)
        if (!taxonomy.find(name))
            report.warnings.push_back("category assignment for unknown concept: " + name);

    auto instances = check_instances(taxonomy, annotations);
    report.violations.insert(report.violations.end(), instances.begin(), instances.end());
    auto meta = check_meta_levels(taxonomy, annotations);
    report.violations.insert(report.violations.end(), meta.begin(), meta.end());

    for (const auto& [name, cat] : annotations.category_assignments) {
        const auto id = taxonomy.find(name);
        if (!id) continue;
        const auto ac = check_category_assignment(*id, cat, taxonomy, annotations);
        if (ac.skipped_slots > 0) ++report.skipped;
        report.violations.insert(report.violations.end(), ac.violations.begin(),
                                 ac.violations.end());
    }

    sort_violations(report.violations);
    report.stats.clear();
    for (const auto& v : report.violations) ++report.stats[v.kind];
    return report;
}

}  // namespace taxolint
