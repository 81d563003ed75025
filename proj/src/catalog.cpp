#include "taxolint/catalog.hpp"

#include "taxolint/errors.hpp"

namespace taxolint {

namespace {

MetaProfile rigid_profile(Dependence d, Unity u, Extensionality e,
                          Concreteness c = Concreteness::Unknown) {
    MetaProfile p;
    p.rigidity = Rigidity::Rigid;
    p.dependence = d;
    p.unity = u;
    p.extensionality = e;
    p.concreteness = c;
    return p;
}

std::vector<CategoryProfile> build_catalog() {
    using D = Dependence;
    using U = Unity;
    using E = Extensionality;
    std::vector<CategoryProfile> cat;
    cat.push_back({Category::Aggregate,
                   rigid_profile(D::Independent, U::AntiUnity, E::Unknown)});
    cat.push_back({Category::AmountOfMatter,
                   rigid_profile(D::Independent, U::AntiUnity, E::Extensional)});
    cat.push_back({Category::Plurality,
                   rigid_profile(D::Independent, U::AntiUnity, E::Unknown)});
    cat.push_back({Category::Object,
                   rigid_profile(D::Independent, U::WholeNoCommonRelation, E::Unknown)});
    cat.push_back({Category::PhysicalBody,
                   rigid_profile(D::Independent, U::WholeNoCommonRelation, E::Extensional)});
    cat.push_back({Category::OrdinaryObject,
                   rigid_profile(D::Independent, U::WholeNoCommonRelation, E::AntiExtensional)});
    cat.push_back({Category::Event,
                   rigid_profile(D::Dependent, U::Unknown, E::Extensional)});
    cat.push_back({Category::Feature,
                   rigid_profile(D::Dependent, U::WholeNoCommonRelation, E::AntiExtensional)});
    cat.push_back({Category::Quality,
                   rigid_profile(D::Dependent, U::Unity, E::Extensional), true});
    cat.push_back({Category::Abstraction,
                   rigid_profile(D::Unknown, U::Unknown, E::Unknown, Concreteness::NonConcrete)});
    return cat;
}

}  // namespace

const std::vector<CategoryProfile>& category_catalog() {
    static const std::vector<CategoryProfile> catalog = build_catalog();
    return catalog;
}

const CategoryProfile& catalog_entry(Category c) {
    for (const auto& entry : category_catalog())
        if (entry.category == c) return entry;
    throw UnknownCategory(std::to_string(static_cast<int>(c)));
}

std::string to_string(Category c) {
    switch (c) {
        case Category::Aggregate: return "AGGREGATE";
        case Category::AmountOfMatter: return "AMOUNT_OF_MATTER";
        case Category::Plurality: return "PLURALITY";
        case Category::Object: return "OBJECT";
        case Category::PhysicalBody: return "PHYSICAL_BODY";
        case Category::OrdinaryObject: return "ORDINARY_OBJECT";
        case Category::Event: return "EVENT";
        case Category::Feature: return "FEATURE";
        case Category::Quality: return "QUALITY";
        case Category::Abstraction: return "ABSTRACTION";
    }
    return "?";
}

std::optional<Category> category_from_string(const std::string& name) {
    for (const auto& entry : category_catalog())
        if (to_string(entry.category) == name) return entry.category;
    return std::nullopt;
}

}  // namespace taxolint
