#include "taxolint/profile.hpp"

namespace taxolint {

MetaCategory classify_meta_category(const MetaProfile& p) {
    if (p.rigidity == Rigidity::Rigid && p.identity == Identity::SuppliesIc &&
        p.notional_dependence == NotionalDep::NotDependent)
        return MetaCategory::Type;
    if (p.rigidity == Rigidity::AntiRigid && p.notional_dependence == NotionalDep::Dependent) {
        if (p.identity == Identity::CarriesIc) return MetaCategory::MaterialRole;
        if (p.identity == Identity::NoIc) return MetaCategory::FormalRole;
    }
    return MetaCategory::Unclassified;
}

std::string to_string(MetaCategory c) {
    switch (c) {
        case MetaCategory::Type: return "TYPE";
        case MetaCategory::MaterialRole: return "MATERIAL_ROLE";
        case MetaCategory::FormalRole: return "FORMAL_ROLE";
        case MetaCategory::Unclassified: return "UNCLASSIFIED";
    }
    return "?";
}

}  // namespace taxolint
