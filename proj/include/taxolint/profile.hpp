#pragma once

#include <string>

namespace taxolint {

enum class Rigidity { Unknown, Rigid, NonRigid, AntiRigid };
enum class Identity { Unknown, SuppliesIc, CarriesIc, NoIc };
enum class Dependence { Unknown, Dependent, Independent };
enum class NotionalDep { Unknown, Dependent, NotDependent };
enum class Unity { Unknown, Unity, AntiUnity, WholeNoCommonRelation };
enum class Extensionality { Unknown, Extensional, AntiExtensional };
enum class Concreteness { Unknown, Concrete, NonConcrete };

// One concept's meta-property assignment. Default-constructed profiles are
// all-UNKNOWN and object-level.
struct MetaProfile {
    Rigidity rigidity = Rigidity::Unknown;
    Identity identity = Identity::Unknown;
    Dependence dependence = Dependence::Unknown;
    NotionalDep notional_dependence = NotionalDep::Unknown;
    std::string nd_target;  // optional "notionally dependent on" property name
    Unity unity = Unity::Unknown;
    Extensionality extensionality = Extensionality::Unknown;
    Concreteness concreteness = Concreteness::Unknown;
    bool meta_level = false;

    bool carries_ic() const {
        return identity == Identity::SuppliesIc || identity == Identity::CarriesIc;
    }

    bool operator==(const MetaProfile&) const = default;
};

enum class MetaCategory { Type, MaterialRole, FormalRole, Unclassified };

// Pure derivation from a profile: a rigid property that supplies an identity
// criterion and is not notionally dependent is a type; an anti-rigid
// notionally dependent property is a material role if it carries (but does
// not supply) an identity criterion and a formal role if it carries none.
MetaCategory classify_meta_category(const MetaProfile& profile);

std::string to_string(MetaCategory c);

}  // namespace taxolint
