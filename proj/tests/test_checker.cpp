#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "taxolint/checker.hpp"
#include "test_util.hpp"

using namespace taxolint;

namespace {

// Independent restatement of the subsumption rule table, used as the
// exhaustive oracle for check_pair.
std::vector<ViolationKind> oracle_pair(const MetaProfile& lower, const MetaProfile& upper) {
    std::vector<ViolationKind> out;
    if (upper.rigidity == Rigidity::AntiRigid && lower.rigidity == Rigidity::Rigid)
        out.push_back(ViolationKind::Rigidity);
    if (upper.unity == Unity::AntiUnity &&
        (lower.unity == Unity::Unity || lower.unity == Unity::WholeNoCommonRelation))
        out.push_back(ViolationKind::Unity);
    if (upper.extensionality == Extensionality::AntiExtensional &&
        lower.extensionality == Extensionality::Extensional)
        out.push_back(ViolationKind::Extensionality);
    if (upper.concreteness == Concreteness::NonConcrete &&
        lower.concreteness == Concreteness::Concrete)
        out.push_back(ViolationKind::Concreteness);

    const bool upper_is_role =
        upper.rigidity == Rigidity::AntiRigid &&
        upper.notional_dependence == NotionalDep::Dependent &&
        (upper.identity == Identity::CarriesIc || upper.identity == Identity::NoIc);
    const bool lower_is_type = lower.rigidity == Rigidity::Rigid &&
                               lower.identity == Identity::SuppliesIc &&
                               lower.notional_dependence == NotionalDep::NotDependent;
    if (upper_is_role && lower_is_type) out.push_back(ViolationKind::RoleOverType);
    return out;
}

std::vector<MetaProfile> all_profiles() {
    std::vector<MetaProfile> out;
    for (int r = 0; r < 4; ++r)
        for (int i = 0; i < 4; ++i)
            for (int nd = 0; nd < 3; ++nd)
                for (int u = 0; u < 4; ++u)
                    for (int e = 0; e < 3; ++e)
                        for (int c = 0; c < 3; ++c) {
                            MetaProfile p;
                            p.rigidity = static_cast<Rigidity>(r);
                            p.identity = static_cast<Identity>(i);
                            p.notional_dependence = static_cast<NotionalDep>(nd);
                            p.unity = static_cast<Unity>(u);
                            p.extensionality = static_cast<Extensionality>(e);
                            p.concreteness = static_cast<Concreteness>(c);
                            out.push_back(p);
                        }
    return out;
}

MetaProfile profile(const std::string& tokens) {
    std::istringstream in("P X " + tokens + "\n");
    return parse_annotations(in).annotations.profiles.at("X");
}

}  // namespace

TEST_CASE("check_pair: paper examples") {
    const auto person = profile("+R +I:supplies -ND");
    const auto causal_agent = profile("~R -I +ND");
    const auto organism = profile("+R +I:supplies -ND");

    auto pc = check_pair(person, causal_agent);
    CHECK(pc.kinds == std::vector<ViolationKind>{ViolationKind::Rigidity,
                                                 ViolationKind::RoleOverType});
    CHECK(check_pair(person, organism).kinds.empty());
    // Non-rigid (but not anti-rigid) over rigid is fine.
    CHECK(check_pair(person, profile("-R -I +ND")).kinds.empty());

    const auto blank = MetaProfile{};
    pc = check_pair(blank, blank);
    CHECK(pc.kinds.empty());
    CHECK(pc.skipped_rules == 5);
}

TEST_CASE("check_pair matches the exhaustive rule-table oracle") {
    const auto profiles = all_profiles();
    for (const auto& lower : profiles)
        for (const auto& upper : profiles) {
            const auto got = check_pair(lower, upper);
            const auto want = oracle_pair(lower, upper);
            if (got.kinds != want) {
                REQUIRE(got.kinds == want);  // report only on failure; 3M pairs
            }
            // No violation may fire when a deciding slot of either side is
            // UNKNOWN for that rule.
            for (const auto kind : got.kinds) {
                switch (kind) {
                    case ViolationKind::Rigidity:
                        CHECK(upper.rigidity != Rigidity::Unknown);
                        CHECK(lower.rigidity != Rigidity::Unknown);
                        break;
                    case ViolationKind::Unity:
                        CHECK(upper.unity != Unity::Unknown);
                        CHECK(lower.unity != Unity::Unknown);
                        break;
                    default:
                        break;
                }
            }
        }
}

TEST_CASE("check_pair monotonicity: filling UNKNOWN slots never removes violations") {
    std::mt19937 rng(61);
    const std::vector<MetaProfile> profiles = all_profiles();
    auto fill = [&](MetaProfile p) {
        auto pick = [&](int n) { return 1 + std::uniform_int_distribution<int>(0, n - 2)(rng); };
        if (p.rigidity == Rigidity::Unknown) p.rigidity = static_cast<Rigidity>(pick(4));
        if (p.identity == Identity::Unknown) p.identity = static_cast<Identity>(pick(4));
        if (p.notional_dependence == NotionalDep::Unknown)
            p.notional_dependence = static_cast<NotionalDep>(pick(3));
        if (p.unity == Unity::Unknown) p.unity = static_cast<Unity>(pick(4));
        if (p.extensionality == Extensionality::Unknown)
            p.extensionality = static_cast<Extensionality>(pick(3));
        if (p.concreteness == Concreteness::Unknown)
            p.concreteness = static_cast<Concreteness>(pick(3));
        return p;
    };
    for (int trial = 0; trial < 2000; ++trial) {
        const auto& lower = profiles[std::uniform_int_distribution<std::size_t>(0, profiles.size() - 1)(rng)];
        const auto& upper = profiles[std::uniform_int_distribution<std::size_t>(0, profiles.size() - 1)(rng)];
        const auto before = check_pair(lower, upper).kinds;
        const auto after = check_pair(fill(lower), fill(upper)).kinds;
        for (const auto kind : before)
            CHECK(std::find(after.begin(), after.end(), kind) != after.end());
    }
}

TEST_CASE("check_taxonomy: transitive violation through an unannotated middle") {
    Taxonomy t;
    const auto p = t.add_concept("p", {"p"});
    const auto m = t.add_concept("m", {"m"});
    const auto q = t.add_concept("q", {"q"});
    t.add_edge(p, m, EdgeKind::IsA);
    t.add_edge(m, q, EdgeKind::IsA);
    AnnotationSet ann;
    ann.profiles["p"].rigidity = Rigidity::Rigid;
    ann.profiles["q"].rigidity = Rigidity::AntiRigid;

    const auto report = check_taxonomy(t, ann);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::Rigidity);
    CHECK(report.violations[0].subject == "p");
    CHECK(report.violations[0].object == "q");
    CHECK(report.violations[0].path == std::vector<std::string>{"p", "m", "q"});
}

TEST_CASE("check_taxonomy: unannotated taxonomy skips every ancestor pair") {
    Taxonomy t;
    const auto a = t.add_concept("a", {"a"});
    const auto b = t.add_concept("b", {"b"});
    const auto c = t.add_concept("c", {"c"});
    t.add_edge(a, b, EdgeKind::IsA);
    t.add_edge(b, c, EdgeKind::IsA);
    const auto report = check_taxonomy(t, AnnotationSet{});
    CHECK(report.violations.empty());
    CHECK(report.skipped == 3);  // (a,b) (a,c) (b,c)
}

TEST_CASE("check_taxonomy equals the brute-force closure oracle on random DAGs") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const auto dag = testutil::random_dag(rng, 200, 400);
        const auto ann = testutil::random_annotations(rng, dag);
        const auto t = testutil::build_taxonomy(dag);
        const auto reach = testutil::oracle_ancestors(dag);

        std::multiset<std::tuple<std::string, std::string, std::string>> expected;
        for (int c = 0; c < dag.n; ++c)
            for (int a : reach[c]) {
                // No inheritance matters here beyond identity; reuse
                // effective_profile as both sides see the same inputs, but
                // enumerate pairs independently of the checker.
                const auto lower = effective_profile(t.require(testutil::node_name(c)), t, ann);
                const auto upper = effective_profile(t.require(testutil::node_name(a)), t, ann);
                for (const auto kind : oracle_pair(lower, upper))
                    expected.insert({to_string(kind), testutil::node_name(c), testutil::node_name(a)});
            }

        const auto report = check_taxonomy(t, ann);
        std::multiset<std::tuple<std::string, std::string, std::string>> got;
        for (const auto& v : report.violations)
            got.insert({to_string(v.kind), v.subject, v.object});
        REQUIRE(got == expected);

        // Every reported path replays as IS_A edges.
        std::set<std::pair<std::string, std::string>> edge_set;
        for (const auto& [child, parent] : dag.edges)
            edge_set.insert({testutil::node_name(child), testutil::node_name(parent)});
        for (const auto& v : report.violations) {
            REQUIRE(v.path.size() >= 2);
            CHECK(v.path.front() == v.subject);
            CHECK(v.path.back() == v.object);
            for (std::size_t i = 0; i + 1 < v.path.size(); ++i)
                CHECK(edge_set.count({v.path[i], v.path[i + 1]}) == 1);
        }
    }
}

TEST_CASE("check_taxonomy is deterministic") {
    std::mt19937 rng(83);
    const auto dag = testutil::random_dag(rng, 100, 200);
    const auto ann = testutil::random_annotations(rng, dag);
    const auto t = testutil::build_taxonomy(dag);
    const auto r1 = check_taxonomy(t, ann);
    const auto r2 = check_taxonomy(t, ann);
    REQUIRE(r1.violations.size() == r2.violations.size());
    for (std::size_t i = 0; i < r1.violations.size(); ++i) {
        CHECK(r1.violations[i].explanation == r2.violations[i].explanation);
        CHECK(r1.violations[i].path == r2.violations[i].path);
    }
}

TEST_CASE("check_instances: IS_A-placed individuals and subsuming individuals") {
    Taxonomy t;
    const auto dominion = t.add_concept("Territorial_Dominion", {"territorial dominion"});
    const auto palestine = t.add_concept("Palestine", {"palestine"});
    const auto macao = t.add_concept("Macao", {"macao"});
    const auto trust = t.add_concept("Trust_Territory", {"trust territory"});
    t.add_edge(palestine, dominion, EdgeKind::IsA);
    t.add_edge(macao, dominion, EdgeKind::InstanceOf);  // correctly attached
    t.add_edge(trust, dominion, EdgeKind::IsA);

    AnnotationSet ann;
    ann.individuals = {"Palestine", "Macao"};
    const auto violations = check_instances(t, ann);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].subject == "Palestine");
    CHECK(violations[0].suggested_repair == Repair::ConvertToInstanceOf);

    // A declared individual that subsumes something.
    Taxonomy t2;
    const auto fall = t2.add_concept("Fall_3", {"fall"});
    const auto sub = t2.add_concept("Sub", {"sub"});
    t2.add_edge(sub, fall, EdgeKind::IsA);
    AnnotationSet ann2;
    ann2.individuals = {"Fall_3"};
    const auto v2 = check_instances(t2, ann2);
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].suggested_repair == Repair::Reannotate);
}

TEST_CASE("check_meta_levels") {
    Taxonomy t;
    const auto abstraction = t.add_concept("Abstraction_1", {"abstraction"});
    const auto attribute = t.add_concept("Attribute", {"attribute"});
    const auto set5 = t.add_concept("Set_5", {"set"});
    t.add_edge(attribute, abstraction, EdgeKind::IsA);
    t.add_edge(set5, abstraction, EdgeKind::IsA);

    AnnotationSet ann;
    ann.profiles["Attribute"].meta_level = true;
    auto violations = check_meta_levels(t, ann);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].subject == "Attribute");
    CHECK(violations[0].object == "Abstraction_1");
    CHECK(violations[0].suggested_repair == Repair::MoveConcept);

    CHECK(check_meta_levels(t, AnnotationSet{}).empty());

    // Homogeneous meta levels are consistent.
    AnnotationSet all_meta;
    for (const auto* name : {"Abstraction_1", "Attribute", "Set_5"})
        all_meta.profiles[name].meta_level = true;
    CHECK(check_meta_levels(t, all_meta).empty());
}

TEST_CASE("check_category_assignment") {
    Taxonomy t;
    const auto cognition = t.add_concept("Cognition", {"cognition"});
    const auto minus_d = t.add_concept("Independent_Thing", {"it"});
    const auto blank = t.add_concept("Blank", {"blank"});

    AnnotationSet ann;
    ann.profiles["Cognition"].concreteness = Concreteness::NonConcrete;
    ann.profiles["Independent_Thing"].dependence = Dependence::Independent;

    CHECK(check_category_assignment(cognition, Category::Abstraction, t, ann).violations.empty());

    const auto bad = check_category_assignment(minus_d, Category::Event, t, ann);
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0].kind == ViolationKind::CategoryIncompatible);
    CHECK(bad.violations[0].explanation.find("dependence") != std::string::npos);

    const auto unknown = check_category_assignment(blank, Category::Quality, t, ann);
    CHECK(unknown.violations.empty());
    CHECK(unknown.skipped_slots > 0);

    // ~U conflicts with both +U and *U.
    AnnotationSet anti;
    anti.profiles["Blank"].unity = Unity::AntiUnity;
    CHECK(check_category_assignment(blank, Category::Quality, t, anti).violations.size() == 1);
    CHECK(check_category_assignment(blank, Category::Object, t, anti).violations.size() == 1);
}

TEST_CASE("full_check merges all detectors and warns about unknown names") {
    Taxonomy t;
    const auto a = t.add_concept("A", {"a"});
    const auto b = t.add_concept("B", {"b"});
    t.add_edge(a, b, EdgeKind::IsA);
    AnnotationSet ann;
    ann.profiles["Ghost"].rigidity = Rigidity::Rigid;
    ann.individuals.insert("A");
    ann.category_assignments["A"] = Category::Object;

    const auto report = full_check(t, ann);
    CHECK(report.stats.count(ViolationKind::InstanceMixing));
    CHECK(!report.warnings.empty());
}
