#include <doctest.h>

#include <set>
#include <sstream>

#include "taxolint/restructure.hpp"
#include "test_util.hpp"

using namespace taxolint;

namespace {

AnnotationSet parse(const std::string& text) {
    std::istringstream in(text);
    return parse_annotations(in).annotations;
}

std::set<std::string> names_of(const Taxonomy& t) {
    std::set<std::string> out;
    for (ConceptId id : t.all_sorted()) out.insert(t.concept_of(id).name);
    return out;
}

std::set<std::string> child_names(const Taxonomy& t, const std::string& parent) {
    std::set<std::string> out;
    for (ConceptId id : t.children(t.require(parent))) out.insert(t.concept_of(id).name);
    return out;
}

}  // namespace

TEST_CASE("extract_backbone: anti-rigid layer removed, grandchildren re-attached") {
    Taxonomy t;
    const auto animal = t.add_concept("Animal", {"animal"});
    const auto chordate = t.add_concept("Chordate", {"chordate"});
    const auto prey = t.add_concept("Prey", {"prey"});
    const auto work = t.add_concept("Work_Animal", {"work animal"});
    const auto species = t.add_concept("SomeSpecies", {"some species"});
    t.add_edge(chordate, animal, EdgeKind::IsA);
    t.add_edge(prey, animal, EdgeKind::IsA);
    t.add_edge(work, animal, EdgeKind::IsA);
    t.add_edge(species, prey, EdgeKind::IsA);
    const auto ann = parse(
        "P Animal +R\nP Chordate +R\nP Prey ~R\nP Work_Animal ~R\nP SomeSpecies +R\n");

    const auto result = extract_backbone(t, ann);
    CHECK(names_of(result.backbone) ==
          std::set<std::string>{"Animal", "Chordate", "SomeSpecies"});
    CHECK(result.removed == std::vector<std::string>{"Prey", "Work_Animal"});
    CHECK(child_names(result.backbone, "Animal") ==
          std::set<std::string>{"Chordate", "SomeSpecies"});
}

TEST_CASE("extract_backbone: all-rigid input is the identity") {
    std::mt19937 rng(97);
    const auto dag = testutil::random_dag(rng, 40, 80);
    const auto t = testutil::build_taxonomy(dag);
    AnnotationSet ann;
    for (int i = 0; i < dag.n; ++i) ann.profiles[testutil::node_name(i)].rigidity = Rigidity::Rigid;
    const auto result = extract_backbone(t, ann);
    CHECK(result.removed.empty());
    CHECK(names_of(result.backbone) == names_of(t));
    CHECK(result.backbone.edges().size() == t.edges().size());
}

TEST_CASE("extract_backbone: keep_unknown_rigidity flag") {
    Taxonomy t;
    const auto a = t.add_concept("A", {"a"});
    const auto b = t.add_concept("B", {"b"});
    t.add_edge(a, b, EdgeKind::IsA);
    AnnotationSet ann;
    ann.profiles["A"].rigidity = Rigidity::Rigid;  // B stays unannotated

    CHECK(names_of(extract_backbone(t, ann, true).backbone) == std::set<std::string>{"A", "B"});
    CHECK(names_of(extract_backbone(t, ann, false).backbone) == std::set<std::string>{"A"});
}

TEST_CASE("extract_backbone is idempotent and preserves retained reachability") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const auto dag = testutil::random_dag(rng, 120, 240);
        const auto ann = testutil::random_annotations(rng, dag);
        const auto t = testutil::build_taxonomy(dag);
        const auto reach = testutil::oracle_ancestors(dag);

        const auto result = extract_backbone(t, ann);
        const auto& bb = result.backbone;

        // No effectively anti-rigid concept survives.
        for (ConceptId id : bb.all_sorted()) {
            const auto* p = ann.profile_of(bb.concept_of(id).name);
            CHECK(!(p && p->rigidity == Rigidity::AntiRigid));
        }

        // Reachability between retained concepts is exactly what the oracle
        // says it was in the source.
        for (ConceptId c : bb.all_sorted()) {
            const int ci = std::stoi(bb.concept_of(c).name.substr(1));
            std::set<std::string> got;
            for (ConceptId a : bb.ancestors(c)) got.insert(bb.concept_of(a).name);
            std::set<std::string> want;
            for (int a : reach[ci]) {
                const auto name = testutil::node_name(a);
                if (bb.find(name)) want.insert(name);
            }
            REQUIRE(got == want);
        }

        // Idempotence: running again removes nothing.
        const auto again = extract_backbone(bb, ann);
        CHECK(again.removed.empty());
        CHECK(again.backbone.edges().size() == bb.edges().size());

        // Re-checking the backbone yields no rigidity or role-over-type
        // violations.
        const auto recheck = check_taxonomy(bb, ann);
        for (const auto& v : recheck.violations) {
            CHECK(v.kind != ViolationKind::Rigidity);
            CHECK(v.kind != ViolationKind::RoleOverType);
        }
    }
}

TEST_CASE("extract_backbone preserves INSTANCE_OF attachment kind") {
    Taxonomy t;
    const auto dominion = t.add_concept("Dominion", {"dominion"});
    const auto territory = t.add_concept("Trust_Territory", {"trust territory"});
    const auto macao = t.add_concept("Macao", {"macao"});
    t.add_edge(territory, dominion, EdgeKind::IsA);
    t.add_edge(macao, territory, EdgeKind::InstanceOf);
    const auto ann = parse("P Dominion +R\nP Trust_Territory ~R\nP Macao +R\n");
    const auto result = extract_backbone(t, ann);
    REQUIRE(result.backbone.edges().size() == 1);
    CHECK(result.backbone.edges()[0].kind == EdgeKind::InstanceOf);
    CHECK(result.backbone.is_instance(result.backbone.require("Macao")));
}

TEST_CASE("apply_mapping: no directives yields the ten category roots") {
    Taxonomy t;
    t.add_concept("Orphan", {"orphan"});
    const auto result = apply_mapping(t, AnnotationSet{});
    CHECK(result.cleaned.size() == 10);
    CHECK(result.cleaned.find(category_root_name(Category::Feature)).has_value());
    CHECK(result.cleaned.find(category_root_name(Category::AmountOfMatter)).has_value());
    CHECK(result.report.incompatibilities.empty());
    // Roots carry catalog profiles in the cleaned annotations.
    const auto* event_root = result.cleaned_annotations.profile_of(category_root_name(Category::Event));
    REQUIRE(event_root != nullptr);
    CHECK(event_root->dependence == Dependence::Dependent);
}

TEST_CASE("apply_mapping: COVER, REJECT, IMPORT and subtree transport") {
    Taxonomy t;
    const auto feature = t.add_concept("Relevant_Part", {"relevant part"});
    const auto edge3 = t.add_concept("Edge_3", {"edge"});
    const auto skin = t.add_concept("Skin_4", {"skin"});
    const auto bad = t.add_concept("Bad_One", {"bad one"});
    t.add_edge(skin, edge3, EdgeKind::IsA);
    (void)feature;
    (void)bad;
    const auto ann = parse(
        "P Bad_One ~R\n"
        "M Relevant_Part COVER FEATURE\n"
        "M Edge_3 IMPORT Relevant_Part\n"
        "M Bad_One REJECT FEATURE\n");

    const auto result = apply_mapping(t, ann);
    const auto root = category_root_name(Category::Feature);
    CHECK(child_names(result.cleaned, root) == std::set<std::string>{"Relevant_Part"});
    CHECK(child_names(result.cleaned, "Relevant_Part") == std::set<std::string>{"Edge_3"});
    // The IMPORT brings the subtree along.
    CHECK(child_names(result.cleaned, "Edge_3") == std::set<std::string>{"Skin_4"});
    CHECK(!result.cleaned.find("Bad_One").has_value());

    const auto& row = result.report.rows.at(Category::Feature);
    CHECK(row.covered == std::vector<std::string>{"Relevant_Part"});
    REQUIRE(row.rejected.size() == 1);
    CHECK(row.rejected[0].first == "Bad_One");
    REQUIRE(row.imported.size() == 1);
    CHECK(row.imported[0].name == "Edge_3");
}

TEST_CASE("apply_mapping: incompatible placement is recorded, not refused") {
    Taxonomy t;
    t.add_concept("Heavy", {"heavy"});
    const auto ann = parse("P Heavy +C\nM Heavy COVER ABSTRACTION\n");
    const auto result = apply_mapping(t, ann);
    CHECK(result.cleaned.find("Heavy").has_value());
    REQUIRE(result.report.incompatibilities.size() == 1);
    CHECK(result.report.incompatibilities[0].kind == ViolationKind::CategoryIncompatible);
    CHECK(result.report.incompatibilities[0].subject == "Heavy");
}

TEST_CASE("apply_mapping: unknown targets and names throw") {
    Taxonomy t;
    t.add_concept("X", {"x"});
    CHECK_THROWS_AS(apply_mapping(t, parse("M X COVER NOT_A_TARGET\n")), UnknownDirectiveTarget);
    CHECK_THROWS_AS(apply_mapping(t, parse("M Ghost COVER FEATURE\n")), UnknownDirectiveTarget);
    // Forward reference to a concept placed only by a later directive.
    t.add_concept("Y", {"y"});
    CHECK_THROWS_AS(apply_mapping(t, parse("M Y COVER X\nM X COVER FEATURE\n")),
                    UnknownDirectiveTarget);
}
