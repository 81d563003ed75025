#pragma once

// Shared test helpers: random DAG generation plus independent brute-force
// oracles. The oracles deliberately avoid the library's graph machinery.

#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "taxolint/annotations.hpp"
#include "taxolint/taxonomy.hpp"

namespace testutil {

struct RawDag {
    int n = 0;
    // (child, parent) index pairs with parent < child, so acyclicity holds
    // by construction.
    std::vector<std::pair<int, int>> edges;
};

inline std::string node_name(int i) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "N%03d", i);
    return buf;
}

inline RawDag random_dag(std::mt19937& rng, int max_nodes, int max_edges) {
    RawDag dag;
    dag.n = std::uniform_int_distribution<int>(2, max_nodes)(rng);
    const int m = std::uniform_int_distribution<int>(0, max_edges)(rng);
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < m; ++i) {
        int a = std::uniform_int_distribution<int>(0, dag.n - 1)(rng);
        int b = std::uniform_int_distribution<int>(0, dag.n - 1)(rng);
        if (a == b) continue;
        const int child = std::max(a, b);
        const int parent = std::min(a, b);
        if (seen.insert({child, parent}).second) dag.edges.emplace_back(child, parent);
    }
    return dag;
}

inline taxolint::Taxonomy build_taxonomy(const RawDag& dag) {
    taxolint::Taxonomy t;
    for (int i = 0; i < dag.n; ++i) t.add_concept(node_name(i), {node_name(i)});
    for (const auto& [child, parent] : dag.edges)
        t.add_edge(static_cast<taxolint::ConceptId>(child),
                   static_cast<taxolint::ConceptId>(parent), taxolint::EdgeKind::IsA);
    return t;
}

// Per-node depth-first reachability, recursion over a plain adjacency list.
inline std::vector<std::set<int>> oracle_ancestors(const RawDag& dag) {
    std::vector<std::vector<int>> up(dag.n);
    for (const auto& [child, parent] : dag.edges) up[child].push_back(parent);
    std::vector<std::set<int>> result(dag.n);
    for (int start = 0; start < dag.n; ++start) {
        std::vector<int> stack = up[start];
        while (!stack.empty()) {
            const int cur = stack.back();
            stack.pop_back();
            if (result[start].insert(cur).second)
                for (int p : up[cur]) stack.push_back(p);
        }
    }
    return result;
}

inline taxolint::MetaProfile random_profile(std::mt19937& rng) {
    using namespace taxolint;
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    MetaProfile p;
    p.rigidity = static_cast<Rigidity>(pick(4));
    p.identity = static_cast<Identity>(pick(4));
    p.dependence = static_cast<Dependence>(pick(3));
    p.notional_dependence = static_cast<NotionalDep>(pick(3));
    p.unity = static_cast<Unity>(pick(4));
    p.extensionality = static_cast<Extensionality>(pick(3));
    p.concreteness = static_cast<Concreteness>(pick(3));
    return p;
}

inline taxolint::AnnotationSet random_annotations(std::mt19937& rng, const RawDag& dag) {
    taxolint::AnnotationSet ann;
    for (int i = 0; i < dag.n; ++i) ann.profiles[node_name(i)] = random_profile(rng);
    return ann;
}

}  // namespace testutil
