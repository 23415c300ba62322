#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nonsep/connectivity.hpp"
#include "nonsep/digraph.hpp"

namespace nonsep {

// Spanning trees of UG(D) are stored as arc subsets: one arc per used
// adjacency.

// Arcs of `tree` form a tree in UG(D) covering exactly `vertices` (all
// vertices when empty).
bool is_tree(const Digraph& d, const ArcSubset& tree);
bool is_spanning_tree(const Digraph& d, const ArcSubset& tree);
// Vertices incident with at least one arc of the subset.
std::vector<char> covered_vertices(const Digraph& d, const ArcSubset& arcs);

// Breadth-first spanning tree of UG over allowed arcs, lowest arc per step.
std::optional<ArcSubset> ug_spanning_tree(const Digraph& d, const ArcSubset& allowed);

struct SafetyReport {
    std::vector<std::vector<char>> reach_d;
    std::vector<std::vector<char>> reach_residual;
    bool equal = false;
};

SafetyReport verify_safe_tree(const Digraph& d, const ArcSubset& tree);
bool verify_nonsep_tree(const Digraph& d, const ArcSubset& tree);

enum class SafeTreeCase {
    Strong,           // complement of a hamiltonian cycle
    TwoLarge,         // two components of size >= 2
    ManyComponents,   // t >= 4
    ThreeOuterLarge,  // t = 3, the large component is first or last
    ThreeMiddleLarge, // t = 3, the large component is in the middle
    TwoComponents,    // t = 2, one singleton
};
std::string to_string(SafeTreeCase c);

struct SafeTreeResult {
    ArcSubset tree;
    SafeTreeCase kase = SafeTreeCase::Strong;
};

// Semicomplete D with n >= 5.
SafeTreeResult safe_spanning_tree_semicomplete(const Digraph& d);

// Extends a tree T with D - A(T) strong and at most two uncovered vertices
// inducing a semicomplete digraph. Requires lambda(D) >= 2. These conditions
// do not always suffice (DHAT with a 7-vertex path is a counterexample);
// NotGuaranteedError when every attachment separates.
ArcSubset tree_extension(const Digraph& d, const ArcSubset& tree);

// Lowest 5-subset (lexicographic) inducing a semicomplete subdigraph.
std::optional<std::vector<Vertex>> find_semicomplete_subset(const Digraph& d, int size = 5);

struct TreeOptions {
    bool verify_steps = false;           // re-check safety after every absorption
    // Absorb x only through two in- or out-neighbours u, v in the seed with
    // uv an arc. Default: any u, v in R with u reaching v in D[R].
    bool seed_pairs_only = false;
    std::int64_t search_budget = 5'000'000;  // fallback search nodes
};

struct NonsepTreeResult {
    ArcSubset tree;
    std::string route;  // semicomplete | growth | search
    std::vector<Vertex> seed;
    std::vector<Vertex> absorbed;
    int endgame_size = 0;  // |S| when growth stopped
    std::int64_t search_nodes = 0;
};

// alpha <= 2 and lambda >= 2, with a semicomplete subdigraph on 5 vertices.
NonsepTreeResult nonsep_spanning_tree(const Digraph& d, const TreeOptions& opt = {});

enum class HamTreeRoute {
    SingleComponent,
    SemicompleteSubset,
    X2FourSkipArc,        // |X2| = 4, no cycle arc inside X2, chord v3v5 style
    X2FourBackwardChain,  // |X2| = 4, chain v9v7v5v3
    X2FourInsideForward,  // |X2| = 4, one cycle arc inside X2, arc v7v9
    X2FourInsideBackward, // |X2| = 4, one cycle arc inside X2, arc v9v7
    X2ThreeForward,       // |X2| = 3, arc u7u9
    X2ThreeTriangle,      // |X2| = 3, directed triangle u9u7u5
    Search,
};
std::string to_string(HamTreeRoute r);

struct HamTreeResult {
    ArcSubset tree;
    ArcSubset strong_part;  // arc-disjoint strong spanning subdigraph, when a template produced it
    HamTreeRoute route = HamTreeRoute::SingleComponent;
    std::vector<std::vector<Vertex>> components;  // of UG(D) - A(C)
    std::vector<Vertex> labels;                   // v1..v9 when a template matched
    std::int64_t search_nodes = 0;
};

// Oriented D, lambda >= 2, alpha = 2, n >= 9, `cycle` a hamiltonian cycle.
HamTreeResult oriented_hamiltonian_nonsep_tree(const Digraph& d, const std::vector<Vertex>& cycle,
                                               const TreeOptions& opt = {});

}  // namespace nonsep
