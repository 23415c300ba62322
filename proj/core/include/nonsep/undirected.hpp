#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonsep/digraph.hpp"

namespace nonsep {

using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

struct PathTreePair {
    std::vector<Vertex> path;
    std::vector<Edge> tree;
    bool disjoint = false;
    // complement-connected | both-cliques-large | both-cliques-three |
    // almost-complete-four | degree-four-rewire | retry | search
    std::string route;
};

bool is_hamiltonian_path(const UndirectedGraph& g, const std::vector<Vertex>& path);
bool is_spanning_tree(const UndirectedGraph& g, const std::vector<Edge>& tree);
// Hamiltonian path, spanning tree, edge-disjoint; sets nothing.
bool verify_path_tree_pair(const UndirectedGraph& g, const PathTreePair& p);

// Connected G with alpha(G) <= 2. Leaf exchange from a BFS tree rooted at
// `root`, with a backtracking fallback.
std::vector<Vertex> alpha2_hamiltonian_path(const UndirectedGraph& g, Vertex root = 0);

// Case analysis on one given hamiltonian path P: done when G - E(P) is
// connected, otherwise the two-component splices. Null when no case applies.
std::optional<PathTreePair> split_from_hamiltonian_path(const UndirectedGraph& g, const std::vector<Vertex>& path);

// 2-edge-connected G with min degree >= 4 and alpha(G) <= 2.
PathTreePair edge_disjoint_hp_and_tree(const UndirectedGraph& g, std::int64_t search_budget = 2'000'000);

// Exhaustive: a hamiltonian path whose complement is connected, if any.
std::optional<PathTreePair> oracle_path_tree_pair(const UndirectedGraph& g, std::int64_t node_budget = -1);

// Two triangles joined by a perfect matching.
UndirectedGraph prism_graph();

}  // namespace nonsep
