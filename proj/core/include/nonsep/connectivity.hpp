#pragma once

#include <optional>
#include <vector>

#include "nonsep/digraph.hpp"

namespace nonsep {

struct StrongComponents {
    // Components in topological order: no arc goes from a later component to
    // an earlier one. Vertices inside a component are sorted.
    std::vector<std::vector<Vertex>> components;
    std::vector<int> component_of;
    std::vector<char> initial;   // no arc enters the component
    std::vector<char> terminal;  // no arc leaves the component

    int count() const { return static_cast<int>(components.size()); }
    int initial_count() const;
};

StrongComponents strong_components(const Digraph& d);
StrongComponents strong_components(const Digraph& d, const ArcSubset& allowed);

bool is_strong(const Digraph& d);
bool is_strong(const Digraph& d, const ArcSubset& allowed);

// reach[u][v] == true iff v is reachable from u using allowed arcs.
std::vector<std::vector<char>> reachability(const Digraph& d, const ArcSubset& allowed);

// Maximum number of arc-disjoint s-t paths using allowed arcs, stopping once
// `limit` is reached.
int max_flow(const Digraph& d, Vertex s, Vertex t, const ArcSubset& allowed, int limit = 1 << 30);
int max_flow(const Digraph& d, Vertex s, Vertex t);

// lambda(D). Requires n >= 2.
int arc_connectivity(const Digraph& d);
bool is_k_arc_strong(const Digraph& d, int k);

// Arcs whose removal leaves D non-strong. D must be strong.
std::vector<ArcId> cut_arcs(const Digraph& d);
std::vector<ArcId> cut_arcs(const Digraph& d, const ArcSubset& allowed);

// Out-branching or out-tree. parent[v] is the arc entering v, kNoArc for the
// root and for vertices outside the tree.
struct OutBranching {
    Vertex root = 0;
    std::vector<ArcId> parent;
    std::vector<char> covered;

    static OutBranching empty(int n, Vertex root);
    bool contains(Vertex v) const { return covered[v] != 0; }
    bool spans_all() const;
    std::vector<ArcId> arc_ids() const;
    ArcSubset arc_set(const Digraph& d) const;
    void attach(const Digraph& d, ArcId a);  // head becomes covered
};

// Checks that `b` is an out-tree rooted at b.root on the covered vertices
// using only allowed arcs.
bool is_out_tree(const Digraph& d, const OutBranching& b);
bool is_out_branching(const Digraph& d, const OutBranching& b);

// Breadth-first out-tree from `root` over allowed arcs (lowest arc index
// first). Covers exactly the vertices reachable from root.
OutBranching bfs_out_tree(const Digraph& d, Vertex root, const ArcSubset& allowed);

struct OutBranchingResult {
    std::optional<OutBranching> branching;
    int initial_components = 0;
};

// Out-branching exists iff there is a unique initial strong component; the
// root is its lowest-index vertex.
OutBranchingResult has_out_branching(const Digraph& d);
OutBranchingResult has_out_branching(const Digraph& d, const ArcSubset& allowed);

struct EdmondsResult {
    std::vector<OutBranching> branchings;
    // Lowest-index vertex v with fewer than k arc-disjoint (s,v)-paths.
    std::optional<Vertex> deficient_vertex;
    int deficient_flow = 0;
    bool ok() const { return !deficient_vertex.has_value(); }
};

// k arc-disjoint out-branchings rooted at s, built greedily with a cut
// feasibility check after every arc.
EdmondsResult edmonds_branchings(const Digraph& d, Vertex s, int k);
EdmondsResult edmonds_branchings(const Digraph& d, Vertex s, int k, const ArcSubset& allowed);

}  // namespace nonsep
