#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nonsep/connectivity.hpp"
#include "nonsep/digraph.hpp"
#include "nonsep/semicomplete.hpp"

namespace nonsep {

// B is a spanning out-branching of D and D - A(B) is strong.
bool verify_nonsep_branching(const Digraph& d, const OutBranching& b);
inline bool verify_branching_certificate(const Digraph& d, const OutBranching& b) { return verify_nonsep_branching(d, b); }

// Out-tree covering V - {excluded} with D - A(T) strong.
bool verify_nonsep_out_tree(const Digraph& d, const OutBranching& t, Vertex excluded);

enum class SemicompleteCase {
    Trivial,            // single vertex
    TwoInDegreeOne,     // at least two vertices of in-degree one
    W1,                 // isomorphic to W1
    OneInDegreeOne,     // unique vertex of in-degree one, not W1
    SmallComplete,      // min in-degree >= 2, n <= 3
    NiceDecomposition,  // min in-degree >= 2, n >= 4
};
std::string to_string(SemicompleteCase c);

struct SemicompleteBranchingResult {
    SemicompleteCase kase = SemicompleteCase::Trivial;
    bool possible = false;
    std::optional<OutBranching> branching;
    // Exactly two in-degree-one vertices and not W2: out-tree rooted at one of
    // them spanning everything except the other.
    std::optional<OutBranching> out_tree;
    Vertex excluded = -1;
    bool is_w2 = false;
    std::vector<Vertex> in_degree_one;
    std::vector<Vertex> permitted_roots;
    std::string explanation;
};

// Strong simple semicomplete digraph. A requested root outside the permitted
// set raises PreconditionError; impossibility cases are reported, not thrown.
SemicompleteBranchingResult sd_nonsep_branching(const Digraph& d, std::optional<Vertex> root = std::nullopt);

// 2-arc-strong semicomplete multigraph, any root.
OutBranching sdmulti_nonsep_branching(const Digraph& d, Vertex root);

// Co-bipartite shape: V = V1 + V2 with D[Vi] strong semicomplete and a vertex
// of each side without neighbours across. Requires lambda >= 2 and
// min in-degree >= 3.
OutBranching case_a_nonsep_branching(const Digraph& d, const CaseAPartition& part);

struct ConstructionTrace {
    std::string route;  // semicomplete | case-A | single-initial | two-initial
    std::optional<SkeletonKind> skeleton_kind;
    ArcSubset skeleton;
    ArcSubset d_prime;
    int initial_components = 0;
    std::vector<Vertex> r1, r2;
    std::vector<Vertex> r1_star;
    std::vector<Vertex> growth_order;
    int r1_star_blocks = 0;
    ArcId entering_arc = kNoArc;  // uv
    ArcSubset d_star;
    std::vector<std::vector<Vertex>> paths;
    std::vector<std::string> claims_checked;
    // Paths that needed arcs of D - uv - A(B+) outside D*. P12 always does:
    // no arc of D' enters R2.
    int fallback_paths = 0;
};

struct MainBranchingResult {
    OutBranching branching;
    ConstructionTrace trace;
};

// 2-arc-strong D with alpha <= 2 and either min in-degree >= 5, or min
// in-degree >= 3 and D oriented.
MainBranchingResult main_nonsep_branching(const Digraph& d);

}  // namespace nonsep
