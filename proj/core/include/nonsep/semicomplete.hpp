#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonsep/connectivity.hpp"
#include "nonsep/digraph.hpp"

namespace nonsep {

// Hamiltonian cycle of a strong semicomplete digraph by cycle insertion.
// Returned as a vertex sequence; n == 1 gives {0}.
std::vector<Vertex> camion_hamiltonian_cycle(const Digraph& d);
// Same construction with insertion order and starting cycle perturbed by seed.
std::vector<Vertex> camion_hamiltonian_cycle(const Digraph& d, std::uint64_t seed);

// Ordered partition S_1..S_p of V. Arcs from S_j to S_i with j > i are
// backward; `backward_arcs` is sorted in the natural ordering (decreasing
// tail block, then increasing arc index).
struct Decomposition {
    std::vector<std::vector<Vertex>> blocks;
    std::vector<int> block_of;
    std::vector<ArcId> backward_arcs;

    int size() const { return static_cast<int>(blocks.size()); }
};

// Strong components in topological order; no backward arcs.
Decomposition strong_decomposition(const Digraph& d);

// Decomposition of a strong digraph whose backward arcs are exactly its
// cut-arcs and whose blocks are strong.
Decomposition nice_decomposition(const Digraph& d);

enum class S4Variant { S4, S4_1, S4_2, S4_3 };
std::string to_string(S4Variant v);

Digraph reference_w1();
Digraph reference_w2();
Digraph reference_s4(S4Variant v = S4Variant::S4);

// Map from vertices of the reference digraph to vertices of d, if d is
// isomorphic (as a multigraph, arc multiplicities capped at two) to one of
// S4, S4_1, S4_2, S4_3.
struct S4Match {
    S4Variant variant;
    std::vector<Vertex> map;
};
std::optional<S4Match> match_s4_family(const Digraph& d);

struct StrongPairResult {
    std::optional<std::pair<ArcSubset, ArcSubset>> pair;
    std::optional<S4Variant> exception;
    std::int64_t search_nodes = 0;
    bool fast_path = false;
};

// Two arc-disjoint strong spanning subdigraphs of a 2-arc-strong semicomplete
// multigraph, or the exceptional S4 family member.
StrongPairResult two_arc_disjoint_strong_spanning(const Digraph& d, std::int64_t node_budget = 20'000'000);

struct CycleCover {
    std::vector<Vertex> c1, c2;  // c2 empty when c1 is Hamiltonian
    bool hamiltonian() const { return c2.empty(); }
};

// Strong digraph with alpha <= 2: a Hamiltonian cycle, or two cycles covering
// V whose intersection is empty or a common subpath.
CycleCover chen_manalastras_cover(const Digraph& d);

enum class SkeletonKind { A, B1, B2, B3 };
std::string to_string(SkeletonKind k);

struct SpanningSkeleton {
    SkeletonKind kind = SkeletonKind::B1;
    ArcSubset arcs;  // the strong spanning subdigraph S (kinds B*)
    CycleCover cover;
    Vertex x = -1, y = -1;  // ends of the common path (B2), or the common vertex (B3)
    std::vector<Vertex> v1, v2;  // kind A parts
    Vertex u1 = -1, u2 = -1;     // kind A vertices with no neighbour across
};

struct CaseAPartition {
    std::vector<Vertex> v1, v2;
    Vertex u1 = -1, u2 = -1;
};

// Partition V = V1 + V2 with D[Vi] strong semicomplete and ui in Vi having no
// neighbour in V(3-i), if one exists (lowest u1 first).
std::optional<CaseAPartition> find_case_a_partition(const Digraph& d);

// Strong digraph with alpha <= 2 and n <= 24 when not Hamiltonian.
SpanningSkeleton classify_small_strong(const Digraph& d);

// Degree/independence checks of a skeleton; returns an empty string when
// all hold, otherwise a description of the first failure.
std::string check_skeleton(const Digraph& d, const SpanningSkeleton& s);

}  // namespace nonsep
