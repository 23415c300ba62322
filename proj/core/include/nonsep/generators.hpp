#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "nonsep/digraph.hpp"
#include "nonsep/tree.hpp"

namespace nonsep {

using Rng = std::mt19937_64;

// Simple digraph from a 0/1 adjacency matrix, arcs in row-major order.
Digraph from_adjacency(const std::vector<std::vector<char>>& adj);

// Random relabelling (arc order follows the new labels, row-major).
Digraph shuffle_labels(const Digraph& d, Rng& rng);

// Random triangle-free graph by the greedy process over a random pair order.
// Each admissible pair is taken with probability `accept`; vertex degrees are
// capped at `max_degree` (negative: no cap).
UndirectedGraph random_triangle_free(int n, Rng& rng, double accept = 1.0, int max_degree = -1);

struct Alpha2Options {
    double accept = 1.0;         // greedy acceptance for the triangle-free complement
    int max_complement_degree = -1;
    double digon_probability = 0.0;  // chance an adjacent pair gets both arcs
};

// UG(D) is the complement of a random triangle-free graph, so alpha(D) <= 2.
Digraph random_alpha2_digraph(int n, Rng& rng, const Alpha2Options& opt = {});

// Deletes arcs in random order while lambda >= 2 and alpha <= 2 survive.
// `keep` arcs are never deleted.
Digraph thin_alpha2(const Digraph& d, Rng& rng, const ArcSubset* keep = nullptr);

// Two rotational tournaments joined by junction vertices along a long cycle:
// the skeleton digraph has two initial components; 16 to 24 vertices. `dense`
// adds random reverse arcs inside both tournaments.
Digraph two_initial_family(Rng& rng, bool dense);

// Co-bipartite digraph with strong semicomplete sides and one vertex per side
// without neighbours across.
Digraph co_bipartite_family(int n1, int n2, Rng& rng, bool oriented, double cross = 0.5);

enum class Regime { HighInDegree, OrientedInDegree3 };

// 2-arc-strong, alpha <= 2, n in [n_min, n_max] and the regime's degree
// condition. family: 0 random alpha <= 2, 1 two-initial, 2 co-bipartite.
Digraph branching_instance(Regime regime, int family, int n_min, int n_max, Rng& rng);

// 2-arc-strong digraph with alpha <= 2 on n vertices.
Digraph tree_instance(int n, Rng& rng, bool thin);

struct HamiltonianInstance {
    Digraph graph;
    std::vector<Vertex> cycle;
};

// Oriented, alpha = 2, lambda >= 2, hamiltonian.
HamiltonianInstance hamiltonian_oriented_instance(int n, Rng& rng);

// Hamiltonian oriented instance whose UG(D) - A(C) has exactly two
// components (random split of the cycle), labels shuffled.
HamiltonianInstance hamiltonian_two_component_instance(int n, Rng& rng);

// Nine-vertex instance on the cycle 0..8 whose component layout matches the
// template behind `route` (one of the X2* routes). Null after `attempts`.
std::optional<HamiltonianInstance> template_instance(HamTreeRoute route, Rng& rng, int attempts = 200000);

// alpha <= 2, min degree >= 4, 2-edge-connected.
UndirectedGraph undirected_instance(int n, Rng& rng);

// Every simple digraph on n <= 4 vertices (4^(n choose 2) of them).
std::vector<Digraph> all_simple_digraphs(int n);

// Simple digraph with each arc present independently with probability p.
Digraph random_digraph(int n, double p, Rng& rng);

// Semicomplete digraph with the given digon probability.
Digraph random_semicomplete(int n, Rng& rng, double digon_probability = 0.0);

// Semicomplete digraph whose strong components have the given sizes, in
// acyclic order (parts are random strong semicomplete digraphs; a part of size
// 2 is a digon). Labels follow the parts.
Digraph layered_semicomplete(const std::vector<int>& sizes, Rng& rng, double digon_probability = 0.0);

// Tournament whose pair (i,j), i<j, in row-major order takes bit k of code:
// set means j -> i.
Digraph tournament_from_code(int n, std::uint64_t code);

}  // namespace nonsep
