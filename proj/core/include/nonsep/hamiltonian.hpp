#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nonsep/digraph.hpp"

namespace nonsep {

// Exact backtracking searches. `node_budget` bounds the number of search
// nodes; exceeding it throws BoundExceededError.
struct HamiltonSearch {
    std::int64_t node_budget = 50'000'000;
    std::int64_t nodes = 0;
};

// Hamiltonian cycle over allowed arcs, as a vertex sequence starting at 0.
std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const Digraph& d, HamiltonSearch* search = nullptr);
std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const Digraph& d, const ArcSubset& allowed,
                                                          HamiltonSearch* search = nullptr);

// Path from `from` to `to` visiting exactly the vertices in `vertices`
// (which must contain both ends). from == to is allowed only for a
// single-vertex set.
std::optional<std::vector<Vertex>> find_hamiltonian_path(const Digraph& d, const std::vector<Vertex>& vertices,
                                                         Vertex from, Vertex to, HamiltonSearch* search = nullptr);

// Arc set of a closed walk given as a vertex sequence (lowest arc index per
// consecutive pair). Throws if a pair is not an arc.
ArcSubset cycle_arcs(const Digraph& d, const std::vector<Vertex>& cycle);
ArcSubset path_arcs(const Digraph& d, const std::vector<Vertex>& path);

bool is_hamiltonian_cycle(const Digraph& d, const std::vector<Vertex>& cycle);

}  // namespace nonsep
