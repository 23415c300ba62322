#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nonsep {

using Vertex = int;
using ArcId = int;

inline constexpr ArcId kNoArc = -1;

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;
    bool operator==(const Arc&) const = default;
};

// Directed multigraph on vertices 0..n-1 without loops. Arcs keep their
// insertion index; every tie-break in the library resolves to the lowest
// vertex index first and the lowest arc index second.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    Digraph(int n, const std::vector<Arc>& arcs);
    Digraph(int n, std::initializer_list<std::pair<int, int>> arcs);

    ArcId add_arc(Vertex tail, Vertex head);

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(arcs_.size()); }
    const Arc& arc(ArcId a) const { return arcs_[a]; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    std::span<const ArcId> out_arcs(Vertex v) const { return out_[v]; }
    std::span<const ArcId> in_arcs(Vertex v) const { return in_[v]; }
    int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }

    int multiplicity(Vertex u, Vertex v) const { return mult_[index(u, v)]; }
    bool has_arc(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }
    bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }
    // Lowest-index arc u->v, if any.
    std::optional<ArcId> find_arc(Vertex u, Vertex v) const;

    bool is_simple() const;
    Digraph converse() const;
    std::vector<Vertex> out_neighbours(Vertex v) const;
    std::vector<Vertex> in_neighbours(Vertex v) const;

    bool operator==(const Digraph& other) const { return n_ == other.n_ && arcs_ == other.arcs_; }

private:
    std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<ArcId>> out_;
    std::vector<std::vector<ArcId>> in_;
    std::vector<int> mult_;
};

// Mask over the arc indices of one digraph.
class ArcSubset {
public:
    ArcSubset() = default;
    explicit ArcSubset(int arc_count, bool all = false) : bits_(arc_count, all ? 1 : 0) {}
    static ArcSubset all_of(const Digraph& d) { return ArcSubset(d.size(), true); }
    static ArcSubset none_of(const Digraph& d) { return ArcSubset(d.size(), false); }
    static ArcSubset of(const Digraph& d, std::span<const ArcId> ids);

    int universe() const noexcept { return static_cast<int>(bits_.size()); }
    bool contains(ArcId a) const { return bits_[a] != 0; }
    void insert(ArcId a) { bits_[a] = 1; }
    void erase(ArcId a) { bits_[a] = 0; }
    int count() const;
    bool empty() const { return count() == 0; }
    std::vector<ArcId> members() const;
    ArcSubset complement() const;
    ArcSubset operator|(const ArcSubset& o) const;
    ArcSubset operator&(const ArcSubset& o) const;
    ArcSubset operator-(const ArcSubset& o) const;
    bool disjoint(const ArcSubset& o) const;
    bool operator==(const ArcSubset&) const = default;

private:
    std::vector<char> bits_;
};

// Subdigraph with index maps back to the parent digraph.
struct Subdigraph {
    Digraph graph;
    std::vector<Vertex> parent_vertex;  // local vertex -> parent vertex
    std::vector<ArcId> parent_arc;      // local arc -> parent arc
    std::vector<Vertex> local_vertex;   // parent vertex -> local vertex or -1
};

Subdigraph induced(const Digraph& d, std::span<const Vertex> vertices);
Subdigraph induced(const Digraph& d, std::span<const Vertex> vertices, const ArcSubset& allowed);
Subdigraph spanning(const Digraph& d, const ArcSubset& allowed);

struct CutDegrees {
    int out = 0;
    int in = 0;
    bool operator==(const CutDegrees&) const = default;
};

// d+(X), d-(X). X must be nonempty and a proper subset of V.
CutDegrees degrees(const Digraph& d, std::span<const Vertex> x);

int min_out_degree(const Digraph& d);
int min_in_degree(const Digraph& d);
int min_semi_degree(const Digraph& d);

bool is_oriented(const Digraph& d);
bool is_semicomplete(const Digraph& d);

struct AlphaAtMostTwo {
    bool holds = true;
    std::optional<std::array<Vertex, 3>> witness;  // independent triple
};

// O(n^3) test of alpha(D) <= 2.
AlphaAtMostTwo alpha_at_most_two(const Digraph& d);

// Exact independence number of UG(D); n <= 64.
int independence_number(const Digraph& d);

class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int n);
    UndirectedGraph(int n, std::initializer_list<std::pair<int, int>> edges);

    // Adds the edge {u,v} if absent; returns its id.
    int add_edge(Vertex u, Vertex v);

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }
    const std::pair<Vertex, Vertex>& edge(int e) const { return edges_[e]; }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
    bool adjacent(Vertex u, Vertex v) const { return edge_id_[index(u, v)] >= 0; }
    int edge_id(Vertex u, Vertex v) const { return edge_id_[index(u, v)]; }
    const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int min_degree() const;

private:
    std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<int> edge_id_;
};

UndirectedGraph underlying_graph(const Digraph& d);

// Undirected helpers over an edge mask (empty mask = all edges).
bool is_connected(const UndirectedGraph& g, const std::vector<char>& edge_mask = {});
int independence_number(const UndirectedGraph& g);
bool is_two_edge_connected(const UndirectedGraph& g);

// Brute-force isomorphism on multiplicity matrices (n <= 9). Returns the map
// from vertices of `a` to vertices of `b`.
std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& a, const Digraph& b);

// Relabels vertices: vertex v of `d` becomes perm[v]. Arc order is kept.
Digraph relabel(const Digraph& d, std::span<const Vertex> perm);

std::string to_string(const Digraph& d);

}  // namespace nonsep
