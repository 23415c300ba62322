#include "nonsep/hamiltonian.hpp"

#include <bit>

#include "nonsep/errors.hpp"

namespace nonsep {

namespace {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

struct Adjacency {
    std::vector<Mask> out, in;
};

Adjacency masks(const Digraph& d, const ArcSubset& allowed) {
    if (d.order() > 64) throw BoundExceededError("hamiltonian search: n > 64");
    Adjacency a{std::vector<Mask>(d.order(), 0), std::vector<Mask>(d.order(), 0)};
    for (ArcId i = 0; i < d.size(); ++i) {
        if (!allowed.contains(i)) continue;
        a.out[d.arc(i).tail] |= bit(d.arc(i).head);
        a.in[d.arc(i).head] |= bit(d.arc(i).tail);
    }
    return a;
}

class PathSearch {
public:
    PathSearch(const Adjacency& adj, Vertex start, Vertex finish, bool closed, HamiltonSearch* s)
        : adj_(adj), start_(start), finish_(finish), closed_(closed), search_(s) {}

    bool run(Mask vertex_set) {
        path_.assign(1, start_);
        remaining_ = vertex_set & ~bit(start_);
        return extend(start_);
    }

    const std::vector<Vertex>& path() const { return path_; }

private:
    bool viable(Vertex end) const {
        // Vertices still to be placed need an entry and an exit.
        Mask pool_in = remaining_ | bit(end);
        Mask pool_out = remaining_ | (closed_ ? bit(start_) : 0);
        for (Mask r = remaining_; r; r &= r - 1) {
            Vertex w = std::countr_zero(r);
            if (!closed_ && w == finish_) {
                if (!(adj_.in[w] & pool_in)) return false;
                continue;
            }
            if (!(adj_.in[w] & pool_in) || !(adj_.out[w] & pool_out)) return false;
        }
        return true;
    }

    bool extend(Vertex end) {
        if (search_ && ++search_->nodes > search_->node_budget)
            throw BoundExceededError("hamiltonian search: node budget exhausted");
        if (remaining_ == 0) return closed_ ? (adj_.out[end] & bit(start_)) != 0 : end == finish_;
        if (!viable(end)) return false;
        Mask options = adj_.out[end] & remaining_;
        if (!closed_ && (remaining_ & ~bit(finish_))) options &= ~bit(finish_);
        for (; options; options &= options - 1) {
            Vertex w = std::countr_zero(options);
            remaining_ &= ~bit(w);
            path_.push_back(w);
            if (extend(w)) return true;
            path_.pop_back();
            remaining_ |= bit(w);
        }
        return false;
    }

    const Adjacency& adj_;
    Vertex start_, finish_;
    bool closed_;
    HamiltonSearch* search_;
    std::vector<Vertex> path_;
    Mask remaining_ = 0;
};

}  // namespace

std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const Digraph& d, HamiltonSearch* search) {
    return find_hamiltonian_cycle(d, ArcSubset::all_of(d), search);
}

std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const Digraph& d, const ArcSubset& allowed,
                                                          HamiltonSearch* search) {
    const int n = d.order();
    if (n == 0) return std::nullopt;
    if (n == 1) return std::vector<Vertex>{0};
    Adjacency adj = masks(d, allowed);
    PathSearch ps(adj, 0, 0, true, search);
    Mask all = n == 64 ? ~Mask{0} : (bit(n) - 1);
    if (!ps.run(all)) return std::nullopt;
    return ps.path();
}

std::optional<std::vector<Vertex>> find_hamiltonian_path(const Digraph& d, const std::vector<Vertex>& vertices,
                                                         Vertex from, Vertex to, HamiltonSearch* search) {
    Adjacency adj = masks(d, ArcSubset::all_of(d));
    Mask set = 0;
    for (Vertex v : vertices) set |= bit(v);
    if (!(set & bit(from)) || !(set & bit(to))) throw PreconditionError("find_hamiltonian_path: ends not in set");
    if (from == to) {
        if (std::popcount(set) == 1) return std::vector<Vertex>{from};
        return std::nullopt;
    }
    PathSearch ps(adj, from, to, false, search);
    if (!ps.run(set)) return std::nullopt;
    return ps.path();
}

ArcSubset path_arcs(const Digraph& d, const std::vector<Vertex>& path) {
    ArcSubset s(d.size());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        auto a = d.find_arc(path[i], path[i + 1]);
        if (!a) throw PreconditionError("path_arcs: missing arc " + std::to_string(path[i]) + "->" +
                                        std::to_string(path[i + 1]));
        s.insert(*a);
    }
    return s;
}

ArcSubset cycle_arcs(const Digraph& d, const std::vector<Vertex>& cycle) {
    ArcSubset s = path_arcs(d, cycle);
    if (cycle.size() >= 2) {
        auto a = d.find_arc(cycle.back(), cycle.front());
        if (!a) throw PreconditionError("cycle_arcs: missing closing arc");
        s.insert(*a);
    }
    return s;
}

bool is_hamiltonian_cycle(const Digraph& d, const std::vector<Vertex>& cycle) {
    const int n = d.order();
    if (static_cast<int>(cycle.size()) != n || n == 0) return false;
    std::vector<char> seen(n, 0);
    for (Vertex v : cycle) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    if (n == 1) return true;
    for (int i = 0; i < n; ++i)
        if (!d.has_arc(cycle[i], cycle[(i + 1) % n])) return false;
    return true;
}

}  // namespace nonsep
