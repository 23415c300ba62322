#include "nonsep/digraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "nonsep/errors.hpp"

namespace nonsep {

Digraph::Digraph(int n) : n_(n), out_(n), in_(n), mult_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 0) throw PreconditionError("negative vertex count");
}

Digraph::Digraph(int n, const std::vector<Arc>& arcs) : Digraph(n) {
    for (const auto& a : arcs) add_arc(a.tail, a.head);
}

Digraph::Digraph(int n, std::initializer_list<std::pair<int, int>> arcs) : Digraph(n) {
    for (const auto& [u, v] : arcs) add_arc(u, v);
}

void Digraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
}

ArcId Digraph::add_arc(Vertex tail, Vertex head) {
    check_vertex(tail);
    check_vertex(head);
    if (tail == head) throw PreconditionError("loop at vertex " + std::to_string(tail));
    ArcId id = size();
    arcs_.push_back({tail, head});
    out_[tail].push_back(id);
    in_[head].push_back(id);
    ++mult_[index(tail, head)];
    return id;
}

std::optional<ArcId> Digraph::find_arc(Vertex u, Vertex v) const {
    if (!has_arc(u, v)) return std::nullopt;
    for (ArcId a : out_[u])
        if (arcs_[a].head == v) return a;
    return std::nullopt;
}

bool Digraph::is_simple() const {
    return std::all_of(mult_.begin(), mult_.end(), [](int m) { return m <= 1; });
}

Digraph Digraph::converse() const {
    Digraph r(n_);
    for (const auto& a : arcs_) r.add_arc(a.head, a.tail);
    return r;
}

std::vector<Vertex> Digraph::out_neighbours(Vertex v) const {
    std::vector<Vertex> r;
    for (Vertex w = 0; w < n_; ++w)
        if (has_arc(v, w)) r.push_back(w);
    return r;
}

std::vector<Vertex> Digraph::in_neighbours(Vertex v) const {
    std::vector<Vertex> r;
    for (Vertex w = 0; w < n_; ++w)
        if (has_arc(w, v)) r.push_back(w);
    return r;
}

ArcSubset ArcSubset::of(const Digraph& d, std::span<const ArcId> ids) {
    ArcSubset s(d.size());
    for (ArcId a : ids) s.insert(a);
    return s;
}

int ArcSubset::count() const {
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<ArcId> ArcSubset::members() const {
    std::vector<ArcId> r;
    for (int i = 0; i < universe(); ++i)
        if (bits_[i]) r.push_back(i);
    return r;
}

ArcSubset ArcSubset::complement() const {
    ArcSubset r(universe());
    for (int i = 0; i < universe(); ++i) r.bits_[i] = bits_[i] ? 0 : 1;
    return r;
}

ArcSubset ArcSubset::operator|(const ArcSubset& o) const {
    ArcSubset r = *this;
    for (int i = 0; i < universe(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
    return r;
}

ArcSubset ArcSubset::operator&(const ArcSubset& o) const {
    ArcSubset r = *this;
    for (int i = 0; i < universe(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
    return r;
}

ArcSubset ArcSubset::operator-(const ArcSubset& o) const {
    ArcSubset r = *this;
    for (int i = 0; i < universe(); ++i) r.bits_[i] = bits_[i] && !o.bits_[i];
    return r;
}

bool ArcSubset::disjoint(const ArcSubset& o) const {
    for (int i = 0; i < universe(); ++i)
        if (bits_[i] && o.bits_[i]) return false;
    return true;
}

Subdigraph induced(const Digraph& d, std::span<const Vertex> vertices) {
    return induced(d, vertices, ArcSubset::all_of(d));
}

Subdigraph induced(const Digraph& d, std::span<const Vertex> vertices, const ArcSubset& allowed) {
    Subdigraph s;
    s.local_vertex.assign(d.order(), -1);
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    s.graph = Digraph(static_cast<int>(sorted.size()));
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        s.local_vertex[sorted[i]] = static_cast<Vertex>(i);
        s.parent_vertex.push_back(sorted[i]);
    }
    for (ArcId a = 0; a < d.size(); ++a) {
        if (!allowed.contains(a)) continue;
        Vertex u = s.local_vertex[d.arc(a).tail], v = s.local_vertex[d.arc(a).head];
        if (u < 0 || v < 0) continue;
        s.graph.add_arc(u, v);
        s.parent_arc.push_back(a);
    }
    return s;
}

Subdigraph spanning(const Digraph& d, const ArcSubset& allowed) {
    std::vector<Vertex> all(d.order());
    std::iota(all.begin(), all.end(), 0);
    return induced(d, all, allowed);
}

CutDegrees degrees(const Digraph& d, std::span<const Vertex> x) {
    std::vector<char> in_x(d.order(), 0);
    int members = 0;
    for (Vertex v : x) {
        if (v < 0 || v >= d.order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
        if (!in_x[v]) ++members;
        in_x[v] = 1;
    }
    if (members == 0) throw PreconditionError("degrees: X is empty");
    if (members == d.order()) throw PreconditionError("degrees: X is the whole vertex set");
    CutDegrees c;
    for (const auto& a : d.arcs()) {
        if (in_x[a.tail] && !in_x[a.head]) ++c.out;
        if (!in_x[a.tail] && in_x[a.head]) ++c.in;
    }
    return c;
}

int min_out_degree(const Digraph& d) {
    int m = d.order() == 0 ? 0 : d.out_degree(0);
    for (Vertex v = 1; v < d.order(); ++v) m = std::min(m, d.out_degree(v));
    return m;
}

int min_in_degree(const Digraph& d) {
    int m = d.order() == 0 ? 0 : d.in_degree(0);
    for (Vertex v = 1; v < d.order(); ++v) m = std::min(m, d.in_degree(v));
    return m;
}

int min_semi_degree(const Digraph& d) { return std::min(min_out_degree(d), min_in_degree(d)); }

bool is_oriented(const Digraph& d) {
    for (Vertex u = 0; u < d.order(); ++u)
        for (Vertex v = 0; v < d.order(); ++v)
            if (d.multiplicity(u, v) > 1 || (u < v && d.has_arc(u, v) && d.has_arc(v, u))) return false;
    return true;
}

bool is_semicomplete(const Digraph& d) {
    for (Vertex u = 0; u < d.order(); ++u)
        for (Vertex v = u + 1; v < d.order(); ++v)
            if (!d.adjacent(u, v)) return false;
    return true;
}

AlphaAtMostTwo alpha_at_most_two(const Digraph& d) {
    const int n = d.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            if (d.adjacent(a, b)) continue;
            for (Vertex c = b + 1; c < n; ++c)
                if (!d.adjacent(a, c) && !d.adjacent(b, c)) return {false, std::array<Vertex, 3>{a, b, c}};
        }
    return {};
}

namespace {

// Maximum clique over 64-bit adjacency masks with greedy-colouring bounds.
class MaxClique {
public:
    explicit MaxClique(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

    int run() {
        std::uint64_t all = adj_.size() == 64 ? ~0ULL : ((1ULL << adj_.size()) - 1);
        expand(0, all);
        return best_;
    }

private:
    void expand(int size, std::uint64_t cand) {
        if (cand == 0) {
            best_ = std::max(best_, size);
            return;
        }
        if (size + colour_bound(cand) <= best_) return;
        while (cand) {
            if (size + std::popcount(cand) <= best_) return;
            int v = std::countr_zero(cand);
            cand &= ~(1ULL << v);
            expand(size + 1, cand & adj_[v]);
        }
    }

    int colour_bound(std::uint64_t cand) const {
        int colours = 0;
        while (cand) {
            ++colours;
            std::uint64_t avail = cand;
            while (avail) {
                int v = std::countr_zero(avail);
                avail &= ~(1ULL << v);
                avail &= ~adj_[v];
                cand &= ~(1ULL << v);
            }
        }
        return colours;
    }

    std::vector<std::uint64_t> adj_;
    int best_ = 0;
};

}  // namespace

int independence_number(const Digraph& d) {
    const int n = d.order();
    if (n > 64) throw BoundExceededError("independence_number: n > 64");
    std::vector<std::uint64_t> comp(n, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && !d.adjacent(u, v)) comp[u] |= 1ULL << v;
    return MaxClique(std::move(comp)).run();
}

UndirectedGraph::UndirectedGraph(int n) : n_(n), adj_(n), edge_id_(static_cast<std::size_t>(n) * n, -1) {
    if (n < 0) throw PreconditionError("negative vertex count");
}

UndirectedGraph::UndirectedGraph(int n, std::initializer_list<std::pair<int, int>> edges) : UndirectedGraph(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

int UndirectedGraph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) return edge_id(u, v);
    int id = size();
    edges_.emplace_back(std::min(u, v), std::max(u, v));
    edge_id_[index(u, v)] = edge_id_[index(v, u)] = id;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    std::sort(adj_[u].begin(), adj_[u].end());
    std::sort(adj_[v].begin(), adj_[v].end());
    return id;
}

int UndirectedGraph::min_degree() const {
    int m = n_ == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < n_; ++v) m = std::min(m, degree(v));
    return m;
}

UndirectedGraph underlying_graph(const Digraph& d) {
    UndirectedGraph g(d.order());
    for (Vertex u = 0; u < d.order(); ++u)
        for (Vertex v = u + 1; v < d.order(); ++v)
            if (d.adjacent(u, v)) g.add_edge(u, v);
    return g;
}

bool is_connected(const UndirectedGraph& g, const std::vector<char>& edge_mask) {
    const int n = g.order();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbours(u)) {
            if (seen[w]) continue;
            if (!edge_mask.empty() && !edge_mask[g.edge_id(u, w)]) continue;
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == n;
}

int independence_number(const UndirectedGraph& g) {
    const int n = g.order();
    if (n > 64) throw BoundExceededError("independence_number: n > 64");
    std::vector<std::uint64_t> comp(n, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && !g.adjacent(u, v)) comp[u] |= 1ULL << v;
    return MaxClique(std::move(comp)).run();
}

bool is_two_edge_connected(const UndirectedGraph& g) {
    if (g.order() < 2 || !is_connected(g)) return false;
    std::vector<char> mask(g.size(), 1);
    for (int e = 0; e < g.size(); ++e) {
        mask[e] = 0;
        bool ok = is_connected(g, mask);
        mask[e] = 1;
        if (!ok) return false;
    }
    return true;
}

std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& a, const Digraph& b) {
    const int n = a.order();
    if (n != b.order() || a.size() != b.size()) return std::nullopt;
    if (n > 9) throw BoundExceededError("find_isomorphism: n > 9");
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (a.multiplicity(u, v) != b.multiplicity(perm[u], perm[v])) {
                    ok = false;
                    break;
                }
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

Digraph relabel(const Digraph& d, std::span<const Vertex> perm) {
    Digraph r(d.order());
    for (const auto& a : d.arcs()) r.add_arc(perm[a.tail], perm[a.head]);
    return r;
}

std::string to_string(const Digraph& d) {
    std::ostringstream os;
    os << "n=" << d.order() << " arcs={";
    for (int i = 0; i < d.size(); ++i) os << (i ? ", " : "") << d.arc(i).tail << "->" << d.arc(i).head;
    os << "}";
    return os.str();
}

}  // namespace nonsep
