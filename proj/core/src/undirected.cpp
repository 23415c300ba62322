#include "nonsep/undirected.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "nonsep/errors.hpp"

namespace nonsep {

namespace {

Edge norm(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::set<Edge> path_edges(const std::vector<Vertex>& path) {
    std::set<Edge> s;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) s.insert(norm(path[i], path[i + 1]));
    return s;
}

bool alpha_le_two(const UndirectedGraph& g) {
    const int n = g.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            for (Vertex c = b + 1; c < n; ++c)
                if (!g.adjacent(a, c) && !g.adjacent(b, c)) return false;
        }
    return true;
}

// Components of G - E(P) and a BFS spanning forest of it.
struct Complement {
    std::vector<std::vector<Vertex>> components;
    std::vector<int> component_of;
    std::vector<Edge> forest;
};

Complement complement_of(const UndirectedGraph& g, const std::vector<Vertex>& path) {
    const int n = g.order();
    std::set<Edge> used = path_edges(path);
    Complement c;
    c.component_of.assign(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (c.component_of[s] >= 0) continue;
        const int id = static_cast<int>(c.components.size());
        c.components.push_back({s});
        c.component_of[s] = id;
        std::deque<Vertex> q{s};
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop_front();
            std::vector<Vertex> nb = g.neighbours(u);
            std::sort(nb.begin(), nb.end());
            for (Vertex w : nb) {
                if (c.component_of[w] >= 0 || used.count(norm(u, w))) continue;
                c.component_of[w] = id;
                c.components[id].push_back(w);
                c.forest.push_back(norm(u, w));
                q.push_back(w);
            }
        }
        std::sort(c.components[id].begin(), c.components[id].end());
    }
    return c;
}

std::optional<PathTreePair> pair_from_path(const UndirectedGraph& g, const std::vector<Vertex>& path,
                                           const std::string& route) {
    if (!is_hamiltonian_path(g, path)) return std::nullopt;
    Complement c = complement_of(g, path);
    if (c.components.size() != 1) return std::nullopt;
    PathTreePair p{path, c.forest, true, route};
    return p;
}

bool is_clique(const UndirectedGraph& g, const std::vector<Vertex>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

// Hamiltonian path of a clique starting at x and a spanning tree avoiding it.
std::pair<std::vector<Vertex>, std::vector<Edge>> clique_path_tree(std::vector<Vertex> k, Vertex x) {
    std::stable_partition(k.begin(), k.end(), [&](Vertex v) { return v == x; });
    std::vector<Edge> tree;
    for (std::size_t j = 2; j < k.size(); ++j) tree.push_back(norm(k[0], k[j]));
    tree.push_back(norm(k[1], k[3]));
    return {k, tree};
}

std::optional<PathTreePair> both_cliques(const UndirectedGraph& g, const std::vector<Vertex>& x1,
                                         const std::vector<Vertex>& x2) {
    std::vector<Edge> cross;
    std::vector<char> in2(g.order(), 0);
    for (Vertex v : x2) in2[v] = 1;
    for (Vertex a : x1)
        for (Vertex b : g.neighbours(a))
            if (in2[b]) cross.push_back({a, b});  // (X1 end, X2 end)
    std::sort(cross.begin(), cross.end());
    if (x2.size() >= 4) {
        if (cross.size() < 2) return std::nullopt;
        auto [a1, a2] = cross[0];
        auto [b1, b2] = cross[1];
        auto [p1, t1] = clique_path_tree(x1, a1);
        auto [p2, t2] = clique_path_tree(x2, a2);
        PathTreePair r;
        r.path.assign(p1.rbegin(), p1.rend());
        r.path.insert(r.path.end(), p2.begin(), p2.end());
        r.tree = t1;
        r.tree.insert(r.tree.end(), t2.begin(), t2.end());
        r.tree.push_back(norm(b1, b2));
        r.route = "both-cliques-large";
        return r;
    }
    // |X2| = 3: one X1-neighbour per X2 vertex.
    for (std::size_t i = 0; i < x2.size(); ++i) {
        const Vertex xx = x2[i], yy = x2[(i + 1) % 3], zz = x2[(i + 2) % 3];
        auto nb = [&](Vertex v, Vertex skip) -> std::optional<Vertex> {
            for (auto [a, b] : cross)
                if (b == v && a != skip) return a;
            return std::nullopt;
        };
        for (auto [a, b] : cross) {
            if (b != xx) continue;
            const Vertex x1v = a;
            auto y1 = nb(yy, -1);
            auto z1 = nb(zz, -1);
            if (!y1 || !z1) continue;
            auto [p1, t1] = clique_path_tree(x1, x1v);
            PathTreePair r;
            r.path.assign(p1.rbegin(), p1.rend());
            r.path.insert(r.path.end(), {xx, yy, zz});
            r.tree = t1;
            r.tree.push_back(norm(xx, zz));
            r.tree.push_back(norm(yy, *y1));
            r.tree.push_back(norm(zz, *z1));
            r.route = "both-cliques-three";
            r.disjoint = true;
            if (verify_path_tree_pair(g, r)) return r;
        }
    }
    return std::nullopt;
}

std::optional<PathTreePair> almost_complete_four(const UndirectedGraph& g, const std::vector<Vertex>& x1,
                                                 const std::vector<Vertex>& x2) {
    for (std::size_t i = 0; i < x1.size(); ++i)
        for (std::size_t j = i + 1; j < x1.size(); ++j) {
            const Vertex a1 = x1[i], b1 = x1[j];
            if (g.adjacent(a1, b1)) continue;
            std::vector<Vertex> rest;
            for (Vertex v : x1)
                if (v != a1 && v != b1) rest.push_back(v);
            // Splits: P1 = rest[0..k) + a1, P1' = rest[k..) + b1.
            for (std::size_t k = 0; k <= rest.size(); ++k) {
                std::vector<Vertex> p1(rest.begin(), rest.begin() + static_cast<long>(k));
                std::vector<Vertex> q1(rest.begin() + static_cast<long>(k), rest.end());
                p1.push_back(a1);
                q1.push_back(b1);
                // 4-cycle abcda in G[X2] with a ~ a1 and d ~ b1.
                for (Vertex a : x2)
                    for (Vertex b : x2)
                        for (Vertex c : x2)
                            for (Vertex d : x2) {
                                if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                                if (!g.adjacent(a, b) || !g.adjacent(b, c) || !g.adjacent(c, d) || !g.adjacent(d, a))
                                    continue;
                                if (!g.adjacent(a1, a) || !g.adjacent(b1, d)) continue;
                                std::vector<Vertex> path = p1;
                                path.insert(path.end(), {a, b, c, d});
                                path.insert(path.end(), q1.rbegin(), q1.rend());
                                if (auto r = pair_from_path(g, path, "almost-complete-four")) return r;
                            }
            }
        }
    return std::nullopt;
}

std::optional<PathTreePair> degree_four_rewire(const UndirectedGraph& g, const std::vector<Vertex>& path,
                                               const std::vector<Vertex>& x2) {
    std::vector<char> in2(g.order(), 0);
    for (Vertex v : x2) in2[v] = 1;
    const std::size_t n = path.size();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const Vertex x1v = path[i], before = path[i - 1], after = path[i + 1];
        if (in2[x1v] || !in2[before] || !in2[after] || !g.adjacent(before, after)) continue;
        std::vector<Vertex> shortened = path;
        shortened.erase(shortened.begin() + static_cast<long>(i));
        for (int end = 0; end < 2; ++end) {
            const Vertex p = end == 0 ? shortened.front() : shortened.back();
            if (in2[p] || !g.adjacent(p, x1v)) continue;
            std::vector<Vertex> cand = shortened;
            if (end == 0) cand.insert(cand.begin(), x1v);
            else cand.push_back(x1v);
            if (auto r = pair_from_path(g, cand, "degree-four-rewire")) return r;
        }
    }
    return std::nullopt;
}

std::optional<PathTreePair> follow_proof(const UndirectedGraph& g, const std::vector<Vertex>& path) {
    if (auto r = pair_from_path(g, path, "complement-connected")) return r;
    Complement c = complement_of(g, path);
    if (c.components.size() != 2) return std::nullopt;
    std::vector<Vertex> x1 = c.components[0], x2 = c.components[1];
    if (x1.size() < x2.size()) std::swap(x1, x2);
    if (x1.size() < 4) return std::nullopt;
    const bool k1 = is_clique(g, x1), k2 = is_clique(g, x2);
    std::optional<PathTreePair> r;
    if (k1 && k2) {
        r = both_cliques(g, x1, x2);
    } else {
        if (k1) std::swap(x1, x2);
        if (x2.size() == 4) r = almost_complete_four(g, x1, x2);
        else if (x2.size() == 3) r = degree_four_rewire(g, path, x2);
    }
    if (r) {
        r->disjoint = true;
        if (!verify_path_tree_pair(g, *r)) return std::nullopt;
    }
    return r;
}

std::optional<std::vector<Vertex>> backtrack_hamiltonian_path(const UndirectedGraph& g) {
    const int n = g.order();
    std::vector<Vertex> path;
    std::vector<char> used(n, 0);
    std::function<bool()> rec = [&]() {
        if (static_cast<int>(path.size()) == n) return true;
        std::vector<Vertex> nb = g.neighbours(path.back());
        std::sort(nb.begin(), nb.end());
        for (Vertex w : nb) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            if (rec()) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    };
    for (Vertex s = 0; s < n; ++s) {
        path = {s};
        used.assign(n, 0);
        used[s] = 1;
        if (rec()) return path;
    }
    return std::nullopt;
}

}  // namespace

bool is_hamiltonian_path(const UndirectedGraph& g, const std::vector<Vertex>& path) {
    if (static_cast<int>(path.size()) != g.order()) return false;
    std::vector<char> seen(g.order(), 0);
    for (Vertex v : path) {
        if (v < 0 || v >= g.order() || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.adjacent(path[i], path[i + 1])) return false;
    return true;
}

bool is_spanning_tree(const UndirectedGraph& g, const std::vector<Edge>& tree) {
    const int n = g.order();
    if (static_cast<int>(tree.size()) != n - 1) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto [a, b] : tree) {
        if (a < 0 || b < 0 || a >= n || b >= n || !g.adjacent(a, b)) return false;
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

bool verify_path_tree_pair(const UndirectedGraph& g, const PathTreePair& p) {
    if (!is_hamiltonian_path(g, p.path) || !is_spanning_tree(g, p.tree)) return false;
    std::set<Edge> used = path_edges(p.path);
    for (auto [a, b] : p.tree)
        if (used.count(norm(a, b))) return false;
    return true;
}

std::vector<Vertex> alpha2_hamiltonian_path(const UndirectedGraph& g, Vertex root) {
    const int n = g.order();
    if (n == 0) return {};
    if (!is_connected(g)) throw PreconditionError("alpha2_hamiltonian_path: graph is disconnected");
    if (!alpha_le_two(g)) throw PreconditionError("alpha2_hamiltonian_path: alpha > 2");
    if (n == 1) return {0};
    std::vector<std::set<Vertex>> tree(n);
    {
        std::vector<char> seen(n, 0);
        std::deque<Vertex> q{root};
        seen[root] = 1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop_front();
            std::vector<Vertex> nb = g.neighbours(u);
            std::sort(nb.begin(), nb.end());
            for (Vertex w : nb)
                if (!seen[w]) {
                    seen[w] = 1;
                    tree[u].insert(w);
                    tree[w].insert(u);
                    q.push_back(w);
                }
        }
    }
    auto tree_path = [&](Vertex s, Vertex t) {
        std::vector<Vertex> prev(n, -1);
        std::deque<Vertex> q{s};
        prev[s] = s;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop_front();
            for (Vertex w : tree[u])
                if (prev[w] < 0) prev[w] = u, q.push_back(w);
        }
        std::vector<Vertex> p{t};
        while (p.back() != s) p.push_back(prev[p.back()]);
        std::reverse(p.begin(), p.end());
        return p;
    };
    while (true) {
        std::vector<Vertex> leaves;
        for (Vertex v = 0; v < n; ++v)
            if (tree[v].size() == 1) leaves.push_back(v);
        if (leaves.size() <= 2) break;
        std::optional<std::pair<Vertex, Vertex>> pair;
        for (std::size_t i = 0; i < leaves.size() && !pair; ++i)
            for (std::size_t j = i + 1; j < leaves.size(); ++j)
                if (g.adjacent(leaves[i], leaves[j])) {
                    pair = std::pair{leaves[i], leaves[j]};
                    break;
                }
        if (!pair) break;
        std::vector<Vertex> p = tree_path(pair->first, pair->second);
        std::size_t k = 1;
        while (k + 1 < p.size() && tree[p[k]].size() < 3) ++k;
        if (k + 1 >= p.size()) break;
        tree[p[k]].erase(p[k + 1]);
        tree[p[k + 1]].erase(p[k]);
        tree[pair->first].insert(pair->second);
        tree[pair->second].insert(pair->first);
    }
    std::vector<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (tree[v].size() == 1) leaves.push_back(v);
    if (leaves.size() == 2) {
        std::vector<Vertex> path{leaves[0]};
        Vertex prev = -1;
        while (static_cast<int>(path.size()) < n) {
            Vertex cur = path.back(), next = -1;
            for (Vertex w : tree[cur])
                if (w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            path.push_back(next);
        }
        if (is_hamiltonian_path(g, path)) return path;
    }
    auto p = backtrack_hamiltonian_path(g);
    if (!p) throw InternalInvariantError("alpha2_hamiltonian_path: no hamiltonian path");
    return *p;
}

std::optional<PathTreePair> split_from_hamiltonian_path(const UndirectedGraph& g, const std::vector<Vertex>& path) {
    if (!is_hamiltonian_path(g, path)) throw PreconditionError("split_from_hamiltonian_path: not a hamiltonian path");
    return follow_proof(g, path);
}

std::optional<PathTreePair> oracle_path_tree_pair(const UndirectedGraph& g, std::int64_t node_budget) {
    const int n = g.order();
    std::vector<Vertex> path;
    std::vector<char> used(n, 0);
    std::int64_t nodes = 0;
    std::optional<PathTreePair> found;
    std::function<bool()> rec = [&]() {
        if (node_budget >= 0 && ++nodes > node_budget) throw BoundExceededError("oracle_path_tree_pair: budget");
        if (static_cast<int>(path.size()) == n) {
            found = pair_from_path(g, path, "search");
            return found.has_value();
        }
        std::vector<Vertex> nb = g.neighbours(path.back());
        std::sort(nb.begin(), nb.end());
        for (Vertex w : nb) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            if (rec()) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    };
    for (Vertex s = 0; s < n; ++s) {
        path = {s};
        used.assign(n, 0);
        used[s] = 1;
        if (rec()) return found;
    }
    return std::nullopt;
}

PathTreePair edge_disjoint_hp_and_tree(const UndirectedGraph& g, std::int64_t search_budget) {
    if (g.order() < 2) throw PreconditionError("edge_disjoint_hp_and_tree: fewer than two vertices");
    if (g.min_degree() < 4) throw PreconditionError("edge_disjoint_hp_and_tree: minimum degree below 4");
    if (!is_two_edge_connected(g)) throw PreconditionError("edge_disjoint_hp_and_tree: not 2-edge-connected");
    if (!alpha_le_two(g)) throw PreconditionError("edge_disjoint_hp_and_tree: alpha > 2");
    for (Vertex root = 0; root < g.order(); ++root) {
        std::vector<Vertex> p = alpha2_hamiltonian_path(g, root);
        if (auto r = follow_proof(g, p)) {
            if (root > 0) r->route = "retry:" + r->route;
            return *r;
        }
    }
    if (auto r = oracle_path_tree_pair(g, search_budget)) return *r;
    throw InternalInvariantError("edge_disjoint_hp_and_tree: no construction matched and search failed");
}

UndirectedGraph prism_graph() { return UndirectedGraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}); }

}  // namespace nonsep
