#include "nonsep/generators.hpp"

#include <algorithm>
#include <numeric>

#include "nonsep/connectivity.hpp"
#include "nonsep/errors.hpp"
#include "nonsep/hamiltonian.hpp"

namespace nonsep {

namespace {

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }
int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<std::vector<char>> adjacency_of(const Digraph& d) {
    std::vector<std::vector<char>> adj(d.order(), std::vector<char>(d.order(), 0));
    for (const Arc& a : d.arcs()) adj[a.tail][a.head] = 1;
    return adj;
}

}  // namespace

Digraph from_adjacency(const std::vector<std::vector<char>>& adj) {
    const int n = static_cast<int>(adj.size());
    Digraph d(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && adj[u][v]) d.add_arc(u, v);
    return d;
}

Digraph shuffle_labels(const Digraph& d, Rng& rng) {
    std::vector<Vertex> perm(d.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<int>> mult(d.order(), std::vector<int>(d.order(), 0));
    for (const Arc& a : d.arcs()) ++mult[perm[a.tail]][perm[a.head]];
    Digraph out(d.order());
    for (Vertex u = 0; u < d.order(); ++u)
        for (Vertex v = 0; v < d.order(); ++v)
            for (int k = 0; k < mult[u][v]; ++k) out.add_arc(u, v);
    return out;
}

UndirectedGraph random_triangle_free(int n, Rng& rng, double accept, int max_degree) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    UndirectedGraph g(n);
    for (auto [u, v] : pairs) {
        if (max_degree >= 0 && (g.degree(u) >= max_degree || g.degree(v) >= max_degree)) continue;
        bool triangle = false;
        for (Vertex w : g.neighbours(u))
            if (g.adjacent(w, v)) {
                triangle = true;
                break;
            }
        if (triangle || uniform01(rng) >= accept) continue;
        g.add_edge(u, v);
    }
    return g;
}

Digraph random_alpha2_digraph(int n, Rng& rng, const Alpha2Options& opt) {
    UndirectedGraph g = random_triangle_free(n, rng, opt.accept, opt.max_complement_degree);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            if (uniform01(rng) < opt.digon_probability) adj[u][v] = adj[v][u] = 1;
            else if (rng() & 1) adj[u][v] = 1;
            else adj[v][u] = 1;
        }
    return from_adjacency(adj);
}

Digraph thin_alpha2(const Digraph& d, Rng& rng, const ArcSubset* keep) {
    std::vector<std::vector<char>> adj = adjacency_of(d);
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (ArcId a = 0; a < d.size(); ++a) {
        if (keep && keep->contains(a)) continue;
        arcs.emplace_back(d.arc(a).tail, d.arc(a).head);
    }
    std::shuffle(arcs.begin(), arcs.end(), rng);
    for (auto [u, v] : arcs) {
        adj[u][v] = 0;
        Digraph t = from_adjacency(adj);
        bool ok = is_k_arc_strong(t, 2);
        if (ok && !adj[v][u]) ok = alpha_at_most_two(t).holds;
        if (!ok) adj[u][v] = 1;
    }
    return from_adjacency(adj);
}

Digraph two_initial_family(Rng& rng, bool dense) {
    const int k1 = dense ? 7 : (rng() % 2 ? 7 : 9);
    const int k2 = dense ? 7 : (rng() % 2 ? 7 : 9);
    const int m = 2 + static_cast<int>(rng() % 5);
    const int n = k1 + k2 + m;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    auto rot = [&](int off, int k) {
        for (int i = 0; i < k; ++i)
            for (int s = 1; s <= (k - 1) / 2; ++s) adj[off + i][off + (i + s) % k] = 1;
        if (dense)
            for (int i = 0; i < k; ++i)
                for (int s = 1; s <= (k - 1) / 2; ++s)
                    if (rng() % 3) adj[off + (i + s) % k][off + i] = 1;
    };
    rot(0, k1);
    rot(k1, k2);
    const int a = 1 + static_cast<int>(rng() % (k1 - 1));
    const int b = 1 + static_cast<int>(rng() % (k2 - 1));
    std::vector<std::vector<int>> segs(4), junction(4);
    for (int i = 0; i < a; ++i) segs[0].push_back(i);
    for (int i = 0; i < b; ++i) segs[1].push_back(k1 + i);
    for (int i = a; i < k1; ++i) segs[2].push_back(i);
    for (int i = b; i < k2; ++i) segs[3].push_back(k1 + i);
    std::vector<int> side(n, 0);
    for (int j = 0; j < m; ++j) {
        const int y = k1 + k2 + j;
        junction[rng() % 4].push_back(y);
        side[y] = 1 + static_cast<int>(rng() % 3);
    }
    std::vector<int> order;
    for (int s = 0; s < 4; ++s) {
        order.insert(order.end(), segs[s].begin(), segs[s].end());
        order.insert(order.end(), junction[s].begin(), junction[s].end());
    }
    for (int i = 0; i < n; ++i) adj[order[i]][order[(i + 1) % n]] = 1;
    for (int j = 0; j < m; ++j) {
        const int y = k1 + k2 + j;
        for (int r = 0; r < k1 + k2; ++r) {
            const bool first = r < k1;
            if (((first && (side[y] & 1)) || (!first && (side[y] & 2))) && !adj[y][r] && !adj[r][y]) adj[r][y] = 1;
        }
    }
    for (int j = 0; j < m; ++j)
        for (int l = j + 1; l < m; ++l) {
            const int y = k1 + k2 + j, z = k1 + k2 + l;
            if (adj[y][z] || adj[z][y]) continue;
            const int c = static_cast<int>(rng() % (dense ? 5 : 4));
            if (c < 2) adj[y][z] = 1;
            else if (c < 4) adj[z][y] = 1;
            else adj[y][z] = adj[z][y] = 1;
        }
    return shuffle_labels(from_adjacency(adj), rng);
}

Digraph co_bipartite_family(int n1, int n2, Rng& rng, bool oriented, double cross) {
    const int n = n1 + n2;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    auto side = [&](int off, int k) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                const int u = off + i, v = off + j;
                if (!oriented && uniform01(rng) < 0.4) adj[u][v] = adj[v][u] = 1;
                else if (rng() & 1) adj[u][v] = 1;
                else adj[v][u] = 1;
            }
    };
    side(0, n1);
    side(n1, n2);
    // Vertex 0 and vertex n1 have no neighbours across.
    for (int u = 1; u < n1; ++u)
        for (int v = n1 + 1; v < n; ++v) {
            if (uniform01(rng) >= cross) continue;
            if (!oriented && uniform01(rng) < 0.3) adj[u][v] = adj[v][u] = 1;
            else if (rng() & 1) adj[u][v] = 1;
            else adj[v][u] = 1;
        }
    return shuffle_labels(from_adjacency(adj), rng);
}

Digraph branching_instance(Regime regime, int family, int n_min, int n_max, Rng& rng) {
    const bool oriented = regime == Regime::OrientedInDegree3;
    const int need = oriented ? 3 : 5;
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Digraph d;
        const int n = uniform_int(rng, n_min, n_max);
        if (family == 1) {
            d = two_initial_family(rng, !oriented);
        } else if (family == 2) {
            const int n1 = uniform_int(rng, n / 2 - 2, n / 2 + 1);
            d = co_bipartite_family(n1, n - n1, rng, oriented, 0.3 + 0.4 * uniform01(rng));
        } else {
            Alpha2Options opt;
            opt.accept = 0.4 + 0.6 * uniform01(rng);
            opt.digon_probability = oriented ? 0.0 : 0.2 + 0.5 * uniform01(rng);
            d = random_alpha2_digraph(n, rng, opt);
        }
        if (d.order() < n_min || d.order() > n_max) continue;
        if (oriented && !is_oriented(d)) continue;
        if (min_in_degree(d) < need) continue;
        if (!alpha_at_most_two(d).holds || !is_k_arc_strong(d, 2)) continue;
        return d;
    }
    throw InternalInvariantError("branching_instance: generator did not converge");
}

Digraph tree_instance(int n, Rng& rng, bool thin) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Alpha2Options opt;
        opt.accept = 0.5 + 0.5 * uniform01(rng);
        opt.digon_probability = 0.4 * uniform01(rng);
        Digraph d = random_alpha2_digraph(n, rng, opt);
        if (!is_k_arc_strong(d, 2)) continue;
        return thin ? thin_alpha2(d, rng) : d;
    }
    throw InternalInvariantError("tree_instance: generator did not converge");
}

HamiltonianInstance hamiltonian_oriented_instance(int n, Rng& rng) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Alpha2Options opt;
        opt.accept = 0.6 + 0.4 * uniform01(rng);
        Digraph d = random_alpha2_digraph(n, rng, opt);
        if (is_semicomplete(d) || !is_k_arc_strong(d, 2)) continue;
        auto cycle = find_hamiltonian_cycle(d);
        if (!cycle) continue;
        if (rng() & 1) {
            ArcSubset keep = cycle_arcs(d, *cycle);
            Digraph t = thin_alpha2(d, rng, &keep);
            if (is_semicomplete(t)) continue;
            auto c2 = find_hamiltonian_cycle(t);
            if (!c2) continue;
            return {t, *c2};
        }
        return {d, *cycle};
    }
    throw InternalInvariantError("hamiltonian_oriented_instance: generator did not converge");
}

HamiltonianInstance hamiltonian_two_component_instance(int n, Rng& rng) {
    for (int attempt = 0; attempt < 1000000; ++attempt) {
        std::vector<char> side(n, 0);
        const int k = uniform_int(rng, 3, n / 2);
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        for (int i = 0; i < k; ++i) side[idx[i]] = 1;
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; ++i) adj[i][(i + 1) % n] = 1;
        const double density = 0.2 + 0.8 * uniform01(rng);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (side[u] != side[v] || adj[u][v] || adj[v][u] || uniform01(rng) >= density) continue;
                if (rng() & 1) adj[u][v] = 1;
                else adj[v][u] = 1;
            }
        // Each side must be connected without the cycle arcs.
        bool connected = true;
        for (int s = 0; s < 2 && connected; ++s) {
            std::vector<int> stack, seen(n, 0);
            int first = -1, count = 0, total = 0;
            for (int v = 0; v < n; ++v)
                if (side[v] == s) ++total, first = first < 0 ? v : first;
            stack.push_back(first);
            seen[first] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                ++count;
                for (int v = 0; v < n; ++v) {
                    const bool on_cycle = v == (u + 1) % n || u == (v + 1) % n;
                    if (seen[v] || side[v] != s || on_cycle || !(adj[u][v] || adj[v][u])) continue;
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
            connected = count == total;
        }
        if (!connected) continue;
        Digraph d = from_adjacency(adj);
        if (is_semicomplete(d) || !alpha_at_most_two(d).holds || !is_k_arc_strong(d, 2)) continue;
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Digraph out = relabel(d, perm);
        std::vector<Vertex> cycle(n);
        for (int i = 0; i < n; ++i) cycle[i] = perm[i];
        return {out, cycle};
    }
    throw InternalInvariantError("hamiltonian_two_component_instance: generator did not converge");
}

std::optional<HamiltonianInstance> template_instance(HamTreeRoute route, Rng& rng, int attempts) {
    std::vector<int> x2;
    std::vector<std::pair<int, int>> required;
    switch (route) {
        case HamTreeRoute::X2FourSkipArc: x2 = {3, 5, 7, 9}, required = {{3, 5}}; break;
        case HamTreeRoute::X2FourBackwardChain: x2 = {3, 5, 7, 9}, required = {{9, 7}, {7, 5}, {5, 3}}; break;
        case HamTreeRoute::X2FourInsideForward: x2 = {4, 6, 7, 9}, required = {{7, 9}}; break;
        case HamTreeRoute::X2FourInsideBackward: x2 = {4, 6, 7, 9}, required = {{9, 7}, {4, 9}}; break;
        case HamTreeRoute::X2ThreeForward: x2 = {5, 7, 9}, required = {{7, 9}}; break;
        case HamTreeRoute::X2ThreeTriangle: x2 = {5, 7, 9}, required = {{9, 7}, {7, 5}, {5, 9}}; break;
        default: throw PreconditionError("template_instance: not a template route");
    }
    const int n = 9;
    std::vector<char> in_x2(n + 1, 0);
    for (int p : x2) in_x2[p] = 1;
    std::vector<Vertex> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 0);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        // Positions are 1-based; vertex of position p is p-1.
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (int p = 1; p <= n; ++p) adj[p - 1][p % n] = 1;
        for (auto [a, b] : required) adj[a - 1][b - 1] = 1;
        const double density = 0.5 + 0.5 * uniform01(rng);
        for (int p = 1; p <= n; ++p)
            for (int q = p + 1; q <= n; ++q) {
                if (in_x2[p] != in_x2[q]) continue;
                if (adj[p - 1][q - 1] || adj[q - 1][p - 1]) continue;
                if (uniform01(rng) >= density) continue;
                if (rng() & 1) adj[p - 1][q - 1] = 1;
                else adj[q - 1][p - 1] = 1;
            }
        Digraph d = from_adjacency(adj);
        if (is_semicomplete(d) || !alpha_at_most_two(d).holds) continue;
        if (find_semicomplete_subset(d, 5)) continue;
        if (!is_k_arc_strong(d, 2)) continue;
        try {
            HamTreeResult r = oriented_hamiltonian_nonsep_tree(d, cycle);
            if (r.route == route) return HamiltonianInstance{d, cycle};
        } catch (const PreconditionError&) {
        }
    }
    return std::nullopt;
}

UndirectedGraph undirected_instance(int n, Rng& rng) {
    if (n < 5) throw PreconditionError("undirected_instance: n < 5");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        UndirectedGraph comp = random_triangle_free(n, rng, 0.5 + 0.5 * uniform01(rng), n - 5);
        UndirectedGraph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (!comp.adjacent(u, v)) g.add_edge(u, v);
        if (g.min_degree() < 4 || !is_two_edge_connected(g)) continue;
        return g;
    }
    throw InternalInvariantError("undirected_instance: generator did not converge");
}

std::vector<Digraph> all_simple_digraphs(int n) {
    if (n < 1 || n > 4) throw PreconditionError("all_simple_digraphs: n must be in 1..4");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 4;
    std::vector<Digraph> out;
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        std::uint64_t c = code;
        for (auto [u, v] : pairs) {
            const int s = static_cast<int>(c % 4);
            c /= 4;
            if (s & 1) adj[u][v] = 1;
            if (s & 2) adj[v][u] = 1;
        }
        out.push_back(from_adjacency(adj));
    }
    return out;
}

Digraph random_digraph(int n, double p, Rng& rng) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && uniform01(rng) < p) adj[u][v] = 1;
    return from_adjacency(adj);
}

Digraph random_semicomplete(int n, Rng& rng, double digon_probability) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (uniform01(rng) < digon_probability) adj[u][v] = adj[v][u] = 1;
            else if (rng() & 1) adj[u][v] = 1;
            else adj[v][u] = 1;
        }
    return from_adjacency(adj);
}

Digraph layered_semicomplete(const std::vector<int>& sizes, Rng& rng, double digon_probability) {
    int n = 0;
    std::vector<int> part;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) throw PreconditionError("layered_semicomplete: part sizes must be positive");
        n += sizes[i];
        part.insert(part.end(), sizes[i], static_cast<int>(i));
    }
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part[u] != part[v]) adj[u][v] = 1;
    int start = 0;
    for (int size : sizes) {
        Digraph piece(0);
        do {
            piece = size == 2 ? random_semicomplete(2, rng, 1.0) : random_semicomplete(size, rng, digon_probability);
        } while (!is_strong(piece));
        for (const Arc& a : piece.arcs()) adj[start + a.tail][start + a.head] = 1;
        start += size;
    }
    return from_adjacency(adj);
}

Digraph tournament_from_code(int n, std::uint64_t code) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    int k = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++k) {
            if ((code >> k) & 1U) adj[v][u] = 1;
            else adj[u][v] = 1;
        }
    return from_adjacency(adj);
}

}  // namespace nonsep
