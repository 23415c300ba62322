#include "nonsep/tree.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "nonsep/errors.hpp"
#include "nonsep/hamiltonian.hpp"
#include "nonsep/oracles.hpp"
#include "nonsep/semicomplete.hpp"

namespace nonsep {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

std::vector<Vertex> members_of(const std::vector<char>& mask) {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < mask.size(); ++v)
        if (mask[v]) out.push_back(static_cast<Vertex>(v));
    return out;
}

ArcSubset lift_arcs(const Subdigraph& sub, const ArcSubset& local, int parent_size) {
    ArcSubset out(parent_size);
    for (ArcId a : local.members()) out.insert(sub.parent_arc[a]);
    return out;
}

bool residual_strong(const Digraph& d, const ArcSubset& tree) { return is_strong(d, tree.complement()); }

}  // namespace

std::vector<char> covered_vertices(const Digraph& d, const ArcSubset& arcs) {
    std::vector<char> c(d.order(), 0);
    for (ArcId a : arcs.members()) c[d.arc(a).tail] = c[d.arc(a).head] = 1;
    return c;
}

bool is_tree(const Digraph& d, const ArcSubset& tree) {
    std::vector<ArcId> ids = tree.members();
    if (ids.empty()) return false;
    UnionFind uf(d.order());
    for (ArcId a : ids)
        if (!uf.unite(d.arc(a).tail, d.arc(a).head)) return false;
    std::vector<Vertex> cov = members_of(covered_vertices(d, tree));
    for (Vertex v : cov)
        if (uf.find(v) != uf.find(cov[0])) return false;
    return true;
}

bool is_spanning_tree(const Digraph& d, const ArcSubset& tree) {
    if (d.order() == 1) return tree.count() == 0;
    if (!is_tree(d, tree)) return false;
    return tree.count() == d.order() - 1;
}

std::optional<ArcSubset> ug_spanning_tree(const Digraph& d, const ArcSubset& allowed) {
    const int n = d.order();
    ArcSubset tree(d.size());
    if (n == 0) return tree;
    std::vector<char> seen(n, 0);
    std::deque<Vertex> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        std::vector<ArcId> inc(d.out_arcs(u).begin(), d.out_arcs(u).end());
        inc.insert(inc.end(), d.in_arcs(u).begin(), d.in_arcs(u).end());
        std::sort(inc.begin(), inc.end());
        for (ArcId a : inc) {
            if (!allowed.contains(a)) continue;
            Vertex w = d.arc(a).tail == u ? d.arc(a).head : d.arc(a).tail;
            if (seen[w]) continue;
            seen[w] = 1;
            ++reached;
            tree.insert(a);
            queue.push_back(w);
        }
    }
    if (reached < n) return std::nullopt;
    return tree;
}

SafetyReport verify_safe_tree(const Digraph& d, const ArcSubset& tree) {
    if (!is_spanning_tree(d, tree)) throw PreconditionError("verify_safe_tree: not a spanning tree");
    SafetyReport r;
    r.reach_d = reachability(d, ArcSubset::all_of(d));
    r.reach_residual = reachability(d, tree.complement());
    r.equal = r.reach_d == r.reach_residual;
    return r;
}

bool verify_nonsep_tree(const Digraph& d, const ArcSubset& tree) {
    return tree.universe() == d.size() && is_spanning_tree(d, tree) && residual_strong(d, tree);
}

std::string to_string(SafeTreeCase c) {
    switch (c) {
        case SafeTreeCase::Strong: return "strong";
        case SafeTreeCase::TwoLarge: return "two-large-components";
        case SafeTreeCase::ManyComponents: return "many-components";
        case SafeTreeCase::ThreeOuterLarge: return "three-components-outer-large";
        case SafeTreeCase::ThreeMiddleLarge: return "three-components-middle-large";
        case SafeTreeCase::TwoComponents: return "two-components";
    }
    return "?";
}

SafeTreeResult safe_spanning_tree_semicomplete(const Digraph& d) {
    const int n = d.order();
    if (n < 5) throw PreconditionError("safe_spanning_tree_semicomplete: fewer than five vertices");
    if (!is_semicomplete(d)) throw PreconditionError("safe_spanning_tree_semicomplete: not semicomplete");
    SafeTreeResult res;
    auto from_allowed = [&](const ArcSubset& allowed, const char* what) {
        auto t = ug_spanning_tree(d, allowed);
        if (!t) throw InternalInvariantError(std::string("safe tree: ") + what + " is disconnected");
        return *t;
    };

    StrongComponents sc = strong_components(d);
    const int t = sc.count();
    if (t == 1) {
        res.kase = SafeTreeCase::Strong;
        res.tree = from_allowed(cycle_arcs(d, camion_hamiltonian_cycle(d)).complement(), "hamiltonian complement");
    } else {
        std::vector<Vertex> x(t);
        for (int i = 0; i < t; ++i) x[i] = sc.components[i].front();
        ArcSubset k(d.size());
        for (ArcId a = 0; a < d.size(); ++a)
            if (sc.component_of[d.arc(a).tail] != sc.component_of[d.arc(a).head]) k.insert(a);
        ArcSubset k_prime = k;
        for (int i = 0; i + 1 < t; ++i)
            for (ArcId a : d.out_arcs(x[i]))
                if (d.arc(a).head == x[i + 1]) k_prime.erase(a);
        int large = 0, large_index = -1;
        for (int i = 0; i < t; ++i)
            if (sc.components[i].size() >= 2) ++large, large_index = i;

        if (large >= 2) {
            res.kase = SafeTreeCase::TwoLarge;
            res.tree = from_allowed(k_prime, "K'");
        } else if (t >= 4) {
            res.kase = SafeTreeCase::ManyComponents;
            res.tree = from_allowed(k_prime, "K'");
        } else if (t == 3 && large_index != 1) {
            res.kase = SafeTreeCase::ThreeOuterLarge;
            res.tree = from_allowed(k_prime, "K'");
        } else if (t == 3) {
            res.kase = SafeTreeCase::ThreeMiddleLarge;
            const Vertex y2 = sc.components[1][sc.components[1][0] == x[1] ? 1 : 0];
            ArcSubset k_star = k;
            for (ArcId a = 0; a < d.size(); ++a) {
                const Arc& e = d.arc(a);
                if ((e.tail == x[0] && e.head == x[1]) || (e.tail == y2 && e.head == x[2])) k_star.erase(a);
            }
            res.tree = from_allowed(k_star, "K*");
        } else {
            res.kase = SafeTreeCase::TwoComponents;
            const bool big_first = sc.components[0].size() >= 2;
            const std::vector<Vertex>& big = sc.components[big_first ? 0 : 1];
            const Vertex single = sc.components[big_first ? 1 : 0][0];
            Subdigraph sub = induced(d, big);
            ArcId keep = kNoArc;
            for (ArcId a = 0; a < sub.graph.size() && keep == kNoArc; ++a) {
                ArcSubset rest = ArcSubset::all_of(sub.graph);
                rest.erase(a);
                if (is_strong(sub.graph, rest)) keep = a;
            }
            if (keep == kNoArc) throw InternalInvariantError("safe tree: no removable arc in the large component");
            const ArcId xy = sub.parent_arc[keep];
            // Big first: arcs w->single for w != x. Big last: single->w for w != y.
            const Vertex skip = big_first ? d.arc(xy).tail : d.arc(xy).head;
            res.tree = ArcSubset(d.size());
            res.tree.insert(xy);
            for (Vertex w : big) {
                if (w == skip) continue;
                auto a = big_first ? d.find_arc(w, single) : d.find_arc(single, w);
                if (!a) throw InternalInvariantError("safe tree: missing arc between components");
                res.tree.insert(*a);
            }
        }
    }
    if (!is_spanning_tree(d, res.tree) || !verify_safe_tree(d, res.tree).equal)
        throw InternalInvariantError("safe tree (" + to_string(res.kase) + ") failed verification");
    return res;
}

namespace {

// Candidate single-arc attachments of x to the covered set, proof order
// first (arcs from `preferred` into x), then all arcs between x and it.
std::vector<ArcId> attachment_arcs(const Digraph& d, Vertex x, const std::vector<char>& covered,
                                   const std::vector<char>& preferred) {
    std::vector<ArcId> first, rest;
    for (ArcId a : d.in_arcs(x)) {
        if (!covered[d.arc(a).tail]) continue;
        (preferred[d.arc(a).tail] ? first : rest).push_back(a);
    }
    for (ArcId a : d.out_arcs(x))
        if (covered[d.arc(a).head]) rest.push_back(a);
    std::sort(first.begin(), first.end());
    std::sort(rest.begin(), rest.end());
    first.insert(first.end(), rest.begin(), rest.end());
    return first;
}

std::optional<ArcSubset> extend_tree(const Digraph& d, const ArcSubset& tree) {
    const int n = d.order();
    std::vector<char> covered = covered_vertices(d, tree);
    std::vector<Vertex> open;
    for (Vertex v = 0; v < n; ++v)
        if (!covered[v]) open.push_back(v);
    if (open.empty()) return tree;

    std::vector<Vertex> cov = members_of(covered);
    Subdigraph sub = induced(d, cov, tree.complement());
    StrongComponents sc = strong_components(sub.graph);
    std::vector<char> terminal(n, 0), initial(n, 0);
    for (int i = 0; i < sc.count(); ++i) {
        if (sc.terminal[i]) {
            for (Vertex lv : sc.components[i]) terminal[sub.parent_vertex[lv]] = 1;
            break;
        }
    }
    for (int i = 0; i < sc.count(); ++i) {
        if (sc.initial[i]) {
            for (Vertex lv : sc.components[i]) initial[sub.parent_vertex[lv]] = 1;
            break;
        }
    }
    auto with = [&](std::initializer_list<ArcId> arcs) {
        ArcSubset t = tree;
        for (ArcId a : arcs) t.insert(a);
        return t;
    };
    auto arcs_from = [&](const std::vector<char>& set, Vertex x) {
        std::vector<ArcId> out;
        for (ArcId a : d.in_arcs(x))
            if (set[d.arc(a).tail]) out.push_back(a);
        std::sort(out.begin(), out.end());
        return out;
    };
    auto arcs_to = [&](Vertex x, const std::vector<char>& set) {
        std::vector<ArcId> out;
        for (ArcId a : d.out_arcs(x))
            if (set[d.arc(a).head]) out.push_back(a);
        std::sort(out.begin(), out.end());
        return out;
    };

    if (open.size() == 1) {
        for (ArcId a : attachment_arcs(d, open[0], covered, terminal)) {
            ArcSubset t = with({a});
            if (residual_strong(d, t)) return t;
        }
        return std::nullopt;
    }
    const Vertex x = open[0], y = open[1];
    // Two arcs from the terminal component into one vertex: attach it there.
    for (Vertex z : {x, y}) {
        std::vector<ArcId> in = arcs_from(terminal, z);
        if (in.size() >= 2) {
            ArcSubset t = with({in[0]});
            if (residual_strong(d, t))
                if (auto r = extend_tree(d, t)) return r;
        }
        std::vector<ArcId> out = arcs_to(z, initial);
        if (out.size() >= 2) {
            ArcSubset t = with({out[0]});
            if (residual_strong(d, t))
                if (auto r = extend_tree(d, t)) return r;
        }
    }
    std::vector<ArcId> ux = arcs_from(terminal, x), vy = arcs_from(terminal, y);
    std::vector<ArcId> xu = arcs_to(x, initial), yv = arcs_to(y, initial);
    if (!ux.empty() && !vy.empty() && !xu.empty() && !yv.empty()) {
        ArcSubset t = d.has_arc(x, y) ? with({vy[0], xu[0]}) : with({ux[0], yv[0]});
        if (residual_strong(d, t)) return t;
    }
    // Any two attachments that connect both vertices.
    std::vector<ArcId> xs = attachment_arcs(d, x, covered, terminal);
    std::vector<ArcId> ys = attachment_arcs(d, y, covered, terminal);
    std::vector<ArcId> between;
    for (ArcId a : d.out_arcs(x))
        if (d.arc(a).head == y) between.push_back(a);
    for (ArcId a : d.in_arcs(x))
        if (d.arc(a).tail == y) between.push_back(a);
    for (ArcId a : xs) {
        for (ArcId b : ys)
            if (residual_strong(d, with({a, b}))) return with({a, b});
        for (ArcId b : between)
            if (residual_strong(d, with({a, b}))) return with({a, b});
    }
    for (ArcId a : ys)
        for (ArcId b : between)
            if (residual_strong(d, with({a, b}))) return with({a, b});
    return std::nullopt;
}

}  // namespace

ArcSubset tree_extension(const Digraph& d, const ArcSubset& tree) {
    if (tree.universe() != d.size()) throw PreconditionError("tree_extension: arc subset of another digraph");
    if (!is_k_arc_strong(d, 2)) throw PreconditionError("tree_extension: digraph is not 2-arc-strong");
    if (!is_tree(d, tree)) throw PreconditionError("tree_extension: input is not a tree");
    if (!residual_strong(d, tree)) throw PreconditionError("tree_extension: D - A(T) is not strong");
    std::vector<char> covered = covered_vertices(d, tree);
    std::vector<Vertex> open;
    for (Vertex v = 0; v < d.order(); ++v)
        if (!covered[v]) open.push_back(v);
    if (open.size() > 2) throw PreconditionError("tree_extension: more than two uncovered vertices");
    if (open.size() == 2 && !d.adjacent(open[0], open[1]))
        throw PreconditionError("tree_extension: uncovered vertices are not adjacent");
    auto r = extend_tree(d, tree);
    if (!r)
        throw NotGuaranteedError("tree_extension: no attachment of the uncovered vertices keeps D - A(T) strong");
    if (!verify_nonsep_tree(d, *r)) throw InternalInvariantError("tree_extension: extension failed verification");
    return *r;
}

std::optional<std::vector<Vertex>> find_semicomplete_subset(const Digraph& d, int size) {
    const int n = d.order();
    if (size <= 0) return std::vector<Vertex>{};
    std::vector<int> degree(n, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && d.adjacent(u, v)) ++degree[u];
    std::vector<Vertex> chosen;
    std::function<bool(Vertex)> grow = [&](Vertex from) {
        if (static_cast<int>(chosen.size()) == size) return true;
        for (Vertex v = from; v < n; ++v) {
            if (degree[v] < size - 1) continue;
            if (n - v < size - static_cast<int>(chosen.size())) break;
            bool ok = true;
            for (Vertex c : chosen)
                if (!d.adjacent(c, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(v);
            if (grow(v + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (grow(0)) return chosen;
    return std::nullopt;
}

namespace {

// Safe spanning tree of a semicomplete digraph with at most four vertices,
// by enumeration.
std::optional<ArcSubset> small_safe_tree(const Digraph& d) {
    const int n = d.order();
    if (n == 1) return ArcSubset(d.size());
    const int m = d.size();
    std::vector<int> pick;
    std::optional<ArcSubset> found;
    std::function<void(int)> rec = [&](int from) {
        if (found) return;
        if (static_cast<int>(pick.size()) == n - 1) {
            ArcSubset t = ArcSubset::of(d, pick);
            if (is_spanning_tree(d, t) && verify_safe_tree(d, t).equal) found = t;
            return;
        }
        for (int a = from; a < m; ++a) {
            pick.push_back(a);
            rec(a + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return found;
}

struct GrowthState {
    const Digraph& d;
    std::vector<char> in_r;
    ArcSubset tree;
};

std::optional<ArcSubset> finish_growth(const Digraph& d, const std::vector<char>& in_r, const ArcSubset& tree) {
    const int n = d.order();
    std::vector<Vertex> r = members_of(in_r), s;
    for (Vertex v = 0; v < n; ++v)
        if (!in_r[v]) s.push_back(v);
    if (s.empty()) return verify_nonsep_tree(d, tree) ? std::optional<ArcSubset>(tree) : std::nullopt;
    Subdigraph ds = induced(d, s);
    if (!is_semicomplete(ds.graph)) return std::nullopt;

    Subdigraph dr = induced(d, r);
    StrongComponents sc = strong_components(dr.graph);
    std::vector<char> in_c(n, 0);
    for (int i = 0; i < sc.count(); ++i)
        if (sc.terminal[i]) {
            for (Vertex lv : sc.components[i]) in_c[dr.parent_vertex[lv]] = 1;
            break;
        }
    std::vector<char> in_s(n, 0);
    for (Vertex v : s) in_s[v] = 1;
    // Arcs C -> S with the proof's preferred arc first, then every arc
    // between R and S.
    std::vector<ArcId> candidates;
    {
        std::vector<ArcId> from_c;
        for (ArcId a = 0; a < d.size(); ++a)
            if (in_c[d.arc(a).tail] && in_s[d.arc(a).head]) from_c.push_back(a);
        for (std::size_t i = 0; i < from_c.size() && candidates.empty(); ++i)
            for (std::size_t j = 0; j < from_c.size(); ++j) {
                Vertex u = d.arc(from_c[i]).head, v = d.arc(from_c[j]).head;
                if (u != v && d.has_arc(u, v)) {
                    candidates.push_back(from_c[j]);
                    break;
                }
            }
        for (ArcId a : from_c) candidates.push_back(a);
        for (ArcId a = 0; a < d.size(); ++a) {
            const Arc& e = d.arc(a);
            if ((in_r[e.tail] && in_s[e.head]) || (in_s[e.tail] && in_r[e.head])) candidates.push_back(a);
        }
    }
    auto try_extend = [&](const ArcSubset& t) -> std::optional<ArcSubset> {
        if (!is_tree(d, t) || !residual_strong(d, t)) return std::nullopt;
        try {
            return tree_extension(d, t);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    };

    std::optional<ArcSubset> inner;
    if (s.size() == 1) inner = ArcSubset(ds.graph.size());
    else if (s.size() >= 5) inner = safe_spanning_tree_semicomplete(ds.graph).tree;
    else inner = small_safe_tree(ds.graph);
    if (inner) {
        ArcSubset base = tree | lift_arcs(ds, *inner, d.size());
        for (ArcId e : candidates) {
            ArcSubset t = base;
            t.insert(e);
            if (verify_nonsep_tree(d, t)) return t;
        }
    }
    if (s.size() == 2) return try_extend(tree);
    if (s.size() == 3) {
        for (ArcId e : candidates) {
            ArcSubset t = tree;
            t.insert(e);
            if (auto r2 = try_extend(t)) return r2;
        }
    }
    if (s.size() == 4) {
        for (ArcId e : candidates) {
            ArcSubset t = tree;
            t.insert(e);
            if (!residual_strong(d, t)) continue;
            const Vertex w = in_s[d.arc(e).head] ? d.arc(e).head : d.arc(e).tail;
            for (Vertex u : s)
                for (Vertex v : s) {
                    if (u == v || u == w || v == w || !d.has_arc(u, v)) continue;
                    // w->u->v keeps w->v redundant; u->v->w keeps u->w redundant.
                    for (auto [tail, head] : {std::pair{w, v}, std::pair{u, w}}) {
                        if (tail == w && !(d.has_arc(w, u) && d.has_arc(w, v))) continue;
                        if (head == w && !(d.has_arc(u, w) && d.has_arc(v, w))) continue;
                        ArcSubset t2 = t;
                        t2.insert(*d.find_arc(tail, head));
                        if (auto r2 = try_extend(t2)) return r2;
                    }
                }
        }
    }
    return std::nullopt;
}

}  // namespace

NonsepTreeResult nonsep_spanning_tree(const Digraph& d, const TreeOptions& opt) {
    const int n = d.order();
    if (n < 2) throw PreconditionError("nonsep_spanning_tree: n < 2");
    if (!alpha_at_most_two(d).holds) throw PreconditionError("nonsep_spanning_tree: alpha > 2");
    if (!is_k_arc_strong(d, 2)) throw PreconditionError("nonsep_spanning_tree: digraph is not 2-arc-strong");
    NonsepTreeResult res;
    auto search = [&]() {
        res.route = "search";
        OracleLimits lim;
        lim.max_n = 64;
        lim.node_budget = opt.search_budget;
        OracleTreeResult o = oracle_nonsep_tree(d, lim);
        res.search_nodes = o.transcript.nodes;
        if (!o.witness) throw InternalInvariantError("nonsep_spanning_tree: exhaustive search found no tree");
        res.tree = *o.witness;
        return res;
    };

    if (is_semicomplete(d)) {
        if (n < 5) throw NotGuaranteedError("nonsep_spanning_tree: semicomplete with fewer than five vertices");
        res.route = "semicomplete";
        res.tree = safe_spanning_tree_semicomplete(d).tree;
        if (!verify_nonsep_tree(d, res.tree)) throw InternalInvariantError("nonsep_spanning_tree: safe tree separates");
        return res;
    }
    auto seed = find_semicomplete_subset(d, 5);
    if (!seed) {
        if (n >= 14) throw InternalInvariantError("nonsep_spanning_tree: no semicomplete 5-subset with n >= 14");
        throw NotGuaranteedError("nonsep_spanning_tree: no semicomplete subdigraph on five vertices");
    }
    res.seed = *seed;
    res.route = "growth";
    std::vector<char> in_r(n, 0);
    for (Vertex v : *seed) in_r[v] = 1;
    const std::vector<char> in_seed = in_r;
    Subdigraph s0 = induced(d, *seed);
    ArcSubset tree = lift_arcs(s0, safe_spanning_tree_semicomplete(s0.graph).tree, d.size());

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vertex> r = members_of(in_r);
        Subdigraph dr = induced(d, r);
        std::vector<std::vector<char>> reach = reachability(dr.graph, ArcSubset::all_of(dr.graph));
        auto reaches = [&](Vertex u, Vertex v) {
            if (opt.seed_pairs_only) return in_seed[u] && in_seed[v] && d.has_arc(u, v);
            return reach[dr.local_vertex[u]][dr.local_vertex[v]] != 0;
        };
        for (Vertex x = 0; x < n && !grew; ++x) {
            if (in_r[x]) continue;
            std::vector<ArcId> in, out;
            for (ArcId a : d.in_arcs(x))
                if (in_r[d.arc(a).tail]) in.push_back(a);
            for (ArcId a : d.out_arcs(x))
                if (in_r[d.arc(a).head]) out.push_back(a);
            std::sort(in.begin(), in.end());
            std::sort(out.begin(), out.end());
            ArcId add = kNoArc;
            for (std::size_t i = 0; i < in.size() && add == kNoArc; ++i)
                for (std::size_t j = 0; j < in.size(); ++j) {
                    Vertex u = d.arc(in[i]).tail, v = d.arc(in[j]).tail;
                    if (u != v && reaches(u, v)) {
                        add = in[i];  // x stays reachable via u ~> v -> x
                        break;
                    }
                }
            for (std::size_t j = 0; j < out.size() && add == kNoArc; ++j)
                for (std::size_t i = 0; i < out.size(); ++i) {
                    Vertex u = d.arc(out[i]).head, v = d.arc(out[j]).head;
                    if (u != v && reaches(u, v)) {
                        add = out[j];  // x -> u ~> v replaces x -> v
                        break;
                    }
                }
            if (add == kNoArc) continue;
            tree.insert(add);
            in_r[x] = 1;
            res.absorbed.push_back(x);
            grew = true;
            if (opt.verify_steps) {
                std::vector<Vertex> r2 = members_of(in_r);
                Subdigraph sub = induced(d, r2);
                ArcSubset local(sub.graph.size());
                for (ArcId a = 0; a < sub.graph.size(); ++a)
                    if (tree.contains(sub.parent_arc[a])) local.insert(a);
                if (!verify_safe_tree(sub.graph, local).equal)
                    throw InternalInvariantError("nonsep_spanning_tree: absorption broke safety");
            }
        }
    }
    res.endgame_size = n - static_cast<int>(members_of(in_r).size());
    std::optional<ArcSubset> done;
    try {
        done = finish_growth(d, in_r, tree);
    } catch (const InternalInvariantError&) {
        done.reset();
    }
    if (!done) return search();
    res.tree = *done;
    if (!verify_nonsep_tree(d, res.tree)) return search();
    return res;
}

std::string to_string(HamTreeRoute r) {
    switch (r) {
        case HamTreeRoute::SingleComponent: return "single-component";
        case HamTreeRoute::SemicompleteSubset: return "semicomplete-subset";
        case HamTreeRoute::X2FourSkipArc: return "x2-four-skip-arc";
        case HamTreeRoute::X2FourBackwardChain: return "x2-four-backward-chain";
        case HamTreeRoute::X2FourInsideForward: return "x2-four-inside-forward";
        case HamTreeRoute::X2FourInsideBackward: return "x2-four-inside-backward";
        case HamTreeRoute::X2ThreeForward: return "x2-three-forward";
        case HamTreeRoute::X2ThreeTriangle: return "x2-three-triangle";
        case HamTreeRoute::Search: return "search";
    }
    return "?";
}

namespace {

std::vector<std::vector<Vertex>> ug_components(const Digraph& d, const ArcSubset& allowed) {
    const int n = d.order();
    UnionFind uf(n);
    for (ArcId a : allowed.members()) uf.unite(d.arc(a).tail, d.arc(a).head);
    std::vector<std::vector<Vertex>> comps;
    std::vector<int> index(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        int r = uf.find(v);
        if (index[r] < 0) {
            index[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[index[r]].push_back(v);
    }
    return comps;
}

// One arc-disjoint split: S given by removing and adding cycle-relative arcs,
// with optional free arcs into/out of chosen vertices from X1.
struct Template {
    HamTreeRoute route;
    std::vector<int> x2;  // 1-based positions forming X2
    std::vector<std::pair<int, int>> required;  // arcs that must exist
    std::vector<std::pair<int, int>> removed;   // cycle arcs dropped from S
    std::vector<std::pair<int, int>> added;     // arcs added to S
    std::vector<int> free_in;   // S gains one arc w -> v_p, w in X1
    std::vector<int> free_out;  // S gains one arc v_p -> w, w in X1
};

std::vector<Template> templates() {
    std::vector<Template> t;
    const std::vector<int> alt{3, 5, 7, 9};
    for (int j : alt) {
        int j1 = j % 9 + 1, j2 = (j + 1) % 9 + 1;
        t.push_back({HamTreeRoute::X2FourSkipArc, alt, {{j, j2}}, {{j, j1}}, {{j, j2}}, {j1}, {}});
    }
    t.push_back({HamTreeRoute::X2FourBackwardChain, alt, {{9, 7}, {7, 5}, {5, 3}}, {{2, 3}},
                 {{9, 7}, {7, 5}, {5, 3}}, {}, {2}});
    const std::vector<int> inside{4, 6, 7, 9};
    t.push_back({HamTreeRoute::X2FourInsideForward, inside, {{7, 9}}, {{8, 9}}, {{7, 9}}, {}, {8}});
    t.push_back({HamTreeRoute::X2FourInsideBackward, inside, {{9, 7}, {4, 9}}, {{4, 5}}, {{4, 9}}, {5}, {}});
    const std::vector<int> three{5, 7, 9};
    t.push_back({HamTreeRoute::X2ThreeForward, three, {{7, 9}}, {{7, 8}}, {{7, 9}}, {8}, {}});
    t.push_back({HamTreeRoute::X2ThreeTriangle, three, {{9, 7}, {7, 5}, {5, 9}}, {{5, 6}, {8, 9}}, {{5, 9}}, {6},
                 {8}});
    return t;
}

std::optional<HamTreeResult> match_templates(const Digraph& d, const std::vector<Vertex>& cycle,
                                             const std::vector<Vertex>& x2_set) {
    const int n = d.order();
    if (n != 9) return std::nullopt;
    std::vector<char> in_x2(n, 0);
    for (Vertex v : x2_set) in_x2[v] = 1;
    const ArcSubset cyc = cycle_arcs(d, cycle);
    for (const Template& tp : templates()) {
        if (tp.x2.size() != x2_set.size()) continue;
        for (int s = 0; s < 9; ++s) {
            std::vector<Vertex> v(10);
            for (int i = 1; i <= 9; ++i) v[i] = cycle[(s + i - 1) % 9];
            bool pattern = true;
            for (int i = 1; i <= 9 && pattern; ++i) {
                bool want = std::find(tp.x2.begin(), tp.x2.end(), i) != tp.x2.end();
                if (want != (in_x2[v[i]] != 0)) pattern = false;
            }
            if (!pattern) continue;
            bool ok = true;
            for (auto [a, b] : tp.required)
                if (!d.has_arc(v[a], v[b])) ok = false;
            if (!ok) continue;
            ArcSubset base = cyc;
            for (auto [a, b] : tp.removed) base.erase(*d.find_arc(v[a], v[b]));
            for (auto [a, b] : tp.added) base.insert(*d.find_arc(v[a], v[b]));
            // Free arcs: enumerate choices in X1.
            std::vector<std::vector<ArcId>> options;
            for (int p : tp.free_in) {
                std::vector<ArcId> o;
                for (ArcId a : d.in_arcs(v[p]))
                    if (!in_x2[d.arc(a).tail]) o.push_back(a);
                options.push_back(o);
            }
            for (int p : tp.free_out) {
                std::vector<ArcId> o;
                for (ArcId a : d.out_arcs(v[p]))
                    if (!in_x2[d.arc(a).head]) o.push_back(a);
                options.push_back(o);
            }
            std::vector<std::size_t> pick(options.size(), 0);
            bool any = std::all_of(options.begin(), options.end(), [](const auto& o) { return !o.empty(); });
            while (any) {
                ArcSubset strong = base;
                for (std::size_t i = 0; i < options.size(); ++i) strong.insert(options[i][pick[i]]);
                if (is_strong(d, strong)) {
                    if (auto tree = ug_spanning_tree(d, strong.complement())) {
                        HamTreeResult r;
                        r.tree = *tree;
                        r.strong_part = strong;
                        r.route = tp.route;
                        r.labels.assign(v.begin() + 1, v.end());
                        return r;
                    }
                }
                std::size_t i = 0;
                for (; i < pick.size(); ++i) {
                    if (++pick[i] < options[i].size()) break;
                    pick[i] = 0;
                }
                if (i == pick.size()) break;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

HamTreeResult oriented_hamiltonian_nonsep_tree(const Digraph& d, const std::vector<Vertex>& cycle,
                                               const TreeOptions& opt) {
    const int n = d.order();
    if (n < 9) throw PreconditionError("oriented_hamiltonian_nonsep_tree: fewer than nine vertices");
    if (!is_oriented(d)) throw PreconditionError("oriented_hamiltonian_nonsep_tree: digraph has a 2-cycle");
    if (!is_hamiltonian_cycle(d, cycle)) throw PreconditionError("oriented_hamiltonian_nonsep_tree: not a hamiltonian cycle");
    if (!is_k_arc_strong(d, 2)) throw PreconditionError("oriented_hamiltonian_nonsep_tree: not 2-arc-strong");
    if (!alpha_at_most_two(d).holds || is_semicomplete(d))
        throw PreconditionError("oriented_hamiltonian_nonsep_tree: alpha is not exactly 2");

    HamTreeResult res;
    const ArcSubset cyc = cycle_arcs(d, cycle);
    res.components = ug_components(d, cyc.complement());
    auto checked = [&](HamTreeResult r) {
        if (!verify_nonsep_tree(d, r.tree))
            throw InternalInvariantError("oriented_hamiltonian_nonsep_tree: " + to_string(r.route) + " failed");
        return r;
    };
    if (res.components.size() == 1) {
        res.route = HamTreeRoute::SingleComponent;
        res.tree = *ug_spanning_tree(d, cyc.complement());
        res.strong_part = cyc;
        return checked(res);
    }
    if (find_semicomplete_subset(d, 5)) {
        res.route = HamTreeRoute::SemicompleteSubset;
        NonsepTreeResult t = nonsep_spanning_tree(d, opt);
        res.tree = t.tree;
        res.search_nodes = t.search_nodes;
        return checked(res);
    }
    if (res.components.size() == 2) {
        const auto& small = res.components[0].size() <= res.components[1].size() ? res.components[0]
                                                                                  : res.components[1];
        if (auto r = match_templates(d, cycle, small)) {
            r->components = res.components;
            return checked(*r);
        }
    }
    res.route = HamTreeRoute::Search;
    OracleLimits lim;
    lim.max_n = 64;
    lim.node_budget = opt.search_budget;
    OracleTreeResult o = oracle_nonsep_tree(d, lim);
    res.search_nodes = o.transcript.nodes;
    if (!o.witness) throw InternalInvariantError("oriented_hamiltonian_nonsep_tree: search found no tree");
    res.tree = *o.witness;
    return checked(res);
}

}  // namespace nonsep
