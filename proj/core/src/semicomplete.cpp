#include "nonsep/semicomplete.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>

#include "nonsep/errors.hpp"
#include "nonsep/hamiltonian.hpp"

namespace nonsep {

namespace {

void require_strong_semicomplete(const Digraph& d, const char* who) {
    if (d.order() == 0) throw PreconditionError(std::string(who) + ": empty digraph");
    if (!is_semicomplete(d)) throw PreconditionError(std::string(who) + ": digraph is not semicomplete");
    if (!is_strong(d)) throw PreconditionError(std::string(who) + ": digraph is not strong");
}

// Shortest cycle through s (BFS), as a vertex sequence starting at s.
std::vector<Vertex> shortest_cycle_through(const Digraph& d, Vertex s) {
    std::vector<Vertex> prev(d.order(), -1);
    std::vector<char> seen(d.order(), 0);
    std::deque<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (u != s && d.has_arc(u, s)) {
            std::vector<Vertex> path;
            for (Vertex w = u; w != -1; w = prev[w]) path.push_back(w);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (Vertex w : d.out_neighbours(u)) {
            if (seen[w]) continue;
            seen[w] = 1;
            prev[w] = u;
            queue.push_back(w);
        }
    }
    throw InternalInvariantError("no cycle through vertex in a strong digraph");
}

std::vector<Vertex> camion_impl(const Digraph& d, std::mt19937_64* rng) {
    require_strong_semicomplete(d, "camion_hamiltonian_cycle");
    const int n = d.order();
    if (n == 1) return {0};
    Vertex start = 0;
    if (rng) start = static_cast<Vertex>((*rng)() % n);
    std::vector<Vertex> cycle = shortest_cycle_through(d, start);
    std::vector<char> on(n, 0);
    for (Vertex v : cycle) on[v] = 1;
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (rng) std::shuffle(order.begin(), order.end(), *rng);

    while (static_cast<int>(cycle.size()) < n) {
        bool inserted = false;
        for (Vertex v : order) {
            if (on[v]) continue;
            const int m = static_cast<int>(cycle.size());
            for (int i = 0; i < m; ++i) {
                if (d.has_arc(cycle[i], v) && d.has_arc(v, cycle[(i + 1) % m])) {
                    cycle.insert(cycle.begin() + i + 1, v);
                    on[v] = 1;
                    inserted = true;
                    break;
                }
            }
            if (inserted) break;
        }
        if (inserted) continue;
        // Every outside vertex now dominates the cycle or is dominated by it.
        const Vertex c0 = cycle.front();
        bool extended = false;
        for (Vertex y : order) {
            if (on[y] || !d.has_arc(c0, y)) continue;
            for (Vertex x : order) {
                if (on[x] || x == y || !d.has_arc(x, c0) || !d.has_arc(y, x)) continue;
                cycle.push_back(y);
                cycle.push_back(x);
                on[x] = on[y] = 1;
                extended = true;
                break;
            }
            if (extended) break;
        }
        if (!extended) throw InternalInvariantError("camion_hamiltonian_cycle: no dominated-to-dominating arc");
    }
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
    return cycle;
}

}  // namespace

std::vector<Vertex> camion_hamiltonian_cycle(const Digraph& d) { return camion_impl(d, nullptr); }

std::vector<Vertex> camion_hamiltonian_cycle(const Digraph& d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return camion_impl(d, &rng);
}

Decomposition strong_decomposition(const Digraph& d) {
    StrongComponents sc = strong_components(d);
    Decomposition dec;
    dec.blocks = sc.components;
    dec.block_of = sc.component_of;
    return dec;
}

Decomposition nice_decomposition(const Digraph& d) {
    if (!is_strong(d)) throw PreconditionError("nice_decomposition: digraph is not strong");
    const std::vector<ArcId> cuts = cut_arcs(d);
    ArcSubset rest = ArcSubset::all_of(d);
    for (ArcId a : cuts) rest.erase(a);
    StrongComponents sc = strong_components(d, rest);
    const int k = sc.count();
    std::vector<std::vector<int>> succ(k);
    std::vector<int> indeg(k, 0);
    auto constrain = [&](int before, int after) {
        succ[before].push_back(after);
        ++indeg[after];
    };
    for (ArcId a = 0; a < d.size(); ++a) {
        int ct = sc.component_of[d.arc(a).tail], ch = sc.component_of[d.arc(a).head];
        if (ct == ch) {
            if (!rest.contains(a)) throw InternalInvariantError("nice_decomposition: cut-arc inside a block");
            continue;
        }
        if (rest.contains(a))
            constrain(ct, ch);
        else
            constrain(ch, ct);
    }
    // Kahn's algorithm, smallest block minimum first.
    std::vector<int> order;
    std::vector<char> done(k, 0);
    for (int step = 0; step < k; ++step) {
        int pick = -1;
        for (int c = 0; c < k; ++c)
            if (!done[c] && indeg[c] == 0 && (pick < 0 || sc.components[c].front() < sc.components[pick].front()))
                pick = c;
        if (pick < 0) throw PreconditionError("nice_decomposition: cut-arcs cannot all be backward");
        done[pick] = 1;
        order.push_back(pick);
        for (int s : succ[pick]) --indeg[s];
    }
    Decomposition dec;
    dec.block_of.assign(d.order(), -1);
    for (int c : order) {
        for (Vertex v : sc.components[c]) dec.block_of[v] = dec.size();
        dec.blocks.push_back(sc.components[c]);
    }
    dec.backward_arcs = cuts;
    std::sort(dec.backward_arcs.begin(), dec.backward_arcs.end(), [&](ArcId a, ArcId b) {
        const int ta = dec.block_of[d.arc(a).tail], tb = dec.block_of[d.arc(b).tail];
        return ta != tb ? ta > tb : a < b;
    });
    for (ArcId a : dec.backward_arcs)
        if (dec.block_of[d.arc(a).tail] <= dec.block_of[d.arc(a).head])
            throw InternalInvariantError("nice_decomposition: cut-arc not backward");
    return dec;
}

std::string to_string(S4Variant v) {
    switch (v) {
        case S4Variant::S4: return "S4";
        case S4Variant::S4_1: return "S4_1";
        case S4Variant::S4_2: return "S4_2";
        case S4Variant::S4_3: return "S4_3";
    }
    return "?";
}

Digraph reference_w1() { return Digraph(4, {{0, 1}, {0, 2}, {3, 0}, {3, 1}, {1, 2}, {2, 3}, {1, 3}}); }

Digraph reference_w2() { return Digraph(4, {{0, 3}, {1, 2}, {0, 2}, {2, 3}, {3, 1}, {1, 0}}); }

Digraph reference_s4(S4Variant v) {
    // a=0 b=1 c=2 d=3: cycle a->b->d->c->a with 2-cycles a<->d and b<->c.
    Digraph d(4, {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {0, 3}, {3, 0}, {1, 2}, {2, 1}});
    if (v == S4Variant::S4_1 || v == S4Variant::S4_3) d.add_arc(0, 3);
    if (v == S4Variant::S4_2) d.add_arc(3, 2);
    if (v == S4Variant::S4_3) d.add_arc(2, 1);
    return d;
}

std::optional<S4Match> match_s4_family(const Digraph& d) {
    if (d.order() != 4) return std::nullopt;
    // A third copy of an arc never helps a pair of subdigraphs, so compare
    // with multiplicities capped at two.
    Digraph capped(4);
    std::map<std::pair<Vertex, Vertex>, int> mult;
    for (const Arc& a : d.arcs())
        if (++mult[{a.tail, a.head}] <= 2) capped.add_arc(a.tail, a.head);
    for (S4Variant v : {S4Variant::S4, S4Variant::S4_1, S4Variant::S4_2, S4Variant::S4_3}) {
        Digraph ref = reference_s4(v);
        if (ref.size() != capped.size()) continue;
        if (auto map = find_isomorphism(ref, capped)) return S4Match{v, *map};
    }
    return std::nullopt;
}

namespace {

// Assigns every arc to one of two colours so that both colour classes are
// strong spanning subdigraphs.
class StrongPairSearch {
public:
    StrongPairSearch(const Digraph& d, std::int64_t budget) : d_(d), budget_(budget), colour_(d.size(), -1) {}

    bool run() { return branch(); }
    std::int64_t nodes() const { return nodes_; }

    std::pair<ArcSubset, ArcSubset> result() const {
        ArcSubset a(d_.size()), b(d_.size());
        for (ArcId e = 0; e < d_.size(); ++e) (colour_[e] == 1 ? b : a).insert(e);
        return {a, b};
    }

private:
    ArcSubset available(int c) const {
        ArcSubset s(d_.size());
        for (ArcId e = 0; e < d_.size(); ++e)
            if (colour_[e] == c || colour_[e] < 0) s.insert(e);
        return s;
    }
    ArcSubset fixed(int c) const {
        ArcSubset s(d_.size());
        for (ArcId e = 0; e < d_.size(); ++e)
            if (colour_[e] == c) s.insert(e);
        return s;
    }

    bool branch() {
        if (++nodes_ > budget_) throw BoundExceededError("two_arc_disjoint_strong_spanning: search budget exhausted");
        if (!is_strong(d_, available(0)) || !is_strong(d_, available(1))) return false;
        if (is_strong(d_, fixed(0)) && is_strong(d_, fixed(1))) return true;

        // Most constrained (vertex, direction, colour) still lacking an arc.
        std::vector<ArcId> best;
        int best_colour = -1;
        for (Vertex v = 0; v < d_.order(); ++v) {
            for (int dir = 0; dir < 2; ++dir) {
                auto arcs = dir == 0 ? d_.in_arcs(v) : d_.out_arcs(v);
                for (int c = 0; c < 2; ++c) {
                    bool has = false;
                    std::vector<ArcId> free;
                    for (ArcId e : arcs) {
                        if (colour_[e] == c) has = true;
                        if (colour_[e] < 0) free.push_back(e);
                    }
                    if (has) continue;
                    if (best_colour < 0 || free.size() < best.size()) {
                        best = free;
                        best_colour = c;
                    }
                }
            }
        }
        if (best_colour < 0) {
            ArcId e = -1;
            for (ArcId i = 0; i < d_.size(); ++i)
                if (colour_[i] < 0) {
                    e = i;
                    break;
                }
            if (e < 0) return false;
            for (int c = 0; c < 2; ++c) {
                colour_[e] = c;
                if (branch()) return true;
            }
            colour_[e] = -1;
            return false;
        }
        std::vector<ArcId> touched;
        bool found = false;
        for (ArcId e : best) {
            colour_[e] = best_colour;
            if (branch()) {
                found = true;
                break;
            }
            colour_[e] = 1 - best_colour;
            touched.push_back(e);
        }
        if (!found) {
            for (ArcId e : touched) colour_[e] = -1;
            for (ArcId e : best) colour_[e] = -1;
        }
        return found;
    }

    const Digraph& d_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    std::vector<int> colour_;
};

}  // namespace

StrongPairResult two_arc_disjoint_strong_spanning(const Digraph& d, std::int64_t node_budget) {
    if (!is_semicomplete(d)) throw PreconditionError("two_arc_disjoint_strong_spanning: not semicomplete");
    if (d.order() < 2 || !is_k_arc_strong(d, 2))
        throw PreconditionError("two_arc_disjoint_strong_spanning: digraph is not 2-arc-strong");
    StrongPairResult r;
    if (auto m = match_s4_family(d)) {
        r.exception = m->variant;
        return r;
    }
    for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
        std::vector<Vertex> h = attempt == 0 ? camion_hamiltonian_cycle(d) : camion_hamiltonian_cycle(d, attempt);
        ArcSubset hs = cycle_arcs(d, h);
        ArcSubset rest = hs.complement();
        if (is_strong(d, rest)) {
            r.pair = std::make_pair(hs, rest);
            r.fast_path = true;
            return r;
        }
    }
    StrongPairSearch search(d, node_budget);
    bool ok = search.run();
    r.search_nodes = search.nodes();
    if (!ok) throw InternalInvariantError("two_arc_disjoint_strong_spanning: no pair outside the S4 family");
    r.pair = search.result();
    return r;
}

// ---------------------------------------------------------------------------
// Two-cycle covers of strong digraphs with alpha <= 2.

namespace {

struct CoverState {
    std::vector<Vertex> c1, c2;
};

int position(const std::vector<Vertex>& c, Vertex v) {
    auto it = std::find(c.begin(), c.end(), v);
    return it == c.end() ? -1 : static_cast<int>(it - c.begin());
}

Vertex succ(const std::vector<Vertex>& c, Vertex v) {
    int i = position(c, v);
    return c[(i + 1) % c.size()];
}

Vertex pred(const std::vector<Vertex>& c, Vertex v) {
    int i = position(c, v);
    return c[(i + c.size() - 1) % c.size()];
}

// Vertices of c from a to b following the cycle (inclusive).
std::vector<Vertex> segment(const std::vector<Vertex>& c, Vertex a, Vertex b) {
    std::vector<Vertex> r;
    int i = position(c, a);
    const int m = static_cast<int>(c.size());
    for (int step = 0; step < m; ++step) {
        Vertex v = c[(i + step) % m];
        r.push_back(v);
        if (v == b) return r;
    }
    throw InternalInvariantError("segment: end not on cycle");
}

void insert_after(std::vector<Vertex>& c, Vertex after, Vertex v) {
    c.insert(c.begin() + position(c, after) + 1, v);
}

std::vector<char> membership(int n, const std::vector<Vertex>& c) {
    std::vector<char> m(n, 0);
    for (Vertex v : c) m[v] = 1;
    return m;
}

// Common subpath x..y of the two cycles (empty when disjoint).
std::vector<Vertex> common_path(int n, const CoverState& s) {
    std::vector<char> in2 = membership(n, s.c2);
    std::vector<Vertex> shared;
    for (Vertex v : s.c1)
        if (in2[v]) shared.push_back(v);
    if (shared.empty()) return {};
    std::vector<char> sh = membership(n, shared);
    Vertex x = -1;
    for (Vertex v : shared)
        if (!sh[pred(s.c1, v)]) x = v;
    if (x < 0) throw InternalInvariantError("cover: cycles coincide");
    std::vector<Vertex> p;
    for (Vertex v = x; sh[v] && static_cast<int>(p.size()) < static_cast<int>(shared.size()); v = succ(s.c1, v))
        p.push_back(v);
    if (p.size() != shared.size()) throw InternalInvariantError("cover: intersection is not a subpath");
    return p;
}

bool is_valid_cover(const Digraph& d, const CoverState& s) {
    const int n = d.order();
    auto check_cycle = [&](const std::vector<Vertex>& c) {
        if (c.size() < 2) return false;
        std::vector<char> seen(n, 0);
        for (Vertex v : c) {
            if (seen[v]) return false;
            seen[v] = 1;
        }
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!d.has_arc(c[i], c[(i + 1) % c.size()])) return false;
        return true;
    };
    if (!check_cycle(s.c1) || !check_cycle(s.c2)) return false;
    std::vector<char> cov = membership(n, s.c1);
    for (Vertex v : s.c2) cov[v] = 1;
    if (std::count(cov.begin(), cov.end(), 1) != n) return false;
    try {
        std::vector<Vertex> p = common_path(n, s);
        if (p.empty()) return true;
        // The shared part must also be consecutive, in order, on c2.
        std::vector<Vertex> on2 = segment(s.c2, p.front(), p.back());
        return on2 == p;
    } catch (const InternalInvariantError&) {
        return false;
    }
}

// Moves that enlarge the intersection; returns false when none applies.
bool improve_once(const Digraph& d, CoverState& s) {
    const int n = d.order();
    std::vector<Vertex> p = common_path(n, s);
    if (p.empty()) {
        for (int side = 0; side < 2; ++side) {
            std::vector<Vertex>& a_cycle = side == 0 ? s.c1 : s.c2;
            std::vector<Vertex>& b_cycle = side == 0 ? s.c2 : s.c1;
            std::vector<char> in_b = membership(n, b_cycle);
            for (Vertex a : a_cycle) {
                Vertex a_next = succ(a_cycle, a);
                for (Vertex b : d.out_neighbours(a)) {
                    if (!in_b[b]) continue;
                    for (Vertex c : d.in_neighbours(a_next)) {
                        if (!in_b[c]) continue;
                        std::vector<Vertex> piece = segment(b_cycle, b, c);
                        if (piece.size() == b_cycle.size())
                            throw InternalInvariantError("cover: merge would give a Hamiltonian cycle");
                        std::vector<Vertex> merged = segment(a_cycle, a_next, a);
                        merged.insert(merged.end(), piece.begin(), piece.end());
                        a_cycle = merged;
                        return true;
                    }
                }
            }
        }
        return false;
    }
    std::vector<char> in1 = membership(n, s.c1), in2 = membership(n, s.c2);
    const Vertex x = p.front(), y = p.back();
    {
        Vertex a = succ(s.c1, y), b = succ(s.c2, y);
        if (!in2[a] && !in1[b]) {
            if (d.has_arc(a, b)) {
                insert_after(s.c2, y, a);
                return true;
            }
            if (d.has_arc(b, a)) {
                insert_after(s.c1, y, b);
                return true;
            }
        }
    }
    {
        Vertex a = pred(s.c1, x), b = pred(s.c2, x);
        if (!in2[a] && !in1[b]) {
            if (d.has_arc(a, b)) {
                insert_after(s.c1, a, b);
                return true;
            }
            if (d.has_arc(b, a)) {
                insert_after(s.c2, b, a);
                return true;
            }
        }
    }
    return false;
}

// Enumerates simple cycles whose smallest vertex is `start`.
class CycleEnumerator {
public:
    CycleEnumerator(const Digraph& d, std::int64_t budget) : d_(d), budget_(budget) {}

    template <typename Visit>
    bool run(Visit&& visit) {
        for (Vertex s = 0; s < d_.order(); ++s) {
            std::vector<Vertex> path{s};
            std::vector<char> on(d_.order(), 0);
            on[s] = 1;
            if (dfs(s, path, on, visit)) return true;
        }
        return false;
    }

private:
    template <typename Visit>
    bool dfs(Vertex s, std::vector<Vertex>& path, std::vector<char>& on, Visit& visit) {
        if (++count_ > budget_) throw BoundExceededError("chen_manalastras_cover: cycle budget exhausted");
        Vertex u = path.back();
        for (Vertex w : d_.out_neighbours(u)) {
            if (w == s && path.size() >= 2) {
                if (visit(path)) return true;
                continue;
            }
            if (w <= s || on[w]) continue;
            on[w] = 1;
            path.push_back(w);
            if (dfs(s, path, on, visit)) return true;
            path.pop_back();
            on[w] = 0;
        }
        return false;
    }

    const Digraph& d_;
    std::int64_t budget_;
    std::int64_t count_ = 0;
};

std::optional<CoverState> search_cover(const Digraph& d) {
    const int n = d.order();
    std::optional<CoverState> found;
    HamiltonSearch hs;
    CycleEnumerator cycles(d, 5'000'000);
    cycles.run([&](const std::vector<Vertex>& c1) {
        std::vector<char> in1 = membership(n, c1);
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < n; ++v)
            if (!in1[v]) rest.push_back(v);
        const int m = static_cast<int>(c1.size());
        // Longest shared subpath first.
        for (int len = m - 1; len >= 1; --len) {
            for (int i = 0; i < m; ++i) {
                Vertex x = c1[i], y = c1[(i + len - 1) % m];
                std::vector<Vertex> shared;
                for (int k = 0; k < len; ++k) shared.push_back(c1[(i + k) % m]);
                if (x == y) {
                    std::vector<Vertex> vs = rest;
                    vs.push_back(x);
                    Subdigraph sub = induced(d, vs);
                    auto h = find_hamiltonian_cycle(sub.graph, &hs);
                    if (!h) continue;
                    std::vector<Vertex> c2;
                    for (Vertex v : *h) c2.push_back(sub.parent_vertex[v]);
                    std::rotate(c2.begin(), std::find(c2.begin(), c2.end(), x), c2.end());
                    found = CoverState{c1, c2};
                    return true;
                }
                std::vector<Vertex> vs = rest;
                vs.push_back(x);
                vs.push_back(y);
                auto path = find_hamiltonian_path(d, vs, y, x, &hs);
                if (!path) continue;
                std::vector<Vertex> c2 = shared;
                c2.insert(c2.end(), path->begin() + 1, path->end() - 1);
                found = CoverState{c1, c2};
                return true;
            }
        }
        if (!rest.empty()) {
            Subdigraph sub = induced(d, rest);
            if (sub.graph.order() >= 2) {
                if (auto h = find_hamiltonian_cycle(sub.graph, &hs)) {
                    std::vector<Vertex> c2;
                    for (Vertex v : *h) c2.push_back(sub.parent_vertex[v]);
                    found = CoverState{c1, c2};
                    return true;
                }
            }
        }
        return false;
    });
    return found;
}

}  // namespace

CycleCover chen_manalastras_cover(const Digraph& d) {
    if (d.order() == 0) throw PreconditionError("chen_manalastras_cover: empty digraph");
    if (!is_strong(d)) throw PreconditionError("chen_manalastras_cover: digraph is not strong");
    if (!alpha_at_most_two(d).holds) throw PreconditionError("chen_manalastras_cover: alpha > 2");
    if (auto h = find_hamiltonian_cycle(d)) return CycleCover{*h, {}};
    if (d.order() > 24) throw BoundExceededError("chen_manalastras_cover: non-Hamiltonian input with n > 24");
    std::optional<CoverState> s = search_cover(d);
    if (!s) throw InternalInvariantError("chen_manalastras_cover: no two-cycle cover found");
    while (improve_once(d, *s)) {
        if (!is_valid_cover(d, *s)) throw InternalInvariantError("chen_manalastras_cover: improvement broke cover");
    }
    if (!is_valid_cover(d, *s)) throw InternalInvariantError("chen_manalastras_cover: invalid cover");
    return CycleCover{s->c1, s->c2};
}

std::string to_string(SkeletonKind k) {
    switch (k) {
        case SkeletonKind::A: return "A";
        case SkeletonKind::B1: return "B1";
        case SkeletonKind::B2: return "B2";
        case SkeletonKind::B3: return "B3";
    }
    return "?";
}

std::optional<CaseAPartition> find_case_a_partition(const Digraph& d) {
    const int n = d.order();
    for (Vertex u1 = 0; u1 < n; ++u1) {
        std::vector<Vertex> v1, v2;
        for (Vertex w = 0; w < n; ++w) (w != u1 && !d.adjacent(u1, w) ? v2 : v1).push_back(w);
        if (v2.empty()) continue;
        Vertex u2 = -1;
        for (Vertex w : v2) {
            bool lonely = std::none_of(v1.begin(), v1.end(), [&](Vertex z) { return d.adjacent(w, z); });
            if (lonely) {
                u2 = w;
                break;
            }
        }
        if (u2 < 0) continue;
        Subdigraph s1 = induced(d, v1), s2 = induced(d, v2);
        if (!is_semicomplete(s1.graph) || !is_semicomplete(s2.graph)) continue;
        if (!is_strong(s1.graph) || !is_strong(s2.graph)) continue;
        return CaseAPartition{v1, v2, u1, u2};
    }
    return std::nullopt;
}

namespace {

// Walk along c1 from an arc into c2 until a vertex with no neighbour on c2.
Vertex lonely_vertex(const Digraph& d, const std::vector<Vertex>& c1, const std::vector<Vertex>& c2) {
    std::vector<char> in2 = membership(d.order(), c2);
    auto has_arc_into = [&](Vertex v) {
        for (Vertex w : d.out_neighbours(v))
            if (in2[w]) return true;
        return false;
    };
    auto has_arc_from = [&](Vertex v) {
        for (Vertex w : d.in_neighbours(v))
            if (in2[w]) return true;
        return false;
    };
    Vertex start = -1;
    for (Vertex v : c1)
        if (has_arc_into(v)) {
            start = v;
            break;
        }
    if (start < 0) throw InternalInvariantError("case A: no arc between the cycles");
    Vertex w = succ(c1, start);
    for (std::size_t step = 0; step < c1.size(); ++step) {
        if (has_arc_from(w)) throw InternalInvariantError("case A: cover is not locally maximal");
        if (!has_arc_into(w)) return w;
        w = succ(c1, w);
    }
    throw InternalInvariantError("case A: walk did not find a vertex without neighbours across");
}

}  // namespace

SpanningSkeleton classify_small_strong(const Digraph& d) {
    if (!is_strong(d)) throw PreconditionError("classify_small_strong: digraph is not strong");
    if (!alpha_at_most_two(d).holds) throw PreconditionError("classify_small_strong: alpha > 2");
    SpanningSkeleton s;
    s.cover = chen_manalastras_cover(d);
    s.arcs = cycle_arcs(d, s.cover.c1);
    if (s.cover.hamiltonian()) {
        s.kind = SkeletonKind::B1;
    } else {
        s.arcs = s.arcs | cycle_arcs(d, s.cover.c2);
        std::vector<Vertex> p = common_path(d.order(), CoverState{s.cover.c1, s.cover.c2});
        if (p.empty()) {
            s.kind = SkeletonKind::A;
            s.v1 = s.cover.c1;
            s.v2 = s.cover.c2;
            std::sort(s.v1.begin(), s.v1.end());
            std::sort(s.v2.begin(), s.v2.end());
            s.u1 = lonely_vertex(d, s.cover.c1, s.cover.c2);
            s.u2 = lonely_vertex(d, s.cover.c2, s.cover.c1);
            s.arcs = ArcSubset(d.size());
        } else {
            s.kind = p.size() == 1 ? SkeletonKind::B3 : SkeletonKind::B2;
            s.x = p.front();
            s.y = p.back();
        }
    }
    std::string problem = check_skeleton(d, s);
    if (!problem.empty()) throw InternalInvariantError("classify_small_strong: " + problem);
    return s;
}

std::string check_skeleton(const Digraph& d, const SpanningSkeleton& s) {
    const int n = d.order();
    if (s.kind == SkeletonKind::A) {
        std::vector<int> side(n, 0);
        for (Vertex v : s.v1) side[v] |= 1;
        for (Vertex v : s.v2) side[v] |= 2;
        for (Vertex v = 0; v < n; ++v)
            if (side[v] != 1 && side[v] != 2) return "kind A parts do not partition V";
        for (const auto* part : {&s.v1, &s.v2}) {
            Subdigraph sub = induced(d, *part);
            if (!is_semicomplete(sub.graph) || !is_strong(sub.graph)) return "kind A part is not strong semicomplete";
        }
        if (s.u1 < 0 || s.u2 < 0 || side[s.u1] != 1 || side[s.u2] != 2) return "kind A lonely vertices misplaced";
        for (Vertex w = 0; w < n; ++w) {
            if (side[w] == 2 && d.adjacent(s.u1, w)) return "u1 has a neighbour in V2";
            if (side[w] == 1 && d.adjacent(s.u2, w)) return "u2 has a neighbour in V1";
        }
        return {};
    }
    if (!is_strong(d, s.arcs)) return "skeleton is not strong";
    std::vector<int> outd(n, 0), ind(n, 0);
    std::vector<std::vector<Vertex>> outn(n), inn(n);
    for (ArcId a : s.arcs.members()) {
        const Arc& e = d.arc(a);
        ++outd[e.tail];
        ++ind[e.head];
        outn[e.tail].push_back(e.head);
        inn[e.head].push_back(e.tail);
    }
    auto independent = [&](const std::vector<Vertex>& pair) {
        return pair.size() == 2 && !d.adjacent(pair[0], pair[1]);
    };
    for (Vertex v = 0; v < n; ++v) {
        int want_out = 1, want_in = 1;
        if (s.kind == SkeletonKind::B2) {
            if (v == s.x) want_in = 2;
            if (v == s.y) want_out = 2;
        }
        if (s.kind == SkeletonKind::B3 && v == s.x) want_in = want_out = 2;
        if (n == 1) want_in = want_out = 0;
        if (outd[v] != want_out || ind[v] != want_in) return "degree condition fails at vertex " + std::to_string(v);
    }
    if (s.kind == SkeletonKind::B2) {
        if (s.x == s.y) return "B2 with a single shared vertex";
        if (!independent(inn[s.x])) return "in-neighbours of x are adjacent";
        if (!independent(outn[s.y])) return "out-neighbours of y are adjacent";
    }
    if (s.kind == SkeletonKind::B3) {
        if (!independent(inn[s.x])) return "in-neighbours of x are adjacent";
        if (!independent(outn[s.x])) return "out-neighbours of x are adjacent";
    }
    return {};
}

}  // namespace nonsep
