#include "nonsep/branching.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "nonsep/errors.hpp"
#include "nonsep/hamiltonian.hpp"

namespace nonsep {

bool verify_nonsep_branching(const Digraph& d, const OutBranching& b) {
    if (!is_out_branching(d, b)) return false;
    return is_strong(d, b.arc_set(d).complement());
}

bool verify_nonsep_out_tree(const Digraph& d, const OutBranching& t, Vertex excluded) {
    if (!is_out_tree(d, t)) return false;
    for (Vertex v = 0; v < d.order(); ++v)
        if ((v == excluded) == t.contains(v)) return false;
    return is_strong(d, t.arc_set(d).complement());
}

std::string to_string(SemicompleteCase c) {
    switch (c) {
        case SemicompleteCase::Trivial: return "trivial";
        case SemicompleteCase::TwoInDegreeOne: return "two-in-degree-one";
        case SemicompleteCase::W1: return "W1";
        case SemicompleteCase::OneInDegreeOne: return "one-in-degree-one";
        case SemicompleteCase::SmallComplete: return "small-complete";
        case SemicompleteCase::NiceDecomposition: return "nice-decomposition";
    }
    return "?";
}

namespace {

OutBranching lift(const Subdigraph& sub, const OutBranching& local, int parent_order) {
    OutBranching g = OutBranching::empty(parent_order, sub.parent_vertex[local.root]);
    g.covered.assign(parent_order, 0);
    for (Vertex v = 0; v < sub.graph.order(); ++v) {
        if (!local.covered[v]) continue;
        g.covered[sub.parent_vertex[v]] = 1;
        if (local.parent[v] != kNoArc) g.parent[sub.parent_vertex[v]] = sub.parent_arc[local.parent[v]];
    }
    return g;
}

ArcId arc_or_throw(const Digraph& d, Vertex u, Vertex v, const char* who) {
    auto a = d.find_arc(u, v);
    if (!a) throw InternalInvariantError(std::string(who) + ": expected arc " + std::to_string(u) + "->" +
                                         std::to_string(v) + " is missing");
    return *a;
}

std::vector<Vertex> rotate_to(std::vector<Vertex> cycle, Vertex first) {
    std::rotate(cycle.begin(), std::find(cycle.begin(), cycle.end(), first), cycle.end());
    return cycle;
}

// Two in-degree-one vertices: out-tree avoiding one of them.
std::pair<OutBranching, Vertex> two_in_degree_one_tree(const Digraph& d, Vertex a, Vertex b) {
    const int n = d.order();
    std::vector<Vertex> h = camion_hamiltonian_cycle(d);
    ArcSubset rest = cycle_arcs(d, h).complement();
    for (auto [r1, r2] : {std::pair{a, b}, std::pair{b, a}}) {
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < n; ++v)
            if (v != r2) keep.push_back(v);
        Subdigraph sub = induced(d, keep, rest);
        OutBranchingResult ob = has_out_branching(sub.graph);
        if (!ob.branching || sub.parent_vertex[ob.branching->root] != r1) continue;
        OutBranching t = lift(sub, *ob.branching, n);
        if (!verify_nonsep_out_tree(d, t, r2)) throw InternalInvariantError("out-tree certificate failed");
        return {t, r2};
    }
    throw InternalInvariantError("two in-degree-one vertices: neither out-tree exists");
}

OutBranching one_in_degree_one_branching(const Digraph& d, Vertex r) {
    const int n = d.order();
    std::vector<Vertex> p = rotate_to(camion_hamiltonian_cycle(d), r);
    ArcSubset h = cycle_arcs(d, p);
    ArcSubset rest = h.complement();
    OutBranchingResult ob = has_out_branching(d, rest);
    if (ob.branching) {
        if (ob.branching->root != r) throw InternalInvariantError("in-degree-one vertex is not the root");
        return *ob.branching;
    }
    if (n < 5) {
        // Digon p_n p_{n-1} can appear here; enumerate parent choices.
        std::vector<std::vector<ArcId>> options(n);
        for (Vertex v = 0; v < n; ++v)
            if (v != r) options[v].assign(d.in_arcs(v).begin(), d.in_arcs(v).end());
        std::vector<std::size_t> pick(n, 0);
        while (true) {
            OutBranching b = OutBranching::empty(n, r);
            b.covered.assign(n, 1);
            for (Vertex v = 0; v < n; ++v)
                if (v != r) b.parent[v] = options[v][pick[v]];
            if (verify_nonsep_branching(d, b)) return b;
            Vertex v = 0;
            for (; v < n; ++v) {
                if (v == r) continue;
                if (++pick[v] < options[v].size()) break;
                pick[v] = 0;
            }
            if (v == n) break;
        }
        throw InternalInvariantError("one in-degree-one vertex: no non-separating branching on four vertices");
    }
    // T = H - p1p2 + pnp2 + p1p3.
    ArcSubset t = h;
    t.erase(arc_or_throw(d, p[0], p[1], "one_in_degree_one"));
    t.insert(arc_or_throw(d, p[n - 1], p[1], "one_in_degree_one"));
    t.insert(arc_or_throw(d, p[0], p[2], "one_in_degree_one"));
    OutBranching b = bfs_out_tree(d, r, t.complement());
    if (!b.spans_all()) throw InternalInvariantError("one in-degree-one vertex: no out-branching in D - A(T)");
    return b;
}

OutBranching strong_pair_branching(const Digraph& d, Vertex root) {
    StrongPairResult sp = two_arc_disjoint_strong_spanning(d);
    if (sp.exception) return sdmulti_nonsep_branching(d, root);
    OutBranching b = bfs_out_tree(d, root, sp.pair->second);
    if (!b.spans_all()) throw InternalInvariantError("strong pair: second part does not reach every vertex");
    return b;
}

// First block S1 of a nice decomposition with p >= 2.
OutBranching first_block_branching(const Digraph& d, const Decomposition& dec, Vertex r) {
    const int n = d.order();
    const std::vector<Vertex>& s1 = dec.blocks[0];
    std::vector<ArcId> entering;
    for (ArcId a : dec.backward_arcs)
        if (dec.block_of[d.arc(a).head] == 0) entering.push_back(a);
    if (entering.size() != 1) throw InternalInvariantError("nice decomposition: first block is not entered once");
    const Vertex s = d.arc(entering[0]).tail, t = d.arc(entering[0]).head;
    std::vector<char> in_s1(n, 0);
    for (Vertex v : s1) in_s1[v] = 1;

    OutBranching bt = OutBranching::empty(n, t), br = OutBranching::empty(n, r);
    bt.covered.assign(n, 0);
    br.covered.assign(n, 0);
    bt.covered[t] = br.covered[r] = 1;
    auto add = [&](OutBranching& b, Vertex u, Vertex v) { b.attach(d, arc_or_throw(d, u, v, "first block")); };

    if (s1.size() == 3) {
        Vertex x = -1, y = -1;
        for (Vertex w : s1)
            if (w != t && x < 0 && d.has_arc(w, t)) x = w;
        for (Vertex w : s1)
            if (w != t && w != x) y = w;
        if (x < 0 || y < 0) throw InternalInvariantError("first block of size three lacks an arc into t");
        if (r == t) {
            add(bt, t, x), add(bt, x, y);
            add(br, t, y), add(br, y, x);
        } else if (r == x) {
            add(bt, t, y), add(bt, y, x);
            add(br, x, t), add(br, x, y);
        } else {
            add(bt, t, x), add(bt, x, y);
            add(br, y, x), add(br, x, t);
        }
    } else {
        if (s1.size() < 3) throw InternalInvariantError("first block has fewer than three vertices");
        Subdigraph sub = induced(d, s1);
        Digraph gadget = sub.graph;
        const Vertex apex = gadget.order();
        Digraph hr(apex + 1);
        for (const Arc& a : gadget.arcs()) hr.add_arc(a.tail, a.head);
        const ArcId to_t = hr.add_arc(apex, sub.local_vertex[t]);
        hr.add_arc(apex, sub.local_vertex[r]);
        EdmondsResult ed = edmonds_branchings(hr, apex, 2);
        if (!ed.ok()) throw InternalInvariantError("apex gadget is not 2-arc-connected from the apex");
        int which_t = ed.branchings[0].parent[sub.local_vertex[t]] == to_t ? 0 : 1;
        if (ed.branchings[which_t].parent[sub.local_vertex[t]] != to_t)
            throw InternalInvariantError("apex gadget: no branching starts with the arc to t");
        for (int k = 0; k < 2; ++k) {
            OutBranching& target = k == which_t ? bt : br;
            const OutBranching& src = ed.branchings[k];
            for (Vertex v = 0; v < apex; ++v) {
                ArcId a = src.parent[v];
                if (a == kNoArc || hr.arc(a).tail == apex) continue;
                target.attach(d, sub.parent_arc[a]);
            }
        }
        // B_t must not be an out-star.
        bool star = true;
        for (Vertex v : s1)
            if (v != t && d.arc(bt.parent[v]).tail != t) star = false;
        if (star) {
            ArcSubset br_arcs = br.arc_set(d);
            bool fixed = false;
            for (ArcId a = 0; a < d.size() && !fixed; ++a) {
                const Arc& e = d.arc(a);
                if (!in_s1[e.tail] || !in_s1[e.head] || e.tail == t || e.head == t || br_arcs.contains(a)) continue;
                bt.parent[e.head] = a;
                fixed = true;
            }
            if (!fixed) throw InternalInvariantError("first block: out-star could not be modified");
        }
    }
    if (!is_out_tree(d, bt) || !is_out_tree(d, br) || !bt.arc_set(d).disjoint(br.arc_set(d)))
        throw InternalInvariantError("first block: branchings are not arc-disjoint out-trees");

    std::vector<int> children(n, 0);
    for (Vertex v : s1)
        if (v != t) ++children[d.arc(bt.parent[v]).tail];
    Vertex q = -1;
    for (Vertex v : s1)
        if (v != t && children[v] > 0) {
            q = v;
            break;
        }
    if (q < 0) throw InternalInvariantError("first block: no inner vertex in B_t");

    OutBranching b = br;
    for (Vertex w = 0; w < n; ++w)
        if (!in_s1[w]) b.attach(d, arc_or_throw(d, q, w, "first block"));
    (void)s;
    return b;
}

SemicompleteBranchingResult sd_impl(const Digraph& d, std::optional<Vertex> root) {
    if (d.order() == 0) throw PreconditionError("sd_nonsep_branching: empty digraph");
    if (!d.is_simple()) throw PreconditionError("sd_nonsep_branching: digraph has parallel arcs");
    if (!is_semicomplete(d)) throw PreconditionError("sd_nonsep_branching: digraph is not semicomplete");
    if (!is_strong(d)) throw PreconditionError("sd_nonsep_branching: digraph is not strong");
    const int n = d.order();
    if (root && (*root < 0 || *root >= n)) throw PreconditionError("sd_nonsep_branching: root out of range");

    SemicompleteBranchingResult res;
    for (Vertex v = 0; v < n; ++v)
        if (d.in_degree(v) == 1) res.in_degree_one.push_back(v);
    auto all_vertices = [&] {
        std::vector<Vertex> v(n);
        std::iota(v.begin(), v.end(), 0);
        return v;
    };
    auto require_root = [&](Vertex chosen) {
        if (std::find(res.permitted_roots.begin(), res.permitted_roots.end(), chosen) == res.permitted_roots.end())
            throw PreconditionError("sd_nonsep_branching: root " + std::to_string(chosen) + " not permitted");
    };

    if (n == 1) {
        res.kase = SemicompleteCase::Trivial;
        res.possible = true;
        res.permitted_roots = {0};
        if (root) require_root(*root);
        res.branching = OutBranching::empty(1, 0);
        return res;
    }
    if (res.in_degree_one.size() >= 2) {
        res.kase = SemicompleteCase::TwoInDegreeOne;
        res.explanation = "two vertices of in-degree one: each must be the root";
        if (res.in_degree_one.size() == 2) {
            if (n == 4 && find_isomorphism(reference_w2(), d)) {
                res.is_w2 = true;
                res.explanation += "; isomorphic to W2, no out-tree avoiding one of them";
            } else {
                auto [tree, excluded] = two_in_degree_one_tree(d, res.in_degree_one[0], res.in_degree_one[1]);
                res.out_tree = tree;
                res.excluded = excluded;
            }
        }
        return res;
    }
    if (n == 4 && find_isomorphism(reference_w1(), d)) {
        res.kase = SemicompleteCase::W1;
        res.explanation = "isomorphic to W1";
        return res;
    }
    res.possible = true;
    if (res.in_degree_one.size() == 1) {
        res.kase = SemicompleteCase::OneInDegreeOne;
        const Vertex r = res.in_degree_one[0];
        res.permitted_roots = {r};
        if (root) require_root(*root);
        res.branching = one_in_degree_one_branching(d, r);
    } else if (n <= 3) {
        res.kase = SemicompleteCase::SmallComplete;
        res.permitted_roots = all_vertices();
        Vertex r = root.value_or(0);
        res.branching = strong_pair_branching(d, r);
    } else {
        res.kase = SemicompleteCase::NiceDecomposition;
        Decomposition dec = nice_decomposition(d);
        if (dec.size() == 1) {
            res.permitted_roots = all_vertices();
            res.branching = strong_pair_branching(d, root.value_or(0));
        } else {
            res.permitted_roots = dec.blocks[0];
            Vertex r = root.value_or(dec.blocks[0].front());
            require_root(r);
            res.branching = first_block_branching(d, dec, r);
        }
    }
    if (!verify_nonsep_branching(d, *res.branching))
        throw InternalInvariantError("sd_nonsep_branching: certificate failed verification (" + to_string(res.kase) +
                                     ")");
    return res;
}

}  // namespace

SemicompleteBranchingResult sd_nonsep_branching(const Digraph& d, std::optional<Vertex> root) {
    return sd_impl(d, root);
}

OutBranching sdmulti_nonsep_branching(const Digraph& d, Vertex root) {
    if (!is_semicomplete(d)) throw PreconditionError("sdmulti_nonsep_branching: not semicomplete");
    if (d.order() < 2 || !is_k_arc_strong(d, 2)) throw PreconditionError("sdmulti_nonsep_branching: not 2-arc-strong");
    if (root < 0 || root >= d.order()) throw PreconditionError("sdmulti_nonsep_branching: root out of range");
    OutBranching b;
    if (auto m = match_s4_family(d)) {
        // Reference S4: branching c->b, b->d, d->a rooted at c; the rotation
        // a->b->d->c->a is an automorphism.
        const std::array<Vertex, 4> rot{1, 3, 0, 2};
        std::vector<std::pair<Vertex, Vertex>> arcs{{2, 1}, {1, 3}, {3, 0}};
        Vertex ref_root = 2;
        std::vector<Vertex> inverse(4);
        for (int i = 0; i < 4; ++i) inverse[m->map[i]] = i;
        while (ref_root != inverse[root]) {
            for (auto& [u, v] : arcs) u = rot[u], v = rot[v];
            ref_root = rot[ref_root];
        }
        b = OutBranching::empty(4, root);
        for (auto [u, v] : arcs) b.attach(d, arc_or_throw(d, m->map[u], m->map[v], "S4 lifting"));
    } else {
        StrongPairResult sp = two_arc_disjoint_strong_spanning(d);
        b = bfs_out_tree(d, root, sp.pair->second);
    }
    if (!verify_nonsep_branching(d, b)) throw InternalInvariantError("sdmulti_nonsep_branching: verification failed");
    return b;
}

// ---------------------------------------------------------------------------
// Co-bipartite case.

namespace {

struct SideBranching {
    int kind = 0;  // 1: out-tree avoiding one vertex, 2: in-degree-one root, 3: root with arc from across
    OutBranching tree;  // global indices
    Vertex r1 = -1, r2 = -1;  // kind 1: root and excluded vertex
    Vertex root = -1;
    std::optional<ArcId> cross_arc;  // kind 3
};

std::optional<ArcId> lowest_arc_between(const Digraph& d, const std::vector<char>& from_set, Vertex head,
                                        Vertex avoid_tail = -1) {
    for (ArcId a : d.in_arcs(head))
        if (from_set[d.arc(a).tail] && d.arc(a).tail != avoid_tail) return a;
    return std::nullopt;
}

SideBranching side_branching(const Digraph& d, const std::vector<Vertex>& side, const std::vector<char>& other) {
    Subdigraph sub = induced(d, side);
    SideBranching sb;
    std::vector<Vertex> ones;
    for (Vertex v = 0; v < sub.graph.order(); ++v)
        if (sub.graph.in_degree(v) == 1) ones.push_back(v);
    if (ones.size() >= 2) {
        sb.kind = 1;
        SemicompleteBranchingResult r = sd_nonsep_branching(sub.graph);
        if (!r.out_tree) throw InternalInvariantError("case A: side with two in-degree-one vertices has no out-tree");
        sb.tree = lift(sub, *r.out_tree, d.order());
        sb.r1 = sb.tree.root;
        sb.r2 = sub.parent_vertex[r.excluded];
        sb.root = sb.r1;
        return sb;
    }
    if (ones.size() == 1) {
        sb.kind = 2;
        SemicompleteBranchingResult r = sd_nonsep_branching(sub.graph, ones[0]);
        sb.tree = lift(sub, *r.branching, d.order());
        sb.root = sb.tree.root;
        return sb;
    }
    sb.kind = 3;
    Decomposition dec = nice_decomposition(sub.graph);
    std::optional<ArcId> best;
    for (Vertex lv : dec.blocks[0]) {
        auto a = lowest_arc_between(d, other, sub.parent_vertex[lv]);
        if (a && (!best || *a < *best)) best = a;
    }
    if (!best) throw InternalInvariantError("case A: no arc from across into the first block");
    sb.cross_arc = best;
    Vertex r = d.arc(*best).head;
    SemicompleteBranchingResult res = sd_nonsep_branching(sub.graph, sub.local_vertex[r]);
    sb.tree = lift(sub, *res.branching, d.order());
    sb.root = r;
    return sb;
}

void merge_into(OutBranching& target, const OutBranching& part) {
    for (std::size_t v = 0; v < part.covered.size(); ++v) {
        if (!part.covered[v]) continue;
        target.covered[v] = 1;
        if (part.parent[v] != kNoArc) target.parent[v] = part.parent[v];
    }
}

}  // namespace

OutBranching case_a_nonsep_branching(const Digraph& d, const CaseAPartition& part) {
    const int n = d.order();
    if (n < 2 || !is_k_arc_strong(d, 2)) throw PreconditionError("case_a_nonsep_branching: not 2-arc-strong");
    if (min_in_degree(d) < 3) throw PreconditionError("case_a_nonsep_branching: min in-degree below 3");
    if (!d.is_simple()) throw PreconditionError("case_a_nonsep_branching: digraph has parallel arcs");
    SpanningSkeleton check;
    check.kind = SkeletonKind::A;
    check.v1 = part.v1;
    check.v2 = part.v2;
    check.u1 = part.u1;
    check.u2 = part.u2;
    std::string problem = check_skeleton(d, check);
    if (!problem.empty()) throw PreconditionError("case_a_nonsep_branching: " + problem);

    std::vector<char> in1(n, 0), in2(n, 0);
    for (Vertex v : part.v1) in1[v] = 1;
    for (Vertex v : part.v2) in2[v] = 1;
    SideBranching s1 = side_branching(d, part.v1, in2);
    SideBranching s2 = side_branching(d, part.v2, in1);

    auto need = [&](std::optional<ArcId> a) {
        if (!a) throw InternalInvariantError("case A: missing cross arc");
        return *a;
    };
    OutBranching b;
    if (s1.kind != 1 && s2.kind != 1) {
        b = OutBranching::empty(n, s1.root);
        merge_into(b, s1.tree);
        merge_into(b, s2.tree);
        ArcId e = s2.kind == 3 ? *s2.cross_arc : need(lowest_arc_between(d, in1, s2.root));
        b.attach(d, e);
    } else if (s1.kind != 1 && s2.kind == 1) {
        b = OutBranching::empty(n, s1.root);
        merge_into(b, s1.tree);
        merge_into(b, s2.tree);
        b.attach(d, need(lowest_arc_between(d, in1, s2.r1)));
        b.attach(d, need(lowest_arc_between(d, in1, s2.r2)));
    } else if (s1.kind == 1 && s2.kind != 1) {
        b = OutBranching::empty(n, s2.root);
        merge_into(b, s2.tree);
        merge_into(b, s1.tree);
        b.attach(d, need(lowest_arc_between(d, in2, s1.r1)));
        b.attach(d, need(lowest_arc_between(d, in2, s1.r2)));
    } else {
        b = OutBranching::empty(n, s1.r1);
        merge_into(b, s1.tree);
        merge_into(b, s2.tree);
        b.attach(d, need(lowest_arc_between(d, in1, s2.r1, s1.r2)));
        b.attach(d, need(lowest_arc_between(d, in1, s2.r2, s1.r2)));
        b.attach(d, need(lowest_arc_between(d, in2, s1.r2, s2.r2)));
    }
    b.parent[b.root] = kNoArc;
    if (!verify_nonsep_branching(d, b)) throw InternalInvariantError("case_a_nonsep_branching: verification failed");
    return b;
}

// ---------------------------------------------------------------------------
// Main pipeline.

namespace {

void claim(ConstructionTrace& trace, bool ok, const std::string& name, const std::string& what) {
    if (!ok) throw InternalInvariantError("claim " + name + " violated: " + what);
    trace.claims_checked.push_back(name + ": " + what);
}

// Shortest path from `sources` to `targets` over allowed arcs whose internal
// vertices avoid `blocked`; first arc must leave the sources.
std::optional<std::vector<Vertex>> set_path(const Digraph& d, const ArcSubset& allowed,
                                            const std::vector<char>& sources, const std::vector<char>& targets,
                                            const std::vector<char>& blocked) {
    const int n = d.order();
    std::vector<Vertex> prev(n, -1);
    std::vector<char> seen(n, 0);
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < n; ++v)
        if (sources[v]) {
            seen[v] = 1;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (ArcId a : d.out_arcs(u)) {
            if (!allowed.contains(a)) continue;
            Vertex w = d.arc(a).head;
            if (seen[w] || sources[w]) continue;
            if (targets[w]) {
                std::vector<Vertex> path{w};
                for (Vertex x = u; x != -1; x = prev[x]) path.push_back(x);
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (blocked[w]) continue;
            seen[w] = 1;
            prev[w] = u;
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

}  // namespace

MainBranchingResult main_nonsep_branching(const Digraph& d) {
    const int n = d.order();
    if (n < 2) throw PreconditionError("main_nonsep_branching: n < 2");
    if (!d.is_simple()) throw PreconditionError("main_nonsep_branching: digraph has parallel arcs");
    if (!is_k_arc_strong(d, 2)) throw PreconditionError("main_nonsep_branching: digraph is not 2-arc-strong");
    if (!alpha_at_most_two(d).holds) throw PreconditionError("main_nonsep_branching: alpha > 2");
    const int min_in = min_in_degree(d);
    const bool oriented = is_oriented(d);
    const bool regime_i = min_in >= 5;
    if (!regime_i && !(min_in >= 3 && oriented)) {
        if (min_in >= 3)
            throw NotGuaranteedError("main_nonsep_branching: min in-degree 3 or 4 with a 2-cycle is not covered");
        throw PreconditionError("main_nonsep_branching: min in-degree below 3");
    }

    MainBranchingResult out;
    ConstructionTrace& trace = out.trace;
    auto finish = [&](OutBranching b) {
        if (!verify_nonsep_branching(d, b)) throw InternalInvariantError("main_nonsep_branching: verification failed");
        out.branching = std::move(b);
        return out;
    };

    if (is_semicomplete(d)) {
        trace.route = "semicomplete";
        SemicompleteBranchingResult r = sd_nonsep_branching(d);
        if (!r.possible) throw InternalInvariantError("main_nonsep_branching: semicomplete case impossible");
        return finish(*r.branching);
    }
    if (auto part = find_case_a_partition(d)) {
        trace.route = "case-A";
        trace.skeleton_kind = SkeletonKind::A;
        return finish(case_a_nonsep_branching(d, *part));
    }
    SpanningSkeleton h = classify_small_strong(d);
    trace.skeleton_kind = h.kind;
    if (h.kind == SkeletonKind::A) {
        trace.route = "case-A";
        return finish(case_a_nonsep_branching(d, CaseAPartition{h.v1, h.v2, h.u1, h.u2}));
    }
    trace.skeleton = h.arcs;
    trace.d_prime = h.arcs.complement();
    const ArcSubset& dp = trace.d_prime;
    StrongComponents sc = strong_components(d, dp);
    trace.initial_components = sc.initial_count();
    if (trace.initial_components == 1) {
        trace.route = "single-initial";
        OutBranchingResult ob = has_out_branching(d, dp);
        return finish(*ob.branching);
    }
    trace.route = "two-initial";

    claim(trace, trace.initial_components == 2, "A", "exactly two initial components");
    for (int i = 0; i < sc.count(); ++i)
        if (sc.initial[i]) (trace.r1.empty() ? trace.r1 : trace.r2) = sc.components[i];
    if (trace.r2.front() < trace.r1.front()) std::swap(trace.r1, trace.r2);
    claim(trace, trace.r1.size() >= 5 && trace.r2.size() >= 5, "A", "both initial components have >= 5 vertices");
    std::vector<int> indeg_dp(n, 0);
    for (ArcId a : dp.members()) ++indeg_dp[d.arc(a).head];
    int low = 0;
    bool at_least_one = true;
    for (Vertex v = 0; v < n; ++v) {
        if (indeg_dp[v] < 2) ++low;
        if (indeg_dp[v] < 1) at_least_one = false;
    }
    claim(trace, low <= 1 && at_least_one, "A", "in-degrees in D' are >= 2 except one vertex with >= 1");
    if (regime_i)
        claim(trace, *std::min_element(indeg_dp.begin(), indeg_dp.end()) >= 3, "A", "min in-degree of D' >= 3");

    std::vector<char> in_r1(n, 0), in_r2(n, 0);
    for (Vertex v : trace.r1) in_r1[v] = 1;
    for (Vertex v : trace.r2) in_r2[v] = 1;

    claim(trace, is_semicomplete(induced(d, trace.r1).graph) && is_semicomplete(induced(d, trace.r2).graph), "B",
          "R1 and R2 are semicomplete");
    {
        std::vector<std::array<int, 4>> cnt(n, {0, 0, 0, 0});
        for (ArcId a : h.arcs.members()) {
            const Arc& e = d.arc(a);
            if (in_r1[e.head]) ++cnt[e.tail][0];
            if (in_r2[e.head]) ++cnt[e.tail][1];
            if (in_r1[e.tail]) ++cnt[e.head][2];
            if (in_r2[e.tail]) ++cnt[e.head][3];
        }
        bool ok = std::all_of(cnt.begin(), cnt.end(), [](const auto& c) {
            return *std::max_element(c.begin(), c.end()) <= 1;
        });
        claim(trace, ok, "B", "every vertex has at most one skeleton neighbour on each side of each R_i");
    }

    auto arcs_from = [&](const std::vector<char>& set, Vertex y) {
        int c = 0;
        for (ArcId a : d.in_arcs(y))
            if (set[d.arc(a).tail]) ++c;
        return c;
    };
    for (Vertex y = 0; y < n; ++y) {
        if (in_r1[y] || in_r2[y]) continue;
        int c1 = arcs_from(in_r1, y), c2 = arcs_from(in_r2, y);
        auto adjacent_all = [&](const std::vector<Vertex>& r) {
            return std::all_of(r.begin(), r.end(), [&](Vertex z) { return d.adjacent(y, z); });
        };
        bool ok = c1 + c2 >= 4;
        if (c1 <= 1) ok = ok && adjacent_all(trace.r2) && c2 >= 4;
        if (c2 <= 1) ok = ok && adjacent_all(trace.r1) && c1 >= 4;
        claim(trace, ok, "C", "vertex " + std::to_string(y) + " receives >= 4 arcs from R1 + R2");
    }

    // R1*.
    std::vector<char> in_star = in_r1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (Vertex u = 0; u < n; ++u) {
            if (in_star[u] || in_r2[u]) continue;
            bool into = false;
            for (ArcId a : d.out_arcs(u))
                if (in_star[d.arc(a).head]) into = true;
            if (into && arcs_from(in_r2, u) <= 1) {
                in_star[u] = 1;
                trace.growth_order.push_back(u);
                grew = true;
                break;
            }
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (in_star[v]) trace.r1_star.push_back(v);
    Subdigraph star = induced(d, trace.r1_star);
    claim(trace, is_semicomplete(star.graph) && is_strong(star.graph), "D", "R1* is strong semicomplete");

    Decomposition dec = nice_decomposition(star.graph);
    trace.r1_star_blocks = dec.size();
    std::vector<char> target(n, 0);
    if (dec.size() >= 2) {
        for (Vertex lv : dec.blocks[0]) target[star.parent_vertex[lv]] = 1;
    } else {
        target = in_star;
    }
    for (ArcId a = 0; a < d.size() && trace.entering_arc == kNoArc; ++a)
        if (!in_star[d.arc(a).tail] && target[d.arc(a).head]) trace.entering_arc = a;
    if (trace.entering_arc == kNoArc) throw InternalInvariantError("main_nonsep_branching: no arc entering R1*");
    const Vertex u = d.arc(trace.entering_arc).tail, v = d.arc(trace.entering_arc).head;
    trace.d_star = dp;
    trace.d_star.erase(trace.entering_arc);

    SemicompleteBranchingResult b1 = sd_nonsep_branching(star.graph);
    for (Vertex lv : b1.in_degree_one)
        claim(trace, star.parent_vertex[lv] == v, "E", "in-degree-one vertex of R1* is the head of uv");
    b1 = sd_nonsep_branching(star.graph, star.local_vertex[v]);
    claim(trace, b1.possible && b1.branching.has_value(), "E", "R1* has a non-separating branching rooted at v");
    Subdigraph r2sub = induced(d, trace.r2);
    SemicompleteBranchingResult b2 = sd_nonsep_branching(r2sub.graph);
    claim(trace, b2.possible && b2.branching.has_value(), "E", "R2 has a non-separating branching");

    OutBranching b = OutBranching::empty(n, r2sub.parent_vertex[b2.branching->root]);
    merge_into(b, lift(star, *b1.branching, n));
    merge_into(b, lift(r2sub, *b2.branching, n));
    b.parent[b.root] = kNoArc;
    b.parent[v] = kNoArc;

    std::vector<char> in_vstar(n, 0);
    for (Vertex w = 0; w < n; ++w) in_vstar[w] = in_star[w] || in_r2[w];
    ArcSubset used_by_q(d.size());

    auto attach = [&](Vertex p, const ArcSubset& path_arcs_now) {
        const std::vector<char>& tails = p == u ? in_r2 : in_vstar;
        for (ArcId a : d.in_arcs(p)) {
            Vertex z = d.arc(a).tail;
            if (!tails[z] || path_arcs_now.contains(a)) continue;
            if (!(in_star[z] || in_r2[z])) continue;
            b.attach(d, a);
            return;
        }
        throw InternalInvariantError("main_nonsep_branching: no attachment arc for vertex " + std::to_string(p));
    };
    auto absorb_paths = [&](const std::vector<std::vector<Vertex>>& paths) {
        ArcSubset now(d.size());
        for (const auto& p : paths) {
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                ArcId a = kNoArc;
                for (ArcId c : d.out_arcs(p[i]))
                    if (d.arc(c).head == p[i + 1] && trace.d_star.contains(c) && !used_by_q.contains(c)) {
                        a = c;
                        break;
                    }
                if (a == kNoArc) a = *d.find_arc(p[i], p[i + 1]);
                now.insert(a);
            }
        }
        for (const auto& p : paths)
            for (Vertex w : p)
                if (!in_vstar[w] && !b.covered[w]) attach(w, now);
        for (const auto& p : paths) {
            for (Vertex w : p) in_vstar[w] = 1;
            trace.paths.push_back(p);
        }
        used_by_q = used_by_q | now;
    };

    auto find_path = [&](const std::vector<char>& from, const std::vector<char>& to) {
        std::optional<std::vector<Vertex>> p = set_path(d, trace.d_star, from, to, in_vstar);
        if (!p) {
            ArcSubset wider = b.arc_set(d).complement();
            wider.erase(trace.entering_arc);
            p = set_path(d, wider, from, to, in_vstar);
            if (p) ++trace.fallback_paths;
        }
        return p;
    };

    {
        std::vector<char> star_set = in_star;
        auto p12 = find_path(star_set, in_r2);
        auto p21 = find_path(in_r2, star_set);
        if (!p12 || !p21) throw InternalInvariantError("main_nonsep_branching: R1* and R2 are not linked");
        absorb_paths({*p12, *p21});
    }
    while (std::count(in_vstar.begin(), in_vstar.end(), 1) < n) {
        std::optional<std::vector<Vertex>> found;
        for (int pass = 0; pass < 2 && !found; ++pass) {
            ArcSubset allowed = trace.d_star;
            if (pass == 1) {
                allowed = b.arc_set(d).complement();
                allowed.erase(trace.entering_arc);
            }
            for (ArcId a = 0; a < d.size() && !found; ++a) {
                if (!allowed.contains(a) || used_by_q.contains(a)) continue;
                Vertex p0 = d.arc(a).tail, p1 = d.arc(a).head;
                if (!in_vstar[p0] || in_vstar[p1]) continue;
                std::vector<char> from(n, 0);
                from[p1] = 1;
                auto back = set_path(d, allowed, from, in_vstar, in_vstar);
                if (!back) continue;
                std::vector<Vertex> path{p0};
                path.insert(path.end(), back->begin(), back->end());
                found = path;
                if (pass == 1) ++trace.fallback_paths;
            }
        }
        if (!found) throw InternalInvariantError("main_nonsep_branching: no ear leaves the current vertex set");
        absorb_paths({*found});
    }
    if (!b.covered[u] && !in_r2[u]) throw InternalInvariantError("main_nonsep_branching: u not covered");
    b.attach(d, trace.entering_arc);
    return finish(b);
}

}  // namespace nonsep
