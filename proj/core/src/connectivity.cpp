#include "nonsep/connectivity.hpp"

#include <algorithm>
#include <deque>

#include "nonsep/errors.hpp"

namespace nonsep {

int StrongComponents::initial_count() const {
    return static_cast<int>(std::count(initial.begin(), initial.end(), 1));
}

StrongComponents strong_components(const Digraph& d) { return strong_components(d, ArcSubset::all_of(d)); }

StrongComponents strong_components(const Digraph& d, const ArcSubset& allowed) {
    const int n = d.order();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> found;
    int counter = 0;

    struct Frame {
        Vertex v;
        std::size_t next;
    };
    for (Vertex root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            auto outs = d.out_arcs(f.v);
            if (f.next < outs.size()) {
                ArcId a = outs[f.next++];
                if (!allowed.contains(a)) continue;
                Vertex w = d.arc(a).head;
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            Vertex v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<Vertex> c;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    c.push_back(w);
                } while (w != v);
                std::sort(c.begin(), c.end());
                found.push_back(std::move(c));
            }
        }
    }
    // Tarjan emits sinks first.
    std::reverse(found.begin(), found.end());
    StrongComponents sc;
    sc.components = std::move(found);
    sc.component_of.assign(n, -1);
    for (int i = 0; i < sc.count(); ++i)
        for (Vertex v : sc.components[i]) sc.component_of[v] = i;
    sc.initial.assign(sc.count(), 1);
    sc.terminal.assign(sc.count(), 1);
    for (ArcId a = 0; a < d.size(); ++a) {
        if (!allowed.contains(a)) continue;
        int cu = sc.component_of[d.arc(a).tail], cv = sc.component_of[d.arc(a).head];
        if (cu != cv) {
            sc.terminal[cu] = 0;
            sc.initial[cv] = 0;
        }
    }
    return sc;
}

bool is_strong(const Digraph& d) { return is_strong(d, ArcSubset::all_of(d)); }

namespace {

int reach_count(const Digraph& d, Vertex s, const ArcSubset& allowed, bool forward) {
    std::vector<char> seen(d.order(), 0);
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (ArcId a : forward ? d.out_arcs(u) : d.in_arcs(u)) {
            if (!allowed.contains(a)) continue;
            Vertex w = forward ? d.arc(a).head : d.arc(a).tail;
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count;
}

}  // namespace

bool is_strong(const Digraph& d, const ArcSubset& allowed) {
    if (d.order() <= 1) return true;
    return reach_count(d, 0, allowed, true) == d.order() && reach_count(d, 0, allowed, false) == d.order();
}

std::vector<std::vector<char>> reachability(const Digraph& d, const ArcSubset& allowed) {
    const int n = d.order();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (Vertex s = 0; s < n; ++s) {
        std::vector<Vertex> stack{s};
        reach[s][s] = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (ArcId a : d.out_arcs(u)) {
                if (!allowed.contains(a)) continue;
                Vertex w = d.arc(a).head;
                if (!reach[s][w]) {
                    reach[s][w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return reach;
}

int max_flow(const Digraph& d, Vertex s, Vertex t, const ArcSubset& allowed, int limit) {
    if (s == t) throw PreconditionError("max_flow: source equals sink");
    const int n = d.order();
    std::vector<char> flow(d.size(), 0);
    int value = 0;
    std::vector<ArcId> via(n);
    std::vector<char> backward(n);
    while (value < limit) {
        std::fill(via.begin(), via.end(), kNoArc);
        std::vector<char> seen(n, 0);
        std::deque<Vertex> queue{s};
        seen[s] = 1;
        while (!queue.empty() && !seen[t]) {
            Vertex u = queue.front();
            queue.pop_front();
            for (ArcId a : d.out_arcs(u)) {
                Vertex w = d.arc(a).head;
                if (!allowed.contains(a) || flow[a] || seen[w]) continue;
                seen[w] = 1;
                via[w] = a;
                backward[w] = 0;
                queue.push_back(w);
            }
            for (ArcId a : d.in_arcs(u)) {
                Vertex w = d.arc(a).tail;
                if (!allowed.contains(a) || !flow[a] || seen[w]) continue;
                seen[w] = 1;
                via[w] = a;
                backward[w] = 1;
                queue.push_back(w);
            }
        }
        if (!seen[t]) break;
        for (Vertex v = t; v != s;) {
            ArcId a = via[v];
            if (backward[v]) {
                flow[a] = 0;
                v = d.arc(a).head;
            } else {
                flow[a] = 1;
                v = d.arc(a).tail;
            }
        }
        ++value;
    }
    return value;
}

int max_flow(const Digraph& d, Vertex s, Vertex t) { return max_flow(d, s, t, ArcSubset::all_of(d)); }

int arc_connectivity(const Digraph& d) {
    if (d.order() < 2) throw PreconditionError("arc_connectivity: n < 2");
    const ArcSubset all = ArcSubset::all_of(d);
    int best = 1 << 30;
    for (Vertex v = 1; v < d.order(); ++v) {
        best = std::min(best, max_flow(d, 0, v, all, best));
        if (best == 0) break;
        best = std::min(best, max_flow(d, v, 0, all, best));
        if (best == 0) break;
    }
    return best;
}

bool is_k_arc_strong(const Digraph& d, int k) {
    if (d.order() < 2) return k <= 0 || d.order() == 1;
    const ArcSubset all = ArcSubset::all_of(d);
    for (Vertex v = 1; v < d.order(); ++v)
        if (max_flow(d, 0, v, all, k) < k || max_flow(d, v, 0, all, k) < k) return false;
    return true;
}

std::vector<ArcId> cut_arcs(const Digraph& d) { return cut_arcs(d, ArcSubset::all_of(d)); }

std::vector<ArcId> cut_arcs(const Digraph& d, const ArcSubset& allowed) {
    if (!is_strong(d, allowed)) throw PreconditionError("cut_arcs: digraph is not strong");
    std::vector<ArcId> r;
    ArcSubset work = allowed;
    for (ArcId a = 0; a < d.size(); ++a) {
        if (!allowed.contains(a)) continue;
        work.erase(a);
        if (!is_strong(d, work)) r.push_back(a);
        work.insert(a);
    }
    return r;
}

OutBranching OutBranching::empty(int n, Vertex root) {
    OutBranching b;
    b.root = root;
    b.parent.assign(n, kNoArc);
    b.covered.assign(n, 0);
    if (n > 0) b.covered[root] = 1;
    return b;
}

bool OutBranching::spans_all() const {
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

std::vector<ArcId> OutBranching::arc_ids() const {
    std::vector<ArcId> r;
    for (ArcId a : parent)
        if (a != kNoArc) r.push_back(a);
    std::sort(r.begin(), r.end());
    return r;
}

ArcSubset OutBranching::arc_set(const Digraph& d) const {
    ArcSubset s(d.size());
    for (ArcId a : parent)
        if (a != kNoArc) s.insert(a);
    return s;
}

void OutBranching::attach(const Digraph& d, ArcId a) {
    Vertex v = d.arc(a).head;
    parent[v] = a;
    covered[v] = 1;
}

bool is_out_tree(const Digraph& d, const OutBranching& b) {
    const int n = d.order();
    if (static_cast<int>(b.parent.size()) != n || static_cast<int>(b.covered.size()) != n) return false;
    if (n == 0) return true;
    if (b.root < 0 || b.root >= n || !b.covered[b.root] || b.parent[b.root] != kNoArc) return false;
    for (Vertex v = 0; v < n; ++v) {
        if (!b.covered[v]) {
            if (b.parent[v] != kNoArc) return false;
            continue;
        }
        if (v == b.root) continue;
        ArcId a = b.parent[v];
        if (a < 0 || a >= d.size() || d.arc(a).head != v || !b.covered[d.arc(a).tail]) return false;
    }
    // Every covered vertex must lead back to the root.
    for (Vertex v = 0; v < n; ++v) {
        if (!b.covered[v]) continue;
        Vertex w = v;
        int steps = 0;
        while (w != b.root) {
            w = d.arc(b.parent[w]).tail;
            if (++steps > n) return false;
        }
    }
    return true;
}

bool is_out_branching(const Digraph& d, const OutBranching& b) { return is_out_tree(d, b) && b.spans_all(); }

OutBranching bfs_out_tree(const Digraph& d, Vertex root, const ArcSubset& allowed) {
    OutBranching b = OutBranching::empty(d.order(), root);
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (ArcId a : d.out_arcs(u)) {
            if (!allowed.contains(a)) continue;
            Vertex w = d.arc(a).head;
            if (b.covered[w]) continue;
            b.attach(d, a);
            queue.push_back(w);
        }
    }
    return b;
}

OutBranchingResult has_out_branching(const Digraph& d) { return has_out_branching(d, ArcSubset::all_of(d)); }

OutBranchingResult has_out_branching(const Digraph& d, const ArcSubset& allowed) {
    OutBranchingResult r;
    if (d.order() == 0) return r;
    StrongComponents sc = strong_components(d, allowed);
    r.initial_components = sc.initial_count();
    if (r.initial_components != 1) return r;
    for (int i = 0; i < sc.count(); ++i)
        if (sc.initial[i]) r.branching = bfs_out_tree(d, sc.components[i].front(), allowed);
    return r;
}

EdmondsResult edmonds_branchings(const Digraph& d, Vertex s, int k) {
    return edmonds_branchings(d, s, k, ArcSubset::all_of(d));
}

EdmondsResult edmonds_branchings(const Digraph& d, Vertex s, int k, const ArcSubset& allowed) {
    const int n = d.order();
    if (s < 0 || s >= n) throw PreconditionError("edmonds_branchings: root out of range");
    if (k < 0) throw PreconditionError("edmonds_branchings: negative k");
    EdmondsResult result;
    for (Vertex v = 0; v < n; ++v) {
        if (v == s) continue;
        int f = max_flow(d, s, v, allowed, k);
        if (f < k) {
            result.deficient_vertex = v;
            result.deficient_flow = f;
            return result;
        }
    }
    ArcSubset remaining = allowed;
    for (int round = 0; round < k; ++round) {
        const int need = k - round;
        OutBranching tree = OutBranching::empty(n, s);
        if (need == 1) {
            tree = bfs_out_tree(d, s, remaining);
        } else {
            int covered = 1;
            while (covered < n) {
                bool grown = false;
                for (ArcId a = 0; a < d.size() && !grown; ++a) {
                    if (!remaining.contains(a)) continue;
                    const Arc& arc = d.arc(a);
                    if (!tree.covered[arc.tail] || tree.covered[arc.head]) continue;
                    remaining.erase(a);
                    tree.covered[arc.head] = 1;
                    bool feasible = true;
                    for (Vertex w = 0; w < n && feasible; ++w) {
                        if (w == s) continue;
                        if (max_flow(d, s, w, remaining, need - 1) < need - 1) feasible = false;
                    }
                    if (feasible) {
                        tree.parent[arc.head] = a;
                        ++covered;
                        grown = true;
                    } else {
                        tree.covered[arc.head] = 0;
                        remaining.insert(a);
                    }
                }
                if (!grown) throw InternalInvariantError("edmonds_branchings: no feasible extension arc");
            }
        }
        if (!tree.spans_all()) throw InternalInvariantError("edmonds_branchings: final branching does not span");
        for (ArcId a : tree.arc_ids()) remaining.erase(a);
        result.branchings.push_back(std::move(tree));
    }
    return result;
}

}  // namespace nonsep
