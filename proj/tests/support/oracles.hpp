#pragma once

// Plain brute-force reference checks. They work on arc lists and adjacency
// matrices only and never call into the library under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace ref {

using ArcList = std::vector<std::pair<int, int>>;

template <class G>
ArcList arcs_of(const G& d) {
    ArcList out;
    for (const auto& a : d.arcs()) out.emplace_back(a.tail, a.head);
    return out;
}

// keep[i] == 0 drops arc i; an empty mask keeps everything.
inline std::vector<std::vector<char>> reach(int n, const ArcList& arcs, const std::vector<char>& keep = {}) {
    std::vector<std::vector<int>> out(n);
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (keep.empty() || keep[i]) out[arcs[i].first].push_back(arcs[i].second);
    std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
    for (int s = 0; s < n; ++s) {
        std::vector<int> stack{s};
        r[s][s] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : out[u])
                if (!r[s][w]) r[s][w] = 1, stack.push_back(w);
        }
    }
    return r;
}

inline bool strong(int n, const ArcList& arcs, const std::vector<char>& keep = {}) {
    const auto r = reach(n, arcs, keep);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (!r[u][v]) return false;
    return true;
}

// Arcs leaving X, over every X with s in X and t outside.
inline int min_cut(int n, const ArcList& arcs, int s, int t) {
    int best = static_cast<int>(arcs.size());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!(mask >> s & 1) || (mask >> t & 1)) continue;
        int c = 0;
        for (auto [u, v] : arcs) c += (mask >> u & 1) && !(mask >> v & 1);
        best = std::min(best, c);
    }
    return best;
}

inline int arc_connectivity(int n, const ArcList& arcs) {
    if (n <= 1) return 0;
    int best = static_cast<int>(arcs.size());
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        int c = 0;
        for (auto [u, v] : arcs) c += (mask >> u & 1) && !(mask >> v & 1);
        best = std::min(best, c);
    }
    return best;
}

inline bool adjacent(const ArcList& arcs, int u, int v) {
    for (auto [a, b] : arcs)
        if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
}

inline int independence(int n, const ArcList& arcs) {
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (auto [u, v] : arcs)
            if ((mask >> u & 1) && (mask >> v & 1)) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

// Chosen arcs form an out-branching rooted at root: one entering arc per
// non-root vertex, none at the root, everything reachable from the root.
inline bool out_branching(int n, const ArcList& arcs, const std::vector<int>& chosen, int root) {
    std::vector<int> indeg(n, 0);
    ArcList sub;
    for (int i : chosen) {
        ++indeg[arcs[i].second];
        sub.push_back(arcs[i]);
    }
    for (int v = 0; v < n; ++v)
        if (indeg[v] != (v == root ? 0 : 1)) return false;
    const auto r = reach(n, sub);
    for (int v = 0; v < n; ++v)
        if (!r[root][v]) return false;
    return true;
}

// Underlying edges of the chosen arcs form a spanning tree.
inline bool spanning_tree(int n, const ArcList& edges) {
    if (static_cast<int>(edges.size()) != n - 1) return false;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    auto find = [&](int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    };
    for (auto [u, v] : edges) {
        const int a = find(u), b = find(v);
        if (a == b) return false;
        p[a] = b;
    }
    return true;
}

inline bool connected(int n, const ArcList& edges) {
    ArcList both = edges;
    for (auto [u, v] : edges) both.emplace_back(v, u);
    const auto r = reach(n, both);
    for (int v = 0; v < n; ++v)
        if (!r[0][v]) return false;
    return true;
}

// Hamiltonian cycles as vertex sequences starting at 0.
inline std::vector<std::vector<int>> hamiltonian_cycles(int n, const ArcList& arcs) {
    std::set<std::pair<int, int>> has(arcs.begin(), arcs.end());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = has.count({perm[i], perm[(i + 1) % n]}) > 0;
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return out;
}

// Multiset-of-arcs isomorphism by trying every permutation.
inline bool isomorphic(int n, const ArcList& a, const ArcList& b) {
    if (a.size() != b.size()) return false;
    std::multiset<std::pair<int, int>> target(b.begin(), b.end());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        std::multiset<std::pair<int, int>> img;
        for (auto [u, v] : a) img.insert({p[u], p[v]});
        if (img == target) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline bool same_arc_multiset(ArcList a, ArcList b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace ref
