#include "nonsep/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "nonsep/errors.hpp"

namespace nonsep {

std::string to_string(ClaimKind k) {
    switch (k) {
        case ClaimKind::NoNonsepBranching: return "no-nonsep-branching";
        case ClaimKind::NoNonsepTree: return "no-nonsep-tree";
        case ClaimKind::AllHampathsSeparating: return "all-hampaths-separating";
        case ClaimKind::NoTwoStrongPartition: return "no-two-strong-partition";
    }
    return "?";
}

std::optional<ClaimKind> parse_claim_kind(const std::string& s) {
    for (ClaimKind k : {ClaimKind::NoNonsepBranching, ClaimKind::NoNonsepTree, ClaimKind::AllHampathsSeparating,
                        ClaimKind::NoTwoStrongPartition})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

namespace {

struct BudgetExhausted {};

void check_bound(const Digraph& d, const OracleLimits& limits, const char* who) {
    if (d.order() > limits.max_n)
        throw BoundExceededError(std::string(who) + ": n = " + std::to_string(d.order()) + " exceeds bound " +
                                 std::to_string(limits.max_n));
}

void tick(ImpossibilityTranscript& t, const OracleLimits& limits) {
    ++t.nodes;
    if (limits.node_budget >= 0 && t.nodes > limits.node_budget) throw BudgetExhausted{};
}

ImpossibilityTranscript start(ClaimKind k, const Digraph& d, std::string space) {
    ImpossibilityTranscript t;
    t.claim = k;
    t.n = d.order();
    t.arcs = d.size();
    t.search_space = std::move(space);
    return t;
}

// Backtracking over parent arcs of every non-root vertex except `excluded`.
bool search_out_tree(const Digraph& d, Vertex root, Vertex excluded, ImpossibilityTranscript& tr,
                     const OracleLimits& limits, OutBranching& out) {
    const int n = d.order();
    std::vector<Vertex> order;
    for (Vertex v = 0; v < n; ++v)
        if (v != root && v != excluded) order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return d.in_degree(a) < d.in_degree(b); });
    std::vector<ArcId> parent(n, kNoArc);
    ArcSubset residual = ArcSubset::all_of(d);
    double space = 1;
    for (Vertex v : order) {
        int c = 0;
        for (ArcId a : d.in_arcs(v))
            if (d.arc(a).tail != excluded) ++c;
        space *= c;
    }
    tr.search_space_size += space;

    auto creates_cycle = [&](Vertex v, Vertex tail) {
        for (Vertex w = tail; w != root; w = d.arc(parent[w]).tail) {
            if (w == v) return true;
            if (parent[w] == kNoArc) return false;
        }
        return false;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        tick(tr, limits);
        if (i == order.size()) {
            ++tr.leaves;
            return true;
        }
        const Vertex v = order[i];
        for (ArcId a : d.in_arcs(v)) {
            const Vertex t = d.arc(a).tail;
            if (t == excluded || creates_cycle(v, t)) {
                ++tr.pruned;
                continue;
            }
            residual.erase(a);
            if (is_strong(d, residual)) {
                parent[v] = a;
                if (rec(i + 1)) return true;
                parent[v] = kNoArc;
            } else {
                ++tr.pruned;
            }
            residual.insert(a);
        }
        return false;
    };
    if (!is_strong(d, residual)) return false;
    if (!rec(0)) return false;
    out = OutBranching::empty(n, root);
    for (Vertex v = 0; v < n; ++v) {
        out.parent[v] = parent[v];
        out.covered[v] = v != excluded;
    }
    return true;
}

}  // namespace

BranchingOracleResult oracle_nonsep_branching(const Digraph& d, std::optional<Vertex> root,
                                              const OracleLimits& limits, bool all_roots) {
    check_bound(d, limits, "oracle_nonsep_branching");
    BranchingOracleResult res;
    res.transcript = start(ClaimKind::NoNonsepBranching, d,
                           root ? "parent arcs, root " + std::to_string(*root) : "parent arcs, every root");
    std::vector<Vertex> roots;
    if (root) {
        if (*root < 0 || *root >= d.order()) throw PreconditionError("oracle_nonsep_branching: root out of range");
        roots.push_back(*root);
    } else {
        roots.resize(d.order());
        std::iota(roots.begin(), roots.end(), 0);
    }
    try {
        for (Vertex r : roots) {
            OutBranching b;
            if (search_out_tree(d, r, -1, res.transcript, limits, b)) {
                res.feasible_roots.push_back(r);
                if (!res.witness) res.witness = b;
                res.exists = true;
                if (!all_roots) break;
            }
        }
    } catch (const BudgetExhausted&) {
        throw BoundExceededError("oracle_nonsep_branching: node budget exhausted");
    }
    res.transcript.verdict = !res.exists;
    if (!all_roots && res.exists && !root) res.transcript.notes.push_back("stopped at the first feasible root");
    return res;
}

BranchingOracleResult oracle_nonsep_out_tree(const Digraph& d, Vertex root, Vertex excluded,
                                             const OracleLimits& limits) {
    check_bound(d, limits, "oracle_nonsep_out_tree");
    if (root == excluded) throw PreconditionError("oracle_nonsep_out_tree: root is the excluded vertex");
    BranchingOracleResult res;
    res.transcript = start(ClaimKind::NoNonsepBranching, d,
                           "parent arcs, root " + std::to_string(root) + ", excluding " + std::to_string(excluded));
    try {
        OutBranching b;
        if (search_out_tree(d, root, excluded, res.transcript, limits, b)) {
            res.exists = true;
            res.witness = b;
            res.feasible_roots.push_back(root);
        }
    } catch (const BudgetExhausted&) {
        throw BoundExceededError("oracle_nonsep_out_tree: node budget exhausted");
    }
    res.transcript.verdict = !res.exists;
    return res;
}

TreeOracleResult oracle_nonsep_tree(const Digraph& d, const OracleLimits& limits) {
    check_bound(d, limits, "oracle_nonsep_tree");
    const int n = d.order();
    TreeOracleResult res;
    res.transcript = start(ClaimKind::NoNonsepTree, d, "UG pairs: exclude or include one direction");
    // One entry per adjacent pair: the arcs to choose from (lowest per direction).
    std::vector<std::vector<ArcId>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            std::vector<ArcId> opts;
            if (auto a = d.find_arc(u, v)) opts.push_back(*a);
            if (auto a = d.find_arc(v, u)) opts.push_back(*a);
            if (!opts.empty()) pairs.push_back(opts);
        }
    {
        double space = 1;
        for (const auto& p : pairs) space *= 1.0 + static_cast<double>(p.size());
        res.transcript.search_space_size = space;
    }
    if (n == 1) {
        res.exists = true;
        res.witness = ArcSubset(d.size());
        res.transcript.verdict = false;
        return res;
    }
    ArcSubset residual = ArcSubset::all_of(d);
    std::vector<ArcId> chosen;
    std::vector<char> decided_out(pairs.size(), 0);

    // Connectivity of chosen + undecided pairs.
    auto still_connectable = [&](std::size_t next) {
        std::vector<int> comp(n);
        std::iota(comp.begin(), comp.end(), 0);
        std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
        int parts = n;
        auto join = [&](Vertex a, Vertex b) {
            int ra = find(a), rb = find(b);
            if (ra != rb) comp[ra] = rb, --parts;
        };
        for (ArcId a : chosen) join(d.arc(a).tail, d.arc(a).head);
        for (std::size_t i = next; i < pairs.size(); ++i) join(d.arc(pairs[i][0]).tail, d.arc(pairs[i][0]).head);
        return parts == 1;
    };
    auto joins_components = [&](ArcId a) {
        std::vector<int> comp(n);
        std::iota(comp.begin(), comp.end(), 0);
        std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
        for (ArcId c : chosen) comp[find(d.arc(c).tail)] = find(d.arc(c).head);
        return find(d.arc(a).tail) != find(d.arc(a).head);
    };

    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        tick(res.transcript, limits);
        if (static_cast<int>(chosen.size()) == n - 1) {
            ++res.transcript.leaves;
            return true;  // acyclic with n-1 edges, residual kept strong
        }
        if (i == pairs.size()) return false;
        if (static_cast<int>(pairs.size() - i) < n - 1 - static_cast<int>(chosen.size())) {
            ++res.transcript.pruned;
            return false;
        }
        for (ArcId a : pairs[i]) {
            if (!joins_components(a)) {
                ++res.transcript.pruned;
                break;
            }
            residual.erase(a);
            if (is_strong(d, residual)) {
                chosen.push_back(a);
                if (rec(i + 1)) return true;
                chosen.pop_back();
            } else {
                ++res.transcript.pruned;
            }
            residual.insert(a);
        }
        if (still_connectable(i + 1)) return rec(i + 1);
        ++res.transcript.pruned;
        return false;
    };
    try {
        if (is_strong(d) && rec(0)) {
            res.exists = true;
            res.witness = ArcSubset::of(d, chosen);
        }
    } catch (const BudgetExhausted&) {
        throw BoundExceededError("oracle_nonsep_tree: node budget exhausted");
    }
    res.transcript.verdict = !res.exists;
    return res;
}

HamPathOracleResult oracle_hampaths_separating(const Digraph& d, std::optional<Vertex> start_vertex,
                                               std::optional<Vertex> reach_target, OracleLimits limits) {
    check_bound(d, limits, "oracle_hampaths_separating");
    const int n = d.order();
    HamPathOracleResult res;
    res.transcript = start(ClaimKind::AllHampathsSeparating, d,
                           start_vertex ? "hamiltonian paths from " + std::to_string(*start_vertex)
                                        : "hamiltonian paths, every start");
    res.transcript.search_space_size = std::tgamma(n + 1.0);
    if (reach_target) res.target_unreachable_on_every_path = true;
    std::vector<Vertex> path;
    std::vector<char> used(n, 0);
    ArcSubset residual = ArcSubset::all_of(d);
    std::function<void()> rec = [&]() {
        tick(res.transcript, limits);
        if (static_cast<int>(path.size()) == n) {
            ++res.transcript.leaves;
            ++res.paths;
            if (is_strong(d, residual)) {
                res.all_separating = false;
                if (!res.nonseparating_path) res.nonseparating_path = path;
            } else {
                ++res.separating;
            }
            if (reach_target) {
                auto reach = reachability(d, residual);
                if (reach[path.front()][*reach_target]) res.target_unreachable_on_every_path = false;
            }
            return;
        }
        const Vertex u = path.back();
        for (ArcId a : d.out_arcs(u)) {
            const Vertex w = d.arc(a).head;
            if (used[w] || d.find_arc(u, w) != a) continue;
            used[w] = 1;
            path.push_back(w);
            residual.erase(a);
            rec();
            residual.insert(a);
            path.pop_back();
            used[w] = 0;
        }
    };
    try {
        for (Vertex s = 0; s < n; ++s) {
            if (start_vertex && s != *start_vertex) continue;
            path = {s};
            used.assign(n, 0);
            used[s] = 1;
            rec();
        }
    } catch (const BudgetExhausted&) {
        throw BoundExceededError("oracle_hampaths_separating: node budget exhausted");
    }
    res.transcript.verdict = res.all_separating;
    res.transcript.notes.push_back("paths " + std::to_string(res.paths) + ", separating " +
                                   std::to_string(res.separating));
    if (res.target_unreachable_on_every_path)
        res.transcript.notes.push_back(std::string("target unreachable on every path: ") +
                                       (*res.target_unreachable_on_every_path ? "yes" : "no"));
    return res;
}

BlockModel contract_blocks(const Digraph& d, const std::vector<int>& block_of) {
    if (static_cast<int>(block_of.size()) != d.order()) throw PreconditionError("contract_blocks: block map size");
    BlockModel m;
    m.blocks = block_of.empty() ? 0 : *std::max_element(block_of.begin(), block_of.end()) + 1;
    std::map<std::pair<int, int>, int> count;
    for (const Arc& a : d.arcs())
        if (block_of[a.tail] != block_of[a.head]) ++count[{block_of[a.tail], block_of[a.head]}];
    for (auto [pair, c] : count) (c == 1 ? m.special : m.shared).push_back(pair);
    return m;
}

BlockOracleResult oracle_two_strong_partition_blocks(const BlockModel& model) {
    const int k = static_cast<int>(model.special.size());
    if (k > 24) throw BoundExceededError("oracle_two_strong_partition_blocks: more than 24 special arcs");
    BlockOracleResult res;
    res.transcript.claim = ClaimKind::NoTwoStrongPartition;
    res.transcript.n = model.blocks;
    res.transcript.arcs = k + static_cast<int>(model.shared.size());
    res.transcript.search_space = "2-colourings of " + std::to_string(k) + " special arcs";
    res.transcript.search_space_size = std::ldexp(1.0, k);
    auto strong_with = [&](std::uint32_t mask, int colour) {
        Digraph g(model.blocks);
        for (auto [a, b] : model.shared) g.add_arc(a, b);
        for (int i = 0; i < k; ++i)
            if ((((mask >> i) & 1U) ? 2 : 1) == colour) g.add_arc(model.special[i].first, model.special[i].second);
        return is_strong(g);
    };
    for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
        ++res.colourings_checked;
        ++res.transcript.nodes;
        ++res.transcript.leaves;
        if (strong_with(mask, 1) && strong_with(mask, 2)) {
            res.impossible = false;
            std::vector<int> c(k);
            for (int i = 0; i < k; ++i) c[i] = ((mask >> i) & 1U) ? 2 : 1;
            res.colouring = c;
            break;
        }
    }
    res.transcript.verdict = res.impossible;
    return res;
}

}  // namespace nonsep
