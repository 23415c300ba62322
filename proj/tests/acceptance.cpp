// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nonsep/branching.hpp"
#include "nonsep/connectivity.hpp"
#include "nonsep/errors.hpp"
#include "nonsep/gallery.hpp"
#include "nonsep/generators.hpp"
#include "nonsep/oracles.hpp"
#include "nonsep/search.hpp"
#include "nonsep/tree.hpp"
#include "nonsep/undirected.hpp"
#include "support/oracles.hpp"

using namespace nonsep;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Time limits per criterion, seconds.
constexpr double kLimit[10] = {0, 60, 300, 600, 300, 300, 300, 300, 1, 600};

Digraph gal(const std::string& name, std::optional<int> r = std::nullopt) { return build(GalleryId::parse(name, r)).graph; }

std::string str(const std::vector<Vertex>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

Outcome gallery_impossibility() {
    Outcome o;
    const bool w1 = !oracle_nonsep_branching(gal("W1")).exists;
    const bool dt = !oracle_nonsep_tree(gal("DTILDE")).exists;
    const bool dh = !oracle_nonsep_tree(gal("DHAT")).exists;
    const auto t4 = oracle_hampaths_separating(gal("TR", 4), tr_v(4, 0), tr_v(4, 4));
    const bool tr = t4.all_separating && t4.target_unreachable_on_every_path.value_or(false);
    o.pass = w1 && dt && dh && tr;
    o.detail = "W1 no branching=" + std::to_string(w1) + ", DTILDE no tree=" + std::to_string(dt) +
               ", DHAT no tree=" + std::to_string(dh) + ", T4 " + std::to_string(t4.paths) +
               " hamiltonian paths all separating with v4 unreachable=" + std::to_string(tr);
    return o;
}

Outcome semicomplete_four() {
    Outcome o;
    std::set<std::string> seen;
    int classes = 0, impossible = 0, w2_like = 0;
    for (int code = 0; code < 729; ++code) {
        Digraph d(4);
        int c = code;
        for (Vertex u = 0; u < 4; ++u)
            for (Vertex v = u + 1; v < 4; ++v) {
                const int s = c % 3;
                c /= 3;
                if (s != 1) d.add_arc(u, v);
                if (s != 0) d.add_arc(v, u);
            }
        if (!is_strong(d) || !seen.insert(canonical_form(d)).second) continue;
        ++classes;
        const auto sd = sd_nonsep_branching(d);
        const auto orc = oracle_nonsep_branching(d, std::nullopt, {}, true);
        auto permitted = sd.possible ? sd.permitted_roots : std::vector<Vertex>{};
        std::sort(permitted.begin(), permitted.end());
        if (sd.possible != orc.exists || permitted != orc.feasible_roots) {
            o.pass = false;
            o.detail = "mismatch on " + to_string(d) + ": roots " + str(permitted) + " vs " + str(orc.feasible_roots);
            return o;
        }
        for (Vertex r : permitted) {
            const auto b = sd_nonsep_branching(d, r);
            if (!b.branching || !verify_branching_certificate(d, *b.branching)) {
                o.pass = false;
                o.detail = "root " + std::to_string(r) + " certificate failed on " + to_string(d);
                return o;
            }
        }
        impossible += !sd.possible;
        if (sd.in_degree_one.size() == 2) {
            ++w2_like;
            const Vertex a = sd.in_degree_one[0], b = sd.in_degree_one[1];
            const bool any = oracle_nonsep_out_tree(d, a, b).exists || oracle_nonsep_out_tree(d, b, a).exists;
            const bool is_w2 = find_isomorphism(gal("W2"), d).has_value();
            if (sd.is_w2 != is_w2 || any == is_w2 || sd.out_tree.has_value() == is_w2 ||
                (sd.out_tree && !verify_nonsep_out_tree(d, *sd.out_tree, sd.excluded))) {
                o.pass = false;
                o.detail = "out-tree exception mismatch on " + to_string(d);
                return o;
            }
        }
    }
    o.detail = std::to_string(classes) + " isomorphism classes, " + std::to_string(impossible) +
               " without a branching, " + std::to_string(w2_like) + " with two in-degree-one vertices; W2 has no out-tree";
    return o;
}

Outcome main_theorem() {
    Outcome o;
    Rng rng(2024);
    std::map<std::string, int> routes;
    int verified = 0, total = 0, two_initial = 0;
    for (Regime reg : {Regime::HighInDegree, Regime::OrientedInDegree3})
        for (int i = 0; i < 500; ++i) {
            const Digraph d = branching_instance(reg, i % 3, 12, 24, rng);
            ++total;
            try {
                const MainBranchingResult r = main_nonsep_branching(d);
                ++routes[r.trace.route];
                if (r.trace.route == "two-initial") two_initial += r.trace.initial_components == 2;
                verified += verify_branching_certificate(d, r.branching);
            } catch (const std::exception& e) {
                o.detail = std::string("failure: ") + e.what() + " ";
            }
        }
    o.pass = verified == total && two_initial > 0;
    std::ostringstream os;
    os << o.detail << verified << "/" << total << " certificates verified; routes";
    for (auto& [k, v] : routes) os << " " << k << "=" << v;
    os << "; claims checked on " << two_initial << " instances with t=2";
    o.detail = os.str();
    return o;
}

Outcome fourteen_vertices() {
    Outcome o;
    Rng rng(514);
    int trees = 0, safe = 0;
    std::map<std::string, int> routes;
    for (int i = 0; i < 200; ++i) {
        const Digraph d = tree_instance(14, rng, i % 2 == 0);
        try {
            const NonsepTreeResult r = nonsep_spanning_tree(d);
            ++routes[r.route];
            trees += verify_nonsep_tree(d, r.tree);
        } catch (const std::exception& e) {
            o.detail = std::string("failure: ") + e.what() + " ";
        }
    }
    int sampled = 0;
    while (sampled < 200) {
        const Digraph d = random_semicomplete(5 + sampled % 5, rng, (sampled % 4) * 0.1);
        if (!is_strong(d)) continue;
        ++sampled;
        try {
            safe += verify_safe_tree(d, safe_spanning_tree_semicomplete(d).tree).equal;
        } catch (const std::exception& e) {
            o.detail = std::string("failure: ") + e.what() + " ";
        }
    }
    o.pass = trees == 200 && safe == 200;
    std::ostringstream os;
    os << o.detail << trees << "/200 trees at n=14 (";
    for (const char* sep = ""; auto& [k, v] : routes) os << sep << k << "=" << v, sep = " ";
    os << "), " << safe << "/200 safe trees with equal reachability";
    o.detail = os.str();
    return o;
}

Outcome hamiltonian_oriented() {
    Outcome o;
    Rng rng(56);
    int ok = 0;
    std::map<std::string, int> routes;
    for (int i = 0; i < 100; ++i) {
        const int n = 9 + i % 4;
        const HamiltonianInstance inst =
            i % 2 ? hamiltonian_oriented_instance(n, rng) : hamiltonian_two_component_instance(n, rng);
        try {
            const HamTreeResult r = oriented_hamiltonian_nonsep_tree(inst.graph, inst.cycle);
            ++routes[to_string(r.route)];
            ok += verify_nonsep_tree(inst.graph, r.tree);
        } catch (const std::exception& e) {
            o.detail = std::string("failure: ") + e.what() + " ";
        }
    }
    int templates = 0;
    for (HamTreeRoute route : {HamTreeRoute::X2FourSkipArc, HamTreeRoute::X2FourBackwardChain,
                               HamTreeRoute::X2FourInsideForward, HamTreeRoute::X2FourInsideBackward,
                               HamTreeRoute::X2ThreeForward, HamTreeRoute::X2ThreeTriangle}) {
        const auto inst = template_instance(route, rng);
        if (!inst) {
            o.detail += "no instance for " + to_string(route) + " ";
            continue;
        }
        const HamTreeResult r = oriented_hamiltonian_nonsep_tree(inst->graph, inst->cycle);
        templates += r.route == route && verify_nonsep_tree(inst->graph, r.tree) && r.strong_part.disjoint(r.tree) &&
                     is_strong(inst->graph, r.strong_part);
    }
    o.pass = ok == 100 && templates == 6;
    std::ostringstream os;
    os << o.detail << ok << "/100 verified (";
    for (const char* sep = ""; auto& [k, v] : routes) os << sep << k << "=" << v, sep = " ";
    os << "), " << templates << "/6 template splits valid";
    o.detail = os.str();
    return o;
}

Outcome undirected_graphs() {
    Outcome o;
    Rng rng(7);
    int ok = 0;
    std::map<std::string, int> routes;
    for (int i = 0; i < 200; ++i) {
        const UndirectedGraph g = undirected_instance(8 + i % 9, rng);
        try {
            const PathTreePair p = edge_disjoint_hp_and_tree(g);
            ++routes[p.route];
            ok += verify_path_tree_pair(g, p);
        } catch (const std::exception& e) {
            o.detail = std::string("failure: ") + e.what() + " ";
        }
    }
    bool refused = false;
    try {
        edge_disjoint_hp_and_tree(prism_graph());
    } catch (const PreconditionError&) {
        refused = true;
    }
    o.pass = ok == 200 && refused;
    std::ostringstream os;
    os << o.detail << ok << "/200 verified (";
    for (const char* sep = ""; auto& [k, v] : routes) os << sep << k << "=" << v, sep = " ";
    os << "), prism refused=" << refused;
    o.detail = os.str();
    return o;
}

// Branchings valid and pairwise disjoint; success iff every brute-force
// (s,v) cut has at least k arcs.
bool edmonds_agrees(const Digraph& d, Vertex s, int k, std::string& why) {
    const auto arcs = ref::arcs_of(d);
    bool cuts_ok = true;
    for (Vertex v = 0; v < d.order(); ++v)
        if (v != s && ref::min_cut(d.order(), arcs, s, v) < k) cuts_ok = false;
    const EdmondsResult r = edmonds_branchings(d, s, k);
    if (r.ok() != cuts_ok) {
        why = "verdict differs on " + to_string(d) + " s=" + std::to_string(s) + " k=" + std::to_string(k);
        return false;
    }
    if (!r.ok()) return true;
    if (static_cast<int>(r.branchings.size()) != k) return why = "wrong count", false;
    ArcSubset used(d.size());
    for (const OutBranching& b : r.branchings) {
        const std::vector<ArcId> ids = b.arc_ids();
        if (b.root != s || !ref::out_branching(d.order(), arcs, std::vector<int>(ids.begin(), ids.end()), s))
            return why = "invalid branching on " + to_string(d), false;
        for (ArcId a : ids) {
            if (used.contains(a)) return why = "branchings share an arc on " + to_string(d), false;
            used.insert(a);
        }
    }
    return true;
}

Outcome edmonds() {
    Outcome o;
    std::int64_t cases = 0;
    std::string why;
    for (int n = 1; n <= 4; ++n)
        for (const Digraph& d : all_simple_digraphs(n))
            for (Vertex s = 0; s < n; ++s)
                for (int k = 1; k <= 3; ++k) {
                    ++cases;
                    if (!edmonds_agrees(d, s, k, why)) return {false, why};
                }
    Rng rng(77);
    for (int i = 0; i < 500; ++i) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Digraph d = random_digraph(n, 0.25 + 0.5 * (i % 10) / 10.0, rng);
        const Vertex s = static_cast<Vertex>(rng() % n);
        const int k = 1 + static_cast<int>(rng() % 3);
        ++cases;
        if (!edmonds_agrees(d, s, k, why)) return {false, why};
    }
    o.detail = std::to_string(cases) + " (digraph, root, k) cases agree with brute-force min cuts";
    return o;
}

Outcome block_oracle() {
    Outcome o;
    const GalleryGraph g = build(GalleryId::parse("NO2COL"));
    const BlockOracleResult r = oracle_two_strong_partition_blocks(contract_blocks(g.graph, g.blocks));
    o.pass = r.impossible && r.colourings_checked == 64;
    o.detail = "impossible=" + std::to_string(r.impossible) + " after " + std::to_string(r.colourings_checked) +
               " colourings of 6 special block arcs";
    return o;
}

Outcome conjecture_regression() {
    Outcome o;
    SearchOptions low;
    low.n = 8;
    low.min_n = 8;
    low.budget = 20000;
    low.threads = 4;
    const SearchReport a = conjecture_search(low);
    const std::string dhat = canonical_form(gal("DHAT"));
    const bool found = std::any_of(a.confirmed.begin(), a.confirmed.end(),
                                   [&](const Counterexample& c) { return c.canonical == dhat; });
    SearchOptions high;
    high.n = 9;
    high.min_n = 9;
    high.budget = 10000;
    high.threads = 4;
    const SearchReport b = conjecture_search(high);
    o.pass = found && b.clean() && b.oracle_budget_exceeded == 0;
    o.detail = "n>=8: " + std::to_string(a.examined) + " examined, " + std::to_string(a.confirmed.size()) +
               " confirmed, DHAT found=" + std::to_string(found) + "; n>=9: " + std::to_string(b.examined) +
               " examined of 10000 generated, " + std::to_string(b.confirmed.size()) + " counterexamples";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"gallery impossibility claims", gallery_impossibility},
        {"semicomplete branchings on 4 vertices", semicomplete_four},
        {"main branching theorem suite", main_theorem},
        {"spanning trees at n=14 and safe trees", fourteen_vertices},
        {"hamiltonian oriented trees and templates", hamiltonian_oriented},
        {"undirected path and tree pairs", undirected_graphs},
        {"arc-disjoint branchings vs min cuts", edmonds},
        {"two-strong-partition block oracle", block_oracle},
        {"counterexample search regression", conjecture_regression},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > kLimit[i + 1]) {
            o.pass = false;
            o.detail += " (over the time limit)";
        }
        failed += !o.pass;
        std::printf("%s %zu %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
