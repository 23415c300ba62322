#include <gtest/gtest.h>

#include <map>

#include "nonsep/connectivity.hpp"
#include "nonsep/errors.hpp"
#include "nonsep/gallery.hpp"
#include "nonsep/generators.hpp"
#include "nonsep/hamiltonian.hpp"
#include "nonsep/oracles.hpp"
#include "nonsep/tree.hpp"
#include "support/oracles.hpp"

using namespace nonsep;

namespace {

ref::ArcList pairs_of(const Digraph& d, const ArcSubset& s) {
    ref::ArcList out;
    for (ArcId a : s.members()) out.emplace_back(d.arc(a).tail, d.arc(a).head);
    return out;
}

std::vector<char> residual_mask(const Digraph& d, const ArcSubset& s) {
    std::vector<char> keep(d.size(), 1);
    for (ArcId a : s.members()) keep[a] = 0;
    return keep;
}

bool ref_nonsep_tree(const Digraph& d, const ArcSubset& t) {
    return ref::spanning_tree(d.order(), pairs_of(d, t)) && ref::strong(d.order(), ref::arcs_of(d), residual_mask(d, t));
}

bool ref_safe_tree(const Digraph& d, const ArcSubset& t) {
    const auto arcs = ref::arcs_of(d);
    return ref::spanning_tree(d.order(), pairs_of(d, t)) &&
           ref::reach(d.order(), arcs) == ref::reach(d.order(), arcs, residual_mask(d, t));
}

Digraph transitive(int n) {
    Digraph d(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) d.add_arc(u, v);
    return d;
}

}  // namespace

TEST(SafeTree, StrongTournamentAvoidsAHamiltonianCycle) {
    const Digraph t = rotational_tournament(5);
    const SafeTreeResult r = safe_spanning_tree_semicomplete(t);
    EXPECT_EQ(r.kase, SafeTreeCase::Strong);
    EXPECT_TRUE(ref_safe_tree(t, r.tree));
    EXPECT_TRUE(verify_safe_tree(t, r.tree).equal);
    bool avoids = false;
    for (const auto& c : ref::hamiltonian_cycles(5, ref::arcs_of(t))) {
        bool disjoint = true;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const ArcId a = *t.find_arc(c[i], c[(i + 1) % c.size()]);
            if (r.tree.contains(a)) disjoint = false;
        }
        avoids = avoids || disjoint;
    }
    EXPECT_TRUE(avoids);
}

TEST(SafeTree, TransitiveTournament) {
    const Digraph t = transitive(5);
    const SafeTreeResult r = safe_spanning_tree_semicomplete(t);
    EXPECT_EQ(r.kase, SafeTreeCase::ManyComponents);
    EXPECT_TRUE(ref_safe_tree(t, r.tree));
}

TEST(SafeTree, SingletonLargeSingleton) {
    Rng rng(51);
    for (int it = 0; it < 20; ++it) {
        const Digraph d = layered_semicomplete({1, 3 + it % 4, 1}, rng, it % 2 ? 0.0 : 0.3);
        const SafeTreeResult r = safe_spanning_tree_semicomplete(d);
        EXPECT_EQ(r.kase, SafeTreeCase::ThreeMiddleLarge);
        EXPECT_TRUE(ref_safe_tree(d, r.tree));
    }
}

TEST(SafeTreeProperty, EveryComponentLayout) {
    Rng rng(52);
    std::map<SafeTreeCase, int> cases;
    for (int it = 0; it < 3000; ++it) {
        const int n = 5 + static_cast<int>(rng() % 5);
        std::vector<int> sizes;
        for (int left = n; left > 0;) {
            int s = 1 + static_cast<int>(rng() % left);
            if (rng() & 1) s = std::min(s, 1 + static_cast<int>(rng() % 3));
            sizes.push_back(s);
            left -= s;
        }
        const Digraph d = layered_semicomplete(sizes, rng, rng() & 1 ? 0.0 : 0.3);
        const SafeTreeResult r = safe_spanning_tree_semicomplete(d);
        ++cases[r.kase];
        ASSERT_TRUE(ref_safe_tree(d, r.tree)) << to_string(d);
    }
    for (SafeTreeCase c : {SafeTreeCase::Strong, SafeTreeCase::TwoLarge, SafeTreeCase::ManyComponents,
                           SafeTreeCase::ThreeOuterLarge, SafeTreeCase::ThreeMiddleLarge, SafeTreeCase::TwoComponents})
        EXPECT_GT(cases[c], 0) << to_string(c);
}

TEST(SafeTree, RefusesSmallOrNonSemicomplete) {
    EXPECT_THROW(safe_spanning_tree_semicomplete(rotational_tournament(3)), PreconditionError);
    EXPECT_THROW(safe_spanning_tree_semicomplete(build(GalleryId::parse("DHAT")).graph), PreconditionError);
}

TEST(Verify, SafeImpliesNonsepOnStrong) {
    const Digraph t = rotational_tournament(7);
    const SafeTreeResult r = safe_spanning_tree_semicomplete(t);
    EXPECT_TRUE(verify_safe_tree(t, r.tree).equal);
    EXPECT_TRUE(verify_nonsep_tree(t, r.tree));
}

TEST(Verify, DhatHasNoNonseparatingTree) {
    const Digraph d = build(GalleryId::parse("DHAT")).graph;
    const auto arcs = ref::arcs_of(d);
    const int m = d.size();
    int trees = 0;
    for (int mask = 0; mask < (1 << m); ++mask) {
        if (__builtin_popcount(mask) != 7) continue;
        ArcSubset s(m);
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) s.insert(i);
        if (!ref::spanning_tree(8, pairs_of(d, s))) continue;
        ++trees;
        EXPECT_FALSE(verify_nonsep_tree(d, s));
    }
    EXPECT_GT(trees, 0);
}

TEST(Verify, StarReportOnDenseDigraph) {
    const Digraph t = rotational_tournament(7);
    ArcSubset star(t.size());
    for (ArcId a : t.out_arcs(0)) star.insert(a);
    for (ArcId a : t.in_arcs(0)) star.insert(a);
    const SafetyReport rep = verify_safe_tree(t, star);
    EXPECT_EQ(rep.reach_d.size(), 7u);
    EXPECT_EQ(rep.equal, ref::reach(7, ref::arcs_of(t)) == rep.reach_residual);
}

TEST(TreeExtension, OneAndTwoUncoveredVertices) {
    Rng rng(53);
    int one = 0, two = 0;
    for (int it = 0; it < 40; ++it) {
        const Digraph d = tree_instance(14, rng, true);
        const NonsepTreeResult full = nonsep_spanning_tree(d);
        // Leaves of the tree, by underlying degree.
        std::vector<int> deg(d.order(), 0);
        for (ArcId a : full.tree.members()) ++deg[d.arc(a).tail], ++deg[d.arc(a).head];
        std::vector<Vertex> leaves;
        for (Vertex v = 0; v < d.order(); ++v)
            if (deg[v] == 1) leaves.push_back(v);
        auto drop = [&](std::vector<Vertex> xs) {
            ArcSubset t = full.tree;
            for (ArcId a : full.tree.members())
                for (Vertex x : xs)
                    if (d.arc(a).tail == x || d.arc(a).head == x) t.erase(a);
            return t;
        };
        const ArcSubset t1 = drop({leaves[0]});
        EXPECT_TRUE(ref_nonsep_tree(d, tree_extension(d, t1)));
        ++one;
        for (std::size_t i = 0; i < leaves.size(); ++i)
            for (std::size_t j = i + 1; j < leaves.size(); ++j) {
                if (!d.adjacent(leaves[i], leaves[j])) continue;
                const ArcSubset t2 = drop({leaves[i], leaves[j]});
                if (t2.count() != d.order() - 3) continue;
                EXPECT_TRUE(ref_nonsep_tree(d, tree_extension(d, t2)));
                ++two;
                i = j = leaves.size();
            }
    }
    EXPECT_GT(one, 0);
    EXPECT_GT(two, 0);
}

TEST(TreeExtension, HypothesesAloneDoNotSuffice) {
    // Every stated condition holds, yet DHAT has no non-separating tree.
    const Digraph d = build(GalleryId::parse("DHAT")).graph;
    const ArcSubset p = path_arcs(d, {0, 1, 2, 3, 4, 5, 6});
    const auto arcs = ref::arcs_of(d);
    std::vector<char> keep(arcs.size(), 1);
    for (ArcId a : p.members()) keep[a] = 0;
    ASSERT_TRUE(ref::strong(8, arcs, keep));
    EXPECT_THROW(tree_extension(d, p), NotGuaranteedError);
    EXPECT_FALSE(oracle_nonsep_tree(d).exists);
}

TEST(TreeExtension, RefusesSeparatingPartialTree) {
    const Digraph d = build(GalleryId::parse("DHAT")).graph;
    // Path 0..5 plus 0->6 uses both out-arcs of vertex 0.
    ArcSubset t = path_arcs(d, {0, 1, 2, 3, 4, 5});
    t.insert(*d.find_arc(0, 6));
    EXPECT_THROW(tree_extension(d, t), PreconditionError);
}

TEST(NonsepTree, DtildeIsNotGuaranteed) {
    const Digraph d = build(GalleryId::parse("DTILDE")).graph;
    EXPECT_THROW(nonsep_spanning_tree(d), NotGuaranteedError);
    EXPECT_FALSE(oracle_nonsep_tree(d).exists);
}

TEST(NonsepTree, SemicompleteReducesToSafeTree) {
    Rng rng(54);
    Digraph d(0);
    do d = random_semicomplete(8, rng); while (!is_k_arc_strong(d, 2));
    const NonsepTreeResult r = nonsep_spanning_tree(d);
    EXPECT_EQ(r.route, "semicomplete");
    EXPECT_TRUE(ref_nonsep_tree(d, r.tree));
}

TEST(NonsepTreeProperty, FourteenVertices) {
    Rng rng(55);
    for (int it = 0; it < 40; ++it) {
        const Digraph d = tree_instance(14, rng, it % 2 == 0);
        const NonsepTreeResult r = nonsep_spanning_tree(d);
        EXPECT_TRUE(ref_nonsep_tree(d, r.tree));
        EXPECT_NE(r.route, "search");
    }
}

TEST(NonsepTreeProperty, SeedPairsOnlyEndgames) {
    Rng rng(56);
    TreeOptions opt;
    opt.seed_pairs_only = true;
    opt.verify_steps = true;
    std::map<int, int> endgames;
    for (int it = 0; it < 60; ++it) {
        const Digraph d = tree_instance(14, rng, true);
        const NonsepTreeResult r = nonsep_spanning_tree(d, opt);
        EXPECT_TRUE(ref_nonsep_tree(d, r.tree));
        ++endgames[r.endgame_size];
    }
    EXPECT_GT(endgames.size(), 1u);
}

TEST(HamiltonianTree, HandBuiltTemplates) {
    Rng rng(57);
    for (HamTreeRoute route : {HamTreeRoute::X2FourSkipArc, HamTreeRoute::X2ThreeTriangle}) {
        const auto inst = template_instance(route, rng);
        ASSERT_TRUE(inst) << to_string(route);
        const HamTreeResult r = oriented_hamiltonian_nonsep_tree(inst->graph, inst->cycle);
        EXPECT_EQ(r.route, route);
        EXPECT_TRUE(ref_nonsep_tree(inst->graph, r.tree));
        EXPECT_TRUE(r.strong_part.disjoint(r.tree));
        EXPECT_TRUE(ref::strong(9, pairs_of(inst->graph, r.strong_part)));
    }
}

TEST(HamiltonianTreeProperty, RandomNineVertexInstances) {
    Rng rng(58);
    for (int it = 0; it < 30; ++it) {
        const HamiltonianInstance inst =
            it % 2 ? hamiltonian_oriented_instance(9, rng) : hamiltonian_two_component_instance(9, rng);
        const HamTreeResult r = oriented_hamiltonian_nonsep_tree(inst.graph, inst.cycle);
        EXPECT_TRUE(ref_nonsep_tree(inst.graph, r.tree));
    }
}

TEST(HamiltonianTree, RefusesBadInput) {
    const Digraph d = build(GalleryId::parse("DHAT")).graph;
    EXPECT_THROW(oriented_hamiltonian_nonsep_tree(d, {0, 1, 2, 3, 4, 5, 6, 7}), PreconditionError);
}
