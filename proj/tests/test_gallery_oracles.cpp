#include <gtest/gtest.h>

#include "nonsep/connectivity.hpp"
#include "nonsep/errors.hpp"
#include "nonsep/gallery.hpp"
#include "nonsep/generators.hpp"
#include "nonsep/hamiltonian.hpp"
#include "nonsep/oracles.hpp"
#include "support/oracles.hpp"

using namespace nonsep;

namespace {

Digraph gal(const std::string& name, std::optional<int> r = std::nullopt) { return build(GalleryId::parse(name, r)).graph; }

// Reference arc lists, vertices numbered in label order.
const ref::ArcList kW1 = {{0, 1}, {0, 2}, {3, 0}, {3, 1}, {1, 2}, {2, 3}, {1, 3}};
// r1 t1 r2 t2
const ref::ArcList kW2 = {{0, 3}, {2, 1}, {0, 1}, {1, 3}, {3, 2}, {2, 0}};
// v0 v1 v2 v3
const ref::ArcList kS4 = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {2, 0}, {1, 3}, {3, 1}};
// a b c x y z
const ref::ArcList kDtilde = {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 4}, {4, 2},
                              {2, 3}, {3, 1}, {1, 5}, {5, 0}, {2, 0}, {5, 3}};
// v1..v8
const ref::ArcList kDhat = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0},
                            {0, 6}, {6, 4}, {4, 2}, {2, 0}, {1, 7}, {7, 5}, {5, 3}, {3, 1}};

// Independent block-level enumeration: colour every special pair 1 or 2,
// shared pairs serve both colours.
bool ref_block_partition_exists(const BlockModel& m) {
    const int s = static_cast<int>(m.special.size());
    for (int mask = 0; mask < (1 << s); ++mask) {
        ref::ArcList c1(m.shared.begin(), m.shared.end()), c2 = c1;
        for (int i = 0; i < s; ++i) (mask >> i & 1 ? c2 : c1).push_back(m.special[i]);
        if (ref::strong(m.blocks, c1) && ref::strong(m.blocks, c2)) return true;
    }
    return false;
}

}  // namespace

TEST(Gallery, MatchesReferenceArcLists) {
    EXPECT_TRUE(ref::same_arc_multiset(ref::arcs_of(gal("W1")), kW1));
    EXPECT_TRUE(ref::isomorphic(4, ref::arcs_of(gal("W2")), kW2));
    EXPECT_TRUE(ref::isomorphic(4, ref::arcs_of(gal("S4")), kS4));
    EXPECT_TRUE(ref::same_arc_multiset(ref::arcs_of(gal("DTILDE")), kDtilde));
    EXPECT_TRUE(ref::same_arc_multiset(ref::arcs_of(gal("DHAT")), kDhat));
}

TEST(Gallery, S4VariantsAddParallelArcs) {
    EXPECT_EQ(gal("S4").size(), 8);
    EXPECT_EQ(gal("S4_1").size(), 9);
    EXPECT_EQ(gal("S4_2").size(), 9);
    EXPECT_EQ(gal("S4_3").size(), 10);
    for (const char* v : {"S4_1", "S4_2", "S4_3"}) {
        const Digraph d = gal(v);
        EXPECT_FALSE(d.is_simple());
        EXPECT_TRUE(is_k_arc_strong(d, 2));
    }
}

TEST(Gallery, W1Degrees) {
    const Digraph w1 = gal("W1");
    EXPECT_EQ(w1.order(), 4);
    EXPECT_EQ(w1.size(), 7);
    int ones = 0;
    for (Vertex v = 0; v < 4; ++v) ones += w1.in_degree(v) == 1;
    EXPECT_EQ(ones, 1);
    EXPECT_EQ(w1.in_degree(0), 1);
}

TEST(Gallery, DhatIsTwoRegular) {
    const Digraph d = gal("DHAT");
    EXPECT_EQ(d.order(), 8);
    EXPECT_EQ(d.size(), 16);
    for (Vertex v = 0; v < 8; ++v) {
        EXPECT_EQ(d.in_degree(v), 2);
        EXPECT_EQ(d.out_degree(v), 2);
    }
    EXPECT_EQ(ref::arc_connectivity(8, kDhat), 2);
    EXPECT_EQ(ref::independence(8, kDhat), 2);
}

TEST(Gallery, TournamentTr) {
    for (int r : {2, 3, 4, 5}) {
        const Digraph t = gal("TR", r);
        EXPECT_EQ(t.order(), 2 * r + 4);
        EXPECT_TRUE(is_semicomplete(t));
        EXPECT_TRUE(is_oriented(t));
        EXPECT_EQ(ref::arc_connectivity(t.order(), ref::arcs_of(t)), 2);
    }
    EXPECT_THROW(gal("TR", 1), PreconditionError);
}

TEST(Gallery, DrJoinsTwoCopies) {
    const GalleryGraph g = build(GalleryId::parse("DR", 3));
    EXPECT_EQ(g.graph.order(), 20);
    EXPECT_EQ(ref::independence(20, ref::arcs_of(g.graph)), 2);
    EXPECT_EQ(ref::arc_connectivity(20, ref::arcs_of(g.graph)), 2);
}

TEST(Gallery, UnknownName) { EXPECT_THROW(GalleryId::parse("K7"), PreconditionError); }

TEST(Oracle, BranchingExamples) {
    EXPECT_FALSE(oracle_nonsep_branching(gal("W1")).exists);
    const Digraph s4 = gal("S4");
    const auto all = oracle_nonsep_branching(s4, std::nullopt, {}, true);
    EXPECT_EQ(all.feasible_roots, (std::vector<Vertex>{0, 1, 2, 3}));
    Digraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
    const auto r = oracle_nonsep_branching(c3);
    EXPECT_FALSE(r.exists);
    EXPECT_TRUE(r.transcript.verdict);
}

TEST(Oracle, TreeExamples) {
    EXPECT_FALSE(oracle_nonsep_tree(gal("DTILDE")).exists);
    EXPECT_FALSE(oracle_nonsep_tree(gal("DHAT")).exists);
    Digraph k4(4);
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = 0; v < 4; ++v)
            if (u != v) k4.add_arc(u, v);
    const auto t = oracle_nonsep_tree(k4);
    ASSERT_TRUE(t.exists);
    const ArcSubset w = *t.witness;
    std::vector<char> keep(k4.size(), 1);
    ref::ArcList tree;
    for (ArcId a : w.members()) keep[a] = 0, tree.emplace_back(k4.arc(a).tail, k4.arc(a).head);
    EXPECT_TRUE(ref::spanning_tree(4, tree));
    EXPECT_TRUE(ref::strong(4, ref::arcs_of(k4), keep));
}

TEST(Oracle, TranscriptIsReproducible) {
    const auto a = oracle_nonsep_tree(gal("DHAT"));
    const auto b = oracle_nonsep_tree(gal("DHAT"));
    EXPECT_EQ(a.transcript, b.transcript);
    EXPECT_GT(a.transcript.nodes, 0);
}

TEST(Oracle, BoundExceeded) {
    EXPECT_THROW(oracle_nonsep_tree(gal("TR", 6), OracleLimits{12, -1}), BoundExceededError);
    EXPECT_THROW(oracle_nonsep_tree(rotational_tournament(11), OracleLimits{12, 10}), BoundExceededError);
}

TEST(Oracle, HamiltonianPathsOfT4) {
    const Digraph t = gal("TR", 4);
    const auto r = oracle_hampaths_separating(t, tr_v(4, 0), tr_v(4, 4));
    EXPECT_TRUE(r.all_separating);
    ASSERT_TRUE(r.target_unreachable_on_every_path);
    EXPECT_TRUE(*r.target_unreachable_on_every_path);
    EXPECT_GT(r.paths, 0);
}

TEST(Oracle, HamiltonianPathsOfDhatAndCycle) {
    const auto r = oracle_hampaths_separating(gal("DHAT"));
    EXPECT_TRUE(r.all_separating);
    EXPECT_EQ(r.paths, r.separating);
    Digraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const auto c = oracle_hampaths_separating(c4, 0);
    EXPECT_EQ(c.paths, 1);
    EXPECT_TRUE(c.all_separating);
}

TEST(Oracle, OutTreeOfW2) {
    const Digraph w2 = gal("W2");
    int checked = 0;
    for (Vertex r = 0; r < 4; ++r)
        for (Vertex x = 0; x < 4; ++x)
            if (r != x && w2.in_degree(r) == 1 && w2.in_degree(x) == 1) {
                EXPECT_FALSE(oracle_nonsep_out_tree(w2, r, x).exists);
                ++checked;
            }
    EXPECT_EQ(checked, 2);
}

TEST(BlockOracle, No2colIsImpossible) {
    const GalleryGraph g = build(GalleryId::parse("NO2COL"));
    const BlockModel m = contract_blocks(g.graph, g.blocks);
    EXPECT_EQ(m.blocks, 4);
    EXPECT_EQ(m.special.size(), 6u);
    const auto r = oracle_two_strong_partition_blocks(m);
    EXPECT_TRUE(r.impossible);
    EXPECT_EQ(r.colourings_checked, 64);
    EXPECT_FALSE(ref_block_partition_exists(m));
}

TEST(BlockOracle, RelaxedFamilyAgreesWithEnumeration) {
    const GalleryGraph g = build(GalleryId::parse("NO2COL"));
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 2}, {2, 0}, {1, 3}, {0, 1}}) {
        Digraph d = g.graph;
        d.add_arc(a * 5 + 1, b * 5 + 2);
        const BlockModel m = contract_blocks(d, g.blocks);
        const auto r = oracle_two_strong_partition_blocks(m);
        EXPECT_EQ(!r.impossible, ref_block_partition_exists(m));
        EXPECT_EQ(r.colouring.has_value(), !r.impossible);
    }
}

TEST(BlockOracle, AllSharedIsPossible) {
    BlockModel m;
    m.blocks = 4;
    m.shared = {{0, 2}, {2, 1}, {1, 3}, {3, 0}, {0, 1}, {2, 3}, {1, 0}, {3, 2}};
    EXPECT_FALSE(oracle_two_strong_partition_blocks(m).impossible);
}

TEST(BlockOracle, EveryRootOfNo2colHasABranching) {
    const Digraph d = gal("NO2COL");
    for (Vertex r : {0, 6, 12, 18}) {
        const auto res = oracle_nonsep_branching(d, r, OracleLimits{20, 20'000'000});
        ASSERT_TRUE(res.exists) << r;
        std::vector<char> keep(d.size(), 1);
        std::vector<int> chosen;
        for (ArcId a : res.witness->arc_ids()) keep[a] = 0, chosen.push_back(a);
        EXPECT_TRUE(ref::out_branching(20, ref::arcs_of(d), chosen, r));
        EXPECT_TRUE(ref::strong(20, ref::arcs_of(d), keep));
    }
}

TEST(OracleProperty, BranchingWitnessesVerifyIndependently) {
    Rng rng(71);
    for (int it = 0; it < 150; ++it) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const Digraph d = random_digraph(n, 0.6, rng);
        const auto arcs = ref::arcs_of(d);
        const auto r = oracle_nonsep_branching(d);
        // Brute force over all arc subsets of size n-1.
        bool exists = false;
        const int m = d.size();
        for (int mask = 0; mask < (1 << m) && !exists; ++mask) {
            if (__builtin_popcount(mask) != n - 1) continue;
            std::vector<int> chosen;
            std::vector<char> keep(m, 1);
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) chosen.push_back(i), keep[i] = 0;
            if (!ref::strong(n, arcs, keep)) continue;
            for (int root = 0; root < n && !exists; ++root) exists = ref::out_branching(n, arcs, chosen, root);
        }
        EXPECT_EQ(r.exists, exists) << to_string(d);
    }
}
