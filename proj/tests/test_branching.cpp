#include <algorithm>
#include <gtest/gtest.h>

#include <map>

#include "nonsep/branching.hpp"
#include "nonsep/errors.hpp"
#include "nonsep/gallery.hpp"
#include "nonsep/generators.hpp"
#include "nonsep/hamiltonian.hpp"
#include "nonsep/oracles.hpp"
#include "support/oracles.hpp"

using namespace nonsep;

namespace {

// Independent re-check of a certificate: branching shape plus strong residual.
bool ref_check(const Digraph& d, const OutBranching& b) {
    const auto arcs = ref::arcs_of(d);
    const std::vector<ArcId> ids = b.arc_ids();
    if (!ref::out_branching(d.order(), arcs, std::vector<int>(ids.begin(), ids.end()), b.root)) return false;
    std::vector<char> keep(arcs.size(), 1);
    for (ArcId a : ids) keep[a] = 0;
    return ref::strong(d.order(), arcs, keep);
}

}  // namespace

TEST(Semicomplete, W1IsImpossible) {
    const Digraph w1 = build(GalleryId::parse("W1")).graph;
    const auto r = sd_nonsep_branching(w1);
    EXPECT_EQ(r.kase, SemicompleteCase::W1);
    EXPECT_FALSE(r.possible);
    EXPECT_FALSE(r.branching);
}

TEST(Semicomplete, W2HasNoOutTree) {
    const Digraph w2 = build(GalleryId::parse("W2")).graph;
    const auto r = sd_nonsep_branching(w2);
    EXPECT_FALSE(r.possible);
    EXPECT_TRUE(r.is_w2);
    EXPECT_FALSE(r.out_tree);
    ASSERT_EQ(r.in_degree_one.size(), 2u);
    for (Vertex root : r.in_degree_one)
        for (Vertex ex : r.in_degree_one)
            if (root != ex) EXPECT_FALSE(oracle_nonsep_out_tree(w2, root, ex).exists);
}

TEST(Semicomplete, S4FromCMatchesReferenceBranching) {
    const Digraph s4 = build(GalleryId::parse("S4")).graph;
    const auto r = sd_nonsep_branching(s4, 2);
    ASSERT_TRUE(r.branching);
    ref::ArcList got;
    for (ArcId a : r.branching->arc_ids()) got.emplace_back(s4.arc(a).tail, s4.arc(a).head);
    // c->b, b->d, d->a
    EXPECT_TRUE(ref::same_arc_multiset(got, {{2, 1}, {1, 3}, {3, 0}}));
    EXPECT_TRUE(ref_check(s4, *r.branching));
}

TEST(Semicomplete, S4EveryRoot) {
    const Digraph s4 = build(GalleryId::parse("S4")).graph;
    for (Vertex r = 0; r < 4; ++r) {
        const auto res = sd_nonsep_branching(s4, r);
        ASSERT_TRUE(res.branching) << r;
        EXPECT_EQ(res.branching->root, r);
        EXPECT_TRUE(ref_check(s4, *res.branching));
        EXPECT_TRUE(ref_check(s4, sdmulti_nonsep_branching(s4, r)));
    }
}

TEST(Semicomplete, RootOutsidePermittedSetIsRefused) {
    Rng rng(41);
    std::map<SemicompleteCase, int> seen;
    for (int it = 0; it < 6000; ++it) {
        const Digraph d = random_semicomplete(4 + static_cast<int>(rng() % 4), rng);
        if (!is_strong(d)) continue;
        const auto r = sd_nonsep_branching(d);
        ++seen[r.kase];
        if (r.kase == SemicompleteCase::TwoInDegreeOne) {
            // Impossible for every root: reported, never thrown.
            for (Vertex v = 0; v < d.order(); ++v) EXPECT_FALSE(sd_nonsep_branching(d, v).possible);
            if (r.out_tree) EXPECT_TRUE(verify_nonsep_out_tree(d, *r.out_tree, r.excluded));
            continue;
        }
        if (!r.possible) continue;
        for (Vertex v = 0; v < d.order(); ++v) {
            const bool permitted =
                std::find(r.permitted_roots.begin(), r.permitted_roots.end(), v) != r.permitted_roots.end();
            if (permitted)
                EXPECT_TRUE(ref_check(d, *sd_nonsep_branching(d, v).branching));
            else
                EXPECT_THROW(sd_nonsep_branching(d, v), PreconditionError);
        }
    }
    EXPECT_GT(seen[SemicompleteCase::TwoInDegreeOne], 0);
    EXPECT_GT(seen[SemicompleteCase::OneInDegreeOne], 0);
    EXPECT_GT(seen[SemicompleteCase::NiceDecomposition], 0);
}

TEST(Multigraph, S42RootDAgainstOracle) {
    const Digraph s42 = build(GalleryId::parse("S4_2")).graph;
    ASSERT_EQ(s42.size(), 9);
    EXPECT_TRUE(oracle_nonsep_branching(s42, 3).exists);
    EXPECT_TRUE(ref_check(s42, sdmulti_nonsep_branching(s42, 3)));
}

TEST(Multigraph, CompleteOnThreeAnyRoot) {
    Digraph k3(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
    for (Vertex r = 0; r < 3; ++r) EXPECT_TRUE(ref_check(k3, sdmulti_nonsep_branching(k3, r)));
}

TEST(Multigraph, RandomTwoArcStrongWithParallels) {
    Rng rng(42);
    int checked = 0;
    while (checked < 60) {
        Digraph d = random_semicomplete(4 + static_cast<int>(rng() % 4), rng, 0.3);
        const int extra = static_cast<int>(rng() % 4);
        for (int i = 0; i < extra; ++i) {
            const Arc a = d.arc(static_cast<ArcId>(rng() % d.size()));
            d.add_arc(a.tail, a.head);
        }
        if (!is_k_arc_strong(d, 2)) continue;
        ++checked;
        for (Vertex r = 0; r < d.order(); ++r) EXPECT_TRUE(ref_check(d, sdmulti_nonsep_branching(d, r)));
    }
}

TEST(CaseA, CoBipartiteSevenAndSeven) {
    Rng rng(43);
    int built = 0;
    for (int it = 0; it < 200 && built < 15; ++it) {
        const Digraph d = co_bipartite_family(7, 7, rng, it % 2 == 0);
        if (!is_k_arc_strong(d, 2) || min_in_degree(d) < 3) continue;
        const auto part = find_case_a_partition(d);
        if (!part) continue;
        ++built;
        EXPECT_TRUE(ref_check(d, case_a_nonsep_branching(d, *part)));
    }
    EXPECT_GT(built, 0);
}

TEST(Main, SemicompleteFastPath) {
    Rng rng(44);
    Digraph d(0);
    do d = random_semicomplete(12, rng, 0.5); while (!is_k_arc_strong(d, 2) || min_in_degree(d) < 5);
    const auto r = main_nonsep_branching(d);
    EXPECT_EQ(r.trace.route, "semicomplete");
    EXPECT_TRUE(ref_check(d, r.branching));
}

TEST(Main, CoBipartiteUsesCaseA) {
    Rng rng(45);
    int seen = 0;
    for (int it = 0; it < 300 && seen < 5; ++it) {
        const Digraph d = branching_instance(Regime::HighInDegree, 2, 12, 18, rng);
        const auto r = main_nonsep_branching(d);
        EXPECT_TRUE(ref_check(d, r.branching));
        seen += r.trace.route == "case-A";
    }
    EXPECT_GT(seen, 0);
}

TEST(Main, OrientedTwoInitialComponents) {
    Rng rng(46);
    int seen = 0;
    for (int it = 0; it < 100 && seen < 5; ++it) {
        const Digraph d = branching_instance(Regime::OrientedInDegree3, 1, 12, 24, rng);
        const auto r = main_nonsep_branching(d);
        EXPECT_TRUE(ref_check(d, r.branching));
        if (r.trace.route != "two-initial") continue;
        ++seen;
        EXPECT_EQ(r.trace.initial_components, 2);
        EXPECT_GE(r.trace.r1.size(), 5u);
        EXPECT_GE(r.trace.r2.size(), 5u);
        std::map<char, int> claims;
        for (const std::string& c : r.trace.claims_checked) ++claims[c[0]];
        for (char k : {'A', 'B', 'C', 'D', 'E'}) EXPECT_GT(claims[k], 0) << k;
    }
    EXPECT_GT(seen, 0);
}

TEST(Main, RefusesInvalidInput) {
    EXPECT_THROW(main_nonsep_branching(build(GalleryId::parse("DHAT")).graph), PreconditionError);
    Digraph c(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    EXPECT_THROW(main_nonsep_branching(c), PreconditionError);
}

TEST(Certificate, Examples) {
    const Digraph d = build(GalleryId::parse("DHAT")).graph;
    const ArcSubset path = path_arcs(d, {0, 1, 2, 3, 4, 5, 6, 7});
    OutBranching b = OutBranching::empty(8, 0);
    for (ArcId a : path.members()) b.attach(d, a);
    EXPECT_TRUE(is_out_branching(d, b));
    EXPECT_FALSE(verify_branching_certificate(d, b));

    const Digraph s4 = build(GalleryId::parse("S4")).graph;
    OutBranching good = sd_nonsep_branching(s4, 2).branching.value();
    EXPECT_TRUE(verify_branching_certificate(s4, good));
    OutBranching tampered = good;
    const Vertex h = s4.arc(tampered.parent[1]).head;
    tampered.parent[h] = (tampered.parent[h] + 1) % s4.size();
    EXPECT_FALSE(verify_branching_certificate(s4, tampered));
}

TEST(MainProperty, CertificatesVerifyIndependently) {
    Rng rng(47);
    for (int it = 0; it < 60; ++it) {
        const Regime reg = it % 2 ? Regime::HighInDegree : Regime::OrientedInDegree3;
        const Digraph d = branching_instance(reg, it % 3, 12, 22, rng);
        const auto r = main_nonsep_branching(d);
        EXPECT_TRUE(ref_check(d, r.branching));
    }
}
