#include <gtest/gtest.h>

#include "nonsep/digraph.hpp"
#include "nonsep/errors.hpp"
#include "nonsep/gallery.hpp"
#include "nonsep/generators.hpp"
#include "support/oracles.hpp"

using namespace nonsep;

namespace {

Digraph dtilde() { return build(GalleryId::parse("DTILDE")).graph; }

}  // namespace

TEST(Digraph, ArcBookkeeping) {
    Digraph d(3);
    EXPECT_EQ(d.add_arc(0, 1), 0);
    EXPECT_EQ(d.add_arc(0, 1), 1);
    EXPECT_EQ(d.add_arc(2, 0), 2);
    EXPECT_EQ(d.multiplicity(0, 1), 2);
    EXPECT_FALSE(d.is_simple());
    EXPECT_EQ(*d.find_arc(0, 1), 0);
    EXPECT_FALSE(d.find_arc(1, 0));
    EXPECT_EQ(d.out_degree(0), 2);
    EXPECT_EQ(d.in_degree(0), 1);
    EXPECT_THROW(d.add_arc(1, 1), PreconditionError);
    EXPECT_THROW(d.add_arc(0, 3), PreconditionError);
}

TEST(Digraph, CutDegreesOfDtildeTriple) {
    // a b c are vertices 0 1 2; count crossing arcs from the reference list.
    const ref::ArcList fig = {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 4}, {4, 2},
                              {2, 3}, {3, 1}, {1, 5}, {5, 0}, {2, 0}, {5, 3}};
    int out = 0, in = 0;
    for (auto [u, v] : fig) {
        out += u < 3 && v >= 3;
        in += u >= 3 && v < 3;
    }
    const std::vector<Vertex> x = {0, 1, 2};
    EXPECT_EQ(degrees(dtilde(), x), (CutDegrees{out, in}));
    EXPECT_EQ(degrees(dtilde(), x), (CutDegrees{3, 3}));
}

TEST(Digraph, CutDegreesSmall) {
    Digraph iso(3, {{0, 1}});
    const std::vector<Vertex> two = {2};
    EXPECT_EQ(degrees(iso, two), (CutDegrees{0, 0}));
    Digraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
    const std::vector<Vertex> zero = {0};
    EXPECT_EQ(degrees(c3, zero), (CutDegrees{1, 1}));
    const std::vector<Vertex> all = {0, 1, 2};
    EXPECT_THROW(degrees(c3, all), PreconditionError);
}

TEST(Digraph, IndependenceExamples) {
    EXPECT_EQ(independence_number(build(GalleryId::parse("DHAT")).graph), 2);
    Digraph k3(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
    EXPECT_EQ(independence_number(k3), 1);
    EXPECT_TRUE(alpha_at_most_two(k3).holds);
    Digraph empty(3);
    EXPECT_EQ(independence_number(empty), 3);
    const auto w = alpha_at_most_two(empty);
    EXPECT_FALSE(w.holds);
    ASSERT_TRUE(w.witness);
    EXPECT_EQ(*w.witness, (std::array<Vertex, 3>{0, 1, 2}));
}

TEST(Digraph, SemicompleteAndOrientedFlags) {
    const Digraph w1 = build(GalleryId::parse("W1")).graph;
    EXPECT_TRUE(is_semicomplete(w1));
    EXPECT_FALSE(is_oriented(w1));  // 7 arcs on 4 vertices
    const Digraph s4 = build(GalleryId::parse("S4")).graph;
    EXPECT_TRUE(is_semicomplete(s4));
    EXPECT_FALSE(is_oriented(s4));
    EXPECT_FALSE(is_semicomplete(Digraph(3, {{0, 1}})));
}

TEST(Digraph, InducedKeepsParentMaps) {
    const Digraph d = dtilde();
    const std::vector<Vertex> xs = {3, 4, 5};
    const Subdigraph s = induced(d, xs);
    EXPECT_EQ(s.graph.order(), 3);
    for (ArcId a = 0; a < s.graph.size(); ++a) {
        const Arc& local = s.graph.arc(a);
        const Arc& parent = d.arc(s.parent_arc[a]);
        EXPECT_EQ(s.parent_vertex[local.tail], parent.tail);
        EXPECT_EQ(s.parent_vertex[local.head], parent.head);
    }
    EXPECT_EQ(s.graph.size(), 3);  // x->y, y->z, z->x
}

TEST(DigraphProperty, AlphaMatchesBruteForce) {
    Rng rng(11);
    for (int it = 0; it < 300; ++it) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const Digraph d = random_digraph(n, 0.1 + 0.05 * (it % 10), rng);
        const int brute = ref::independence(n, ref::arcs_of(d));
        EXPECT_EQ(independence_number(d), brute);
        EXPECT_EQ(alpha_at_most_two(d).holds, brute <= 2);
    }
}

TEST(DigraphProperty, IsomorphismAgreesWithPermutationSearch) {
    Rng rng(12);
    for (int it = 0; it < 200; ++it) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const Digraph a = random_digraph(n, 0.4, rng);
        const Digraph b = it % 2 ? shuffle_labels(a, rng) : random_digraph(n, 0.4, rng);
        const bool expect = ref::isomorphic(n, ref::arcs_of(a), ref::arcs_of(b));
        const auto map = find_isomorphism(a, b);
        ASSERT_EQ(map.has_value(), expect);
        if (map) EXPECT_TRUE(ref::same_arc_multiset(ref::arcs_of(relabel(a, *map)), ref::arcs_of(b)));
    }
}

TEST(Undirected, Basics) {
    UndirectedGraph g(4, {{0, 1}, {1, 2}, {2, 3}});
    EXPECT_TRUE(is_connected(g));
    EXPECT_FALSE(is_two_edge_connected(g));
    EXPECT_EQ(independence_number(g), 2);
    EXPECT_EQ(g.add_edge(1, 0), 0);
    std::vector<char> mask = {1, 0, 1};
    EXPECT_FALSE(is_connected(g, mask));
    g.add_edge(3, 0);
    EXPECT_TRUE(is_two_edge_connected(g));
}
