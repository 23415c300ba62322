#include <gtest/gtest.h>

#include "nonsep/errors.hpp"
#include "nonsep/gallery.hpp"
#include "nonsep/generators.hpp"
#include "nonsep/io.hpp"
#include "support/oracles.hpp"

using namespace nonsep;

namespace {

ref::ArcList doc_arcs(const GraphDocument& d) { return ref::ArcList(d.arcs.begin(), d.arcs.end()); }

std::string position_of(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    return "";
}

}  // namespace

TEST(Json, ThreeCycle) {
    const GraphDocument d = parse_json_graph(R"({"n":3,"arcs":[[0,1],[1,2],[2,0]]})");
    EXPECT_EQ(d.n, 3);
    EXPECT_TRUE(d.directed);
    EXPECT_TRUE(ref::same_arc_multiset(doc_arcs(d), {{0, 1}, {1, 2}, {2, 0}}));
}

TEST(Dot, TwoCycle) {
    const GraphDocument d = parse_dot_graph("digraph { 0 -> 1; 1 -> 0; }");
    EXPECT_EQ(d.n, 2);
    EXPECT_TRUE(ref::same_arc_multiset(doc_arcs(d), {{0, 1}, {1, 0}}));
}

TEST(Dot, ChainsCommentsAndUndirected) {
    const GraphDocument d = parse_dot_graph("strict digraph G {\n  // chain\n  0 -> 1 -> 2;\n  4;\n}\n");
    EXPECT_EQ(d.n, 5);
    EXPECT_TRUE(ref::same_arc_multiset(doc_arcs(d), {{0, 1}, {1, 2}}));
    const GraphDocument u = parse_dot_graph("graph { 0 -- 1; 1 -- 2 }");
    EXPECT_FALSE(u.directed);
    EXPECT_EQ(to_undirected(u).size(), 2);
    EXPECT_EQ(to_digraph(u).size(), 4);
}

TEST(Json, GalleryRoundTripKeepsLabels) {
    const GalleryGraph g = build(GalleryId::parse("S4"));
    const GraphDocument back = parse_graph(emit_json_graph(document_of(g.graph, g.labels)));
    EXPECT_EQ(to_digraph(back), g.graph);
    EXPECT_EQ(back.labels, g.labels);
    const GraphDocument dot = parse_graph(emit_dot_graph(document_of(g.graph)));
    EXPECT_TRUE(ref::same_arc_multiset(doc_arcs(dot), ref::arcs_of(g.graph)));
}

TEST(IoProperty, RoundTripPreservesArcMultisets) {
    Rng rng(91);
    for (int it = 0; it < 100; ++it) {
        Digraph d = random_digraph(1 + static_cast<int>(rng() % 10), 0.3, rng);
        if (d.size() > 0 && (rng() & 1)) d.add_arc(d.arc(0).tail, d.arc(0).head);
        const GraphDocument doc = document_of(d);
        const GraphDocument j = parse_json_graph(emit_json_graph(doc));
        const GraphDocument t = parse_dot_graph(emit_dot_graph(doc));
        EXPECT_EQ(j.n, d.order());
        EXPECT_EQ(t.n, d.order());
        EXPECT_TRUE(ref::same_arc_multiset(doc_arcs(j), ref::arcs_of(d)));
        EXPECT_TRUE(ref::same_arc_multiset(doc_arcs(t), ref::arcs_of(d)));
    }
}

TEST(Errors, PositionsAreReported) {
    EXPECT_EQ(position_of(R"({"n":3,"arcs":[[0,1],[1,7]]})"), "/arcs/1");
    EXPECT_EQ(position_of(R"({"n":2,"arcs":[[0,0]]})"), "/arcs/0");
    EXPECT_EQ(position_of(R"({"arcs":[]})"), "/n");
    EXPECT_EQ(position_of(R"({"n":2,"arcs":[[0,1]],"labels":["a","a"]})"), "/labels");
    EXPECT_EQ(position_of(R"({"n":2,"arcs":[[0,1]],"labels":["a"]})"), "/labels");
    EXPECT_EQ(position_of("digraph {\n  0 -> ;\n}"), "line 2, column 8");
    EXPECT_EQ(position_of("digraph {\n  0 -- 1;\n}"), "line 2, column 5");
    EXPECT_EQ(position_of("digraph { 0 -> 1; "), "line 1, column 19");
    EXPECT_NE(position_of(R"({"n":3,"arcs":[[0,1],)"), "");
    EXPECT_EQ(position_of("   "), "byte 0");
}

TEST(Errors, MissingFileIsAnIoError) { EXPECT_THROW(load_graph("/nonexistent/graph.json"), std::runtime_error); }
