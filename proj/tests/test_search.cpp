#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "nonsep/errors.hpp"
#include "nonsep/gallery.hpp"
#include "nonsep/generators.hpp"
#include "nonsep/search.hpp"
#include "support/oracles.hpp"

using namespace nonsep;

TEST(Canonical, RoundTripAndInvariance) {
    const Digraph d = build(GalleryId::parse("DHAT")).graph;
    const std::string c = canonical_form(d);
    EXPECT_TRUE(is_exact_canonical(c));
    EXPECT_TRUE(ref::isomorphic(8, ref::arcs_of(from_canonical(c)), ref::arcs_of(d)));
    Rng rng(81);
    for (int i = 0; i < 10; ++i) EXPECT_EQ(canonical_form(shuffle_labels(d, rng)), c);
}

TEST(CanonicalProperty, EqualFormsIffIsomorphic) {
    Rng rng(82);
    for (int it = 0; it < 300; ++it) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const Digraph a = random_digraph(n, 0.35, rng);
        const Digraph b = it % 3 == 0 ? shuffle_labels(a, rng) : random_digraph(n, 0.35, rng);
        EXPECT_EQ(canonical_form(a) == canonical_form(b), ref::isomorphic(n, ref::arcs_of(a), ref::arcs_of(b)));
    }
}

TEST(CanonicalProperty, LargerOrdersStayExactWhenRefinementSplits) {
    Rng rng(83);
    for (int it = 0; it < 30; ++it) {
        const Digraph a = random_alpha2_digraph(9, rng);
        const std::string c = canonical_form(a);
        EXPECT_EQ(canonical_form(shuffle_labels(a, rng)), c);
        if (is_exact_canonical(c)) EXPECT_TRUE(ref::isomorphic(9, ref::arcs_of(from_canonical(c)), ref::arcs_of(a)));
    }
}

TEST(Search, LoweredFilterFindsDhat) {
    SearchOptions o;
    o.n = 8;
    o.min_n = 8;
    o.budget = 20000;
    o.threads = 2;
    const SearchReport r = conjecture_search(o);
    const std::string dhat = canonical_form(build(GalleryId::parse("DHAT")).graph);
    bool found = false;
    for (const Counterexample& c : r.confirmed) {
        found = found || c.canonical == dhat;
        EXPECT_TRUE(c.transcript.verdict);
        EXPECT_FALSE(oracle_nonsep_tree(c.graph).exists);
    }
    EXPECT_TRUE(found);
}

TEST(Search, ExhaustiveTournamentSampleIsClean) {
    SearchOptions o;
    o.generator = "exhaustive";
    o.n = 9;
    o.budget = 2000;
    const SearchReport r = conjecture_search(o);
    EXPECT_TRUE(r.clean());
    EXPECT_EQ(r.generated, 2000);
}

TEST(Search, DeterministicAcrossThreadCounts) {
    SearchOptions o;
    o.n = 9;
    o.budget = 1500;
    o.seed = 5;
    o.threads = 1;
    const SearchReport a = conjecture_search(o);
    o.threads = 4;
    const SearchReport b = conjecture_search(o);
    EXPECT_EQ(a.processed, b.processed);
    EXPECT_EQ(a.examined, b.examined);
    EXPECT_EQ(a.rng_state, b.rng_state);
}

TEST(Search, ResumeMatchesSingleRun) {
    const auto path = (std::filesystem::temp_directory_path() / "nonsep_resume_test.json").string();
    SearchOptions o;
    o.n = 8;
    o.min_n = 8;
    o.seed = 9;
    o.budget = 4000;
    const SearchReport whole = conjecture_search(o);

    o.budget = 2000;
    o.checkpoint_file = path;
    const SearchReport first = conjecture_search(o);
    save_checkpoint(path, o, first);
    o.checkpoint_file.reset();
    o.resume_file = path;
    const SearchReport second = conjecture_search(o);
    EXPECT_EQ(second.instances_done, 4000);
    EXPECT_EQ(second.processed, whole.processed);
    ASSERT_EQ(second.confirmed.size(), whole.confirmed.size());
    for (std::size_t i = 0; i < whole.confirmed.size(); ++i)
        EXPECT_EQ(second.confirmed[i].canonical, whole.confirmed[i].canonical);
    std::remove(path.c_str());
}

TEST(Search, RejectsBadOptions) {
    SearchOptions o;
    o.generator = "nope";
    EXPECT_THROW(conjecture_search(o), PreconditionError);
    EXPECT_FALSE(parse_search_target("SOMETHING"));
    EXPECT_EQ(*parse_search_target("NONSEP_TREE_9"), SearchTarget::NonsepTree9);
}
