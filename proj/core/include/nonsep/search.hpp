#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nonsep/digraph.hpp"
#include "nonsep/oracles.hpp"

namespace nonsep {

// Exact canonical form ("c<n>:" + minimum adjacency string over all labelings
// compatible with colour refinement) for n <= 9 when the refined cells allow
// at most `cap` labelings; otherwise an invariant hash ("h<n>:...") that is
// isomorphism-invariant but not complete.
std::string canonical_form(const Digraph& d, std::int64_t cap = 400'000);
bool is_exact_canonical(const std::string& form);
// Rebuilds the digraph from an exact canonical form.
Digraph from_canonical(const std::string& form);

enum class SearchTarget { NonsepTree9, NonsepBranchingK, NonsepBranchingRooted };
std::string to_string(SearchTarget t);
std::optional<SearchTarget> parse_search_target(const std::string& s);

struct SearchOptions {
    SearchTarget target = SearchTarget::NonsepTree9;
    std::string generator = "random";  // random | exhaustive
    int n = 9;
    int min_n = 9;  // size filter; NONSEP_TREE_9 uses 9
    std::int64_t budget = 1000;  // instances generated in this run
    std::uint64_t seed = 1;
    int threads = 1;
    std::optional<std::string> resume_file;
    std::optional<std::string> checkpoint_file;
    std::int64_t batch = 256;
    OracleLimits limits{12, 50'000'000};
};

struct Counterexample {
    std::string canonical;
    Digraph graph;
    ImpossibilityTranscript transcript;
    std::vector<Vertex> failing_roots;  // rooted target only
};

struct SearchReport {
    std::int64_t generated = 0;
    std::int64_t filtered_out = 0;
    std::int64_t duplicates = 0;
    std::int64_t examined = 0;
    std::int64_t oracle_budget_exceeded = 0;
    std::int64_t instances_done = 0;  // including resumed ones
    std::vector<Counterexample> confirmed;  // sorted by canonical form
    std::vector<std::string> processed;     // canonical forms, sorted
    std::string rng_state;
    bool clean() const { return confirmed.empty(); }
};

SearchReport conjecture_search(const SearchOptions& opt);

// Checkpoint: {"rng_state", "instances_done", "processed": [...], "confirmed": [...], ...}.
void save_checkpoint(const std::string& path, const SearchOptions& opt, const SearchReport& report);

}  // namespace nonsep
