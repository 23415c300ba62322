#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonsep/connectivity.hpp"
#include "nonsep/digraph.hpp"

namespace nonsep {

// Exhaustive ground-truth searches. Each returns a transcript whose verdict
// can be reproduced by re-running with the same limits.

enum class ClaimKind {
    NoNonsepBranching,
    NoNonsepTree,
    AllHampathsSeparating,
    NoTwoStrongPartition,
};
std::string to_string(ClaimKind k);
// Accepts the kebab-case names: no-nonsep-branching, no-nonsep-tree, ...
std::optional<ClaimKind> parse_claim_kind(const std::string& s);

struct ImpossibilityTranscript {
    ClaimKind claim = ClaimKind::NoNonsepTree;
    int n = 0;
    int arcs = 0;
    std::string search_space;
    double search_space_size = 0;  // upper bound on leaves
    std::int64_t nodes = 0;        // search-tree nodes visited
    std::int64_t leaves = 0;       // complete candidates checked
    std::int64_t pruned = 0;
    bool verdict = false;  // the impossibility claim holds
    std::vector<std::string> notes;

    bool operator==(const ImpossibilityTranscript&) const = default;
};

struct OracleLimits {
    int max_n = 12;
    std::int64_t node_budget = -1;  // negative: unlimited
};

struct BranchingOracleResult {
    bool exists = false;
    std::optional<OutBranching> witness;
    std::vector<Vertex> feasible_roots;  // roots examined and found feasible
    ImpossibilityTranscript transcript;
};

// Without a root every vertex is tried in order; `all_roots` keeps going
// after the first feasible one so feasible_roots is complete.
BranchingOracleResult oracle_nonsep_branching(const Digraph& d, std::optional<Vertex> root = std::nullopt,
                                              const OracleLimits& limits = {}, bool all_roots = false);

// Out-tree rooted at `root` covering V - {excluded} with strong residual.
BranchingOracleResult oracle_nonsep_out_tree(const Digraph& d, Vertex root, Vertex excluded,
                                             const OracleLimits& limits = {});

struct TreeOracleResult {
    bool exists = false;
    std::optional<ArcSubset> witness;
    ImpossibilityTranscript transcript;
};

TreeOracleResult oracle_nonsep_tree(const Digraph& d, const OracleLimits& limits = {});
using OracleTreeResult = TreeOracleResult;

struct HamPathOracleResult {
    bool all_separating = true;
    std::int64_t paths = 0;
    std::int64_t separating = 0;
    // With a reach target: every path leaves the target unreachable from the
    // path's first vertex in D - A(P).
    std::optional<bool> target_unreachable_on_every_path;
    std::optional<std::vector<Vertex>> nonseparating_path;
    ImpossibilityTranscript transcript;
};

// max_n defaults to 14 here.
HamPathOracleResult oracle_hampaths_separating(const Digraph& d, std::optional<Vertex> start = std::nullopt,
                                               std::optional<Vertex> reach_target = std::nullopt,
                                               OracleLimits limits = {14, -1});

// Block-level model: vertices are blocks, `special` arcs are single arcs that
// go to exactly one colour, `shared` block pairs carry enough parallel arcs
// to serve both colours.
struct BlockModel {
    int blocks = 0;
    std::vector<std::pair<int, int>> special;
    std::vector<std::pair<int, int>> shared;
};

// Contracts the blocks of D: a block pair joined by exactly one arc is
// special, by two or more is shared.
BlockModel contract_blocks(const Digraph& d, const std::vector<int>& block_of);

struct BlockOracleResult {
    bool impossible = true;
    std::optional<std::vector<int>> colouring;  // colour (1 or 2) per special arc
    std::int64_t colourings_checked = 0;
    ImpossibilityTranscript transcript;
};

// Enumerates all 2-colourings of the special arcs; impossible iff none makes
// both colour classes (plus shared pairs) strong. At most 24 special arcs.
BlockOracleResult oracle_two_strong_partition_blocks(const BlockModel& model);

}  // namespace nonsep
