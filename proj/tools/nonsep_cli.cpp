#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nonsep/branching.hpp"
#include "nonsep/connectivity.hpp"
#include "nonsep/digraph.hpp"
#include "nonsep/errors.hpp"
#include "nonsep/gallery.hpp"
#include "nonsep/hamiltonian.hpp"
#include "nonsep/io.hpp"
#include "nonsep/oracles.hpp"
#include "nonsep/search.hpp"
#include "nonsep/tree.hpp"
#include "nonsep/undirected.hpp"

using json = nlohmann::json;
using namespace nonsep;

namespace {

enum Exit { kOk = 0, kRefused = 1, kConfirmed = 2, kIoError = 3, kInternal = 4 };

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json arcs_json(const Digraph& d, const std::vector<ArcId>& ids) {
    json a = json::array();
    for (ArcId id : ids) a.push_back({d.arc(id).tail, d.arc(id).head});
    return a;
}

json transcript_json(const ImpossibilityTranscript& t) {
    return {{"claim", to_string(t.claim)},
            {"n", t.n},
            {"arcs", t.arcs},
            {"search_space", t.search_space},
            {"search_space_size", t.search_space_size},
            {"nodes", t.nodes},
            {"leaves", t.leaves},
            {"pruned", t.pruned},
            {"verdict", t.verdict},
            {"notes", t.notes}};
}

json branching_certificate(const Digraph& d, const OutBranching& b) {
    const std::vector<ArcId> ids = b.arc_ids();
    return {{"kind", "branching"},
            {"root", b.root},
            {"arc_ids", ids},
            {"arcs", arcs_json(d, ids)},
            {"verified", verify_branching_certificate(d, b)}};
}

json tree_certificate(const Digraph& d, const ArcSubset& t) {
    const std::vector<ArcId> ids = t.members();
    return {{"kind", "tree"}, {"arc_ids", ids}, {"arcs", arcs_json(d, ids)}, {"verified", verify_nonsep_tree(d, t)}};
}

json path_tree_certificate(const UndirectedGraph& g, const PathTreePair& p) {
    json tree = json::array();
    for (auto [u, v] : p.tree) tree.push_back({u, v});
    return {{"kind", "path-tree"},
            {"route", p.route},
            {"path", p.path},
            {"tree", tree},
            {"verified", verify_path_tree_pair(g, p)}};
}

std::vector<ArcId> resolve_arcs(const Digraph& d, const json& cert) {
    std::vector<ArcId> ids;
    if (cert.contains("arc_ids")) {
        for (const auto& x : cert["arc_ids"]) {
            const ArcId a = x.get<int>();
            if (a < 0 || a >= d.size()) throw ParseError("arc id out of range", "/arc_ids");
            ids.push_back(a);
        }
        return ids;
    }
    // Pairs only: each pair takes the lowest unused parallel arc.
    std::vector<char> used(d.size(), 0);
    for (const auto& p : cert.at("arcs")) {
        const int u = p.at(0).get<int>(), v = p.at(1).get<int>();
        if (u < 0 || v < 0 || u >= d.order() || v >= d.order()) throw ParseError("arc endpoint out of range", "/arcs");
        ArcId hit = kNoArc;
        for (ArcId a : d.out_arcs(u))
            if (d.arc(a).head == v && !used[a]) {
                hit = a;
                break;
            }
        if (hit == kNoArc) throw ParseError("certificate arc not in the graph", "/arcs");
        used[hit] = 1;
        ids.push_back(hit);
    }
    return ids;
}

bool check_certificate(const GraphDocument& doc, const json& cert, std::string& why) {
    const std::string kind = cert.at("kind").get<std::string>();
    if (kind == "path-tree") {
        const UndirectedGraph g = doc.directed ? underlying_graph(to_digraph(doc)) : to_undirected(doc);
        PathTreePair p;
        p.path = cert.at("path").get<std::vector<Vertex>>();
        for (const auto& e : cert.at("tree")) {
            const int u = e.at(0).get<int>(), v = e.at(1).get<int>();
            p.tree.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (!verify_path_tree_pair(g, p)) {
            why = "not an edge-disjoint hamiltonian path and spanning tree";
            return false;
        }
        return true;
    }
    const Digraph d = to_digraph(doc);
    const std::vector<ArcId> ids = resolve_arcs(d, cert);
    if (kind == "branching") {
        OutBranching b = OutBranching::empty(d.order(), cert.at("root").get<int>());
        for (ArcId a : ids) {
            const Vertex h = d.arc(a).head;
            if (b.parent[h] != kNoArc || h == b.root) {
                why = "two certificate arcs enter vertex " + std::to_string(h);
                return false;
            }
            b.parent[h] = a;
            b.covered[h] = 1;
        }
        if (!verify_branching_certificate(d, b)) {
            why = "not an out-branching with strong residual";
            return false;
        }
        return true;
    }
    if (kind == "tree") {
        if (!verify_nonsep_tree(d, ArcSubset::of(d, ids))) {
            why = "not a spanning tree with strong residual";
            return false;
        }
        return true;
    }
    throw ParseError("unknown certificate kind \"" + kind + "\"", "/kind");
}

std::vector<int> blocks_from_labels(const GraphDocument& doc) {
    std::map<std::string, int> ids;
    std::vector<int> out;
    for (const std::string& l : doc.labels) {
        const auto dot = l.find('.');
        if (dot == std::string::npos) return {};
        const auto [it, fresh] = ids.emplace(l.substr(0, dot), static_cast<int>(ids.size()));
        out.push_back(it->second);
    }
    return out;
}

int cmd_analyze(const std::string& file) {
    const GraphDocument doc = load_graph(file);
    json j;
    j["n"] = doc.n;
    j["directed"] = doc.directed;
    if (!doc.directed) {
        const UndirectedGraph g = to_undirected(doc);
        j["edges"] = g.size();
        j["alpha"] = independence_number(g);
        j["min_degree"] = g.min_degree();
        j["connected"] = is_connected(g);
        j["two_edge_connected"] = is_two_edge_connected(g);
        print(j);
        return kOk;
    }
    const Digraph d = to_digraph(doc);
    j["arcs"] = d.size();
    j["alpha"] = independence_number(d);
    j["lambda"] = arc_connectivity(d);
    j["min_semi_degree"] = min_semi_degree(d);
    j["min_in_degree"] = min_in_degree(d);
    j["min_out_degree"] = min_out_degree(d);
    const StrongComponents sc = strong_components(d);
    j["strong_components"] = sc.components;
    j["strong"] = sc.components.size() == 1;
    j["semicomplete"] = is_semicomplete(d);
    j["oriented"] = is_oriented(d);
    j["simple"] = d.is_simple();
    print(j);
    return kOk;
}

int cmd_branching(const std::string& file, std::optional<int> root) {
    const Digraph d = to_digraph(load_graph(file));
    if (root && (*root < 0 || *root >= d.order())) throw PreconditionError("root out of range");
    if (is_semicomplete(d) && d.is_simple()) {
        const SemicompleteBranchingResult r = sd_nonsep_branching(d, root);
        json j;
        j["algorithm"] = "semicomplete";
        j["case"] = to_string(r.kase);
        j["explanation"] = r.explanation;
        j["permitted_roots"] = r.permitted_roots;
        if (r.branching) {
            j["certificate"] = branching_certificate(d, *r.branching);
            print(j);
            return kOk;
        }
        j["possible"] = false;
        if (r.out_tree) {
            const std::vector<ArcId> ids = r.out_tree->arc_ids();
            j["out_tree"] = {{"root", r.out_tree->root}, {"excluded", r.excluded}, {"arcs", arcs_json(d, ids)}};
        }
        j["is_w2"] = r.is_w2;
        print(j);
        return kConfirmed;
    }
    if (root) throw PreconditionError("--root is only supported for simple semicomplete inputs");
    const MainBranchingResult r = main_nonsep_branching(d);
    json j;
    j["algorithm"] = "main";
    j["route"] = r.trace.route;
    j["initial_components"] = r.trace.initial_components;
    j["claims_checked"] = r.trace.claims_checked;
    j["certificate"] = branching_certificate(d, r.branching);
    print(j);
    return kOk;
}

int cmd_tree(const std::string& file, bool oracle) {
    const Digraph d = to_digraph(load_graph(file));
    std::string refusal;
    try {
        const NonsepTreeResult r = nonsep_spanning_tree(d);
        json j = {{"algorithm", "growth"}, {"route", r.route}, {"seed", r.seed}, {"endgame_size", r.endgame_size}};
        j["certificate"] = tree_certificate(d, r.tree);
        print(j);
        return kOk;
    } catch (const PreconditionError& e) {
        refusal = e.what();
    }
    if (is_oriented(d) && d.order() >= 9) {
        if (auto cycle = find_hamiltonian_cycle(d)) {
            try {
                const HamTreeResult r = oriented_hamiltonian_nonsep_tree(d, *cycle);
                json j = {{"algorithm", "hamiltonian"}, {"route", to_string(r.route)}, {"cycle", *cycle}};
                j["certificate"] = tree_certificate(d, r.tree);
                print(j);
                return kOk;
            } catch (const PreconditionError& e) {
                refusal += "; " + std::string(e.what());
            }
        }
    }
    if (!oracle) throw PreconditionError(refusal);
    const TreeOracleResult r = oracle_nonsep_tree(d);
    json j = {{"algorithm", "oracle"}, {"refusal", refusal}, {"transcript", transcript_json(r.transcript)}};
    if (r.witness) {
        j["certificate"] = tree_certificate(d, *r.witness);
        print(j);
        return kOk;
    }
    print(j);
    return kConfirmed;
}

int cmd_undirected(const std::string& file) {
    const GraphDocument doc = load_graph(file);
    const UndirectedGraph g = doc.directed ? underlying_graph(to_digraph(doc)) : to_undirected(doc);
    const PathTreePair p = edge_disjoint_hp_and_tree(g);
    print(json{{"certificate", path_tree_certificate(g, p)}});
    return kOk;
}

int cmd_gallery(const std::string& name, std::optional<int> r, const std::string& out, const std::string& format) {
    const GalleryGraph gg = build(GalleryId::parse(name, r));
    const GraphDocument doc = document_of(gg.graph, gg.labels);
    const std::string text = format == "dot" ? emit_dot_graph(doc) : emit_json_graph(doc);
    if (out.empty() || out == "-") {
        std::cout << text;
        return kOk;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
    return kOk;
}

struct VerifyArgs {
    std::string file;
    std::string claim;
    std::string certificate;
    std::optional<int> root, start, reach;
    std::vector<int> blocks;
};

int cmd_verify(const VerifyArgs& a) {
    const GraphDocument doc = load_graph(a.file);
    if (!a.certificate.empty()) {
        json cert;
        try {
            cert = json::parse(read_text(a.certificate));
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("malformed certificate: ") + e.what(), "byte " + std::to_string(e.byte));
        }
        if (cert.contains("certificate")) cert = cert["certificate"];
        std::string why;
        const bool ok = check_certificate(doc, cert, why);
        print(json{{"certificate_valid", ok}, {"reason", why}});
        return ok ? kOk : kConfirmed;
    }
    const auto kind = parse_claim_kind(a.claim);
    if (!kind) throw PreconditionError("unknown claim kind: " + a.claim);
    const Digraph d = to_digraph(doc);
    json j;
    bool holds = false;
    switch (*kind) {
        case ClaimKind::NoNonsepBranching: {
            const BranchingOracleResult r = oracle_nonsep_branching(d, a.root);
            holds = !r.exists;
            j["transcript"] = transcript_json(r.transcript);
            if (r.witness) j["witness"] = branching_certificate(d, *r.witness);
            break;
        }
        case ClaimKind::NoNonsepTree: {
            const TreeOracleResult r = oracle_nonsep_tree(d);
            holds = !r.exists;
            j["transcript"] = transcript_json(r.transcript);
            if (r.witness) j["witness"] = tree_certificate(d, *r.witness);
            break;
        }
        case ClaimKind::AllHampathsSeparating: {
            const HamPathOracleResult r = oracle_hampaths_separating(d, a.start, a.reach);
            holds = r.all_separating && r.target_unreachable_on_every_path.value_or(true);
            j["transcript"] = transcript_json(r.transcript);
            j["paths"] = r.paths;
            j["separating"] = r.separating;
            if (r.target_unreachable_on_every_path) j["target_unreachable_on_every_path"] = *r.target_unreachable_on_every_path;
            if (r.nonseparating_path) j["nonseparating_path"] = *r.nonseparating_path;
            break;
        }
        case ClaimKind::NoTwoStrongPartition: {
            std::vector<int> blocks = a.blocks.empty() ? blocks_from_labels(doc) : a.blocks;
            if (static_cast<int>(blocks.size()) != d.order())
                throw PreconditionError("no-two-strong-partition needs --blocks or labels of the form <block>.<vertex>");
            const BlockOracleResult r = oracle_two_strong_partition_blocks(contract_blocks(d, blocks));
            holds = r.impossible;
            j["transcript"] = transcript_json(r.transcript);
            j["colourings_checked"] = r.colourings_checked;
            if (r.colouring) j["colouring"] = *r.colouring;
            break;
        }
    }
    j["claim_holds"] = holds;
    print(j);
    return holds ? kConfirmed : kOk;
}

int cmd_search(SearchOptions opt, const std::string& target) {
    const auto t = parse_search_target(target);
    if (!t) throw PreconditionError("unknown search target: " + target);
    opt.target = *t;
    const SearchReport r = conjecture_search(opt);
    if (opt.checkpoint_file) save_checkpoint(*opt.checkpoint_file, opt, r);
    json conf = json::array();
    for (const Counterexample& c : r.confirmed) {
        json x = {{"canonical", c.canonical}, {"transcript", transcript_json(c.transcript)}};
        if (!c.failing_roots.empty()) x["failing_roots"] = c.failing_roots;
        conf.push_back(x);
    }
    print(json{{"target", to_string(opt.target)},
               {"generator", opt.generator},
               {"n", opt.n},
               {"min_n", opt.min_n},
               {"seed", opt.seed},
               {"budget", opt.budget},
               {"generated", r.generated},
               {"filtered_out", r.filtered_out},
               {"duplicates", r.duplicates},
               {"examined", r.examined},
               {"oracle_budget_exceeded", r.oracle_budget_exceeded},
               {"instances_done", r.instances_done},
               {"confirmed", conf}});
    return r.clean() ? kOk : kConfirmed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Non-separating branchings, trees and hamiltonian paths"};
    app.require_subcommand(1);

    std::string file;
    auto* analyze = app.add_subcommand("analyze", "Structural summary of a graph");
    analyze->add_option("file", file, "JSON or DOT graph, - for stdin")->required();

    std::optional<int> root;
    auto* branching = app.add_subcommand("branching", "Non-separating out-branching");
    branching->add_option("file", file)->required();
    branching->add_option("--root", root, "Requested root (semicomplete inputs)");

    bool oracle = false;
    auto* tree = app.add_subcommand("tree", "Non-separating spanning tree");
    tree->add_option("file", file)->required();
    tree->add_flag("--oracle", oracle, "Fall back to exhaustive search when no construction applies");

    auto* undirected = app.add_subcommand("undirected", "Edge-disjoint hamiltonian path and spanning tree");
    undirected->add_option("file", file)->required();

    std::string name, out, format = "json";
    std::optional<int> r;
    auto* gallery = app.add_subcommand("gallery", "Emit a named example digraph");
    gallery->add_option("name", name, "W1 W2 S4 S4_1 S4_2 S4_3 DTILDE DHAT TR DR NO2COL")->required();
    gallery->add_option("--r", r, "Parameter for TR, DR and NO2COL");
    gallery->add_option("--out", out, "Output file (default stdout)");
    gallery->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run an exhaustive oracle or check a certificate");
    verify->add_option("file", va.file)->required();
    auto* claim_opt = verify->add_option("--claim", va.claim,
                                         "no-nonsep-branching | no-nonsep-tree | all-hampaths-separating | "
                                         "no-two-strong-partition");
    auto* cert_opt = verify->add_option("--certificate", va.certificate, "Certificate JSON printed by this tool");
    claim_opt->excludes(cert_opt);
    verify->add_option("--root", va.root);
    verify->add_option("--start", va.start);
    verify->add_option("--reach", va.reach);
    verify->add_option("--blocks", va.blocks)->delimiter(',');

    SearchOptions so;
    std::string target = "NONSEP_TREE_9", resume, checkpoint;
    auto* search = app.add_subcommand("search", "Random or exhaustive counterexample search");
    search->add_option("--target", target)->required();
    search->add_option("--n", so.n)->required();
    search->add_option("--budget", so.budget)->required();
    search->add_option("--seed", so.seed);
    search->add_option("--min-n", so.min_n);
    search->add_option("--threads", so.threads);
    search->add_option("--generator", so.generator)->check(CLI::IsMember({"random", "exhaustive"}));
    search->add_option("--resume", resume);
    search->add_option("--checkpoint", checkpoint);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kRefused;
    }

    try {
        if (*analyze) return cmd_analyze(file);
        if (*branching) return cmd_branching(file, root);
        if (*tree) return cmd_tree(file, oracle);
        if (*undirected) return cmd_undirected(file);
        if (*gallery) return cmd_gallery(name, r, out, format);
        if (*verify) {
            if (va.claim.empty() && va.certificate.empty()) throw PreconditionError("verify needs --claim or --certificate");
            return cmd_verify(va);
        }
        if (*search) {
            if (!resume.empty()) so.resume_file = resume;
            if (!checkpoint.empty()) so.checkpoint_file = checkpoint;
            if (search->count("--min-n") == 0) so.min_n = std::min(so.n, 9);
            return cmd_search(so, target);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kIoError;
    } catch (const PreconditionError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kRefused;
    } catch (const InternalInvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::runtime_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kIoError;
    }
    return kOk;
}
