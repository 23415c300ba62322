#include "nonsep/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "nonsep/connectivity.hpp"
#include "nonsep/errors.hpp"
#include "nonsep/generators.hpp"

namespace nonsep {

namespace {

// Stable colour refinement on (out, in) multiplicity structure.
std::vector<int> refine(const Digraph& d) {
    const int n = d.order();
    std::vector<int> colour(n, 0);
    for (Vertex v = 0; v < n; ++v) colour[v] = d.out_degree(v) * (n * 64 + 1) + d.in_degree(v);
    int classes = -1;
    while (true) {
        std::vector<std::vector<long long>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            std::vector<long long> out, in;
            for (ArcId a : d.out_arcs(v)) out.push_back(colour[d.arc(a).head]);
            for (ArcId a : d.in_arcs(v)) in.push_back(colour[d.arc(a).tail]);
            std::sort(out.begin(), out.end());
            std::sort(in.begin(), in.end());
            sig[v].push_back(colour[v]);
            sig[v].push_back(static_cast<long long>(out.size()));
            sig[v].insert(sig[v].end(), out.begin(), out.end());
            sig[v].push_back(-1);
            sig[v].insert(sig[v].end(), in.begin(), in.end());
        }
        std::vector<std::vector<long long>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (Vertex v = 0; v < n; ++v)
            colour[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        if (static_cast<int>(uniq.size()) == classes) break;
        classes = static_cast<int>(uniq.size());
    }
    return colour;
}

std::string matrix_string(const Digraph& d, const std::vector<Vertex>& at) {
    // at[position] = vertex
    const int n = d.order();
    std::string s(static_cast<std::size_t>(n) * n, '0');
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s[static_cast<std::size_t>(i) * n + j] = static_cast<char>('0' + std::min(9, d.multiplicity(at[i], at[j])));
    return s;
}

}  // namespace

std::string canonical_form(const Digraph& d, std::int64_t cap) {
    const int n = d.order();
    std::vector<int> colour = refine(d);
    const int classes = n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
    std::vector<std::vector<Vertex>> cells(classes);
    for (Vertex v = 0; v < n; ++v) cells[colour[v]].push_back(v);
    double labelings = 1;
    for (const auto& c : cells)
        for (std::size_t k = 2; k <= c.size(); ++k) labelings *= static_cast<double>(k);
    if (n <= 9 && labelings <= static_cast<double>(cap)) {
        std::string best;
        std::vector<Vertex> at;
        std::function<void(std::size_t)> rec = [&](std::size_t c) {
            if (c == cells.size()) {
                std::string s = matrix_string(d, at);
                if (best.empty() || s < best) best = s;
                return;
            }
            std::vector<Vertex> cell = cells[c];
            do {
                at.insert(at.end(), cell.begin(), cell.end());
                rec(c + 1);
                at.resize(at.size() - cell.size());
            } while (std::next_permutation(cell.begin(), cell.end()));
        };
        rec(0);
        return "c" + std::to_string(n) + ":" + best;
    }
    // Invariant hash: refined cell sizes plus the colour-level adjacency counts.
    std::map<std::pair<int, int>, int> between;
    for (const Arc& a : d.arcs()) ++between[{colour[a.tail], colour[a.head]}];
    std::ostringstream os;
    for (const auto& c : cells) os << c.size() << ',';
    os << '|';
    for (auto [k, v] : between) os << k.first << '>' << k.second << '=' << v << ';';
    const std::uint64_t h = std::hash<std::string>{}(os.str());
    std::ostringstream out;
    out << "h" << n << ":" << std::hex << h << ":" << d.size();
    return out.str();
}

bool is_exact_canonical(const std::string& form) { return !form.empty() && form[0] == 'c'; }

Digraph from_canonical(const std::string& form) {
    if (!is_exact_canonical(form)) throw PreconditionError("from_canonical: not an exact canonical form");
    const auto colon = form.find(':');
    const int n = std::stoi(form.substr(1, colon - 1));
    const std::string m = form.substr(colon + 1);
    if (static_cast<int>(m.size()) != n * n) throw PreconditionError("from_canonical: matrix size mismatch");
    Digraph d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < m[static_cast<std::size_t>(i) * n + j] - '0'; ++k) d.add_arc(i, j);
    return d;
}

std::string to_string(SearchTarget t) {
    switch (t) {
        case SearchTarget::NonsepTree9: return "NONSEP_TREE_9";
        case SearchTarget::NonsepBranchingK: return "NONSEP_BRANCHING_K";
        case SearchTarget::NonsepBranchingRooted: return "NONSEP_BRANCHING_ROOTED";
    }
    return "?";
}

std::optional<SearchTarget> parse_search_target(const std::string& s) {
    for (SearchTarget t :
         {SearchTarget::NonsepTree9, SearchTarget::NonsepBranchingK, SearchTarget::NonsepBranchingRooted})
        if (to_string(t) == s) return t;
    return std::nullopt;
}

namespace {

struct Outcome {
    enum Kind { Filtered, Duplicate, Clean, Confirmed, BudgetExceeded } kind = Filtered;
    std::string canonical;
    std::optional<Counterexample> counterexample;
};

Digraph generate(const SearchOptions& opt, std::uint64_t seed, std::int64_t index) {
    if (opt.generator == "exhaustive") {
        const int pairs = opt.n * (opt.n - 1) / 2;
        if (pairs < 64 && static_cast<std::uint64_t>(index) >= (std::uint64_t{1} << pairs)) return Digraph(0);
        return tournament_from_code(opt.n, static_cast<std::uint64_t>(index));
    }
    Rng rng(seed);
    Alpha2Options a;
    a.accept = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
    a.digon_probability = rng() % 2 ? 0.0 : std::uniform_real_distribution<double>(0.0, 0.3)(rng);
    Digraph d = random_alpha2_digraph(opt.n, rng, a);
    if (is_k_arc_strong(d, 2) && (rng() % 4 != 0)) d = thin_alpha2(d, rng);
    return d;
}

Outcome examine(const SearchOptions& opt, const Digraph& d) {
    Outcome o;
    if (d.order() < opt.min_n || d.order() == 0) return o;
    if (!alpha_at_most_two(d).holds || !is_k_arc_strong(d, 2)) return o;
    o.canonical = canonical_form(d);
    try {
        Counterexample cx;
        cx.canonical = o.canonical;
        cx.graph = is_exact_canonical(o.canonical) ? from_canonical(o.canonical) : d;
        bool violated = false;
        switch (opt.target) {
            case SearchTarget::NonsepTree9: {
                TreeOracleResult r = oracle_nonsep_tree(d, opt.limits);
                violated = !r.exists;
                cx.transcript = r.transcript;
                break;
            }
            case SearchTarget::NonsepBranchingK: {
                BranchingOracleResult r = oracle_nonsep_branching(d, std::nullopt, opt.limits);
                violated = !r.exists;
                cx.transcript = r.transcript;
                break;
            }
            case SearchTarget::NonsepBranchingRooted: {
                for (Vertex r = 0; r < d.order(); ++r) {
                    BranchingOracleResult b = oracle_nonsep_branching(d, r, opt.limits);
                    if (!b.exists) {
                        cx.failing_roots.push_back(r);
                        if (!violated) cx.transcript = b.transcript;
                        violated = true;
                    }
                }
                break;
            }
        }
        o.kind = violated ? Outcome::Confirmed : Outcome::Clean;
        if (violated) o.counterexample = cx;
    } catch (const BoundExceededError&) {
        o.kind = Outcome::BudgetExceeded;
    }
    return o;
}

}  // namespace

void save_checkpoint(const std::string& path, const SearchOptions& opt, const SearchReport& report) {
    nlohmann::json j;
    j["target"] = to_string(opt.target);
    j["generator"] = opt.generator;
    j["n"] = opt.n;
    j["min_n"] = opt.min_n;
    j["seed"] = opt.seed;
    j["instances_done"] = report.instances_done;
    j["rng_state"] = report.rng_state;
    j["processed"] = report.processed;
    nlohmann::json cx = nlohmann::json::array();
    for (const Counterexample& c : report.confirmed) {
        nlohmann::json e;
        e["canonical"] = c.canonical;
        e["n"] = c.graph.order();
        nlohmann::json arcs = nlohmann::json::array();
        for (const Arc& a : c.graph.arcs()) arcs.push_back({a.tail, a.head});
        e["arcs"] = arcs;
        e["failing_roots"] = c.failing_roots;
        cx.push_back(e);
    }
    j["confirmed"] = cx;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write checkpoint " + path);
    out << j.dump(2) << '\n';
}

SearchReport conjecture_search(const SearchOptions& opt) {
    if (opt.n < 1 || opt.n > opt.limits.max_n) throw BoundExceededError("conjecture_search: n outside oracle bound");
    if (opt.generator != "random" && opt.generator != "exhaustive")
        throw PreconditionError("conjecture_search: generator must be random or exhaustive");
    SearchReport report;
    Rng master(opt.seed);
    std::set<std::string> processed;
    std::map<std::string, Counterexample> confirmed;
    if (opt.resume_file) {
        std::ifstream in(*opt.resume_file);
        if (!in) throw std::runtime_error("cannot read checkpoint " + *opt.resume_file);
        nlohmann::json j = nlohmann::json::parse(in);
        std::istringstream state(j.at("rng_state").get<std::string>());
        state >> master;
        report.instances_done = j.at("instances_done").get<std::int64_t>();
        for (const auto& s : j.at("processed")) processed.insert(s.get<std::string>());
        for (const auto& e : j.at("confirmed")) {
            Counterexample c;
            c.canonical = e.at("canonical").get<std::string>();
            c.graph = Digraph(e.at("n").get<int>());
            for (const auto& a : e.at("arcs")) c.graph.add_arc(a.at(0).get<int>(), a.at(1).get<int>());
            c.failing_roots = e.at("failing_roots").get<std::vector<Vertex>>();
            confirmed.emplace(c.canonical, c);
        }
    }
    const int threads = std::max(1, opt.threads);
    std::int64_t remaining = opt.budget;
    while (remaining > 0) {
        const std::int64_t batch = std::min(remaining, std::max<std::int64_t>(1, opt.batch));
        std::vector<std::uint64_t> seeds(batch);
        for (auto& s : seeds) s = master();
        std::vector<Outcome> outcomes(batch);
        std::atomic<std::int64_t> next{0};
        const std::int64_t base = report.instances_done;
        auto worker = [&]() {
            for (std::int64_t i = next++; i < batch; i = next++) {
                Digraph d = generate(opt, seeds[i], base + i);
                outcomes[i] = examine(opt, d);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        for (Outcome& o : outcomes) {
            ++report.generated;
            if (o.kind == Outcome::Filtered) {
                ++report.filtered_out;
                continue;
            }
            if (!processed.insert(o.canonical).second) {
                ++report.duplicates;
                continue;
            }
            ++report.examined;
            if (o.kind == Outcome::BudgetExceeded) ++report.oracle_budget_exceeded;
            if (o.kind == Outcome::Confirmed) confirmed.emplace(o.canonical, *o.counterexample);
        }
        report.instances_done += batch;
        remaining -= batch;
        std::ostringstream state;
        state << master;
        report.rng_state = state.str();
        report.processed.assign(processed.begin(), processed.end());
        report.confirmed.clear();
        for (auto& [k, c] : confirmed) report.confirmed.push_back(c);
        if (opt.checkpoint_file) save_checkpoint(*opt.checkpoint_file, opt, report);
    }
    if (opt.budget <= 0) {
        std::ostringstream state;
        state << master;
        report.rng_state = state.str();
        report.processed.assign(processed.begin(), processed.end());
        for (auto& [k, c] : confirmed) report.confirmed.push_back(c);
    }
    return report;
}

}  // namespace nonsep
