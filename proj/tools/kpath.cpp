#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kpath/errors.hpp"
#include "kpath/f2.hpp"
#include "kpath/graph.hpp"
#include "kpath/lkn.hpp"
#include "kpath/nfa.hpp"
#include "kpath/oracle.hpp"
#include "kpath/rng.hpp"
#include "kpath/solve.hpp"
#include "kpath/universal.hpp"

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point from) {
    return std::chrono::duration<double, std::milli>(Clock::now() - from).count();
}

std::string join_path(const std::vector<int>& path) {
    std::string out;
    for (size_t i = 0; i < path.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(path[i]);
    }
    return out;
}

const char* regime_name(kpath::SearchRegime r) {
    switch (r) {
        case kpath::SearchRegime::Dag: return "dag";
        case kpath::SearchRegime::Dijkstra: return "dijkstra";
        case kpath::SearchRegime::BellmanFord: return "bellman-ford";
    }
    return "?";
}

std::int64_t env_budget(std::int64_t fallback) {
    const char* raw = std::getenv("KPATH_BUDGET");
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    long long v = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || v <= 0)
        throw kpath::ParameterError("KPATH_BUDGET must be a positive integer");
    return static_cast<std::int64_t>(v);
}

json families_json(const kpath::LknBuildReport& r) {
    json out = json::array();
    for (const kpath::FamilyUse& f : r.families_used)
        out.push_back({{"ground", f.ground}, {"k", f.k}, {"size", f.size}});
    return out;
}

json lkn_stats_json(const kpath::LknBuildReport& r) {
    return {{"lkn_states", r.states},
            {"lkn_transitions", r.transitions},
            {"lkn_size", r.size},
            {"lkn_tree_size", r.tree_size},
            {"recursion_depth", r.recursion_depth}};
}

struct CommonOpts {
    std::uint64_t seed = 0;
    std::string universal = "greedy";
    int threads = 1;
    std::int64_t budget = 100'000'000;
    bool json_out = false;

    kpath::SolveConfig config() const {
        kpath::SolveConfig cfg;
        cfg.seed = seed;
        cfg.universal_mode = universal == "random" ? kpath::UniversalMode::Randomized
                                                   : kpath::UniversalMode::Greedy;
        cfg.size_budget = budget;
        cfg.threads = threads;
        return cfg;
    }

    json config_json(const std::string& method) const {
        return {{"method", method},         {"seed", seed},
                {"universal_mode", universal}, {"size_budget", budget},
                {"threads", threads}};
    }
};

void emit(const json& report, bool json_out, const std::string& human) {
    if (json_out)
        std::cout << report.dump() << "\n";
    else
        std::cout << human << "\n";
}

int run_solve(const std::string& graph_file, int k, std::optional<int> source,
              std::optional<int> target, const std::string& method, const CommonOpts& opts) {
    kpath::WeightedDigraph g = kpath::parse_graph_file(graph_file);
    json report = {{"command", "solve"},
                   {"config", opts.config_json(method)},
                   {"statistics", json::object()},
                   {"gadgets", json::object()}};
    report["config"]["graph"] = graph_file;
    report["config"]["k"] = k;
    report["config"]["source"] = source ? json(*source) : json(nullptr);
    report["config"]["target"] = target ? json(*target) : json(nullptr);

    auto t0 = Clock::now();
    std::optional<kpath::PathResult> found;
    if (method == "oracle") {
        found = kpath::oracle::brute_min_wt_simple_kpath(g, source, target, k);
    } else {
        kpath::SolveReport stats;
        found = source ? kpath::min_wt_simple_st_kpath(g, *source, *target, k, opts.config(), &stats)
                       : kpath::min_wt_simple_kpath(g, k, opts.config(), &stats);
        report["statistics"] = lkn_stats_json(stats.lkn);
        report["statistics"]["product_states"] = stats.product_states;
        report["statistics"]["product_transitions"] = stats.product_transitions;
        report["statistics"]["regime"] = regime_name(stats.regime);
        report["statistics"]["build_ms"] = stats.build_ms;
        report["statistics"]["solve_ms"] = stats.solve_ms;
        report["gadgets"] = {{"universal_mode", opts.universal},
                             {"seed", opts.seed},
                             {"families", families_json(stats.lkn)}};
    }
    report["statistics"]["wall_ms"] = ms_since(t0);

    if (found) {
        report["result"] = {{"found", true}, {"weight", found->weight}, {"path", found->vertices}};
        emit(report, opts.json_out,
             "FOUND weight=" + std::to_string(found->weight) + " path=" + join_path(found->vertices));
        return 0;
    }
    report["result"] = {{"found", false}};
    emit(report, opts.json_out, "NOT FOUND");
    return 1;
}

int run_decide(const std::string& graph_file, int k, const std::string& method,
               const CommonOpts& opts) {
    kpath::WeightedDigraph g = kpath::parse_graph_file(graph_file);
    json report = {{"command", "decide"},
                   {"config", opts.config_json(method)},
                   {"statistics", json::object()},
                   {"gadgets", json::object()}};
    report["config"]["graph"] = graph_file;
    report["config"]["k"] = k;

    auto t0 = Clock::now();
    bool exists = false;
    std::vector<int> path;
    if (method == "oracle") {
        std::optional<kpath::PathResult> found =
            kpath::oracle::brute_min_wt_simple_kpath(g, std::nullopt, std::nullopt, k);
        exists = found.has_value();
        if (found) path = found->vertices;
    } else if (method == "nfa") {
        kpath::SolveReport stats;
        std::optional<kpath::PathResult> found = kpath::min_wt_simple_kpath(g, k, opts.config(), &stats);
        exists = found.has_value();
        if (found) path = found->vertices;
        report["statistics"] = lkn_stats_json(stats.lkn);
        report["statistics"]["regime"] = regime_name(stats.regime);
        report["gadgets"] = {{"universal_mode", opts.universal},
                             {"seed", opts.seed},
                             {"families", families_json(stats.lkn)}};
    } else {
        kpath::NxaDecision d = kpath::simple_kpath_exists_nxa(g, k, opts.config());
        exists = d.exists;
        path = d.witness_path;
        int empty = 0, nonempty = 0, skipped = 0;
        for (kpath::MemberOutcome m : d.members) {
            if (m == kpath::MemberOutcome::Empty) ++empty;
            else if (m == kpath::MemberOutcome::Nonempty) ++nonempty;
            else ++skipped;
        }
        report["gadgets"] = {{"covering_seed", d.seed},
                             {"covering_size", d.family_size},
                             {"covering_verified", d.verified},
                             {"witness_member", d.witness_member},
                             {"members_empty", empty},
                             {"members_nonempty", nonempty},
                             {"members_skipped", skipped}};
    }
    report["statistics"]["wall_ms"] = ms_since(t0);

    if (exists) {
        report["result"] = {{"exists", true}, {"path", path}};
        emit(report, opts.json_out,
             path.empty() ? std::string("EXISTS") : "EXISTS path=" + join_path(path));
        return 0;
    }
    report["result"] = {{"exists", false}};
    emit(report, opts.json_out, "ABSENT");
    return 1;
}

int run_build_lkn(int n, int k, bool greedy, std::optional<std::uint64_t> seed,
                  const std::string& dump, bool want_report, const CommonOpts& opts) {
    CommonOpts local = opts;
    if (seed) {
        local.universal = "random";
        local.seed = *seed;
    } else if (greedy) {
        local.universal = "greedy";
    }
    std::unique_ptr<kpath::UniversalProvider> provider;
    if (local.universal == "random")
        provider = std::make_unique<kpath::RandomUniversalProvider>(local.seed, true);
    else
        provider = std::make_unique<kpath::GreedyUniversalProvider>();

    auto t0 = Clock::now();
    auto [machine, build] = kpath::build_lkn(n, k, *provider, local.budget);
    double build_ms = ms_since(t0);

    if (!dump.empty()) {
        std::ofstream out(dump);
        if (!out) throw kpath::ParameterError("cannot open dump file: " + dump);
        out << kpath::nfa_to_text(machine);
    }

    json report = {{"command", "build lkn"},
                   {"config", local.config_json("nfa")},
                   {"result",
                    {{"states", build.states},
                     {"transitions", build.transitions},
                     {"size", build.size},
                     {"tree_size", build.tree_size},
                     {"depth", build.recursion_depth}}},
                   {"statistics", {{"build_ms", build_ms}, {"wall_ms", build_ms}}},
                   {"gadgets",
                    {{"universal_mode", local.universal},
                     {"seed", local.seed},
                     {"families", families_json(build)}}}};
    report["config"]["n"] = n;
    report["config"]["k"] = k;
    if (!dump.empty()) report["result"]["dump"] = dump;

    std::string human = "BUILT states=" + std::to_string(build.states) +
                        " transitions=" + std::to_string(build.transitions) +
                        " size=" + std::to_string(build.size) +
                        " depth=" + std::to_string(build.recursion_depth);
    if (want_report && !opts.json_out) {
        human += "\ntree_size=" + std::to_string(build.tree_size);
        for (const kpath::FamilyUse& f : build.families_used)
            human += "\nfamily ground=" + std::to_string(f.ground) + " k=" + std::to_string(f.k) +
                     " size=" + std::to_string(f.size);
    }
    emit(report, opts.json_out, human);
    return 0;
}

int run_gen(int n, std::int64_t m, kpath::Weight wmin, kpath::Weight wmax, std::uint64_t seed,
            const std::string& out_file, const CommonOpts& opts) {
    kpath::WeightedDigraph g = kpath::random_graph(n, m, wmin, wmax, seed);
    std::string text = kpath::serialize_graph(g);
    if (out_file == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_file);
        if (!out) throw kpath::ParameterError("cannot open output file: " + out_file);
        out << text;
    }
    json report = {{"command", "gen"},
                   {"config",
                    {{"n", n}, {"m", m}, {"wmin", wmin}, {"wmax", wmax}, {"seed", seed}}},
                   {"result", {{"n", g.n}, {"m", g.edges.size()}, {"out", out_file}}},
                   {"statistics", json::object()},
                   {"gadgets", json::object()}};
    if (out_file != "-")
        emit(report, opts.json_out, "WROTE " + out_file + " n=" + std::to_string(g.n) + " m=" +
                                        std::to_string(g.edges.size()));
    else if (opts.json_out)
        std::cout << report.dump() << "\n";
    return 0;
}

int run_verify_lkn(int max_n, int max_k, const CommonOpts& opts) {
    int cases = 0, failures = 0;
    std::string first_failure;
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= std::min(n, max_k); ++k) {
            kpath::GreedyUniversalProvider provider;
            auto [machine, build] = kpath::build_lkn(n, k, provider, opts.budget);
            ++cases;
            bool ok = kpath::oracle::enumerate_language(machine, n, k) ==
                      kpath::oracle::lkn_reference(n, k);
            if (ok && k + 1 <= n)
                ok = kpath::oracle::enumerate_language(machine, n, k + 1).empty();
            if (ok && k > 1)
                ok = kpath::oracle::enumerate_language(machine, n, k - 1).empty();
            if (!ok) {
                ++failures;
                if (first_failure.empty())
                    first_failure = "n=" + std::to_string(n) + " k=" + std::to_string(k);
            }
        }
    }
    json report = {{"command", "verify lkn"},
                   {"config", opts.config_json("nfa")},
                   {"result", {{"passed", failures == 0}, {"cases", cases}, {"failures", failures}}},
                   {"statistics", json::object()},
                   {"gadgets", json::object()}};
    report["config"]["max_n"] = max_n;
    report["config"]["max_k"] = max_k;
    emit(report, opts.json_out,
         failures == 0 ? "PASS cases=" + std::to_string(cases)
                       : "FAIL cases=" + std::to_string(cases) + " failures=" +
                             std::to_string(failures) + " first=" + first_failure);
    return failures == 0 ? 0 : 1;
}

int run_verify_universal(int n, int k, bool greedy, std::uint64_t seed, int trials,
                         const std::string& file, const CommonOpts& opts) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw kpath::ParameterError("cannot open family file: " + file);
        kpath::UniversalFamily f;
        f.n = n;
        f.k = k;
        f.provenance = kpath::FamilyProvenance::Exhaustive;
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#') continue;
            if (static_cast<int>(line.size()) != n)
                throw kpath::ParseError(line_no, "expected a binary string of length " +
                                                     std::to_string(n));
            kpath::BitString member(n);
            for (int i = 0; i < n; ++i) {
                if (line[i] != '0' && line[i] != '1')
                    throw kpath::ParseError(line_no, "expected only '0'/'1' characters");
                member.set(i, line[i] == '1');
            }
            f.members.push_back(std::move(member));
        }
        bool universal = kpath::verify_universal(f);
        json report = {{"command", "verify universal"},
                       {"config", opts.config_json("file")},
                       {"result", {{"passed", universal},
                                   {"verified", universal ? 1 : 0},
                                   {"total", 1},
                                   {"members", f.members.size()}}},
                       {"statistics", json::object()},
                       {"gadgets", json::object()}};
        report["config"]["n"] = n;
        report["config"]["k"] = k;
        report["config"]["file"] = file;
        emit(report, opts.json_out,
             std::string(universal ? "PASS" : "FAIL") + " members=" +
                 std::to_string(f.members.size()));
        return universal ? 0 : 1;
    }
    int verified = 0, total = 0;
    if (greedy) {
        kpath::UniversalFamily f = kpath::universal_greedy(n, k);
        total = 1;
        verified = f.verified ? 1 : 0;
    } else {
        total = trials;
        for (int i = 0; i < trials; ++i) {
            kpath::UniversalFamily f =
                kpath::universal_random(n, k, kpath::Rng::mix(seed, static_cast<std::uint64_t>(i), 1));
            if (kpath::verify_universal(f)) ++verified;
        }
    }
    bool passed = verified * 100 >= total * 95;
    json report = {{"command", "verify universal"},
                   {"config", opts.config_json(greedy ? "greedy" : "random")},
                   {"result", {{"passed", passed}, {"verified", verified}, {"total", total}}},
                   {"statistics", json::object()},
                   {"gadgets", json::object()}};
    report["config"]["n"] = n;
    report["config"]["k"] = k;
    emit(report, opts.json_out,
         (passed ? "PASS " : "FAIL ") + std::string("verified=") + std::to_string(verified) + "/" +
             std::to_string(total));
    return passed ? 0 : 1;
}

int run_verify_covering(int n, int k, std::uint64_t seed, int trials, const CommonOpts& opts) {
    int verified = 0;
    for (int i = 0; i < trials; ++i) {
        kpath::CoveringFamily f =
            kpath::covering_random(n, k, kpath::Rng::mix(seed, static_cast<std::uint64_t>(i), 2));
        if (kpath::verify_covering(f)) ++verified;
    }
    bool passed = verified * 100 >= trials * 95;
    json report = {{"command", "verify covering"},
                   {"config", opts.config_json("nxa")},
                   {"result", {{"passed", passed}, {"verified", verified}, {"total", trials}}},
                   {"statistics", json::object()},
                   {"gadgets", json::object()}};
    report["config"]["n"] = n;
    report["config"]["k"] = k;
    emit(report, opts.json_out,
         (passed ? "PASS " : "FAIL ") + std::string("verified=") + std::to_string(verified) + "/" +
             std::to_string(trials));
    return passed ? 0 : 1;
}

int run_verify_solver(int instances, int max_n, int max_k, const CommonOpts& opts) {
    int mismatches = 0;
    std::string first;
    for (int i = 0; i < instances; ++i) {
        kpath::Rng rng(kpath::Rng::mix(opts.seed, static_cast<std::uint64_t>(i), 3));
        int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 1)));
        std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
        std::int64_t m = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_m + 1)));
        int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(n, max_k))));
        kpath::WeightedDigraph g = kpath::random_graph(n, m, -10, 10, rng.next());
        int s = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        std::optional<kpath::PathResult> fast =
            kpath::min_wt_simple_st_kpath(g, s, t, k, opts.config());
        std::optional<kpath::PathResult> brute =
            kpath::oracle::brute_min_wt_simple_kpath(g, s, t, k);
        bool ok = fast.has_value() == brute.has_value() &&
                  (!fast || fast->weight == brute->weight);
        if (!ok) {
            ++mismatches;
            if (first.empty()) first = "instance " + std::to_string(i);
        }
    }
    bool passed = mismatches == 0;
    json report = {{"command", "verify solver"},
                   {"config", opts.config_json("nfa")},
                   {"result",
                    {{"passed", passed}, {"instances", instances}, {"mismatches", mismatches}}},
                   {"statistics", json::object()},
                   {"gadgets", json::object()}};
    emit(report, opts.json_out,
         passed ? "PASS instances=" + std::to_string(instances)
                : "FAIL mismatches=" + std::to_string(mismatches) + " first=" + first);
    return passed ? 0 : 1;
}

int run_bench(int max_k, const std::string& out_csv, const CommonOpts& opts) {
    constexpr std::int64_t kSolveCap = 5'000'000;  // skip the end-to-end solve above this size
    std::string csv = "k,n,states,transitions,size,build_ms,solve_ms\n";
    json rows = json::array();
    for (int k = 2; k <= max_k; ++k) {
        int n = 2 * k;
        kpath::GreedyUniversalProvider provider;
        auto t0 = Clock::now();
        auto [machine, build] = kpath::build_lkn(n, k, provider, opts.budget);
        double build_ms = ms_since(t0);
        double solve_ms = -1.0;
        if (build.size <= kSolveCap) {
            std::int64_t m = std::min<std::int64_t>(3 * n, static_cast<std::int64_t>(n) * (n - 1));
            kpath::WeightedDigraph g =
                kpath::random_graph(n, m, 0, 9, kpath::Rng::mix(42, static_cast<std::uint64_t>(k), 4));
            auto t1 = Clock::now();
            kpath::SolveConfig cfg = opts.config();
            (void)kpath::min_wt_simple_st_kpath(g, 1, n, k, cfg);
            solve_ms = ms_since(t1);
        }
        csv += std::to_string(k) + "," + std::to_string(n) + "," + std::to_string(build.states) +
               "," + std::to_string(build.transitions) + "," + std::to_string(build.size) + "," +
               std::to_string(build_ms) + "," + std::to_string(solve_ms) + "\n";
        rows.push_back({{"k", k},
                        {"n", n},
                        {"states", build.states},
                        {"transitions", build.transitions},
                        {"size", build.size},
                        {"build_ms", build_ms},
                        {"solve_ms", solve_ms}});
        if (!opts.json_out)
            std::cerr << "bench k=" << k << " size=" << build.size << " build_ms=" << build_ms
                      << " solve_ms=" << solve_ms << "\n";
    }
    if (!out_csv.empty()) {
        std::ofstream out(out_csv);
        if (!out) throw kpath::ParameterError("cannot open output file: " + out_csv);
        out << csv;
    }
    json report = {{"command", "bench"},
                   {"config", opts.config_json("nfa")},
                   {"result", {{"rows", rows}, {"csv", out_csv}}},
                   {"statistics", json::object()},
                   {"gadgets", json::object()}};
    report["config"]["max_k"] = max_k;
    emit(report, opts.json_out, csv.substr(0, csv.size() - 1));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-weight simple k-paths via automaton products"};
    app.require_subcommand(1);
    app.fallthrough(true);

    CommonOpts opts;
    try {
        opts.budget = env_budget(opts.budget);
    } catch (const kpath::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    app.add_option("--threads", opts.threads, "worker cap for parallel fan-out");
    app.add_flag("--json", opts.json_out, "one-line JSON report on stdout");

    // solve
    auto* solve = app.add_subcommand("solve", "minimum-weight simple k-path");
    std::string solve_graph, solve_method = "nfa";
    int solve_k = 0;
    std::optional<int> solve_s, solve_t;
    std::uint64_t solve_seed = 0;
    solve->add_option("--graph", solve_graph)->required();
    solve->add_option("--k", solve_k)->required();
    solve->add_option("--source", solve_s);
    solve->add_option("--target", solve_t);
    solve->add_option("--method", solve_method)->check(CLI::IsMember({"nfa", "oracle"}));
    solve->add_option("--seed", solve_seed);
    solve->add_option("--universal", opts.universal)->check(CLI::IsMember({"greedy", "random"}));

    // decide
    auto* decide = app.add_subcommand("decide", "does a simple k-path exist");
    std::string decide_graph, decide_method = "nxa";
    int decide_k = 0;
    std::uint64_t decide_seed = 0;
    decide->add_option("--graph", decide_graph)->required();
    decide->add_option("--k", decide_k)->required();
    decide->add_option("--method", decide_method)->check(CLI::IsMember({"nxa", "nfa", "oracle"}));
    decide->add_option("--seed", decide_seed);

    // build lkn
    auto* build = app.add_subcommand("build", "construct gadget automata");
    build->require_subcommand(1);
    auto* build_lkn_cmd = build->add_subcommand("lkn", "distinct-symbols constraint machine");
    int bl_n = 0, bl_k = 0;
    bool bl_greedy = false, bl_report = false;
    std::optional<std::uint64_t> bl_seed;
    std::string bl_dump;
    build_lkn_cmd->add_option("--n", bl_n)->required();
    build_lkn_cmd->add_option("--k", bl_k)->required();
    build_lkn_cmd->add_flag("--greedy", bl_greedy);
    build_lkn_cmd->add_option("--seed", bl_seed);
    build_lkn_cmd->add_option("--dump", bl_dump);
    build_lkn_cmd->add_flag("--report", bl_report);

    // gen
    auto* gen = app.add_subcommand("gen", "random weighted digraph");
    int gen_n = 0;
    std::int64_t gen_m = 0;
    kpath::Weight gen_wmin = 0, gen_wmax = 10;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--n", gen_n)->required();
    gen->add_option("--m", gen_m)->required();
    gen->add_option("--wmin", gen_wmin);
    gen->add_option("--wmax", gen_wmax);
    gen->add_option("--seed", gen_seed);
    gen->add_option("--out", gen_out)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "oracle cross-checks");
    verify->require_subcommand(1);
    auto* v_lkn = verify->add_subcommand("lkn", "language equality against enumeration");
    int vl_max_n = 5, vl_max_k = 4;
    v_lkn->add_option("--max-n", vl_max_n);
    v_lkn->add_option("--max-k", vl_max_k);
    auto* v_uni = verify->add_subcommand("universal", "pattern coverage of universal families");
    int vu_n = 6, vu_k = 3, vu_trials = 100;
    bool vu_greedy = false;
    std::uint64_t vu_seed = 0;
    std::string vu_file;
    v_uni->add_option("--n", vu_n);
    v_uni->add_option("--k", vu_k);
    v_uni->add_option("--trials", vu_trials);
    v_uni->add_option("--seed", vu_seed);
    v_uni->add_flag("--greedy", vu_greedy);
    v_uni->add_option("--file", vu_file, "verify one binary string per line as a family");
    auto* v_cov = verify->add_subcommand("covering", "full-rank coverage of matrix families");
    int vc_n = 6, vc_k = 3, vc_trials = 100;
    std::uint64_t vc_seed = 0;
    v_cov->add_option("--n", vc_n);
    v_cov->add_option("--k", vc_k);
    v_cov->add_option("--trials", vc_trials);
    v_cov->add_option("--seed", vc_seed);
    auto* v_sol = verify->add_subcommand("solver", "solver versus brute force");
    int vs_instances = 50, vs_max_n = 8, vs_max_k = 5;
    std::uint64_t vs_seed = 0;
    v_sol->add_option("--instances", vs_instances);
    v_sol->add_option("--max-n", vs_max_n);
    v_sol->add_option("--max-k", vs_max_k);
    v_sol->add_option("--seed", vs_seed);

    // bench
    auto* bench = app.add_subcommand("bench", "size and time growth across k");
    int bench_max_k = 8;
    std::string bench_out;
    bench->add_option("--max-k", bench_max_k);
    bench->add_option("--out", bench_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0; usage errors exit 2
    }

    try {
        if (solve->parsed()) {
            if (solve_s.has_value() != solve_t.has_value())
                throw kpath::ParameterError("--source and --target must be given together");
            opts.seed = solve_seed;
            return run_solve(solve_graph, solve_k, solve_s, solve_t, solve_method, opts);
        }
        if (decide->parsed()) {
            opts.seed = decide_seed;
            return run_decide(decide_graph, decide_k, decide_method, opts);
        }
        if (build->parsed() && build_lkn_cmd->parsed())
            return run_build_lkn(bl_n, bl_k, bl_greedy, bl_seed, bl_dump, bl_report, opts);
        if (gen->parsed()) return run_gen(gen_n, gen_m, gen_wmin, gen_wmax, gen_seed, gen_out, opts);
        if (verify->parsed()) {
            if (v_lkn->parsed()) return run_verify_lkn(vl_max_n, vl_max_k, opts);
            if (v_uni->parsed())
                return run_verify_universal(vu_n, vu_k, vu_greedy, vu_seed, vu_trials, vu_file, opts);
            if (v_cov->parsed()) return run_verify_covering(vc_n, vc_k, vc_seed, vc_trials, opts);
            if (v_sol->parsed()) {
                opts.seed = vs_seed;
                return run_verify_solver(vs_instances, vs_max_n, vs_max_k, opts);
            }
        }
        if (bench->parsed()) return run_bench(bench_max_k, bench_out, opts);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const kpath::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
