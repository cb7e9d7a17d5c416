#include "kpath/solve.hpp"

#include <atomic>
#include <chrono>
#include <memory>
#include <mutex>
#include <thread>

#include "kpath/errors.hpp"
#include "kpath/nxa.hpp"
#include "kpath/oracle.hpp"
#include "kpath/universal.hpp"

namespace kpath {

namespace {

double ms_since(std::chrono::steady_clock::time_point from) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - from)
        .count();
}

std::unique_ptr<UniversalProvider> make_provider(const SolveConfig& cfg) {
    if (cfg.universal_mode == UniversalMode::Greedy)
        return std::make_unique<GreedyUniversalProvider>();
    return std::make_unique<RandomUniversalProvider>(cfg.seed, cfg.verify_gadgets);
}

void check_k(int k) {
    if (k < 1) throw ParameterError("k must be at least 1");
}

Weight path_weight(const WeightedDigraph& g, const std::vector<int>& path) {
    Weight total = 0;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        std::optional<Weight> w = g.edge_weight(path[i], path[i + 1]);
        if (!w)
            throw InternalError("witness path uses a missing edge (" +
                                std::to_string(path[i]) + "," + std::to_string(path[i + 1]) +
                                ")");
        total += *w;
    }
    return total;
}

void validate_witness(const WeightedDigraph& g, const std::vector<int>& path, int k,
                      std::optional<int> s, std::optional<int> t, Weight weight) {
    std::optional<std::string> fault = oracle::validate_simple_kpath(g, path, k, s, t, weight);
    if (fault) throw InternalError("solver produced an invalid witness: " + *fault);
}

}  // namespace

std::optional<PathResult> min_wt_simple_st_kpath(const WeightedDigraph& g, int s, int t,
                                                 int k, const SolveConfig& cfg,
                                                 SolveReport* report) {
    check_k(k);
    if (s < 1 || s > g.n || t < 1 || t > g.n)
        throw ParameterError("endpoint out of range [1," + std::to_string(g.n) + "]");
    if (k > g.n) return std::nullopt;  // pigeonhole: not enough distinct vertices

    WeightedDigraph work = strip_self_loops(g);
    std::unique_ptr<UniversalProvider> provider = make_provider(cfg);

    auto t0 = std::chrono::steady_clock::now();
    auto [machine, lkn_report] = build_lkn(work.n, k, *provider, cfg.size_budget);
    double build_ms = ms_since(t0);

    auto t1 = std::chrono::steady_clock::now();
    WeightedProduct product = weighted_product(machine, work, s, t);
    SearchRegime regime = SearchRegime::Dag;
    std::optional<PathResult> found = shortest_accepting_auto(product, &regime);
    double solve_ms = ms_since(t1);

    if (report) {
        report->lkn = lkn_report;
        report->product_states = product.nfa.num_states;
        report->product_transitions = static_cast<std::int64_t>(product.nfa.transitions.size());
        report->regime = regime;
        report->build_ms = build_ms;
        report->solve_ms = solve_ms;
    }
    if (!found) return std::nullopt;
    validate_witness(g, found->vertices, k, s, t, found->weight);
    return found;
}

std::optional<PathResult> min_wt_simple_kpath(const WeightedDigraph& g, int k,
                                              const SolveConfig& cfg, SolveReport* report) {
    check_k(k);
    if (k > g.n) return std::nullopt;
    SuperTerminals aug = add_super_terminals(strip_self_loops(g));
    std::optional<PathResult> found =
        min_wt_simple_st_kpath(aug.graph, aug.s, aug.t, k + 2, cfg, report);
    if (!found) return std::nullopt;
    // Drop the two terminals; the 0-weight terminal edges leave the weight intact.
    PathResult inner;
    inner.weight = found->weight;
    inner.product_trace = std::move(found->product_trace);
    inner.vertices.assign(found->vertices.begin() + 1, found->vertices.end() - 1);
    validate_witness(g, inner.vertices, k, std::nullopt, std::nullopt, inner.weight);
    return inner;
}

NxaDecision simple_kpath_exists_nxa(const WeightedDigraph& g, int k, const SolveConfig& cfg) {
    check_k(k);
    NxaDecision out;
    out.seed = cfg.seed;
    if (k > g.n) return out;  // pigeonhole: definitely no simple k-path

    SuperTerminals aug = add_super_terminals(strip_self_loops(g));
    const int width = aug.graph.n;  // n + 2 symbols
    const int length = k + 2;       // terminal-extended path length

    CoveringFamily family = covering_random(width, length, cfg.seed);
    if (cfg.verify_gadgets) {
        try {
            out.verified = verify_covering(family);
        } catch (const BudgetError&) {
            out.verified = false;  // verification priced out; stays one-sided
        }
    }
    out.family_size = static_cast<int>(family.members.size());
    out.members.assign(family.members.size(), MemberOutcome::Skipped);

    Nfa right = path_automaton(aug.graph, aug.s, aug.t);
    std::vector<Word> witnesses(family.members.size());

    auto evaluate = [&](int i) {
        Nxa chains = ryser_union(family.members[i]);
        Nxa product = nxa_intersect_dfa(chains, right);
        XorEmptiness result = xor_empty(product);
        if (result.empty) {
            out.members[i] = MemberOutcome::Empty;
            return false;
        }
        out.members[i] = MemberOutcome::Nonempty;
        witnesses[i] = std::move(result.witness);
        return true;
    };

    int threads = std::max(1, cfg.threads);
    if (threads == 1 || family.members.size() <= 1) {
        for (size_t i = 0; i < family.members.size(); ++i)
            if (evaluate(static_cast<int>(i))) break;
    } else {
        std::atomic<int> next{0};
        std::atomic<bool> found{false};
        auto worker = [&] {
            while (!found.load(std::memory_order_relaxed)) {
                int i = next.fetch_add(1);
                if (i >= static_cast<int>(family.members.size())) return;
                if (evaluate(i)) found.store(true, std::memory_order_relaxed);
            }
        };
        std::vector<std::thread> pool;
        int width_threads = std::min<int>(threads, static_cast<int>(family.members.size()));
        pool.reserve(width_threads);
        for (int i = 0; i < width_threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    for (size_t i = 0; i < out.members.size(); ++i) {
        if (out.members[i] != MemberOutcome::Nonempty) continue;
        out.exists = true;
        out.witness_member = static_cast<int>(i);
        const Word& word = witnesses[i];
        if (static_cast<int>(word.size()) != length)
            throw InternalError("parity witness word has the wrong length");
        out.witness_path.assign(word.begin() + 1, word.end() - 1);
        Weight w = path_weight(g, out.witness_path);
        validate_witness(g, out.witness_path, k, std::nullopt, std::nullopt, w);
        break;
    }
    return out;
}

}  // namespace kpath
