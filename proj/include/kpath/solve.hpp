#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kpath/graph.hpp"
#include "kpath/lkn.hpp"
#include "kpath/search.hpp"

namespace kpath {

enum class UniversalMode { Greedy, Randomized };

struct SolveConfig {
    std::uint64_t seed = 0;
    UniversalMode universal_mode = UniversalMode::Greedy;
    std::int64_t size_budget = 100'000'000;  // cap on the constraint machine size
    bool verify_gadgets = true;              // verify randomized families before use
    int threads = 1;                         // parallel fan-out in the parity decision
};

struct SolveReport {
    LknBuildReport lkn;
    int product_states = 0;
    std::int64_t product_transitions = 0;
    SearchRegime regime = SearchRegime::Dag;
    double build_ms = 0.0;  // constraint machine construction
    double solve_ms = 0.0;  // product + shortest accepting word
};

/// Minimum-weight simple path with exactly k vertices from s to t, as the
/// shortest accepted word of (distinct-symbols machine × path automaton).
/// Self-loops are ignored; k > n returns nullopt outright. Every witness is
/// re-validated independently before it is returned.
std::optional<PathResult> min_wt_simple_st_kpath(const WeightedDigraph& g, int s, int t,
                                                 int k, const SolveConfig& cfg = {},
                                                 SolveReport* report = nullptr);

/// Free-endpoint variant: two fresh terminals wired to every vertex with
/// 0-weight edges turn it into the (s,t) problem at k+2; the terminals are
/// stripped from the witness.
std::optional<PathResult> min_wt_simple_kpath(const WeightedDigraph& g, int k,
                                              const SolveConfig& cfg = {},
                                              SolveReport* report = nullptr);

enum class MemberOutcome { Empty, Nonempty, Skipped };

/// Outcome of the parity-based existence decision. `exists = true` is
/// definitive (the witness path is validated); `exists = false` is certain
/// only when `verified` is set, and otherwise one-sided with error
/// probability vanishing in the family's random draw.
struct NxaDecision {
    bool exists = false;
    bool verified = false;
    std::uint64_t seed = 0;
    int family_size = 0;
    int witness_member = -1;          // member whose product had odd parity
    std::vector<int> witness_path;    // k graph vertices when exists
    std::vector<MemberOutcome> members;
};

/// Decides whether a simple path with exactly k vertices exists: one parity
/// automaton per covering-family matrix, intersected with the two-terminal
/// path automaton, tested for parity-language emptiness. Aborts the fan-out
/// on the first nonempty member.
NxaDecision simple_kpath_exists_nxa(const WeightedDigraph& g, int k,
                                    const SolveConfig& cfg = {});

}  // namespace kpath
