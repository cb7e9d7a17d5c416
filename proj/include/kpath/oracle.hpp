#pragma once

#include <optional>
#include <set>
#include <string>

#include "kpath/graph.hpp"
#include "kpath/nfa.hpp"
#include "kpath/nxa.hpp"

namespace kpath::oracle {

/// Brute-force reference results. Everything in this namespace is written
/// as plainly as possible and shares no helper code with the solvers it
/// cross-checks.

/// Exhaustive DFS over simple paths with k vertices. Optional endpoint
/// pins; ties broken toward the lexicographically smallest vertex sequence.
/// Guarded to n <= 12, k <= 8.
std::optional<PathResult> brute_min_wt_simple_kpath(const WeightedDigraph& g,
                                                    std::optional<int> s,
                                                    std::optional<int> t, int k);

/// The set of words of length k over [n] accepted by m (plain subset
/// simulation per word). Guarded to n^k <= 1e7.
std::set<Word> enumerate_language(const Nfa& m, int n, int k);

/// Words of length k over [n] whose accepting-path count is odd.
std::set<Word> enumerate_parity_language(const Nxa& m, int n, int k);

/// All length-k words over [n] with pairwise-distinct symbols, in sorted
/// order, plus the falling-factorial count check n(n-1)...(n-k+1).
std::set<Word> lkn_reference(int n, int k);

/// Independent witness check: path has exactly k vertices, all distinct,
/// consecutive pairs are edges, endpoints match when pinned, and the edge
/// weights re-sum to `weight`. Returns an explanation on failure.
std::optional<std::string> validate_simple_kpath(const WeightedDigraph& g,
                                                 const std::vector<int>& path, int k,
                                                 std::optional<int> s, std::optional<int> t,
                                                 Weight weight);

}  // namespace kpath::oracle
