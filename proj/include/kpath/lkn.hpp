#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kpath/nfa.hpp"
#include "kpath/universal.hpp"

namespace kpath {

struct FamilyUse {
    int ground = 0;  // size of the symbol set the family was requested for
    int k = 0;
    int size = 0;
};

struct LknBuildReport {
    int n = 0, k = 0;
    int states = 0;
    std::int64_t transitions = 0;
    std::int64_t size = 0;            // states + transitions, sub-machines shared
    std::uint64_t tree_size = 0;      // the same construction without sharing
    int recursion_depth = 0;
    std::vector<FamilyUse> families_used;
};

/// Acyclic automaton accepting exactly the length-k words over [n] with
/// pairwise-distinct symbols. Built by halving recursion: the start state
/// dispatches by ε to one branch per member T of a universal family over
/// the current symbol set S; a branch reads ceil(k/2) distinct symbols from
/// S∩T and then floor(k/2) from S∖T. Equal sub-problems (same k, symbol
/// set, and continuation) are shared. Throws BudgetError when the running
/// size exceeds `budget`.
std::pair<Nfa, LknBuildReport> build_lkn(int n, int k, UniversalProvider& provider,
                                         std::int64_t budget = 100'000'000);

/// Same construction restricted to an arbitrary symbol set: accepts exactly
/// the length-k words with pairwise-distinct symbols drawn from `symbols`
/// (a bit set over the 0-based alphabet positions; symbol i+1 <-> bit i).
Nfa build_lkn_over(const BitString& symbols, int k, UniversalProvider& provider,
                   std::int64_t budget = 100'000'000);

/// Depth of the halving recursion k -> ceil(k/2) -> ... -> 1.
int lkn_recursion_depth(int k);

/// Sum of sub-problem lengths along the first-half chain:
/// k + ceil(k/2) + ceil(ceil(k/2)/2) + ... + 1.
int lkn_length_sum(int k);

/// 2^k word pairs: for each subset S of [k], x_S is the ascending word of
/// S and y_S the ascending word of [k] \ S. Every diagonal concatenation
/// x_S y_S lies in the distinct-symbols language; every off-diagonal one
/// does not. Requires k <= n.
std::vector<std::pair<Word, Word>> fooling_pairs(int k, int n);

/// True iff m accepts every diagonal concatenation and rejects every
/// off-diagonal one. Any automaton for the distinct-symbols language must
/// pass, and passing forces at least 2^k states.
bool check_fooling_separation(const Nfa& m, const std::vector<std::pair<Word, Word>>& pairs);

}  // namespace kpath
