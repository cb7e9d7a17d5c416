#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kpath/graph.hpp"

namespace kpath {

/// Symbols are graph vertices, 1-based; 0 is the reserved ε label.
using Symbol = int;
inline constexpr Symbol kEpsilon = 0;
using Word = std::vector<Symbol>;

struct Transition {
    int from = 0, to = 0;
    Symbol label = kEpsilon;
    Weight weight = 0;

    bool operator==(const Transition&) const = default;
};

/// Nondeterministic finite automaton with optional ε-transitions and
/// optional transition weights. A run that reads the whole word counts only
/// if it ends in an accepting state; a stuck run rejects.
struct Nfa {
    int num_states = 0;
    int start = 0;
    std::vector<int> accepting;  // kept sorted and unique
    std::vector<Transition> transitions;

    int size() const { return num_states + static_cast<int>(transitions.size()); }

    void add_transition(int from, int to, Symbol label, Weight w = 0) {
        transitions.push_back({from, to, label, w});
    }

    void set_accepting(std::vector<int> states);
    bool is_accepting(int q) const;
    bool has_epsilon() const;
    Symbol max_symbol() const;
};

/// Path automaton of (G, s, t): states V ∪ {q0}; q0→s labeled s; each edge
/// (u,v) becomes a transition u→v labeled v carrying w(u,v). Deterministic;
/// its language is exactly the words s·v1⋯vm·t that spell (s,t)-paths.
Nfa path_automaton(const WeightedDigraph& g, int s, int t);

/// Product construction, restricted to pairs reachable from the start pair.
/// ε-transitions are allowed in m1 only; they advance the left component
/// while the right stands still. Product weights are the component sums.
struct ProductBuild {
    Nfa nfa;
    std::vector<std::pair<int, int>> pair_of_state;  // product state -> (left, right)
};
ProductBuild intersect_pairs(const Nfa& m1, const Nfa& m2);
Nfa intersect(const Nfa& m1, const Nfa& m2);

/// Subset simulation with ε-closures.
bool accepts(const Nfa& m, const Word& word);

bool is_acyclic(const Nfa& m);

/// Topological order of states (ε included). Throws StructureError carrying
/// a witness cycle if the automaton is cyclic.
std::vector<int> topological_order(const Nfa& m);

/// Keeps exactly the states both reachable from the start and co-reachable
/// to an accepting state; renumbers densely. Idempotent. The start state is
/// retained even when the language is empty.
Nfa reachable_trim(const Nfa& m);

/// ε-free automaton with the same language. Requires all ε-weights to be 0
/// and throws StructureError on ε-cycles. Unreachable states are dropped.
Nfa eliminate_epsilon(const Nfa& m);

/// If m has several accepting states, adds a fresh ε-sink accepting state;
/// otherwise returns m unchanged.
Nfa wrap_single_accept(const Nfa& m);

/// ε-free with at most one transition per (state, label).
bool is_deterministic(const Nfa& m);

/// Debug text form: header "nfa <num_states> <num_transitions> <start>",
/// one "f <state>" line per accepting state, one
/// "t <from> <to> <label|eps> <weight>" line per transition.
std::string nfa_to_text(const Nfa& m);

}  // namespace kpath
