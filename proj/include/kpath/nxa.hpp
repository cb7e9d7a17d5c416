#pragma once

#include <cstdint>
#include <vector>

#include "kpath/f2.hpp"
#include "kpath/nfa.hpp"

namespace kpath {

/// Parity-acceptance automaton: a word belongs to the language iff its
/// number of accepting runs is odd. ε-free by definition; duplicate
/// parallel transitions are rejected at construction because a doubled
/// transition cancels itself mod 2.
struct Nxa {
    int num_states = 0;
    int start = 0;
    std::vector<int> accepting;  // sorted, unique
    std::vector<Transition> transitions;

    int size() const { return num_states + static_cast<int>(transitions.size()); }
    bool is_accepting(int q) const;
};

/// Validates and normalizes: throws StructureError on ε labels or duplicate
/// (from,to,label) triples.
Nxa make_nxa(int num_states, int start, std::vector<int> accepting,
             std::vector<Transition> transitions);

/// Number of accepting runs of `word`, mod 2 (GF(2) vector propagation).
int count_accepting_paths_mod2(const Nxa& m, const Word& word);

/// Chain automaton for one nonempty row subset S of A (given as a bitmask
/// over rows): states q0..qk; level j advances to j+1 on every symbol i
/// whose column has odd parity on S. Accepts exactly the length-k words
/// over that symbol set.
Nxa ryser_chain(const BitMatrix& a, std::uint64_t s_mask);

/// Union of the 2^k - 1 chains sharing one start and one accept state;
/// interior states are per-chain. The parity language is exactly the index
/// words I with det(A_I) = 1 over GF(2). Guarded to k <= 20.
Nxa ryser_union(const BitMatrix& a);

/// Parity-preserving product with a deterministic ε-free automaton:
/// accepting-run counts multiply, so the parity language of the result is
/// the parity language of `m` intersected with L(d).
Nxa nxa_intersect_dfa(const Nxa& m, const Nfa& d);

struct XorEmptiness {
    bool empty = true;
    Word witness;  // filled when nonempty
};

/// Parity-language emptiness via GF(2) span closure of the reachable
/// configuration vectors: empty iff the closed span is orthogonal to the
/// accepting indicator. Every inserted basis vector is a literal word
/// image, so the first one with odd accepting parity yields the witness.
XorEmptiness xor_empty(const Nxa& m);

}  // namespace kpath
