#include <doctest.h>

#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "kpath/errors.hpp"
#include "kpath/f2.hpp"
#include "kpath/nfa.hpp"
#include "kpath/nxa.hpp"
#include "kpath/oracle.hpp"
#include "kpath/rng.hpp"

using namespace kpath;

namespace {

BitMatrix identity(int k) {
    BitMatrix a(k, k);
    for (int i = 0; i < k; ++i) a.set(i, i, true);
    return a;
}

/// Sum over nonempty row subsets S of the product over word positions of the
/// S-row-sum of the selected column, mod 2 — the expansion the library's
/// Gaussian determinant must match.
int ryser_sum(const BitMatrix& a, const std::vector<int>& index) {
    const int k = a.rows();
    int total = 0;
    for (std::uint32_t s = 1; s < (1u << k); ++s) {
        int prod = 1;
        for (int pos = 0; pos < k && prod; ++pos) {
            int col_sum = 0;
            for (int r = 0; r < k; ++r)
                if ((s >> r) & 1u) col_sum ^= a.at(r, index[pos] - 1) ? 1 : 0;
            prod = col_sum;
        }
        total ^= prod;
    }
    return total;
}

/// Literal run enumeration, counting accepting runs of the word.
long count_runs(const Nxa& m, const Word& w, int q, size_t i) {
    if (i == w.size()) return m.is_accepting(q) ? 1 : 0;
    long total = 0;
    for (const auto& t : m.transitions)
        if (t.from == q && t.label == w[i]) total += count_runs(m, w, t.to, i + 1);
    return total;
}

Nxa random_nxa(int states, int alphabet, int transitions, std::uint64_t seed) {
    Rng rng(seed);
    std::set<std::tuple<int, int, int>> used;
    while (static_cast<int>(used.size()) < transitions) {
        used.insert({static_cast<int>(rng.below(states)), static_cast<int>(rng.below(states)),
                     1 + static_cast<int>(rng.below(alphabet))});
    }
    std::vector<Transition> ts;
    for (auto [f, t, l] : used) ts.push_back({f, t, l, 0});
    std::vector<int> acc;
    for (int q = 0; q < states; ++q)
        if (rng.coin()) acc.push_back(q);
    if (acc.empty()) acc.push_back(states - 1);
    return make_nxa(states, 0, acc, ts);
}

Nfa everything_dfa(int n) {
    Nfa d;
    d.num_states = 1;
    d.start = 0;
    d.set_accepting({0});
    for (int v = 1; v <= n; ++v) d.add_transition(0, 0, v);
    return d;
}

std::set<Word> parity_language_to_length(const Nxa& m, int n, int max_len) {
    std::set<Word> all;
    for (int len = 0; len <= max_len; ++len)
        for (const Word& w : oracle::enumerate_parity_language(m, n, len)) all.insert(w);
    return all;
}

}  // namespace

TEST_CASE("bit matrices store entries column-packed") {
    BitMatrix a(2, 3);
    a.set(0, 1, true);
    a.set(1, 2, true);
    CHECK(a.at(0, 1));
    CHECK_FALSE(a.at(1, 1));
    CHECK(a.column(1) == 1u);
    CHECK(a.column(2) == 2u);
    CHECK(a.column(0) == 0u);
    CHECK(identity(2).hex_rows() == std::vector<std::string>{"1", "2"});
}

TEST_CASE("random bit matrices are deterministic per seed") {
    auto a = random_bit_matrix(3, 5, 11);
    auto b = random_bit_matrix(3, 5, 11);
    CHECK(a == b);
    auto c = random_bit_matrix(3, 5, 12);
    CHECK_FALSE(a == c);
}

TEST_CASE("determinant of the identity selection is 1") {
    auto a = identity(3);
    CHECK(phi_det(a, {1, 2, 3}) == 1);
    CHECK(phi_det(a, {2, 1, 3}) == 1);  // permutations stay invertible mod 2
}

TEST_CASE("determinant with a repeated index is 0") {
    auto a = random_bit_matrix(3, 5, 21);
    CHECK(phi_det(a, {1, 1, 2}) == 0);
    CHECK(phi_det(a, {4, 3, 4}) == 0);
}

TEST_CASE("Gaussian determinant equals the explicit subset expansion") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto a = random_bit_matrix(3, 5, seed * 17);
        std::vector<int> index(3);
        for (index[0] = 1; index[0] <= 5; ++index[0])
            for (index[1] = 1; index[1] <= 5; ++index[1])
                for (index[2] = 1; index[2] <= 5; ++index[2])
                    CHECK(phi_det(a, index) == ryser_sum(a, index));
    }
}

TEST_CASE("column rank is computed over GF(2)") {
    auto a = identity(3);
    CHECK(gf2_rank_of_columns(a, {1, 2, 3}) == 3);
    CHECK(gf2_rank_of_columns(a, {1, 1, 2}) == 2);
    BitMatrix z(2, 2);
    CHECK(gf2_rank_of_columns(z, {1, 2}) == 0);
}

TEST_CASE("chain machine of the identity on row subset {1} accepts exactly '1 1'") {
    auto m = ryser_chain(identity(2), 1u);
    CHECK(m.num_states == 3);
    CHECK(m.transitions.size() == 2);  // k * |T| with T = {1}
    CHECK(count_accepting_paths_mod2(m, {1, 1}) == 1);
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            if (!(a == 1 && b == 1)) CHECK(count_accepting_paths_mod2(m, {a, b}) == 0);
}

TEST_CASE("chain machine with an all-even column selection is empty") {
    BitMatrix z(2, 3);
    auto m = ryser_chain(z, 1u);
    CHECK(m.transitions.empty());
    CHECK(oracle::enumerate_parity_language(m, 3, 2).empty());
}

TEST_CASE("chain machine rejects an empty row subset") {
    CHECK_THROWS_AS(ryser_chain(identity(2), 0u), ParameterError);
}

TEST_CASE("union machine for k=1 lists the odd entries of the single row") {
    BitMatrix a(1, 3);
    a.set(0, 0, true);
    a.set(0, 2, true);
    auto u = ryser_union(a);
    CHECK(oracle::enumerate_parity_language(u, 3, 1) == std::set<Word>{{1}, {3}});
}

TEST_CASE("union machine of the 2x2 identity has parity language {12,21}") {
    auto u = ryser_union(identity(2));
    CHECK(oracle::enumerate_parity_language(u, 2, 2) == std::set<Word>{{1, 2}, {2, 1}});
    CHECK(oracle::enumerate_parity_language(u, 2, 1).empty());
}

TEST_CASE("union machine parity language is the invertible-selection set") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        auto a = random_bit_matrix(3, 5, seed * 29 + 1);
        auto u = ryser_union(a);
        std::set<Word> expect;
        std::vector<int> index(3);
        for (index[0] = 1; index[0] <= 5; ++index[0])
            for (index[1] = 1; index[1] <= 5; ++index[1])
                for (index[2] = 1; index[2] <= 5; ++index[2])
                    if (phi_det(a, index)) expect.insert(Word(index.begin(), index.end()));
        CHECK(oracle::enumerate_parity_language(u, 5, 3) == expect);
    }
}

TEST_CASE("union machine size stays within the chain accounting") {
    const int k = 3, n = 5;
    auto u = ryser_union(random_bit_matrix(k, n, 3));
    const int chains = (1 << k) - 1;
    CHECK(u.num_states == 2 + chains * (k - 1));
    CHECK(static_cast<int>(u.transitions.size()) <= chains * k * n);
}

TEST_CASE("union machine refuses k beyond the chain-count cap") {
    CHECK_THROWS_AS(ryser_union(BitMatrix(21, 3)), BudgetError);
}

TEST_CASE("run-count parity distinguishes even from odd duplication") {
    // two parallel two-edge routes accepting the same word -> even
    Nxa even = make_nxa(4, 0, {3},
                        {{0, 1, 1, 0}, {0, 2, 1, 0}, {1, 3, 2, 0}, {2, 3, 2, 0}});
    CHECK(count_accepting_paths_mod2(even, {1, 2}) == 0);
    CHECK(count_runs(even, {1, 2}, 0, 0) == 2);

    Nxa chain = make_nxa(3, 0, {2}, {{0, 1, 1, 0}, {1, 2, 2, 0}});
    CHECK(count_accepting_paths_mod2(chain, {1, 2}) == 1);
}

TEST_CASE("run-count parity matches literal run enumeration") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto m = random_nxa(4 + seed % 3, 3, 9, seed * 101);
        for (int len = 0; len <= 3; ++len) {
            std::vector<int> idx(len, 1);
            for (;;) {
                Word word(idx.begin(), idx.end());
                CHECK(count_accepting_paths_mod2(m, word) ==
                      static_cast<int>(count_runs(m, word, m.start, 0) % 2));
                int p = len - 1;
                while (p >= 0 && idx[p] == 3) idx[p--] = 1;
                if (p < 0) break;
                ++idx[p];
            }
        }
    }
}

TEST_CASE("covering families have the pinned size and are deterministic") {
    auto f = covering_random(8, 3, 5);
    CHECK(f.members.size() == 18);  // ceil(2k log2 n)
    auto g = covering_random(6, 3, 5);
    CHECK(g.members.size() == 16);
    auto g2 = covering_random(6, 3, 5);
    REQUIRE(g.members.size() == g2.members.size());
    for (size_t i = 0; i < g.members.size(); ++i) CHECK(g.members[i] == g2.members[i]);
    for (const auto& m : f.members) {
        CHECK(m.rows() == 3);
        CHECK(m.cols() == 8);
    }
    CHECK_FALSE(f.verified);
}

TEST_CASE("verify_covering accepts an identity member and rejects all-zero families") {
    CoveringFamily id;
    id.n = 3;
    id.k = 3;
    id.members.push_back(identity(3));
    CHECK(verify_covering(id));
    CHECK(id.verified);

    CoveringFamily zero;
    zero.n = 3;
    zero.k = 2;
    zero.members.push_back(BitMatrix(2, 3));
    CHECK_FALSE(verify_covering(zero));
}

TEST_CASE("verify_covering refuses oversized instances") {
    CoveringFamily f;
    f.n = 40;
    f.k = 20;
    CHECK_THROWS_AS(verify_covering(f), BudgetError);
}

TEST_CASE("random covering families at the pinned size usually verify") {
    int ok = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto f = covering_random(6, 3, seed);
        if (verify_covering(f)) ++ok;
    }
    CHECK(ok >= 17);
}

TEST_CASE("product with an accept-everything DFA preserves the parity language") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto m = random_nxa(5, 3, 8, seed * 7);
        auto prod = nxa_intersect_dfa(m, everything_dfa(3));
        CHECK(parity_language_to_length(prod, 3, 3) == parity_language_to_length(m, 3, 3));
    }
}

TEST_CASE("product run parity multiplies the component parities") {
    Nxa even = make_nxa(4, 0, {3},
                        {{0, 1, 1, 0}, {0, 2, 1, 0}, {1, 3, 2, 0}, {2, 3, 2, 0}});
    auto prod = nxa_intersect_dfa(even, everything_dfa(2));
    CHECK(count_accepting_paths_mod2(prod, {1, 2}) == 0);
}

TEST_CASE("product rejects nondeterministic or epsilon right operands") {
    auto m = random_nxa(3, 2, 4, 9);
    Nfa nondet;
    nondet.num_states = 2;
    nondet.start = 0;
    nondet.add_transition(0, 0, 1);
    nondet.add_transition(0, 1, 1);
    nondet.set_accepting({1});
    CHECK_THROWS_AS(nxa_intersect_dfa(m, nondet), ParameterError);

    Nfa eps;
    eps.num_states = 2;
    eps.start = 0;
    eps.add_transition(0, 1, kEpsilon);
    eps.set_accepting({1});
    CHECK_THROWS_AS(nxa_intersect_dfa(m, eps), ParameterError);
}

TEST_CASE("xor emptiness is immediate without accepting states") {
    Nxa m = make_nxa(2, 0, {}, {{0, 1, 1, 0}});
    auto r = xor_empty(m);
    CHECK(r.empty);
}

TEST_CASE("xor emptiness finds the chain witness") {
    Nxa chain = make_nxa(3, 0, {2}, {{0, 1, 1, 0}, {1, 2, 2, 0}});
    auto r = xor_empty(chain);
    REQUIRE_FALSE(r.empty);
    CHECK(r.witness == Word{1, 2});
    CHECK(count_accepting_paths_mod2(chain, r.witness) == 1);
}

TEST_CASE("xor emptiness agrees with exhaustive parity enumeration") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto m = random_nxa(2 + seed % 4, 3, 3 + seed % 7, seed * 31);
        auto r = xor_empty(m);
        const bool oracle_empty = parity_language_to_length(m, 3, 5).empty();
        CHECK(r.empty == oracle_empty);
        if (!r.empty) CHECK(count_accepting_paths_mod2(m, r.witness) == 1);
    }
}

TEST_CASE("construction rejects duplicate parallel transitions and epsilon labels") {
    CHECK_THROWS_AS(make_nxa(2, 0, {1}, {{0, 1, 1, 0}, {0, 1, 1, 0}}), StructureError);
    CHECK_THROWS_AS(make_nxa(2, 0, {1}, {{0, 1, kEpsilon, 0}}), StructureError);
}
