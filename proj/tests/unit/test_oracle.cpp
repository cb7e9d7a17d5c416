#include <doctest.h>

#include <optional>
#include <set>

#include "kpath/errors.hpp"
#include "kpath/graph.hpp"
#include "kpath/nfa.hpp"
#include "kpath/oracle.hpp"

using namespace kpath;

namespace {

WeightedDigraph complete_digraph(int n, Weight w) {
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (u != v) edges.push_back({u, v, w});
    return make_graph(n, edges);
}

}  // namespace

TEST_CASE("brute force on the three-cycle") {
    auto g = make_graph(3, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}});
    auto r = oracle::brute_min_wt_simple_kpath(g, 1, 3, 3);
    REQUIRE(r.has_value());
    CHECK(r->weight == 2);
    CHECK(r->vertices == std::vector<int>{1, 2, 3});
}

TEST_CASE("brute force respects pigeonhole and the trivial path") {
    auto g = make_graph(3, {{1, 2, 1}});
    CHECK_FALSE(oracle::brute_min_wt_simple_kpath(g, std::nullopt, std::nullopt, 4).has_value());

    auto single = make_graph(1, {});
    auto r = oracle::brute_min_wt_simple_kpath(single, std::nullopt, std::nullopt, 1);
    REQUIRE(r.has_value());
    CHECK(r->weight == 0);
    CHECK(r->vertices == std::vector<int>{1});
}

TEST_CASE("brute force ties break to the lexicographically smallest path") {
    auto g = complete_digraph(4, 0);
    auto free_pick = oracle::brute_min_wt_simple_kpath(g, std::nullopt, std::nullopt, 3);
    REQUIRE(free_pick.has_value());
    CHECK(free_pick->vertices == std::vector<int>{1, 2, 3});
    auto fixed_pick = oracle::brute_min_wt_simple_kpath(g, 2, std::nullopt, 3);
    REQUIRE(fixed_pick.has_value());
    CHECK(fixed_pick->vertices == std::vector<int>{2, 1, 3});
}

TEST_CASE("brute force honors endpoint constraints") {
    auto g = make_graph(3, {{1, 2, 5}, {2, 3, 5}, {1, 3, 100}});
    auto r = oracle::brute_min_wt_simple_kpath(g, 1, 3, 2);
    REQUIRE(r.has_value());
    CHECK(r->weight == 100);
    CHECK_FALSE(oracle::brute_min_wt_simple_kpath(g, 3, 1, 2).has_value());
}

TEST_CASE("brute force refuses beyond the desk-scale budget") {
    auto big = complete_digraph(13, 1);
    CHECK_THROWS_AS(oracle::brute_min_wt_simple_kpath(big, std::nullopt, std::nullopt, 3),
                    BudgetError);
    auto g = complete_digraph(4, 1);
    CHECK_THROWS_AS(oracle::brute_min_wt_simple_kpath(g, std::nullopt, std::nullopt, 9),
                    BudgetError);
}

TEST_CASE("language reference counts the falling factorial") {
    CHECK(oracle::lkn_reference(4, 2).size() == 12);
    CHECK(oracle::lkn_reference(3, 3).size() == 6);
    CHECK(oracle::lkn_reference(2, 3).empty());
    for (int n = 1; n <= 5; ++n) {
        std::uint64_t expect = 1;
        for (int k = 1; k <= n; ++k) {
            expect *= static_cast<std::uint64_t>(n - k + 1);
            CHECK(oracle::lkn_reference(n, k).size() == expect);
        }
    }
}

TEST_CASE("language reference for k=n counts permutations on the complete digraph") {
    // every permutation of [n] is a simple n-path of the complete digraph
    for (int n = 1; n <= 5; ++n) {
        std::uint64_t fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(oracle::lkn_reference(n, n).size() == fact);
        auto g = complete_digraph(n, 0);
        auto r = oracle::brute_min_wt_simple_kpath(g, std::nullopt, std::nullopt, n);
        if (n >= 2) {
            REQUIRE(r.has_value());
            CHECK(r->weight == 0);
        }
    }
}

TEST_CASE("language enumeration runs the machine on every word") {
    Nfa chain;
    chain.num_states = 3;
    chain.start = 0;
    chain.add_transition(0, 1, 1);
    chain.add_transition(1, 2, 2);
    chain.set_accepting({2});
    CHECK(oracle::enumerate_language(chain, 2, 2) == std::set<Word>{{1, 2}});
    CHECK(oracle::enumerate_language(chain, 2, 1).empty());
    CHECK(oracle::enumerate_language(chain, 2, 0).empty());

    Nfa empty;
    empty.num_states = 1;
    empty.start = 0;
    CHECK(oracle::enumerate_language(empty, 3, 2).empty());
}

TEST_CASE("language enumeration refuses oversized word spaces") {
    Nfa m;
    m.num_states = 1;
    m.start = 0;
    m.set_accepting({0});
    CHECK_THROWS_AS(oracle::enumerate_language(m, 10, 8), BudgetError);
}

TEST_CASE("the validator accepts exactly the advertised witnesses") {
    auto g = make_graph(3, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}});
    CHECK_FALSE(oracle::validate_simple_kpath(g, {1, 2, 3}, 3, 1, 3, 2).has_value());
    CHECK_FALSE(oracle::validate_simple_kpath(g, {1, 2}, 2, std::nullopt, std::nullopt, 1)
                    .has_value());

    // wrong length
    CHECK(oracle::validate_simple_kpath(g, {1, 2}, 3, std::nullopt, std::nullopt, 1).has_value());
    // repeated vertex
    CHECK(oracle::validate_simple_kpath(g, {1, 2, 1}, 3, std::nullopt, std::nullopt, 2)
              .has_value());
    // missing edge
    CHECK(oracle::validate_simple_kpath(g, {1, 3, 2}, 3, std::nullopt, std::nullopt, 2)
              .has_value());
    // endpoint mismatches
    CHECK(oracle::validate_simple_kpath(g, {1, 2, 3}, 3, 2, std::nullopt, 2).has_value());
    CHECK(oracle::validate_simple_kpath(g, {1, 2, 3}, 3, std::nullopt, 2, 2).has_value());
    // wrong weight
    CHECK(oracle::validate_simple_kpath(g, {1, 2, 3}, 3, 1, 3, 5).has_value());
    // out-of-range vertex
    CHECK(oracle::validate_simple_kpath(g, {1, 2, 4}, 3, std::nullopt, std::nullopt, 2)
              .has_value());
}

TEST_CASE("oracle results always pass the validator") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = random_graph(6, 15, -8, 8, seed * 59);
        for (int k = 1; k <= 4; ++k) {
            auto r = oracle::brute_min_wt_simple_kpath(g, std::nullopt, std::nullopt, k);
            if (!r) continue;
            auto reason =
                oracle::validate_simple_kpath(g, r->vertices, k, std::nullopt, std::nullopt,
                                              r->weight);
            CHECK_MESSAGE(!reason.has_value(), reason.value_or(""));
        }
    }
}
