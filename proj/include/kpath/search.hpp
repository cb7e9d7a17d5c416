#pragma once

#include <optional>
#include <vector>

#include "kpath/graph.hpp"
#include "kpath/nfa.hpp"

namespace kpath {

/// Product of a constraint automaton with the path automaton of (G, s, t),
/// restricted to reachable pairs. Exactly one accepting state (an ε-sink is
/// added to the left operand first when it has several).
struct WeightedProduct {
    Nfa nfa;
    std::vector<int> right_projection;  // product state -> graph vertex, 0 for q0
    bool left_acyclic = false;          // forces the whole product acyclic
};

WeightedProduct weighted_product(const Nfa& m, const WeightedDigraph& g, int s, int t);

/// Shortest accepting path by Bellman-Ford. A negative cycle that can reach
/// the accepting state is reported as an error.
std::optional<PathResult> shortest_accepting_bellman_ford(const WeightedProduct& p);

/// Binary-heap Dijkstra; rejects negative weights.
std::optional<PathResult> shortest_accepting_dijkstra(const WeightedProduct& p);

/// Relaxation in topological order; rejects cyclic products, accepts
/// negative weights.
std::optional<PathResult> shortest_accepting_dag(const WeightedProduct& p);

enum class SearchRegime { Dag, Dijkstra, BellmanFord };

/// DAG when acyclic, else Dijkstra when weights are non-negative, else
/// Bellman-Ford.
std::optional<PathResult> shortest_accepting_auto(const WeightedProduct& p,
                                                  SearchRegime* used = nullptr);

/// Graph vertices visited along a product trace: the right component of
/// each state where it changed (ε-steps stand still; the q0 origin is
/// dropped).
std::vector<int> project_to_graph_path(const WeightedProduct& p,
                                       const std::vector<int>& product_trace);

}  // namespace kpath
