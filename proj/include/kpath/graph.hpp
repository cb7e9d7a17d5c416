#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kpath {

using Weight = std::int64_t;

/// Largest admissible edge-weight magnitude; keeps path sums far from
/// overflow even across the longest products we build.
inline constexpr Weight kMaxWeightMagnitude = Weight{1} << 40;

struct Edge {
    int u = 0, v = 0;
    Weight w = 0;
};

/// Directed graph with integer weights. Vertices are 1..n. The edge list is
/// canonical: sorted by (u,v), at most one edge per ordered pair (parallel
/// inputs collapse to the minimum weight). Self-loops may be stored; the
/// solvers strip them before searching.
struct WeightedDigraph {
    int n = 0;
    std::vector<Edge> edges;

    std::optional<Weight> edge_weight(int u, int v) const;
};

/// Builds a graph from raw edges: validates ranges, sorts, min-collapses
/// duplicate ordered pairs.
WeightedDigraph make_graph(int n, std::vector<Edge> edges);

/// Text format: '#' comment lines anywhere; one header "p <n> <m>" as the
/// first non-comment line; then exactly m lines "e <u> <v> <w>".
/// Errors carry the offending 1-based line number.
WeightedDigraph parse_graph(std::istream& in);
WeightedDigraph parse_graph_file(const std::string& path);

/// Canonical serialization; parse(serialize(g)) == g.
std::string serialize_graph(const WeightedDigraph& g);

/// m distinct ordered pairs (u != v) sampled uniformly without replacement;
/// weights uniform in [wmin, wmax]. Deterministic per seed.
WeightedDigraph random_graph(int n, std::int64_t m, Weight wmin, Weight wmax,
                             std::uint64_t seed);

struct SuperTerminals {
    WeightedDigraph graph;  // original graph plus the two terminals
    int s = 0, t = 0;       // s = n+1, t = n+2
};

/// Adds s = n+1 with 0-weight edges to every original vertex and t = n+2
/// with 0-weight edges from every original vertex.
SuperTerminals add_super_terminals(const WeightedDigraph& g);

WeightedDigraph strip_self_loops(const WeightedDigraph& g);

/// A witness path through the graph together with the product-automaton
/// trace that produced it.
struct PathResult {
    std::vector<int> vertices;
    Weight weight = 0;
    std::vector<int> product_trace;  // product state ids, start to accept
};

}  // namespace kpath
