#include "kpath/search.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "kpath/errors.hpp"

namespace kpath {

namespace {

constexpr Weight kInfinite = std::numeric_limits<Weight>::max() / 4;

/// Transition indices grouped by source state, original order preserved.
struct Outgoing {
    std::vector<int> order;
    std::vector<int> first;

    explicit Outgoing(const Nfa& m) : first(m.num_states + 1, 0) {
        order.resize(m.transitions.size());
        for (const Transition& t : m.transitions) ++first[t.from + 1];
        for (int q = 0; q < m.num_states; ++q) first[q + 1] += first[q];
        std::vector<int> cursor(first.begin(), first.end() - 1);
        for (int i = 0; i < static_cast<int>(m.transitions.size()); ++i)
            order[cursor[m.transitions[i].from]++] = i;
    }
};

std::optional<int> single_accept(const Nfa& m) {
    if (m.accepting.empty()) return std::nullopt;
    if (m.accepting.size() != 1)
        throw InternalError("weighted product must have a single accepting state");
    return m.accepting.front();
}

std::optional<PathResult> assemble(const WeightedProduct& p, const std::vector<Weight>& dist,
                                   const std::vector<int>& parent, int accept) {
    if (dist[accept] >= kInfinite) return std::nullopt;
    std::vector<int> trace;
    int at = accept;
    while (at >= 0) {
        trace.push_back(at);
        if (static_cast<int>(trace.size()) > p.nfa.num_states)
            throw InternalError("parent chain cycles while rebuilding a shortest path");
        at = parent[at];
    }
    std::reverse(trace.begin(), trace.end());
    if (trace.front() != p.nfa.start)
        throw InternalError("parent chain does not reach the start state");
    PathResult out;
    out.weight = dist[accept];
    out.product_trace = std::move(trace);
    out.vertices = project_to_graph_path(p, out.product_trace);
    return out;
}

std::vector<bool> co_reachable(const Nfa& m, int accept) {
    std::vector<std::vector<int>> rev(m.num_states);
    for (const Transition& t : m.transitions) rev[t.to].push_back(t.from);
    std::vector<bool> seen(m.num_states, false);
    std::vector<int> work = {accept};
    seen[accept] = true;
    while (!work.empty()) {
        int q = work.back();
        work.pop_back();
        for (int u : rev[q])
            if (!seen[u]) {
                seen[u] = true;
                work.push_back(u);
            }
    }
    return seen;
}

}  // namespace

WeightedProduct weighted_product(const Nfa& m, const WeightedDigraph& g, int s, int t) {
    WeightedProduct p;
    Nfa left = wrap_single_accept(m);
    p.left_acyclic = is_acyclic(left);
    Nfa right = path_automaton(g, s, t);
    ProductBuild build = intersect_pairs(left, right);
    p.nfa = std::move(build.nfa);
    p.right_projection.resize(p.nfa.num_states);
    for (int q = 0; q < p.nfa.num_states; ++q)
        p.right_projection[q] = build.pair_of_state[q].second;
    return p;
}

std::optional<PathResult> shortest_accepting_bellman_ford(const WeightedProduct& p) {
    const Nfa& m = p.nfa;
    std::optional<int> accept = single_accept(m);
    if (!accept) return std::nullopt;
    std::vector<Weight> dist(m.num_states, kInfinite);
    std::vector<int> parent(m.num_states, -1);
    dist[m.start] = 0;
    for (int round = 1; round < m.num_states; ++round) {
        bool changed = false;
        for (const Transition& t : m.transitions) {
            if (dist[t.from] >= kInfinite) continue;
            Weight cand = dist[t.from] + t.weight;
            if (cand < dist[t.to]) {
                dist[t.to] = cand;
                parent[t.to] = t.from;
                changed = true;
            }
        }
        if (!changed) break;
    }
    std::vector<bool> reaches = co_reachable(m, *accept);
    for (const Transition& t : m.transitions) {
        if (dist[t.from] >= kInfinite) continue;
        if (dist[t.from] + t.weight < dist[t.to] && reaches[t.to])
            throw StructureError(
                "negative cycle can reach the accepting state; minimum weight is unbounded");
    }
    return assemble(p, dist, parent, *accept);
}

std::optional<PathResult> shortest_accepting_dijkstra(const WeightedProduct& p) {
    const Nfa& m = p.nfa;
    for (const Transition& t : m.transitions)
        if (t.weight < 0)
            throw ParameterError("Dijkstra requires non-negative transition weights");
    std::optional<int> accept = single_accept(m);
    if (!accept) return std::nullopt;
    Outgoing out(m);
    std::vector<Weight> dist(m.num_states, kInfinite);
    std::vector<int> parent(m.num_states, -1);
    std::vector<bool> settled(m.num_states, false);
    using Item = std::pair<Weight, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[m.start] = 0;
    heap.emplace(0, m.start);
    while (!heap.empty()) {
        auto [d, q] = heap.top();
        heap.pop();
        if (settled[q]) continue;
        settled[q] = true;
        if (q == *accept) break;
        for (int i = out.first[q]; i < out.first[q + 1]; ++i) {
            const Transition& t = m.transitions[out.order[i]];
            Weight cand = d + t.weight;
            if (cand < dist[t.to]) {
                dist[t.to] = cand;
                parent[t.to] = q;
                heap.emplace(cand, t.to);
            }
        }
    }
    return assemble(p, dist, parent, *accept);
}

std::optional<PathResult> shortest_accepting_dag(const WeightedProduct& p) {
    const Nfa& m = p.nfa;
    if (!p.left_acyclic && !is_acyclic(m))
        throw ParameterError("topological regime requires an acyclic product");
    std::optional<int> accept = single_accept(m);
    if (!accept) return std::nullopt;
    std::vector<int> topo = topological_order(m);
    Outgoing out(m);
    std::vector<Weight> dist(m.num_states, kInfinite);
    std::vector<int> parent(m.num_states, -1);
    dist[m.start] = 0;
    for (int q : topo) {
        if (dist[q] >= kInfinite) continue;
        for (int i = out.first[q]; i < out.first[q + 1]; ++i) {
            const Transition& t = m.transitions[out.order[i]];
            Weight cand = dist[q] + t.weight;
            if (cand < dist[t.to]) {
                dist[t.to] = cand;
                parent[t.to] = q;
            }
        }
    }
    return assemble(p, dist, parent, *accept);
}

std::optional<PathResult> shortest_accepting_auto(const WeightedProduct& p, SearchRegime* used) {
    if (p.left_acyclic) {
        if (used) *used = SearchRegime::Dag;
        return shortest_accepting_dag(p);
    }
    bool nonnegative = true;
    for (const Transition& t : p.nfa.transitions)
        if (t.weight < 0) {
            nonnegative = false;
            break;
        }
    if (nonnegative) {
        if (used) *used = SearchRegime::Dijkstra;
        return shortest_accepting_dijkstra(p);
    }
    if (used) *used = SearchRegime::BellmanFord;
    return shortest_accepting_bellman_ford(p);
}

std::vector<int> project_to_graph_path(const WeightedProduct& p,
                                       const std::vector<int>& product_trace) {
    std::vector<int> vertices;
    int prev = 0;
    for (int q : product_trace) {
        if (q < 0 || q >= static_cast<int>(p.right_projection.size()))
            throw ParameterError("product trace state out of range");
        int r = p.right_projection[q];
        if (r != prev) {
            vertices.push_back(r);
            prev = r;
        }
    }
    return vertices;
}

}  // namespace kpath
