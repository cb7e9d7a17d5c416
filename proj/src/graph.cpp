#include "kpath/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "kpath/errors.hpp"
#include "kpath/rng.hpp"

namespace kpath {

std::optional<Weight> WeightedDigraph::edge_weight(int u, int v) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{u, v},
                               [](const Edge& e, const std::pair<int, int>& key) {
                                   return std::pair{e.u, e.v} < key;
                               });
    if (it != edges.end() && it->u == u && it->v == v) return it->w;
    return std::nullopt;
}

static void check_vertex(int x, int n, int line) {
    if (x < 1 || x > n) {
        std::ostringstream os;
        os << "vertex " << x << " out of range [1," << n << "]";
        if (line > 0) throw ParseError(line, os.str());
        throw ParameterError(os.str());
    }
}

static void check_weight(Weight w, int line) {
    if (w < -kMaxWeightMagnitude || w > kMaxWeightMagnitude) {
        std::ostringstream os;
        os << "weight " << w << " exceeds magnitude bound 2^40";
        if (line > 0) throw ParseError(line, os.str());
        throw ParameterError(os.str());
    }
}

static WeightedDigraph canonicalize(int n, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.w < b.w;
    });
    // duplicate ordered pairs keep the minimum weight
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) {
        if (!out.empty() && out.back().u == e.u && out.back().v == e.v) continue;
        out.push_back(e);
    }
    return WeightedDigraph{n, std::move(out)};
}

WeightedDigraph make_graph(int n, std::vector<Edge> edges) {
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    for (const Edge& e : edges) {
        check_vertex(e.u, n, 0);
        check_vertex(e.v, n, 0);
        check_weight(e.w, 0);
    }
    return canonicalize(n, std::move(edges));
}

WeightedDigraph parse_graph(std::istream& in) {
    std::string raw;
    int lineno = 0;
    bool have_header = false;
    int n = 0;
    std::int64_t m = 0, seen = 0;
    std::vector<Edge> edges;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view sv(raw);
        size_t i = sv.find_first_not_of(" \t\r");
        if (i == std::string_view::npos) continue;  // blank
        if (sv[i] == '#') continue;                 // comment

        std::istringstream ls(raw);
        std::string tag;
        ls >> tag;
        if (!have_header) {
            if (tag != "p") throw ParseError(lineno, "expected header \"p <n> <m>\"");
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError(lineno, "malformed header \"p <n> <m>\"");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after header");
            have_header = true;
            continue;
        }
        if (tag != "e") throw ParseError(lineno, "expected edge line \"e <u> <v> <w>\"");
        int u, v;
        Weight w;
        if (!(ls >> u >> v >> w)) throw ParseError(lineno, "malformed edge line");
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing tokens after edge");
        check_vertex(u, n, lineno);
        check_vertex(v, n, lineno);
        check_weight(w, lineno);
        edges.push_back({u, v, w});
        if (++seen > m) throw ParseError(lineno, "more edge lines than the header's m");
    }
    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing header \"p <n> <m>\"");
    if (seen < m) {
        std::ostringstream os;
        os << "expected " << m << " edge lines, found " << seen;
        throw ParseError(lineno == 0 ? 1 : lineno, os.str());
    }
    return canonicalize(n, std::move(edges));
}

WeightedDigraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string serialize_graph(const WeightedDigraph& g) {
    std::ostringstream os;
    os << "p " << g.n << " " << g.edges.size() << "\n";
    for (const Edge& e : g.edges) os << "e " << e.u << " " << e.v << " " << e.w << "\n";
    return os.str();
}

WeightedDigraph random_graph(int n, std::int64_t m, Weight wmin, Weight wmax,
                             std::uint64_t seed) {
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    const std::int64_t max_pairs = static_cast<std::int64_t>(n) * (n - 1);
    if (m < 0 || m > max_pairs)
        throw ParameterError("edge count " + std::to_string(m) + " exceeds n(n-1) = " +
                             std::to_string(max_pairs));
    if (wmin > wmax) throw ParameterError("wmin exceeds wmax");
    check_weight(wmin, 0);
    check_weight(wmax, 0);

    // Floyd's sampling: m distinct indices from [0, max_pairs), uniform.
    Rng rng(seed);
    std::vector<std::int64_t> picked;
    std::unordered_set<std::int64_t> taken;
    picked.reserve(m);
    for (std::int64_t j = max_pairs - m; j < max_pairs; ++j) {
        std::int64_t r = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(j) + 1));
        std::int64_t pick = taken.insert(r).second ? r : j;
        if (pick == j) taken.insert(j);
        picked.push_back(pick);
    }
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::int64_t idx : picked) {
        // ordered-pair index -> (u, v) skipping the diagonal
        int u = static_cast<int>(idx / (n - 1)) + 1;
        int off = static_cast<int>(idx % (n - 1));
        int v = off + 1;
        if (v >= u) ++v;
        edges.push_back({u, v, rng.in_range(wmin, wmax)});
    }
    return canonicalize(n, std::move(edges));
}

SuperTerminals add_super_terminals(const WeightedDigraph& g) {
    SuperTerminals st;
    st.s = g.n + 1;
    st.t = g.n + 2;
    std::vector<Edge> edges = g.edges;
    edges.reserve(edges.size() + 2 * static_cast<size_t>(g.n));
    for (int v = 1; v <= g.n; ++v) {
        edges.push_back({st.s, v, 0});
        edges.push_back({v, st.t, 0});
    }
    st.graph = canonicalize(g.n + 2, std::move(edges));
    return st;
}

WeightedDigraph strip_self_loops(const WeightedDigraph& g) {
    WeightedDigraph out;
    out.n = g.n;
    for (const Edge& e : g.edges)
        if (e.u != e.v) out.edges.push_back(e);
    return out;
}

}  // namespace kpath
