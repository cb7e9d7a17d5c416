#include "kpath/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kpath/errors.hpp"

namespace kpath::oracle {

namespace {

/// Plain power-set simulation, independent of the library's accepts().
bool naive_accepts(const Nfa& m, const Word& word) {
    std::set<int> cur;
    cur.insert(m.start);
    auto close = [&](std::set<int>& states) {
        bool grew = true;
        while (grew) {
            grew = false;
            for (const Transition& t : m.transitions)
                if (t.label == kEpsilon && states.count(t.from) && !states.count(t.to)) {
                    states.insert(t.to);
                    grew = true;
                }
        }
    };
    close(cur);
    for (Symbol a : word) {
        std::set<int> next;
        for (const Transition& t : m.transitions)
            if (t.label == a && cur.count(t.from)) next.insert(t.to);
        close(next);
        cur = std::move(next);
        if (cur.empty()) return false;
    }
    for (int q : cur)
        if (m.is_accepting(q)) return true;
    return false;
}

/// Parity of accepting runs by memoized run counting, independent of the
/// library's vector propagation.
int naive_run_parity(const Nxa& m, const Word& word) {
    int len = static_cast<int>(word.size());
    // memo[q][i]: parity of accepting runs from state q on the suffix word[i..], -1 unknown
    std::vector<std::vector<int>> memo(m.num_states, std::vector<int>(len + 1, -1));
    auto rec = [&](auto&& self, int q, int i) -> int {
        int& slot = memo[q][i];
        if (slot >= 0) return slot;
        if (i == len) return slot = m.is_accepting(q) ? 1 : 0;
        int parity = 0;
        for (const Transition& t : m.transitions)
            if (t.from == q && t.label == word[i]) parity ^= self(self, t.to, i + 1);
        return slot = parity;
    };
    return rec(rec, m.start, 0);
}

void extend(const WeightedDigraph& g, std::vector<int>& path, std::vector<char>& used,
            Weight weight, std::optional<int> t, int k,
            std::optional<PathResult>& best) {
    if (static_cast<int>(path.size()) == k) {
        if (t && path.back() != *t) return;
        if (!best || weight < best->weight ||
            (weight == best->weight && path < best->vertices)) {
            best = PathResult{path, weight, {}};
        }
        return;
    }
    int u = path.back();
    for (const Edge& e : g.edges) {
        if (e.u != u || used[e.v]) continue;
        used[e.v] = 1;
        path.push_back(e.v);
        extend(g, path, used, weight + e.w, t, k, best);
        path.pop_back();
        used[e.v] = 0;
    }
}

}  // namespace

std::optional<PathResult> brute_min_wt_simple_kpath(const WeightedDigraph& g,
                                                    std::optional<int> s,
                                                    std::optional<int> t, int k) {
    if (g.n > 12 || k > 8)
        throw BudgetError("brute force is guarded to n <= 12 and k <= 8");
    if (k < 1) throw ParameterError("k must be at least 1");
    if (k > g.n) return std::nullopt;

    std::optional<PathResult> best;
    std::vector<char> used(g.n + 1, 0);
    std::vector<int> path;
    for (int v0 = 1; v0 <= g.n; ++v0) {
        if (s && v0 != *s) continue;
        used[v0] = 1;
        path.push_back(v0);
        extend(g, path, used, 0, t, k, best);
        path.pop_back();
        used[v0] = 0;
    }
    return best;
}

std::set<Word> enumerate_language(const Nfa& m, int n, int k) {
    if (k > 0 && std::pow(static_cast<double>(n), k) > 1e7)
        throw BudgetError("language enumeration is guarded to n^k <= 1e7");
    std::set<Word> out;
    Word w(k, 1);
    for (;;) {
        if (naive_accepts(m, w)) out.insert(w);
        int i = k - 1;
        while (i >= 0 && w[i] == n) {
            w[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

std::set<Word> enumerate_parity_language(const Nxa& m, int n, int k) {
    if (k > 0 && std::pow(static_cast<double>(n), k) > 1e7)
        throw BudgetError("language enumeration is guarded to n^k <= 1e7");
    std::set<Word> out;
    Word w(k, 1);
    for (;;) {
        if (naive_run_parity(m, w) == 1) out.insert(w);
        int i = k - 1;
        while (i >= 0 && w[i] == n) {
            w[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

std::set<Word> lkn_reference(int n, int k) {
    if (k > 0 && std::pow(static_cast<double>(n), k) > 1e7)
        throw BudgetError("language enumeration is guarded to n^k <= 1e7");
    std::set<Word> out;
    Word w(k, 1);
    for (;;) {
        bool distinct = true;
        for (int i = 0; i < k && distinct; ++i)
            for (int j = i + 1; j < k && distinct; ++j)
                if (w[i] == w[j]) distinct = false;
        if (distinct) out.insert(w);
        int i = k - 1;
        while (i >= 0 && w[i] == n) {
            w[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++w[i];
    }
    // falling-factorial count check
    unsigned long long expect = 1;
    for (int i = 0; i < k; ++i) expect *= static_cast<unsigned long long>(n - i);
    if (out.size() != expect)
        throw InternalError("distinct-word count disagrees with n(n-1)...(n-k+1)");
    return out;
}

std::optional<std::string> validate_simple_kpath(const WeightedDigraph& g,
                                                 const std::vector<int>& path, int k,
                                                 std::optional<int> s, std::optional<int> t,
                                                 Weight weight) {
    std::ostringstream why;
    if (static_cast<int>(path.size()) != k) {
        why << "path has " << path.size() << " vertices, expected " << k;
        return why.str();
    }
    for (int v : path) {
        if (v < 1 || v > g.n) {
            why << "vertex " << v << " out of range";
            return why.str();
        }
    }
    std::vector<int> sorted = path;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return std::string("path repeats a vertex");
    if (s && path.front() != *s) {
        why << "path starts at " << path.front() << ", expected " << *s;
        return why.str();
    }
    if (t && path.back() != *t) {
        why << "path ends at " << path.back() << ", expected " << *t;
        return why.str();
    }
    Weight sum = 0;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        auto w = g.edge_weight(path[i], path[i + 1]);
        if (!w) {
            why << "missing edge (" << path[i] << "," << path[i + 1] << ")";
            return why.str();
        }
        sum += *w;
    }
    if (sum != weight) {
        why << "weights re-sum to " << sum << ", reported " << weight;
        return why.str();
    }
    return std::nullopt;
}

}  // namespace kpath::oracle
