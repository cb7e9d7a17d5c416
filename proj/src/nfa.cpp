#include "kpath/nfa.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "kpath/errors.hpp"

namespace kpath {

void Nfa::set_accepting(std::vector<int> states) {
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    accepting = std::move(states);
}

bool Nfa::is_accepting(int q) const {
    return std::binary_search(accepting.begin(), accepting.end(), q);
}

bool Nfa::has_epsilon() const {
    for (const auto& t : transitions)
        if (t.label == kEpsilon) return true;
    return false;
}

Symbol Nfa::max_symbol() const {
    Symbol m = 0;
    for (const auto& t : transitions) m = std::max(m, t.label);
    return m;
}

Nfa path_automaton(const WeightedDigraph& g, int s, int t) {
    if (s < 1 || s > g.n) throw ParameterError("source vertex out of range");
    if (t < 1 || t > g.n) throw ParameterError("target vertex out of range");
    // state 0 is q0; state i is vertex i
    Nfa m;
    m.num_states = g.n + 1;
    m.start = 0;
    m.add_transition(0, s, s, 0);
    for (const Edge& e : g.edges) m.add_transition(e.u, e.v, e.v, e.w);
    m.set_accepting({t});
    return m;
}

namespace {

struct Adjacency {
    // per-state transition index ranges after sorting by (from)
    std::vector<int> order;
    std::vector<int> first;  // size num_states+1

    Adjacency(const Nfa& m) {
        order.resize(m.transitions.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return m.transitions[a].from < m.transitions[b].from;
        });
        first.assign(m.num_states + 1, 0);
        for (int idx : order) ++first[m.transitions[idx].from + 1];
        for (int q = 0; q < m.num_states; ++q) first[q + 1] += first[q];
    }
};

}  // namespace

ProductBuild intersect_pairs(const Nfa& m1, const Nfa& m2) {
    if (m2.has_epsilon())
        throw ParameterError("intersect: eps-transitions are allowed in the left operand only");

    Adjacency a1(m1), a2(m2);
    // right-side lookup by (state, label)
    std::unordered_map<std::int64_t, std::vector<int>> right_by_state_label;
    for (size_t i = 0; i < m2.transitions.size(); ++i) {
        const auto& t = m2.transitions[i];
        right_by_state_label[(static_cast<std::int64_t>(t.from) << 32) | static_cast<std::uint32_t>(t.label)]
            .push_back(static_cast<int>(i));
    }

    ProductBuild out;
    std::unordered_map<std::int64_t, int> id_of_pair;
    auto pair_key = [](int q1, int q2) {
        return (static_cast<std::int64_t>(q1) << 32) | static_cast<std::uint32_t>(q2);
    };
    auto state_of = [&](int q1, int q2) {
        auto [it, fresh] = id_of_pair.try_emplace(pair_key(q1, q2), out.nfa.num_states);
        if (fresh) {
            ++out.nfa.num_states;
            out.pair_of_state.emplace_back(q1, q2);
        }
        return it->second;
    };

    out.nfa.start = state_of(m1.start, m2.start);
    std::vector<int> accepting;
    for (int head = 0; head < static_cast<int>(out.pair_of_state.size()); ) {
        int q = head++;
        auto [q1, q2] = out.pair_of_state[q];
        if (m1.is_accepting(q1) && m2.is_accepting(q2)) accepting.push_back(q);
        for (int i = a1.first[q1]; i < a1.first[q1 + 1]; ++i) {
            const Transition& t1 = m1.transitions[a1.order[i]];
            if (t1.label == kEpsilon) {
                // left advances alone
                int to = state_of(t1.to, q2);
                out.nfa.add_transition(q, to, kEpsilon, t1.weight);
                continue;
            }
            auto it = right_by_state_label.find(pair_key(q2, t1.label));
            if (it == right_by_state_label.end()) continue;
            for (int j : it->second) {
                const Transition& t2 = m2.transitions[j];
                int to = state_of(t1.to, t2.to);
                out.nfa.add_transition(q, to, t1.label, t1.weight + t2.weight);
            }
        }
    }
    out.nfa.set_accepting(std::move(accepting));
    return out;
}

Nfa intersect(const Nfa& m1, const Nfa& m2) { return intersect_pairs(m1, m2).nfa; }

bool accepts(const Nfa& m, const Word& word) {
    Adjacency adj(m);
    auto close = [&](std::vector<char>& in_set) {
        std::deque<int> work;
        for (int q = 0; q < m.num_states; ++q)
            if (in_set[q]) work.push_back(q);
        while (!work.empty()) {
            int q = work.front();
            work.pop_front();
            for (int i = adj.first[q]; i < adj.first[q + 1]; ++i) {
                const Transition& t = m.transitions[adj.order[i]];
                if (t.label == kEpsilon && !in_set[t.to]) {
                    in_set[t.to] = 1;
                    work.push_back(t.to);
                }
            }
        }
    };

    std::vector<char> cur(m.num_states, 0);
    cur[m.start] = 1;
    close(cur);
    for (Symbol a : word) {
        std::vector<char> next(m.num_states, 0);
        bool any = false;
        for (int q = 0; q < m.num_states; ++q) {
            if (!cur[q]) continue;
            for (int i = adj.first[q]; i < adj.first[q + 1]; ++i) {
                const Transition& t = m.transitions[adj.order[i]];
                if (t.label == a) {
                    next[t.to] = 1;
                    any = true;
                }
            }
        }
        if (!any) return false;  // all runs stuck
        close(next);
        cur.swap(next);
    }
    for (int q : m.accepting)
        if (cur[q]) return true;
    return false;
}

std::vector<int> topological_order(const Nfa& m) {
    std::vector<int> indeg(m.num_states, 0);
    for (const auto& t : m.transitions) ++indeg[t.to];
    Adjacency adj(m);

    std::vector<int> order;
    order.reserve(m.num_states);
    // smallest-id-first for a deterministic order
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int q = 0; q < m.num_states; ++q)
        if (indeg[q] == 0) ready.push(q);
    while (!ready.empty()) {
        int q = ready.top();
        ready.pop();
        order.push_back(q);
        for (int i = adj.first[q]; i < adj.first[q + 1]; ++i) {
            int to = m.transitions[adj.order[i]].to;
            if (--indeg[to] == 0) ready.push(to);
        }
    }
    if (static_cast<int>(order.size()) == m.num_states) return order;

    // find a witness cycle among the unfinished states
    std::vector<int> state(m.num_states, 0);  // 0 new, 1 on stack, 2 done
    std::vector<int> parent(m.num_states, -1);
    for (int root = 0; root < m.num_states; ++root) {
        if (indeg[root] == 0 || state[root] != 0) continue;
        std::vector<int> stack = {root};
        while (!stack.empty()) {
            int q = stack.back();
            if (state[q] == 0) state[q] = 1;
            bool advanced = false;
            for (int i = adj.first[q]; i < adj.first[q + 1] && !advanced; ++i) {
                int to = m.transitions[adj.order[i]].to;
                if (indeg[to] == 0) continue;  // not part of any cycle
                if (state[to] == 1) {
                    // unwind q -> ... -> to
                    std::vector<int> cyc = {to};
                    for (int x = q; x != to; x = parent[x]) cyc.push_back(x);
                    std::reverse(cyc.begin(), cyc.end());
                    std::ostringstream os;
                    os << "automaton is cyclic; witness cycle:";
                    for (int x : cyc) os << " " << x;
                    throw StructureError(os.str());
                }
                if (state[to] == 0) {
                    parent[to] = q;
                    stack.push_back(to);
                    advanced = true;
                }
            }
            if (!advanced) {
                state[q] = 2;
                stack.pop_back();
            }
        }
    }
    throw StructureError("automaton is cyclic");  // unreachable
}

bool is_acyclic(const Nfa& m) {
    try {
        topological_order(m);
        return true;
    } catch (const StructureError&) {
        return false;
    }
}

Nfa reachable_trim(const Nfa& m) {
    Adjacency adj(m);
    std::vector<char> fwd(m.num_states, 0);
    std::deque<int> work = {m.start};
    fwd[m.start] = 1;
    while (!work.empty()) {
        int q = work.front();
        work.pop_front();
        for (int i = adj.first[q]; i < adj.first[q + 1]; ++i) {
            int to = m.transitions[adj.order[i]].to;
            if (!fwd[to]) {
                fwd[to] = 1;
                work.push_back(to);
            }
        }
    }

    std::vector<std::vector<int>> rev(m.num_states);
    for (const auto& t : m.transitions) rev[t.to].push_back(t.from);
    std::vector<char> bwd(m.num_states, 0);
    for (int q : m.accepting) {
        if (!bwd[q]) {
            bwd[q] = 1;
            work.push_back(q);
        }
    }
    while (!work.empty()) {
        int q = work.front();
        work.pop_front();
        for (int p : rev[q]) {
            if (!bwd[p]) {
                bwd[p] = 1;
                work.push_back(p);
            }
        }
    }

    std::vector<int> new_id(m.num_states, -1);
    Nfa out;
    auto live = [&](int q) { return fwd[q] && bwd[q]; };
    // the start survives even when nothing is co-reachable
    for (int q = 0; q < m.num_states; ++q)
        if (live(q) || q == m.start) new_id[q] = out.num_states++;
    out.start = new_id[m.start];
    for (const auto& t : m.transitions)
        if (live(t.from) && live(t.to))
            out.add_transition(new_id[t.from], new_id[t.to], t.label, t.weight);
    std::vector<int> acc;
    for (int q : m.accepting)
        if (live(q)) acc.push_back(new_id[q]);
    out.set_accepting(std::move(acc));
    return out;
}

Nfa eliminate_epsilon(const Nfa& m) {
    // ε-subgraph must be acyclic and zero-weight
    Nfa eps_only;
    eps_only.num_states = m.num_states;
    eps_only.start = m.start;
    for (const auto& t : m.transitions)
        if (t.label == kEpsilon) {
            if (t.weight != 0)
                throw StructureError("eliminate_epsilon: nonzero eps weight");
            eps_only.add_transition(t.from, t.to, kEpsilon, 0);
        }
    try {
        topological_order(eps_only);
    } catch (const StructureError&) {
        throw StructureError("eliminate_epsilon: eps-cycle present");
    }

    // ε-closure per state
    Adjacency adj(eps_only);
    std::vector<std::vector<int>> closure(m.num_states);
    for (int q = 0; q < m.num_states; ++q) {
        std::vector<char> seen(m.num_states, 0);
        std::deque<int> work = {q};
        seen[q] = 1;
        while (!work.empty()) {
            int x = work.front();
            work.pop_front();
            closure[q].push_back(x);
            for (int i = adj.first[x]; i < adj.first[x + 1]; ++i) {
                int to = eps_only.transitions[adj.order[i]].to;
                if (!seen[to]) {
                    seen[to] = 1;
                    work.push_back(to);
                }
            }
        }
        std::sort(closure[q].begin(), closure[q].end());
    }

    Nfa dense;
    dense.num_states = m.num_states;
    dense.start = m.start;
    Adjacency madj(m);
    std::vector<char> acc(m.num_states, 0);
    for (int q : m.accepting) acc[q] = 1;
    std::vector<int> new_acc;
    for (int q = 0; q < m.num_states; ++q) {
        bool q_acc = false;
        for (int p : closure[q]) q_acc = q_acc || acc[p];
        if (q_acc) new_acc.push_back(q);
        for (int p : closure[q]) {
            for (int i = madj.first[p]; i < madj.first[p + 1]; ++i) {
                const Transition& t = m.transitions[madj.order[i]];
                if (t.label != kEpsilon) dense.add_transition(q, t.to, t.label, t.weight);
            }
        }
    }
    dense.set_accepting(std::move(new_acc));

    // drop duplicate transitions introduced by overlapping closures
    std::sort(dense.transitions.begin(), dense.transitions.end(),
              [](const Transition& a, const Transition& b) {
                  return std::tie(a.from, a.to, a.label, a.weight) <
                         std::tie(b.from, b.to, b.label, b.weight);
              });
    dense.transitions.erase(std::unique(dense.transitions.begin(), dense.transitions.end()),
                            dense.transitions.end());
    return reachable_trim(dense);
}

Nfa wrap_single_accept(const Nfa& m) {
    if (m.accepting.size() == 1) return m;
    Nfa out = m;
    int sink = out.num_states++;
    for (int q : m.accepting) out.add_transition(q, sink, kEpsilon, 0);
    out.set_accepting({sink});
    return out;
}

bool is_deterministic(const Nfa& m) {
    std::vector<std::pair<int, Symbol>> seen;
    seen.reserve(m.transitions.size());
    for (const auto& t : m.transitions) {
        if (t.label == kEpsilon) return false;
        seen.emplace_back(t.from, t.label);
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

std::string nfa_to_text(const Nfa& m) {
    std::ostringstream os;
    os << "nfa " << m.num_states << " " << m.transitions.size() << " " << m.start << "\n";
    for (int q : m.accepting) os << "f " << q << "\n";
    for (const auto& t : m.transitions) {
        os << "t " << t.from << " " << t.to << " ";
        if (t.label == kEpsilon)
            os << "eps";
        else
            os << t.label;
        os << " " << t.weight << "\n";
    }
    return os.str();
}

}  // namespace kpath
