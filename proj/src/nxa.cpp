#include "kpath/nxa.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <tuple>
#include <unordered_map>

#include "kpath/errors.hpp"

namespace kpath {

bool Nxa::is_accepting(int q) const {
    return std::binary_search(accepting.begin(), accepting.end(), q);
}

static void validate_nxa(const Nxa& m) {
    std::vector<std::tuple<int, int, Symbol>> triples;
    triples.reserve(m.transitions.size());
    for (const auto& t : m.transitions) {
        if (t.label == kEpsilon)
            throw StructureError("parity automaton: eps-transitions are not allowed");
        if (t.from < 0 || t.from >= m.num_states || t.to < 0 || t.to >= m.num_states)
            throw StructureError("parity automaton: transition endpoint out of range");
        triples.emplace_back(t.from, t.to, t.label);
    }
    std::sort(triples.begin(), triples.end());
    if (std::adjacent_find(triples.begin(), triples.end()) != triples.end())
        throw StructureError(
            "parity automaton: duplicate parallel transition would cancel mod 2");
}

Nxa make_nxa(int num_states, int start, std::vector<int> accepting,
             std::vector<Transition> transitions) {
    Nxa m;
    m.num_states = num_states;
    m.start = start;
    std::sort(accepting.begin(), accepting.end());
    accepting.erase(std::unique(accepting.begin(), accepting.end()), accepting.end());
    m.accepting = std::move(accepting);
    m.transitions = std::move(transitions);
    validate_nxa(m);
    return m;
}

int count_accepting_paths_mod2(const Nxa& m, const Word& word) {
    // run-count parities as a GF(2) vector over states
    std::vector<char> v(m.num_states, 0);
    v[m.start] = 1;
    for (Symbol a : word) {
        std::vector<char> next(m.num_states, 0);
        for (const auto& t : m.transitions)
            if (t.label == a && v[t.from]) next[t.to] ^= 1;
        v.swap(next);
    }
    int parity = 0;
    for (int q : m.accepting) parity ^= v[q];
    return parity;
}

Nxa ryser_chain(const BitMatrix& a, std::uint64_t s_mask) {
    if (s_mask == 0) throw ParameterError("ryser_chain: row subset must be nonempty");
    const int k = a.rows();
    if (k < 1) throw ParameterError("ryser_chain: matrix must have at least one row");
    if (k < 64 && (s_mask >> k) != 0)
        throw ParameterError("ryser_chain: row subset out of range");

    Nxa m;
    m.num_states = k + 1;  // q0..qk
    m.start = 0;
    m.accepting = {k};
    for (int i = 1; i <= a.cols(); ++i) {
        if (std::popcount(a.column(i - 1) & s_mask) % 2 == 0) continue;  // i outside T
        for (int j = 0; j < k; ++j) m.transitions.push_back({j, j + 1, i, 0});
    }
    validate_nxa(m);
    return m;
}

Nxa ryser_union(const BitMatrix& a) {
    const int k = a.rows();
    if (k < 1) throw ParameterError("ryser_union: matrix must have at least one row");
    if (k > 20) throw BudgetError("ryser_union: k > 20 exceeds the 2^k chain budget");

    // shared start (0) and accept (1); k-1 interior states per chain
    Nxa m;
    m.num_states = 2;
    m.start = 0;
    m.accepting = {1};
    const std::uint64_t subsets = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t s_mask = 1; s_mask <= subsets; ++s_mask) {
        std::vector<int> level(k + 1);
        level[0] = 0;
        level[k] = 1;
        for (int j = 1; j < k; ++j) level[j] = m.num_states++;
        for (int i = 1; i <= a.cols(); ++i) {
            if (std::popcount(a.column(i - 1) & s_mask) % 2 == 0) continue;
            for (int j = 0; j < k; ++j)
                m.transitions.push_back({level[j], level[j + 1], i, 0});
        }
    }
    validate_nxa(m);
    return m;
}

Nxa nxa_intersect_dfa(const Nxa& m, const Nfa& d) {
    if (!is_deterministic(d))
        throw ParameterError("nxa_intersect_dfa: right operand must be deterministic and eps-free");

    std::unordered_map<std::int64_t, int> right_next;  // (state,label) -> target
    std::unordered_map<std::int64_t, Weight> right_weight;
    auto key = [](int q, Symbol a) {
        return (static_cast<std::int64_t>(q) << 32) | static_cast<std::uint32_t>(a);
    };
    for (const auto& t : d.transitions) {
        right_next[key(t.from, t.label)] = t.to;
        right_weight[key(t.from, t.label)] = t.weight;
    }
    std::vector<std::vector<int>> left_out(m.num_states);
    for (size_t i = 0; i < m.transitions.size(); ++i)
        left_out[m.transitions[i].from].push_back(static_cast<int>(i));

    Nxa out;
    std::vector<std::pair<int, int>> pair_of_state;
    std::unordered_map<std::int64_t, int> id_of_pair;
    auto state_of = [&](int q1, int q2) {
        auto [it, fresh] = id_of_pair.try_emplace(key(q1, q2), out.num_states);
        if (fresh) {
            ++out.num_states;
            pair_of_state.emplace_back(q1, q2);
        }
        return it->second;
    };
    out.start = state_of(m.start, d.start);
    std::vector<int> accepting;
    for (int q = 0; q < static_cast<int>(pair_of_state.size()); ++q) {
        auto [q1, q2] = pair_of_state[q];
        if (m.is_accepting(q1) && d.is_accepting(q2)) accepting.push_back(q);
        for (int i : left_out[q1]) {
            const Transition& t1 = m.transitions[i];
            auto it = right_next.find(key(q2, t1.label));
            if (it == right_next.end()) continue;
            int to = state_of(t1.to, it->second);
            out.transitions.push_back(
                {q, to, t1.label, t1.weight + right_weight[key(q2, t1.label)]});
        }
    }
    std::sort(accepting.begin(), accepting.end());
    out.accepting = std::move(accepting);
    validate_nxa(out);
    return out;
}

namespace {

/// Dense bit vector over the automaton's states.
struct StateVec {
    std::vector<std::uint64_t> w;
    explicit StateVec(int bits) : w((bits + 63) / 64, 0) {}
    bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void flip(int i) { w[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    bool is_zero() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    void xor_with(const StateVec& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
    }
    int lowest_bit() const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64) + std::countr_zero(w[i]);
        return -1;
    }
    int parity_with(const StateVec& o) const {
        std::uint64_t acc = 0;
        for (size_t i = 0; i < w.size(); ++i) acc ^= w[i] & o.w[i];
        return std::popcount(acc) & 1;
    }
};

}  // namespace

XorEmptiness xor_empty(const Nxa& m) {
    // transitions grouped per symbol
    std::unordered_map<Symbol, std::vector<std::pair<int, int>>> step;
    for (const auto& t : m.transitions) step[t.label].emplace_back(t.from, t.to);
    std::vector<Symbol> alphabet;
    alphabet.reserve(step.size());
    for (const auto& [a, _] : step) alphabet.push_back(a);
    std::sort(alphabet.begin(), alphabet.end());

    StateVec accept(m.num_states);
    for (int q : m.accepting) accept.flip(q);

    // Raw word-image vectors plus their generating words (via parent links);
    // a separate echelon basis answers independence queries.
    struct Rep {
        StateVec vec;
        int parent;
        Symbol sym;
    };
    std::vector<Rep> reps;
    std::vector<StateVec> echelon;  // reduced rows
    std::vector<int> pivot;         // pivot bit per echelon row

    auto insert_if_independent = [&](StateVec v) -> bool {
        for (size_t i = 0; i < echelon.size(); ++i)
            if (v.get(pivot[i])) v.xor_with(echelon[i]);
        if (v.is_zero()) return false;
        // keep the echelon reduced so pivots stay unique
        int p = v.lowest_bit();
        for (auto& row : echelon)
            if (row.get(p)) row.xor_with(v);
        echelon.push_back(v);
        pivot.push_back(p);
        return true;
    };

    auto word_of = [&](int rep_idx) {
        Word w;
        for (int i = rep_idx; i > 0; i = reps[i].parent) w.push_back(reps[i].sym);
        std::reverse(w.begin(), w.end());
        return w;
    };

    StateVec seed(m.num_states);
    seed.flip(m.start);
    if (seed.parity_with(accept))
        return {false, {}};  // the empty word already has an odd run count
    {
        StateVec copy = seed;
        insert_if_independent(std::move(copy));
    }
    reps.push_back({std::move(seed), -1, 0});

    for (size_t head = 0; head < reps.size(); ++head) {
        for (Symbol a : alphabet) {
            StateVec img(m.num_states);
            for (auto [from, to] : step[a])
                if (reps[head].vec.get(from)) img.flip(to);
            StateVec raw = img;
            if (!insert_if_independent(std::move(img))) continue;
            reps.push_back({std::move(raw), static_cast<int>(head), a});
            if (reps.back().vec.parity_with(accept)) {
                XorEmptiness r;
                r.empty = false;
                r.witness = word_of(static_cast<int>(reps.size()) - 1);
                return r;
            }
        }
    }
    return {true, {}};
}

}  // namespace kpath
