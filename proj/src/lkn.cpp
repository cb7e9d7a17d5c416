#include "kpath/lkn.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "kpath/errors.hpp"
#include "kpath/rng.hpp"

namespace kpath {

namespace {

struct MachineKey {
    int k;
    int cont;
    BitString symbols;

    bool operator==(const MachineKey& o) const {
        return k == o.k && cont == o.cont && symbols == o.symbols;
    }
};

struct MachineKeyHash {
    std::size_t operator()(const MachineKey& key) const {
        return static_cast<std::size_t>(
            Rng::mix(key.symbols.hash(), static_cast<std::uint64_t>(key.k),
                     static_cast<std::uint64_t>(key.cont)));
    }
};

struct Builder {
    UniversalProvider& provider;
    std::int64_t budget;
    Nfa out;
    std::unordered_map<MachineKey, int, MachineKeyHash> memo;
    std::map<std::pair<int, int>, int> family_sizes;  // (ground,k) -> member count
    int max_depth = 0;

    Builder(UniversalProvider& p, std::int64_t b) : provider(p), budget(b) {}

    void charge(std::int64_t states, std::int64_t transitions) {
        if (out.num_states + static_cast<std::int64_t>(out.transitions.size()) + states +
                transitions > budget)
            throw BudgetError("build_lkn: size budget " + std::to_string(budget) +
                              " exceeded at " + std::to_string(out.size()) + " so far");
    }

    int fresh_state() {
        charge(1, 0);
        return out.num_states++;
    }

    /// Start state of a machine that reads a length-k distinct-symbols word
    /// over `symbols` and continues at `cont`.
    int build(int k, const BitString& symbols, int cont, int depth) {
        max_depth = std::max(max_depth, depth);
        MachineKey key{k, cont, symbols};
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        const int q = fresh_state();
        memo.emplace(std::move(key), q);

        if (k == 1) {
            for (int i : symbols.members()) {
                charge(0, 1);
                out.add_transition(q, cont, i + 1, 0);  // symbols are 1-based
            }
            return q;
        }

        const int k1 = (k + 1) / 2, k2 = k / 2;
        const auto elems = symbols.members();
        const int ground = static_cast<int>(elems.size());
        const UniversalFamily& fam = provider.family(ground, k);
        family_sizes[{ground, k}] = static_cast<int>(fam.members.size());

        for (const BitString& t : fam.members) {
            // remap the family string onto the current symbol set
            BitString left(symbols.length()), right(symbols.length());
            for (int j = 0; j < ground; ++j) {
                if (t.get(j))
                    left.set(elems[j], true);
                else
                    right.set(elems[j], true);
            }
            if (left.count() < k1 || right.count() < k2) continue;  // branch cannot fit
            int second = build(k2, right, cont, depth + 1);
            int first = build(k1, left, second, depth + 1);
            charge(0, 1);
            out.add_transition(q, first, kEpsilon, 0);
        }
        return q;
    }
};

/// Size of the same construction with every sub-machine copied instead of
/// shared; saturating.
struct TreeEstimator {
    UniversalProvider& provider;
    std::unordered_map<MachineKey, std::uint64_t, MachineKeyHash> memo;

    static std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
        return a > ~b ? ~std::uint64_t{0} : a + b;
    }

    std::uint64_t run(int k, const BitString& symbols) {
        MachineKey key{k, 0, symbols};  // cont is irrelevant to the size
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::uint64_t total = 1;  // the start state
        if (k == 1) {
            total = sat_add(total, symbols.count());
        } else {
            const int k1 = (k + 1) / 2, k2 = k / 2;
            const auto elems = symbols.members();
            const UniversalFamily& fam = provider.family(static_cast<int>(elems.size()), k);
            for (const BitString& t : fam.members) {
                BitString left(symbols.length()), right(symbols.length());
                for (size_t j = 0; j < elems.size(); ++j) {
                    if (t.get(static_cast<int>(j)))
                        left.set(elems[j], true);
                    else
                        right.set(elems[j], true);
                }
                if (left.count() < k1 || right.count() < k2) continue;
                total = sat_add(total, 1);  // dispatch ε
                total = sat_add(total, run(k1, left));
                total = sat_add(total, run(k2, right));
            }
        }
        memo.emplace(std::move(key), total);
        return total;
    }
};

}  // namespace

std::pair<Nfa, LknBuildReport> build_lkn(int n, int k, UniversalProvider& provider,
                                         std::int64_t budget) {
    if (k < 1 || k > n) throw ParameterError("build_lkn requires 1 <= k <= n");

    Builder b(provider, budget);
    const int accept = b.fresh_state();
    b.out.start = b.build(k, BitString::all(n), accept, 1);
    b.out.set_accepting({accept});

    LknBuildReport report;
    report.n = n;
    report.k = k;
    report.states = b.out.num_states;
    report.transitions = static_cast<std::int64_t>(b.out.transitions.size());
    report.size = b.out.size();
    report.recursion_depth = b.max_depth;
    for (const auto& [key, size] : b.family_sizes)
        report.families_used.push_back({key.first, key.second, size});

    TreeEstimator est{provider, {}};
    report.tree_size = TreeEstimator::sat_add(est.run(k, BitString::all(n)), 1);

    return {std::move(b.out), std::move(report)};
}

Nfa build_lkn_over(const BitString& symbols, int k, UniversalProvider& provider,
                   std::int64_t budget) {
    if (k < 1 || k > symbols.count())
        throw ParameterError("build_lkn_over requires 1 <= k <= |symbols|");
    Builder b(provider, budget);
    const int accept = b.fresh_state();
    b.out.start = b.build(k, symbols, accept, 1);
    b.out.set_accepting({accept});
    return std::move(b.out);
}

int lkn_recursion_depth(int k) {
    int d = 1;
    while (k > 1) {
        k = (k + 1) / 2;
        ++d;
    }
    return d;
}

int lkn_length_sum(int k) {
    int sum = k;
    while (k > 1) {
        k = (k + 1) / 2;
        sum += k;
    }
    return sum;
}

std::vector<std::pair<Word, Word>> fooling_pairs(int k, int n) {
    if (k < 1 || k > n) throw ParameterError("fooling_pairs requires 1 <= k <= n");
    if (k > 20) throw BudgetError("fooling_pairs: k > 20");
    std::vector<std::pair<Word, Word>> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        Word x, y;
        for (int i = 1; i <= k; ++i) {
            if (mask & (1u << (i - 1)))
                x.push_back(i);
            else
                y.push_back(i);
        }
        out.emplace_back(std::move(x), std::move(y));
    }
    return out;
}

bool check_fooling_separation(const Nfa& m,
                              const std::vector<std::pair<Word, Word>>& pairs) {
    for (size_t i = 0; i < pairs.size(); ++i) {
        for (size_t j = 0; j < pairs.size(); ++j) {
            Word w = pairs[i].first;
            w.insert(w.end(), pairs[j].second.begin(), pairs[j].second.end());
            if (accepts(m, w) != (i == j)) return false;
        }
    }
    return true;
}

}  // namespace kpath
