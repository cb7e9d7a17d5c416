#include "kpath/universal.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "kpath/errors.hpp"
#include "kpath/rng.hpp"

namespace kpath {

namespace {

std::uint64_t binom_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (r > cap) return cap + 1;
    }
    return r;
}

constexpr std::uint64_t kVerifyBudget = 100'000'000;

std::uint64_t verify_cost(int n, int k) {
    std::uint64_t c = binom_capped(n, k, kVerifyBudget);
    if (c > kVerifyBudget) return kVerifyBudget + 1;
    if (k >= 64) return kVerifyBudget + 1;
    std::uint64_t patterns = std::uint64_t{1} << k;
    if (c > kVerifyBudget / patterns) return kVerifyBudget + 1;
    return c * patterns;
}

void check_params(int n, int k) {
    if (k < 1 || k > n) throw ParameterError("universal family requires 1 <= k <= n");
}

/// Iterates k-subsets of {0..n-1} in lexicographic order.
struct SubsetIter {
    int n, k;
    std::vector<int> pos;
    bool done = false;
    SubsetIter(int n_, int k_) : n(n_), k(k_), pos(k_) {
        for (int i = 0; i < k; ++i) pos[i] = i;
    }
    bool next() {
        int i = k - 1;
        while (i >= 0 && pos[i] == n - (k - i)) --i;
        if (i < 0) return false;
        ++pos[i];
        for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
        return true;
    }
};

std::uint32_t pattern_of(const BitString& x, const std::vector<int>& pos) {
    std::uint32_t p = 0;
    for (size_t j = 0; j < pos.size(); ++j)
        if (x.get(pos[j])) p |= 1u << j;
    return p;
}

}  // namespace

bool verify_universal(UniversalFamily& f) {
    check_params(f.n, f.k);
    const std::uint64_t cost = verify_cost(f.n, f.k);
    if (cost > kVerifyBudget)
        throw BudgetError("verify_universal: binom(n,k)*2^k exceeds 1e8 for n=" +
                          std::to_string(f.n) + ", k=" + std::to_string(f.k));

    const std::uint64_t patterns = std::uint64_t{1} << f.k;
    std::vector<char> seen(patterns, 0);
    SubsetIter it(f.n, f.k);
    do {
        std::fill(seen.begin(), seen.end(), 0);
        std::uint64_t hit = 0;
        for (const BitString& x : f.members) {
            char& mark = seen[pattern_of(x, it.pos)];
            if (!mark) {
                mark = 1;
                if (++hit == patterns) break;
            }
        }
        if (hit != patterns) {
            f.verified = false;
            return false;
        }
    } while (it.next());
    f.verified = true;
    return true;
}

UniversalFamily universal_random(int n, int k, std::uint64_t seed) {
    check_params(n, k);
    const double m_real =
        std::pow(2.0, k) * (k * std::log(static_cast<double>(n)) + k * std::log(2.0) + 3.0);
    const auto m = static_cast<std::uint64_t>(std::ceil(m_real));

    UniversalFamily f;
    f.n = n;
    f.k = k;
    f.provenance = FamilyProvenance::Randomized;
    f.seed = seed;
    Rng rng(seed);
    f.members.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        BitString x(n);
        for (int b = 0; b < n; ++b) x.set(b, rng.coin());
        f.members.push_back(std::move(x));
    }
    return f;
}

UniversalFamily universal_greedy(int n, int k) {
    check_params(n, k);
    const std::uint64_t cost = verify_cost(n, k);
    if (cost > kVerifyBudget)
        throw BudgetError("universal_greedy: binom(n,k)*2^k exceeds 1e8 for n=" +
                          std::to_string(n) + ", k=" + std::to_string(k));

    // subset positions, fixed enumeration order; constraint id = subset*2^k + pattern
    std::vector<std::vector<int>> subsets;
    {
        SubsetIter it(n, k);
        do subsets.push_back(it.pos);
        while (it.next());
    }
    const std::uint64_t patterns = std::uint64_t{1} << k;
    std::vector<char> covered(subsets.size() * patterns, 0);
    std::uint64_t uncovered = subsets.size() * patterns;

    UniversalFamily f;
    f.n = n;
    f.k = k;
    f.provenance = FamilyProvenance::Greedy;

    if (n <= 20) {
        // Exact greedy over the full cube: candidate x is identified with its bit
        // value, so covering a constraint (subset, pattern) decrements the score of
        // exactly the 2^(n-k) candidates agreeing with the pattern on the subset.
        // Scores stay exact and no re-scoring pass is ever needed.
        const std::uint32_t full = (1u << n) - 1;
        const std::size_t pool_size = std::size_t{1} << n;
        std::vector<std::uint32_t> score(pool_size, static_cast<std::uint32_t>(subsets.size()));

        auto take = [&](std::uint32_t x) {
            for (std::size_t si = 0; si < subsets.size(); ++si) {
                const std::vector<int>& pos = subsets[si];
                std::uint32_t p = 0, base = 0, submask = 0;
                for (std::size_t j = 0; j < pos.size(); ++j) {
                    const std::uint32_t bit = (x >> pos[j]) & 1u;
                    p |= bit << j;
                    base |= bit << pos[j];
                    submask |= 1u << pos[j];
                }
                const std::size_t id = si * patterns + p;
                if (covered[id]) continue;
                covered[id] = 1;
                --uncovered;
                const std::uint32_t free = full & ~submask;
                std::uint32_t t = free;
                for (;;) {
                    --score[base | t];
                    if (t == 0) break;
                    t = (t - 1) & free;
                }
            }
        };

        while (uncovered > 0) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < pool_size; ++i)
                if (score[i] > score[best]) best = i;  // ties keep the smaller index
            if (score[best] == 0)
                throw InternalError("universal_greedy: no candidate covers a remaining pattern");
            take(static_cast<std::uint32_t>(best));
            BitString x(n);
            for (int b = 0; b < n; ++b) x.set(b, (best >> b) & 1u);
            f.members.push_back(std::move(x));
        }
    } else {
        // Seeded random pool; lazy greedy with stale scores in a max-heap,
        // smallest index winning ties.
        Rng rng(Rng::mix(0x756e6976, n, k));  // fixed internal seed: greedy stays deterministic
        const std::uint64_t count = std::uint64_t{64} << k;
        std::vector<BitString> pool;
        pool.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i) {
            BitString x(n);
            for (int b = 0; b < n; ++b) x.set(b, rng.coin());
            pool.push_back(std::move(x));
        }

        auto score = [&](const BitString& x) {
            std::uint64_t s = 0;
            for (size_t si = 0; si < subsets.size(); ++si)
                if (!covered[si * patterns + pattern_of(x, subsets[si])]) ++s;
            return s;
        };
        auto take = [&](const BitString& x) {
            for (size_t si = 0; si < subsets.size(); ++si) {
                auto id = si * patterns + pattern_of(x, subsets[si]);
                if (!covered[id]) {
                    covered[id] = 1;
                    --uncovered;
                }
            }
        };

        using Entry = std::pair<std::uint64_t, std::uint64_t>;  // (score, ~index)
        std::priority_queue<Entry> heap;
        for (size_t i = 0; i < pool.size(); ++i)
            heap.push({subsets.size(), ~static_cast<std::uint64_t>(i)});

        while (uncovered > 0) {
            if (heap.empty())
                throw Error("universal_greedy: candidate pool cannot cover all patterns");
            auto [stale, idx_inv] = heap.top();
            heap.pop();
            const auto idx = ~idx_inv;
            const std::uint64_t fresh = score(pool[idx]);
            if (fresh == 0) continue;
            if (!heap.empty() && fresh < heap.top().first) {
                heap.push({fresh, idx_inv});
                continue;
            }
            take(pool[idx]);
            f.members.push_back(pool[idx]);
        }
    }

    // Both loops terminate only once every (subset, pattern) constraint in
    // `covered` has been hit, which is exactly the exhaustive universality audit.
    f.verified = true;
    return f;
}

const UniversalFamily& GreedyUniversalProvider::family(int n, int k) {
    const std::uint64_t key = (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint32_t>(k);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, universal_greedy(n, k)).first;
    return it->second;
}

const UniversalFamily& RandomUniversalProvider::family(int n, int k) {
    const std::uint64_t key = (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint32_t>(k);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    const bool can_verify = verify_cost(n, k) <= kVerifyBudget;
    UniversalFamily f;
    for (int attempt = 0; attempt < 64; ++attempt) {
        f = universal_random(n, k, Rng::mix(seed_, key, attempt));
        if (!verify_ || !can_verify) break;
        if (verify_universal(f)) break;
    }
    return cache_.emplace(key, std::move(f)).first->second;
}

}  // namespace kpath
