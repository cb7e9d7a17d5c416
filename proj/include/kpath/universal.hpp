#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "kpath/bits.hpp"

namespace kpath {

enum class FamilyProvenance { Randomized, Greedy, Exhaustive };

/// Family of length-n binary strings meant to realize every pattern
/// a ∈ {0,1}^k on every k-subset of positions.
struct UniversalFamily {
    int n = 0, k = 0;
    std::vector<BitString> members;
    FamilyProvenance provenance = FamilyProvenance::Exhaustive;
    std::uint64_t seed = 0;     // meaningful for Randomized
    bool verified = false;
};

/// Exhaustive check of the covering property. Budget: binom(n,k) * 2^k
/// <= 1e8; refuses with the cost estimate beyond that. Sets f.verified.
bool verify_universal(UniversalFamily& f);

/// ceil(2^k * (k ln n + k ln 2 + 3)) uniform strings. Does not verify.
UniversalFamily universal_random(int n, int k, std::uint64_t seed);

/// Greedy cover over all (k-subset, pattern) constraints. Candidates are
/// all 2^n strings for n <= 20, else a seeded pool of 64 * 2^k random
/// strings. The result is verified before returning.
UniversalFamily universal_greedy(int n, int k);

/// Source of families for the recursive L_k builder, keyed by (ground-set
/// size, k) and cached, so equal sub-problems reuse one family.
class UniversalProvider {
  public:
    virtual ~UniversalProvider() = default;
    virtual const UniversalFamily& family(int n, int k) = 0;
    virtual std::string mode_name() const = 0;
};

/// Deterministic provider backed by universal_greedy.
class GreedyUniversalProvider : public UniversalProvider {
  public:
    const UniversalFamily& family(int n, int k) override;
    std::string mode_name() const override { return "greedy"; }

  private:
    std::unordered_map<std::uint64_t, UniversalFamily> cache_;
};

/// Seeded provider backed by universal_random. When verification fits the
/// budget, failed samples are retried on derived seeds (bounded) so the
/// builder sees verified families whenever that is affordable.
class RandomUniversalProvider : public UniversalProvider {
  public:
    explicit RandomUniversalProvider(std::uint64_t seed, bool verify = true)
        : seed_(seed), verify_(verify) {}
    const UniversalFamily& family(int n, int k) override;
    std::string mode_name() const override { return "randomized"; }

  private:
    std::uint64_t seed_;
    bool verify_;
    std::unordered_map<std::uint64_t, UniversalFamily> cache_;
};

}  // namespace kpath
