#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace kpath {

/// Fixed-length bit string over positions 0..n-1, packed into 64-bit words.
/// Used for subset/characteristic-vector work (universal-set members,
/// symbol sets in the L_k builder).
class BitString {
  public:
    BitString() = default;
    explicit BitString(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitString all(int n) {
        BitString b(n);
        for (int i = 0; i < n; ++i) b.set(i, true);
        return b;
    }

    int length() const { return n_; }

    bool get(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(int i, bool v) {
        assert(i >= 0 && i < n_);
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }

    BitString and_with(const BitString& o) const {
        assert(n_ == o.n_);
        BitString r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }

    BitString and_not(const BitString& o) const {
        assert(n_ == o.n_);
        BitString r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }

    /// 0-based positions of set bits, ascending.
    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (size_t b = 0; b < w_.size(); ++b) {
            std::uint64_t x = w_[b];
            while (x) {
                out.push_back(static_cast<int>(b * 64) + std::countr_zero(x));
                x &= x - 1;
            }
        }
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

    bool operator==(const BitString& o) const { return n_ == o.n_ && w_ == o.w_; }

    std::uint64_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(n_);
        for (auto x : w_) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

  private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace kpath
