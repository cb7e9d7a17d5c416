#include "kpath/f2.hpp"

#include <bit>
#include <cmath>

#include "kpath/errors.hpp"
#include "kpath/rng.hpp"

namespace kpath {

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), col_(cols, 0) {
    if (rows < 0 || rows > 64) throw ParameterError("BitMatrix rows must be in [0,64]");
    if (cols < 0) throw ParameterError("BitMatrix cols must be non-negative");
}

void BitMatrix::set(int r, int c, bool v) {
    const std::uint64_t m = std::uint64_t{1} << r;
    if (v)
        col_[c] |= m;
    else
        col_[c] &= ~m;
}

std::vector<std::string> BitMatrix::hex_rows() const {
    static const char* digits = "0123456789abcdef";
    std::vector<std::string> out;
    out.reserve(rows_);
    const int nibbles = (cols_ + 3) / 4;
    for (int r = 0; r < rows_; ++r) {
        std::string row(nibbles == 0 ? 1 : nibbles, '0');
        for (int c = 0; c < cols_; ++c) {
            if (!at(r, c)) continue;
            int nib = c / 4;
            int pos = static_cast<int>(row.size()) - 1 - nib;  // least significant last
            int cur = row[pos] <= '9' ? row[pos] - '0' : row[pos] - 'a' + 10;
            cur |= 1 << (c % 4);
            row[pos] = digits[cur];
        }
        out.push_back(std::move(row));
    }
    return out;
}

BitMatrix random_bit_matrix(int rows, int cols, std::uint64_t seed) {
    BitMatrix a(rows, cols);
    Rng rng(seed);
    const std::uint64_t mask = rows == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rows) - 1);
    for (int c = 0; c < cols; ++c) {
        std::uint64_t w = rng.next() & mask;
        for (int r = 0; r < rows; ++r)
            if ((w >> r) & 1u) a.set(r, c, true);
    }
    return a;
}

int gf2_rank_of_columns(const BitMatrix& a, const std::vector<int>& index) {
    std::vector<std::uint64_t> cols;
    cols.reserve(index.size());
    for (int i : index) {
        if (i < 1 || i > a.cols()) throw ParameterError("column index out of range");
        cols.push_back(a.column(i - 1));
    }
    int rank = 0;
    for (int r = 0; r < a.rows(); ++r) {
        const std::uint64_t bit = std::uint64_t{1} << r;
        int pivot = -1;
        for (size_t c = rank; c < cols.size(); ++c) {
            if (cols[c] & bit) {
                pivot = static_cast<int>(c);
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(cols[rank], cols[pivot]);
        for (size_t c = 0; c < cols.size(); ++c)
            if (static_cast<int>(c) != rank && (cols[c] & bit)) cols[c] ^= cols[rank];
        ++rank;
    }
    return rank;
}

int phi_det(const BitMatrix& a, const std::vector<int>& index) {
    if (static_cast<int>(index.size()) != a.rows())
        throw ParameterError("index word length must equal the row count");
    // square over GF(2): det = 1 iff full column rank
    return gf2_rank_of_columns(a, index) == a.rows() ? 1 : 0;
}

CoveringFamily covering_random(int n, int k, std::uint64_t seed) {
    if (k < 1 || k > n) throw ParameterError("covering_random requires 1 <= k <= n");
    if (k > 64) throw ParameterError("covering_random requires k <= 64");
    CoveringFamily f;
    f.n = n;
    f.k = k;
    f.seed = seed;
    const int m = static_cast<int>(std::ceil(2.0 * k * std::log2(static_cast<double>(n))));
    const int count = n == 1 ? 1 : m;  // log2(1) = 0; a single member suffices for k = n = 1
    f.members.reserve(count);
    for (int i = 0; i < count; ++i)
        f.members.push_back(random_bit_matrix(k, n, Rng::mix(seed, 0x636f76, i)));
    return f;
}

static std::uint64_t binom_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (r > cap) return cap + 1;
    }
    return r;
}

bool verify_covering(CoveringFamily& f) {
    constexpr std::uint64_t kBudget = 1'000'000;
    const std::uint64_t work = binom_capped(f.n, f.k, kBudget);
    if (work > kBudget)
        throw BudgetError("verify_covering: binom(n,k) exceeds 1e6 (estimated > " +
                          std::to_string(kBudget) + ")");

    std::vector<int> idx(f.k);
    for (int i = 0; i < f.k; ++i) idx[i] = i + 1;
    for (;;) {
        bool covered = false;
        for (const BitMatrix& a : f.members) {
            if (gf2_rank_of_columns(a, idx) == f.k) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            f.verified = false;
            return false;
        }
        // next k-combination of [n]
        int i = f.k - 1;
        while (i >= 0 && idx[i] == f.n - (f.k - 1 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < f.k; ++j) idx[j] = idx[j - 1] + 1;
    }
    f.verified = true;
    return true;
}

}  // namespace kpath
