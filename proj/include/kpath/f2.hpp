#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kpath {

/// Dense matrix over GF(2) with k rows and n columns, k <= 64. Stored one
/// 64-bit word per column (bit r of column c = entry (r,c)), which makes
/// row-subset parities single popcounts.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool at(int r, int c) const { return (col_[c] >> r) & 1u; }
    void set(int r, int c, bool v);
    std::uint64_t column(int c) const { return col_[c]; }

    /// One hex string per row, row 0 first, n bits each (column 0 is the
    /// least significant hex bit).
    std::vector<std::string> hex_rows() const;

    bool operator==(const BitMatrix&) const = default;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint64_t> col_;
};

BitMatrix random_bit_matrix(int rows, int cols, std::uint64_t seed);

/// Determinant over GF(2) of the k x k matrix whose columns are the columns
/// of `a` selected by the 1-based index word `index` (length k = a.rows()).
/// Repeated indices give two equal columns, hence 0.
int phi_det(const BitMatrix& a, const std::vector<int>& index);

/// Rank over GF(2) of the k columns of `a` selected by 1-based indices.
int gf2_rank_of_columns(const BitMatrix& a, const std::vector<int>& index);

/// Family of k x n GF(2) matrices intended to witness every k-subset of
/// columns as invertible in at least one member.
struct CoveringFamily {
    int n = 0, k = 0;
    std::uint64_t seed = 0;
    std::vector<BitMatrix> members;
    bool verified = false;
};

/// ceil(2k * log2 n) independently random members. Does not verify.
CoveringFamily covering_random(int n, int k, std::uint64_t seed);

/// Checks every k-subset of [n] for an invertible submatrix in some member.
/// Budget: binom(n,k) <= 1e6. Sets f.verified on success.
bool verify_covering(CoveringFamily& f);

}  // namespace kpath
