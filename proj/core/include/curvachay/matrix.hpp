#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvachay/rational.hpp"

namespace curvachay {

/// Dense matrix over exact rationals, row-major.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

    static RatMatrix identity(int n);
    static RatMatrix all_ones(int n);
    static RatMatrix diagonal(const std::vector<Rational>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_symmetric() const;
    bool operator==(const RatMatrix& other) const;

    RatMatrix operator+(const RatMatrix& other) const;
    RatMatrix operator-(const RatMatrix& other) const;
    RatMatrix operator*(const RatMatrix& other) const;
    RatMatrix scaled(const Rational& c) const;
    RatMatrix transposed() const;

    /// Extracts the submatrix with the given row and column index sets.
    RatMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

    /// Exact Gauss-Jordan inverse; nullopt when singular.
    std::optional<RatMatrix> inverse() const;

    /// Row sums, one per row.
    std::vector<Rational> row_sums() const;

    std::vector<std::vector<double>> to_double() const;

    /// CSV with exact "p/q" cells.
    std::string to_csv() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// M_11 - M_12 M_22^{-1} M_21 for the block partition given by the two
/// index sets. Throws SingularBlock when the lower-right block has no inverse.
RatMatrix schur_complement(const RatMatrix& m, const std::vector<int>& keep, const std::vector<int>& eliminate);

}  // namespace curvachay
