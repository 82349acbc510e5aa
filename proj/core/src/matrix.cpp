#include "curvachay/matrix.hpp"

#include <sstream>

#include "curvachay/errors.hpp"

namespace curvachay {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::all_ones(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = 1;
    return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& d) {
    RatMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) = d[i];
    return m;
}

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
    RatMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + other.data_[k];
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
    RatMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - other.data_[k];
    return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    RatMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < other.cols_; ++j) out.at(i, j) += aik * other.at(k, j);
        }
    return out;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
    RatMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * c;
    return out;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

RatMatrix RatMatrix::submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    RatMatrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            out.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
    return out;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
    const int n = rows_;
    RatMatrix a = *this;
    RatMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rational p = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col) == 0) continue;
            Rational f = a.at(r, col);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<Rational> RatMatrix::row_sums() const {
    std::vector<Rational> sums(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) sums[i] += at(i, j);
    return sums;
}

std::vector<std::vector<double>> RatMatrix::to_double() const {
    std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i][j] = curvachay::to_double(at(i, j));
    return out;
}

std::string RatMatrix::to_csv() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ',';
            os << to_fraction_string(at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

RatMatrix schur_complement(const RatMatrix& m, const std::vector<int>& keep, const std::vector<int>& eliminate) {
    if (eliminate.empty()) return m.submatrix(keep, keep);
    RatMatrix m11 = m.submatrix(keep, keep);
    RatMatrix m12 = m.submatrix(keep, eliminate);
    RatMatrix m21 = m.submatrix(eliminate, keep);
    RatMatrix m22 = m.submatrix(eliminate, eliminate);
    auto inv = m22.inverse();
    if (!inv) throw SingularBlock("elimination block is singular in Schur complement");
    return m11 - m12 * (*inv) * m21;
}

}  // namespace curvachay
