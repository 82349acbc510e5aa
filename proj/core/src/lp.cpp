#include "curvachay/lp.hpp"

#include "curvachay/errors.hpp"

namespace curvachay {

namespace {

// Dense tableau simplex over exact rationals, Bland's rule throughout.
// Rows 0..m-1 are constraints, row m the objective. Basis column ids:
// structural variables 0..n-1, slacks n..n+m-1, artificials beyond.
class Tableau {
  public:
    Tableau(const RatMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c)
        : m_(a.rows()), n_(a.cols()) {
        rows_.assign(m_ + 1, std::vector<Rational>(n_ + m_ + 1, Rational(0)));
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) rows_[i][j] = a.at(i, j);
            rows_[i][n_ + i] = 1;
            rows_[i].back() = b[i];
            basis_[i] = n_ + i;
        }
        for (int j = 0; j < n_; ++j) rows_[m_][j] = c[j];
    }

    // phase 1: drive artificial variables out of rows with negative b
    bool make_feasible() {
        std::vector<int> art_rows;
        for (int i = 0; i < m_; ++i)
            if (rows_[i].back() < 0) art_rows.push_back(i);
        if (art_rows.empty()) return true;

        const int base_cols = static_cast<int>(rows_[0].size());  // includes rhs
        const long k = static_cast<long>(art_rows.size());
        std::vector<Rational> saved = rows_[m_];
        for (auto& row : rows_) row.insert(row.end() - 1, k, Rational(0));
        int next_art = base_cols - 1;
        for (int i : art_rows) {
            for (auto& v : rows_[i]) v = -v;
            rows_[i][next_art] = 1;
            basis_[i] = next_art;
            ++next_art;
        }
        // phase-1 objective (sum of artificials) reduced over the basis:
        // unit cost per artificial minus its basic row
        std::vector<Rational> obj(rows_[0].size(), Rational(0));
        for (int i : art_rows)
            for (std::size_t j = 0; j < obj.size(); ++j) obj[j] -= rows_[i][j];
        for (int j = base_cols - 1; j < base_cols - 1 + k; ++j) obj[j] += 1;
        rows_[m_] = obj;
        pivot_until_optimal();
        if (rows_[m_].back() != 0) return false;  // infeasible: artificials stuck positive

        // pivot remaining basic artificials out; all-zero rows are redundant
        std::vector<int> drop_rows;
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < base_cols - 1) continue;
            bool pivoted = false;
            for (int j = 0; j < base_cols - 1 && !pivoted; ++j)
                if (rows_[i][j] != 0) {
                    pivot(i, j);
                    pivoted = true;
                }
            if (!pivoted) drop_rows.push_back(i);
        }
        for (auto it = drop_rows.rbegin(); it != drop_rows.rend(); ++it) {
            rows_.erase(rows_.begin() + *it);
            basis_.erase(basis_.begin() + *it);
            --m_;
        }
        for (auto& row : rows_) row.erase(row.end() - 1 - k, row.end() - 1);
        rows_[m_] = saved;
        for (int i = 0; i < m_; ++i) reduce_objective(i);
        return true;
    }

    LpResult::Status optimize() { return pivot_until_optimal(); }

    Rational objective_value() const { return -rows_[m_].back(); }

    std::vector<Rational> solution() const {
        std::vector<Rational> x(n_, Rational(0));
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = rows_[i].back();
        return x;
    }

  private:
    void reduce_objective(int row) {
        Rational f = rows_[m_][basis_[row]];
        if (f == 0) return;
        for (std::size_t j = 0; j < rows_[m_].size(); ++j) rows_[m_][j] -= f * rows_[row][j];
    }

    void pivot(int row, int col) {
        Rational p = rows_[row][col];
        for (auto& v : rows_[row]) v /= p;
        for (int i = 0; i <= m_; ++i) {
            if (i == row || rows_[i][col] == 0) continue;
            Rational f = rows_[i][col];
            for (std::size_t j = 0; j < rows_[i].size(); ++j) rows_[i][j] -= f * rows_[row][j];
        }
        basis_[row] = col;
    }

    LpResult::Status pivot_until_optimal() {
        const int cols = static_cast<int>(rows_[0].size()) - 1;
        while (true) {
            int enter = -1;
            for (int j = 0; j < cols; ++j)
                if (rows_[m_][j] < 0) {  // Bland: lowest index with negative reduced cost
                    enter = j;
                    break;
                }
            if (enter < 0) return LpResult::Status::optimal;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m_; ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rational ratio = rows_[i].back() / rows_[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return LpResult::Status::unbounded;
            pivot(leave, enter);
        }
    }

    int m_, n_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> basis_;
};

}  // namespace

LpResult lp_minimize(const RatMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
    const int m = a.rows();
    const int n = a.cols();
    // split free variables: x = x+ - x-, minimize c.(x+ - x-)
    RatMatrix a2(m, 2 * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            a2.at(i, j) = a.at(i, j);
            a2.at(i, n + j) = -a.at(i, j);
        }
    std::vector<Rational> c2(2 * n);
    for (int j = 0; j < n; ++j) {
        c2[j] = c[j];
        c2[n + j] = -c[j];
    }

    Tableau t(a2, b, c2);
    LpResult res;
    if (!t.make_feasible()) {
        res.status = LpResult::Status::infeasible;
        return res;
    }
    res.status = t.optimize();
    if (res.status != LpResult::Status::optimal) return res;
    res.objective = t.objective_value();
    std::vector<Rational> split = t.solution();
    res.x.resize(n);
    for (int j = 0; j < n; ++j) res.x[j] = split[j] - split[n + j];
    return res;
}

}  // namespace curvachay
