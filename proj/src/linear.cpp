#include "polymo/linear.hpp"

#include <stdexcept>

namespace polymo {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
    QMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

QVector QMatrix::apply(const QVector& x) const {
    if (int(x.size()) != cols_) throw std::invalid_argument("matrix apply shape mismatch");
    QVector out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * x[j];
    return out;
}

LinearSolution solve_linear(const QMatrix& A, const QVector& b) {
    const int m = A.rows(), n = A.cols();
    if (int(b.size()) != m) throw std::invalid_argument("solve_linear shape mismatch");

    // augmented [A | b], forward + back substitution to full RREF
    QMatrix M(m, n + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, n) = b[i];
    }

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int p = -1;
        for (int i = row; i < m; ++i)
            if (M.at(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j <= n; ++j) std::swap(M.at(row, j), M.at(p, j));
        Rational inv = 1 / M.at(row, col);
        for (int j = col; j <= n; ++j) M.at(row, j) *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == row || M.at(i, col) == 0) continue;
            Rational f = M.at(i, col);
            for (int j = col; j <= n; ++j) M.at(i, j) -= f * M.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }

    LinearSolution sol;
    sol.rank = row;
    sol.consistent = true;
    for (int i = row; i < m; ++i)
        if (M.at(i, n) != 0) sol.consistent = false;

    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;

    if (sol.consistent) {
        sol.particular.assign(n, Rational(0));
        for (int r = 0; r < row; ++r) sol.particular[pivot_col[r]] = M.at(r, n);
    }
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        QVector v(n);
        v[c] = 1;
        for (int r = 0; r < row; ++r) v[pivot_col[r]] = -M.at(r, c);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

bool SparseRowReducer::insert(SparseVec row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    auto lead = row.begin();
    Rational inv = 1 / lead->second;
    SparseVec unit;
    for (auto& [idx, c] : row) unit[idx] = c * inv;
    pivots_.emplace(lead->first, std::move(unit));
    return true;
}

SparseVec SparseRowReducer::reduce(SparseVec v) const {
    // walk by increasing index; eliminating one pivot only touches larger indices
    for (auto it = v.begin(); it != v.end();) {
        auto piv = pivots_.find(it->first);
        if (piv == pivots_.end()) { ++it; continue; }
        Rational coeff = it->second;
        for (const auto& [idx, c] : piv->second) {
            auto [pos, inserted] = v.try_emplace(idx, Rational(0));
            pos->second -= coeff * c;
            if (pos->second == 0) v.erase(pos);
        }
        it = v.upper_bound(piv->first);
    }
    return v;
}

}  // namespace polymo
