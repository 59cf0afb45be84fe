#pragma once

#include <map>
#include <optional>
#include <vector>

#include "polymo/rational.hpp"

namespace polymo {

// Dense matrix over Q.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    QMatrix operator*(const QMatrix& other) const;
    QVector apply(const QVector& x) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

struct LinearSolution {
    bool consistent = false;
    QVector particular;           // one solution of A x = b, when consistent
    std::vector<QVector> kernel;  // basis of the null space of A
    int rank = 0;
};

// Exact reduced row echelon solve: inconsistency report, a particular
// solution, and a kernel basis. Deterministic (first nonzero pivot per column).
LinearSolution solve_linear(const QMatrix& A, const QVector& b);

// Sparse vector over Q indexed by a fixed basis enumeration, kept sorted.
using SparseVec = std::map<int, Rational>;

// Incremental exact row reduction over sparse rows. Pivot of a row is its
// smallest index. Rows inserted in a fixed order give a deterministic pivot
// table; reduce() computes the unique normal form modulo the row span.
class SparseRowReducer {
public:
    // Reduces the row against the current table; inserts what is left.
    // Returns true when the row added a new pivot (was independent).
    bool insert(SparseVec row);

    // Normal form of v modulo the span of all inserted rows.
    SparseVec reduce(SparseVec v) const;

    int rank() const { return int(pivots_.size()); }
    const std::map<int, SparseVec>& pivot_rows() const { return pivots_; }

private:
    std::map<int, SparseVec> pivots_;  // pivot index -> row with unit pivot
};

}  // namespace polymo
