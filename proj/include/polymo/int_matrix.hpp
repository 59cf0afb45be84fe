#pragma once

#include <vector>

#include "polymo/rational.hpp"

namespace polymo {

// Dense matrix over arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, 0) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

    // Exact determinant (square matrices), Bareiss fraction-free elimination.
    BigInt det() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;
};

struct SmithNormalForm {
    IntMatrix U;  // rows x rows, unimodular
    IntMatrix D;  // rows x cols, diagonal, d1 | d2 | ...
    IntMatrix V;  // cols x cols, unimodular
};

// D = U * A * V with the divisibility chain on the diagonal.
SmithNormalForm smith_normal_form(const IntMatrix& A);

// Unique row Hermite normal form of a full-row-rank matrix: row echelon,
// positive pivots, entries above each pivot reduced into [0, pivot).
// Canonicalizes a basis choice that is otherwise only fixed up to GL_r(Z).
IntMatrix hermite_row_form(const IntMatrix& A);

}  // namespace polymo
