#include "polymo/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace polymo {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

BigInt IntMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { swap = i; break; }
            if (swap < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                BigInt t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                // Bareiss: division is exact
                m.at(i, j) = t / prev;
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(IntMatrix& m, int a, int b) {
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
void add_row_multiple(IntMatrix& m, int dst, int src, const BigInt& c) {
    for (int j = 0; j < m.cols(); ++j) m.at(dst, j) += c * m.at(src, j);
}
void add_col_multiple(IntMatrix& m, int dst, int src, const BigInt& c) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, dst) += c * m.at(i, src);
}
void negate_row(IntMatrix& m, int r) {
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

// Nearest-integer quotient keeps the remainders shrinking fast.
BigInt round_quotient(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r > abs(b)) q += 1;
    return q;
}

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& A) {
    const int m = A.rows(), k = A.cols();
    SmithNormalForm out{IntMatrix::identity(m), A, IntMatrix::identity(k)};
    IntMatrix& D = out.D;
    IntMatrix& U = out.U;
    IntMatrix& V = out.V;

    int t = 0;
    const int bound = std::min(m, k);
    while (t < bound) {
        // deterministic pivot: minimal |value|, ties by row then column
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < k; ++j) {
                if (D.at(i, j) == 0) continue;
                if (pi < 0 || abs(D.at(i, j)) < abs(D.at(pi, pj))) { pi = i; pj = j; }
            }
        if (pi < 0) break;
        if (pi != t) { swap_rows(D, t, pi); swap_rows(U, t, pi); }
        if (pj != t) { swap_cols(D, t, pj); swap_cols(V, t, pj); }

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < m; ++i) {
                if (D.at(i, t) == 0) continue;
                BigInt q = round_quotient(D.at(i, t), D.at(t, t));
                add_row_multiple(D, i, t, -q);
                add_row_multiple(U, i, t, -q);
                if (D.at(i, t) != 0) {
                    swap_rows(D, t, i);
                    swap_rows(U, t, i);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < k; ++j) {
                if (D.at(t, j) == 0) continue;
                BigInt q = round_quotient(D.at(t, j), D.at(t, t));
                add_col_multiple(D, j, t, -q);
                add_col_multiple(V, j, t, -q);
                if (D.at(t, j) != 0) {
                    swap_cols(D, t, j);
                    swap_cols(V, t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // divisibility: pivot must divide the rest of the submatrix
            for (int i = t + 1; i < m && !dirty; ++i)
                for (int j = t + 1; j < k && !dirty; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        add_row_multiple(D, t, i, 1);
                        add_row_multiple(U, t, i, 1);
                        dirty = true;
                    }
        }
        if (D.at(t, t) < 0) { negate_row(D, t); negate_row(U, t); }
        ++t;
    }
    return out;
}

IntMatrix hermite_row_form(const IntMatrix& A) {
    IntMatrix H = A;
    const int m = H.rows(), n = H.cols();
    int r = 0;
    for (int j = 0; j < n && r < m; ++j) {
        int pivot = -1;
        for (int i = r; i < m; ++i)
            if (H.at(i, j) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r) swap_rows(H, r, pivot);
        // clear below with euclidean row steps
        for (int i = r + 1; i < m; ++i) {
            while (H.at(i, j) != 0) {
                BigInt q = round_quotient(H.at(i, j), H.at(r, j));
                add_row_multiple(H, i, r, -q);
                if (H.at(i, j) != 0) swap_rows(H, r, i);
            }
        }
        if (H.at(r, j) < 0) negate_row(H, r);
        for (int i = 0; i < r; ++i) {
            BigInt q, rem;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), H.at(i, j).get_mpz_t(),
                        H.at(r, j).get_mpz_t());
            if (q != 0) add_row_multiple(H, i, r, -q);
        }
        ++r;
    }
    return H;
}

}  // namespace polymo
