#pragma once

#include <functional>
#include <string>
#include <vector>

#include "metaforge/scalars/padic.hpp"

namespace metaforge {

inline Rational ring_conj(const Rational& x) { return x; }
inline Padic ring_conj(const Padic& x) { return x; }

// Dense matrix over an arbitrary (possibly noncommutative) ring R.
// Elements must supply zero_like/one_like/is_zero/inverse/ring_conj via
// ADL; every matrix keeps a sample element so that zero and one can be
// manufactured for rings whose constants carry runtime parameters.
template <class R>
class Matrix {
  public:
    Matrix() = default;

    Matrix(int rows, int cols, const R& sample)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, zero_like(sample)) {}

    static Matrix identity(int n, const R& sample) {
        Matrix m(n, n, sample);
        for (int i = 0; i < n; ++i) m(i, i) = one_like(sample);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<R>>& rows) {
        Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.at(0).size()), rows[0][0]);
        for (int i = 0; i < m.rows_; ++i)
            for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const R& sample() const { return data_.at(0); }

    R& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const R& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_shape(b);
        Matrix r = a;
        for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = r.data_[k] + b.data_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_shape(b);
        Matrix r = a;
        for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = r.data_[k] - b.data_[k];
        return r;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.data_) x = zero_like(x) - x;
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw dimension_mismatch("Matrix product shape");
        Matrix r(a.rows_, b.cols_, a.sample());
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (is_zero(b(k, j))) continue;
                    r(i, j) = r(i, j) + a(i, k) * b(k, j);
                }
            }
        return r;
    }

    // left scalar: c * M
    friend Matrix operator*(const R& c, const Matrix& m) {
        Matrix r = m;
        for (auto& x : r.data_) x = c * x;
        return r;
    }
    // right scalar: M * c
    friend Matrix operator*(const Matrix& m, const R& c) {
        Matrix r = m;
        for (auto& x : r.data_) x = x * c;
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t k = 0; k < a.data_.size(); ++k)
            if (!(is_zero(a.data_[k] - b.data_[k]))) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix r(cols_, rows_, sample());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Matrix conj_transpose() const {
        Matrix r(cols_, rows_, sample());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = ring_conj((*this)(i, j));
        return r;
    }

    Matrix map(const std::function<R(const R&)>& f) const {
        Matrix r = *this;
        for (auto& x : r.data_) x = f(x);
        return r;
    }

    bool is_zero_matrix() const {
        for (const auto& x : data_)
            if (!is_zero(x)) return false;
        return true;
    }

    // Gauss-Jordan inverse using left row operations only, valid over any
    // division ring.
    Matrix inverse() const {
        if (rows_ != cols_) throw dimension_mismatch("Matrix inverse: not square");
        Matrix a = *this;
        Matrix inv = identity(rows_, sample());
        for (int col = 0; col < cols_; ++col) {
            int piv = -1;
            for (int i = col; i < rows_; ++i)
                if (!is_zero(a(i, col))) {
                    piv = i;
                    break;
                }
            if (piv < 0) throw singular_matrix("Matrix inverse: singular");
            a.swap_rows(piv, col);
            inv.swap_rows(piv, col);
            R pinv = ring_inverse(a(col, col));
            a.scale_row_left(col, pinv);
            inv.scale_row_left(col, pinv);
            for (int i = 0; i < rows_; ++i) {
                if (i == col || is_zero(a(i, col))) continue;
                R f = a(i, col);
                a.add_scaled_row(i, col, f);
                inv.add_scaled_row(i, col, f);
            }
        }
        return inv;
    }

    // Solve A x = b (b has matching row count, any column count).
    Matrix solve(const Matrix& b) const { return this->inverse() * b; }

    // Rank over a division ring (row echelon with left operations).
    int rank() const {
        Matrix a = *this;
        int r = 0;
        for (int col = 0; col < cols_ && r < rows_; ++col) {
            int piv = -1;
            for (int i = r; i < rows_; ++i)
                if (!is_zero(a(i, col))) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            a.swap_rows(piv, r);
            R pinv = ring_inverse(a(r, col));
            a.scale_row_left(r, pinv);
            for (int i = 0; i < rows_; ++i) {
                if (i == r || is_zero(a(i, col))) continue;
                a.add_scaled_row(i, r, a(i, col));
            }
            ++r;
        }
        return r;
    }

    // Determinant by fraction-free-ish elimination over a commutative field.
    R det() const {
        if (rows_ != cols_) throw dimension_mismatch("det: not square");
        Matrix a = *this;
        R result = one_like(sample());
        bool negate = false;
        for (int col = 0; col < cols_; ++col) {
            int piv = -1;
            for (int i = col; i < rows_; ++i)
                if (!is_zero(a(i, col))) {
                    piv = i;
                    break;
                }
            if (piv < 0) return zero_like(sample());
            if (piv != col) {
                a.swap_rows(piv, col);
                negate = !negate;
            }
            result = result * a(col, col);
            R pinv = ring_inverse(a(col, col));
            for (int i = col + 1; i < rows_; ++i) {
                if (is_zero(a(i, col))) continue;
                R f = a(i, col) * pinv;
                for (int j = col; j < cols_; ++j) a(i, j) = a(i, j) - f * a(col, j);
            }
        }
        if (negate) result = zero_like(result) - result;
        return result;
    }

    Matrix block(int i0, int j0, int nrows, int ncols) const {
        Matrix r(nrows, ncols, sample());
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < ncols; ++j) r(i, j) = (*this)(i0 + i, j0 + j);
        return r;
    }

    void set_block(int i0, int j0, const Matrix& b) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

    static Matrix block_diag(const std::vector<Matrix>& blocks) {
        int n = 0;
        for (const auto& b : blocks) n += b.rows();
        Matrix r(n, n, blocks.at(0).sample());
        int off = 0;
        for (const auto& b : blocks) {
            r.set_block(off, off, b);
            off += b.rows();
        }
        return r;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            s += "[";
            for (int j = 0; j < cols_; ++j) {
                s += str_of((*this)(i, j));
                if (j + 1 < cols_) s += ", ";
            }
            s += "]\n";
        }
        return s;
    }

  private:
    void require_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw dimension_mismatch("Matrix shape");
    }
    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void scale_row_left(int i, const R& f) {
        for (int c = 0; c < cols_; ++c) (*this)(i, c) = f * (*this)(i, c);
    }
    // row_i -= f * row_j
    void add_scaled_row(int i, int j, const R& f) {
        for (int c = 0; c < cols_; ++c) (*this)(i, c) = (*this)(i, c) - f * (*this)(j, c);
    }

    int rows_ = 0, cols_ = 0;
    std::vector<R> data_;
};

template <class R>
bool congruent(const Matrix<R>& a, const Matrix<R>& b, long long k) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!congruent(a(i, j), b(i, j), k)) return false;
    return true;
}

template <class R>
Matrix<R> commutator(const Matrix<R>& a, const Matrix<R>& b) {
    return a * b * a.inverse() * b.inverse();
}

}  // namespace metaforge
