/**
 * @file matrix.hpp
 * @brief Dense exact matrices over the Gaussian rationals.
 */

#pragma once

#include "opgraph/scalar.hpp"

#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace opgraph {

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = GaussRational(1);
        return m;
    }

    static ExactMatrix zero(std::size_t rows, std::size_t cols) { return ExactMatrix(rows, cols); }

    /// Build from nested initializer rows; all rows must have equal length.
    static ExactMatrix from_rows(std::initializer_list<std::initializer_list<GaussRational>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.begin()->size();
        ExactMatrix m(r, c);
        std::size_t ri = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw std::invalid_argument("ragged rows");
            std::size_t ci = 0;
            for (const auto& v : row) m(ri, ci++) = v;
            ++ri;
        }
        return m;
    }

    static ExactMatrix from_vector(const std::vector<GaussRational>& v,
                                   std::size_t rows, std::size_t cols) {
        if (v.size() != rows * cols) throw std::invalid_argument("vector length mismatch");
        ExactMatrix m(rows, cols);
        m.entries_ = v;
        return m;
    }

    static ExactMatrix diagonal(const std::vector<GaussRational>& d) {
        ExactMatrix m(d.size(), d.size());
        for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    GaussRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const GaussRational& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    const std::vector<GaussRational>& entries() const { return entries_; }

    /// Row-major flattening; the coordinates used by Subspace throughout.
    std::vector<GaussRational> vectorize() const { return entries_; }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    ExactMatrix operator-() const {
        ExactMatrix m(rows_, cols_);
        for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = -entries_[k];
        return m;
    }

    ExactMatrix& operator+=(const ExactMatrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }
    ExactMatrix& operator-=(const ExactMatrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }
    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }

    friend ExactMatrix operator*(const GaussRational& s, const ExactMatrix& m) {
        ExactMatrix r(m.rows_, m.cols_);
        for (std::size_t k = 0; k < m.entries_.size(); ++k) r.entries_[k] = s * m.entries_[k];
        return r;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        ExactMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const GaussRational& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const GaussRational& bkj = b(k, j);
                    if (!bkj.is_zero()) r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    ExactMatrix transpose() const {
        ExactMatrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    ExactMatrix conjugate_transpose() const {
        ExactMatrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c).conj();
        return m;
    }

    GaussRational trace() const {
        if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
        GaussRational t(0);
        for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
        return t;
    }

    /// Nonnegative power; use explicit inverses for negative exponents.
    ExactMatrix pow(unsigned long e) const {
        if (!is_square()) throw std::invalid_argument("power of non-square matrix");
        ExactMatrix result = identity(rows_);
        ExactMatrix base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    bool commutes_with(const ExactMatrix& o) const { return (*this) * o == o * (*this); }

    std::vector<GaussRational> apply(const std::vector<GaussRational>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
        std::vector<GaussRational> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
        return out;
    }

private:
    void check_same_shape(const ExactMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussRational> entries_;  // row-major, length rows*cols
};

/// Stack two matrices vertically (equal column counts).
inline ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    ExactMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, c) = b(r, c);
    return m;
}

/// Matrix whose columns are the given equal-length vectors.
inline ExactMatrix matrix_from_columns(const std::vector<std::vector<GaussRational>>& cols) {
    if (cols.empty()) return ExactMatrix(0, 0);
    std::size_t n = cols.front().size();
    ExactMatrix m(n, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != n) throw std::invalid_argument("ragged columns");
        for (std::size_t r = 0; r < n; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

/// Matrix whose rows are the given equal-length vectors.
inline ExactMatrix matrix_from_row_vectors(const std::vector<std::vector<GaussRational>>& rows) {
    if (rows.empty()) return ExactMatrix(0, 0);
    std::size_t n = rows.front().size();
    ExactMatrix m(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != n) throw std::invalid_argument("ragged rows");
        for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

inline ExactMatrix block_diagonal(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
    return m;
}

}  // namespace opgraph
