/**
 * @file linalg.hpp
 * @brief Exact dense linear algebra: reduced row echelon form, rank,
 *        kernels, solving, and canonical subspaces.
 *
 * The reduced row echelon form is unique, so a Subspace stored as the RREF
 * of its spanning set is a canonical representative: two subspaces are equal
 * iff their stored bases are identical entry-wise. Scalars are auto-reduced
 * rationals, so every elimination step stores fully reduced values.
 */

#pragma once

#include "opgraph/matrix.hpp"

#include <optional>
#include <vector>

namespace opgraph {

struct RrefResult {
    ExactMatrix matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/// Gauss–Jordan elimination to the unique reduced row echelon form.
inline RrefResult rref(ExactMatrix m) {
    RrefResult out;
    std::size_t rows = m.rows(), cols = m.cols();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t pivot = lead;
        while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != lead)
            for (std::size_t c = 0; c < cols; ++c) std::swap(m(pivot, c), m(lead, c));
        GaussRational inv = m(lead, col).inverse();
        for (std::size_t c = col; c < cols; ++c) m(lead, c) = inv * m(lead, c);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m(r, col).is_zero()) continue;
            GaussRational f = m(r, col);
            for (std::size_t c = col; c < cols; ++c) m(r, c) -= f * m(lead, c);
        }
        out.pivot_columns.push_back(col);
        ++lead;
    }
    out.rank = out.pivot_columns.size();
    out.matrix = std::move(m);
    return out;
}

inline std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

/// Determinant by exact elimination with row-swap sign tracking.
inline GaussRational determinant(ExactMatrix m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows();
    GaussRational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return GaussRational(0);
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        GaussRational inv = m(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            GaussRational f = m(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

inline ExactMatrix inverse(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = m.rows();
    ExactMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = GaussRational(1);
    }
    RrefResult rr = rref(std::move(aug));
    // Invertible iff the pivots are exactly the left-block columns 0..n-1.
    if (rr.rank < n || rr.pivot_columns[n - 1] != n - 1)
        throw std::domain_error("matrix is singular");
    ExactMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = rr.matrix(r, n + c);
    return inv;
}

/// Solve a x = rhs exactly. Returns the particular solution with free
/// variables set to zero, or nullopt if the system is inconsistent.
inline std::optional<std::vector<GaussRational>> solve(const ExactMatrix& a,
                                                       const std::vector<GaussRational>& rhs) {
    if (rhs.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    ExactMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = rhs[r];
    }
    RrefResult rr = rref(std::move(aug));
    for (std::size_t k = 0; k < rr.pivot_columns.size(); ++k)
        if (rr.pivot_columns[k] == a.cols()) return std::nullopt;  // pivot in rhs column
    std::vector<GaussRational> x(a.cols());
    for (std::size_t k = 0; k < rr.pivot_columns.size(); ++k)
        x[rr.pivot_columns[k]] = rr.matrix(k, a.cols());
    return x;
}

/**
 * A linear subspace of coordinate space, stored canonically: the basis rows
 * are the nonzero rows of the RREF of any spanning set. Structural equality
 * of two Subspace values is subspace equality.
 */
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    static Subspace from_vectors(std::size_t ambient_dim,
                                 const std::vector<std::vector<GaussRational>>& vectors) {
        Subspace s(ambient_dim);
        if (vectors.empty()) return s;
        for (const auto& v : vectors)
            if (v.size() != ambient_dim)
                throw std::invalid_argument("Subspace: vector length mismatch");
        RrefResult rr = rref(matrix_from_row_vectors(vectors));
        for (std::size_t r = 0; r < rr.rank; ++r) {
            std::vector<GaussRational> row(ambient_dim);
            for (std::size_t c = 0; c < ambient_dim; ++c) row[c] = rr.matrix(r, c);
            s.basis_.push_back(std::move(row));
        }
        return s;
    }

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::vector<GaussRational>>& basis() const { return basis_; }

    bool contains(const std::vector<GaussRational>& v) const {
        if (v.size() != ambient_dim_) throw std::invalid_argument("contains: length mismatch");
        // Reduce v against the RREF basis; membership iff the residue is zero.
        std::vector<GaussRational> w = v;
        for (const auto& row : basis_) {
            std::size_t lead = leading_index(row);
            if (!w[lead].is_zero()) {
                GaussRational f = w[lead];  // basis rows have leading entry 1
                for (std::size_t c = lead; c < ambient_dim_; ++c) w[c] -= f * row[c];
            }
        }
        for (const auto& e : w)
            if (!e.is_zero()) return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        for (const auto& v : other.basis_)
            if (!contains(v)) return false;
        return true;
    }

    Subspace join(const std::vector<std::vector<GaussRational>>& vectors) const {
        std::vector<std::vector<GaussRational>> all = basis_;
        for (const auto& v : vectors) {
            if (v.size() != ambient_dim_) throw std::invalid_argument("join: length mismatch");
            all.push_back(v);
        }
        return from_vectors(ambient_dim_, all);
    }

    Subspace join(const Subspace& other) const {
        if (other.ambient_dim_ != ambient_dim_)
            throw std::invalid_argument("join: ambient dimension mismatch");
        return join(other.basis_);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    static std::size_t leading_index(const std::vector<GaussRational>& row) {
        for (std::size_t c = 0; c < row.size(); ++c)
            if (!row[c].is_zero()) return c;
        return row.size();
    }

    std::size_t ambient_dim_;
    std::vector<std::vector<GaussRational>> basis_;  // canonical RREF rows
};

/// Smallest subspace containing s and the given vectors.
inline Subspace span_join(const Subspace& s, const std::vector<std::vector<GaussRational>>& vectors) {
    return s.join(vectors);
}

inline bool contains(const Subspace& s, const std::vector<GaussRational>& v) {
    return s.contains(v);
}

/// Null space {v : m v = 0} as a canonical Subspace of dimension cols - rank.
inline Subspace kernel(const ExactMatrix& m) {
    RrefResult rr = rref(m);
    std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : rr.pivot_columns) is_pivot[p] = true;
    std::vector<std::vector<GaussRational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<GaussRational> v(cols);
        v[free] = GaussRational(1);
        for (std::size_t k = 0; k < rr.pivot_columns.size(); ++k)
            v[rr.pivot_columns[k]] = -rr.matrix(k, free);
        basis.push_back(std::move(v));
    }
    return Subspace::from_vectors(cols, basis);
}

}  // namespace opgraph
