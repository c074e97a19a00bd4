#pragma once

#include <utility>
#include <vector>

#include "brauer/padic.hpp"
#include "brauer/poly.hpp"
#include "brauer/rational.hpp"

namespace brauer {

template <FieldScalar K>
class Matrix {
public:
    Matrix(int rows, int cols, const K& fill)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& at(int i, int j) { return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }
    const K& at(int i, int j) const {
        return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (size_t i = 0; i < a_.size(); ++i)
            if (!(a_[i] == o.a_[i])) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        Matrix out(rows_, o.cols_, a_.empty() ? o.a_[0].zero_like() : a_[0].zero_like());
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const K& aik = at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) out.at(i, j) = out.at(i, j) + aik * o.at(k, j);
            }
        return out;
    }

private:
    int rows_, cols_;
    std::vector<K> a_;
};

/// Pivot selection. For exact fields any nonzero entry works; over Q_p the
/// minimal-valuation entry is chosen and entries with valuation beyond half
/// the working precision are not trusted as pivots for rank decisions.
template <class K>
struct PivotPolicy {
    static bool usable(const K& x) { return !x.is_zero(); }
    static bool better(const K& a, const K& b) {
        (void)a;
        (void)b;
        return false;
    }
};

template <>
struct PivotPolicy<PadicNumber> {
    static bool usable(const PadicNumber& x) {
        return !x.is_zero() && x.valuation() <= x.ctx().precision / 2;
    }
    static bool better(const PadicNumber& a, const PadicNumber& b) {
        return a.valuation() < b.valuation();
    }
};

namespace detail {

/// In-place row echelon; returns rank. `cols_used` records pivot columns.
template <FieldScalar K>
int echelonize(Matrix<K>& m, std::vector<int>* pivot_cols = nullptr) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int prow = -1;
        for (int i = rank; i < m.rows(); ++i) {
            if (!PivotPolicy<K>::usable(m.at(i, col))) continue;
            if (prow < 0 || PivotPolicy<K>::better(m.at(i, col), m.at(prow, col))) prow = i;
        }
        if (prow < 0) continue;
        if (prow != rank)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(prow, j), m.at(rank, j));
        K inv = m.at(rank, col).inverse();
        for (int j = col; j < m.cols(); ++j) m.at(rank, j) = m.at(rank, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank || m.at(i, col).is_zero()) continue;
            K factor = m.at(i, col);
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(rank, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

}  // namespace detail

template <FieldScalar K>
int rank(Matrix<K> m) {
    return detail::echelonize(m);
}

/// Fraction-free rank over Q: rows are cleared to integers, then Bareiss
/// one-step elimination with exact divisions.
int rank(Matrix<Rat> m);

/// Basis of the right kernel {x : m x = 0}.
template <FieldScalar K>
std::vector<std::vector<K>> kernel_basis(Matrix<K> m, const K& sample) {
    std::vector<int> pivot_cols;
    int r = detail::echelonize(m, &pivot_cols);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<std::vector<K>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<K> v(static_cast<size_t>(m.cols()), sample.zero_like());
        v[static_cast<size_t>(free)] = sample.one_like();
        for (int i = 0; i < r; ++i)
            v[static_cast<size_t>(pivot_cols[static_cast<size_t>(i)])] = -m.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <FieldScalar K>
K det(Matrix<K> m, const K& sample) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    K out = sample.one_like();
    int n = m.rows();
    for (int col = 0; col < n; ++col) {
        int prow = -1;
        for (int i = col; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            if (prow < 0 || PivotPolicy<K>::better(m.at(i, col), m.at(prow, col))) prow = i;
        }
        if (prow < 0) return sample.zero_like();
        if (prow != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(prow, j), m.at(col, j));
            out = -out;
        }
        const K pivot = m.at(col, col);
        out = out * pivot;
        K inv = pivot.inverse();
        for (int i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            K factor = m.at(i, col) * inv;
            for (int j = col; j < n; ++j) m.at(i, j) = m.at(i, j) - factor * m.at(col, j);
        }
    }
    return out;
}

}  // namespace brauer
