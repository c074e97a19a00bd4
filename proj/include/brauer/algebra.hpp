#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "brauer/linalg.hpp"
#include "brauer/poly.hpp"

namespace brauer {

/// Finite-dimensional associative algebra given by structure constants:
/// basis_i * basis_j = sum_k c(i,j,k) basis_k, with a designated two-sided
/// identity. Construction validates associativity on all basis triples.
template <FieldScalar K>
class StructureConstantAlgebra {
public:
    static StructureConstantAlgebra make(int n, std::vector<K> table, std::vector<K> one) {
        if (n < 1) throw std::invalid_argument("dimension must be positive");
        if (table.size() != static_cast<size_t>(n) * static_cast<size_t>(n) * static_cast<size_t>(n))
            throw std::invalid_argument("structure table must have n^3 entries");
        if (one.size() != static_cast<size_t>(n))
            throw std::invalid_argument("identity coordinates must have length n");
        StructureConstantAlgebra a(n, std::move(table), std::move(one));
        a.validate();
        return a;
    }

    int dim() const { return n_; }
    const K& c(int i, int j, int k) const {
        return c_[(static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)) *
                      static_cast<size_t>(n_) +
                  static_cast<size_t>(k)];
    }
    const std::vector<K>& one() const { return one_; }
    const K& sample() const { return c_[0]; }
    K zero_scalar() const { return c_[0].zero_like(); }
    K one_scalar() const { return c_[0].one_like(); }

    std::vector<K> zero_vec() const {
        return std::vector<K>(static_cast<size_t>(n_), zero_scalar());
    }
    std::vector<K> basis_vec(int i) const {
        auto v = zero_vec();
        v[static_cast<size_t>(i)] = one_scalar();
        return v;
    }

    std::vector<K> mul(const std::vector<K>& x, const std::vector<K>& y) const {
        std::vector<K> out = zero_vec();
        for (int i = 0; i < n_; ++i) {
            if (x[static_cast<size_t>(i)].is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                if (y[static_cast<size_t>(j)].is_zero()) continue;
                K xy = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
                for (int k = 0; k < n_; ++k) {
                    const K& ck = c(i, j, k);
                    if (ck.is_zero()) continue;
                    out[static_cast<size_t>(k)] = out[static_cast<size_t>(k)] + xy * ck;
                }
            }
        }
        return out;
    }

private:
    StructureConstantAlgebra(int n, std::vector<K> table, std::vector<K> one)
        : n_(n), c_(std::move(table)), one_(std::move(one)) {}

    static bool vec_close(const std::vector<K>& a, const std::vector<K>& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (!negligible(a[i] - b[i])) return false;
        return true;
    }

    void validate() const {
        // two-sided identity on every basis element
        for (int i = 0; i < n_; ++i) {
            auto b = basis_vec(i);
            if (!vec_close(mul(one_, b), b) || !vec_close(mul(b, one_), b))
                throw std::invalid_argument("identity coordinates do not act as identity on basis " +
                                            std::to_string(i));
        }
        // associativity on all basis triples
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                auto bij = row(i, j);
                for (int k = 0; k < n_; ++k) {
                    auto lhs = mul(bij, basis_vec(k));
                    auto rhs = mul(basis_vec(i), row(j, k));
                    if (!vec_close(lhs, rhs))
                        throw std::invalid_argument("structure table is not associative at triple (" +
                                                    std::to_string(i) + "," + std::to_string(j) + "," +
                                                    std::to_string(k) + ")");
                }
            }
    }

    std::vector<K> row(int i, int j) const {
        std::vector<K> out;
        out.reserve(static_cast<size_t>(n_));
        for (int k = 0; k < n_; ++k) out.push_back(c(i, j, k));
        return out;
    }

    int n_;
    std::vector<K> c_;
    std::vector<K> one_;
};

/// M_n over the base field, on the matrix-unit basis e_{ij} ordered row-major;
/// e_{ij} e_{kl} = [j == k] e_{il}.
template <FieldScalar K>
StructureConstantAlgebra<K> matrix_algebra(const K& one, int n) {
    if (n < 1) throw std::invalid_argument("matrix size must be positive");
    const K zero = one.zero_like();
    int d = n * n;
    std::vector<K> table(static_cast<size_t>(d) * d * d, zero);
    auto idx = [d](int i, int j, int k) {
        return (static_cast<size_t>(i) * static_cast<size_t>(d) + static_cast<size_t>(j)) *
                   static_cast<size_t>(d) +
               static_cast<size_t>(k);
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int cc = 0; cc < n; ++cc)
                for (int dd = 0; dd < n; ++dd)
                    if (b == cc) table[idx(a * n + b, cc * n + dd, a * n + dd)] = one;
    std::vector<K> unit(static_cast<size_t>(d), zero);
    for (int a = 0; a < n; ++a) unit[static_cast<size_t>(a * n + a)] = one;
    return StructureConstantAlgebra<K>::make(d, std::move(table), std::move(unit));
}

/// Basis pairs ordered lexicographically, (i, j) -> i * dim(B) + j.
template <FieldScalar K>
StructureConstantAlgebra<K> tensor_product(const StructureConstantAlgebra<K>& A,
                                           const StructureConstantAlgebra<K>& B) {
    int na = A.dim(), nb = B.dim(), n = na * nb;
    const K zero = A.zero_scalar();
    std::vector<K> table(static_cast<size_t>(n) * n * n, zero);
    auto pos = [n](int i, int j, int k) {
        return (static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)) *
                   static_cast<size_t>(n) +
               static_cast<size_t>(k);
    };
    for (int i1 = 0; i1 < na; ++i1)
        for (int i2 = 0; i2 < nb; ++i2)
            for (int j1 = 0; j1 < na; ++j1)
                for (int j2 = 0; j2 < nb; ++j2)
                    for (int k1 = 0; k1 < na; ++k1) {
                        const K& ca = A.c(i1, j1, k1);
                        if (ca.is_zero()) continue;
                        for (int k2 = 0; k2 < nb; ++k2) {
                            const K& cb = B.c(i2, j2, k2);
                            if (cb.is_zero()) continue;
                            table[pos(i1 * nb + i2, j1 * nb + j2, k1 * nb + k2)] = ca * cb;
                        }
                    }
    std::vector<K> one;
    one.reserve(static_cast<size_t>(n));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            one.push_back(A.one()[static_cast<size_t>(i)] * B.one()[static_cast<size_t>(j)]);
    return StructureConstantAlgebra<K>::make(n, std::move(table), std::move(one));
}

/// Same space, reversed multiplication: c_op(i,j,k) = c(j,i,k).
template <FieldScalar K>
StructureConstantAlgebra<K> opposite(const StructureConstantAlgebra<K>& A) {
    int n = A.dim();
    std::vector<K> table;
    table.reserve(static_cast<size_t>(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) table.push_back(A.c(j, i, k));
    return StructureConstantAlgebra<K>::make(n, std::move(table), A.one());
}

/// Solutions of x s = s x for every s in the list, as a kernel basis.
template <FieldScalar K>
std::vector<std::vector<K>> centralizer(const StructureConstantAlgebra<K>& A,
                                        const std::vector<std::vector<K>>& elems) {
    int n = A.dim();
    Matrix<K> m(n * static_cast<int>(elems.size()), n, A.zero_scalar());
    // row block per s: (x -> x s - s x) as a linear map applied to basis vectors
    for (size_t t = 0; t < elems.size(); ++t) {
        const auto& s = elems[t];
        for (int j = 0; j < n; ++j) {
            auto bj = A.basis_vec(j);
            auto diff_l = A.mul(bj, s);
            auto diff_r = A.mul(s, bj);
            for (int i = 0; i < n; ++i)
                m.at(static_cast<int>(t) * n + i, j) =
                    diff_l[static_cast<size_t>(i)] - diff_r[static_cast<size_t>(i)];
        }
    }
    return kernel_basis(std::move(m), A.zero_scalar());
}

template <FieldScalar K>
std::vector<std::vector<K>> center(const StructureConstantAlgebra<K>& A) {
    std::vector<std::vector<K>> basis;
    for (int i = 0; i < A.dim(); ++i) basis.push_back(A.basis_vec(i));
    return centralizer(A, basis);
}

/// Matrix of the enveloping action: column (i, j) holds the vectorized map
/// x -> b_i x b_j. Bijectivity (rank n^2) certifies central simplicity.
template <FieldScalar K>
Matrix<K> enveloping_matrix(const StructureConstantAlgebra<K>& A) {
    int n = A.dim();
    Matrix<K> m(n * n, n * n, A.zero_scalar());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int col = i * n + j;
            for (int x = 0; x < n; ++x) {
                auto v = A.mul(A.mul(A.basis_vec(i), A.basis_vec(x)), A.basis_vec(j));
                for (int r = 0; r < n; ++r)
                    m.at(x * n + r, col) = v[static_cast<size_t>(r)];
            }
        }
    return m;
}

template <FieldScalar K>
int enveloping_map_rank(const StructureConstantAlgebra<K>& A) {
    return rank(enveloping_matrix(A));
}

template <FieldScalar K>
bool is_central_simple(const StructureConstantAlgebra<K>& A) {
    return enveloping_map_rank(A) == A.dim() * A.dim();
}

}  // namespace brauer
