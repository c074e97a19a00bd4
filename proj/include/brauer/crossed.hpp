#pragma once

#include <memory>
#include <vector>

#include "brauer/algebra.hpp"
#include "brauer/extfield.hpp"

namespace brauer {

/// Cyclic Galois data for L/k: the generator automorphism and its powers.
/// Construction checks the order is exactly n = [L : k] and that the fixed
/// space of the generator is one-dimensional over the base.
template <FieldScalar K>
struct GaloisData {
    SimpleExtension<K> field;                 // L
    std::vector<Automorphism<K>> powers;      // sigma^0 .. sigma^{n-1}
    int order;

    const Automorphism<K>& sigma(int i) const {
        int n = order;
        return powers[static_cast<size_t>(((i % n) + n) % n)];
    }

    static std::shared_ptr<const GaloisData> make(const SimpleExtension<K>& L,
                                                  const Automorphism<K>& generator, int order) {
        if (order != L.degree())
            throw std::invalid_argument("cyclic order must equal the extension degree");
        std::vector<Automorphism<K>> powers;
        powers.push_back(Automorphism<K>::identity(L));
        for (int i = 1; i < order; ++i) powers.push_back(generator.compose(powers.back()));
        Automorphism<K> full = generator.compose(powers.back());
        if (!full.is_identity())
            throw std::invalid_argument("automorphism order exceeds the claimed order");
        for (int i = 1; i < order; ++i)
            if (powers[static_cast<size_t>(i)].is_identity())
                throw std::invalid_argument("automorphism order is a proper divisor of the claim");
        // fixed space of the generator must be exactly the base field
        int n = L.degree();
        Matrix<K> m(n, n, L.base_zero());
        for (int j = 0; j < n; ++j) {
            ExtElem<K> img = generator(ExtElem<K>(L.desc(), power_basis_vector(L, j)));
            for (int i = 0; i < n; ++i) {
                K v = img.coord(i);
                if (i == j) v = v - L.base_one();
                m.at(i, j) = v;
            }
        }
        if (static_cast<int>(kernel_basis(std::move(m), L.base_zero()).size()) != 1)
            throw std::invalid_argument("fixed field of the generator is larger than the base");
        return std::shared_ptr<const GaloisData>(new GaloisData{L, std::move(powers), order});
    }

private:
    static Poly<K> power_basis_vector(const SimpleExtension<K>& L, int j) {
        std::vector<K> c(static_cast<size_t>(j) + 1, L.base_zero());
        c.back() = L.base_one();
        return Poly<K>(std::move(c));
    }
};

/// Two-cocycle values on the cyclic group, index i standing for sigma^i.
template <FieldScalar K>
struct FactorSet {
    std::shared_ptr<const GaloisData<K>> galois;
    std::vector<ExtElem<K>> values;  // n*n, row-major in (i, j)

    const ExtElem<K>& at(int i, int j) const {
        int n = galois->order;
        return values[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
    }
    ExtElem<K>& at(int i, int j) {
        int n = galois->order;
        return values[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
    }
};

/// gamma_{s,t} gamma_{st,r} = s(gamma_{t,r}) gamma_{s,tr} over all n^3
/// triples, compared at working precision.
template <FieldScalar K>
bool verify_cocycle(const FactorSet<K>& fs) {
    int n = fs.galois->order;
    for (const auto& v : fs.values)
        if (v.is_zero()) throw std::invalid_argument("factor set has a zero value");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                ExtElem<K> lhs = fs.at(i, j) * fs.at((i + j) % n, l);
                ExtElem<K> rhs = fs.galois->sigma(i)(fs.at(j, l)) * fs.at(i, (j + l) % n);
                if (!negligible(lhs - rhs)) return false;
            }
    return true;
}

/// delta_{s,t} = mu_s s(mu_t) mu_{st}^{-1}; mu at the identity must be 1.
template <FieldScalar K>
FactorSet<K> coboundary_from(std::shared_ptr<const GaloisData<K>> galois,
                             const std::vector<ExtElem<K>>& mu) {
    int n = galois->order;
    if (static_cast<int>(mu.size()) != n) throw std::invalid_argument("mu must have n values");
    for (const auto& v : mu)
        if (v.is_zero()) throw std::invalid_argument("mu has a zero value");
    if (!(mu[0] == galois->field.one()))
        throw std::invalid_argument("mu at the identity must be normalized to 1");
    FactorSet<K> fs{galois, {}};
    fs.values.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ExtElem<K> v = mu[static_cast<size_t>(i)] * galois->sigma(i)(mu[static_cast<size_t>(j)]) *
                           mu[static_cast<size_t>((i + j) % n)].inverse();
            fs.values.push_back(std::move(v));
        }
    return fs;
}

/// The cyclic factor set of (sigma, L, r): 1 when i + j < n, r when i + j >= n.
template <FieldScalar K>
FactorSet<K> cyclic_factor_set(std::shared_ptr<const GaloisData<K>> galois, const K& r) {
    if (r.is_zero()) throw std::invalid_argument("r must be nonzero");
    int n = galois->order;
    ExtElem<K> one = galois->field.one();
    ExtElem<K> rl = galois->field.from_base(r);
    FactorSet<K> fs{galois, {}};
    fs.values.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) fs.values.push_back(i + j < n ? one : rl);
    return fs;
}

/// Crossed product (G, L, gamma) as a structure-constant algebra over the
/// base field. Basis: l_s u_i ordered with the L-basis index major, so entry
/// s * n + i multiplies by (l_s u_i)(l_t u_j) = l_s sigma^i(l_t) gamma_{i,j}
/// u_{i+j}.
template <FieldScalar K>
StructureConstantAlgebra<K> crossed_product(const FactorSet<K>& fs) {
    if (!verify_cocycle(fs)) throw std::invalid_argument("factor set violates the cocycle identity");
    const auto& galois = *fs.galois;
    int n = galois.order;
    int dim = n * n;
    const SimpleExtension<K>& L = galois.field;
    K zero = L.base_zero();

    std::vector<K> table(static_cast<size_t>(dim) * dim * dim, zero);
    auto pos = [dim](int a, int b, int c) {
        return (static_cast<size_t>(a) * static_cast<size_t>(dim) + static_cast<size_t>(b)) *
                   static_cast<size_t>(dim) +
               static_cast<size_t>(c);
    };

    // l_s as an extension element: the power-basis monomial x^s
    std::vector<ExtElem<K>> lbasis;
    for (int s = 0; s < n; ++s) {
        std::vector<K> c(static_cast<size_t>(s) + 1, zero);
        c.back() = L.base_one();
        lbasis.push_back(ExtElem<K>(L.desc(), Poly<K>(std::move(c))));
    }

    for (int s = 0; s < n; ++s)
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t)
                for (int j = 0; j < n; ++j) {
                    ExtElem<K> coeff =
                        lbasis[static_cast<size_t>(s)] * galois.sigma(i)(lbasis[static_cast<size_t>(t)]) *
                        fs.at(i, j);
                    int upower = (i + j) % n;
                    for (int m = 0; m < n; ++m) {
                        K c = coeff.coord(m);
                        if (c.is_zero()) continue;
                        table[pos(s * n + i, t * n + j, m * n + upower)] = c;
                    }
                }

    // the identity is gamma_{1,1}^{-1} u_1 (the cocycle identity forces
    // gamma_{1,t} constant in t, so this is two-sided)
    ExtElem<K> e = fs.at(0, 0).inverse();
    std::vector<K> one(static_cast<size_t>(dim), zero);
    for (int m = 0; m < n; ++m) one[static_cast<size_t>(m * n)] = e.coord(m);
    return StructureConstantAlgebra<K>::make(dim, std::move(table), std::move(one));
}

/// The cyclic algebra (sigma, L, r): relations u a = sigma(a) u, u^n = r.
template <FieldScalar K>
struct CyclicAlgebraSpec {
    std::shared_ptr<const GaloisData<K>> galois;
    K r;
};

template <FieldScalar K>
StructureConstantAlgebra<K> cyclic_algebra(const CyclicAlgebraSpec<K>& spec) {
    return crossed_product(cyclic_factor_set(spec.galois, spec.r));
}

/// Norm-coset equivalence over R with L = C: N(C^x) is the positive reals.
inline bool cyclic_equivalent_real(const Rat& r1, const Rat& r2) {
    if (r1.is_zero() || r2.is_zero()) throw std::invalid_argument("r must be nonzero");
    return r1.sign() == r2.sign();
}

/// Norm-coset equivalence over Q_p with unramified W: norms are exactly the
/// elements of valuation divisible by f, so r1 ~ r2 iff v(r1/r2) = 0 mod f.
inline bool cyclic_equivalent_unramified(const PadicNumber& r1, const PadicNumber& r2,
                                         const UnramifiedExtension& W) {
    if (r1.is_zero() || r2.is_zero()) throw std::invalid_argument("r must be nonzero");
    long diff = r1.valuation() - r2.valuation();
    return ((diff % W.local.f) + W.local.f) % W.local.f == 0;
}

}  // namespace brauer
