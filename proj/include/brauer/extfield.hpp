#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauer/errors.hpp"
#include "brauer/fields.hpp"
#include "brauer/linalg.hpp"
#include "brauer/padic.hpp"
#include "brauer/poly.hpp"
#include "brauer/rational.hpp"

namespace brauer {

template <FieldScalar K>
struct ExtensionDesc {
    Poly<K> modulus;  // monic, irreducible over the base field
    int degree;
    std::string label;
};

template <FieldScalar K>
class ExtElem;

/// Simple extension base[x]/(g). Elements are residue polynomials of degree
/// < deg g; arithmetic is mod g with inverses via the extended Euclid.
template <FieldScalar K>
class SimpleExtension {
public:
    /// Trusts g (monic, irreducible); callers certify via the construction route.
    static SimpleExtension from_certified(Poly<K> g, std::string label) {
        if (!g.is_monic()) throw std::invalid_argument("modulus must be monic");
        auto d = std::make_shared<ExtensionDesc<K>>();
        d->degree = g.degree();
        d->modulus = std::move(g);
        d->label = std::move(label);
        return SimpleExtension(std::move(d));
    }

    static SimpleExtension attach(std::shared_ptr<const ExtensionDesc<K>> d) {
        return SimpleExtension(std::move(d));
    }

    int degree() const { return d_->degree; }
    const Poly<K>& modulus() const { return d_->modulus; }
    const std::string& label() const { return d_->label; }
    const std::shared_ptr<const ExtensionDesc<K>>& desc() const { return d_; }

    K base_zero() const { return d_->modulus.lc().zero_like(); }
    K base_one() const { return d_->modulus.lc().one_like(); }

    ExtElem<K> zero() const { return ExtElem<K>(d_, Poly<K>()); }
    ExtElem<K> one() const { return ExtElem<K>(d_, Poly<K>::constant(base_one())); }
    ExtElem<K> generator() const {
        if (degree() == 1)  // base[x]/(x - c): the generator is the constant c
            return ExtElem<K>(d_, Poly<K>::constant(-d_->modulus[0]));
        return ExtElem<K>(d_, Poly<K>::gen(base_zero()));
    }
    ExtElem<K> from_base(const K& c) const { return ExtElem<K>(d_, Poly<K>::constant(c)); }
    ExtElem<K> from_coords(std::vector<K> coords) const {
        return ExtElem<K>(d_, Poly<K>(std::move(coords)));
    }

    bool same_field(const SimpleExtension& o) const {
        return d_ == o.d_ || d_->modulus == o.d_->modulus;
    }

private:
    explicit SimpleExtension(std::shared_ptr<const ExtensionDesc<K>> d) : d_(std::move(d)) {}
    std::shared_ptr<const ExtensionDesc<K>> d_;
};

template <FieldScalar K>
class ExtElem {
public:
    ExtElem(std::shared_ptr<const ExtensionDesc<K>> d, Poly<K> rep)
        : d_(std::move(d)), rep_(rep.mod(d_->modulus)) {}

    const std::shared_ptr<const ExtensionDesc<K>>& desc() const { return d_; }
    SimpleExtension<K> field() const { return SimpleExtension<K>::attach(d_); }
    const Poly<K>& rep() const { return rep_; }
    K coord(int i) const { return rep_.coeff_or_zero(i, d_->modulus.lc()); }
    int field_degree() const { return d_->degree; }

    ExtElem operator+(const ExtElem& o) const { return ExtElem(d_, rep_ + check(o).rep_); }
    ExtElem operator-(const ExtElem& o) const { return ExtElem(d_, rep_ - check(o).rep_); }
    ExtElem operator*(const ExtElem& o) const {
        return ExtElem(d_, (rep_ * check(o).rep_).mod(d_->modulus));
    }
    ExtElem operator-() const { return ExtElem(d_, -rep_); }

    ExtElem inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero in extension field");
        auto [g, s, t] = Poly<K>::ext_gcd(rep_, d_->modulus);
        (void)t;
        if (g.degree() != 0) throw std::domain_error("element not invertible: modulus is reducible");
        return ExtElem(d_, s.scaled(g.lc().inverse()));
    }
    ExtElem operator/(const ExtElem& o) const { return *this * o.inverse(); }

    ExtElem pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        ExtElem acc = one_like();
        ExtElem base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    bool is_zero() const { return rep_.is_zero(); }
    ExtElem zero_like() const { return ExtElem(d_, Poly<K>()); }
    ExtElem one_like() const {
        return ExtElem(d_, Poly<K>::constant(d_->modulus.lc().one_like()));
    }

    bool operator==(const ExtElem& o) const { return rep_ == check(o).rep_; }
    bool operator!=(const ExtElem& o) const { return !(*this == o); }

private:
    const ExtElem& check(const ExtElem& o) const {
        if (d_ != o.d_ && !(d_->modulus == o.d_->modulus))
            throw std::invalid_argument("mixed extension fields");
        return o;
    }

    std::shared_ptr<const ExtensionDesc<K>> d_;
    Poly<K> rep_;
};

/// Coordinatewise negligibility at working precision.
template <FieldScalar K>
bool negligible(const ExtElem<K>& x) {
    for (const K& c : x.rep().coeffs())
        if (!negligible(c)) return false;
    return true;
}

/// Units over Q_p invert through a Newton refinement of the exact residue
/// inverse: all-integral arithmetic, so no digits drop below the precision
/// cap (the generic Euclid erodes a few digits through p-divisible leads).
template <>
ExtElem<PadicNumber> ExtElem<PadicNumber>::inverse() const;

/// Base-linear field map determined by the image of the generator, which must
/// be a root of the modulus; evaluation makes it automatically multiplicative.
template <FieldScalar K>
class Automorphism {
public:
    static Automorphism make(const SimpleExtension<K>& host, ExtElem<K> gen_image) {
        if (!host.modulus().is_monic()) throw std::invalid_argument("bad host");
        // g(image) = 0 certifies that x -> image extends to a field map
        ExtElem<K> acc = host.zero();
        for (int i = host.modulus().degree(); i >= 0; --i) {
            acc = acc * gen_image;
            acc = acc + host.from_base(host.modulus()[i]);
        }
        if (!negligible(acc))
            throw std::invalid_argument("generator image is not a root of the modulus");
        return Automorphism(host, std::move(gen_image));
    }

    static Automorphism identity(const SimpleExtension<K>& host) {
        return Automorphism(host, host.generator());
    }

    const SimpleExtension<K>& host() const { return host_; }
    const ExtElem<K>& gen_image() const { return image_; }

    ExtElem<K> operator()(const ExtElem<K>& a) const {
        ExtElem<K> acc = host_.zero();
        for (int i = a.rep().degree(); i >= 0; --i) {
            acc = acc * image_;
            acc = acc + host_.from_base(a.rep()[i]);
        }
        return acc;
    }

    Automorphism compose(const Automorphism& o) const {  // this after o
        return Automorphism(host_, (*this)(o.image_));
    }

    Automorphism pow(int e) const {
        Automorphism acc = identity(host_);
        for (int i = 0; i < e; ++i) acc = compose(acc);
        return acc;
    }

    bool is_identity() const { return negligible(image_ - host_.generator()); }
    bool operator==(const Automorphism& o) const { return negligible(image_ - o.image_); }

private:
    Automorphism(SimpleExtension<K> host, ExtElem<K> image)
        : host_(std::move(host)), image_(std::move(image)) {}

    SimpleExtension<K> host_;
    ExtElem<K> image_;
};

/// Matrix of x -> a*x in the power basis; columns are the coordinates of
/// a * basis_j.
template <FieldScalar K>
Matrix<K> regular_rep(const ExtElem<K>& a) {
    int n = a.field_degree();
    Matrix<K> m(n, n, a.coord(0).zero_like());
    ExtElem<K> gen = a.field().generator();
    ExtElem<K> col = a;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m.at(i, j) = col.coord(i);
        if (j + 1 < n) col = col * gen;
    }
    return m;
}

/// Field norm N_{L/base}(a) = det of the regular representation.
template <FieldScalar K>
K norm(const ExtElem<K>& a) {
    return det(regular_rep(a), a.coord(0).zero_like());
}

template <FieldScalar K>
K trace(const ExtElem<K>& a) {
    Matrix<K> m = regular_rep(a);
    K out = a.coord(0).zero_like();
    for (int i = 0; i < m.rows(); ++i) out = out + m.at(i, i);
    return out;
}

// --- extensions of Q ---------------------------------------------------

/// Q[x]/(g). Irreducibility over Q is spot-checked: complete for degree <= 3
/// (square discriminant / rational roots), asserted by the caller above that.
SimpleExtension<Rat> make_extension(const Poly<Rat>& g);

// --- certified extensions of Q_p ---------------------------------------

/// Q_p[x]/(g) for g residue-irreducible or Eisenstein; anything else is
/// rejected as an uncertified modulus.
SimpleExtension<PadicNumber> make_extension(const Poly<PadicNumber>& g);

struct LocalData {
    int e;  // ramification index
    int f;  // residue degree
};

/// The unramified extension of Q_p of residue degree f: the coefficientwise
/// lift of the smallest irreducible of degree f over F_p, together with the
/// Frobenius automorphism (Hensel lift of the residue map x -> x^p).
struct UnramifiedExtension {
    std::shared_ptr<const PadicContext> ctx;
    SimpleExtension<PadicNumber> field;
    Automorphism<PadicNumber> frobenius;
    LocalData local;  // {1, f}
    std::shared_ptr<const FqContext> residue_field;
    PadicNumber uniformizer() const { return PadicNumber::from_integer(ctx->p, ctx); }
};

UnramifiedExtension unramified_extension(std::shared_ptr<const PadicContext> ctx, int f);

/// Eisenstein test over Z_p: non-leading coefficients of valuation >= 1,
/// constant term of valuation exactly 1.
bool is_eisenstein(const Poly<PadicNumber>& g);

/// Eisenstein test over the valuation ring of an unramified W: same shape,
/// with coefficient valuations measured by the extended valuation.
bool is_eisenstein(const Poly<ExtElem<PadicNumber>>& g, const UnramifiedExtension& host);

/// Totally ramified step directly above Q_p.
struct TotallyRamifiedExtension {
    std::shared_ptr<const PadicContext> ctx;
    SimpleExtension<PadicNumber> field;
    LocalData local;  // {deg g, 1}
    ExtElem<PadicNumber> uniformizer;
};

TotallyRamifiedExtension ramified_extension(std::shared_ptr<const PadicContext> ctx,
                                            const Poly<PadicNumber>& g);

/// Eisenstein step above an unramified W: the two-storey tower of the local
/// structure theorem, with e = deg g, f = [W : Q_p].
struct RamifiedTower {
    UnramifiedExtension base;
    SimpleExtension<ExtElem<PadicNumber>> field;
    LocalData local;
    ExtElem<ExtElem<PadicNumber>> uniformizer;
};

RamifiedTower ramified_extension(const UnramifiedExtension& base,
                                 const Poly<ExtElem<PadicNumber>>& g);

inline std::pair<int, int> ramification_data(const UnramifiedExtension& w) {
    return {w.local.e, w.local.f};
}
inline std::pair<int, int> ramification_data(const TotallyRamifiedExtension& l) {
    return {l.local.e, l.local.f};
}
inline std::pair<int, int> ramification_data(const RamifiedTower& l) {
    return {l.local.e, l.local.f};
}
/// A bare extension has no certified (e, f) attached.
[[noreturn]] inline std::pair<int, int> ramification_data(const SimpleExtension<PadicNumber>&) {
    throw Unsupported("extension was not built by a certified unramified/Eisenstein route");
}

/// Norm down the tower to Q_p.
inline PadicNumber norm_to_qp(const ExtElem<PadicNumber>& a) { return norm(a); }
inline PadicNumber norm_to_qp(const ExtElem<ExtElem<PadicNumber>>& a) { return norm(norm(a)); }

/// The unique extension of v_p: v(a) = v_p(N(a)) / [L : Q_p], normalized so
/// v(p) = 1. Empty for the zero element (infinite valuation).
template <class E>
std::optional<Rat> extended_valuation(const E& a) {
    if (a.is_zero()) return std::nullopt;
    auto nm = norm_to_qp(a);
    if (negligible(nm))
        throw PrecisionLoss("norm vanished at working precision; valuation undetermined");
    long n = total_degree(a);
    return Rat(Int(nm.valuation()), Int(n));
}

inline long total_degree(const ExtElem<PadicNumber>& a) { return a.field_degree(); }
inline long total_degree(const ExtElem<ExtElem<PadicNumber>>& a) {
    return a.field_degree() * a.desc()->modulus.lc().field_degree();
}

}  // namespace brauer
