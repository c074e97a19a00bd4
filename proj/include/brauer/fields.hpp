#pragma once

#include <memory>
#include <string>
#include <vector>

#include "brauer/poly.hpp"
#include "brauer/rational.hpp"

namespace brauer {

/// Element of the prime field F_p.
class FpElem {
public:
    FpElem(long p, long value);

    long p() const { return p_; }
    long value() const { return v_; }

    FpElem operator+(const FpElem& o) const { return make(p_, v_ + check(o).v_); }
    FpElem operator-(const FpElem& o) const { return make(p_, v_ - check(o).v_ + p_); }
    FpElem operator*(const FpElem& o) const { return make(p_, v_ * check(o).v_); }
    FpElem operator-() const { return make(p_, p_ - v_); }
    FpElem inverse() const;
    FpElem operator/(const FpElem& o) const { return *this * o.inverse(); }

    FpElem pow(const Int& e) const;

    bool is_zero() const { return v_ == 0; }
    FpElem zero_like() const { return make(p_, 0); }
    FpElem one_like() const { return make(p_, 1); }

    bool operator==(const FpElem& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const FpElem& o) const { return !(*this == o); }

private:
    static FpElem make(long p, long v) {
        FpElem e;
        e.p_ = p;
        e.v_ = ((v % p) + p) % p;
        return e;
    }
    const FpElem& check(const FpElem& o) const;
    FpElem() : p_(0), v_(0) {}

    long p_;
    long v_;
};

Poly<FpElem> fp_poly(long p, const std::vector<long>& coeffs);

/// Rabin-style irreducibility test over F_p: f irreducible of degree d iff
/// x^{p^d} = x mod f and gcd(x^{p^{d/l}} - x, f) = 1 for each prime l | d.
bool is_irreducible(const Poly<FpElem>& f);

/// Numerically smallest monic irreducible of degree d over F_p, polynomials
/// ordered by their coefficient vector read as a base-p integer.
Poly<FpElem> find_irreducible(long p, int d);

/// The field F_{p^d} presented as F_p[x]/(modulus).
struct FqContext {
    long p;
    Poly<FpElem> modulus;
    int degree;

    Int card() const { return int_pow(p, static_cast<unsigned>(degree)); }

    static std::shared_ptr<const FqContext> make(long p, Poly<FpElem> modulus);
    /// Context on find_irreducible(p, d); one shared instance per (p, d).
    static std::shared_ptr<const FqContext> canonical(long p, int d);
};

class FqElem {
public:
    FqElem(std::shared_ptr<const FqContext> ctx, Poly<FpElem> rep);

    const FqContext& ctx() const { return *ctx_; }
    const std::shared_ptr<const FqContext>& ctx_ptr() const { return ctx_; }
    const Poly<FpElem>& rep() const { return rep_; }
    std::vector<long> coords() const;  // length ctx().degree, constant term first

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator*(const FqElem& o) const;
    FqElem operator-() const;
    FqElem inverse() const;
    FqElem operator/(const FqElem& o) const { return *this * o.inverse(); }
    FqElem pow(const Int& e) const;

    bool is_zero() const { return rep_.is_zero(); }
    FqElem zero_like() const;
    FqElem one_like() const;

    bool operator==(const FqElem& o) const;
    bool operator!=(const FqElem& o) const { return !(*this == o); }

private:
    std::shared_ptr<const FqContext> ctx_;
    Poly<FpElem> rep_;
};

FqElem fq_element(std::shared_ptr<const FqContext> ctx, const std::vector<long>& coeffs);
/// x + (modulus), the distinguished generator.
FqElem fq_generator(std::shared_ptr<const FqContext> ctx);
/// k-th element in coordinate order, 0 <= k < p^degree (base-p digits of k).
FqElem fq_from_index(std::shared_ptr<const FqContext> ctx, long k);

/// a -> a^p, the Frobenius automorphism of the residue field.
FqElem frobenius_residue(const FqElem& a);

/// Image of `a` (element of `base`) under the cached embedding of the base
/// field into `target`; base.degree must divide target.degree.
FqElem embed_subfield(const FqElem& a, const std::shared_ptr<const FqContext>& target);

/// Norm from F_{q^n} down to F_q = base: b^((q^n-1)/(q-1)), 0 for b = 0.
FqElem residue_norm(const FqElem& b, const std::shared_ptr<const FqContext>& base);

/// Some b in the target with residue_norm(b) = a and b generating the whole
/// target over the base (first such in coordinate order).
FqElem residue_norm_preimage(const FqElem& a, const std::shared_ptr<const FqContext>& target);

}  // namespace brauer
