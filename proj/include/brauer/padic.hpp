#pragma once

#include <memory>
#include <string>
#include <vector>

#include "brauer/fields.hpp"
#include "brauer/poly.hpp"
#include "brauer/rational.hpp"

namespace brauer {

/// Working precision for Q_p: every nonzero value keeps exactly `precision`
/// base-p digits of its unit part. Additively normalized valuation, v(p) = 1,
/// so |x| = p^{-v(x)}.
struct PadicContext {
    long p;
    int precision;
    Int unit_modulus;  // p^precision

    PadicContext(long p, int precision);
};

std::shared_ptr<const PadicContext> make_padic_context(long p, int precision);

/// Element of Q_p at fixed working precision, stored as valuation plus unit
/// mantissa in [1, p^N) coprime to p. Zero is a distinguished value (the
/// infinite-valuation case), never a unit that underflowed.
class PadicNumber {
public:
    static PadicNumber zero(std::shared_ptr<const PadicContext> ctx);
    static PadicNumber from_integer(const Int& n, std::shared_ptr<const PadicContext> ctx);
    static PadicNumber from_rational(const Rat& q, std::shared_ptr<const PadicContext> ctx);
    /// unit * p^val with unit already coprime to p.
    static PadicNumber from_unit(long val, const Int& unit, std::shared_ptr<const PadicContext> ctx);

    const PadicContext& ctx() const { return *ctx_; }
    const std::shared_ptr<const PadicContext>& ctx_ptr() const { return ctx_; }

    bool is_zero() const { return zero_; }
    long valuation() const;         // throws on zero
    const Int& unit() const;        // throws on zero
    long residue() const;           // unit mod p (0 for zero)

    PadicNumber operator+(const PadicNumber& o) const;
    PadicNumber operator-(const PadicNumber& o) const { return *this + (-o); }
    PadicNumber operator*(const PadicNumber& o) const;
    PadicNumber operator-() const;
    PadicNumber inverse() const;
    PadicNumber operator/(const PadicNumber& o) const { return *this * o.inverse(); }
    PadicNumber pow(long e) const;

    PadicNumber zero_like() const { return zero(ctx_); }
    PadicNumber one_like() const { return from_integer(1, ctx_); }

    /// Exact equality of the stored representation (both zero, or equal
    /// valuation and unit mantissa).
    bool operator==(const PadicNumber& o) const;
    bool operator!=(const PadicNumber& o) const { return !(*this == o); }

    /// The exact rational unit * p^val; canonical serialization, round-trips
    /// through from_rational bit-exactly.
    Rat to_rational() const;

    /// Truncated digit expansion "a0 + a1·p + a2·p² + ... + O(p^k)".
    std::string digits_string() const;

private:
    PadicNumber(std::shared_ptr<const PadicContext> ctx, bool zero, long val, Int unit)
        : ctx_(std::move(ctx)), zero_(zero), val_(val), unit_(std::move(unit)) {}

    std::shared_ptr<const PadicContext> ctx_;
    bool zero_;
    long val_;
    Int unit_;
};

/// Zero, or a value whose valuation is at or beyond the working precision
/// (all stored digits of such a value are fabrication, never evidence).
inline bool negligible(const PadicNumber& x) {
    return x.is_zero() || x.valuation() >= x.ctx().precision;
}

/// Equality of all digits up to the working precision.
inline bool agrees_at_precision(const PadicNumber& a, const PadicNumber& b) {
    return negligible(a - b);
}

/// Teichmüller lift of a residue: the unique root of x^p = x congruent to a
/// mod p, computed as the limit of a -> a^p.
PadicNumber teichmuller(long a, std::shared_ptr<const PadicContext> ctx);

/// All p Teichmüller representatives; the multiplicative lift of the residue field.
struct TeichmullerSet {
    std::shared_ptr<const PadicContext> ctx;
    std::vector<PadicNumber> values;  // index a = residue
};
TeichmullerSet teichmuller_set(std::shared_ptr<const PadicContext> ctx);

/// Newton lift of a simple residue root: f monic with integral coefficients,
/// f(a0) = 0 and f'(a0) != 0 mod p. Converges quadratically; the iteration cap
/// 2*ceil(log2 N) + 4 only guards violated preconditions.
PadicNumber hensel_lift_root(const Poly<PadicNumber>& f, long a0,
                             std::shared_ptr<const PadicContext> ctx);

/// Quadratic Hensel lift of a coprime monic residue factorization
/// f = g0 * h0 mod p up to f = g * h mod p^N.
std::pair<Poly<PadicNumber>, Poly<PadicNumber>> hensel_factor(
    const Poly<PadicNumber>& f, const Poly<FpElem>& g0, const Poly<FpElem>& h0,
    std::shared_ptr<const PadicContext> ctx);

/// Squareness in Q_p^x. Odd p: even valuation and unit a quadratic residue.
/// p = 2: even valuation and unit = 1 mod 8 (needs precision >= 3).
bool is_square(const PadicNumber& x);

}  // namespace brauer
