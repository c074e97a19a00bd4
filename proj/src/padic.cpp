#include "brauer/padic.hpp"

#include <algorithm>
#include <stdexcept>

#include "brauer/errors.hpp"

namespace brauer {

namespace {

const char* kSuperscripts[10] = {"⁰", "¹", "²", "³", "⁴",
                                 "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string superscript(long e) {
    std::string out;
    if (e < 0) {
        out += "⁻";
        e = -e;
    }
    std::string digits = std::to_string(e);
    for (char c : digits) out += kSuperscripts[c - '0'];
    return out;
}

std::string power_string(long p, long e) {
    if (e == 1) return std::to_string(p);
    return std::to_string(p) + superscript(e);
}

Int mod_positive(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

void check_same_ctx(const PadicNumber& a, const PadicNumber& b) {
    if (a.ctx_ptr() == b.ctx_ptr()) return;
    if (a.ctx().p != b.ctx().p || a.ctx().precision != b.ctx().precision)
        throw std::invalid_argument("mixed p-adic contexts");
}

}  // namespace

PadicContext::PadicContext(long p_, int precision_) : p(p_), precision(precision_) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (precision < 1) throw std::invalid_argument("precision must be positive");
    mpz_ui_pow_ui(unit_modulus.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(precision));
}

std::shared_ptr<const PadicContext> make_padic_context(long p, int precision) {
    return std::make_shared<const PadicContext>(p, precision);
}

PadicNumber PadicNumber::zero(std::shared_ptr<const PadicContext> ctx) {
    return PadicNumber(std::move(ctx), true, 0, Int(0));
}

PadicNumber PadicNumber::from_integer(const Int& n, std::shared_ptr<const PadicContext> ctx) {
    if (n == 0) return zero(std::move(ctx));
    long v = int_valuation(n, ctx->p);
    Int u = n;
    for (long i = 0; i < v; ++i) mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(ctx->p));
    u = mod_positive(u, ctx->unit_modulus);
    return PadicNumber(std::move(ctx), false, v, std::move(u));
}

PadicNumber PadicNumber::from_rational(const Rat& q, std::shared_ptr<const PadicContext> ctx) {
    if (q.is_zero()) return zero(std::move(ctx));
    PadicNumber num = from_integer(q.num(), ctx);
    PadicNumber den = from_integer(q.den(), ctx);
    return num / den;
}

PadicNumber PadicNumber::from_unit(long val, const Int& unit, std::shared_ptr<const PadicContext> ctx) {
    Int u = mod_positive(unit, ctx->unit_modulus);
    if (u == 0 || mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(ctx->p)))
        throw std::invalid_argument("mantissa not a unit");
    return PadicNumber(std::move(ctx), false, val, std::move(u));
}

long PadicNumber::valuation() const {
    if (zero_) throw std::domain_error("valuation of zero");
    return val_;
}

const Int& PadicNumber::unit() const {
    if (zero_) throw std::domain_error("unit part of zero");
    return unit_;
}

long PadicNumber::residue() const {
    if (zero_) return 0;
    return static_cast<long>(mpz_fdiv_ui(unit_.get_mpz_t(), static_cast<unsigned long>(ctx_->p)));
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
    check_same_ctx(*this, o);
    if (zero_) return o;
    if (o.zero_) return *this;
    long v = std::min(val_, o.val_);
    Int s = 0;
    long d1 = val_ - v, d2 = o.val_ - v;
    if (d1 < ctx_->precision) {
        Int t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(ctx_->p), static_cast<unsigned long>(d1));
        s += unit_ * t;
    }
    if (d2 < ctx_->precision) {
        Int t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(ctx_->p), static_cast<unsigned long>(d2));
        s += o.unit_ * t;
    }
    s = mod_positive(s, ctx_->unit_modulus);
    // Full cancellation is indistinguishable from zero at this precision; the
    // capped model returns the distinguished zero.
    if (s == 0) return zero(ctx_);
    long w = int_valuation(s, ctx_->p);
    for (long i = 0; i < w; ++i) mpz_divexact_ui(s.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(ctx_->p));
    return PadicNumber(ctx_, false, v + w, std::move(s));
}

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
    check_same_ctx(*this, o);
    if (zero_ || o.zero_) return zero(ctx_);
    Int u = mod_positive(unit_ * o.unit_, ctx_->unit_modulus);
    return PadicNumber(ctx_, false, val_ + o.val_, std::move(u));
}

PadicNumber PadicNumber::operator-() const {
    if (zero_) return *this;
    return PadicNumber(ctx_, false, val_, ctx_->unit_modulus - unit_);
}

PadicNumber PadicNumber::inverse() const {
    if (zero_) throw std::domain_error("division by zero in Q_p");
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), ctx_->unit_modulus.get_mpz_t()) == 0)
        throw std::logic_error("unit not invertible");
    return PadicNumber(ctx_, false, -val_, std::move(inv));
}

PadicNumber PadicNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    PadicNumber acc = one_like();
    PadicNumber base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool PadicNumber::operator==(const PadicNumber& o) const {
    check_same_ctx(*this, o);
    if (zero_ || o.zero_) return zero_ == o.zero_;
    return val_ == o.val_ && unit_ == o.unit_;
}

Rat PadicNumber::to_rational() const {
    if (zero_) return Rat(0);
    Int pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(ctx_->p),
                  static_cast<unsigned long>(val_ < 0 ? -val_ : val_));
    if (val_ >= 0) return Rat(Int(unit_ * pv));
    return Rat(unit_, pv);
}

std::string PadicNumber::digits_string() const {
    if (zero_) return "0";
    std::string out;
    Int rest = unit_;
    for (int i = 0; i < ctx_->precision; ++i) {
        long d = static_cast<long>(mpz_fdiv_ui(rest.get_mpz_t(), static_cast<unsigned long>(ctx_->p)));
        rest /= ctx_->p;
        if (d == 0) continue;
        if (!out.empty()) out += " + ";
        long e = val_ + i;
        if (e == 0)
            out += std::to_string(d);
        else
            out += std::to_string(d) + "·" + power_string(ctx_->p, e);
    }
    if (!out.empty()) out += " + ";
    out += "O(" + power_string(ctx_->p, val_ + ctx_->precision) + ")";
    return out;
}

PadicNumber teichmuller(long a, std::shared_ptr<const PadicContext> ctx) {
    if (a < 0 || a >= ctx->p) throw std::invalid_argument("residue out of range");
    if (a == 0) return PadicNumber::zero(std::move(ctx));
    Int x(a);
    const Int& m = ctx->unit_modulus;
    for (int i = 0; i <= ctx->precision; ++i) {
        Int next;
        mpz_powm_ui(next.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(ctx->p), m.get_mpz_t());
        if (next == x) break;
        x = next;
    }
    return PadicNumber::from_unit(0, x, std::move(ctx));
}

TeichmullerSet teichmuller_set(std::shared_ptr<const PadicContext> ctx) {
    TeichmullerSet out;
    out.ctx = ctx;
    out.values.reserve(static_cast<size_t>(ctx->p));
    for (long a = 0; a < ctx->p; ++a) out.values.push_back(teichmuller(a, ctx));
    return out;
}

namespace {

/// Integer coefficients of f mod p^N; requires integral (valuation >= 0) coefficients.
std::vector<Int> integral_coeffs(const Poly<PadicNumber>& f, const PadicContext& ctx) {
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(f.degree() + 1));
    for (const PadicNumber& c : f.coeffs()) {
        if (c.is_zero()) {
            out.emplace_back(0);
            continue;
        }
        if (c.valuation() < 0)
            throw std::invalid_argument("polynomial has non-integral coefficients");
        Int pv;
        mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(ctx.p),
                      static_cast<unsigned long>(c.valuation()));
        Int t;
        mpz_fdiv_r(t.get_mpz_t(), Int(c.unit() * pv).get_mpz_t(), ctx.unit_modulus.get_mpz_t());
        out.push_back(std::move(t));
    }
    return out;
}

Int eval_int(const std::vector<Int>& coeffs, const Int& x, const Int& m) {
    Int acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
        mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

std::vector<Int> derivative_int(const std::vector<Int>& coeffs) {
    std::vector<Int> out;
    for (size_t i = 1; i < coeffs.size(); ++i) out.push_back(coeffs[i] * static_cast<long>(i));
    return out;
}

int newton_cap(int precision) {
    int cap = 4;
    int bits = 0;
    while ((1 << bits) < precision) ++bits;
    return 2 * bits + cap;
}

using ZPoly = std::vector<Int>;  // dense, constant term first, not trimmed

ZPoly zp_mod(const ZPoly& a, const Int& m) {
    ZPoly out = a;
    for (Int& c : out) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return zp_mod(out, m);
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly out(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return zp_mod(out, m);
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly out(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return zp_mod(out, m);
}

/// divmod by a monic divisor, coefficients mod m.
std::pair<ZPoly, ZPoly> zp_divmod_monic(const ZPoly& num, const ZPoly& den, const Int& m) {
    ZPoly rem = num;
    if (den.empty() || den.back() != 1) throw std::logic_error("divisor must be monic");
    int dd = static_cast<int>(den.size()) - 1;
    if (static_cast<int>(rem.size()) - 1 < dd) return {{}, zp_mod(rem, m)};
    ZPoly quot(rem.size() - den.size() + 1, Int(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        Int q = rem[static_cast<size_t>(i)];
        mpz_fdiv_r(q.get_mpz_t(), q.get_mpz_t(), m.get_mpz_t());
        if (q == 0) {
            rem[static_cast<size_t>(i)] = 0;
            continue;
        }
        quot[static_cast<size_t>(i - dd)] = q;
        for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(i - dd + j)] -= q * den[static_cast<size_t>(j)];
    }
    return {zp_mod(quot, m), zp_mod(rem, m)};
}

Poly<PadicNumber> zp_to_poly(const ZPoly& a, const std::shared_ptr<const PadicContext>& ctx) {
    std::vector<PadicNumber> coeffs;
    coeffs.reserve(a.size());
    for (const Int& c : a) coeffs.push_back(PadicNumber::from_integer(c, ctx));
    return Poly<PadicNumber>(std::move(coeffs));
}

ZPoly lift_from_fp(const Poly<FpElem>& f) {
    ZPoly out;
    for (const FpElem& c : f.coeffs()) out.emplace_back(c.value());
    return out;
}

}  // namespace

PadicNumber hensel_lift_root(const Poly<PadicNumber>& f, long a0,
                             std::shared_ptr<const PadicContext> ctx) {
    if (f.is_zero() || !f.is_monic()) throw std::invalid_argument("polynomial must be monic");
    std::vector<Int> coeffs = integral_coeffs(f, *ctx);
    std::vector<Int> deriv = derivative_int(coeffs);
    long p = ctx->p;
    Int pI(p);

    Int r(((a0 % p) + p) % p);
    if (eval_int(coeffs, r, pI) != 0)
        throw std::invalid_argument("a0 is not a root of f mod p");
    if (eval_int(deriv, r, pI) == 0)
        throw std::invalid_argument("a0 is not a simple root of f mod p");

    const Int& m = ctx->unit_modulus;
    for (int it = 0; it < newton_cap(ctx->precision); ++it) {
        Int fr = eval_int(coeffs, r, m);
        if (fr == 0) break;
        Int dr = eval_int(deriv, r, m);
        Int dinv;
        if (mpz_invert(dinv.get_mpz_t(), dr.get_mpz_t(), m.get_mpz_t()) == 0)
            throw std::logic_error("derivative lost invertibility during lift");
        r = mod_positive(r - fr * dinv, m);
    }
    if (eval_int(coeffs, r, m) != 0)
        throw std::invalid_argument("Newton iteration failed to converge; preconditions violated");
    return PadicNumber::from_integer(r, std::move(ctx));
}

std::pair<Poly<PadicNumber>, Poly<PadicNumber>> hensel_factor(
    const Poly<PadicNumber>& f, const Poly<FpElem>& g0, const Poly<FpElem>& h0,
    std::shared_ptr<const PadicContext> ctx) {
    if (f.is_zero() || !f.is_monic()) throw std::invalid_argument("polynomial must be monic");
    if (!g0.is_monic() || !h0.is_monic())
        throw std::invalid_argument("residue factors must be monic");
    if (g0.degree() + h0.degree() != f.degree())
        throw std::invalid_argument("residue factor degrees do not add up");

    long p = ctx->p;
    std::vector<Int> fc = integral_coeffs(f, *ctx);
    fc.resize(static_cast<size_t>(f.degree()) + 1, Int(0));

    // mod-p checks: f = g0*h0 and (g0, h0) = 1
    {
        Poly<FpElem> fbar;
        {
            std::vector<FpElem> c;
            for (const Int& v : fc)
                c.emplace_back(p, static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p))));
            fbar = Poly<FpElem>(std::move(c));
        }
        if (fbar != g0 * h0) throw std::invalid_argument("f does not reduce to g0*h0 mod p");
        if (Poly<FpElem>::gcd(g0, h0).degree() != 0)
            throw std::invalid_argument("residue factors are not coprime");
    }

    // Bezout mod p: s*g0 + t*h0 = 1
    auto [one, s0, t0] = Poly<FpElem>::ext_gcd(g0, h0);
    (void)one;

    ZPoly g = lift_from_fp(g0), h = lift_from_fp(h0);
    ZPoly s = lift_from_fp(s0), t = lift_from_fp(t0);
    ZPoly fz(fc.begin(), fc.end());

    int k = 1;  // current exactness exponent: f = g*h mod p^k
    while (k < ctx->precision) {
        k = std::min(2 * k, ctx->precision);
        Int m;
        mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));

        // correction e = f - g*h, then split s*e = q*h + r so that degrees stay put
        ZPoly e = zp_sub(fz, zp_mul(g, h, m), m);
        auto [q, r] = zp_divmod_monic(zp_mul(s, e, m), h, m);
        h = zp_add(h, r, m);
        g = zp_add(g, zp_add(zp_mul(t, e, m), zp_mul(q, g, m), m), m);

        // refresh the Bezout pair mod m: s*g + t*h = 1
        ZPoly b = zp_sub(zp_add(zp_mul(s, g, m), zp_mul(t, h, m), m), ZPoly{Int(1)}, m);
        auto [q2, r2] = zp_divmod_monic(zp_mul(s, b, m), h, m);
        s = zp_sub(s, r2, m);
        t = zp_sub(t, zp_add(zp_mul(t, b, m), zp_mul(q2, g, m), m), m);
    }

    return {zp_to_poly(g, ctx), zp_to_poly(h, ctx)};
}

bool is_square(const PadicNumber& x) {
    if (x.is_zero()) throw std::invalid_argument("squareness of zero");
    const PadicContext& ctx = x.ctx();
    if (x.valuation() % 2 != 0) return false;
    if (ctx.p == 2) {
        if (ctx.precision < 3)
            throw PrecisionLoss("2-adic squareness needs precision >= 3");
        return mpz_fdiv_ui(x.unit().get_mpz_t(), 8) == 1;
    }
    // Euler criterion on the unit residue
    long r = x.residue();
    FpElem u(ctx.p, r);
    return u.pow(Int((ctx.p - 1) / 2)) == u.one_like();
}

}  // namespace brauer
