#include "brauer/extfield.hpp"

#include <stdexcept>

namespace brauer {

namespace {

bool is_rational_square(const Rat& q) {
    if (q.sign() < 0) return false;
    if (q.is_zero()) return true;
    Int n = q.num(), d = q.den();
    return mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t());
}

/// Monic integer polynomial obtained from a monic rational one by x -> y/m,
/// m the lcm of the coefficient denominators. Roots correspond bijectively.
std::vector<Int> integer_model(const Poly<Rat>& g, Int& scale_out) {
    Int m = 1;
    for (const Rat& c : g.coeffs()) {
        Int den = c.den(), gcd;
        mpz_gcd(gcd.get_mpz_t(), m.get_mpz_t(), den.get_mpz_t());
        m *= den / gcd;
    }
    int n = g.degree();
    std::vector<Int> out(static_cast<size_t>(n) + 1);
    Int mk = 1;
    for (int i = n; i >= 0; --i) {
        Rat scaled = g[i] * Rat(mk);
        out[static_cast<size_t>(i)] = scaled.num();  // den divides mk by construction
        mk *= m;
    }
    scale_out = m;
    return out;
}

std::vector<Int> divisors_with_sign(const Int& n) {
    std::vector<Int> out;
    Int a = abs(n);
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.push_back(d);
        out.push_back(-d);
        Int e = a / d;
        if (e != d) {
            out.push_back(e);
            out.push_back(-e);
        }
    }
    return out;
}

Int eval_int_poly(const std::vector<Int>& c, const Int& x) {
    Int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool has_rational_root(const Poly<Rat>& g) {
    Int scale;
    std::vector<Int> c = integer_model(g, scale);
    if (c[0] == 0) return true;
    for (const Int& d : divisors_with_sign(c[0]))
        if (eval_int_poly(c, d) == 0) return true;
    return false;
}

/// Monic integer quartic splitting into two monic integer quadratics
/// (complete over Q by Gauss's lemma once rational roots are excluded).
bool quartic_splits_in_quadratics(const std::vector<Int>& c) {
    const Int &d0 = c[0], &d1 = c[1], &d2 = c[2], &d3 = c[3];
    for (const Int& q : divisors_with_sign(d0)) {
        Int s = d0 / q;
        // p + r = d3, pr = d2 - q - s, ps + qr = d1
        Int sum = d3, prod = d2 - q - s;
        Int disc = sum * sum - 4 * prod;
        if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
        Int root;
        mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
        for (int sign = -1; sign <= 1; sign += 2) {
            Int twop = sum + sign * root;
            if (mpz_odd_p(twop.get_mpz_t())) continue;
            Int p = twop / 2, r = sum - p;
            if (p * s + q * r == d1) return true;
        }
    }
    return false;
}

}  // namespace

namespace {

ExtElem<PadicNumber> euclid_inverse(const ExtElem<PadicNumber>& x) {
    auto [g, s, t] = Poly<PadicNumber>::ext_gcd(x.rep(), x.desc()->modulus);
    (void)t;
    if (g.degree() != 0) throw std::domain_error("element not invertible: modulus is reducible");
    return ExtElem<PadicNumber>(x.desc(), s.scaled(g.lc().inverse()));
}

}  // namespace

template <>
ExtElem<PadicNumber> ExtElem<PadicNumber>::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in extension field");
    const auto& ctx = d_->modulus.lc().ctx_ptr();
    long p = ctx->p;

    // strip the p-content so the interesting part has integral coordinates
    long m = 0;
    bool first = true;
    for (const PadicNumber& c : rep_.coeffs()) {
        if (c.is_zero()) continue;
        m = first ? c.valuation() : std::min(m, c.valuation());
        first = false;
    }
    ExtElem<PadicNumber> scaled = *this * field().from_base(PadicNumber::from_unit(-m, 1, ctx));

    Poly<FpElem> gbar = [&] {
        std::vector<FpElem> c;
        for (const PadicNumber& k : d_->modulus.coeffs())
            c.emplace_back(p, (!k.is_zero() && k.valuation() == 0) ? k.residue() : 0);
        return Poly<FpElem>(std::move(c));
    }();

    ExtElem<PadicNumber> start = zero_like();
    bool have_start = false;
    if (is_irreducible(gbar)) {
        // residue inverse in F_q = F_p[t]/(gbar), computed exactly, lifted
        std::vector<FpElem> r;
        for (const PadicNumber& k : scaled.rep().coeffs())
            r.emplace_back(p, (!k.is_zero() && k.valuation() == 0) ? k.residue() : 0);
        Poly<FpElem> rbar(std::move(r));
        if (!rbar.is_zero()) {
            auto [g, s, t] = Poly<FpElem>::ext_gcd(rbar, gbar);
            (void)t;
            Poly<FpElem> inv0 = s.scaled(g.lc().inverse());
            std::vector<PadicNumber> lifted;
            for (const FpElem& c : inv0.coeffs())
                lifted.push_back(PadicNumber::from_integer(c.value(), ctx));
            start = ExtElem<PadicNumber>(d_, Poly<PadicNumber>(std::move(lifted)));
            have_start = true;
        }
    } else {
        // Eisenstein shape: a unit's residue is its constant coordinate
        PadicNumber c0 = scaled.coord(0);
        if (!c0.is_zero() && c0.valuation() == 0) {
            bool rest_positive = true;
            for (int i = 1; i < d_->degree; ++i) {
                PadicNumber ci = scaled.coord(i);
                if (!ci.is_zero() && ci.valuation() < 0) rest_positive = false;
            }
            if (rest_positive) {
                start = field().from_base(c0.inverse());
                have_start = true;
            }
        }
    }
    if (!have_start) return euclid_inverse(*this);  // fractional-valuation elements

    ExtElem<PadicNumber> inv = start;
    ExtElem<PadicNumber> one = one_like();
    ExtElem<PadicNumber> two = one + one;
    int cap = 4;
    while ((1 << (cap - 4)) < ctx->precision * d_->degree) ++cap;
    for (int it = 0; it < cap; ++it) {
        ExtElem<PadicNumber> err = scaled * inv - one;
        if (negligible(err)) break;
        inv = inv * (two - scaled * inv);
    }
    if (!negligible(scaled * inv - one)) return euclid_inverse(*this);

    return inv * field().from_base(PadicNumber::from_unit(-m, 1, ctx));
}

SimpleExtension<Rat> make_extension(const Poly<Rat>& g) {
    if (g.is_zero() || !g.is_monic()) throw std::invalid_argument("modulus must be monic");
    int n = g.degree();
    if (n < 1) throw std::invalid_argument("modulus must have positive degree");
    if (n == 2) {
        Rat disc = g[1] * g[1] - Rat(4) * g[0];
        if (is_rational_square(disc))
            throw std::invalid_argument("reducible modulus: square discriminant");
    } else if (n >= 3) {
        if (has_rational_root(g)) throw std::invalid_argument("reducible modulus: rational root");
        if (n == 4) {
            Int scale;
            std::vector<Int> c = integer_model(g, scale);
            if (quartic_splits_in_quadratics(c))
                throw std::invalid_argument("reducible modulus: splits into quadratics");
        }
        // degree > 4: irreducibility is the caller's responsibility
    }
    return SimpleExtension<Rat>::from_certified(g, "Q[x]/(deg " + std::to_string(n) + ")");
}

namespace {

Poly<FpElem> residue_poly(const Poly<PadicNumber>& g, long p) {
    std::vector<FpElem> c;
    c.reserve(static_cast<size_t>(g.degree()) + 1);
    for (const PadicNumber& k : g.coeffs()) {
        if (k.is_zero()) {
            c.emplace_back(p, 0);
        } else {
            if (k.valuation() < 0) throw std::invalid_argument("modulus has non-integral coefficients");
            c.emplace_back(p, k.valuation() == 0 ? k.residue() : 0);
        }
    }
    return Poly<FpElem>(std::move(c));
}

int newton_cap(int precision) {
    int bits = 0;
    while ((1 << bits) < precision) ++bits;
    return 2 * bits + 4;
}

}  // namespace

SimpleExtension<PadicNumber> make_extension(const Poly<PadicNumber>& g) {
    if (g.is_zero() || !g.is_monic()) throw std::invalid_argument("modulus must be monic");
    const auto& ctx = g.lc().ctx_ptr();
    Poly<FpElem> gbar = residue_poly(g, ctx->p);
    if (is_irreducible(gbar))
        return SimpleExtension<PadicNumber>::from_certified(
            g, "Q_" + std::to_string(ctx->p) + " unramified-type");
    if (is_eisenstein(g))
        return SimpleExtension<PadicNumber>::from_certified(
            g, "Q_" + std::to_string(ctx->p) + " eisenstein");
    throw std::invalid_argument(
        "reducible or uncertified modulus over Q_p: need residue-irreducible or Eisenstein");
}

UnramifiedExtension unramified_extension(std::shared_ptr<const PadicContext> ctx, int f) {
    if (f < 1) throw std::invalid_argument("residue degree must be positive");
    auto residue = FqContext::canonical(ctx->p, f);

    std::vector<PadicNumber> lifted;
    lifted.reserve(static_cast<size_t>(f) + 1);
    for (const FpElem& c : residue->modulus.coeffs())
        lifted.push_back(PadicNumber::from_integer(c.value(), ctx));
    Poly<PadicNumber> g(std::move(lifted));

    auto field = SimpleExtension<PadicNumber>::from_certified(
        g, "W(p=" + std::to_string(ctx->p) + ",f=" + std::to_string(f) + ")");

    if (f == 1) {
        return UnramifiedExtension{ctx, field, Automorphism<PadicNumber>::identity(field),
                                   LocalData{1, 1}, residue};
    }

    // Frobenius: the root of g whose residue is (generator residue)^p,
    // located by Newton from the lifted residue coordinates.
    FqElem target = frobenius_residue(fq_generator(residue));
    std::vector<PadicNumber> start;
    start.reserve(static_cast<size_t>(f));
    for (long c : target.coords()) start.push_back(PadicNumber::from_integer(c, ctx));
    ExtElem<PadicNumber> x = field.from_coords(std::move(start));

    auto eval_in_field = [&](const Poly<PadicNumber>& poly, const ExtElem<PadicNumber>& at) {
        ExtElem<PadicNumber> acc = field.zero();
        for (int i = poly.degree(); i >= 0; --i) {
            acc = acc * at;
            acc = acc + field.from_base(poly[i]);
        }
        return acc;
    };

    Poly<PadicNumber> gprime = g.derivative();
    for (int it = 0; it < newton_cap(ctx->precision); ++it) {
        ExtElem<PadicNumber> residual = eval_in_field(g, x);
        if (negligible(residual)) break;  // residual valuation reached N
        x = x - residual / eval_in_field(gprime, x);
    }
    if (!negligible(eval_in_field(g, x)))
        throw std::logic_error("Frobenius root lift failed to converge");

    auto frob = Automorphism<PadicNumber>::make(field, x);
    return UnramifiedExtension{std::move(ctx), field, std::move(frob), LocalData{1, f},
                               std::move(residue)};
}

bool is_eisenstein(const Poly<PadicNumber>& g) {
    if (g.is_zero() || !g.is_monic() || g.degree() < 1) return false;
    for (int i = 0; i < g.degree(); ++i) {
        const PadicNumber& c = g[i];
        if (c.is_zero()) {
            if (i == 0) return false;
            continue;
        }
        if (c.valuation() < 1) return false;
        if (i == 0 && c.valuation() != 1) return false;
    }
    return !g[0].is_zero();
}

bool is_eisenstein(const Poly<ExtElem<PadicNumber>>& g, const UnramifiedExtension& host) {
    if (g.is_zero() || !g.is_monic() || g.degree() < 1) return false;
    Rat min_positive(Int(1), Int(host.local.e));
    for (int i = 0; i < g.degree(); ++i) {
        const ExtElem<PadicNumber>& c = g[i];
        auto v = extended_valuation(c);
        if (!v) {
            if (i == 0) return false;
            continue;
        }
        if (*v < min_positive) return false;
        if (i == 0 && !(*v == min_positive)) return false;
    }
    return true;
}

TotallyRamifiedExtension ramified_extension(std::shared_ptr<const PadicContext> ctx,
                                            const Poly<PadicNumber>& g) {
    if (!is_eisenstein(g)) throw std::invalid_argument("modulus is not Eisenstein over Z_p");
    auto field = SimpleExtension<PadicNumber>::from_certified(
        g, "Q_" + std::to_string(ctx->p) + " ramified e=" + std::to_string(g.degree()));
    auto pi = field.generator();
    return TotallyRamifiedExtension{std::move(ctx), field, LocalData{g.degree(), 1}, std::move(pi)};
}

RamifiedTower ramified_extension(const UnramifiedExtension& base,
                                 const Poly<ExtElem<PadicNumber>>& g) {
    if (!is_eisenstein(g, base))
        throw std::invalid_argument("modulus is not Eisenstein over the base valuation ring");
    auto field = SimpleExtension<ExtElem<PadicNumber>>::from_certified(
        g, base.field.label() + " ramified e=" + std::to_string(g.degree()));
    auto pi = field.generator();
    return RamifiedTower{base, field, LocalData{g.degree() * base.local.e, base.local.f},
                         std::move(pi)};
}

}  // namespace brauer
