#include "brauer/verify.hpp"

#include <functional>
#include <numeric>
#include <random>

#include "brauer/crossed.hpp"
#include "brauer/extfield.hpp"
#include "brauer/invariants.hpp"

namespace brauer {

namespace {

using Rng = std::mt19937_64;

Rat random_rat(Rng& rng, bool nonzero = false) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    for (;;) {
        Rat q(Int(num(rng)), Int(den(rng)));
        if (!nonzero || !q.is_zero()) return q;
    }
}

std::shared_ptr<const GaloisData<Rat>> gaussian_galois() {
    auto L = make_extension(Poly<Rat>(std::vector<Rat>{Rat(1), Rat(0), Rat(1)}));  // x^2 + 1
    auto conj = Automorphism<Rat>::make(L, -L.generator());
    return GaloisData<Rat>::make(L, conj, 2);
}

ExtElem<Rat> random_gaussian_unit(const SimpleExtension<Rat>& L, Rng& rng) {
    for (;;) {
        ExtElem<Rat> v = L.from_coords({random_rat(rng), random_rat(rng)});
        if (!v.is_zero()) return v;
    }
}

ExtElem<PadicNumber> random_w_unit(const UnramifiedExtension& W, Rng& rng) {
    std::uniform_int_distribution<long> digit(0, W.ctx->p - 1);
    for (;;) {
        std::vector<PadicNumber> coords;
        bool unit = false;
        for (int i = 0; i < W.field.degree(); ++i) {
            long d = digit(rng) + W.ctx->p * digit(rng);
            coords.push_back(PadicNumber::from_integer(d, W.ctx));
            unit = unit || d % W.ctx->p != 0;
        }
        if (unit) return W.field.from_coords(std::move(coords));
    }
}

PadicNumber random_qp_nonzero(const std::shared_ptr<const PadicContext>& ctx, Rng& rng) {
    std::uniform_int_distribution<long> u(1, ctx->p - 1);
    std::uniform_int_distribution<long> extra(0, ctx->p - 1);
    std::uniform_int_distribution<long> val(-3, 3);
    PadicNumber x = PadicNumber::from_unit(val(rng), u(rng) + ctx->p * extra(rng), ctx);
    return x;
}

template <FieldScalar K>
void cocycle_block(SuiteReport& rep, const std::shared_ptr<const GaloisData<K>>& galois,
                   const std::vector<K>& cyclic_rs, const ExtElem<K>& twist, int samples, Rng& rng,
                   const std::function<ExtElem<K>(Rng&)>& random_unit, const std::string& tag) {
    int n = galois->order;
    for (const K& r : cyclic_rs)
        rep.check(verify_cocycle(cyclic_factor_set(galois, r)), tag + ": cyclic factor set fails cocycle");

    std::uniform_int_distribution<int> pos(0, n - 1);
    for (int s = 0; s < samples; ++s) {
        std::vector<ExtElem<K>> mu;
        mu.push_back(galois->field.one());
        for (int i = 1; i < n; ++i) mu.push_back(random_unit(rng));
        FactorSet<K> delta = coboundary_from(galois, mu);
        rep.check(verify_cocycle(delta), tag + ": coboundary fails cocycle");

        FactorSet<K> bad = delta;
        int i = pos(rng), j = pos(rng);
        bad.at(i, j) = bad.at(i, j) * twist;
        rep.check(!verify_cocycle(bad), tag + ": perturbed factor set still passes");
    }
}

void suite_cocycle(SuiteReport& rep, Rng& rng) {
    // Gaussian rationals, n = 2
    auto gal = gaussian_galois();
    auto L = gal->field;
    std::function<ExtElem<Rat>(Rng&)> rnd = [&](Rng& r) { return random_gaussian_unit(L, r); };
    // the twist must be moved by sigma: a base-field twist at the (1,1)
    // entry of an n=2 factor set is itself a cocycle
    cocycle_block<Rat>(rep, gal, {Rat(-1), Rat(1), Rat(2), Rat(-5)}, L.generator(), 40, rng, rnd,
                       "Q(i) n=2");

    // unramified local fields, n in {2, 3, 4, 6}
    struct Case {
        long p;
        int f;
    };
    for (const Case& c : {Case{5, 2}, Case{5, 3}, Case{5, 4}, Case{3, 6}}) {
        auto ctx = make_padic_context(c.p, 16);
        auto W = unramified_extension(ctx, c.f);
        auto galw = GaloisData<PadicNumber>::make(W.field, W.frobenius, c.f);
        std::function<ExtElem<PadicNumber>(Rng&)> rndw = [&](Rng& r) { return random_w_unit(W, r); };
        std::vector<PadicNumber> rs = {PadicNumber::from_integer(c.p, ctx),
                                       PadicNumber::from_integer(2, ctx)};
        std::string tag = "W(p=" + std::to_string(c.p) + ",f=" + std::to_string(c.f) + ")";
        cocycle_block<PadicNumber>(rep, galw, rs, W.field.generator(), 15, rng, rndw, tag);
    }
}

void suite_norms(SuiteReport& rep, Rng& rng) {
    auto gal = gaussian_galois();
    auto L = gal->field;
    for (int s = 0; s < 100; ++s) {
        auto a = random_gaussian_unit(L, rng);
        auto b = random_gaussian_unit(L, rng);
        rep.check(norm(a * b) == norm(a) * norm(b), "Q(i): norm not multiplicative");
        rep.check(norm(a) == (a * gal->sigma(1)(a)).coord(0) &&
                      (a * gal->sigma(1)(a)).coord(1).is_zero(),
                  "Q(i): Galois product disagrees with determinant norm");
        Rat sc = random_rat(rng, true);
        rep.check(norm(L.from_base(sc) * a) == sc * sc * norm(a), "Q(i): N(sa) != s^n N(a)");
    }

    auto ctx = make_padic_context(5, 16);
    auto W = unramified_extension(ctx, 2);
    auto galw = GaloisData<PadicNumber>::make(W.field, W.frobenius, 2);
    for (int s = 0; s < 100; ++s) {
        auto a = random_w_unit(W, rng);
        auto b = random_w_unit(W, rng);
        rep.check(agrees_at_precision(norm(a * b), norm(a) * norm(b)),
                  "W(5,2): norm not multiplicative");
        auto prod = a * galw->sigma(1)(a);
        rep.check(negligible(prod.coord(1)) && agrees_at_precision(prod.coord(0), norm(a)),
                  "W(5,2): Galois product disagrees with determinant norm");
    }
}

void suite_ramification(SuiteReport& rep, Rng& rng) {
    auto ctx5 = make_padic_context(5, 16);
    auto sqrt5 = ramified_extension(
        ctx5, Poly<PadicNumber>(std::vector<PadicNumber>{PadicNumber::from_integer(-5, ctx5),
                                                         PadicNumber::zero(ctx5),
                                                         PadicNumber::from_integer(1, ctx5)}));
    rep.check(ramification_data(sqrt5) == std::make_pair(2, 1), "Q_5(sqrt 5): (e,f) != (2,1)");
    auto v = extended_valuation(sqrt5.uniformizer);
    rep.check(v && *v == Rat(Int(1), Int(2)), "Q_5(sqrt 5): v(uniformizer) != 1/2");

    auto ctx7 = make_padic_context(7, 16);
    auto w3 = unramified_extension(ctx7, 3);
    rep.check(ramification_data(w3) == std::make_pair(1, 3), "W(7,3): (e,f) != (1,3)");

    // the two-storey tower over Q_3: unramified f=2, then Eisenstein x^3 - 3
    auto ctx3 = make_padic_context(3, 16);
    auto w2 = unramified_extension(ctx3, 2);
    auto three = w2.field.from_base(PadicNumber::from_integer(3, ctx3));
    Poly<ExtElem<PadicNumber>> eis(std::vector<ExtElem<PadicNumber>>{
        -three, w2.field.zero(), w2.field.zero(), w2.field.one()});
    auto tower = ramified_extension(w2, eis);
    rep.check(ramification_data(tower) == std::make_pair(3, 2), "tower: (e,f) != (3,2)");
    rep.check(tower.local.e * tower.local.f == 6, "tower: ef != n");

    auto vpi = extended_valuation(tower.uniformizer);
    rep.check(vpi && *vpi == Rat(Int(1), Int(3)), "tower: v(uniformizer) != 1/3");
    auto nm = norm_to_qp(tower.uniformizer);
    rep.check(!nm.is_zero() && nm.valuation() == tower.local.f,
              "tower: uniformizer norm valuation != f");

    // value group: attained denominators generate (1/e)Z
    long lcm_den = 1;
    std::uniform_int_distribution<long> digit(0, 2);
    for (int s = 0; s < 50; ++s) {
        std::vector<ExtElem<PadicNumber>> coords;
        for (int i = 0; i < 3; ++i) {
            if (digit(rng) == 0)
                coords.push_back(w2.field.zero());
            else
                coords.push_back(random_w_unit(w2, rng));
        }
        auto elem = tower.field.from_coords(coords);
        if (elem.is_zero()) continue;
        auto val = extended_valuation(elem);
        rep.check(val.has_value(), "tower: valuation of nonzero element missing");
        if (!val) continue;
        long den = (*val).den().get_si();
        rep.check(3 % den == 0, "tower: valuation denominator does not divide e");
        lcm_den = std::lcm(lcm_den, den);
    }
    {
        auto val = extended_valuation(tower.uniformizer);
        lcm_den = std::lcm(lcm_den, val->den().get_si());
    }
    rep.check(lcm_den == 3, "tower: attained denominators do not generate (1/e)Z");

    // restriction to the base and additivity of v
    for (int s = 0; s < 20; ++s) {
        PadicNumber x = random_qp_nonzero(ctx3, rng);
        auto vx = extended_valuation(w2.field.from_base(x));
        rep.check(vx && *vx == Rat(Int(x.valuation())), "W: extended valuation differs from v_p on base");
        auto aelem = tower.field.from_coords({w2.field.from_base(x), random_w_unit(w2, rng), w2.field.zero()});
        auto belem = tower.field.from_coords({random_w_unit(w2, rng), w2.field.zero(), w2.field.zero()});
        auto va = extended_valuation(aelem), vb = extended_valuation(belem),
             vab = extended_valuation(aelem * belem);
        rep.check(va && vb && vab && *vab == *va + *vb, "tower: v(ab) != v(a) + v(b)");
    }
}

void suite_invariants(SuiteReport& rep, Rng& rng) {
    // abelian group axioms, exhaustively over denominators <= 12
    std::vector<BrauerInvariant> values;
    for (long d = 1; d <= 12; ++d)
        for (long n = 0; n < d; ++n) {
            Rat q = Rat(Int(n), Int(d));
            if (q.den().get_si() != d) continue;  // not reduced: already listed
            values.push_back(BrauerInvariant(q));
        }
    BrauerInvariant zero;
    for (const auto& x : values) {
        rep.check(x + zero == x, "group: identity fails");
        rep.check(x + (-x) == zero, "group: inverse fails");
        rep.check(inv_order(x) == x.value().den().get_si(), "group: order != reduced denominator");
    }
    bool assoc = true, comm = true;
    for (const auto& x : values)
        for (const auto& y : values) {
            if (!(x + y == y + x)) comm = false;
            for (const auto& z : values)
                if (!((x + y) + z == x + (y + z))) assoc = false;
        }
    rep.check(assoc, "group: associativity fails");
    rep.check(comm, "group: commutativity fails");
    rep.check(BrauerInvariant(Rat(Int(1), Int(2))) + BrauerInvariant(Rat(Int(1), Int(2))) == zero,
              "group: 1/2 + 1/2 != 0");

    // local invariant map over Q_5
    for (int f : {2, 3, 4}) {
        auto ctx = make_padic_context(5, 16);
        auto W = unramified_extension(ctx, f);
        std::string tag = "inv(f=" + std::to_string(f) + ")";

        rep.check(padic_invariant(PadicCyclicSpec::make(W, PadicNumber::from_integer(2, ctx))).is_zero(),
                  tag + ": unit invariant nonzero");

        std::vector<BrauerInvariant> image;
        for (int s = 0; s < f; ++s) {
            auto inv = padic_invariant(
                PadicCyclicSpec::make(W, PadicNumber::from_integer(int_pow(5, static_cast<unsigned>(s)), ctx)));
            rep.check(inv == BrauerInvariant(Rat(Int(s), Int(f))), tag + ": inv(p^s) != s/f");
            image.push_back(inv);
        }
        for (size_t i = 0; i < image.size(); ++i)
            for (size_t j = i + 1; j < image.size(); ++j)
                rep.check(!(image[i] == image[j]), tag + ": image not of order f");

        for (int s = 0; s < 20; ++s) {
            PadicNumber r1 = random_qp_nonzero(ctx, rng);
            PadicNumber r2 = random_qp_nonzero(ctx, rng);
            auto i1 = padic_invariant(PadicCyclicSpec::make(W, r1));
            auto i2 = padic_invariant(PadicCyclicSpec::make(W, r2));
            auto i12 = padic_invariant(PadicCyclicSpec::make(W, r1 * r2));
            rep.check(i12 == i1 + i2, tag + ": invariant not additive");
        }
        for (int s = 0; s < 50; ++s) {
            PadicNumber r = random_qp_nonzero(ctx, rng);
            auto w = random_w_unit(W, rng);
            auto base = padic_invariant(PadicCyclicSpec::make(W, r));
            auto shifted = padic_invariant(PadicCyclicSpec::make(W, r * norm(w)));
            rep.check(base == shifted, tag + ": invariant moves across a norm coset");
        }
    }

    // inflation across unramified towers
    for (long p : {3L, 5L}) {
        auto ctx = make_padic_context(p, 16);
        for (auto [f, mf] : std::vector<std::pair<int, int>>{{2, 4}, {2, 6}, {3, 6}}) {
            auto small = unramified_extension(ctx, f);
            auto large = unramified_extension(ctx, mf);
            std::vector<PadicNumber> rs = {
                PadicNumber::from_integer(p, ctx), PadicNumber::from_integer(p * p, ctx),
                PadicNumber::from_integer(2 * p, ctx)};
            for (const auto& r : rs) {
                auto spec = PadicCyclicSpec::make(small, r);
                auto inflated = inflate_cyclic(spec, large);
                rep.check(padic_invariant(spec) == padic_invariant(inflated),
                          "inflation changes the invariant (p=" + std::to_string(p) + ")");
            }
        }
    }

    // the real place
    for (int s = 0; s < 30; ++s) {
        Rat a = random_rat(rng, true), b = random_rat(rng, true);
        rep.check(real_invariant(a, b) == real_invariant(b, a), "real invariant not symmetric");
        Rat sq = random_rat(rng, true);
        rep.check(real_invariant(a * sq * sq, b) == real_invariant(a, b),
                  "real invariant moves under square scaling");
    }
}

void suite_global(SuiteReport& rep, Rng& rng) {
    struct Named {
        long a, b;
        std::vector<long> nonzero_at;  // 0 = real
    };
    for (const Named& c : {Named{-1, -1, {0, 2}}, Named{-1, -5, {0, 2}}}) {
        auto res = global_sum_check(Rat(c.a), Rat(c.b));
        rep.check(res.sum_zero, "named pair: sum != 0");
        for (long pl : c.nonzero_at) {
            Place place = pl == 0 ? Place::real() : Place::prime(pl);
            rep.check(!res.locals.at(place).is_zero(), "named pair: expected nonzero local invariant");
        }
    }
    for (auto [a, b] : std::vector<std::pair<long, long>>{{2, -3}, {-2, -7}}) {
        rep.check(global_sum_check(Rat(a), Rat(b)).sum_zero, "named pair: sum != 0");
    }

    std::uniform_int_distribution<long> pick(-50, 50);
    int done = 0;
    while (done < 20) {
        long a = pick(rng), b = pick(rng);
        if (a == 0 || b == 0) continue;
        Int sa = squarefree_part(Int(a)), sb = squarefree_part(Int(b));
        auto res = global_sum_check(Rat(sa), Rat(sb));
        rep.check(res.sum_zero, "random squarefree pair: sum != 0 at (" + std::to_string(sa.get_si()) +
                                    "," + std::to_string(sb.get_si()) + ")");
        ++done;
    }
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"cocycle", "norms", "ramification", "invariants", "global"};
}

SuiteReport run_suite(const std::string& name, uint64_t seed) {
    SuiteReport rep;
    rep.name = name;
    Rng rng(seed);
    if (name == "cocycle") {
        suite_cocycle(rep, rng);
    } else if (name == "norms") {
        suite_norms(rep, rng);
    } else if (name == "ramification") {
        suite_ramification(rep, rng);
    } else if (name == "invariants") {
        suite_invariants(rep, rng);
    } else if (name == "global") {
        suite_global(rep, rng);
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    return rep;
}

}  // namespace brauer
