#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brauer/errors.hpp"
#include "brauer/invariants.hpp"

using namespace brauer;

namespace {

// Closed-form Hilbert symbol over Q_p (Legendre symbols for odd p, the
// epsilon/omega formula at p = 2): the independent oracle for the norm-based
// implementation.
int legendre(Int a, long p) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), Int(p).get_mpz_t());
    if (r == 0) return 0;
    FpElem u(p, r.get_si());
    return u.pow(Int((p - 1) / 2)) == u.one_like() ? 1 : -1;
}

int hilbert_oracle(Int a, Int b, long p) {
    long alpha = int_valuation(a, p), beta = int_valuation(b, p);
    Int u = a, w = b;
    for (long i = 0; i < alpha; ++i) u /= p;
    for (long i = 0; i < beta; ++i) w /= p;
    if (p != 2) {
        int sign = 1;
        if (alpha % 2 == 1 && beta % 2 == 1 && ((p - 1) / 2) % 2 == 1) sign = -sign;
        int lu = legendre(u, p), lw = legendre(w, p);
        if (beta % 2 == 1 && lu == -1) sign = -sign;
        if (alpha % 2 == 1 && lw == -1) sign = -sign;
        return sign;
    }
    // epsilon(z) = (z-1)/2 mod 2, omega(z) = (z^2-1)/8 mod 2, on odd z
    auto eps2 = [](const Int& z) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), Int(4).get_mpz_t());
        return r == 1 ? 0 : 1;
    };
    auto omega = [](const Int& z) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), Int(8).get_mpz_t());
        return (r == 1 || r == 7) ? 0 : 1;
    };
    int e = eps2(u) * eps2(w) + static_cast<int>(alpha % 2) * omega(w) +
            static_cast<int>(beta % 2) * omega(u);
    return e % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("invariant group arithmetic") {
    BrauerInvariant half(Rat(Int(1), Int(2)));
    CHECK(half + half == BrauerInvariant());
    CHECK(inv_neg(BrauerInvariant()) == BrauerInvariant());
    CHECK(inv_order(BrauerInvariant(Rat(Int(2), Int(3)))) == 3);
    CHECK(inv_neg(BrauerInvariant(Rat(Int(1), Int(3)))) == BrauerInvariant(Rat(Int(2), Int(3))));
    CHECK(BrauerInvariant(Rat(Int(7), Int(3))) == BrauerInvariant(Rat(Int(1), Int(3))));
    CHECK(BrauerInvariant(Rat(Int(-1), Int(4))) == BrauerInvariant(Rat(Int(3), Int(4))));
    CHECK(BrauerInvariant(Rat(Int(1), Int(2))).str() == "1/2");
    CHECK(BrauerInvariant().str() == "0");
}

TEST_CASE("real place invariants") {
    CHECK(real_invariant(Rat(-1), Rat(-1)) == BrauerInvariant(Rat(Int(1), Int(2))));
    for (long b : {-3L, 2L, 7L, 1L}) CHECK(real_invariant(Rat(1), Rat(b)).is_zero());
    CHECK(real_invariant(Rat(-1), Rat(7)).is_zero());
    CHECK(real_invariant(Rat(5), Rat(-2)).is_zero());
    CHECK_THROWS_AS(real_invariant(Rat(0), Rat(1)), std::invalid_argument);
}

TEST_CASE("p-adic invariant map") {
    auto ctx = make_padic_context(5, 16);
    auto W3 = unramified_extension(ctx, 3);

    CHECK(padic_invariant(PadicCyclicSpec::make(W3, PadicNumber::from_integer(2, ctx))).is_zero());
    CHECK(padic_invariant(PadicCyclicSpec::make(W3, PadicNumber::from_integer(5, ctx))) ==
          BrauerInvariant(Rat(Int(1), Int(3))));

    auto ctx3 = make_padic_context(3, 16);
    auto W2 = unramified_extension(ctx3, 2);
    CHECK(padic_invariant(PadicCyclicSpec::make(W2, PadicNumber::from_integer(9, ctx3))).is_zero());

    // negative valuations reduce mod f as well
    CHECK(padic_invariant(PadicCyclicSpec::make(
              W3, PadicNumber::from_rational(Rat(Int(1), Int(5)), ctx))) ==
          BrauerInvariant(Rat(Int(2), Int(3))));

    // non-Frobenius generators are outside the certified map
    auto sigma2 = W3.frobenius.compose(W3.frobenius);
    CHECK_THROWS_AS(
        padic_invariant(PadicCyclicSpec::make_with_sigma(W3, sigma2, PadicNumber::from_integer(5, ctx))),
        Unsupported);
    CHECK_THROWS_AS(padic_invariant(PadicCyclicSpec::make(W3, PadicNumber::zero(ctx))),
                    std::invalid_argument);
}

TEST_CASE("inflation preserves the invariant") {
    for (long p : {3L, 5L}) {
        auto ctx = make_padic_context(p, 16);
        for (auto [f, mf] : std::vector<std::pair<int, int>>{{2, 4}, {2, 6}, {3, 6}}) {
            auto small = unramified_extension(ctx, f);
            auto large = unramified_extension(ctx, mf);
            for (const PadicNumber& r :
                 {PadicNumber::from_integer(p, ctx), PadicNumber::from_integer(p * p, ctx),
                  PadicNumber::from_integer(2 * p, ctx)}) {
                auto spec = PadicCyclicSpec::make(small, r);
                auto big = inflate_cyclic(spec, large);
                CHECK(big.r == r.pow(mf / f));
                CHECK(padic_invariant(spec) == padic_invariant(big));
            }
        }
        // degenerate inflation: same field, r unchanged
        auto W = unramified_extension(ctx, 2);
        auto spec = PadicCyclicSpec::make(W, PadicNumber::from_integer(p, ctx));
        auto same = inflate_cyclic(spec, W);
        CHECK(same.r == spec.r);
        CHECK(padic_invariant(same) == padic_invariant(spec));
    }

    auto ctx = make_padic_context(5, 16);
    auto W2 = unramified_extension(ctx, 2);
    auto W3 = unramified_extension(ctx, 3);
    CHECK_THROWS_AS(
        inflate_cyclic(PadicCyclicSpec::make(W2, PadicNumber::from_integer(5, ctx)), W3),
        std::invalid_argument);
}

TEST_CASE("quaternion local invariants match the Hilbert symbol oracle") {
    CHECK(quaternion_local_invariant(Rat(-1), Rat(-1), Place::prime(3)).is_zero());
    CHECK(quaternion_local_invariant(Rat(-1), Rat(-1), Place::prime(2)) ==
          BrauerInvariant(Rat(Int(1), Int(2))));
    CHECK(quaternion_local_invariant(Rat(-1), Rat(-1), Place::real()) ==
          BrauerInvariant(Rat(Int(1), Int(2))));

    std::vector<long> vals = {-1, 1, 2, -2, 3, -3, 5, -5, 6, 7, 10, -10, 15, -21, 30};
    for (long p : {2L, 3L, 5L, 7L, 13L}) {
        for (long a : vals)
            for (long b : vals) {
                int oracle = hilbert_oracle(Int(a), Int(b), p);
                auto inv = quaternion_local_invariant(Rat(a), Rat(b), Place::prime(p));
                CHECK((oracle == 1) == inv.is_zero());
            }
    }

    // square-class invariance: scaling either slot by a square changes nothing
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<long> pick(1, 20);
    for (int s = 0; s < 50; ++s) {
        long a = pick(rng) - 10, b = pick(rng) - 10, c = pick(rng);
        if (a == 0 || b == 0) continue;
        for (long p : {2L, 3L, 5L}) {
            auto plain = quaternion_local_invariant(Rat(a), Rat(b), Place::prime(p));
            auto scaled = quaternion_local_invariant(Rat(a * c * c), Rat(b), Place::prime(p));
            CHECK(plain == scaled);
        }
    }

    CHECK_THROWS_AS(quaternion_local_invariant(Rat(1), Rat(1), Place::prime(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(quaternion_local_invariant(Rat(-1), Rat(-1), Place::prime(2), 3), PrecisionLoss);
}

TEST_CASE("global reciprocity") {
    auto res = global_sum_check(Rat(-1), Rat(-1));
    CHECK(res.sum_zero);
    CHECK(res.locals.at(Place::real()) == BrauerInvariant(Rat(Int(1), Int(2))));
    CHECK(res.locals.at(Place::prime(2)) == BrauerInvariant(Rat(Int(1), Int(2))));

    auto res2 = global_sum_check(Rat(-1), Rat(-5));
    CHECK(res2.sum_zero);
    CHECK(res2.locals.at(Place::prime(5)).is_zero());
    CHECK_FALSE(res2.locals.at(Place::prime(2)).is_zero());

    CHECK(global_sum_check(Rat(2), Rat(-3)).sum_zero);
    CHECK(global_sum_check(Rat(-2), Rat(-7)).sum_zero);
    CHECK(global_sum_check(Rat(1), Rat(30)).sum_zero);

    // rationals normalize through numerator times denominator
    CHECK(global_sum_check(Rat(Int(-1), Int(3)), Rat(Int(7), Int(2))).sum_zero);

    std::mt19937_64 rng(53);
    std::uniform_int_distribution<long> pick(-50, 50);
    int done = 0;
    while (done < 20) {
        long a = pick(rng), b = pick(rng);
        if (a == 0 || b == 0) continue;
        CHECK(global_sum_check(Rat(a), Rat(b)).sum_zero);
        ++done;
    }
}
