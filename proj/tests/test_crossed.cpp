#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brauer/crossed.hpp"

using namespace brauer;

namespace {

Poly<Rat> q_poly(const std::vector<long>& coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.push_back(Rat(v));
    return Poly<Rat>(std::move(c));
}

std::shared_ptr<const GaloisData<Rat>> gaussian_galois() {
    auto L = make_extension(q_poly({1, 0, 1}));
    return GaloisData<Rat>::make(L, Automorphism<Rat>::make(L, -L.generator()), 2);
}

// Hamilton quaternion table on {1, i, j, k}, the comparison target.
StructureConstantAlgebra<Rat> quaternions() {
    std::vector<Rat> table(64, Rat(0));
    auto set = [&](int i, int j, int k, long v) { table[(i * 4 + j) * 4 + k] = Rat(v); };
    for (int i = 0; i < 4; ++i) {
        set(0, i, i, 1);
        if (i != 0) set(i, 0, i, 1);
    }
    set(1, 1, 0, -1);
    set(2, 2, 0, -1);
    set(3, 3, 0, -1);
    set(1, 2, 3, 1);
    set(2, 1, 3, -1);
    set(2, 3, 1, 1);
    set(3, 2, 1, -1);
    set(3, 1, 2, 1);
    set(1, 3, 2, -1);
    return StructureConstantAlgebra<Rat>::make(4, std::move(table), {Rat(1), Rat(0), Rat(0), Rat(0)});
}

ExtElem<Rat> random_unit(const SimpleExtension<Rat>& L, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> pick(-5, 5);
    for (;;) {
        auto v = L.from_coords({Rat(pick(rng)), Rat(pick(rng))});
        if (!v.is_zero()) return v;
    }
}

}  // namespace

TEST_CASE("galois data rejects wrong orders and big fixed fields") {
    auto L = make_extension(q_poly({1, 0, 1}));
    auto conj = Automorphism<Rat>::make(L, -L.generator());
    CHECK_NOTHROW(GaloisData<Rat>::make(L, conj, 2));
    // the identity has a 2-dimensional fixed space
    CHECK_THROWS_AS(GaloisData<Rat>::make(L, Automorphism<Rat>::identity(L), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(GaloisData<Rat>::make(L, conj, 3), std::invalid_argument);
    // a non-root image is not an automorphism at all
    CHECK_THROWS_AS(Automorphism<Rat>::make(L, L.one()), std::invalid_argument);
}

TEST_CASE("cocycle verification") {
    auto gal = gaussian_galois();
    auto L = gal->field;

    CHECK(verify_cocycle(cyclic_factor_set(gal, Rat(1))));  // trivial
    for (long r : {-1L, 2L, -5L, 7L}) CHECK(verify_cocycle(cyclic_factor_set(gal, Rat(r))));

    // n = 2 shape: [[1, 1], [1, r]]
    auto fs = cyclic_factor_set(gal, Rat(-1));
    CHECK(fs.at(0, 0) == L.one());
    CHECK(fs.at(0, 1) == L.one());
    CHECK(fs.at(1, 0) == L.one());
    CHECK(fs.at(1, 1) == L.from_base(Rat(-1)));

    auto bad = cyclic_factor_set(gal, Rat(2));
    bad.at(1, 0) = L.generator();
    CHECK_FALSE(verify_cocycle(bad));

    FactorSet<Rat> zeroed = cyclic_factor_set(gal, Rat(2));
    zeroed.at(0, 1) = L.zero();
    CHECK_THROWS_AS(verify_cocycle(zeroed), std::invalid_argument);

    // cyclic factor sets over local unramified data, n = 3
    auto ctx = make_padic_context(5, 12);
    auto W = unramified_extension(ctx, 3);
    auto galw = GaloisData<PadicNumber>::make(W.field, W.frobenius, 3);
    CHECK(verify_cocycle(cyclic_factor_set(galw, PadicNumber::from_integer(5, ctx))));
}

TEST_CASE("coboundaries are cocycles") {
    auto gal = gaussian_galois();
    auto L = gal->field;
    std::mt19937_64 rng(41);

    auto trivial = coboundary_from(gal, {L.one(), L.one()});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(trivial.at(i, j) == L.one());

    for (int s = 0; s < 100; ++s) {
        auto delta = coboundary_from(gal, {L.one(), random_unit(L, rng)});
        CHECK(verify_cocycle(delta));

        // a cocycle times a coboundary is a cocycle
        auto prod = cyclic_factor_set(gal, Rat(-1));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) prod.at(i, j) = prod.at(i, j) * delta.at(i, j);
        CHECK(verify_cocycle(prod));
    }

    CHECK_THROWS_AS(coboundary_from(gal, {L.one(), L.zero()}), std::invalid_argument);
    CHECK_THROWS_AS(coboundary_from(gal, {L.generator(), L.one()}), std::invalid_argument);
}

TEST_CASE("crossed product realizes the quaternions") {
    auto gal = gaussian_galois();
    auto A = crossed_product(cyclic_factor_set(gal, Rat(-1)));
    REQUIRE(A.dim() == 4);

    // basis comes out as (1, u, i, iu); relabel to (1, i, j, k) = (1, i, u, iu)
    int relabel[4] = {0, 2, 1, 3};
    auto H = quaternions();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                CHECK(A.c(relabel[i], relabel[j], relabel[k]) == H.c(i, j, k));

    CHECK(is_central_simple(A));
}

TEST_CASE("crossed products are central simple of dimension n^2") {
    auto gal = gaussian_galois();
    std::mt19937_64 rng(43);

    auto split = crossed_product(cyclic_factor_set(gal, Rat(1)));
    CHECK(split.dim() == 4);
    CHECK(is_central_simple(split));
    CHECK(center(split).size() == 1);

    for (int s = 0; s < 5; ++s) {
        auto delta = coboundary_from(gal, {gal->field.one(), random_unit(gal->field, rng)});
        auto A = crossed_product(delta);
        CHECK(A.dim() == 4);
        CHECK(is_central_simple(A));
    }

    // over a local unramified quadratic field
    auto ctx = make_padic_context(3, 12);
    auto W = unramified_extension(ctx, 2);
    auto galw = GaloisData<PadicNumber>::make(W.field, W.frobenius, 2);
    std::uniform_int_distribution<long> digit(0, 2);
    for (int s = 0; s < 3; ++s) {
        std::vector<ExtElem<PadicNumber>> mu;
        mu.push_back(W.field.one());
        for (;;) {
            auto cand = W.field.from_coords({PadicNumber::from_integer(digit(rng) + 1, ctx),
                                             PadicNumber::from_integer(digit(rng), ctx)});
            if (!cand.is_zero()) {
                mu.push_back(cand);
                break;
            }
        }
        auto A = crossed_product(coboundary_from(galw, mu));
        CHECK(A.dim() == 4);
        CHECK(is_central_simple(A));
    }

    // the centralizer of L inside (G, L, gamma) is L itself: the embedded
    // copy of L is spanned by basis slots (m, 0)
    auto A = crossed_product(cyclic_factor_set(gal, Rat(-1)));
    std::vector<std::vector<Rat>> l_basis;
    for (int m = 0; m < 2; ++m) l_basis.push_back(A.basis_vec(m * 2));
    auto cent = centralizer(A, l_basis);
    CHECK(cent.size() == 2);
    for (const auto& v : cent) {
        CHECK(v[1].is_zero());
        CHECK(v[3].is_zero());
    }
}

TEST_CASE("cyclic algebras") {
    auto gal = gaussian_galois();
    auto H = cyclic_algebra(CyclicAlgebraSpec<Rat>{gal, Rat(-1)});
    CHECK(is_central_simple(H));

    // (sigma, W_3/Q_5, 5) is a 9-dimensional central simple Q_5-algebra
    auto ctx = make_padic_context(5, 12);
    auto W = unramified_extension(ctx, 3);
    auto galw = GaloisData<PadicNumber>::make(W.field, W.frobenius, 3);
    auto A = cyclic_algebra(CyclicAlgebraSpec<PadicNumber>{galw, PadicNumber::from_integer(5, ctx)});
    CHECK(A.dim() == 9);
    CHECK(is_central_simple(A));

    CHECK_THROWS_AS(cyclic_factor_set(gal, Rat(0)), std::invalid_argument);
}

TEST_CASE("norm-coset equivalence oracles") {
    CHECK(cyclic_equivalent_real(Rat(3), Rat(3)));
    CHECK_FALSE(cyclic_equivalent_real(Rat(-1), Rat(1)));
    CHECK(cyclic_equivalent_real(Rat(-1), Rat(-7)));
    CHECK(cyclic_equivalent_real(Rat(2), Rat(8)));
    CHECK_THROWS_AS(cyclic_equivalent_real(Rat(0), Rat(1)), std::invalid_argument);

    auto ctx = make_padic_context(5, 12);
    auto W = unramified_extension(ctx, 2);
    auto five = PadicNumber::from_integer(5, ctx);
    auto one = PadicNumber::from_integer(1, ctx);
    CHECK(cyclic_equivalent_unramified(five, five, W));
    CHECK_FALSE(cyclic_equivalent_unramified(five, one, W));
    CHECK(cyclic_equivalent_unramified(PadicNumber::from_integer(25, ctx), one, W));
    CHECK(cyclic_equivalent_unramified(PadicNumber::from_integer(50, ctx), one, W));
}
