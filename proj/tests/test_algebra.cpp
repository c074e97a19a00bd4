#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brauer/algebra.hpp"
#include "brauer/algebra_io.hpp"

using namespace brauer;

namespace {

// Hamilton quaternions over Q on the basis {1, i, j, k}.
StructureConstantAlgebra<Rat> quaternions() {
    int n = 4;
    std::vector<Rat> table(64, Rat(0));
    auto set = [&](int i, int j, int k, long v) { table[(i * 4 + j) * 4 + k] = Rat(v); };
    // 1 is basis 0
    for (int i = 0; i < 4; ++i) {
        set(0, i, i, 1);
        if (i != 0) set(i, 0, i, 1);
    }
    set(1, 1, 0, -1);  // i^2 = -1
    set(2, 2, 0, -1);  // j^2 = -1
    set(3, 3, 0, -1);  // k^2 = -1
    set(1, 2, 3, 1);   // ij = k
    set(2, 1, 3, -1);  // ji = -k
    set(2, 3, 1, 1);   // jk = i
    set(3, 2, 1, -1);  // kj = -i
    set(3, 1, 2, 1);   // ki = j
    set(1, 3, 2, -1);  // ik = -j
    std::vector<Rat> one = {Rat(1), Rat(0), Rat(0), Rat(0)};
    return StructureConstantAlgebra<Rat>::make(n, std::move(table), std::move(one));
}

// Q(i) viewed as a two-dimensional commutative Q-algebra.
StructureConstantAlgebra<Rat> gaussian_algebra() {
    std::vector<Rat> table(8, Rat(0));
    auto set = [&](int i, int j, int k, long v) { table[(i * 2 + j) * 2 + k] = Rat(v); };
    set(0, 0, 0, 1);
    set(0, 1, 1, 1);
    set(1, 0, 1, 1);
    set(1, 1, 0, -1);
    return StructureConstantAlgebra<Rat>::make(2, std::move(table), {Rat(1), Rat(0)});
}

}  // namespace

TEST_CASE("make_algebra validation") {
    // the one-dimensional table is the base field itself
    auto base = StructureConstantAlgebra<Rat>::make(1, {Rat(1)}, {Rat(1)});
    CHECK(base.dim() == 1);

    CHECK_NOTHROW(quaternions());

    // wrong identity coordinates
    CHECK_THROWS_AS(StructureConstantAlgebra<Rat>::make(1, {Rat(1)}, {Rat(2)}),
                    std::invalid_argument);

    // a non-associative table with a correct identity: basis {1, x, y},
    // x*y = 1 but y*x = 0, so (x y) x != x (y x)
    std::vector<Rat> bad(27, Rat(0));
    auto set = [&](int i, int j, int k, long v) { bad[(i * 3 + j) * 3 + k] = Rat(v); };
    for (int i = 0; i < 3; ++i) {
        set(0, i, i, 1);
        if (i != 0) set(i, 0, i, 1);
    }
    set(1, 2, 0, 1);
    CHECK_THROWS_WITH_AS(StructureConstantAlgebra<Rat>::make(3, bad, {Rat(1), Rat(0), Rat(0)}),
                         doctest::Contains("not associative"), std::invalid_argument);
}

TEST_CASE("matrix algebras") {
    auto m1 = matrix_algebra(Rat(1), 1);
    CHECK(m1.dim() == 1);

    auto m2 = matrix_algebra(Rat(1), 2);
    CHECK(m2.dim() == 4);
    CHECK(center(m2).size() == 1);

    auto m3 = matrix_algebra(Rat(1), 3);
    CHECK(enveloping_map_rank(m3) == 81);
    CHECK(is_central_simple(m3));
}

TEST_CASE("tensor products") {
    auto H = quaternions();
    auto base = StructureConstantAlgebra<Rat>::make(1, {Rat(1)}, {Rat(1)});

    // A (x) k = A up to relabeling, which is the identity here
    auto Hk = tensor_product(H, base);
    CHECK(Hk.dim() == 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) CHECK(Hk.c(i, j, k) == H.c(i, j, k));

    auto m2 = matrix_algebra(Rat(1), 2);
    auto m2m2 = tensor_product(m2, m2);
    CHECK(m2m2.dim() == 16);
    CHECK(is_central_simple(m2m2));

    auto HH = tensor_product(H, H);
    CHECK(HH.dim() == 16);
    CHECK(is_central_simple(HH));
    CHECK(center(HH).size() == 1);
}

TEST_CASE("opposite algebras") {
    auto Qi = gaussian_algebra();
    auto QiOp = opposite(Qi);  // commutative: identical table
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) CHECK(QiOp.c(i, j, k) == Qi.c(i, j, k));

    auto H = quaternions();
    auto Hop = opposite(H);
    // conjugation (a,b,c,d) -> (a,-b,-c,-d) identifies H with H^op
    auto sign = [](int i) { return i == 0 ? Rat(1) : Rat(-1); };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                CHECK(Hop.c(i, j, k) == sign(i) * sign(j) * sign(k) * H.c(i, j, k));

    // involution, and central simplicity is preserved
    auto HopOp = opposite(Hop);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) CHECK(HopOp.c(i, j, k) == H.c(i, j, k));
    CHECK(is_central_simple(Hop));
    CHECK(is_central_simple(opposite(matrix_algebra(Rat(1), 2))));
}

TEST_CASE("center and centralizer") {
    auto H = quaternions();
    CHECK(center(H).size() == 1);
    CHECK(center(gaussian_algebra()).size() == 2);
    for (int n : {2, 3}) CHECK(center(matrix_algebra(Rat(1), n)).size() == 1);

    // centralizer of {1} is everything
    CHECK(centralizer(H, {H.one()}).size() == 4);

    // centralizer of i inside H is the copy of C spanned by {1, i}
    auto zi = centralizer(H, {H.basis_vec(1)});
    REQUIRE(zi.size() == 2);
    for (const auto& v : zi) {
        CHECK(v[2].is_zero());
        CHECK(v[3].is_zero());
    }

    // centralizer of e11 inside M_2 is the diagonal span{e11, e22}
    auto m2 = matrix_algebra(Rat(1), 2);
    auto diag = centralizer(m2, {m2.basis_vec(0)});
    REQUIRE(diag.size() == 2);
    for (const auto& v : diag) {
        CHECK(v[1].is_zero());
        CHECK(v[2].is_zero());
    }

    // centralizer of a full basis is the center
    std::vector<std::vector<Rat>> basis;
    for (int i = 0; i < 4; ++i) basis.push_back(H.basis_vec(i));
    CHECK(centralizer(H, basis).size() == center(H).size());
}

TEST_CASE("enveloping map rank certificates") {
    auto base = StructureConstantAlgebra<Rat>::make(1, {Rat(1)}, {Rat(1)});
    CHECK(enveloping_map_rank(base) == 1);
    CHECK(is_central_simple(base));

    auto H = quaternions();
    CHECK(enveloping_map_rank(H) == 16);
    CHECK(is_central_simple(H));

    // Q(i) over Q: commutative image of rank 2 < 4
    auto Qi = gaussian_algebra();
    CHECK(enveloping_map_rank(Qi) == 2);
    CHECK_FALSE(is_central_simple(Qi));

    // center of H (x) Q(i) matches the center of Q(i) in dimension
    auto mixed = tensor_product(H, Qi);
    CHECK(center(mixed).size() == 2);

    // tensor dimension multiplicativity and closure of central simplicity
    auto m2 = matrix_algebra(Rat(1), 2);
    for (const auto* A : {&H, &m2})
        for (const auto* B : {&H, &m2}) {
            auto T = tensor_product(*A, *B);
            CHECK(T.dim() == A->dim() * B->dim());
            CHECK(is_central_simple(T));
            CHECK(center(T).size() == 1);
        }
}

TEST_CASE("central simplicity over other scalar fields") {
    // M_2 over F_7 and over Q_5
    auto m2fp = matrix_algebra(FpElem(7, 1), 2);
    CHECK(is_central_simple(m2fp));

    auto ctx = make_padic_context(5, 12);
    auto m2qp = matrix_algebra(PadicNumber::from_integer(1, ctx), 2);
    CHECK(is_central_simple(m2qp));
}

TEST_CASE("algebra JSON round-trips byte-identically") {
    auto H = quaternions();
    std::string emitted = algebra_to_json(AnyAlgebra(H));
    AnyAlgebra parsed = algebra_from_json(emitted);
    CHECK(algebra_to_json(parsed) == emitted);
    const auto& back = std::get<StructureConstantAlgebra<Rat>>(parsed);
    CHECK(back.dim() == 4);
    CHECK(is_central_simple(back));

    auto m2fp = matrix_algebra(FpElem(3, 1), 2);
    std::string fp_text = algebra_to_json(AnyAlgebra(m2fp));
    CHECK(algebra_to_json(algebra_from_json(fp_text)) == fp_text);

    auto ctx = make_padic_context(5, 8);
    auto m2qp = matrix_algebra(PadicNumber::from_integer(1, ctx), 2);
    std::string qp_text = algebra_to_json(AnyAlgebra(m2qp));
    CHECK(algebra_to_json(algebra_from_json(qp_text)) == qp_text);

    CHECK_THROWS_AS(algebra_from_json("{\"field\": \"R\", \"dim\": 1}"), std::invalid_argument);
}
