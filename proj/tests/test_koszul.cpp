#include "doctest.h"

#include "eqt/koszul.hpp"

using namespace eqt;

TEST_CASE("shuffle signs of subsets")
{
    CHECK(shuffle_sign(0b01, 0b10) == 1);
    CHECK(shuffle_sign(0b10, 0b01) == -1);
    CHECK(shuffle_sign(0b011, 0b100) == 1);
    CHECK(shuffle_sign(0b100, 0b011) == 1);
    CHECK(shuffle_sign(0b010, 0b101) == -1);
    CHECK(shuffle_sign(0b1, 0b1) == 0);
    CHECK(subsets_of(0b101).size() == 4);
    CHECK(multi_indices(2, 2).size() == 6);
    CHECK(multi_indices(3, 2).size() == 10);
}

TEST_CASE("Koszul complex in rank one")
{
    TComplex K = koszul_complex(1, 4, Ring::integers());
    // x (x) 1 -> 1 (x) x
    std::size_t src = K.index.at({{1}, 0}), dst = K.index.at({{0}, 1});
    CHECK(K.d.at(dst, src) == 1);
    CHECK(K.d.at(K.index.at({{0}, 0}), K.index.at({{0}, 1})) == 0);
}

TEST_CASE("Koszul complex is acyclic above degree zero")
{
    for (int r = 0; r <= 3; ++r)
        for (Ring R : {Ring::integers(), Ring::prime_field(2), Ring::rationals()}) {
            TComplex K = koszul_complex(r, 9, R);
            REQUIRE(K.d_squared_zero());
            CHECK(K.homology(0).free_rank == 1);
            CHECK(K.homology(0).torsion.empty());
            for (int n = 1; n <= 8; ++n) {
                auto h = K.homology(n);
                CHECK(h.free_rank == 0);
                CHECK(h.torsion.empty());
            }
        }
}

TEST_CASE("canonical twisting cochain")
{
    for (int r = 0; r <= 4; ++r)
        CHECK(verify_canonical_twisting(r, 6).empty());
}

TEST_CASE("t and h of trivial objects")
{
    TComplex S = t_functor(trivial_lambda_module(2, Ring::integers()), 6);
    CHECK(S.d.is_zero());
    CHECK(S.homology(4).free_rank == 3);
    HComplex L = h_functor(trivial_s_comodule(3, Ring::integers()));
    CHECK(L.d.is_zero());
    CHECK(L.homology(1).free_rank == 3);
    CHECK(L.check_axioms().empty());
    // h S is the Koszul complex again
    HComplex hS = h_functor(s_comodule(2, 8, Ring::integers()));
    CHECK(hS.d_squared_zero());
    CHECK(hS.homology(0).free_rank == 1);
    for (int n = 1; n <= 7; ++n)
        CHECK(hS.homology(n).free_rank == 0);
}

TEST_CASE("Sigma action on the homology of t N")
{
    TComplex S = t_functor(trivial_lambda_module(1, Ring::rationals()), 6);
    Matrix m = induced_on_homology(S, S, S.xi_cap(0), 4, 2);
    CHECK(m.rows() == 1);
    CHECK(m.cols() == 1);
    CHECK(m.at(0, 0) != 0);
}

TEST_CASE("free module quasi-isomorphism and triangles")
{
    LambdaModule L = lambda_free(2, Ring::integers());
    CHECK(L.check_axioms().empty());
    auto q = check_unit_quasi_iso(L, 6);
    CHECK_MESSAGE(q.ok, q.witness);
    auto t = check_triangles(L, 5);
    CHECK_MESSAGE(t.ok, t.witness);
    auto q0 = check_unit_quasi_iso(trivial_lambda_module(2, Ring::integers()), 6);
    CHECK_MESSAGE(q0.ok, q0.witness);
}

TEST_CASE("random Lambda-modules")
{
    std::mt19937_64 rng(11);
    const Ring rings[] = {Ring::integers(), Ring::integers(), Ring::prime_field(3), Ring::rationals()};
    for (int k = 0; k < 24; ++k) {
        int r = 1 + k % 2;
        LambdaModule N = random_lambda_module(r, rings[k % 4], rng);
        REQUIRE(N.check_axioms().empty());
        auto q = check_unit_quasi_iso(N, 6);
        CHECK_MESSAGE(q.ok, q.witness);
        if (k < 6) {
            auto t = check_triangles(N, 4);
            CHECK_MESSAGE(t.ok, t.witness);
        }
    }
}

TEST_CASE("weak module twisting condition detects a bad action")
{
    LambdaModule L = lambda_free(2, Ring::integers());
    Multi e{1, 0};
    L.c[e].add(1, 0, 1);
    CHECK_FALSE(L.check_axioms().empty());
}
