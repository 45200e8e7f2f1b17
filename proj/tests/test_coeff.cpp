#include "doctest.h"

#include "eqt/coeff.hpp"

#include <random>

using namespace eqt;

static Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, d(rng));
    return m;
}

TEST_CASE("smith form of a small integer matrix")
{
    auto A = Matrix::from_dense({{2, 4}, {6, 8}});
    auto S = smith_normal_form(A, Ring::integers());
    REQUIRE(S.diagonal.size() == 2);
    CHECK(S.diagonal[0] == 2);
    CHECK(S.diagonal[1] == 4);
}

TEST_CASE("smith form satisfies U A V = D with divisibility")
{
    std::mt19937 rng(7);
    auto Z = Ring::integers();
    for (int t = 0; t < 60; ++t) {
        auto A = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, -4, 4);
        auto S = smith_normal_form(A, Z);
        auto D = multiply(multiply(S.U, A, Z), S.V, Z);
        CHECK(D.entries() == S.D.entries());
        for (std::size_t i = 0; i + 1 < S.diagonal.size(); ++i) {
            CHECK(S.diagonal[i] > 0);
            CHECK(boost::multiprecision::numerator(S.diagonal[i + 1]) % boost::multiprecision::numerator(S.diagonal[i]) == 0);
        }
        auto I = multiply(S.V, S.Vinv, Z);
        CHECK(I.entries() == Matrix::identity(A.cols()).entries());
    }
}

TEST_CASE("smith form over prime fields")
{
    std::mt19937 rng(11);
    auto F = Ring::prime_field(5);
    for (int t = 0; t < 30; ++t) {
        auto A = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 0, 4);
        auto S = smith_normal_form(A, F);
        auto D = multiply(multiply(S.U, A, F), S.V, F);
        CHECK(D.entries() == S.D.entries());
        for (const auto& d : S.diagonal)
            CHECK(d == 1);
    }
    CHECK_THROWS(Ring::prime_field(6));
}

TEST_CASE("homology of a pair")
{
    auto Z = Ring::integers();
    // RP^2 cellular: d2 = (2), d1 = 0
    auto d2 = Matrix::from_dense({{2}});
    auto d1 = Matrix(0, 1);
    auto h1 = homology_of_pair(d2, d1, Z);
    CHECK(h1.free_rank == 0);
    REQUIRE(h1.torsion.size() == 1);
    CHECK(h1.torsion[0] == 2);
    CHECK(h1.to_string() == "rank 0 torsion 2");
    auto h1q = homology_of_pair(d2, d1, Ring::rationals());
    CHECK(h1q.to_string() == "rank 0 torsion -");
    auto h1f = homology_of_pair(d2, d1, Ring::prime_field(2));
    CHECK(h1f.free_rank == 1);

    auto bad_in = Matrix::from_dense({{1}, {1}});
    auto bad_out = Matrix::from_dense({{1, 0}});
    CHECK_THROWS_AS(homology_of_pair(bad_in, bad_out, Z), NotAComplex);
}

TEST_CASE("kernel and homology bases")
{
    std::mt19937 rng(3);
    auto Z = Ring::integers();
    for (int t = 0; t < 30; ++t) {
        auto A = random_matrix(rng, 1 + rng() % 3, 2 + rng() % 4, -3, 3);
        auto K = kernel_basis(A, Z);
        auto AK = multiply(A, K.basis, Z);
        CHECK(AK.entries().empty());
        auto CK = multiply(K.coords, K.basis, Z);
        CHECK(CK.entries() == Matrix::identity(K.basis.cols()).entries());
    }
    // boundary of the 2-simplex into its edges, edges into vertices
    auto d2 = Matrix::from_dense({{1}, {-1}, {1}});
    auto d1 = Matrix::from_dense({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
    auto hb = homology_basis(Matrix(3, 0), d1, Z);
    CHECK(hb.presentation.free_rank == 1);
    auto hb2 = homology_basis(d2, d1, Z);
    CHECK(hb2.presentation.free_rank == 0);
}
