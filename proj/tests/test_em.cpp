#include "doctest.h"

#include "helpers.hpp"

using namespace eqt;
using namespace testing_helpers;

namespace {

struct Fixture {
    std::shared_ptr<StandardSimplex> X = std::make_shared<StandardSimplex>(2);
    std::shared_ptr<StandardSimplex> Y = std::make_shared<StandardSimplex>(3);
    Product P{X, Y};
    Product Q{Y, X};
    Ring Z = Ring::integers();
};

}  // namespace

TEST_CASE("shuffle examples")
{
    Fixture f;
    auto x = f.X->generators(1)[0];
    auto y = f.Y->generators(1)[0];
    Chain s = shuffle(f.P, Chain(f.Z, x), Chain(f.Z, y));
    Chain expect(f.Z);
    expect.add(f.P.make(f.X->degeneracy(x, 1), f.Y->degeneracy(y, 0)), 1);
    expect.add(f.P.make(f.X->degeneracy(x, 0), f.Y->degeneracy(y, 1)), -1);
    CHECK(s == expect);

    auto v = f.X->generators(0)[0];
    auto y2 = f.Y->generators(2)[0];
    Chain s2 = shuffle(f.P, Chain(f.Z, v), Chain(f.Z, y2));
    REQUIRE(s2.terms().size() == 1);
    CHECK(s2.terms().begin()->second == 1);
}

TEST_CASE("alexander-whitney and homotopy in low degree")
{
    Fixture f;
    std::mt19937 rng(5);
    auto z0 = random_pair(f.P, 0, rng);
    CHECK(alexander_whitney(f.P, Chain(f.Z, z0)).terms().size() == 1);
    CHECK(ez_homotopy(f.P, Chain(f.Z, z0)).is_zero());
    CHECK(steenrod(f.P, Chain(f.Z, z0)).is_zero());

    auto z1 = random_pair(f.P, 1, rng);
    auto [x, y] = f.P.components(z1);
    Tensor aw(f.Z);
    aw.add({f.X->face(x, 1), y}, 1);
    aw.add({x, f.Y->face(y, 0)}, 1);
    CHECK(alexander_whitney(f.P, Chain(f.Z, z1)) == aw);
    Chain h(f.Z);
    h.add(f.P.make(f.X->degeneracy(x, 0), f.Y->degeneracy(y, 1)), 1);
    CHECK(ez_homotopy(f.P, Chain(f.Z, z1)) == h);
    Tensor st(f.Z);
    st.add({x, y}, -1);
    CHECK(steenrod(f.P, Chain(f.Z, z1)) == st);
}

TEST_CASE("eilenberg-zilber relations on random chains")
{
    Fixture f;
    std::mt19937 rng(1);
    Spaces XY{f.X.get(), f.Y.get()};
    for (int t = 0; t < 60; ++t) {
        int n = static_cast<int>(rng() % 6);
        Chain c(f.Z, random_pair(f.P, n, rng));
        Chain H = ez_homotopy(f.P, c);
        Chain lhs = shuffle(f.P, alexander_whitney(f.P, c)) - c;
        Chain dH = boundary(f.P, H) + ez_homotopy(f.P, boundary(f.P, c));
        CHECK(lhs == dH);
        CHECK(alexander_whitney(f.P, H).is_zero());
        CHECK(ez_homotopy(f.P, H).is_zero());
        CHECK(boundary(f.P, boundary(f.P, c)).is_zero());

        // chain maps
        CHECK(alexander_whitney(f.P, boundary(f.P, c)) == tensor_boundary(XY, alexander_whitney(f.P, c)));

        // ST = T AW_{YX} τ_* H
        Tensor alt = twist(alexander_whitney(f.Q, swap_product(f.P, f.Q, H)));
        CHECK(steenrod(f.P, c) == alt);
    }
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 3; ++q) {
            auto x = f.X->generators(p)[0];
            auto y = f.Y->generators(q)[0];
            Chain s = shuffle(f.P, Chain(f.Z, x), Chain(f.Z, y));
            Tensor expect(f.Z);
            expect.add({x, y}, 1);
            CHECK(alexander_whitney(f.P, s) == expect);
            CHECK(ez_homotopy(f.P, s).is_zero());
            // τ_* ∇ = ∇ T
            Chain lhs = swap_product(f.P, f.Q, s);
            Chain rhs = shuffle(f.Q, twist(tensor(Chain(f.Z, x), Chain(f.Z, y))));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("cup products and cup-one on a simplex")
{
    auto D = std::make_shared<StandardSimplex>(5);
    Ring Z = Ring::integers();
    std::mt19937 rng(9);
    for (int t = 0; t < 8; ++t) {
        int p = 1 + static_cast<int>(rng() % 2), q = 1 + static_cast<int>(rng() % 2), r = static_cast<int>(rng() % 2);
        auto a = random_cochain(*D, p, 5, rng);
        auto b = random_cochain(*D, q, 5, rng);
        auto c = random_cochain(*D, r, 5, rng);
        auto one = unit_cochain();
        for (const auto& s : D->generators(p + q)) {
            CHECK(cup(*D, one, a, Z)(s.dim() == p ? s : s) == (s.dim() == p ? a(s) : Scalar(0)));
        }
        auto abc1 = cup(*D, cup(*D, a, b, Z), c, Z);
        auto abc2 = cup(*D, a, cup(*D, b, c, Z), Z);
        for (const auto& s : D->generators(p + q + r))
            CHECK(abc1(s) == abc2(s));
        // Leibniz
        auto lhs = coboundary(*D, cup(*D, a, b, Z), Z);
        auto rhs = linear_combination({{1, cup(*D, coboundary(*D, a, Z), b, Z)},
                                       {p % 2 ? -1 : 1, cup(*D, a, coboundary(*D, b, Z), Z)}},
                                      Z);
        for (const auto& s : D->generators(p + q + 1))
            CHECK(lhs(s) == rhs(s));
        // d(a ∪1 b) = a∪b - (-1)^{pq} b∪a - da∪1 b - (-1)^p a∪1 db
        auto d1 = coboundary(*D, cup1(*D, a, b, Z), Z);
        auto hc = linear_combination({{1, cup(*D, a, b, Z)},
                                      {(p * q) % 2 ? 1 : -1, cup(*D, b, a, Z)},
                                      {-1, cup1(*D, coboundary(*D, a, Z), b, Z)},
                                      {p % 2 ? 1 : -1, cup1(*D, a, coboundary(*D, b, Z), Z)}},
                                     Z);
        for (const auto& s : D->generators(p + q))
            CHECK(d1(s) == hc(s));
        // Hirsch: a ∪1 (b ∪ c) = (a ∪1 b) ∪ c + (-1)^{q(p-1)} b ∪ (a ∪1 c)
        auto h1 = cup1(*D, a, cup(*D, b, c, Z), Z);
        auto h2 = linear_combination({{1, cup(*D, cup1(*D, a, b, Z), c, Z)},
                                      {(q * (p - 1)) % 2 ? -1 : 1, cup(*D, b, cup1(*D, a, c, Z), Z)}},
                                     Z);
        for (const auto& s : D->generators(p + q + r - 1))
            CHECK(h1(s) == h2(s));
        // degree zero factor
        auto z0 = random_cochain(*D, 0, 5, rng);
        for (const auto& s : D->generators(p - 1))
            CHECK(cup1(*D, z0, a, Z)(s) == 0);
    }
}

TEST_CASE("cap products")
{
    auto D = std::make_shared<StandardSimplex>(4);
    Ring Z = Ring::integers();
    std::mt19937 rng(4);
    auto s = D->generators(4)[0];
    Chain m(Z, s);
    CHECK(cap(*D, unit_cochain(), m) == m);
    auto a = random_cochain(*D, 1, 4, rng);
    auto b = random_cochain(*D, 2, 4, rng);
    // (a ∪ b) ∩ m = a ∩ (b ∩ m)
    CHECK(cap(*D, cup(*D, a, b, Z), m) == cap(*D, a, cap(*D, b, m)));
}
