#include "doctest.h"

#include "eqt/simplicial.hpp"

using namespace eqt;

TEST_CASE("degeneracy words normalize")
{
    CHECK(compose_degeneracy({}, 0) == Word{0});
    CHECK(compose_degeneracy({0}, 0) == Word{1, 0});
    CHECK(compose_degeneracy({1}, 0) == Word{2, 0});
    CHECK(compose_degeneracy({0}, 2) == Word{2, 0});
}

TEST_CASE("simplicial identities on the standard simplex")
{
    auto D = std::make_shared<StandardSimplex>(4);
    CHECK(check_face_identities(*D, 4).empty());
    CHECK(D->generators(2).size() == 10);
    auto g = D->generators(2).front();
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 3; ++j) {
            auto s = D->degeneracy(g, i);
            auto fs = D->face(s, j);
            auto raw = D->raw_face(D->raw_deg(g.key, 2, i), 3, j);
            CHECK(fs == D->normalize(raw, 2));
        }
}

TEST_CASE("boundary squares to zero on products")
{
    auto D1 = std::make_shared<StandardSimplex>(1);
    auto D2 = std::make_shared<StandardSimplex>(2);
    auto P = std::make_shared<Product>(D1, D2);
    CHECK(check_face_identities(*P, 3).empty());
    CHECK(P->generators(3).size() == 3);
    for (int n = 1; n <= 3; ++n)
        for (const auto& g : P->generators(n)) {
            Chain c(Ring::integers(), g);
            CHECK(boundary(*P, boundary(*P, c)).is_zero());
        }
}

TEST_CASE("nerve group faces")
{
    NerveGroup G(2);
    Key x{1, 2, 3, 4, 5, 6};
    CHECK(G.raw_face(x, 3, 0) == Key{2, 3, 5, 6});
    CHECK(G.raw_face(x, 3, 1) == Key{3, 3, 9, 6});
    CHECK(G.raw_face(x, 3, 3) == Key{1, 2, 4, 5});
    auto s = G.normalize({0, 1, 0, 0}, 2);
    CHECK(s.word == Word{0});
    CHECK(G.realize(s) == Key{0, 1, 0, 0});
    NerveGroup H(1, 3);
    CHECK(H.generators(2).size() == 4);
    CHECK(check_face_identities(H, 4).empty());
}

TEST_CASE("finite space validation")
{
    using G = FiniteSpace::Gen;
    std::vector<G> gens{{"v", 0, {}}, {"e", 1, {{{}, 0, {0}}, {{}, 0, {0}}}}};
    FiniteSpace S1(gens, "circle");
    CHECK(S1.generators(1).size() == 1);
    Chain c(Ring::integers(), S1.gen(1));
    CHECK(boundary(S1, c).is_zero());
    std::vector<G> bad{{"v", 0, {}}, {"e", 1, {{{}, 0, {5}}, {{}, 0, {0}}}}};
    CHECK_THROWS_AS(FiniteSpace{bad}, IdentityViolation);
}
