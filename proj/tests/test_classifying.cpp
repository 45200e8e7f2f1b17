#include "doctest.h"

#include "eqt/classifying.hpp"

#include <optional>
#include <random>

using namespace eqt;

namespace {

Key random_group_elem(const NerveGroup& G, int k, std::mt19937& rng)
{
    std::uniform_int_distribution<int> d(-1, 1);
    Key x(static_cast<std::size_t>(G.rank() * k));
    for (auto& v : x)
        v = d(rng);
    return x;
}

std::optional<Simplex> random_e(const UniversalBundle& E, const NerveGroup& G, int n, std::mt19937& rng)
{
    for (int t = 0; t < 200; ++t) {
        std::vector<Key> parts;
        for (int k = 0; k <= n; ++k)
            parts.push_back(random_group_elem(G, k, rng));
        auto e = E.from_bar(BarSpace::join(parts), n);
        if (!e.degenerate())
            return e;
    }
    return std::nullopt;
}

// (f ⊗ g)(a ⊗ b) = (-1)^{|g||a|} f(a) ⊗ g(b)
Tensor tensor_s(const Tensor& t, const UniversalBundle* left, const UniversalBundle* right)
{
    Tensor out(t.ring());
    for (const auto& [k, v] : t.terms()) {
        Chain A = left ? left->cone(Chain(t.ring(), k[0])) : Chain(t.ring(), k[0]);
        Chain B = right ? right->cone(Chain(t.ring(), k[1])) : Chain(t.ring(), k[1]);
        int s = (right && k[0].dim() % 2) ? -1 : 1;
        for (const auto& [x, w] : A.terms())
            for (const auto& [y, u] : B.terms())
                out.add({x, y}, v * w * u * s);
    }
    return out;
}

Chain cone_product(const Product& P, const UniversalBundle& EG, const UniversalBundle& EH, const Chain& c)
{
    Chain out(c.ring());
    for (const auto& [z, v] : c.terms()) {
        auto [a, b] = P.components(z);
        out.add(P.make(EG.s_tilde(a), EH.s_tilde(b)), z.dim() % 2 ? v : -v);
    }
    return out;
}

}  // namespace

TEST_CASE("bar construction examples")
{
    auto Z = std::make_shared<NerveGroup>(1);
    BarSpace B(Z);
    // BZ_2 entries: g_0 in Z_0 (trivial), g_1 in Z_1 = Z
    Key x = BarSpace::join({{}, {5}});
    CHECK(B.split(B.raw_face(x, 2, 1)) == std::vector<Key>{{}});
    Key y = BarSpace::join({{}, {3}, {4, 7}});
    // d_1 [g0, g1, g2] = [g0 d_1 g1, d_1 g2]
    CHECK(B.split(B.raw_face(y, 3, 1)) == std::vector<Key>{{}, {11}});
    CHECK(B.split(B.raw_face(y, 3, 2)) == std::vector<Key>{{}, {7}});
    CHECK(B.split(B.raw_deg(BarSpace::join({{}}), 1, 0)) == std::vector<Key>{{}, {0}});
    CHECK(B.tau(B.normalize(y, 3)) == Key{4, 7});
}

TEST_CASE("universal bundle identities")
{
    auto G = std::make_shared<NerveGroup>(1);
    UniversalBundle E(G);
    const auto& EG = *E.total();
    Ring Z = Ring::integers();
    std::mt19937 rng(5);
    CHECK(E.cone(Chain(Z, E.basepoint())).is_zero());
    for (int t = 0; t < 80; ++t) {
        int n = static_cast<int>(rng() % 5);
        auto e = *random_e(E, *G, n, rng);
        Chain c(Z, e);
        CHECK(E.cone(E.cone(c)).is_zero());
        Chain lhs = boundary(EG, E.cone(c)) + E.cone(boundary(EG, c));
        Chain want = c;
        if (n == 0)
            want.add(E.basepoint(), -1);
        CHECK(lhs == want);
        auto st = E.s_tilde(e);
        CHECK(EG.face(st, n + 1) == e);
        for (int i = 0; i <= n; ++i) {
            if (n > 0)
                CHECK(EG.face(st, i) == E.s_tilde(EG.face(e, i)));
            CHECK(EG.degeneracy(st, i) == E.s_tilde(EG.degeneracy(e, i)));
        }
        CHECK(EG.degeneracy(st, n + 1) == E.s_tilde(st));
        // face identities, including the twisted last face
        for (int j = 1; n >= 2 && j <= n; ++j)
            for (int i = 0; i < j; ++i)
                CHECK(EG.face(EG.face(e, j), i) == EG.face(EG.face(e, i), j - 1));
    }
}

TEST_CASE("cone identities on products of universal bundles")
{
    Ring Z = Ring::integers();
    std::mt19937 rng(2);
    std::vector<std::pair<int, int>> cases{{0, 1}, {1, 0}, {1, 1}, {0, 0}};
    for (auto [rg, rh] : cases) {
        auto G = std::make_shared<NerveGroup>(rg);
        auto H = std::make_shared<NerveGroup>(rh);
        UniversalBundle EG(G), EH(H);
        Product P(EG.total(), EH.total());
        for (int t = 0; t < 40; ++t) {
            int m = static_cast<int>(rng() % 4), n = static_cast<int>(rng() % 4);
            auto ao = random_e(EG, *G, m, rng);
            auto bo = random_e(EH, *H, n, rng);
            if (!ao || !bo)
                continue;
            auto a = *ao, b = *bo;
            Tensor ab(Z);
            ab.add({a, b}, 1);
            Chain lhs = shuffle(P, tensor_s(ab, &EG, &EH));
            Chain rhs = cone_product(P, EG, EH, shuffle(P, tensor_s(ab, nullptr, &EH) - tensor_s(ab, &EG, nullptr)));
            CHECK(lhs == rhs);

            int k = static_cast<int>(rng() % 4);
            auto eo = random_e(EG, *G, k, rng);
            auto fo = random_e(EH, *H, k, rng);
            if (!eo || !fo)
                continue;
            auto e = *eo, f = *fo;
            auto z = P.make(e, f);
            Chain zc(Z, z);
            Tensor aw = alexander_whitney(P, cone_product(P, EG, EH, zc));
            Tensor aw_rhs = tensor_s(alexander_whitney(P, zc), nullptr, &EH);
            Chain se = EG.cone(Chain(Z, e));
            for (const auto& [x, v] : se.terms())
                aw_rhs.add({x, EH.basepoint()}, v);
            CHECK(aw == aw_rhs);

            // ST S = (S ⊗ S) AW~ - (1 ⊗ S) ST, AW~ the Alexander-Whitney map with the factors commuted
            Product Q(EH.total(), EG.total());
            Tensor awt = twist(alexander_whitney(Q, swap_product(P, Q, zc)));
            Tensor st = steenrod(P, cone_product(P, EG, EH, zc));
            Tensor st_rhs = tensor_s(awt, &EG, &EH) - tensor_s(steenrod(P, zc), nullptr, &EH);
            CHECK(st == st_rhs);
        }
    }
}

TEST_CASE("universal bundle of a product group")
{
    auto G2 = std::make_shared<NerveGroup>(2, 2);
    auto G1 = std::make_shared<NerveGroup>(1, 2);
    UniversalBundle E2(G2), E1(G1);
    Product P(E1.total(), E1.total());
    for (int n = 0; n <= 2; ++n)
        CHECK(E2.total()->generators(n).size() == P.generators(n).size());
}
