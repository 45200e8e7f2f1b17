#include "doctest.h"

#include "eqt/torus.hpp"

using namespace eqt;

namespace {

Chain koszul_d_of_f(const Torus& T, const Multi& a, Mask pi)
{
    Chain want(T.ring());
    for (int i = 0; i < T.rank(); ++i) {
        Mask e = Mask(1) << i;
        if (a[static_cast<std::size_t>(i)] == 0 || (pi & e))
            continue;
        Multi b = a;
        --b[static_cast<std::size_t>(i)];
        want.add(T.f(b, pi | e), shuffle_sign(e, pi));
    }
    return want;
}

std::vector<std::pair<Multi, Mask>> k_basis(int r, int max_degree)
{
    std::vector<std::pair<Multi, Mask>> out;
    for (const Multi& a : multi_indices(r, max_degree / 2))
        for (Mask pi : subsets_of((Mask(1) << r) - 1))
            if (2 * total(a) + popcount(pi) <= max_degree)
                out.push_back({a, pi});
    return out;
}

}  // namespace

TEST_CASE("chosen cochains")
{
    Torus T(2);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 2; ++i) {
        CHECK(T.chi(i).pair(Chain(T.ring(), T.bundle().fibre_inclusion(T.loop(i)))) == 1);
        Cochain dchi = coboundary(T.ET(), T.chi(i), T.ring());
        Cochain pxi = T.pull(T.xi_prime(i));
        Cochain dxi = coboundary(T.BT(), T.xi_prime(i), T.ring());
        for (int k = 0; k < 50; ++k) {
            Simplex e = T.random_ET(2, rng, 2);
            CHECK(dchi(e) == pxi(e));
            CHECK(dxi(T.random_BT(3, rng, 2)) == 0);
        }
    }
}

TEST_CASE("f in low degrees")
{
    Torus T(1);
    CHECK(T.f({0}, 0) == Chain(T.ring(), T.e0()));
    CHECK(T.f({0}, 1) == Chain(T.ring(), T.bundle().fibre_inclusion(T.loop(0))));
    CHECK(T.pull(T.xi_prime(0)).pair(T.f({1}, 0)) == 1);
    Torus T2(2);
    CHECK(T2.pull(T2.xi_prime(1)).pair(T2.f({0, 1}, 0)) == 1);
    CHECK(T2.pull(T2.xi_prime(0)).pair(T2.f({0, 1}, 0)) == 0);
}

TEST_CASE("f is a chain map and right equivariant")
{
    for (int r = 1; r <= 2; ++r) {
        Torus T(r);
        for (auto& [a, pi] : k_basis(r, r == 1 ? 6 : 5)) {
            Chain c = T.f(a, pi);
            CHECK(boundary(T.ET(), c) == koszul_d_of_f(T, a, pi));
            for (int i = 0; i < r; ++i) {
                Mask e = Mask(1) << i;
                Chain lhs = T.right_mul(c, Chain(T.ring(), T.loop(i)));
                Chain want(T.ring());
                if (!(pi & e))
                    want = T.f(a, pi | e).scaled(shuffle_sign(pi, e));
                CHECK(lhs == want);
            }
        }
    }
}

TEST_CASE("twisting equation for the chosen xi")
{
    std::mt19937_64 rng(5);
    for (int r = 2; r <= 3; ++r) {
        Torus T(r);
        for (Mask pi : subsets_of((Mask(1) << r) - 1)) {
            if (popcount(pi) < 2)
                continue;
            Cochain lhs = coboundary(T.BT(), T.xi_prime(pi), T.ring());
            std::vector<std::pair<Scalar, Cochain>> terms;
            for (Mask mu : subsets_of(pi)) {
                Mask nu = pi & ~mu;
                if (!mu || !nu)
                    continue;
                int s = -(popcount(mu) % 2 ? -1 : 1) * shuffle_sign(nu, mu);
                terms.push_back({s, cup(T.BT(), T.xi_prime(mu), T.xi_prime(nu), T.ring())});
            }
            Cochain rhs = linear_combination(terms, T.ring());
            for (int k = 0; k < 60; ++k) {
                Simplex b = T.random_BT(popcount(pi) + 2, rng);
                CHECK(lhs(b) == rhs(b));
            }
        }
    }
}

namespace {

LambdaChain times_x(const LambdaChain& a, int i, const Ring& R)
{
    LambdaChain out;
    Mask e = Mask(1) << i;
    for (const auto& [k, v] : a)
        if (!(k.second & e))
            add_to(out, k.first, k.second | e, v * shuffle_sign(k.second, e), R);
    return out;
}

LambdaChain phi_of(const Torus& T, const SpaceOverBase& Y, const TwistedProduct& hY, const Chain& c)
{
    return phi(T, Y, hY, c);
}

Simplex random_pullback(const Torus& T, const TwistedProduct& hY, const std::function<Simplex(int)>& y, int n,
                        std::mt19937_64& rng)
{
    for (int t = 0; t < 200; ++t) {
        Simplex s = hY.make(y(n), T.random_T(n, rng));
        if (!s.degenerate())
            return s;
    }
    return hY.make(y(n), T.random_T(n, rng));
}

}  // namespace

TEST_CASE("zeta is a twisted cycle")
{
    std::mt19937_64 rng(17);
    for (int r = 1; r <= 3; ++r) {
        Torus T(r);
        Mask full = (Mask(1) << r) - 1;
        for (Mask pi : subsets_of(full)) {
            Cochain lhs = coboundary(T.ET(), T.zeta(pi), T.ring());
            std::vector<std::pair<Scalar, Cochain>> terms;
            for (Mask mu : subsets_of(pi)) {
                if (!mu)
                    continue;
                Mask nu = pi & ~mu;
                int s = -(popcount(mu) % 2 ? -1 : 1) * shuffle_sign(nu, mu);
                terms.push_back({s, cup(T.ET(), T.pull(T.xi_prime(mu)), T.zeta(nu), T.ring())});
            }
            Cochain rhs = linear_combination(terms, T.ring());
            for (int k = 0; k < 40; ++k) {
                Simplex e = T.random_ET(popcount(pi) + 1, rng);
                CHECK_MESSAGE(lhs(e) == rhs(e), "r=" << r << " pi=" << pi << " " << T.ET().describe(e));
            }
        }
    }
}

TEST_CASE("chi and zeta under the loop action")
{
    std::mt19937_64 rng(19);
    for (int r = 1; r <= 3; ++r) {
        Torus T(r);
        Mask full = (Mask(1) << r) - 1;
        for (Mask pi : subsets_of(full)) {
            if (!pi)
                continue;
            for (int k = 0; k < 20; ++k) {
                Simplex c = T.random_ET(popcount(pi) - 1, rng);
                for (int i = 0; i < r; ++i) {
                    Mask e = Mask(1) << i;
                    Chain cx = T.right_mul(Chain(T.ring(), c), Chain(T.ring(), T.loop(i)));
                    Scalar want = pi == e ? 1 : 0;
                    CHECK_MESSAGE(T.chi(pi).pair(cx) == want, "r=" << r << " pi=" << pi << " i=" << i);
                    Scalar zw = (pi & e) ? Scalar(shuffle_sign(pi & ~e, e)) * T.zeta(pi & ~e).pair(Chain(T.ring(), c)) : Scalar(0);
                    CHECK_MESSAGE(T.zeta(pi).pair(cx) == zw, "r=" << r << " pi=" << pi << " i=" << i);
                }
            }
        }
    }
}

TEST_CASE("Phi is an equivariant chain map")
{
    std::mt19937_64 rng(23);
    for (int r = 1; r <= 2; ++r) {
        Torus T(r);
        SpaceOverBase Y{T.BT_ptr(), T.BT_ptr(), [](const Simplex& b) { return b; }};
        auto hY = pullback(T, Y);
        for (int k = 0; k < 40; ++k) {
            int n = 1 + k % 4;
            Simplex s = random_pullback(T, *hY, [&](int m) { return T.random_BT(m, rng, 1, false); }, n, rng);
            Chain c(T.ring(), s);
            LambdaChain lhs = h_differential(T, Y, phi_of(T, Y, *hY, c));
            LambdaChain rhs = phi_of(T, Y, *hY, boundary(*hY, c));
            CHECK_MESSAGE(lhs == rhs, "r=" << r << " " << hY->describe(s));
            for (int i = 0; i < r; ++i) {
                LambdaChain a = phi_of(T, Y, *hY, right_mul_fibre(T, *hY, c, Chain(T.ring(), T.loop(i))));
                LambdaChain b = times_x(phi_of(T, Y, *hY, c), i, T.ring());
                CHECK_MESSAGE(a == b, "equivariance r=" << r << " i=" << i << " " << hY->describe(s));
            }
        }
    }
}

TEST_CASE("Psi is a chain map")
{
    std::mt19937_64 rng(29);
    for (int r = 1; r <= 2; ++r) {
        Torus T(r);
        std::vector<TSpace> spaces{point_tspace(), torus_tspace(T), cyclic_tspace(T, 2)};
        for (const TSpace& X : spaces) {
            auto B = borel(T, X);
            for (int k = 0; k < 12; ++k) {
                Multi a = multi_indices(r, 2)[static_cast<std::size_t>(k) % multi_indices(r, 2).size()];
                int n = k % 3;
                Chain c(T.ring(), X.sample(n, rng));
                Chain lhs = boundary(*B, psi(T, X, *B, a, c));
                Chain rhs = psi(T, X, *B, a, boundary(*X.X, c));
                for (int i = 0; i < r; ++i) {
                    if (a[static_cast<std::size_t>(i)] == 0)
                        continue;
                    Multi b = a;
                    --b[static_cast<std::size_t>(i)];
                    rhs.add(psi(T, X, *B, b, sweep(T, X, Mask(1) << i, c)));
                }
                CHECK_MESSAGE(lhs == rhs, "r=" << r << " X=" << X.name << " k=" << k);
            }
        }
    }
}

namespace {

long binom(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    long b = 1;
    for (long j = 1; j <= k; ++j)
        b = b * (n - k + j) / j;
    return b;
}

std::shared_ptr<FiniteSpace> sphere()
{
    std::vector<FiniteSpace::Gen> g{{"v", 0, {}}, {"s", 2, {}}};
    Simplex sv{{0}, 0, {0}};
    g[1].faces = {sv, sv, sv};
    return std::make_shared<FiniteSpace>(g, "S2");
}

}  // namespace

TEST_CASE("Cartan model of a point and of trivial spaces")
{
    for (int r = 1; r <= 3; ++r) {
        Torus T(r);
        CartanModel M = cartan_model(T, point_tspace(), 8);
        REQUIRE(M.d_squared_zero());
        CHECK(M.twist_vanishes);
        for (int n = 0; n <= 8; ++n) {
            auto h = M.cohomology(n);
            long want = n % 2 ? 0 : binom(n / 2 + r - 1, r - 1);
            CHECK_MESSAGE(h.free_rank == static_cast<std::size_t>(want), "r=" << r << " n=" << n);
            CHECK(h.torsion.empty());
        }
    }
    Torus T2(2);
    CartanModel S = cartan_model(T2, trivial_tspace(sphere()), 6);
    for (int n = 0; n <= 6; ++n) {
        long want = 0;
        for (int j : {0, 2})
            if (n >= j && (n - j) % 2 == 0)
                want += binom((n - j) / 2 + 1, 1);
        CHECK_MESSAGE(S.cohomology(n).free_rank == static_cast<std::size_t>(want), "n=" << n);
    }
}

TEST_CASE("Cartan model of a cyclic group space")
{
    Torus T(1);
    for (std::int64_t m : {2, 3}) {
        CartanModel M = cartan_model(T, cyclic_tspace(T, m), 4);
        REQUIRE(M.d_squared_zero());
        CHECK_FALSE(M.twist_vanishes);
        for (int n = 0; n <= 4; ++n) {
            auto h = M.cohomology(n);
            CHECK_MESSAGE(h.free_rank == (n % 2 ? 0u : 1u), "m=" << m << " n=" << n << " " << h.to_string());
            CHECK_MESSAGE(h.torsion.empty(), "m=" << m << " n=" << n << " " << h.to_string());
        }
    }
}

TEST_CASE("h-model of sphere bundles over the circle classifying space")
{
    Torus T(1);
    for (std::int64_t d : {0, 1, 2, 3}) {
        MappedSpace Y{sphere(), {Key{}, BarSpace::join({{}, {d}})}};
        REQUIRE(Y.validate(T).empty());
        HComplex H = h_model(T, Y.over(T), 4);
        REQUIRE(H.d_squared_zero());
        CHECK(H.check_axioms().empty());
        auto h0 = H.homology(0), h1 = H.homology(1), h2 = H.homology(2), h3 = H.homology(3);
        CHECK(h0.free_rank == 1);
        if (d == 0) {
            CHECK(h1.free_rank == 1);
            CHECK(h2.free_rank == 1);
        } else {
            CHECK(h1.free_rank == 0);
            CHECK(h1.torsion == (d == 1 ? std::vector<Scalar>{} : std::vector<Scalar>{Scalar(d)}));
            CHECK(h2.free_rank == 0);
            CHECK(h2.torsion.empty());
        }
        CHECK(h3.free_rank == 1);
    }
}

namespace {

Tensor aw_diagonal(const SimplicialSet& X, const Chain& c)
{
    Tensor out(c.ring());
    for (const auto& [s, v] : c.terms()) {
        int n = s.dim();
        for (int i = 0; i <= n; ++i)
            out.add({X.faces(s, i + 1, n), X.faces(s, 0, i - 1)}, v);
    }
    Tensor clean(c.ring());
    for (const auto& [k, v] : out.terms())
        if (!k[0].degenerate() && !k[1].degenerate())
            clean.add(k, v);
    return clean;
}

bool simplicial_on(const SimplicialSet& A, const SimplicialSet& B, const std::function<Simplex(const Simplex&)>& F,
                   const Simplex& s)
{
    int n = s.dim();
    for (int i = 0; i <= n && n > 0; ++i)
        if (!(F(A.face(s, i)) == B.face(F(s), i)))
            return false;
    for (int i = 0; i <= n; ++i)
        if (!(F(A.degeneracy(s, i)) == B.degeneracy(F(s), i)))
            return false;
    return true;
}

}  // namespace

TEST_CASE("f is a coalgebra map and a strict comodule map")
{
    for (int r = 1; r <= 2; ++r) {
        Torus T(r);
        SpaceOverBase E = T.ET_over_BT();
        for (auto& [a, pi] : k_basis(r, r == 1 ? 6 : 5)) {
            Chain c = T.f(a, pi);
            Tensor want(T.ring());
            for (const Multi& b : multi_indices(r, total(a))) {
                bool le = true;
                for (int i = 0; i < r; ++i)
                    le = le && b[static_cast<std::size_t>(i)] <= a[static_cast<std::size_t>(i)];
                if (!le)
                    continue;
                Multi rest = a;
                for (int i = 0; i < r; ++i)
                    rest[static_cast<std::size_t>(i)] -= b[static_cast<std::size_t>(i)];
                for (Mask mu : subsets_of(pi))
                    want.add(tensor(T.f(b, mu), T.f(rest, pi & ~mu)), shuffle_sign(mu, pi & ~mu));
            }
            CHECK_MESSAGE(aw_diagonal(T.ET(), c) == want, "r=" << r << " " << monomial_name(a) << " " << wedge_name(pi));
            for (Mask mu : subsets_of((Mask(1) << r) - 1)) {
                if (!mu)
                    continue;
                Chain lhs = cap(E, T.xi_prime(mu), c);
                Chain rhs(T.ring());
                if (popcount(mu) == 1) {
                    int i = elements(mu)[0];
                    if (a[static_cast<std::size_t>(i)] > 0) {
                        Multi b = a;
                        --b[static_cast<std::size_t>(i)];
                        rhs = T.f(b, pi);
                    }
                }
                CHECK_MESSAGE(lhs == rhs, "r=" << r << " mu=" << mu << " " << monomial_name(a) << " " << wedge_name(pi));
            }
        }
    }
}

TEST_CASE("Psi on a point detects the chosen classes and kills cup1 products")
{
    for (int r = 1; r <= 2; ++r) {
        Torus T(r);
        for (int i = 0; i < r; ++i) {
            Multi e(static_cast<std::size_t>(r), 0);
            e[static_cast<std::size_t>(i)] = 1;
            CHECK(psi_pt_star(T, T.xi_prime(i), 3) == std::map<Multi, Scalar>{{e, 1}});
        }
        Product BB(T.BT_ptr(), T.BT_ptr());
        for (auto& [a, pi] : k_basis(r, 6)) {
            Chain pf = map_chain(T.f(a, pi), [&](const Simplex& e) { return T.project(e); });
            Chain diag = map_chain(pf, [&](const Simplex& b) { return BB.make(b, b); });
            CHECK(steenrod(BB, diag).is_zero());
        }
    }
}

TEST_CASE("Phi on the fibre over the base point")
{
    for (int r = 1; r <= 2; ++r) {
        Torus T(r);
        auto pt = std::make_shared<FiniteSpace>(std::vector<FiniteSpace::Gen>{{"pt", 0, {}}}, "pt");
        MappedSpace P{pt, {Key{}}};
        SpaceOverBase Y = P.over(T);
        auto hY = pullback(T, Y);
        Simplex v = pt->gen(0);
        auto lift = [&](const Simplex& g) {
            Simplex y = v;
            while (y.dim() < g.dim())
                y = pt->degeneracy(y, 0);
            return hY->make(y, g);
        };
        Ring R = T.ring();
        CHECK(phi(T, Y, *hY, Chain(R, lift(T.random_T(0, *new std::mt19937_64(1))))) == LambdaChain{{{v, 0}, 1}});
        for (int i = 0; i < r; ++i)
            CHECK(phi(T, Y, *hY, Chain(R, lift(T.loop(i)))) == LambdaChain{{{v, Mask(1) << i}, 1}});
        std::mt19937_64 rng(31);
        Product TT(T.T_ptr(), T.T_ptr());
        for (int k = 0; k < 30; ++k) {
            int m = k % 3, n = (k / 3) % 3;
            Chain a(R, T.random_T(m, rng)), b(R, T.random_T(n, rng));
            Chain ab = T.pontryagin(a, b);
            auto lifted = [&](const Chain& c) { return map_chain(c, lift); };
            LambdaChain pa = phi(T, Y, *hY, lifted(a)), pb = phi(T, Y, *hY, lifted(b));
            LambdaChain prod;
            for (auto& [ka, va] : pa)
                for (auto& [kb, vb] : pb)
                    if (!(ka.second & kb.second))
                        add_to(prod, v, ka.second | kb.second, va * vb * shuffle_sign(ka.second, kb.second), R);
            CHECK(phi(T, Y, *hY, lifted(ab)) == prod);
        }
    }
}

TEST_CASE("naturality under coordinate maps of tori")
{
    Torus A(2), B(1);
    TorusMap proj{2, 1, {0}};
    for (auto& [a, pi] : k_basis(2, 5)) {
        Chain lhs = map_chain(A.f(a, pi), [&](const Simplex& e) { return proj.on_ET(A, B, e); });
        auto [b, cb] = proj.on_S(a);
        auto [m, cm] = proj.on_Lambda(pi);
        Chain rhs = cb * cm == 0 ? Chain(B.ring()) : B.f(b, m).scaled(cb * cm);
        CHECK_MESSAGE(lhs == rhs, monomial_name(a) << " " << wedge_name(pi));
    }
    TorusMap incl{1, 2, {-1, 0}};
    std::mt19937_64 rng(37);
    SpaceOverBase Ysrc{B.BT_ptr(), B.BT_ptr(), [](const Simplex& b) { return b; }};
    SpaceOverBase Ydst{B.BT_ptr(), A.BT_ptr(), [&](const Simplex& b) { return incl.on_BT(B, A, b); }};
    auto hs = pullback(B, Ysrc);
    auto hd = pullback(A, Ydst);
    for (int k = 0; k < 30; ++k) {
        int n = 1 + k % 3;
        Simplex s = hs->make(B.random_BT(n, rng, 1, false), B.random_T(n, rng));
        if (s.degenerate())
            continue;
        auto [y, g] = hs->components(s);
        Chain img(A.ring(), hd->make(y, incl.on_T(B, A, g)));
        LambdaChain lhs = phi(A, Ydst, *hd, img);
        LambdaChain rhs;
        for (auto& [key, v] : phi(B, Ysrc, *hs, Chain(B.ring(), s))) {
            auto [m, c] = incl.on_Lambda(key.second);
            if (c)
                add_to(rhs, key.first, m, v * c, A.ring());
        }
        CHECK_MESSAGE(lhs == rhs, hs->describe(s));
    }
}

TEST_CASE("adjunction maps are simplicial and compose to identities")
{
    std::mt19937_64 rng(41);
    Torus T(2);
    for (const TSpace& X : {torus_tspace(T), cyclic_tspace(T, 2)}) {
        auto tX = borel(T, X);
        auto htX = pullback(T, borel_over_BT(T, tX));
        for (int k = 0; k < 20; ++k) {
            int n = k % 4;
            Simplex s = htX->make(tX->make(T.random_BT(n, rng, 1, false), X.sample(n, rng)), T.random_T(n, rng));
            CHECK(simplicial_on(*htX, *X.X, [&](const Simplex& z) { return adjunction_P(T, X, *htX, z); }, s));
            // t(P_X) I_{tX} = 1
            Simplex bx = tX->make(T.random_BT(n, rng, 1, false), X.sample(n, rng));
            auto ttX = borel(T, pullback_tspace(T, htX));
            Simplex w = adjunction_I(T, borel_over_BT(T, tX), *htX, *ttX, bx);
            auto [b, z] = ttX->components(w);
            CHECK(tX->make(b, adjunction_P(T, X, *htX, z)) == bx);
        }
    }
    SpaceOverBase Y{T.BT_ptr(), T.BT_ptr(), [](const Simplex& b) { return b; }};
    auto hY = pullback(T, Y);
    TSpace hYs = pullback_tspace(T, hY);
    auto thY = borel(T, hYs);
    auto hthY = pullback(T, borel_over_BT(T, thY));
    for (int k = 0; k < 20; ++k) {
        int n = k % 4;
        Simplex y = T.random_BT(n, rng, 1, false);
        CHECK(simplicial_on(*Y.total, *thY, [&](const Simplex& z) { return adjunction_I(T, Y, *hY, *thY, z); }, y));
        CHECK(adjunction_J(*hY, *thY, adjunction_I(T, Y, *hY, *thY, y)) == y);
        Simplex s = thY->make(T.random_BT(n, rng, 1, false), hY->make(y, T.random_T(n, rng)));
        CHECK(simplicial_on(*thY, *Y.total, [&](const Simplex& z) { return adjunction_J(*hY, *thY, z); }, s));
        // P_{hY} h(I_Y) = 1
        Simplex g = T.random_T(n, rng);
        Simplex hy = hY->make(y, g);
        Simplex lifted = hthY->make(adjunction_I(T, Y, *hY, *thY, y), g);
        CHECK(adjunction_P(T, hYs, *hthY, lifted) == hy);
        CHECK(simplicial_on(*hthY, *hY, [&](const Simplex& z) { return adjunction_P(T, hYs, *hthY, z); }, lifted));
    }
}

TEST_CASE("Psi is a coalgebra map and a strict comodule map")
{
    std::mt19937_64 rng(43);
    for (int r = 1; r <= 2; ++r) {
        Torus T(r);
        for (const TSpace& X : {torus_tspace(T), cyclic_tspace(T, 2)}) {
            auto B = borel(T, X);
            SpaceOverBase BY = borel_over_BT(T, B);
            for (int k = 0; k < 10; ++k) {
                auto idx = multi_indices(r, 2);
                Multi a = idx[static_cast<std::size_t>(k) % idx.size()];
                int n = k % 3;
                Chain c(T.ring(), X.sample(n, rng));
                Chain p = psi(T, X, *B, a, c);
                Tensor want(T.ring());
                Tensor awc = aw_diagonal(*X.X, c);
                for (const Multi& b : multi_indices(r, total(a))) {
                    Multi rest = a;
                    bool ok = true;
                    for (int i = 0; i < r; ++i) {
                        rest[static_cast<std::size_t>(i)] -= b[static_cast<std::size_t>(i)];
                        ok = ok && rest[static_cast<std::size_t>(i)] >= 0;
                    }
                    if (!ok)
                        continue;
                    for (const auto& [kk, v] : awc.terms())
                        want.add(tensor(psi(T, X, *B, b, Chain(T.ring(), kk[0])), psi(T, X, *B, rest, Chain(T.ring(), kk[1]))), v);
                }
                CHECK_MESSAGE(aw_diagonal(*B, p) == want, X.name << " k=" << k);
                for (Mask mu : subsets_of((Mask(1) << r) - 1)) {
                    if (!mu)
                        continue;
                    Chain lhs = cap(BY, T.xi_prime(mu), p);
                    Chain rhs(T.ring());
                    if (popcount(mu) == 1) {
                        int i = elements(mu)[0];
                        if (a[static_cast<std::size_t>(i)] > 0) {
                            Multi b = a;
                            --b[static_cast<std::size_t>(i)];
                            rhs = psi(T, X, *B, b, c);
                        }
                    }
                    CHECK_MESSAGE(lhs == rhs, X.name << " mu=" << mu << " k=" << k);
                }
            }
        }
    }
}
