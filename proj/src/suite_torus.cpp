#include "suite_util.hpp"

namespace eqt {

using namespace suite;

namespace {

int parity(long k)
{
    return k % 2 ? -1 : 1;
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

std::string k_name(const Multi& a, Mask pi)
{
    return monomial_name(a) + "(x)" + wedge_name(pi);
}

Multi lowered(const Multi& a, int i)
{
    Multi b = a;
    --b[static_cast<std::size_t>(i)];
    return b;
}

Chain koszul_d_of_f(const Torus& T, const Multi& a, Mask pi)
{
    Chain want(T.ring());
    for (int i = 0; i < T.rank(); ++i) {
        Mask e = Mask(1) << i;
        if (a[static_cast<std::size_t>(i)] == 0 || (pi & e))
            continue;
        want.add(T.f(lowered(a, i), pi | e), shuffle_sign(e, pi));
    }
    return want;
}

// S-coproduct x^a -> Σ x^b ⊗ x^{a-b}
std::vector<std::pair<Multi, Multi>> splittings(const Multi& a)
{
    std::vector<std::pair<Multi, Multi>> out;
    for (const Multi& b : multi_indices(static_cast<int>(a.size()), total(a))) {
        Multi rest = a;
        bool ok = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
            rest[i] -= b[i];
            ok = ok && rest[i] >= 0;
        }
        if (ok)
            out.push_back({b, rest});
    }
    return out;
}

// every nondegenerate BT simplex of degree n with entries in {0, 1}
template <class F>
void for_each_binary_BT(const Torus& T, int n, F&& visit)
{
    std::size_t len = static_cast<std::size_t>(T.rank() * n * (n - 1) / 2);
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << len); ++bits) {
        std::vector<Key> parts;
        std::size_t at = 0;
        for (int k = 0; k < n; ++k) {
            Key g(static_cast<std::size_t>(T.rank() * k));
            for (auto& v : g)
                v = static_cast<std::int64_t>((bits >> at++) & 1);
            parts.push_back(g);
        }
        Simplex b = T.BT().normalize(BarSpace::join(parts), n);
        if (!b.degenerate())
            visit(b);
    }
}

Cochain twisting_rhs(const Torus& T, Mask pi)
{
    std::vector<std::pair<Scalar, Cochain>> terms;
    for (Mask mu : subsets_of(pi)) {
        Mask nu = pi & ~mu;
        if (!mu || !nu)
            continue;
        terms.push_back({-parity(popcount(mu)) * shuffle_sign(nu, mu), cup(T.BT(), T.xi_prime(mu), T.xi_prime(nu), T.ring())});
    }
    return linear_combination(terms, T.ring());
}

LambdaChain times_x(const LambdaChain& a, int i, const Ring& R)
{
    LambdaChain out;
    Mask e = Mask(1) << i;
    for (const auto& [k, v] : a)
        if (!(k.second & e))
            add_to(out, k.first, k.second | e, v * shuffle_sign(k.second, e), R);
    return out;
}

std::string show_lambda(const LambdaChain& a, const SimplicialSet& Y)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : a) {
        os << (first ? "" : " + ") << v << "*" << Y.describe(k.first) << "(x)" << wedge_name(k.second);
        first = false;
    }
    return first ? "0" : os.str();
}

long binom(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    long b = 1;
    for (long j = 1; j <= k; ++j)
        b = b * (n - k + j) / j;
    return b;
}

std::shared_ptr<FiniteSpace> two_points()
{
    return std::make_shared<FiniteSpace>(std::vector<FiniteSpace::Gen>{{"a", 0, {}}, {"b", 0, {}}}, "2pt");
}

void twisting_suite(SuiteReport& rep, const SuiteOptions& o, std::mt19937_64& rng)
{
    Check ck("twisting cochain equation for the chosen xi", 5);
    for (int r = 2; r <= 3; ++r) {
        Torus T(r);
        for (Mask pi : subsets_of((Mask(1) << r) - 1)) {
            if (popcount(pi) < 2)
                continue;
            Cochain lhs = coboundary(T.BT(), T.xi_prime(pi), T.ring());
            Cochain rhs = twisting_rhs(T, pi);
            int n = popcount(pi) + 2;
            auto visit = [&](const Simplex& b) {
                ck.expect(lhs(b) == rhs(b), [&] {
                    return "pi = " + wedge_name(pi) + " on " + T.BT().describe(b);
                });
            };
            if (T.rank() * n * (n - 1) / 2 <= 18) {
                for_each_binary_BT(T, n, visit);
            } else {
                for (int k = 0; k < 300 * o.samples; ++k)
                    visit(T.random_BT(n, rng, 2));
            }
        }
    }
    rep.checks.push_back(ck.result());
}

void f_suite(SuiteReport& rep, const SuiteOptions& o, std::mt19937_64& rng)
{
    Check chain("f is a chain map", 6), equi("f is right equivariant", 6), coal("f is a coalgebra map", 6),
        comod("f is a strict comodule map", 6), unit("<p*xi'_i, f(x_i (x) 1)> = 1", 6);
    int top = std::min(o.max_degree, 6);
    for (int r = 1; r <= std::min(o.r, 2); ++r) {
        Torus T(r);
        SpaceOverBase E = T.ET_over_BT();
        Mask full = (Mask(1) << r) - 1;
        for (int i = 0; i < r; ++i) {
            Multi e(static_cast<std::size_t>(r), 0);
            e[static_cast<std::size_t>(i)] = 1;
            for (int j = 0; j < r; ++j) {
                Scalar v = T.pull(T.xi_prime(j)).pair(T.f(e, 0));
                unit.expect(v == (i == j ? 1 : 0), [&] { return "i = " + std::to_string(i) + ", j = " + std::to_string(j); });
            }
        }
        for (auto& [a, pi] : k_basis(r, r == 1 ? top : top - 1)) {
            Chain c = T.f(a, pi);
            chain.expect(boundary(T.ET(), c) == koszul_d_of_f(T, a, pi), [&] { return k_name(a, pi); });
            for (int i = 0; i < r; ++i) {
                Mask e = Mask(1) << i;
                Chain want(T.ring());
                if (!(pi & e))
                    want = T.f(a, pi | e).scaled(shuffle_sign(pi, e));
                equi.expect(T.right_mul(c, Chain(T.ring(), T.loop(i))) == want,
                            [&] { return k_name(a, pi) + " times x" + std::to_string(i + 1); });
            }
            Tensor want(T.ring());
            for (auto& [b, rest] : splittings(a))
                for (Mask mu : subsets_of(pi))
                    want.add(tensor(T.f(b, mu), T.f(rest, pi & ~mu)), shuffle_sign(mu, pi & ~mu));
            coal.expect(aw_diagonal(T.ET(), c) == want, [&] { return k_name(a, pi); });
            for (Mask mu : subsets_of(full)) {
                if (!mu)
                    continue;
                Chain rhs(T.ring());
                if (popcount(mu) == 1) {
                    int i = elements(mu)[0];
                    if (a[static_cast<std::size_t>(i)] > 0)
                        rhs = T.f(lowered(a, i), pi);
                }
                comod.expect(cap(E, T.xi_prime(mu), c) == rhs,
                             [&] { return "xi'_" + wedge_name(mu) + " cap f(" + k_name(a, pi) + ")"; });
            }
        }
    }
    (void)rng;
    for (auto* c : {&chain, &equi, &coal, &comod, &unit})
        rep.checks.push_back(c->result());
}

void psi_suite(SuiteReport& rep, const SuiteOptions& o, std::mt19937_64& rng)
{
    Check chain("Psi is a chain map", 6), coal("Psi is a coalgebra map", 6), comod("Psi is a strict comodule map", 6),
        nat("Psi and f are natural for coordinate projections", 6), adj("adjunction maps", 6),
        qmap("q is simplicial", 6);
    for (int r = 1; r <= std::min(o.r, 2); ++r) {
        Torus T(r);
        std::vector<TSpace> spaces{point_tspace(), torus_tspace(T), cyclic_tspace(T, 2), trivial_tspace(circle1())};
        auto idx = multi_indices(r, 2);
        for (const TSpace& X : spaces) {
            auto B = borel(T, X);
            SpaceOverBase BY = borel_over_BT(T, B);
            Product EX(T.ET_ptr(), X.X);
            for (int k = 0; k < 12 * o.samples; ++k) {
                const Multi& a = idx[static_cast<std::size_t>(k) % idx.size()];
                int n = k % 3;
                Simplex x = X.sample(n, rng);
                Chain c(T.ring(), x);
                auto where = [&] { return X.name + ": " + monomial_name(a) + "(x)" + X.X->describe(x); };
                Chain p = psi(T, X, *B, a, c);
                Chain rhs = psi(T, X, *B, a, boundary(*X.X, c));
                for (int i = 0; i < r; ++i)
                    if (a[static_cast<std::size_t>(i)] > 0)
                        rhs.add(psi(T, X, *B, lowered(a, i), sweep(T, X, Mask(1) << i, c)));
                chain.expect(boundary(*B, p) == rhs, where);
                Tensor want(T.ring());
                Tensor awc = aw_diagonal(*X.X, c);
                for (auto& [b, rest] : splittings(a))
                    for (const auto& [kk, v] : awc.terms())
                        want.add(tensor(psi(T, X, *B, b, Chain(T.ring(), kk[0])), psi(T, X, *B, rest, Chain(T.ring(), kk[1]))), v);
                coal.expect(aw_diagonal(*B, p) == want, where);
                for (Mask mu : subsets_of((Mask(1) << r) - 1)) {
                    if (!mu)
                        continue;
                    Chain want_cap(T.ring());
                    if (popcount(mu) == 1) {
                        int i = elements(mu)[0];
                        if (a[static_cast<std::size_t>(i)] > 0)
                            want_cap = psi(T, X, *B, lowered(a, i), c);
                    }
                    comod.expect(cap(BY, T.xi_prime(mu), p) == want_cap, where);
                }
                Simplex ex = EX.make(T.random_ET(n + 1, rng, 1, false), X.sample(n + 1, rng));
                qmap.expect(simplicial_on(EX, *B, [&](const Simplex& s) { return q_map(T, X, *B, s); }, ex),
                            [&] { return X.name + ": " + EX.describe(ex); });
            }
            if (X.name == "pt" || X.trivial)
                continue;
            auto htX = pullback(T, BY);
            auto thtX = borel(T, pullback_tspace(T, htX));
            for (int k = 0; k < 10 * o.samples; ++k) {
                int n = k % 4;
                Simplex s = htX->make(B->make(T.random_BT(n, rng, 1, false), X.sample(n, rng)), T.random_T(n, rng));
                adj.expect(simplicial_on(*htX, *X.X, [&](const Simplex& z) { return adjunction_P(T, X, *htX, z); }, s),
                           [&] { return "P not simplicial at " + htX->describe(s); });
                Simplex bx = B->make(T.random_BT(n, rng, 1, false), X.sample(n, rng));
                auto [b, z] = thtX->components(adjunction_I(T, BY, *htX, *thtX, bx));
                adj.expect(B->make(b, adjunction_P(T, X, *htX, z)) == bx,
                           [&] { return "t(P) I != 1 at " + B->describe(bx); });
            }
        }
    }
    Torus A(2), Bt(1);
    TorusMap proj{2, 1, {0}};
    for (auto& [a, pi] : k_basis(2, 5)) {
        Chain lhs = map_chain(A.f(a, pi), [&](const Simplex& e) { return proj.on_ET(A, Bt, e); });
        auto [b, cb] = proj.on_S(a);
        auto [m, cm] = proj.on_Lambda(pi);
        Chain rhs = cb * cm == 0 ? Chain(Bt.ring()) : Bt.f(b, m).scaled(cb * cm);
        nat.expect(lhs == rhs, [&] { return k_name(a, pi); });
        if (pi)
            continue;
        Chain pl = map_chain(lhs, [&](const Simplex& e) { return Bt.project(e); });
        Chain pr = map_chain(rhs, [&](const Simplex& e) { return Bt.project(e); });
        nat.expect(pl == pr, [&] { return "Psi_pt at " + monomial_name(a); });
    }
    for (auto* c : {&chain, &coal, &comod, &qmap, &nat, &adj})
        rep.checks.push_back(c->result());
}

void phi_suite(SuiteReport& rep, const SuiteOptions& o, std::mt19937_64& rng)
{
    Check cyc("zeta satisfies the twisted cycle relation", 7), xc("x_i . chi_pi = 1 iff pi = {i}", 7),
        xz("h-hat is Lambda-equivariant", 7), chain("Phi is a chain map", 7), equi("Phi is Lambda-equivariant", 7),
        pt("Phi on the fibre over the base point", 7), nat("Phi is natural for coordinate inclusions", 7),
        adj("adjunction maps on spaces over BT", 7);
    for (int r = 1; r <= std::min(o.r, 2); ++r) {
        Torus T(r);
        Ring R = T.ring();
        Mask full = (Mask(1) << r) - 1;
        for (Mask pi : subsets_of(full)) {
            Cochain lhs = coboundary(T.ET(), T.zeta(pi), R);
            std::vector<std::pair<Scalar, Cochain>> terms;
            for (Mask mu : subsets_of(pi)) {
                if (!mu)
                    continue;
                Mask nu = pi & ~mu;
                terms.push_back({-parity(popcount(mu)) * shuffle_sign(nu, mu), cup(T.ET(), T.pull(T.xi_prime(mu)), T.zeta(nu), R)});
            }
            Cochain rhs = linear_combination(terms, R);
            for (int k = 0; k < 60 * o.samples; ++k) {
                int n = popcount(pi) + 1;
                Simplex e = T.random_ET(n, rng);
                cyc.expect(lhs(e) == rhs(e), [&] { return "pi = " + wedge_name(pi) + " on " + T.ET().describe(e); });
            }
        }
        for (int k = 0; k < 100 * o.samples; ++k) {
            int n = k % 6;
            Simplex c = T.random_ET(n, rng);
            Chain cc(R, c);
            for (int i = 0; i < r; ++i) {
                Mask e = Mask(1) << i;
                Chain cx = T.right_mul(cc, Chain(R, T.loop(i)));
                for (Mask pi : subsets_of(full)) {
                    if (popcount(pi) != n + 1)
                        continue;
                    xc.expect(T.chi(pi).pair(cx) == (pi == e ? 1 : 0),
                              [&] { return "i = " + std::to_string(i + 1) + ", pi = " + wedge_name(pi) + " on " + T.ET().describe(c); });
                    Scalar zw = (pi & e) ? Scalar(shuffle_sign(pi & ~e, e)) * T.zeta(pi & ~e).pair(cc) : Scalar(0);
                    xz.expect(T.zeta(pi).pair(cx) == zw,
                              [&] { return "i = " + std::to_string(i + 1) + ", pi = " + wedge_name(pi) + " on " + T.ET().describe(c); });
                }
            }
        }
        SpaceOverBase Y{T.BT_ptr(), T.BT_ptr(), [](const Simplex& b) { return b; }};
        auto hY = pullback(T, Y);
        for (int k = 0; k < 40 * o.samples; ++k) {
            int n = 1 + k % 4;
            Simplex s = hY->make(T.random_BT(n, rng, 1, false), T.random_T(n, rng));
            if (s.degenerate())
                continue;
            Chain c(R, s);
            LambdaChain lhs = h_differential(T, Y, phi(T, Y, *hY, c));
            LambdaChain rhs = phi(T, Y, *hY, boundary(*hY, c));
            chain.expect(lhs == rhs, [&] { return hY->describe(s) + ": " + show_lambda(lhs, *Y.total) + " vs " + show_lambda(rhs, *Y.total); });
            for (int i = 0; i < r; ++i)
                equi.expect(phi(T, Y, *hY, right_mul_fibre(T, *hY, c, Chain(R, T.loop(i)))) == times_x(phi(T, Y, *hY, c), i, R),
                            [&] { return hY->describe(s) + " times x" + std::to_string(i + 1); });
            Simplex y = T.random_BT(n, rng, 1, false);
            TSpace hYs = pullback_tspace(T, hY);
            auto thY = borel(T, hYs);
            adj.expect(simplicial_on(*Y.total, *thY, [&](const Simplex& z) { return adjunction_I(T, Y, *hY, *thY, z); }, y),
                       [&] { return "I not simplicial at " + Y.total->describe(y); });
            adj.expect(adjunction_J(*hY, *thY, adjunction_I(T, Y, *hY, *thY, y)) == y, [&] { return "J I != 1"; });
        }
        auto pts = std::make_shared<FiniteSpace>(std::vector<FiniteSpace::Gen>{{"pt", 0, {}}}, "pt");
        MappedSpace P{pts, {Key{}}};
        SpaceOverBase Yp = P.over(T);
        auto hp = pullback(T, Yp);
        Simplex v = pts->gen(0);
        auto lift = [&](const Simplex& g) {
            Simplex y = v;
            while (y.dim() < g.dim())
                y = pts->degeneracy(y, 0);
            return hp->make(y, g);
        };
        pt.expect(phi(T, Yp, *hp, Chain(R, lift(T.T().normalize(T.T().one(0), 0)))) == LambdaChain{{{v, 0}, 1}},
                  [] { return "Phi(1) != 1"; });
        for (int i = 0; i < r; ++i)
            pt.expect(phi(T, Yp, *hp, Chain(R, lift(T.loop(i)))) == LambdaChain{{{v, Mask(1) << i}, 1}},
                      [&] { return "Phi(x'_" + std::to_string(i + 1) + ") != x_" + std::to_string(i + 1); });
        for (int k = 0; k < 20 * o.samples; ++k) {
            Chain a(R, T.random_T(k % 3, rng)), b(R, T.random_T((k / 3) % 3, rng));
            auto lifted = [&](const Chain& c) { return map_chain(c, lift); };
            LambdaChain pa = phi(T, Yp, *hp, lifted(a)), pb = phi(T, Yp, *hp, lifted(b)), prod;
            for (auto& [ka, va] : pa)
                for (auto& [kb, vb] : pb)
                    if (!(ka.second & kb.second))
                        add_to(prod, v, ka.second | kb.second, va * vb * shuffle_sign(ka.second, kb.second), R);
            pt.expect(phi(T, Yp, *hp, lifted(T.pontryagin(a, b))) == prod,
                      [&] { return "Pontryagin product " + a.to_string(T.T()) + " * " + b.to_string(T.T()); });
        }
    }
    Torus A(2), B(1);
    TorusMap incl{1, 2, {-1, 0}};
    SpaceOverBase Ysrc{B.BT_ptr(), B.BT_ptr(), [](const Simplex& b) { return b; }};
    SpaceOverBase Ydst{B.BT_ptr(), A.BT_ptr(), [&](const Simplex& b) { return incl.on_BT(B, A, b); }};
    auto hs = pullback(B, Ysrc);
    auto hd = pullback(A, Ydst);
    for (int k = 0; k < 30 * o.samples; ++k) {
        int n = 1 + k % 3;
        Simplex s = hs->make(B.random_BT(n, rng, 1, false), B.random_T(n, rng));
        if (s.degenerate())
            continue;
        auto [y, g] = hs->components(s);
        LambdaChain lhs = phi(A, Ydst, *hd, Chain(A.ring(), hd->make(y, incl.on_T(B, A, g))));
        LambdaChain rhs;
        for (auto& [key, v] : phi(B, Ysrc, *hs, Chain(B.ring(), s))) {
            auto [m, c] = incl.on_Lambda(key.second);
            if (c)
                add_to(rhs, key.first, m, v * c, A.ring());
        }
        nat.expect(lhs == rhs, [&] { return hs->describe(s); });
    }
    for (auto* c : {&cyc, &xc, &xz, &chain, &equi, &pt, &nat, &adj})
        rep.checks.push_back(c->result());
}

void cartan_suite(SuiteReport& rep, const SuiteOptions& o)
{
    Check pt("Cartan model of a point is the polynomial ring", 8), triv("trivial actions give the untwisted answer", 8),
        cyc("Cartan model of B(Z/m) with the reduction action", 8);
    int top = std::max(o.max_degree, 8);
    for (int r = 1; r <= 3; ++r) {
        Torus T(r);
        CartanModel M = cartan_model(T, point_tspace(), top);
        pt.expect(M.d_squared_zero(), [] { return "d^2 != 0"; });
        for (int n = 0; n <= top; ++n) {
            HomologyPresentation h = M.cohomology(n);
            std::size_t want = n % 2 ? 0 : static_cast<std::size_t>(binom(n / 2 + r - 1, r - 1));
            pt.expect(h.free_rank == want && h.torsion.empty(),
                      [&] { return "r = " + std::to_string(r) + ", H^" + std::to_string(n) + " = " + h.to_string(); });
        }
    }
    struct Case {
        std::shared_ptr<FiniteSpace> X;
        int r;
        std::vector<int> cells;  // degrees of the homology basis of X
    };
    for (const Case& c : {Case{two_points(), 1, {0, 0}}, Case{sphere2(), 2, {0, 2}}, Case{circle1(), 2, {0, 1}}}) {
        Torus T(c.r);
        CartanModel M = cartan_model(T, trivial_tspace(c.X), 6);
        triv.expect(M.twist_vanishes, [&] { return c.X->name() + ": twist term is nonzero"; });
        for (int n = 0; n <= 6; ++n) {
            long want = 0;
            for (int j : c.cells)
                if (n >= j && (n - j) % 2 == 0)
                    want += binom((n - j) / 2 + c.r - 1, c.r - 1);
            HomologyPresentation h = M.cohomology(n);
            triv.expect(h.free_rank == static_cast<std::size_t>(want) && h.torsion.empty(),
                        [&] { return c.X->name() + ": H^" + std::to_string(n) + " = " + h.to_string(); });
        }
    }
    Torus T(1);
    for (std::int64_t m : {2, 3}) {
        CartanModel M = cartan_model(T, cyclic_tspace(T, m), 4);
        cyc.expect(!M.twist_vanishes, [] { return "twist term vanishes"; });
        for (int n = 0; n <= 4; ++n) {
            HomologyPresentation h = M.cohomology(n);
            cyc.expect(h.free_rank == (n % 2 ? 0u : 1u) && h.torsion.empty(),
                       [&] { return "m = " + std::to_string(m) + ": H^" + std::to_string(n) + " = " + h.to_string(); });
        }
    }
    for (auto* c : {&pt, &triv, &cyc})
        rep.checks.push_back(c->result());
}

// H of the 4-term complex v, v x, s, s x with d(s) = d v x
HomologyPresentation lens_oracle(int n, std::int64_t d)
{
    Matrix d21(1, 1);
    if (d != 0)
        d21.set(0, 0, d);
    Matrix zero1(1, 1);
    Matrix empty_in(1, 0), empty_out(0, 1);
    Ring Z = Ring::integers();
    switch (n) {
        case 0: return homology_of_pair(zero1, empty_out, Z);
        case 1: return homology_of_pair(d21, zero1, Z);
        case 2: return homology_of_pair(zero1, d21, Z);
        case 3: return homology_of_pair(empty_in, zero1, Z);
        default: return {};
    }
}

void h_model_suite(SuiteReport& rep)
{
    Check ck("h-model of sphere bundles matches the lens space complex", 9),
        axioms("h-model is a Lambda-module", 9);
    Torus T(1);
    for (std::int64_t d : {0, 1, 2, 3, 5}) {
        MappedSpace Y{sphere2(), {Key{}, BarSpace::join({{}, {d}})}};
        std::string w = Y.validate(T);
        ck.expect(w.empty(), [&] { return w; });
        HComplex H = h_model(T, Y.over(T), 4);
        axioms.expect(H.d_squared_zero() && H.check_axioms().empty(), [&] { return "d = " + std::to_string(d); });
        for (int n = 0; n <= 3; ++n) {
            HomologyPresentation got = H.homology(n), want = lens_oracle(n, d);
            ck.expect(got == want, [&] {
                return "d = " + std::to_string(d) + ": H_" + std::to_string(n) + " = " + got.to_string() + ", expected " +
                       want.to_string();
            });
        }
    }
    rep.checks.push_back(ck.result());
    rep.checks.push_back(axioms.result());
}

void cup1_suite(SuiteReport& rep, const SuiteOptions& o, std::mt19937_64& rng)
{
    Check st("ST of the diagonal vanishes on the image of f", 10), pair("cup1 products vanish on Psi_pt", 10),
        cls("Psi_pt detects the chosen classes", 10);
    int top = std::min(o.max_degree, 6);
    for (int r = 1; r <= std::min(o.r, 2); ++r) {
        Torus T(r);
        Product BB(T.BT_ptr(), T.BT_ptr());
        for (auto& [a, pi] : k_basis(r, top)) {
            Chain pf = map_chain(T.f(a, pi), [&](const Simplex& e) { return T.project(e); });
            Chain diag = map_chain(pf, [&](const Simplex& b) { return BB.make(b, b); });
            st.expect(steenrod(BB, diag).is_zero(), [&] { return k_name(a, pi); });
        }
        for (int i = 0; i < r; ++i) {
            Multi e(static_cast<std::size_t>(r), 0);
            e[static_cast<std::size_t>(i)] = 1;
            cls.expect(psi_pt_star(T, T.xi_prime(i), 3) == std::map<Multi, Scalar>{{e, 1}},
                       [&] { return "xi'_" + std::to_string(i + 1); });
        }
        std::vector<Multi> alphas;
        for (const Multi& a : multi_indices(r, top / 2))
            if (total(a) > 0)
                alphas.push_back(a);
        for (int k = 0; k < 60 * o.samples; ++k) {
            const Multi& a = alphas[static_cast<std::size_t>(k) % alphas.size()];
            int n = 2 * total(a);
            int p = std::uniform_int_distribution<int>(1, n)(rng);
            int q = n + 1 - p;
            std::uint64_t s1 = rng(), s2 = rng();
            Cochain x = hashed_cochain(p, s1, 2), y = hashed_cochain(q, s2, 2);
            Chain pf = map_chain(T.f(a, 0), [&](const Simplex& e) { return T.project(e); });
            Scalar v = cup1(T.BT(), x, y, T.ring()).pair(pf);
            pair.expect(v == 0, [&] {
                return "degrees " + std::to_string(p) + "," + std::to_string(q) + " salts " + std::to_string(s1) + "," +
                       std::to_string(s2) + " at " + monomial_name(a);
            });
        }
    }
    for (auto* c : {&st, &pair, &cls})
        rep.checks.push_back(c->result());
}

}  // namespace

SuiteReport run_torus_suite(const SuiteOptions& o)
{
    SuiteReport rep{"torus", {}};
    std::mt19937_64 rng(o.seed + 3);
    twisting_suite(rep, o, rng);
    f_suite(rep, o, rng);
    psi_suite(rep, o, rng);
    phi_suite(rep, o, rng);
    cartan_suite(rep, o);
    h_model_suite(rep);
    cup1_suite(rep, o, rng);
    return rep;
}

}  // namespace eqt
