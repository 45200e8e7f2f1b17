#include "suite_util.hpp"

namespace eqt {

using namespace suite;

namespace {

SpacePtr delta(int n)
{
    return std::make_shared<StandardSimplex>(n);
}

std::optional<Simplex> random_nondegenerate(const Product& P, FiniteSampler& a, FiniteSampler& b, int n,
                                            std::mt19937_64& rng)
{
    for (int t = 0; t < 200; ++t) {
        Simplex s = P.make(a.any(n, rng), b.any(n, rng));
        if (!s.degenerate())
            return s;
    }
    return std::nullopt;
}

std::optional<Simplex> random_generator(const SimplicialSet& X, FiniteSampler& S, int n, std::mt19937_64& rng)
{
    for (int t = 0; t < 200; ++t) {
        Simplex s = S.any(n, rng);
        if (!s.degenerate())
            return s;
    }
    (void)X;
    return std::nullopt;
}

std::string show_tensor(const Tensor& t, const Spaces& X)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : t.terms()) {
        os << (first ? "" : " + ") << v << "*";
        for (std::size_t i = 0; i < k.size(); ++i)
            os << (i ? "(x)" : "") << X[i]->describe(k[i]);
        first = false;
    }
    return first ? "0" : os.str();
}

void ez_relations(Check& ck, SpacePtr X, SpacePtr Y, const Ring& R, int count, std::mt19937_64& rng)
{
    Product P(X, Y);
    FiniteSampler sx(*X), sy(*Y);
    std::uniform_int_distribution<int> deg(0, 5), coef(-3, 3), terms(1, 3);
    Spaces XY{X.get(), Y.get()};
    for (int t = 0; t < count; ++t) {
        int n = deg(rng);
        Chain c(R);
        int k = terms(rng);
        for (int j = 0; j < k; ++j)
            if (auto s = random_nondegenerate(P, sx, sy, n, rng))
                c.add(*s, coef(rng));
        Chain H = ez_homotopy(P, c);
        Chain lhs = shuffle(P, alexander_whitney(P, c)) - c;
        Chain rhs = boundary(P, H) + ez_homotopy(P, boundary(P, c));
        ck.expect(lhs == rhs, [&] { return "nabla AW - 1 != dH + Hd on " + show(P, c) + " over " + R.name(); });
        ck.expect(alexander_whitney(P, H).is_zero(), [&] { return "AW H != 0 on " + show(P, c); });
        ck.expect(ez_homotopy(P, H).is_zero(), [&] { return "H H != 0 on " + show(P, c); });

        int p = std::uniform_int_distribution<int>(0, n)(rng);
        auto x = random_generator(*X, sx, p, rng);
        auto y = random_generator(*Y, sy, n - p, rng);
        if (!x || !y)
            continue;
        Chain a(R, *x, coef(rng) | 1), b(R, *y, 1);
        Tensor ab = tensor(a, b);
        Chain sh = shuffle(P, ab);
        ck.expect(alexander_whitney(P, sh) == ab,
                  [&] { return "AW nabla != 1 on " + show_tensor(ab, XY) + " over " + R.name(); });
        ck.expect(ez_homotopy(P, sh).is_zero(), [&] { return "H nabla != 0 on " + show_tensor(ab, XY); });
    }
}

Simplex reassoc_left(const Product& XYZ_l, const Product& XY, const Product& X_YZ, const Product& YZ,
                     const Simplex& s)
{
    // X x (Y x Z) -> (X x Y) x Z
    auto [x, yz] = X_YZ.components(s);
    auto [y, z] = YZ.components(yz);
    return XYZ_l.make(XY.make(x, y), z);
}

Simplex reassoc_right(const Product& XYZ_l, const Product& XY, const Product& X_YZ, const Product& YZ,
                      const Simplex& s)
{
    auto [xy, z] = XYZ_l.components(s);
    auto [x, y] = XY.components(xy);
    return X_YZ.make(x, YZ.make(y, z));
}

struct Triple {
    SpacePtr X, Y, Z;
    std::shared_ptr<Product> XY, YZ, XY_Z, X_YZ;
    Triple(int a, int b, int c) : Triple(delta(a), delta(b), delta(c)) {}
    Triple(SpacePtr a, SpacePtr b, SpacePtr c) : X(std::move(a)), Y(std::move(b)), Z(std::move(c))
    {
        XY = std::make_shared<Product>(X, Y);
        YZ = std::make_shared<Product>(Y, Z);
        XY_Z = std::make_shared<Product>(XY, Z);
        X_YZ = std::make_shared<Product>(X, YZ);
    }
};

// ST_{XxY,Z} nabla_{X,YxZ}(x ⊗ w) and (nabla_{XY} ⊗ 1)(1 ⊗ ST_{YZ})(x ⊗ w)
std::pair<Tensor, Tensor> part1(const Triple& T, const Simplex& x, const Simplex& w, const Ring& R)
{
    Chain sh = shuffle(*T.X_YZ, Chain(R, x), Chain(R, w));
    Chain re = map_chain(sh, [&](const Simplex& s) { return reassoc_left(*T.XY_Z, *T.XY, *T.X_YZ, *T.YZ, s); });
    Tensor lhs = steenrod(*T.XY_Z, re);
    Tensor rhs(R);
    Tensor st = steenrod(*T.YZ, Chain(R, w));
    for (const auto& [k, v] : st.terms()) {
        Chain a = shuffle(*T.XY, Chain(R, x), Chain(R, k[0]));
        for (const auto& [s, u] : a.terms())
            rhs.add({s, k[1]}, v * u * sgn(x.dim()));
    }
    return {lhs, rhs};
}

// ST_{X,YxZ} nabla_{XxY,Z}(w ⊗ z) and (1 ⊗ nabla_{YZ})(ST_{XY} ⊗ 1)(w ⊗ z)
std::pair<Tensor, Tensor> part2(const Triple& T, const Simplex& w, const Simplex& z, const Ring& R)
{
    Chain sh = shuffle(*T.XY_Z, Chain(R, w), Chain(R, z));
    Chain re = map_chain(sh, [&](const Simplex& s) { return reassoc_right(*T.XY_Z, *T.XY, *T.X_YZ, *T.YZ, s); });
    Tensor lhs = steenrod(*T.X_YZ, re);
    Tensor rhs(R);
    Tensor st = steenrod(*T.XY, Chain(R, w));
    for (const auto& [k, v] : st.terms()) {
        Chain b = shuffle(*T.YZ, Chain(R, k[1]), Chain(R, z));
        for (const auto& [s, u] : b.terms())
            rhs.add({k[0], s}, v * u);
    }
    return {lhs, rhs};
}

void cochain_identities(Check& hirsch, Check& comm, const SimplicialSet& D, int top, int rounds, std::mt19937_64& rng)
{
    Ring Z = Ring::integers();
    std::uniform_int_distribution<int> dd(0, 2);
    for (int t = 0; t < rounds; ++t) {
        int p = dd(rng), q = dd(rng), r = dd(rng);
        if (p + q + r > top + 1)
            continue;
        if (p + q == 0)
            continue;
        Cochain a = random_cochain(D, p, rng), b = random_cochain(D, q, rng), c = random_cochain(D, r, rng);
        Cochain d1 = coboundary(D, cup1(D, a, b, Z), Z);
        Cochain hc = linear_combination({{1, cup(D, a, b, Z)},
                                         {-sgn(static_cast<long>(p) * q), cup(D, b, a, Z)},
                                         {-1, cup1(D, coboundary(D, a, Z), b, Z)},
                                         {-sgn(p), cup1(D, a, coboundary(D, b, Z), Z)}},
                                        Z);
        for (const auto& s : D.generators(p + q))
            comm.expect(d1(s) == hc(s), [&] {
                return "d(a cup1 b) mismatch on " + D.describe(s) + " for degrees " + std::to_string(p) + "," +
                       std::to_string(q);
            });
        Cochain h1 = cup1(D, a, cup(D, b, c, Z), Z);
        Cochain h2 = linear_combination({{1, cup(D, cup1(D, a, b, Z), c, Z)},
                                         {sgn(static_cast<long>(q) * (p - 1)), cup(D, b, cup1(D, a, c, Z), Z)}},
                                        Z);
        for (const auto& s : D.generators(p + q + r - 1))
            hirsch.expect(h1(s) == h2(s), [&] { return "Hirsch formula fails on " + D.describe(s); });
    }
}

}  // namespace

SuiteReport run_em_suite(const SuiteOptions& o)
{
    SuiteReport rep{"em", {}};
    std::mt19937_64 rng(o.seed);
    {
        Check ck("eilenberg-zilber relations", 1);
        const Ring rings[] = {Ring::integers(), Ring::rationals(), Ring::prime_field(2), Ring::prime_field(3)};
        for (const Ring& R : rings) {
            ez_relations(ck, delta(2), delta(3), R, 30 * o.samples, rng);
            ez_relations(ck, sphere2(), delta(1), R, 30 * o.samples, rng);
        }
        rep.checks.push_back(ck.result());
    }
    {
        Check ck("steenrod factorization ST = T AW H", 2);
        auto X = delta(2), Y = delta(3);
        Product P(X, Y), Q(Y, X);
        FiniteSampler sx(*X), sy(*Y);
        Ring Z = Ring::integers();
        for (int t = 0; t < 60 * o.samples; ++t) {
            int n = std::uniform_int_distribution<int>(0, 5)(rng);
            auto s = random_nondegenerate(P, sx, sy, n, rng);
            if (!s)
                continue;
            Chain c(Z, *s);
            Tensor alt = twist(alexander_whitney(Q, swap_product(P, Q, ez_homotopy(P, c))));
            ck.expect(steenrod(P, c) == alt, [&] { return "ST != T AW H on " + P.describe(*s); });
        }
        rep.checks.push_back(ck.result());
    }
    {
        Check hirsch("hirsch formula", 2), comm("cup1 homotopy commutativity", 2);
        StandardSimplex D(5);
        cochain_identities(hirsch, comm, D, 5, 10 * o.samples, rng);
        auto S = sphere2();
        Product P(S, delta(2));
        cochain_identities(hirsch, comm, P, 4, 6 * o.samples, rng);
        rep.checks.push_back(hirsch.result());
        rep.checks.push_back(comm.result());
    }
    {
        Check ck("steenrod shuffle associativity (triple products)", 2);
        Triple T(1, 2, 1);
        FiniteSampler sx(*T.X), sy(*T.Y), sz(*T.Z);
        Ring Z = Ring::integers();
        for (int t = 0; t < 60 * o.samples; ++t) {
            int p = std::uniform_int_distribution<int>(0, 2)(rng);
            int q = std::uniform_int_distribution<int>(0, 4 - p)(rng);
            auto x = random_generator(*T.X, sx, p, rng);
            auto w = random_nondegenerate(*T.YZ, sy, sz, q, rng);
            if (!x || !w)
                continue;
            auto [l, r] = part1(T, *x, *w, Z);
            ck.expect(l == r, [&] { return "x = " + T.X->describe(*x) + ", w = " + T.YZ->describe(*w); });
        }
        rep.checks.push_back(ck.result());
    }
    {
        Check ck("steenrod shuffle identity for |z| <= 1", 2);
        Check wit("steenrod shuffle identity fails for |z| = 2", 2);
        Triple T(1, 2, 2);
        FiniteSampler sx(*T.X), sy(*T.Y);
        Ring Z = Ring::integers();
        for (int t = 0; t < 40 * o.samples; ++t) {
            int q = std::uniform_int_distribution<int>(0, 3)(rng);
            auto w = random_nondegenerate(*T.XY, sx, sy, q, rng);
            if (!w)
                continue;
            for (int zd = 0; zd <= 1; ++zd)
                for (const Simplex& z : T.Z->generators(zd)) {
                    auto [l, r] = part2(T, *w, z, Z);
                    ck.expect(l == r, [&] { return "w = " + T.XY->describe(*w) + ", z = " + T.Z->describe(z); });
                }
        }
        bool found = false;
        using Trio = std::tuple<SpacePtr, SpacePtr, SpacePtr>;
        for (auto [a, b, c] : {Trio{delta(1), delta(1), delta(2)}, Trio{delta(2), delta(2), delta(2)},
                               Trio{delta(3), delta(3), delta(2)}, Trio{delta(2), delta(2), sphere2()},
                               Trio{sphere2(), sphere2(), sphere2()}, Trio{circle1(), circle1(), sphere2()}})
            for (int q = 0; q <= 6 && !found; ++q) {
                Triple U(a, b, c);
                for (const Simplex& w : U.XY->generators(q)) {
                    for (const Simplex& z : U.Z->generators(2)) {
                        auto [l, r] = part2(U, w, z, Z);
                        if (!(l == r)) {
                            wit.note("w = " + U.XY->describe(w) + ", z = " + U.Z->describe(z));
                            found = true;
                            break;
                        }
                    }
                    if (found)
                        break;
                }
            }
        wit.expect(found, [] {
            return "no counterexample with |z| = 2 among all generators w of degree <= 6 on six triples of spaces";
        });
        rep.checks.push_back(ck.result());
        rep.checks.push_back(wit.result());
    }
    return rep;
}

namespace {

std::optional<Simplex> random_e(const UniversalBundle& E, int rank, int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> d(-1, 1);
    for (int t = 0; t < 200; ++t) {
        std::vector<Key> parts;
        for (int k = 0; k <= n; ++k) {
            Key x(static_cast<std::size_t>(rank * k));
            for (auto& v : x)
                v = d(rng);
            parts.push_back(x);
        }
        auto e = E.from_bar(BarSpace::join(parts), n);
        if (!e.degenerate())
            return e;
    }
    return std::nullopt;
}

// (f ⊗ g)(a ⊗ b) = (-1)^{|g||a|} f(a) ⊗ g(b) with f, g ∈ {1, S}
Tensor cone_tensor(const Tensor& t, const UniversalBundle* left, const UniversalBundle* right)
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

// S on E(G x H) = EG x EH
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

SuiteReport run_classifying_suite(const SuiteOptions& o)
{
    SuiteReport rep{"classifying", {}};
    std::mt19937_64 rng(o.seed + 1);
    Ring Z = Ring::integers();
    {
        Check faces("faces and degeneracies of the cone operator", 3), hom("cone homotopy dS + Sd = 1 - e0 eps", 3),
            nil("SS = 0 and S e0 = 0", 3);
        for (int rank : {0, 1, 2}) {
            UniversalBundle E(std::make_shared<NerveGroup>(rank));
            const auto& EG = *E.total();
            nil.expect(E.cone(Chain(Z, E.basepoint())).is_zero(), [] { return "S e0 != 0"; });
            for (int t = 0; t < 40 * o.samples; ++t) {
                int n = std::uniform_int_distribution<int>(0, 4)(rng);
                auto eo = random_e(E, rank, n, rng);
                if (!eo)
                    continue;
                Simplex e = *eo;
                Chain c(Z, e);
                nil.expect(E.cone(E.cone(c)).is_zero(), [&] { return "SS != 0 on " + EG.describe(e); });
                Chain lhs = boundary(EG, E.cone(c)) + E.cone(boundary(EG, c));
                Chain want = c;
                if (n == 0)
                    want.add(E.basepoint(), -1);
                hom.expect(lhs == want, [&] { return "dS + Sd mismatch on " + EG.describe(e); });
                Simplex st = E.s_tilde(e);
                faces.expect(EG.face(st, n + 1) == e, [&] { return "last face of S~e differs on " + EG.describe(e); });
                for (int i = 0; i <= n; ++i) {
                    if (n > 0)
                        faces.expect(EG.face(st, i) == E.s_tilde(EG.face(e, i)),
                                     [&] { return "d_i S~ != S~ d_i on " + EG.describe(e); });
                    faces.expect(EG.degeneracy(st, i) == E.s_tilde(EG.degeneracy(e, i)),
                                 [&] { return "s_i S~ != S~ s_i on " + EG.describe(e); });
                }
                faces.expect(EG.degeneracy(st, n + 1) == E.s_tilde(st),
                             [&] { return "s_{n+1} S~ != S~ S~ on " + EG.describe(e); });
            }
        }
        rep.checks.push_back(faces.result());
        rep.checks.push_back(hom.result());
        rep.checks.push_back(nil.result());
    }
    Check shS("shuffle and cone operators", 3), awS("Alexander-Whitney and cone operators", 3),
        stS("Steenrod and cone operators (commuted Alexander-Whitney form)", 3),
        lit("Steenrod and cone operators, literal form", 3);
    lit.set_informational();
    std::string literal_witness;
    for (auto [rg, rh] : std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
        UniversalBundle EG(std::make_shared<NerveGroup>(rg)), EH(std::make_shared<NerveGroup>(rh));
        Product P(EG.total(), EH.total()), Q(EH.total(), EG.total());
        for (int t = 0; t < 30 * o.samples; ++t) {
            int m = std::uniform_int_distribution<int>(0, 3)(rng), n = std::uniform_int_distribution<int>(0, 3 - m)(rng);
            auto ao = random_e(EG, rg, m, rng);
            auto bo = random_e(EH, rh, n, rng);
            if (ao && bo) {
                Tensor ab(Z);
                ab.add({*ao, *bo}, 1);
                Chain lhs = shuffle(P, cone_tensor(ab, &EG, &EH));
                Chain rhs = cone_product(P, EG, EH,
                                         shuffle(P, cone_tensor(ab, nullptr, &EH) - cone_tensor(ab, &EG, nullptr)));
                shS.expect(lhs == rhs, [&] { return "a = " + EG.total()->describe(*ao) + ", b = " + EH.total()->describe(*bo); });
            }
            int k = std::uniform_int_distribution<int>(0, 3)(rng);
            auto eo = random_e(EG, rg, k, rng);
            auto fo = random_e(EH, rh, k, rng);
            if (!eo || !fo)
                continue;
            Simplex z = P.make(*eo, *fo);
            Chain zc(Z, z);
            Tensor aw = alexander_whitney(P, cone_product(P, EG, EH, zc));
            Tensor aw_rhs = cone_tensor(alexander_whitney(P, zc), nullptr, &EH);
            for (const auto& [x, v] : EG.cone(Chain(Z, *eo)).terms())
                aw_rhs.add({x, EH.basepoint()}, v);
            awS.expect(aw == aw_rhs, [&] { return "z = " + P.describe(z); });

            Tensor st = steenrod(P, cone_product(P, EG, EH, zc));
            Tensor awt = twist(alexander_whitney(Q, swap_product(P, Q, zc)));
            Tensor st_rhs = cone_tensor(awt, &EG, &EH) - cone_tensor(steenrod(P, zc), nullptr, &EH);
            stS.expect(st == st_rhs, [&] { return "z = " + P.describe(z); });
            Tensor lit_rhs = cone_tensor(alexander_whitney(P, zc), &EG, &EH) - cone_tensor(steenrod(P, zc), nullptr, &EH);
            if (!(st == lit_rhs) && literal_witness.empty())
                literal_witness = "G = " + EG.group().name() + ", H = " + EH.group().name() + ", z = " + P.describe(z);
        }
    }
    lit.expect(literal_witness.empty(), [&] { return literal_witness; });
    rep.checks.push_back(shS.result());
    rep.checks.push_back(awS.result());
    rep.checks.push_back(stS.result());
    rep.checks.push_back(lit.result());
    return rep;
}

}  // namespace eqt
