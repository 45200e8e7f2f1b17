#include "eqt/ih.hpp"
#include "eqt/spaces.hpp"
#include "suite_util.hpp"

namespace eqt {

using namespace suite;

namespace {

std::string ranks_of(const GradedComplex& C, int top)
{
    std::string s;
    for (int n = 0; n <= top; ++n)
        s += (n ? "," : "") + C.homology(n).to_string();
    return s;
}

}  // namespace

SuiteReport run_ih_suite(const SuiteOptions& o)
{
    SuiteReport rep{"ih", {}};
    std::mt19937_64 rng(o.seed + 4);
    Ring Z = Ring::integers();
    FilteredSpace F = pinched_torus();
    Check known("pinched torus with middle perversity has IH = (Z, 0, Z)", 11),
        triv("all simplices and subcomplexes give ordinary homology", 11),
        closure("closure checker catches a seeded violation", 11), sub("intersection chains form a subcomplex", 11),
        mono("perversity monotonicity", 11), cap_closed("intersection chains are closed under cap products", 11),
        equi("equivariant intersection homology", 11);
    {
        std::string w = F.validate();
        known.expect(w.empty(), [&] { return w; });
        AllowableSubset V = allowable_from_perversity(F, Perversity::middle(2));
        ClosureReport c = check_allowable_closure(*F.X, V, 3);
        closure.expect(c.ok, [&] { return "perversity subset rejected: " + c.witness; });
        IntersectionComplex I = intersection_complex(*F.X, V, Z, 3);
        sub.expect(I.d_squared_zero(), [] { return "d^2 != 0"; });
        std::vector<std::size_t> want{1, 0, 1};
        for (int n = 0; n <= 2; ++n) {
            HomologyPresentation h = I.homology(n);
            known.expect(h.free_rank == want[static_cast<std::size_t>(n)] && h.torsion.empty(),
                         [&] { return "IH_" + std::to_string(n) + " = " + h.to_string(); });
        }
        for (const Ring& R : {Ring::rationals(), Ring::prime_field(2)}) {
            IntersectionComplex J = intersection_complex(*F.X, V, R, 3);
            for (int n = 0; n <= 2; ++n)
                known.expect(J.homology(n).free_rank == want[static_cast<std::size_t>(n)],
                             [&] { return "over " + R.name() + ": " + ranks_of(J, 2); });
        }
    }
    {
        FiniteChains C = finite_chains(*F.X, 3, Z);
        IntersectionComplex All = intersection_complex(*F.X, all_simplices(), Z, 3);
        AllowableSubset trivial_filtration =
            allowable_from_perversity(FilteredSpace{F.X, std::vector<int>(F.label.size(), 0)}, Perversity::middle(2));
        IntersectionComplex Tf = intersection_complex(*F.X, trivial_filtration, Z, 3);
        for (int n = 0; n <= 2; ++n) {
            triv.expect(All.homology(n) == C.homology(n), [&] { return "V = all: " + ranks_of(All, 2); });
            triv.expect(Tf.homology(n) == C.homology(n), [&] { return "trivial filtration: " + ranks_of(Tf, 2); });
        }
        std::vector<std::string> names{"m0", "m1", "m2", "e0", "e1", "e2"};
        AllowableSubset A = subcomplex_subset(*F.X, names);
        IntersectionComplex IA = intersection_complex(*F.X, A, Z, 3);
        std::vector<FiniteSpace::Gen> g;
        for (const auto& nm : names) {
            const auto& src = F.X->gens()[F.X->id_of(nm)];
            FiniteSpace::Gen x{src.name, src.dim, {}};
            for (const Simplex& f : src.faces)
                x.faces.push_back(Simplex{f.word, f.gdim, {static_cast<std::int64_t>(
                    std::find(names.begin(), names.end(), F.X->gens()[static_cast<std::size_t>(f.key[0])].name) - names.begin())}});
            g.push_back(x);
        }
        FiniteSpace Asp(g, "A");
        FiniteChains CA = finite_chains(Asp, 3, Z);
        for (int n = 0; n <= 2; ++n)
            triv.expect(IA.homology(n) == CA.homology(n), [&] { return "subcomplex: " + ranks_of(IA, 2); });
    }
    {
        ClosureReport c = check_allowable_closure(*F.X, subcomplex_subset(*F.X, {"m0", "m1", "c", "u0", "u1", "T0"}), 3);
        closure.expect(!c.ok, [] { return "subset missing the last face e0 of T0 accepted"; });
        FilteredSpace G = F;
        G.label[F.X->id_of("m0")] = 2;
        closure.expect(!G.validate().empty(), [] { return "non flag-like filtration accepted"; });
        bool threw = false;
        try {
            allowable_from_perversity(G, Perversity::middle(2));
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        closure.expect(threw, [] { return "perversity subset built from an invalid filtration"; });
    }
    {
        AllowableSubset zero = allowable_from_perversity(F, Perversity::zero());
        AllowableSubset mid = allowable_from_perversity(F, Perversity::middle(2));
        AllowableSubset big = allowable_from_perversity(F, Perversity{{0, 1, 2}});
        std::size_t nz = 0, nb = 0;
        for (int n = 0; n <= 3; ++n)
            for (const Simplex& s : F.X->all_simplices(n)) {
                if (zero.contains(s)) {
                    ++nz;
                    mono.expect(mid.contains(s) && big.contains(s), [&] { return F.X->describe(s); });
                }
                nb += big.contains(s);
            }
        mono.expect(nb > nz, [] { return "maximal perversity admits no more simplices than zero perversity"; });
        IntersectionComplex Iz = intersection_complex(*F.X, zero, Z, 3), Ib = intersection_complex(*F.X, big, Z, 3);
        Matrix back = multiply(Ib.embed, multiply(Ib.coords, Iz.embed, Z), Z);
        mono.expect(back.reduced(Z) == Iz.embed.reduced(Z), [] { return "C(V) not contained in C(V')"; });
        for (const auto& [V, name] : {std::pair{zero, "zero"}, std::pair{mid, "middle"}, std::pair{big, "maximal"}}) {
            IntersectionComplex I = intersection_complex(*F.X, V, Z, 3);
            Matrix dd = multiply(I.ambient.d, I.embed, Z);
            bool inside = true;
            for (std::size_t j = 0; j < dd.cols() && inside; ++j) {
                std::vector<Scalar> col(dd.rows(), 0);
                for (const auto& [k, v] : dd.entries())
                    if (k.second == j)
                        col[k.first] = v;
                inside = I.contains(col);
            }
            sub.expect(inside, [&] { return std::string("boundary leaves C(V) for ") + name + " perversity"; });
        }
    }
    {
        Torus T(1);
        AllowableSubset V = allowable_from_perversity(F, Perversity::middle(2));
        std::vector<Key> image;
        std::uniform_int_distribution<int> d(-3, 3);
        for (const auto& g : F.X->gens())
            image.push_back(g.dim == 2 ? BarSpace::join({{}, {d(rng)}}) : g.dim == 1 ? BarSpace::join({{}}) : Key{});
        MappedSpace Y{F.X, image};
        std::string w = Y.validate(T);
        cap_closed.expect(w.empty(), [&] { return w; });
        if (w.empty()) {
            SpaceOverBase O = Y.over(T);
            IntersectionComplex I = intersection_complex(*F.X, V, Z, 3);
            for (int k = 0; k < 20 * o.samples; ++k) {
                int q = 1 + k % 2;
                Cochain g = hashed_cochain(q, rng(), 1);
                Matrix op = chain_operator(I.ambient, [&](const Simplex& s) { return cap(O, g, Chain(Z, s)); });
                Matrix out;
                cap_closed.expect(I.restrict_operator(op, out), [&] { return "cap by a degree " + std::to_string(q) + " cochain"; });
            }
            try {
                HComplex H = equivariant_ih_h(T, O, V, 3);
                equi.expect(H.d_squared_zero(), [] { return "h-side d^2 != 0"; });
            } catch (const std::invalid_argument& e) {
                cap_closed.fail(e.what());
            }
        }
        TComplex tI = equivariant_ih_t(T, trivial_tspace(F.X), V, 4);
        std::vector<std::size_t> want{1, 0, 2, 0, 2};
        for (int n = 0; n <= 4; ++n)
            equi.expect(tI.homology(n).free_rank == want[static_cast<std::size_t>(n)],
                        [&] { return "t-side: " + ranks_of(tI, 4); });
        TComplex tAll = equivariant_ih_t(T, trivial_tspace(F.X), all_simplices(), 4);
        TComplex tC = t_functor(chains_as_lambda_module(T, trivial_tspace(F.X), finite_chains(*F.X, 5, Z)), 5);
        for (int n = 0; n <= 4; ++n)
            equi.expect(tAll.homology(n) == tC.homology(n), [&] { return "t-side with V = all: " + ranks_of(tAll, 4); });
        for (std::int64_t dd : {1, 2}) {
            MappedSpace S{sphere2(), {Key{}, BarSpace::join({{}, {dd}})}};
            SpaceOverBase O = S.over(T);
            HComplex full = equivariant_ih_h(T, O, all_simplices(), 4), model = h_model(T, O, 4);
            for (int n = 0; n <= 3; ++n)
                equi.expect(full.homology(n) == model.homology(n), [&] { return "h-side with W = all, d = " + std::to_string(dd); });
            HComplex base = equivariant_ih_h(T, O, subcomplex_subset(*S.Y, {"v"}), 4);
            std::vector<std::size_t> bw{1, 1, 0, 0};
            for (int n = 0; n <= 3; ++n)
                equi.expect(base.homology(n).free_rank == bw[static_cast<std::size_t>(n)],
                            [&] { return "h-side of the base point: " + ranks_of(base, 3); });
        }
    }
    for (auto* c : {&known, &triv, &closure, &sub, &mono, &cap_closed, &equi})
        rep.checks.push_back(c->result());
    return rep;
}

}  // namespace eqt
