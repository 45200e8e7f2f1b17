#include "doctest.h"

#include "eqt/ih.hpp"

using namespace eqt;

namespace {

struct Spec {
    std::string name;
    int dim;
    std::vector<std::string> faces;
};

std::shared_ptr<FiniteSpace> build(const std::vector<Spec>& specs, const std::string& name)
{
    std::map<std::string, std::int64_t> id;
    for (std::size_t i = 0; i < specs.size(); ++i)
        id[specs[i].name] = static_cast<std::int64_t>(i);
    std::vector<FiniteSpace::Gen> g;
    for (const Spec& s : specs) {
        FiniteSpace::Gen x{s.name, s.dim, {}};
        for (const std::string& f : s.faces) {
            // "v" or "s0 v"
            if (f.size() > 3 && f[0] == 's' && f[2] == ' ') {
                std::string base = f.substr(3);
                x.faces.push_back(Simplex{{f[1] - '0'}, specs[static_cast<std::size_t>(id.at(base))].dim, {id.at(base)}});
            } else {
                x.faces.push_back(Simplex{{}, specs[static_cast<std::size_t>(id.at(f))].dim, {id.at(f)}});
            }
        }
        g.push_back(x);
    }
    return std::make_shared<FiniteSpace>(g, name);
}

// sphere with north and south pole identified to c
FilteredSpace pinched_torus()
{
    std::vector<Spec> s{{"m0", 0, {}}, {"m1", 0, {}}, {"m2", 0, {}}, {"c", 0, {}}};
    for (int i = 0; i < 3; ++i)
        s.push_back({"e" + std::to_string(i), 1, {"m" + std::to_string((i + 1) % 3), "m" + std::to_string(i)}});
    for (const char* l : {"u", "w"})
        for (int i = 0; i < 3; ++i)
            s.push_back({l + std::to_string(i), 1, {"c", "m" + std::to_string(i)}});
    for (const char* l : {"u", "w"})
        for (int i = 0; i < 3; ++i)
            s.push_back({std::string(l) == "u" ? "T" + std::to_string(i) : "B" + std::to_string(i), 2,
                         {l + std::to_string((i + 1) % 3), l + std::to_string(i), "e" + std::to_string(i)}});
    FilteredSpace F{build(s, "pinched"), std::vector<int>(s.size(), 0)};
    F.label[3] = 2;
    return F;
}

std::vector<std::size_t> ranks(const GradedComplex& C, int top)
{
    std::vector<std::size_t> r;
    for (int n = 0; n <= top; ++n)
        r.push_back(C.homology(n).free_rank);
    return r;
}

bool torsion_free(const GradedComplex& C, int top)
{
    for (int n = 0; n <= top; ++n)
        if (!C.homology(n).torsion.empty())
            return false;
    return true;
}

}  // namespace

TEST_CASE("pinched torus intersection homology")
{
    FilteredSpace F = pinched_torus();
    REQUIRE(F.validate().empty());
    Ring Z = Ring::integers();
    AllowableSubset V = allowable_from_perversity(F, Perversity::middle(2));
    CHECK(check_allowable_closure(*F.X, V, 3).ok);
    CHECK_FALSE(V.contains(F.X->gen(3)));
    CHECK(V.contains(F.X->gen(F.X->id_of("T0"))));
    CHECK_FALSE(V.contains(F.X->gen(F.X->id_of("u1"))));
    IntersectionComplex I = intersection_complex(*F.X, V, Z, 3);
    REQUIRE(I.d_squared_zero());
    CHECK(ranks(I, 2) == std::vector<std::size_t>{1, 0, 1});
    CHECK(torsion_free(I, 2));
    IntersectionComplex All = intersection_complex(*F.X, all_simplices(), Z, 3);
    CHECK(ranks(All, 2) == std::vector<std::size_t>{1, 1, 1});
    FiniteChains C = finite_chains(*F.X, 3, Z);
    for (int n = 0; n <= 2; ++n)
        CHECK(All.homology(n) == C.homology(n));
}

TEST_CASE("subcomplex and perversity monotonicity")
{
    FilteredSpace F = pinched_torus();
    Ring Z = Ring::integers();
    AllowableSubset A = subcomplex_subset(*F.X, {"m0", "m1", "m2", "e0", "e1", "e2"});
    CHECK(check_allowable_closure(*F.X, A, 3).ok);
    IntersectionComplex I = intersection_complex(*F.X, A, Z, 3);
    CHECK(ranks(I, 2) == std::vector<std::size_t>{1, 1, 0});
    AllowableSubset zero = allowable_from_perversity(F, Perversity::zero());
    AllowableSubset big = allowable_from_perversity(F, Perversity{{0, 1, 2}});
    std::size_t nz = 0, nb = 0;
    for (int n = 0; n <= 3; ++n)
        for (const Simplex& s : F.X->all_simplices(n)) {
            if (zero.contains(s)) {
                ++nz;
                CHECK(big.contains(s));
            }
            nb += big.contains(s);
        }
    CHECK(nb > nz);
    IntersectionComplex Iz = intersection_complex(*F.X, zero, Z, 3), Ib = intersection_complex(*F.X, big, Z, 3);
    for (int n = 0; n <= 2; ++n)
        CHECK(Iz.in_degree(n).size() <= Ib.in_degree(n).size());
}

TEST_CASE("closure checker and filtration validation reject bad input")
{
    FilteredSpace F = pinched_torus();
    auto r = check_allowable_closure(*F.X, subcomplex_subset(*F.X, {"m0", "m1", "c", "u0", "u1", "T0"}), 3);
    CHECK_FALSE(r.ok);
    CHECK(r.witness.find("T0") != std::string::npos);
    FilteredSpace G = F;
    G.label[0] = 2;
    CHECK_FALSE(G.validate().empty());
    CHECK_THROWS_AS(allowable_from_perversity(G, Perversity::middle(2)), std::invalid_argument);
    CHECK_FALSE(Perversity{{0, 2}}.validate().empty());
}

TEST_CASE("equivariant intersection homology")
{
    FilteredSpace F = pinched_torus();
    Torus T(1);
    AllowableSubset V = allowable_from_perversity(F, Perversity::middle(2));
    TComplex tI = equivariant_ih_t(T, trivial_tspace(F.X), V, 4);
    REQUIRE(tI.d_squared_zero());
    CHECK(ranks(tI, 4) == std::vector<std::size_t>{1, 0, 2, 0, 2});
    auto S = build({{"v", 0, {}}, {"s", 2, {"s0 v", "s0 v", "s0 v"}}}, "S2");
    for (std::int64_t d : {1, 2}) {
        MappedSpace Y{S, {Key{}, BarSpace::join({{}, {d}})}};
        SpaceOverBase O = Y.over(T);
        HComplex full = equivariant_ih_h(T, O, all_simplices(), 4);
        HComplex model = h_model(T, O, 4);
        for (int n = 0; n <= 3; ++n)
            CHECK(full.homology(n) == model.homology(n));
        HComplex base = equivariant_ih_h(T, O, subcomplex_subset(*S, {"v"}), 4);
        CHECK(ranks(base, 3) == std::vector<std::size_t>{1, 1, 0, 0});
    }
}
