#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "eqt/coeff.hpp"

namespace eqt {

// Subsets of [r] as bit masks, multi-indices as exponent vectors.
using Mask = std::uint32_t;
using Multi = std::vector<int>;

int popcount(Mask m);
// Sign of the permutation sorting the concatenation (mu, nu); 0 if they overlap.
int shuffle_sign(Mask mu, Mask nu);
std::vector<Mask> subsets_of(Mask pi);
std::vector<int> elements(Mask pi);
int total(const Multi& a);
// All multi-indices in N^r with |a| <= max_total, ordered by total then lexicographically.
std::vector<Multi> multi_indices(int r, int max_total);
std::string monomial_name(const Multi& a, const char* var = "x");
std::string wedge_name(Mask pi);

// Finite free graded complex with homological differential of degree -1.
struct GradedComplex {
    Ring R = Ring::integers();
    std::vector<int> deg;
    Matrix d;
    std::vector<std::string> labels;

    std::size_t size() const { return deg.size(); }
    std::vector<std::size_t> in_degree(int n) const;
    int max_degree() const;
    // Submatrix of an operator restricted to basis elements of the given degrees.
    Matrix block(const Matrix& op, int from, int to) const;
    bool d_squared_zero() const;
    HomologyPresentation homology(int n) const;
    HomologyBasis homology_basis_at(int n) const;
};

// Matrix of the map induced on free parts of homology, H_from -> H_to.
Matrix induced_on_homology(const GradedComplex& src, const GradedComplex& dst, const Matrix& f, int from,
                           int to);

// Weak left Λ-module: components c_α of degree 2|α|-1; strict when only c_{e_i} = x_i are present.
struct LambdaModule : GradedComplex {
    int r = 0;
    std::map<Multi, Matrix> c;

    bool strict() const;
    Matrix action(int i) const;
    // Returns an empty string when the twisting condition holds, otherwise a witness.
    std::string check_axioms() const;
};

// Weak right S-comodule: cap operators γ_π of degree -(|π|+1); strict when only γ_{i} = ξ_i∩ are present.
struct SComodule : GradedComplex {
    int r = 0;
    std::map<Mask, Matrix> gamma;
    Matrix xi_cap(int i) const;
};

LambdaModule lambda_free(int r, const Ring& R);
LambdaModule trivial_lambda_module(int r, const Ring& R);
SComodule trivial_s_comodule(int r, const Ring& R);
// S truncated at total degree max_degree with ξ_i∩x^α = x^{α-e_i}.
SComodule s_comodule(int r, int max_degree, const Ring& R);

struct TComplex : SComodule {
    std::vector<std::pair<Multi, std::size_t>> keys;  // (α, index in N)
    std::map<std::pair<Multi, std::size_t>, std::size_t> index;
};
struct HComplex : LambdaModule {
    std::vector<std::pair<std::size_t, Mask>> keys;  // (index in M, π)
    std::map<std::pair<std::size_t, Mask>, std::size_t> index;
};

// t N = S ⊗_v N truncated at total degree max_degree; homology is valid below max_degree.
TComplex t_functor(const LambdaModule& N, int max_degree);
// h M = M ⊗_u Λ.
HComplex h_functor(const SComodule& M);
// K = S ⊗_P Λ.
TComplex koszul_complex(int r, int max_degree, const Ring& R);

// Twisting cochain u_P on S: d(u) + u∪u evaluated on x^α for |α| <= max_total; empty if it vanishes.
std::string verify_canonical_twisting(int r, int max_total);

// Lowest unit component N -> h t N, n -> (1⊗n)⊗1.
Matrix unit_lowest(const LambdaModule& N, const HComplex& htN, const TComplex& tN);
// Full unit t N -> t h t N and counit h t h M -> h M.
Matrix unit_t(const TComplex& tN, const HComplex& htN, const TComplex& thtN);
Matrix counit_h(const TComplex& tM, const HComplex& hM, const HComplex& htM_h);
// Counit t h M -> M, (x^α ⊗ (m⊗a)) -> ε(x^α)ε(a) m.
Matrix counit_lowest(const SComodule& M, const HComplex& hM, const TComplex& thM);

// Is f: A -> B a chain map (B.d f = f A.d)?
bool is_chain_map(const GradedComplex& A, const GradedComplex& B, const Matrix& f);
GradedComplex mapping_cone(const GradedComplex& A, const GradedComplex& B, const Matrix& f);

// Random strict Λ-module of bounded size with exact d² = 0 and Λ-relations.
LambdaModule random_lambda_module(int r, const Ring& R, std::mt19937_64& rng, int max_generators = 6);

struct KoszulCheck {
    bool ok = true;
    std::string witness;
};
// Triangle identities and the homology comparison H(h t N) = H(N) in degrees <= max_degree.
KoszulCheck check_unit_quasi_iso(const LambdaModule& N, int max_degree);
KoszulCheck check_triangles(const LambdaModule& N, int max_degree);

}  // namespace eqt
