#pragma once

#include <map>
#include <mutex>
#include <random>

#include "eqt/classifying.hpp"
#include "eqt/koszul.hpp"

namespace eqt {

// Element of C(Y) ⊗ Λ
using LambdaChain = std::map<std::pair<Simplex, Mask>, Scalar>;
void add_to(LambdaChain& a, const Simplex& s, Mask m, const Scalar& v, const Ring& R);

// T = (B Z)^r with its universal bundle and the chosen cochains.
class Torus {
public:
    explicit Torus(int r, Ring R = Ring::integers());

    int rank() const { return r_; }
    const Ring& ring() const { return R_; }
    const NerveGroup& T() const { return *T_; }
    std::shared_ptr<const NerveGroup> T_ptr() const { return T_; }
    const UniversalBundle& bundle() const { return E_; }
    const BarSpace& BT() const { return *E_.base(); }
    const TwistedProduct& ET() const { return *E_.total(); }
    SpacePtr BT_ptr() const { return E_.base(); }
    SpacePtr ET_ptr() const { return E_.total(); }
    SpaceOverBase ET_over_BT() const { return E_.over_base(); }

    Simplex loop(int i) const { return T_->loop(i); }
    Simplex e0() const { return E_.basepoint(); }
    Simplex b0(int n) const;
    Simplex project(const Simplex& e) const { return E_.project(e); }

    // Pontryagin product in C(T) and the right translation C(ET) ⊗ C(T) -> C(ET)
    Chain pontryagin(const Chain& a, const Chain& b) const;
    Chain right_mul(const Chain& c, const Chain& g) const;
    // x'_{i_1} ... x'_{i_q}
    Chain loops(Mask pi) const;

    // χ_i on ET, ξ'_i on BT and the derived families
    Cochain chi(int i) const;
    Cochain xi_prime(int i) const;
    Cochain xi_prime(Mask pi) const;
    Cochain chi(Mask pi) const;
    Cochain zeta(Mask pi) const;
    Cochain pull(const Cochain& a) const;

    // f(x^α ⊗ x_π)
    Chain f(const Multi& alpha, Mask pi) const;
    // ĥ(e) = Σ_π ζ_π(e) x_π
    std::map<Mask, Scalar> h_hat(const Simplex& e) const;

    // random simplices with entries in [-box, box]
    Key random_element(int n, std::mt19937_64& rng, int box = 1) const;
    Simplex random_T(int n, std::mt19937_64& rng, int box = 1) const;
    Simplex random_BT(int n, std::mt19937_64& rng, int box = 1, bool nondegenerate = true) const;
    Simplex random_ET(int n, std::mt19937_64& rng, int box = 1, bool nondegenerate = true) const;

private:
    int r_;
    Ring R_;
    std::shared_ptr<const NerveGroup> T_;
    UniversalBundle E_;
    std::shared_ptr<const UniversalBundle> circle_;
    mutable std::mutex mtx_;
    mutable std::map<Mask, Cochain> xi_, chi_, zeta_;
    mutable std::map<std::pair<int, int>, Chain> f1_;
    mutable std::map<std::pair<Multi, Mask>, Chain> f_;

    Chain f_circle(int l, int eps) const;
};

// Left T-space
struct TSpace {
    SpacePtr X;
    Action act;
    std::function<Simplex(int, std::mt19937_64&)> sample;
    bool trivial = false;
    std::string name;
};
TSpace point_tspace();
TSpace trivial_tspace(std::shared_ptr<const FiniteSpace> X);
TSpace torus_tspace(const Torus& T);
// (B Z/m)^r with T acting through reduction mod m
TSpace cyclic_tspace(const Torus& T, std::int64_t m);

// x'_π · c for the left action
Chain sweep(const Torus& T, const TSpace& X, Mask pi, const Chain& c);

// Borel construction t X = BT x_τ X and q_X
std::shared_ptr<const TwistedProduct> borel(const Torus& T, const TSpace& X);
SpaceOverBase borel_over_BT(const Torus& T, std::shared_ptr<const TwistedProduct> B);
Simplex q_map(const Torus& T, const TSpace& X, const TwistedProduct& borelX, const Simplex& ex);

// Ψ_X(x^α ⊗ c)
Chain psi(const Torus& T, const TSpace& X, const TwistedProduct& borelX, const Multi& alpha, const Chain& c);

// Pullback h Y = Y x_{τ p} T
std::shared_ptr<const TwistedProduct> pullback(const Torus& T, const SpaceOverBase& Y);
// h Y is a left T-space through (y, g) -> (y, g h^{-1})
TSpace pullback_tspace(const Torus& T, std::shared_ptr<const TwistedProduct> hY);
Chain right_mul_fibre(const Torus& T, const TwistedProduct& hY, const Chain& c, const Chain& g);

// Adjunction maps: P_X(b, x, g) = g^{-1} x on h t X, I_Y(y) = (p y, y, 1) into t h Y, J_Y(b, y, g) = y
Simplex adjunction_P(const Torus& T, const TSpace& X, const TwistedProduct& htX, const Simplex& s);
Simplex adjunction_I(const Torus& T, const SpaceOverBase& Y, const TwistedProduct& hY, const TwistedProduct& thY,
                     const Simplex& y);
Simplex adjunction_J(const TwistedProduct& hY, const TwistedProduct& thY, const Simplex& s);

// Φ_Y = (1 ⊗ ĥ) AW j_*
LambdaChain phi(const Torus& T, const SpaceOverBase& Y, const TwistedProduct& hY, const Chain& c);
// differential of C(Y) ⊗_t Λ on chain-level elements
LambdaChain h_differential(const Torus& T, const SpaceOverBase& Y, const LambdaChain& a);

// Ψ_pt^* on a cochain of BT, as coefficients of ξ^α
std::map<Multi, Scalar> psi_pt_star(const Torus& T, const Cochain& a, int max_total);

// Finite chain complexes of simplicial sets
struct FiniteChains : GradedComplex {
    std::vector<Simplex> basis;
    std::map<Simplex, std::size_t> index;
    std::vector<Scalar> vec(const Chain& c) const;
    Chain chain(const std::vector<Scalar>& v) const;
};
FiniteChains finite_chains(const SimplicialSet& X, int max_degree, const Ring& R);
// Matrix of a chain-level operator on the basis; terms outside the basis are dropped
Matrix chain_operator(const FiniteChains& C, const std::function<Chain(const Simplex&)>& op);

// Cartan model Σ* ⊗ C*(X), cohomology as homology in negated degrees
struct CartanModel : GradedComplex {
    int r = 0;
    std::vector<std::pair<Multi, std::size_t>> keys;  // (α, dual basis index)
    std::map<std::pair<Multi, std::size_t>, std::size_t> index;
    FiniteChains chains;
    std::vector<Matrix> xi;     // multiplication by ξ_i
    bool twist_vanishes = true;
    HomologyPresentation cohomology(int n) const { return homology(-n); }
    Matrix xi_action(int i, int n) const;
};
LambdaModule chains_as_lambda_module(const Torus& T, const TSpace& X, const FiniteChains& C);
CartanModel cartan_model(const Torus& T, const TSpace& X, int max_degree);

// Space over BT defined by images of the generators of a finite space
struct MappedSpace {
    std::shared_ptr<const FiniteSpace> Y;
    std::vector<Key> image;  // raw BT simplex per generator
    SpaceOverBase over(const Torus& T) const;
    std::string validate(const Torus& T) const;
};

// h-model C(Y) ⊗_t Λ
SComodule chains_as_s_comodule(const Torus& T, const SpaceOverBase& Y, const FiniteChains& C);
HComplex h_model(const Torus& T, const SpaceOverBase& Y, int max_degree);

// Subtorus maps: destination row k is source row src[k], or zero when src[k] < 0
struct TorusMap {
    int r_src = 0, r_dst = 0;
    std::vector<int> src;
    Key apply(const Key& g, int n) const;
    Simplex on_T(const Torus& A, const Torus& B, const Simplex& g) const;
    Simplex on_BT(const Torus& A, const Torus& B, const Simplex& b) const;
    Simplex on_ET(const Torus& A, const Torus& B, const Simplex& e) const;
    // induced maps on S and Λ; zero coefficient when the image vanishes
    std::pair<Multi, int> on_S(const Multi& a) const;
    std::pair<Mask, int> on_Lambda(Mask pi) const;
};

}  // namespace eqt
