#pragma once

#include "eqt/simplicial.hpp"

namespace eqt {

// Element of C(X_1) ⊗ ... ⊗ C(X_k)
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(Ring R) : R_(R) {}

    void add(const std::vector<Simplex>& k, const Scalar& c);
    void add(const Tensor& o, const Scalar& c = 1);
    bool is_zero() const { return t_.empty(); }
    const std::map<std::vector<Simplex>, Scalar>& terms() const& { return t_; }
    std::map<std::vector<Simplex>, Scalar> terms() && { return std::move(t_); }
    const Ring& ring() const { return R_; }
    bool operator==(const Tensor& o) const { return t_ == o.t_; }

private:
    Ring R_;
    std::map<std::vector<Simplex>, Scalar> t_;
};

Tensor operator-(const Tensor& a, const Tensor& b);
Tensor operator+(const Tensor& a, const Tensor& b);

using Spaces = std::vector<const SimplicialSet*>;

Tensor tensor(const Chain& a, const Chain& b);
Tensor tensor(const Tensor& a, const Chain& b);
Tensor tensor_boundary(const Spaces& X, const Tensor& t);
// a ⊗ b -> (-1)^{|a||b|} b ⊗ a on two-factor tensors
Tensor twist(const Tensor& t);
// (u ⊗ v) ⊗ w regrouped from a two-factor tensor whose first factor is a pair tensor
Tensor apply_factor(const Tensor& t, std::size_t pos, const std::function<Tensor(const Simplex&)>& f);
Tensor map_factor(const Tensor& t, std::size_t pos, const std::function<Chain(const Simplex&)>& f);
Scalar evaluate(const std::vector<Cochain>& cs, const Tensor& t);

struct ShuffleTerm {
    std::vector<int> mu, nu;
    int sign;
};
const std::vector<ShuffleTerm>& shuffles(int m, int n);

// Eilenberg-Zilber operators on C(X x Y)
Chain shuffle(const Product& P, const Chain& a, const Chain& b);
Chain shuffle(const Product& P, const Tensor& t);
Tensor alexander_whitney(const Product& P, const Chain& c);
Chain ez_homotopy(const Product& P, const Chain& c);
Tensor steenrod(const Product& P, const Chain& c);
// Test hook: negates the Steenrod map
void set_steenrod_sign_flip(bool on);

// pair-level versions accumulating into out
void shuffle_pair(const Product& P, const Simplex& x, const Simplex& y, const Scalar& c, Chain& out);
void aw_pair(const SimplicialSet& X, const SimplicialSet& Y, const Simplex& x, const Simplex& y, const Scalar& c,
             Tensor& out);
void st_pair(const SimplicialSet& X, const SimplicialSet& Y, const Simplex& x, const Simplex& y, const Scalar& c,
             Tensor& out);

// Product structures
Cochain cup(const SimplicialSet& X, const Cochain& a, const Cochain& b, const Ring& R);
Cochain cup1(const SimplicialSet& X, const Cochain& a, const Cochain& b, const Ring& R);
Cochain cross(const Product& P, const Cochain& a, const Cochain& b, const Ring& R);
Cochain cross1(const Product& P, const Cochain& a, const Cochain& b, const Ring& R);
// (1 ⊗ γ) Δ_M with Δ_M = (1 ⊗ p) AW Δ
Chain cap(const SpaceOverBase& Y, const Cochain& g, const Chain& m);
Chain cap(const SimplicialSet& X, const Cochain& g, const Chain& m);
// simplex swap X x Y -> Y x X
Chain swap_product(const Product& P, const Product& Q, const Chain& c);

}  // namespace eqt
