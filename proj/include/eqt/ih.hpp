#pragma once

#include "eqt/torus.hpp"

namespace eqt {

// Graded subset given by a predicate on nondegenerate simplices; a degenerate
// simplex belongs to it when its nondegenerate root does.
struct AllowableSubset {
    std::function<bool(const Simplex&)> member;
    bool contains(const Simplex& s) const { return member(s.generator()); }
};

AllowableSubset all_simplices();
AllowableSubset subcomplex_subset(const FiniteSpace& X, const std::vector<std::string>& names);

struct ClosureReport {
    bool ok = true;
    std::string witness;
};
// Stability under all degeneracies and the last face, exhaustively up to max_degree
ClosureReport check_allowable_closure(const SimplicialSet& X, const AllowableSubset& V, int max_degree);

struct Perversity {
    std::vector<int> p{0};
    int operator[](int k) const;
    std::string validate() const;
    static Perversity zero() { return {}; }
    // p_k = floor((k - 2) / 2) for k >= 2
    static Perversity middle(int top);
    // p_k = k - 2
    static Perversity top(int top);
};

// Filtration by stratum codimension labels on generators: X_k = label >= k
struct FilteredSpace {
    std::shared_ptr<const FiniteSpace> X;
    std::vector<int> label;
    // empty on success, otherwise the offending generator and reason
    std::string validate() const;
    int vertex_label(const Simplex& s, int i) const;
    // dimension of the X_k-part of s, -1 when empty
    int part_dim(const Simplex& s, int k) const;
    int max_label() const;
};

AllowableSubset allowable_from_perversity(const FilteredSpace& F, const Perversity& p);

// C(V ⊂ X) as a sublattice of the normalized chains
struct IntersectionComplex : GradedComplex {
    FiniteChains ambient;
    Matrix embed;   // ambient x IC
    Matrix coords;  // IC x ambient, coords * embed = 1
    bool contains(const std::vector<Scalar>& v) const;
    // restriction of an ambient operator that preserves the sublattice; empty optional otherwise
    bool restrict_operator(const Matrix& op, Matrix& out) const;
};

IntersectionComplex intersection_complex(const SimplicialSet& X, const AllowableSubset& V, const Ring& R,
                                         int max_degree);

// t-side: S ⊗_v C(V ⊂ X); h-side: C(W ⊂ Y) ⊗_t Λ
TComplex equivariant_ih_t(const Torus& T, const TSpace& X, const AllowableSubset& V, int max_degree);
HComplex equivariant_ih_h(const Torus& T, const SpaceOverBase& Y, const AllowableSubset& W, int max_degree);

}  // namespace eqt
