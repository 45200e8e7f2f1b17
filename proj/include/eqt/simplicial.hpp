#pragma once

#include "eqt/coeff.hpp"

#include <compare>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace eqt {

using Key = std::vector<std::int64_t>;
// s_{j_q} ... s_{j_1}, stored as {j_q, ..., j_1}, strictly decreasing
using Word = std::vector<int>;

struct Simplex {
    Word word;
    int gdim = 0;
    Key key;

    int dim() const { return gdim + static_cast<int>(word.size()); }
    bool degenerate() const { return !word.empty(); }
    Simplex generator() const { return {{}, gdim, key}; }

    auto operator<=>(const Simplex& o) const
    {
        if (auto c = dim() <=> o.dim(); c != 0)
            return c;
        if (auto c = key <=> o.key; c != 0)
            return c;
        if (auto c = gdim <=> o.gdim; c != 0)
            return c;
        return word <=> o.word;
    }
    bool operator==(const Simplex& o) const = default;
};

// s_a applied to a word in normal form
Word compose_degeneracy(const Word& w, int a);
bool valid_word(const Word& w, int dim);

class SimplicialSet {
public:
    virtual ~SimplicialSet() = default;

    // i-th face of a nondegenerate generator
    virtual Simplex face_gen(int gdim, const Key& key, int i) const = 0;
    virtual bool finite() const { return false; }
    // nondegenerate simplices of degree n
    virtual std::vector<Simplex> generators(int n) const;
    virtual std::string name() const { return "space"; }
    virtual std::string describe(const Simplex& s) const;

    Simplex face(const Simplex& s, int i) const;
    Simplex degeneracy(const Simplex& s, int i) const;
    // d_i o d_{i+1} o ... o d_j, identity when i > j
    Simplex faces(const Simplex& s, int i, int j) const;
    Simplex last_face(const Simplex& s) const { return face(s, s.dim()); }
    Simplex apply_word(const Simplex& s, const Word& w) const;
    // all simplices (degenerate included) of degree n, finite spaces only
    std::vector<Simplex> all_simplices(int n) const;
    Simplex vertex(const Simplex& s, int k) const;
};

using SpacePtr = std::shared_ptr<const SimplicialSet>;

// Key encoding of simplices inside composite keys
void encode_simplex(const Simplex& s, Key& out);
Simplex decode_simplex(const Key& k, std::size_t& pos);

// Spaces defined by face/degeneracy rules on raw simplices.
class RawSpace : public SimplicialSet {
public:
    virtual Key raw_face(const Key& x, int n, int i) const = 0;
    virtual Key raw_deg(const Key& x, int n, int i) const = 0;
    virtual bool raw_degenerate_at(const Key& x, int n, int i) const;

    Simplex normalize(const Key& raw, int n) const;
    Key realize(const Simplex& s) const;
    Simplex face_gen(int gdim, const Key& key, int i) const override;
};

// Δ[n]: raw simplices are nondecreasing vertex lists
class StandardSimplex : public RawSpace {
public:
    explicit StandardSimplex(int n) : n_(n) {}
    Key raw_face(const Key& x, int n, int i) const override;
    Key raw_deg(const Key& x, int n, int i) const override;
    bool raw_degenerate_at(const Key& x, int n, int i) const override { return x[i] == x[i + 1]; }
    bool finite() const override { return true; }
    std::vector<Simplex> generators(int n) const override;
    std::string name() const override { return "D[" + std::to_string(n_) + "]"; }
    std::string describe(const Simplex& s) const override;
    int top() const { return n_; }

private:
    int n_;
};

// Table-backed finite simplicial set
class FiniteSpace : public SimplicialSet {
public:
    struct Gen {
        std::string name;
        int dim = 0;
        std::vector<Simplex> faces;
    };
    // faces refer to generator ids by key {id}; throws on dangling references
    // and on violated simplicial identities
    explicit FiniteSpace(std::vector<Gen> gens, std::string name = "finite");

    Simplex face_gen(int gdim, const Key& key, int i) const override;
    bool finite() const override { return true; }
    std::vector<Simplex> generators(int n) const override;
    std::string name() const override { return name_; }
    std::string describe(const Simplex& s) const override;
    int max_dim() const;
    const std::vector<Gen>& gens() const { return gens_; }
    Simplex gen(std::size_t id) const { return {{}, gens_.at(id).dim, {static_cast<std::int64_t>(id)}}; }
    std::size_t id_of(const std::string& name) const;

private:
    std::vector<Gen> gens_;
    std::string name_;
};

class IdentityViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exhaustive check of d_i d_j = d_{j-1} d_i on generators up to maxDim; returns
// an empty string or a witness description
std::string check_face_identities(const SimplicialSet& X, int maxDim);

// Cartesian product; nondegenerate pairs with no common degeneracy
class Product : public SimplicialSet {
public:
    Product(SpacePtr x, SpacePtr y) : x_(std::move(x)), y_(std::move(y)) {}
    Simplex face_gen(int gdim, const Key& key, int i) const override;
    bool finite() const override { return x_->finite() && y_->finite(); }
    std::vector<Simplex> generators(int n) const override;
    std::string name() const override { return "(" + x_->name() + "x" + y_->name() + ")"; }
    std::string describe(const Simplex& s) const override;

    Simplex make(const Simplex& x, const Simplex& y) const;
    std::pair<Simplex, Simplex> components(const Simplex& s) const;
    const SimplicialSet& left() const { return *x_; }
    const SimplicialSet& right() const { return *y_; }
    SpacePtr left_ptr() const { return x_; }
    SpacePtr right_ptr() const { return y_; }

protected:
    SpacePtr x_, y_;
};

// Simplicial groups described on raw simplices
class SimplicialGroup : public RawSpace {
public:
    virtual Key mul(const Key& a, const Key& b, int n) const = 0;
    virtual Key inv(const Key& a, int n) const = 0;
    virtual Key one(int n) const = 0;
};
using GroupPtr = std::shared_ptr<const SimplicialGroup>;

// (B Z)^r, or (B Z/m)^r when m > 0; degree-k elements are r x k integer matrices
class NerveGroup : public SimplicialGroup {
public:
    NerveGroup(int r, std::int64_t m = 0) : r_(r), m_(m) {}
    Key raw_face(const Key& x, int n, int i) const override;
    Key raw_deg(const Key& x, int n, int i) const override;
    bool raw_degenerate_at(const Key& x, int n, int i) const override;
    Key mul(const Key& a, const Key& b, int n) const override;
    Key inv(const Key& a, int n) const override;
    Key one(int n) const override { return Key(static_cast<std::size_t>(r_ * n), 0); }
    bool finite() const override { return m_ > 0; }
    std::vector<Simplex> generators(int n) const override;
    std::string name() const override;
    std::string describe(const Simplex& s) const override;
    int rank() const { return r_; }
    std::int64_t modulus() const { return m_; }
    std::int64_t entry(const Key& x, int n, int row, int col) const { return x[static_cast<std::size_t>(row * n + col)]; }
    // loop with 1 in row i
    Simplex loop(int i) const;
    std::int64_t reduce(std::int64_t v) const;

private:
    int r_;
    std::int64_t m_;
};

using Action = std::function<Simplex(const Key& g, int n, const Simplex& x)>;
using TwistFn = std::function<Key(const Simplex& b)>;

// B x_tau F: only the last face differs from the product
class TwistedProduct : public Product {
public:
    TwistedProduct(SpacePtr base, SpacePtr fibre, TwistFn tau, Action act)
        : Product(std::move(base), std::move(fibre)), tau_(std::move(tau)), act_(std::move(act)) {}
    Simplex face_gen(int gdim, const Key& key, int i) const override;
    std::string name() const override { return "(" + x_->name() + "x_t" + y_->name() + ")"; }
    const TwistFn& tau() const { return tau_; }
    const Action& action() const { return act_; }

private:
    TwistFn tau_;
    Action act_;
};

Action trivial_action();
Action left_translation(GroupPtr G);

// Normalized chains
class Chain {
public:
    Chain() = default;
    explicit Chain(Ring R) : R_(R) {}
    Chain(Ring R, const Simplex& s, const Scalar& c = 1) : R_(R) { add(s, c); }

    void add(const Simplex& s, const Scalar& c);
    void add(const Chain& o, const Scalar& c = 1);
    Chain scaled(const Scalar& c) const;
    bool is_zero() const { return t_.empty(); }
    const std::map<Simplex, Scalar>& terms() const& { return t_; }
    std::map<Simplex, Scalar> terms() && { return std::move(t_); }
    const Ring& ring() const { return R_; }
    Scalar coeff(const Simplex& s) const;
    bool operator==(const Chain& o) const { return t_ == o.t_; }
    std::string to_string(const SimplicialSet& X) const;

private:
    Ring R_;
    std::map<Simplex, Scalar> t_;
};

Chain operator-(const Chain& a, const Chain& b);
Chain operator+(const Chain& a, const Chain& b);

Chain boundary(const SimplicialSet& X, const Chain& c);
Chain map_chain(const Chain& c, const std::function<Simplex(const Simplex&)>& f);
Chain linear(const Chain& c, const std::function<Chain(const Simplex&)>& f);

// Cochains are functionals; they vanish on degenerate simplices
struct Cochain {
    int degree = 0;
    std::function<Scalar(const Simplex&)> f;

    Scalar operator()(const Simplex& s) const
    {
        if (s.degenerate() || s.dim() != degree)
            return 0;
        return f(s);
    }
    Scalar pair(const Chain& c) const;
};

Cochain memoize(Cochain c);
Cochain coboundary(const SimplicialSet& X, const Cochain& g, const Ring& R);
Cochain pullback(const Cochain& g, std::function<Simplex(const Simplex&)> p);
Cochain linear_combination(const std::vector<std::pair<Scalar, Cochain>>& terms, const Ring& R);
Cochain unit_cochain();
Cochain zero_cochain(int degree);

// Space over a base: projection rule on simplices
struct SpaceOverBase {
    SpacePtr total;
    SpacePtr base;
    std::function<Simplex(const Simplex&)> p;
};

std::string check_projection(const SpaceOverBase& Y, int maxDim);

}  // namespace eqt
