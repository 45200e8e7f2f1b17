#include "eqt/torus.hpp"

#include <algorithm>

namespace eqt {

namespace {

int parity_sign(long k)
{
    return k % 2 ? -1 : 1;
}

Mask top_bit(Mask pi)
{
    Mask t = 1;
    while (pi >> 1) {
        pi >>= 1;
        t <<= 1;
    }
    return t;
}

Chain right_mul_bundle(const UniversalBundle& E, const Chain& c, const Chain& g)
{
    Product P(E.total(), E.group_ptr());
    Chain sh = shuffle(P, c, g);
    const auto& G = E.group();
    return map_chain(sh, [&](const Simplex& s) {
        auto [e, h] = P.components(s);
        return E.right_act(e, G.realize(h));
    });
}

// concatenates the rows of circle-bundle simplices into one simplex of ET
Simplex combine_circles(const UniversalBundle& circle, const UniversalBundle& E, const std::vector<Simplex>& parts)
{
    int n = parts.front().dim();
    const auto& B1 = *circle.base();
    std::vector<std::vector<Key>> levels;
    for (const Simplex& s : parts)
        levels.push_back(B1.split(circle.to_bar(s)));
    std::vector<Key> out;
    for (int k = 0; k <= n; ++k) {
        Key g;
        for (auto& lv : levels)
            g.insert(g.end(), lv[static_cast<std::size_t>(k)].begin(), lv[static_cast<std::size_t>(k)].end());
        out.push_back(g);
    }
    return E.from_bar(BarSpace::join(out), n);
}

}  // namespace

void add_to(LambdaChain& a, const Simplex& s, Mask m, const Scalar& v, const Ring& R)
{
    if (s.degenerate())
        return;
    auto key = std::make_pair(s, m);
    Scalar w = R.normalize(a[key] + v);
    if (w == 0)
        a.erase(key);
    else
        a[key] = w;
}

Torus::Torus(int r, Ring R)
    : r_(r), R_(R), T_(std::make_shared<NerveGroup>(r)), E_(T_),
      circle_(std::make_shared<UniversalBundle>(std::make_shared<NerveGroup>(1)))
{
}

Simplex Torus::b0(int n) const
{
    Simplex b = BT().normalize(Key{}, 0);
    for (int k = 0; k < n; ++k)
        b = BT().degeneracy(b, 0);
    return b;
}

Chain Torus::pontryagin(const Chain& a, const Chain& b) const
{
    Product P(T_, T_);
    Chain sh = shuffle(P, a, b);
    return map_chain(sh, [&](const Simplex& s) {
        auto [g, h] = P.components(s);
        int n = s.dim();
        return T_->normalize(T_->mul(T_->realize(g), T_->realize(h), n), n);
    });
}

Chain Torus::right_mul(const Chain& c, const Chain& g) const
{
    return right_mul_bundle(E_, c, g);
}

Chain Torus::loops(Mask pi) const
{
    Chain acc(R_, T_->normalize(T_->one(0), 0));
    for (int i : elements(pi))
        acc = pontryagin(acc, Chain(R_, loop(i)));
    return acc;
}

Cochain Torus::chi(int i) const
{
    const Torus* self = this;
    return {1, [self, i](const Simplex& e) {
                auto g = self->ET().components(e).second;
                return Scalar(self->T_->entry(self->T_->realize(g), 1, i, 0));
            }};
}

Cochain Torus::xi_prime(int i) const
{
    const Torus* self = this;
    return {2, [self, i](const Simplex& b) {
                auto parts = self->BT().split(self->BT().realize(b));
                return Scalar(self->T_->entry(parts[1], 1, i, 0));
            }};
}

Cochain Torus::xi_prime(Mask pi) const
{
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = xi_.find(pi);
        if (it != xi_.end())
            return it->second;
    }
    Cochain c;
    if (popcount(pi) == 1) {
        c = xi_prime(elements(pi).front());
    } else {
        Mask hi = top_bit(pi);
        c = cup1(BT(), xi_prime(hi), xi_prime(pi & ~hi), R_);
    }
    c = memoize(c);
    std::lock_guard<std::mutex> lock(mtx_);
    return xi_.emplace(pi, c).first->second;
}

Cochain Torus::pull(const Cochain& a) const
{
    const Torus* self = this;
    return pullback(a, [self](const Simplex& e) { return self->project(e); });
}

Cochain Torus::chi(Mask pi) const
{
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = chi_.find(pi);
        if (it != chi_.end())
            return it->second;
    }
    Cochain c;
    if (popcount(pi) == 1) {
        c = chi(elements(pi).front());
    } else {
        Mask hi = top_bit(pi);
        Cochain u = cup1(ET(), chi(hi), pull(xi_prime(pi & ~hi)), R_);
        c = linear_combination({{parity_sign(popcount(pi)), u}}, R_);
    }
    c = memoize(c);
    std::lock_guard<std::mutex> lock(mtx_);
    return chi_.emplace(pi, c).first->second;
}

Cochain Torus::zeta(Mask pi) const
{
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = zeta_.find(pi);
        if (it != zeta_.end())
            return it->second;
    }
    Cochain c;
    if (pi == 0) {
        c = unit_cochain();
    } else {
        Mask hi = top_bit(pi);
        std::vector<std::pair<Scalar, Cochain>> terms;
        for (Mask mu : subsets_of(pi)) {
            if (!(mu & hi))
                continue;
            Mask nu = pi & ~mu;
            terms.push_back({shuffle_sign(nu, mu), cup(ET(), chi(mu), zeta(nu), R_)});
        }
        c = linear_combination(terms, R_);
    }
    c = memoize(c);
    std::lock_guard<std::mutex> lock(mtx_);
    return zeta_.emplace(pi, c).first->second;
}

Chain Torus::f_circle(int l, int eps) const
{
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = f1_.find({l, eps});
        if (it != f1_.end())
            return it->second;
    }
    const auto& C = *circle_;
    Chain out;
    if (eps == 1) {
        out = right_mul_bundle(C, f_circle(l, 0), Chain(R_, Simplex{{}, 1, Key{1}}));
    } else if (l == 0) {
        out = Chain(R_, C.basepoint());
    } else {
        out = C.cone(f_circle(l - 1, 1));
    }
    std::lock_guard<std::mutex> lock(mtx_);
    return f1_.emplace(std::make_pair(l, eps), out).first->second;
}

Chain Torus::f(const Multi& alpha, Mask pi) const
{
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = f_.find({alpha, pi});
        if (it != f_.end())
            return it->second;
    }
    Chain out(R_);
    if (r_ == 0) {
        out.add(e0(), 1);
    } else {
        // iterated shuffle over the circle factors
        std::vector<std::shared_ptr<const SimplicialSet>> levels;
        SpacePtr E1 = circle_->total();
        levels.push_back(E1);
        Chain acc = f_circle(alpha[0], pi & 1);
        for (int i = 1; i < r_; ++i) {
            auto P = std::make_shared<Product>(levels.back(), E1);
            acc = shuffle(*P, acc, f_circle(alpha[static_cast<std::size_t>(i)], pi >> i & 1));
            levels.push_back(P);
        }
        for (const auto& [s, v] : acc.terms()) {
            std::vector<Simplex> parts(static_cast<std::size_t>(r_));
            Simplex cur = s;
            for (int i = r_ - 1; i >= 1; --i) {
                auto& P = static_cast<const Product&>(*levels[static_cast<std::size_t>(i)]);
                auto [l, y] = P.components(cur);
                parts[static_cast<std::size_t>(i)] = y;
                cur = l;
            }
            parts[0] = cur;
            out.add(combine_circles(*circle_, E_, parts), v);
        }
    }
    std::lock_guard<std::mutex> lock(mtx_);
    return f_.emplace(std::make_pair(alpha, pi), out).first->second;
}

std::map<Mask, Scalar> Torus::h_hat(const Simplex& e) const
{
    std::map<Mask, Scalar> out;
    int n = e.dim();
    if (n > r_)
        return out;
    for (Mask pi : subsets_of((Mask(1) << r_) - 1)) {
        if (popcount(pi) != n)
            continue;
        Scalar v = zeta(pi)(e);
        if (v != 0)
            out[pi] = v;
    }
    return out;
}

Key Torus::random_element(int n, std::mt19937_64& rng, int box) const
{
    std::uniform_int_distribution<int> d(-box, box);
    Key k(static_cast<std::size_t>(r_ * n));
    for (auto& v : k)
        v = d(rng);
    return k;
}

Simplex Torus::random_T(int n, std::mt19937_64& rng, int box) const
{
    return T_->normalize(random_element(n, rng, box), n);
}

Simplex Torus::random_BT(int n, std::mt19937_64& rng, int box, bool nondegenerate) const
{
    for (int tries = 0;; ++tries) {
        std::vector<Key> parts;
        for (int k = 0; k < n; ++k)
            parts.push_back(random_element(k, rng, box));
        Simplex b = BT().normalize(BarSpace::join(parts), n);
        if (!nondegenerate || !b.degenerate() || tries > 200)
            return b;
    }
}

Simplex Torus::random_ET(int n, std::mt19937_64& rng, int box, bool nondegenerate) const
{
    for (int tries = 0;; ++tries) {
        std::vector<Key> parts;
        for (int k = 0; k <= n; ++k)
            parts.push_back(random_element(k, rng, box));
        Simplex e = E_.from_bar(BarSpace::join(parts), n);
        if (!nondegenerate || !e.degenerate() || tries > 200)
            return e;
    }
}

TSpace point_tspace()
{
    auto X = std::make_shared<FiniteSpace>(std::vector<FiniteSpace::Gen>{{"pt", 0, {}}}, "pt");
    TSpace t;
    t.X = X;
    t.act = trivial_action();
    t.trivial = true;
    t.name = "pt";
    t.sample = [X](int n, std::mt19937_64&) {
        Simplex s = X->gen(0);
        for (int k = 0; k < n; ++k)
            s = X->degeneracy(s, 0);
        return s;
    };
    return t;
}

TSpace trivial_tspace(std::shared_ptr<const FiniteSpace> X)
{
    TSpace t;
    t.X = X;
    t.act = trivial_action();
    t.trivial = true;
    t.name = X->name();
    t.sample = [X](int n, std::mt19937_64& rng) {
        std::vector<std::size_t> ids;
        for (std::size_t i = 0; i < X->gens().size(); ++i)
            if (X->gens()[i].dim <= n)
                ids.push_back(i);
        Simplex s = X->gen(ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng)]);
        while (s.dim() < n)
            s = X->degeneracy(s, std::uniform_int_distribution<int>(0, s.dim())(rng));
        return s;
    };
    return t;
}

TSpace torus_tspace(const Torus& T)
{
    TSpace t;
    t.X = T.T_ptr();
    t.act = left_translation(T.T_ptr());
    t.name = "T";
    const Torus* tp = &T;
    t.sample = [tp](int n, std::mt19937_64& rng) { return tp->random_T(n, rng); };
    return t;
}

TSpace cyclic_tspace(const Torus& T, std::int64_t m)
{
    auto X = std::make_shared<NerveGroup>(T.rank(), m);
    TSpace t;
    t.X = X;
    t.act = [X](const Key& g, int n, const Simplex& x) {
        Key h = g;
        for (auto& v : h)
            v = X->reduce(v);
        return X->normalize(X->mul(h, X->realize(x), n), n);
    };
    t.name = "B(Z/" + std::to_string(m) + ")";
    t.sample = [X, m](int n, std::mt19937_64& rng) {
        std::uniform_int_distribution<std::int64_t> d(0, m - 1);
        Key k(static_cast<std::size_t>(X->rank() * n));
        for (auto& v : k)
            v = d(rng);
        return X->normalize(k, n);
    };
    return t;
}

Chain sweep(const Torus& T, const TSpace& X, Mask pi, const Chain& c)
{
    if (X.trivial && pi)
        return Chain(c.ring());
    Product P(T.T_ptr(), X.X);
    Chain sh = shuffle(P, T.loops(pi), c);
    return map_chain(sh, [&](const Simplex& s) {
        auto [g, x] = P.components(s);
        return X.act(T.T().realize(g), s.dim(), x);
    });
}

std::shared_ptr<const TwistedProduct> borel(const Torus& T, const TSpace& X)
{
    auto bt = T.bundle().base();
    return std::make_shared<TwistedProduct>(bt, X.X, [bt](const Simplex& b) { return bt->tau(b); }, X.act);
}

SpaceOverBase borel_over_BT(const Torus& T, std::shared_ptr<const TwistedProduct> B)
{
    return {B, T.BT_ptr(), [B](const Simplex& s) { return B->components(s).first; }};
}

Simplex q_map(const Torus& T, const TSpace& X, const TwistedProduct& borelX, const Simplex& ex)
{
    Product P(T.ET_ptr(), X.X);
    auto [e, x] = P.components(ex);
    auto [b, g] = T.ET().components(e);
    return borelX.make(b, X.act(T.T().realize(g), ex.dim(), x));
}

Chain psi(const Torus& T, const TSpace& X, const TwistedProduct& borelX, const Multi& alpha, const Chain& c)
{
    Product P(T.ET_ptr(), X.X);
    Chain sh = shuffle(P, T.f(alpha, 0), c);
    return map_chain(sh, [&](const Simplex& s) {
        auto [e, x] = P.components(s);
        auto [b, g] = T.ET().components(e);
        return borelX.make(b, X.act(T.T().realize(g), s.dim(), x));
    });
}

std::shared_ptr<const TwistedProduct> pullback(const Torus& T, const SpaceOverBase& Y)
{
    auto bt = T.bundle().base();
    auto p = Y.p;
    return std::make_shared<TwistedProduct>(
        Y.total, T.T_ptr(), [bt, p](const Simplex& y) { return bt->tau(p(y)); }, left_translation(T.T_ptr()));
}

TSpace pullback_tspace(const Torus& T, std::shared_ptr<const TwistedProduct> hY)
{
    TSpace t;
    t.X = hY;
    auto G = T.T_ptr();
    t.act = [G, hY](const Key& h, int n, const Simplex& s) {
        auto [y, g] = hY->components(s);
        return hY->make(y, G->normalize(G->mul(G->realize(g), G->inv(h, n), n), n));
    };
    t.name = "h" + hY->left().name();
    return t;
}

Chain right_mul_fibre(const Torus& T, const TwistedProduct& hY, const Chain& c, const Chain& g)
{
    std::shared_ptr<const SimplicialSet> hp(&hY, [](const SimplicialSet*) {});
    Product P(hp, T.T_ptr());
    Chain sh = shuffle(P, c, g);
    const auto& G = T.T();
    return map_chain(sh, [&](const Simplex& s) {
        auto [a, h] = P.components(s);
        auto [y, k] = hY.components(a);
        int n = s.dim();
        return hY.make(y, G.normalize(G.mul(G.realize(k), G.realize(h), n), n));
    });
}

Simplex adjunction_P(const Torus& T, const TSpace& X, const TwistedProduct& htX, const Simplex& s)
{
    int n = s.dim();
    auto [bx, g] = htX.components(s);
    const auto& tX = static_cast<const TwistedProduct&>(htX.left());
    Simplex x = tX.components(bx).second;
    return X.act(T.T().inv(T.T().realize(g), n), n, x);
}

Simplex adjunction_I(const Torus& T, const SpaceOverBase& Y, const TwistedProduct& hY, const TwistedProduct& thY,
                     const Simplex& y)
{
    int n = y.dim();
    Simplex one = T.T().normalize(T.T().one(n), n);
    return thY.make(Y.p(y), hY.make(y, one));
}

Simplex adjunction_J(const TwistedProduct& hY, const TwistedProduct& thY, const Simplex& s)
{
    return hY.components(thY.components(s).second).first;
}

LambdaChain phi(const Torus& T, const SpaceOverBase& Y, const TwistedProduct& hY, const Chain& c)
{
    LambdaChain out;
    const Ring& R = c.ring();
    for (const auto& [s, v] : c.terms()) {
        auto [y, g] = hY.components(s);
        Simplex e = T.ET().make(Y.p(y), g);
        int n = s.dim();
        for (int i = 0; i <= n; ++i) {
            Simplex front = Y.total->faces(y, i + 1, n);
            if (front.degenerate())
                continue;
            Simplex back = T.ET().faces(e, 0, i - 1);
            for (auto& [pi, z] : T.h_hat(back))
                add_to(out, front, pi, v * z, R);
        }
    }
    return out;
}

LambdaChain h_differential(const Torus& T, const SpaceOverBase& Y, const LambdaChain& a)
{
    LambdaChain out;
    const Ring& R = T.ring();
    Mask full = (Mask(1) << T.rank()) - 1;
    for (const auto& [key, v] : a) {
        auto& [m, pi] = key;
        Chain single(R, m);
        for (const auto& [x, w] : boundary(*Y.total, single).terms())
            add_to(out, x, pi, v * w, R);
        for (Mask mu : subsets_of(full & ~pi)) {
            if (!mu)
                continue;
            int s = shuffle_sign(mu, pi) * parity_sign(static_cast<long>(popcount(mu)) * m.dim());
            for (const auto& [x, w] : cap(Y, T.xi_prime(mu), single).terms())
                add_to(out, x, mu | pi, s * v * w, R);
        }
    }
    return out;
}

std::map<Multi, Scalar> psi_pt_star(const Torus& T, const Cochain& a, int max_total)
{
    std::map<Multi, Scalar> out;
    if (a.degree % 2)
        return out;
    for (const Multi& alpha : multi_indices(T.rank(), max_total)) {
        if (2 * total(alpha) != a.degree)
            continue;
        Chain pf = map_chain(T.f(alpha, 0), [&](const Simplex& e) { return T.project(e); });
        Scalar v = T.ring().normalize(a.pair(pf));
        if (v != 0)
            out[alpha] = v;
    }
    return out;
}

std::vector<Scalar> FiniteChains::vec(const Chain& c) const
{
    std::vector<Scalar> v(size(), 0);
    for (const auto& [s, w] : c.terms())
        v.at(index.at(s)) = w;
    return v;
}

Chain FiniteChains::chain(const std::vector<Scalar>& v) const
{
    Chain c(R);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            c.add(basis[i], v[i]);
    return c;
}

FiniteChains finite_chains(const SimplicialSet& X, int max_degree, const Ring& R)
{
    FiniteChains C;
    C.R = R;
    for (int n = 0; n <= max_degree; ++n)
        for (const Simplex& s : X.generators(n)) {
            C.index[s] = C.basis.size();
            C.basis.push_back(s);
            C.deg.push_back(n);
            C.labels.push_back(X.describe(s));
        }
    C.d = chain_operator(C, [&](const Simplex& s) { return boundary(X, Chain(R, s)); });
    return C;
}

Matrix chain_operator(const FiniteChains& C, const std::function<Chain(const Simplex&)>& op)
{
    Matrix M(C.size(), C.size());
    for (std::size_t j = 0; j < C.size(); ++j)
        for (const auto& [s, v] : op(C.basis[j]).terms()) {
            auto it = C.index.find(s);
            if (it != C.index.end())
                M.add(it->second, j, v);
        }
    return M.reduced(C.R);
}

Matrix CartanModel::xi_action(int i, int n) const
{
    return induced_on_homology(*this, *this, xi[static_cast<std::size_t>(i)], -n, -n - 2);
}

LambdaModule chains_as_lambda_module(const Torus& T, const TSpace& X, const FiniteChains& C)
{
    LambdaModule N;
    static_cast<GradedComplex&>(N) = C;
    N.r = T.rank();
    for (int i = 0; i < T.rank(); ++i) {
        Multi a(T.rank(), 0);
        a[i] = 1;
        N.c[a] = chain_operator(C, [&](const Simplex& s) { return sweep(T, X, Mask(1) << i, Chain(C.R, s)); });
    }
    return N;
}

CartanModel cartan_model(const Torus& T, const TSpace& X, int max_degree)
{
    CartanModel M;
    M.R = T.ring();
    M.r = T.rank();
    int top = max_degree + 1;
    M.chains = finite_chains(*X.X, top, M.R);
    const FiniteChains& C = M.chains;
    LambdaModule L = chains_as_lambda_module(T, X, C);
    for (auto& [a, x] : L.c)
        if (!x.is_zero())
            M.twist_vanishes = false;
    for (const Multi& a : multi_indices(M.r, top / 2))
        for (std::size_t j = 0; j < C.size(); ++j) {
            int d = 2 * total(a) + C.deg[j];
            if (d > top)
                continue;
            M.index[{a, j}] = M.keys.size();
            M.keys.push_back({a, j});
            M.deg.push_back(-d);
            M.labels.push_back(monomial_name(a, "xi") + "(x)" + C.labels[j] + "*");
        }
    std::size_t n = M.keys.size();
    M.d = Matrix(n, n);
    // columns of the transposed operators, indexed by source basis element
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> dT(C.size());
    for (auto& [key, v] : C.d.entries())
        dT[key.first].push_back({key.second, v});
    std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>> xT(static_cast<std::size_t>(M.r),
                                                                          std::vector<std::vector<std::pair<std::size_t, Scalar>>>(C.size()));
    for (int i = 0; i < M.r; ++i)
        for (auto& [key, v] : L.action(i).entries())
            xT[static_cast<std::size_t>(i)][key.first].push_back({key.second, v});
    for (std::size_t k = 0; k < n; ++k) {
        auto& [a, j] = M.keys[k];
        int q = C.deg[j];
        Scalar s = -parity_sign(q);
        for (auto& [jj, v] : dT[j]) {
            auto it = M.index.find({a, jj});
            if (it != M.index.end())
                M.d.add(it->second, k, s * v);
        }
        for (int i = 0; i < M.r; ++i) {
            Multi b = a;
            ++b[static_cast<std::size_t>(i)];
            for (auto& [jj, v] : xT[static_cast<std::size_t>(i)][j]) {
                auto it = M.index.find({b, jj});
                if (it != M.index.end())
                    M.d.add(it->second, k, s * v);
            }
        }
    }
    M.d = M.d.reduced(M.R);
    for (int i = 0; i < M.r; ++i) {
        Matrix x(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            Multi b = M.keys[k].first;
            ++b[static_cast<std::size_t>(i)];
            auto it = M.index.find({b, M.keys[k].second});
            if (it != M.index.end())
                x.set(it->second, k, 1);
        }
        M.xi.push_back(x);
    }
    return M;
}

SpaceOverBase MappedSpace::over(const Torus& T) const
{
    auto Yp = Y;
    auto img = image;
    auto bt = T.bundle().base();
    return {Y, bt, [Yp, img, bt](const Simplex& y) {
                Simplex b = bt->normalize(img.at(static_cast<std::size_t>(y.key.at(0))), y.gdim);
                return bt->apply_word(b, y.word);
            }};
}

std::string MappedSpace::validate(const Torus& T) const
{
    if (image.size() != Y->gens().size())
        return "map-to-BT does not cover every generator";
    SpaceOverBase O = over(T);
    for (std::size_t id = 0; id < image.size(); ++id) {
        Simplex y = Y->gen(id);
        Simplex b = O.p(y);
        if (b.dim() != y.dim())
            return "image of " + Y->gens()[id].name + " has the wrong dimension";
        for (int i = 0; i <= y.dim() && y.dim() > 0; ++i)
            if (!(T.BT().face(b, i) == O.p(Y->face(y, i))))
                return "map-to-BT is not simplicial at face " + std::to_string(i) + " of " + Y->gens()[id].name;
    }
    return "";
}

SComodule chains_as_s_comodule(const Torus& T, const SpaceOverBase& Y, const FiniteChains& C)
{
    SComodule M;
    static_cast<GradedComplex&>(M) = C;
    M.r = T.rank();
    for (Mask pi : subsets_of((Mask(1) << T.rank()) - 1)) {
        if (!pi)
            continue;
        Cochain g = T.xi_prime(pi);
        M.gamma[pi] = chain_operator(C, [&](const Simplex& s) { return cap(Y, g, Chain(C.R, s)); });
    }
    return M;
}

HComplex h_model(const Torus& T, const SpaceOverBase& Y, int max_degree)
{
    FiniteChains C = finite_chains(*Y.total, max_degree + 1, T.ring());
    return h_functor(chains_as_s_comodule(T, Y, C));
}

Key TorusMap::apply(const Key& g, int n) const
{
    Key out(static_cast<std::size_t>(r_dst * n), 0);
    for (int k = 0; k < r_dst; ++k) {
        int s = src[static_cast<std::size_t>(k)];
        if (s < 0)
            continue;
        for (int c = 0; c < n; ++c)
            out[static_cast<std::size_t>(k * n + c)] = g[static_cast<std::size_t>(s * n + c)];
    }
    return out;
}

Simplex TorusMap::on_T(const Torus& A, const Torus& B, const Simplex& g) const
{
    int n = g.dim();
    return B.T().normalize(apply(A.T().realize(g), n), n);
}

Simplex TorusMap::on_BT(const Torus& A, const Torus& B, const Simplex& b) const
{
    auto parts = A.BT().split(A.BT().realize(b));
    for (std::size_t k = 0; k < parts.size(); ++k)
        parts[k] = apply(parts[k], static_cast<int>(k));
    return B.BT().normalize(BarSpace::join(parts), b.dim());
}

Simplex TorusMap::on_ET(const Torus& A, const Torus& B, const Simplex& e) const
{
    auto parts = A.BT().split(A.bundle().to_bar(e));
    for (std::size_t k = 0; k < parts.size(); ++k)
        parts[k] = apply(parts[k], static_cast<int>(k));
    return B.bundle().from_bar(BarSpace::join(parts), e.dim());
}

std::pair<Multi, int> TorusMap::on_S(const Multi& a) const
{
    Multi b(static_cast<std::size_t>(r_dst), 0);
    int hit = 0;
    for (int k = 0; k < r_dst; ++k)
        if (src[static_cast<std::size_t>(k)] >= 0) {
            b[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(src[static_cast<std::size_t>(k)])];
            hit += b[static_cast<std::size_t>(k)];
        }
    if (hit != total(a))
        return {b, 0};
    return {b, 1};
}

std::pair<Mask, int> TorusMap::on_Lambda(Mask pi) const
{
    std::vector<int> seq;
    for (int i : elements(pi)) {
        int k = -1;
        for (int j = 0; j < r_dst; ++j)
            if (src[static_cast<std::size_t>(j)] == i)
                k = j;
        if (k < 0)
            return {0, 0};
        seq.push_back(k);
    }
    long inv = 0;
    Mask m = 0;
    for (std::size_t a = 0; a < seq.size(); ++a) {
        m |= Mask(1) << seq[a];
        for (std::size_t b = a + 1; b < seq.size(); ++b)
            if (seq[a] > seq[b])
                ++inv;
    }
    return {m, parity_sign(inv)};
}

}  // namespace eqt
