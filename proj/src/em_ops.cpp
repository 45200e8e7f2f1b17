#include "eqt/em_ops.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

namespace eqt {

namespace {

int sgn(long k)
{
    return (k % 2 == 0) ? 1 : -1;
}

std::atomic<bool> st_flip{false};

bool any_degenerate(const std::vector<Simplex>& k)
{
    return std::any_of(k.begin(), k.end(), [](const Simplex& s) { return s.degenerate(); });
}

}  // namespace

void Tensor::add(const std::vector<Simplex>& k, const Scalar& c)
{
    if (any_degenerate(k))
        return;
    Scalar v = R_.normalize(c);
    if (v == 0)
        return;
    auto [it, fresh] = t_.emplace(k, v);
    if (!fresh) {
        it->second = R_.normalize(it->second + v);
        if (it->second == 0)
            t_.erase(it);
    }
}

void Tensor::add(const Tensor& o, const Scalar& c)
{
    for (const auto& [k, v] : o.t_)
        add(k, v * c);
}

Tensor operator-(const Tensor& a, const Tensor& b)
{
    Tensor r = a;
    r.add(b, -1);
    return r;
}

Tensor operator+(const Tensor& a, const Tensor& b)
{
    Tensor r = a;
    r.add(b, 1);
    return r;
}

Tensor tensor(const Chain& a, const Chain& b)
{
    Tensor r(a.ring());
    for (const auto& [x, u] : a.terms())
        for (const auto& [y, v] : b.terms())
            r.add({x, y}, u * v);
    return r;
}

Tensor tensor(const Tensor& a, const Chain& b)
{
    Tensor r(a.ring());
    for (const auto& [k, u] : a.terms())
        for (const auto& [y, v] : b.terms()) {
            auto kk = k;
            kk.push_back(y);
            r.add(kk, u * v);
        }
    return r;
}

Tensor tensor_boundary(const Spaces& X, const Tensor& t)
{
    Tensor r(t.ring());
    for (const auto& [k, v] : t.terms()) {
        int acc = 0;
        for (std::size_t p = 0; p < k.size(); ++p) {
            int n = k[p].dim();
            for (int i = 0; n > 0 && i <= n; ++i) {
                auto kk = k;
                kk[p] = X[p]->face(k[p], i);
                r.add(kk, v * sgn(i + acc));
            }
            acc += n;
        }
    }
    return r;
}

Tensor twist(const Tensor& t)
{
    Tensor r(t.ring());
    for (const auto& [k, v] : t.terms())
        r.add({k[1], k[0]}, v * sgn(static_cast<long>(k[0].dim()) * k[1].dim()));
    return r;
}

Tensor apply_factor(const Tensor& t, std::size_t pos, const std::function<Tensor(const Simplex&)>& f)
{
    Tensor r(t.ring());
    for (const auto& [k, v] : t.terms()) {
        Tensor img = f(k[pos]);
        for (const auto& [kk, w] : img.terms()) {
            std::vector<Simplex> key(k.begin(), k.begin() + static_cast<long>(pos));
            key.insert(key.end(), kk.begin(), kk.end());
            key.insert(key.end(), k.begin() + static_cast<long>(pos) + 1, k.end());
            r.add(key, v * w);
        }
    }
    return r;
}

Tensor map_factor(const Tensor& t, std::size_t pos, const std::function<Chain(const Simplex&)>& f)
{
    Tensor r(t.ring());
    for (const auto& [k, v] : t.terms()) {
        Chain img = f(k[pos]);
        for (const auto& [s, w] : img.terms()) {
            auto key = k;
            key[pos] = s;
            r.add(key, v * w);
        }
    }
    return r;
}

Scalar evaluate(const std::vector<Cochain>& cs, const Tensor& t)
{
    Scalar tot = 0;
    for (const auto& [k, v] : t.terms()) {
        Scalar x = v;
        long sign_exp = 0;
        int before = 0;
        for (std::size_t p = 0; p < k.size() && x != 0; ++p) {
            sign_exp += static_cast<long>(cs[p].degree) * before;
            x *= cs[p](k[p]);
            before += k[p].dim();
        }
        tot += x * sgn(sign_exp);
    }
    return t.ring().normalize(tot);
}

const std::vector<ShuffleTerm>& shuffles(int m, int n)
{
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::vector<ShuffleTerm>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({m, n});
    if (it != cache.end())
        return it->second;
    std::vector<ShuffleTerm> out;
    int N = m + n;
    std::vector<bool> pick(static_cast<std::size_t>(N), false);
    std::fill(pick.begin(), pick.begin() + m, true);
    do {
        ShuffleTerm s;
        for (int k = 0; k < N; ++k)
            (pick[static_cast<std::size_t>(k)] ? s.mu : s.nu).push_back(k);
        long inv = 0;
        for (int a : s.mu)
            for (int b : s.nu)
                if (a > b)
                    ++inv;
        s.sign = sgn(inv);
        out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return cache.emplace(std::make_pair(m, n), std::move(out)).first->second;
}

static Simplex degs(const SimplicialSet& X, Simplex x, const std::vector<int>& idx, int shift)
{
    for (int k : idx)
        x = X.degeneracy(x, k + shift);
    return x;
}

void shuffle_pair(const Product& P, const Simplex& x, const Simplex& y, const Scalar& c, Chain& out)
{
    const auto& X = P.left();
    const auto& Y = P.right();
    for (const auto& sh : shuffles(x.dim(), y.dim()))
        out.add(P.make(degs(X, x, sh.nu, 0), degs(Y, y, sh.mu, 0)), c * sh.sign);
}

Chain shuffle(const Product& P, const Chain& a, const Chain& b)
{
    Chain r(a.ring());
    for (const auto& [x, u] : a.terms())
        for (const auto& [y, v] : b.terms())
            shuffle_pair(P, x, y, u * v, r);
    return r;
}

Chain shuffle(const Product& P, const Tensor& t)
{
    Chain r(t.ring());
    for (const auto& [k, v] : t.terms())
        shuffle_pair(P, k[0], k[1], v, r);
    return r;
}

void aw_pair(const SimplicialSet& X, const SimplicialSet& Y, const Simplex& x, const Simplex& y, const Scalar& c,
             Tensor& out)
{
    int n = x.dim();
    for (int i = 0; i <= n; ++i)
        out.add({X.faces(x, i + 1, n), Y.faces(y, 0, i - 1)}, c);
}

Tensor alexander_whitney(const Product& P, const Chain& c)
{
    Tensor r(c.ring());
    for (const auto& [s, v] : c.terms()) {
        auto [x, y] = P.components(s);
        aw_pair(P.left(), P.right(), x, y, v, r);
    }
    return r;
}

Chain ez_homotopy(const Product& P, const Chain& c)
{
    Chain r(c.ring());
    const auto& X = P.left();
    const auto& Y = P.right();
    for (const auto& [s, v] : c.terms()) {
        auto [x, y] = P.components(s);
        int n = s.dim();
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Simplex a0 = X.degeneracy(X.faces(x, j + 1, n), i);
                Simplex b0 = Y.faces(y, i + 1, j - 1);
                for (const auto& sh : shuffles(j - i, n - j)) {
                    Simplex a = degs(X, a0, sh.nu, i + 1);
                    Simplex b = degs(Y, b0, sh.mu, i + 1);
                    r.add(P.make(a, b), v * (sgn(i) * sh.sign));
                }
            }
    }
    return r;
}

void st_pair(const SimplicialSet& X, const SimplicialSet& Y, const Simplex& x, const Simplex& y, const Scalar& c,
             Tensor& out)
{
    int n = x.dim();
    Scalar s = st_flip ? -c : c;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out.add({X.faces(X.faces(x, j + 1, n), 0, i - 1), Y.faces(y, i + 1, j - 1)},
                    s * sgn(i + j + static_cast<long>(i) * j));
}

void set_steenrod_sign_flip(bool on)
{
    st_flip = on;
}

Tensor steenrod(const Product& P, const Chain& c)
{
    Tensor r(c.ring());
    for (const auto& [s, v] : c.terms()) {
        auto [x, y] = P.components(s);
        st_pair(P.left(), P.right(), x, y, v, r);
    }
    return r;
}

Cochain cup(const SimplicialSet& X, const Cochain& a, const Cochain& b, const Ring& R)
{
    int p = a.degree, q = b.degree;
    const SimplicialSet* Xp = &X;
    return {p + q, [Xp, a, b, p, q, R](const Simplex& x) {
                int n = x.dim();
                Scalar u = a(Xp->faces(x, p + 1, n));
                if (u == 0)
                    return Scalar(0);
                return R.normalize(sgn(static_cast<long>(p) * q) * u * b(Xp->faces(x, 0, p - 1)));
            }};
}

static Scalar eval_st(const SimplicialSet& X, const SimplicialSet& Y, const Cochain& a, const Cochain& b,
                      const Simplex& x, const Simplex& y)
{
    int p = a.degree, q = b.degree;
    int n = x.dim();
    Scalar tot = 0;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (j - i != p)
                continue;
            Scalar u = a(X.faces(X.faces(x, j + 1, n), 0, i - 1));
            if (u == 0)
                continue;
            tot += sgn(i + j + static_cast<long>(i) * j) * u * b(Y.faces(y, i + 1, j - 1));
        }
    return tot * sgn(p + q + static_cast<long>(p) * q);
}

Cochain cup1(const SimplicialSet& X, const Cochain& a, const Cochain& b, const Ring& R)
{
    const SimplicialSet* Xp = &X;
    return {a.degree + b.degree - 1,
            [Xp, a, b, R](const Simplex& x) { return R.normalize(eval_st(*Xp, *Xp, a, b, x, x)); }};
}

Cochain cross(const Product& P, const Cochain& a, const Cochain& b, const Ring& R)
{
    int p = a.degree, q = b.degree;
    const Product* Pp = &P;
    return {p + q, [Pp, a, b, p, q, R](const Simplex& s) {
                auto [x, y] = Pp->components(s);
                int n = s.dim();
                Scalar u = a(Pp->left().faces(x, p + 1, n));
                if (u == 0)
                    return Scalar(0);
                return R.normalize(sgn(static_cast<long>(p) * q) * u * b(Pp->right().faces(y, 0, p - 1)));
            }};
}

Cochain cross1(const Product& P, const Cochain& a, const Cochain& b, const Ring& R)
{
    const Product* Pp = &P;
    return {a.degree + b.degree - 1, [Pp, a, b, R](const Simplex& s) {
                auto [x, y] = Pp->components(s);
                return R.normalize(eval_st(Pp->left(), Pp->right(), a, b, x, y));
            }};
}

Chain cap(const SpaceOverBase& Y, const Cochain& g, const Chain& m)
{
    Chain r(m.ring());
    int q = g.degree;
    for (const auto& [y, v] : m.terms()) {
        int n = y.dim();
        if (n < q)
            continue;
        Scalar u = g(Y.p(Y.total->faces(y, 0, n - q - 1)));
        if (u == 0)
            continue;
        r.add(Y.total->faces(y, n - q + 1, n), v * u * sgn(static_cast<long>(q) * (n - q)));
    }
    return r;
}

Chain cap(const SimplicialSet& X, const Cochain& g, const Chain& m)
{
    SpaceOverBase Y{std::shared_ptr<const SimplicialSet>(&X, [](const SimplicialSet*) {}),
                    std::shared_ptr<const SimplicialSet>(&X, [](const SimplicialSet*) {}),
                    [](const Simplex& s) { return s; }};
    return cap(Y, g, m);
}

Chain swap_product(const Product& P, const Product& Q, const Chain& c)
{
    return map_chain(c, [&](const Simplex& s) {
        auto [x, y] = P.components(s);
        return Q.make(y, x);
    });
}

}  // namespace eqt
