#include "eqt/simplicial.hpp"

#include <algorithm>
#include <sstream>

namespace eqt {

Word compose_degeneracy(const Word& w, int a)
{
    Word out;
    out.reserve(w.size() + 1);
    for (int j : w)
        if (j >= a)
            out.push_back(j + 1);
    out.push_back(a);
    for (int j : w)
        if (j < a)
            out.push_back(j);
    return out;
}

bool valid_word(const Word& w, int dim)
{
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (w[t] < 0 || w[t] >= dim)
            return false;
        if (t > 0 && w[t] >= w[t - 1])
            return false;
    }
    return true;
}

std::vector<Simplex> SimplicialSet::generators(int) const
{
    throw std::logic_error("space " + name() + " is not enumerable");
}

std::string SimplicialSet::describe(const Simplex& s) const
{
    std::ostringstream os;
    for (int j : s.word)
        os << "s" << j << " ";
    os << "g" << s.gdim << "[";
    for (std::size_t i = 0; i < s.key.size(); ++i)
        os << (i ? "," : "") << s.key[i];
    os << "]";
    return os.str();
}

Simplex SimplicialSet::face(const Simplex& s, int i) const
{
    if (s.dim() == 0)
        throw std::logic_error("face of a vertex");
    Word kept;
    std::size_t t = 0;
    for (; t < s.word.size(); ++t) {
        int j = s.word[t];
        if (i < j) {
            kept.push_back(j - 1);
        } else if (i == j || i == j + 1) {
            break;
        } else {
            kept.push_back(j);
            --i;
        }
    }
    Simplex inner;
    if (t < s.word.size()) {
        inner = {Word(s.word.begin() + static_cast<long>(t) + 1, s.word.end()), s.gdim, s.key};
    } else {
        inner = face_gen(s.gdim, s.key, i);
    }
    for (auto it = kept.rbegin(); it != kept.rend(); ++it)
        inner.word = compose_degeneracy(inner.word, *it);
    return inner;
}

Simplex SimplicialSet::degeneracy(const Simplex& s, int i) const
{
    return {compose_degeneracy(s.word, i), s.gdim, s.key};
}

Simplex SimplicialSet::faces(const Simplex& s, int i, int j) const
{
    Simplex r = s;
    for (int k = j; k >= i; --k)
        r = face(r, k);
    return r;
}

Simplex SimplicialSet::apply_word(const Simplex& s, const Word& w) const
{
    Simplex r = s;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        r.word = compose_degeneracy(r.word, *it);
    return r;
}

static void subsets_desc(int n, int q, std::vector<Word>& out)
{
    Word cur;
    std::function<void(int)> rec = [&](int hi) {
        if (static_cast<int>(cur.size()) == q) {
            out.push_back(cur);
            return;
        }
        for (int j = hi; j >= 0; --j) {
            cur.push_back(j);
            rec(j - 1);
            cur.pop_back();
        }
    };
    rec(n - 1);
}

std::vector<Simplex> SimplicialSet::all_simplices(int n) const
{
    std::vector<Simplex> out;
    for (int k = 0; k <= n; ++k) {
        std::vector<Word> words;
        subsets_desc(n, n - k, words);
        for (const auto& g : generators(k))
            for (const auto& w : words)
                out.push_back({w, g.gdim, g.key});
    }
    return out;
}

Simplex SimplicialSet::vertex(const Simplex& s, int k) const
{
    Simplex r = faces(s, k + 1, s.dim());
    for (int t = 0; t < k; ++t)
        r = face(r, 0);
    return r;
}

void encode_simplex(const Simplex& s, Key& out)
{
    out.push_back(s.gdim);
    out.push_back(static_cast<std::int64_t>(s.word.size()));
    for (int j : s.word)
        out.push_back(j);
    out.push_back(static_cast<std::int64_t>(s.key.size()));
    out.insert(out.end(), s.key.begin(), s.key.end());
}

Simplex decode_simplex(const Key& k, std::size_t& pos)
{
    Simplex s;
    s.gdim = static_cast<int>(k.at(pos++));
    auto wl = static_cast<std::size_t>(k.at(pos++));
    for (std::size_t t = 0; t < wl; ++t)
        s.word.push_back(static_cast<int>(k.at(pos++)));
    auto kl = static_cast<std::size_t>(k.at(pos++));
    s.key.assign(k.begin() + static_cast<long>(pos), k.begin() + static_cast<long>(pos + kl));
    pos += kl;
    return s;
}

bool RawSpace::raw_degenerate_at(const Key& x, int n, int i) const
{
    return raw_deg(raw_face(x, n, i), n - 1, i) == x;
}

Simplex RawSpace::normalize(const Key& raw, int n) const
{
    Word w;
    Key x = raw;
    int m = n;
    bool found = true;
    while (found && m > 0) {
        found = false;
        for (int i = m - 1; i >= 0; --i) {
            if (raw_degenerate_at(x, m, i)) {
                w.push_back(i);
                x = raw_face(x, m, i);
                --m;
                found = true;
                break;
            }
        }
    }
    return {w, m, x};
}

Key RawSpace::realize(const Simplex& s) const
{
    Key x = s.key;
    int m = s.gdim;
    for (auto it = s.word.rbegin(); it != s.word.rend(); ++it)
        x = raw_deg(x, m++, *it);
    return x;
}

Simplex RawSpace::face_gen(int gdim, const Key& key, int i) const
{
    return normalize(raw_face(key, gdim, i), gdim - 1);
}

Key StandardSimplex::raw_face(const Key& x, int, int i) const
{
    Key y = x;
    y.erase(y.begin() + i);
    return y;
}

Key StandardSimplex::raw_deg(const Key& x, int, int i) const
{
    Key y = x;
    y.insert(y.begin() + i, x[static_cast<std::size_t>(i)]);
    return y;
}

std::vector<Simplex> StandardSimplex::generators(int n) const
{
    std::vector<Simplex> out;
    if (n > n_)
        return out;
    std::vector<Word> ws;
    subsets_desc(n_ + 1, n + 1, ws);
    for (auto& w : ws) {
        Key k(w.rbegin(), w.rend());
        out.push_back({{}, n, k});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string StandardSimplex::describe(const Simplex& s) const
{
    std::ostringstream os;
    for (int j : s.word)
        os << "s" << j << " ";
    os << "[";
    for (std::size_t i = 0; i < s.key.size(); ++i)
        os << (i ? "," : "") << s.key[i];
    os << "]";
    return os.str();
}

FiniteSpace::FiniteSpace(std::vector<Gen> gens, std::string name) : gens_(std::move(gens)), name_(std::move(name))
{
    for (std::size_t g = 0; g < gens_.size(); ++g) {
        const auto& G = gens_[g];
        if (G.dim < 0)
            throw IdentityViolation("generator " + G.name + " has negative degree");
        if (static_cast<int>(G.faces.size()) != (G.dim == 0 ? 0 : G.dim + 1))
            throw IdentityViolation("generator " + G.name + " has the wrong number of faces");
        for (const auto& f : G.faces) {
            if (f.key.size() != 1 || f.key[0] < 0 || f.key[0] >= static_cast<std::int64_t>(gens_.size()))
                throw IdentityViolation("generator " + G.name + " has a dangling face");
            const auto& H = gens_[static_cast<std::size_t>(f.key[0])];
            if (H.dim != f.gdim || f.dim() != G.dim - 1 || !valid_word(f.word, f.dim()))
                throw IdentityViolation("generator " + G.name + " has a face of the wrong degree");
        }
    }
    int top = max_dim();
    std::string w = check_face_identities(*this, top);
    if (!w.empty())
        throw IdentityViolation(w);
}

Simplex FiniteSpace::face_gen(int, const Key& key, int i) const
{
    return gens_.at(static_cast<std::size_t>(key.at(0))).faces.at(static_cast<std::size_t>(i));
}

std::vector<Simplex> FiniteSpace::generators(int n) const
{
    std::vector<Simplex> out;
    for (std::size_t g = 0; g < gens_.size(); ++g)
        if (gens_[g].dim == n)
            out.push_back(gen(g));
    return out;
}

std::string FiniteSpace::describe(const Simplex& s) const
{
    std::ostringstream os;
    for (int j : s.word)
        os << "s" << j << " ";
    os << gens_.at(static_cast<std::size_t>(s.key.at(0))).name;
    return os.str();
}

int FiniteSpace::max_dim() const
{
    int m = -1;
    for (const auto& g : gens_)
        m = std::max(m, g.dim);
    return m;
}

std::size_t FiniteSpace::id_of(const std::string& name) const
{
    for (std::size_t g = 0; g < gens_.size(); ++g)
        if (gens_[g].name == name)
            return g;
    throw std::out_of_range("unknown generator " + name);
}

std::string check_face_identities(const SimplicialSet& X, int maxDim)
{
    for (int n = 2; n <= maxDim; ++n)
        for (const auto& g : X.generators(n))
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    auto a = X.face(X.face(g, j), i);
                    auto b = X.face(X.face(g, i), j - 1);
                    if (!(a == b)) {
                        std::ostringstream os;
                        os << "d" << i << " d" << j << " != d" << (j - 1) << " d" << i << " on " << X.describe(g);
                        return os.str();
                    }
                }
    return {};
}

Simplex Product::make(const Simplex& x0, const Simplex& y0) const
{
    if (x0.dim() != y0.dim())
        throw std::logic_error("product of simplices of different degree");
    Simplex x = x0, y = y0;
    Word outer;
    for (;;) {
        int c = -1;
        for (int j : x.word)
            if (std::find(y.word.begin(), y.word.end(), j) != y.word.end()) {
                c = j;
                break;
            }
        if (c < 0)
            break;
        x = x_->face(x, c);
        y = y_->face(y, c);
        outer.push_back(c);
    }
    Simplex s;
    s.gdim = x.dim();
    encode_simplex(x, s.key);
    encode_simplex(y, s.key);
    // outer was collected outermost first
    s.word = Word();
    for (auto it = outer.rbegin(); it != outer.rend(); ++it)
        s.word = compose_degeneracy(s.word, *it);
    return s;
}

std::pair<Simplex, Simplex> Product::components(const Simplex& s) const
{
    std::size_t pos = 0;
    Simplex x = decode_simplex(s.key, pos);
    Simplex y = decode_simplex(s.key, pos);
    return {x_->apply_word(x, s.word), y_->apply_word(y, s.word)};
}

Simplex Product::face_gen(int gdim, const Key& key, int i) const
{
    auto [x, y] = components({{}, gdim, key});
    return make(x_->face(x, i), y_->face(y, i));
}

std::vector<Simplex> Product::generators(int n) const
{
    std::vector<Simplex> out;
    auto xs = x_->all_simplices(n);
    auto ys = y_->all_simplices(n);
    for (const auto& x : xs)
        for (const auto& y : ys) {
            bool common = false;
            for (int j : x.word)
                if (std::find(y.word.begin(), y.word.end(), j) != y.word.end())
                    common = true;
            if (!common)
                out.push_back(make(x, y));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::string Product::describe(const Simplex& s) const
{
    auto [x, y] = components(s);
    return "(" + x_->describe(x) + ", " + y_->describe(y) + ")";
}

std::int64_t NerveGroup::reduce(std::int64_t v) const
{
    if (m_ == 0)
        return v;
    v %= m_;
    return v < 0 ? v + m_ : v;
}

Key NerveGroup::raw_face(const Key& x, int n, int i) const
{
    Key y;
    y.reserve(static_cast<std::size_t>(r_ * (n - 1)));
    for (int row = 0; row < r_; ++row) {
        const std::int64_t* a = x.data() + row * n;
        for (int c = 0; c < n; ++c) {
            if (i == 0 && c == 0)
                continue;
            if (i == n && c == n - 1)
                continue;
            if (i > 0 && i < n && c == i - 1) {
                y.push_back(reduce(a[c] + a[c + 1]));
                ++c;
                continue;
            }
            y.push_back(a[c]);
        }
    }
    return y;
}

Key NerveGroup::raw_deg(const Key& x, int n, int i) const
{
    Key y;
    y.reserve(static_cast<std::size_t>(r_ * (n + 1)));
    for (int row = 0; row < r_; ++row) {
        for (int c = 0; c <= n; ++c) {
            if (c == i)
                y.push_back(0);
            if (c < n)
                y.push_back(x[static_cast<std::size_t>(row * n + c)]);
        }
    }
    return y;
}

bool NerveGroup::raw_degenerate_at(const Key& x, int n, int i) const
{
    for (int row = 0; row < r_; ++row)
        if (x[static_cast<std::size_t>(row * n + i)] != 0)
            return false;
    return true;
}

Key NerveGroup::mul(const Key& a, const Key& b, int) const
{
    Key c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = reduce(a[i] + b[i]);
    return c;
}

Key NerveGroup::inv(const Key& a, int) const
{
    Key c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = reduce(-a[i]);
    return c;
}

std::vector<Simplex> NerveGroup::generators(int n) const
{
    if (m_ == 0)
        throw std::logic_error("B Z is not enumerable");
    std::vector<Simplex> out;
    std::size_t len = static_cast<std::size_t>(r_ * n);
    Key x(len, 0);
    for (;;) {
        bool ok = true;
        for (int c = 0; c < n && ok; ++c)
            if (raw_degenerate_at(x, n, c))
                ok = false;
        if (ok)
            out.push_back({{}, n, x});
        std::size_t t = 0;
        while (t < len && ++x[t] == m_)
            x[t++] = 0;
        if (t == len)
            break;
    }
    return out;
}

std::string NerveGroup::name() const
{
    std::string g = m_ == 0 ? "BZ" : "BZ/" + std::to_string(m_);
    return "(" + g + ")^" + std::to_string(r_);
}

std::string NerveGroup::describe(const Simplex& s) const
{
    std::ostringstream os;
    for (int j : s.word)
        os << "s" << j << " ";
    os << "[";
    for (int row = 0; row < r_; ++row) {
        os << (row ? ";" : "");
        for (int c = 0; c < s.gdim; ++c)
            os << (c ? "|" : "") << s.key[static_cast<std::size_t>(row * s.gdim + c)];
    }
    os << "]";
    return os.str();
}

Simplex NerveGroup::loop(int i) const
{
    Key k(static_cast<std::size_t>(r_), 0);
    k[static_cast<std::size_t>(i)] = 1;
    return {{}, 1, k};
}

Simplex TwistedProduct::face_gen(int gdim, const Key& key, int i) const
{
    if (i < gdim)
        return Product::face_gen(gdim, key, i);
    auto [b, f] = components({{}, gdim, key});
    Key g = tau_(b);
    return make(x_->face(b, i), act_(g, gdim - 1, y_->face(f, i)));
}

Action trivial_action()
{
    return [](const Key&, int, const Simplex& x) { return x; };
}

Action left_translation(GroupPtr G)
{
    return [G](const Key& g, int n, const Simplex& x) { return G->normalize(G->mul(g, G->realize(x), n), n); };
}

void Chain::add(const Simplex& s, const Scalar& c)
{
    if (s.degenerate())
        return;
    Scalar v = R_.normalize(c);
    if (v == 0)
        return;
    auto [it, fresh] = t_.emplace(s, v);
    if (!fresh) {
        it->second = R_.normalize(it->second + v);
        if (it->second == 0)
            t_.erase(it);
    }
}

void Chain::add(const Chain& o, const Scalar& c)
{
    for (const auto& [s, v] : o.t_)
        add(s, v * c);
}

Chain Chain::scaled(const Scalar& c) const
{
    Chain r(R_);
    r.add(*this, c);
    return r;
}

Scalar Chain::coeff(const Simplex& s) const
{
    auto it = t_.find(s);
    return it == t_.end() ? Scalar(0) : it->second;
}

std::string Chain::to_string(const SimplicialSet& X) const
{
    if (t_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, v] : t_) {
        os << (first ? "" : " + ") << v << "*" << X.describe(s);
        first = false;
    }
    return os.str();
}

Chain operator-(const Chain& a, const Chain& b)
{
    Chain r = a;
    r.add(b, -1);
    return r;
}

Chain operator+(const Chain& a, const Chain& b)
{
    Chain r = a;
    r.add(b, 1);
    return r;
}

Chain boundary(const SimplicialSet& X, const Chain& c)
{
    Chain r(c.ring());
    for (const auto& [s, v] : c.terms()) {
        int n = s.dim();
        if (n == 0)
            continue;
        for (int i = 0; i <= n; ++i)
            r.add(X.face(s, i), (i % 2 ? -v : v));
    }
    return r;
}

Chain map_chain(const Chain& c, const std::function<Simplex(const Simplex&)>& f)
{
    Chain r(c.ring());
    for (const auto& [s, v] : c.terms())
        r.add(f(s), v);
    return r;
}

Chain linear(const Chain& c, const std::function<Chain(const Simplex&)>& f)
{
    Chain r(c.ring());
    for (const auto& [s, v] : c.terms())
        r.add(f(s), v);
    return r;
}

Scalar Cochain::pair(const Chain& c) const
{
    Scalar r = 0;
    for (const auto& [s, v] : c.terms())
        r += v * (*this)(s);
    return c.ring().normalize(r);
}

Cochain memoize(Cochain c)
{
    auto cache = std::make_shared<std::map<Simplex, Scalar>>();
    auto f = c.f;
    c.f = [cache, f](const Simplex& s) {
        auto it = cache->find(s);
        if (it != cache->end())
            return it->second;
        Scalar v = f(s);
        cache->emplace(s, v);
        return v;
    };
    return c;
}

Cochain coboundary(const SimplicialSet& X, const Cochain& g, const Ring& R)
{
    int n = g.degree;
    const SimplicialSet* Xp = &X;
    return {n + 1, [Xp, g, n, R](const Simplex& c) {
                Scalar r = 0;
                for (int i = 0; i <= n + 1; ++i) {
                    Scalar v = g(Xp->face(c, i));
                    r += (i % 2 ? -v : v);
                }
                return R.normalize(n % 2 ? r : -r);
            }};
}

Cochain pullback(const Cochain& g, std::function<Simplex(const Simplex&)> p)
{
    return {g.degree, [g, p](const Simplex& s) { return g(p(s)); }};
}

Cochain linear_combination(const std::vector<std::pair<Scalar, Cochain>>& terms, const Ring& R)
{
    int d = terms.empty() ? 0 : terms.front().second.degree;
    for (const auto& t : terms)
        if (t.second.degree != d)
            throw std::logic_error("mixed degrees in cochain sum");
    return {d, [terms, R](const Simplex& s) {
                Scalar r = 0;
                for (const auto& [c, g] : terms)
                    r += c * g(s);
                return R.normalize(r);
            }};
}

Cochain unit_cochain()
{
    return {0, [](const Simplex&) { return Scalar(1); }};
}

Cochain zero_cochain(int degree)
{
    return {degree, [](const Simplex&) { return Scalar(0); }};
}

std::string check_projection(const SpaceOverBase& Y, int maxDim)
{
    for (int n = 1; n <= maxDim; ++n)
        for (const auto& s : Y.total->generators(n)) {
            auto ps = Y.p(s);
            if (ps.dim() != n)
                return "projection changes degree on " + Y.total->describe(s);
            for (int i = 0; i <= n; ++i)
                if (!(Y.p(Y.total->face(s, i)) == Y.base->face(ps, i)))
                    return "projection does not commute with d" + std::to_string(i) + " on " + Y.total->describe(s);
        }
    return {};
}

}  // namespace eqt
