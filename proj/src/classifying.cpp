#include "eqt/classifying.hpp"

#include <sstream>

namespace eqt {

std::vector<Key> BarSpace::split(const Key& raw) const
{
    std::vector<Key> parts;
    std::size_t pos = 0;
    while (pos < raw.size()) {
        auto len = static_cast<std::size_t>(raw[pos++]);
        parts.emplace_back(raw.begin() + static_cast<long>(pos), raw.begin() + static_cast<long>(pos + len));
        pos += len;
    }
    return parts;
}

Key BarSpace::join(const std::vector<Key>& parts)
{
    Key raw;
    for (const auto& p : parts) {
        raw.push_back(static_cast<std::int64_t>(p.size()));
        raw.insert(raw.end(), p.begin(), p.end());
    }
    return raw;
}

Key BarSpace::raw_face(const Key& x, int n, int i) const
{
    auto g = split(x);
    std::vector<Key> out;
    if (i == n) {
        g.pop_back();
        return join(g);
    }
    for (int k = 0; k + 1 < i; ++k)
        out.push_back(g[static_cast<std::size_t>(k)]);
    if (i >= 1)
        out.push_back(G_->mul(g[static_cast<std::size_t>(i - 1)], G_->raw_face(g[static_cast<std::size_t>(i)], i, i), i - 1));
    for (int k = i + 1; k < n; ++k)
        out.push_back(G_->raw_face(g[static_cast<std::size_t>(k)], k, i));
    return join(out);
}

Key BarSpace::raw_deg(const Key& x, int n, int i) const
{
    auto g = split(x);
    std::vector<Key> out;
    for (int k = 0; k < i; ++k)
        out.push_back(g[static_cast<std::size_t>(k)]);
    out.push_back(G_->one(i));
    for (int k = i; k < n; ++k)
        out.push_back(G_->raw_deg(g[static_cast<std::size_t>(k)], k, i));
    return join(out);
}

std::vector<Simplex> BarSpace::generators(int n) const
{
    std::vector<std::vector<Key>> levels;
    for (int k = 0; k < n; ++k) {
        std::vector<Key> ks;
        for (const auto& s : G_->all_simplices(k))
            ks.push_back(G_->realize(s));
        levels.push_back(std::move(ks));
    }
    std::vector<Simplex> out;
    std::vector<Key> cur;
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            auto s = normalize(join(cur), n);
            if (!s.degenerate())
                out.push_back(s);
            return;
        }
        for (const auto& g : levels[static_cast<std::size_t>(k)]) {
            cur.push_back(g);
            rec(k + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::string BarSpace::describe(const Simplex& s) const
{
    std::ostringstream os;
    for (int j : s.word)
        os << "s" << j << " ";
    auto g = split(s.key);
    os << "[";
    for (std::size_t k = 0; k < g.size(); ++k)
        os << (k ? ", " : "") << G_->describe(G_->normalize(g[k], static_cast<int>(k)));
    os << "]";
    return os.str();
}

Key BarSpace::tau(const Simplex& b) const
{
    return split(realize(b)).back();
}

UniversalBundle::UniversalBundle(GroupPtr G) : G_(std::move(G))
{
    BG_ = std::make_shared<BarSpace>(G_);
    auto bg = BG_;
    EG_ = std::make_shared<TwistedProduct>(
        BG_, G_, [bg](const Simplex& b) { return bg->tau(b); }, left_translation(G_));
}

Simplex UniversalBundle::basepoint() const
{
    return EG_->make(BG_->normalize(Key{}, 0), G_->normalize(G_->one(0), 0));
}

Simplex UniversalBundle::fibre_inclusion(const Simplex& g) const
{
    int n = g.dim();
    Simplex b = BG_->normalize(Key{}, 0);
    for (int k = 0; k < n; ++k)
        b = BG_->degeneracy(b, 0);
    return EG_->make(b, g);
}

Simplex UniversalBundle::right_act(const Simplex& e, const Key& h) const
{
    auto [b, g] = EG_->components(e);
    int n = e.dim();
    return EG_->make(b, G_->normalize(G_->mul(G_->realize(g), h, n), n));
}

Key UniversalBundle::to_bar(const Simplex& e) const
{
    auto [b, g] = EG_->components(e);
    auto parts = BG_->split(BG_->realize(b));
    parts.push_back(G_->realize(g));
    return BarSpace::join(parts);
}

Simplex UniversalBundle::from_bar(const Key& raw, int n) const
{
    auto parts = BG_->split(raw);
    Key g = parts.back();
    parts.pop_back();
    return EG_->make(BG_->normalize(BarSpace::join(parts), n), G_->normalize(g, n));
}

Simplex UniversalBundle::s_tilde(const Simplex& e) const
{
    int n = e.dim();
    Key raw = to_bar(e);
    auto parts = BG_->split(raw);
    parts.push_back(G_->one(n + 1));
    return from_bar(BarSpace::join(parts), n + 1);
}

Chain UniversalBundle::cone(const Chain& c) const
{
    Chain r(c.ring());
    for (const auto& [e, v] : c.terms())
        r.add(s_tilde(e), e.dim() % 2 ? v : -v);
    return r;
}

SpaceOverBase UniversalBundle::over_base() const
{
    auto eg = EG_;
    return {EG_, BG_, [eg](const Simplex& e) { return eg->components(e).first; }};
}

}  // namespace eqt
