#pragma once

#include "eqt/spaces.hpp"
#include "eqt/suites.hpp"
#include "eqt/torus.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace eqt::suite {

class Check {
public:
    Check(std::string name, int criterion)
    {
        r_.name = std::move(name);
        r_.criterion = criterion;
    }
    // records one case; the first failure keeps its witness
    void expect(bool cond, const std::function<std::string()>& witness)
    {
        ++r_.cases;
        if (!cond && r_.ok) {
            r_.ok = false;
            r_.witness = witness();
        }
    }
    void fail(const std::string& w)
    {
        ++r_.cases;
        if (r_.ok) {
            r_.ok = false;
            r_.witness = w;
        }
    }
    void note(const std::string& w) { r_.witness = w; }
    void set_informational() { r_.informational = true; }
    bool ok() const { return r_.ok; }
    CheckResult result() const { return r_; }

private:
    CheckResult r_;
};

inline int sgn(long k)
{
    return k % 2 ? -1 : 1;
}

inline std::string show(const SimplicialSet& X, const Simplex& s)
{
    return X.describe(s);
}

inline std::string show(const SimplicialSet& X, const Chain& c)
{
    return c.to_string(X);
}

// uniform simplex (possibly degenerate) of a finite space
class FiniteSampler {
public:
    explicit FiniteSampler(const SimplicialSet& X) : X_(X) {}
    Simplex any(int n, std::mt19937_64& rng)
    {
        auto& v = cache(n);
        return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    }

private:
    const std::vector<Simplex>& cache(int n)
    {
        auto it = c_.find(n);
        if (it == c_.end())
            it = c_.emplace(n, X_.all_simplices(n)).first;
        return it->second;
    }
    const SimplicialSet& X_;
    std::map<int, std::vector<Simplex>> c_;
};

inline Cochain random_cochain(const SimplicialSet& X, int p, std::mt19937_64& rng)
{
    auto tab = std::make_shared<std::map<Simplex, Scalar>>();
    std::uniform_int_distribution<int> d(-2, 2);
    for (const auto& g : X.generators(p))
        (*tab)[g] = d(rng);
    return {p, [tab](const Simplex& s) {
                auto it = tab->find(s);
                return it == tab->end() ? Scalar(0) : it->second;
            }};
}

// finitely supported random cochain on an infinite space: values drawn on demand,
// nonzero only for simplices whose hash hits the support
inline Cochain hashed_cochain(int p, std::uint64_t salt, int density = 3)
{
    return {p, [salt, density](const Simplex& s) {
                std::uint64_t h = salt ^ 0x9e3779b97f4a7c15ULL;
                auto mix = [&h](std::uint64_t v) {
                    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
                };
                mix(static_cast<std::uint64_t>(s.gdim));
                for (auto v : s.key)
                    mix(static_cast<std::uint64_t>(v));
                for (auto v : s.word)
                    mix(static_cast<std::uint64_t>(v) + 101);
                if (h % static_cast<std::uint64_t>(density) != 0)
                    return Scalar(0);
                return Scalar(static_cast<int>((h >> 8) % 5) - 2);
            }};
}

// (front ⊗ back) Δ with degenerate factors dropped
inline Tensor aw_diagonal(const SimplicialSet& X, const Chain& c)
{
    Tensor out(c.ring());
    for (const auto& [s, v] : c.terms()) {
        int n = s.dim();
        for (int i = 0; i <= n; ++i) {
            Simplex a = X.faces(s, i + 1, n), b = X.faces(s, 0, i - 1);
            if (!a.degenerate() && !b.degenerate())
                out.add({a, b}, v);
        }
    }
    return out;
}

inline bool simplicial_on(const SimplicialSet& A, const SimplicialSet& B,
                          const std::function<Simplex(const Simplex&)>& F, const Simplex& s)
{
    int n = s.dim();
    for (int i = 0; i <= n && n > 0; ++i)
        if (!(F(A.face(s, i)) == B.face(F(s), i)))
            return false;
    for (int i = 0; i <= n; ++i)
        if (!(F(A.degeneracy(s, i)) == B.degeneracy(F(s), i)))
            return false;
    return true;
}

}  // namespace eqt::suite
