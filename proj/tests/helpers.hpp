#pragma once

#include "eqt/em_ops.hpp"

#include <algorithm>
#include <random>

namespace testing_helpers {

using namespace eqt;

inline Simplex random_delta_simplex(const StandardSimplex& D, int n, std::mt19937& rng)
{
    std::uniform_int_distribution<int> d(0, D.top());
    Key k(static_cast<std::size_t>(n + 1));
    for (auto& v : k)
        v = d(rng);
    std::sort(k.begin(), k.end());
    return D.normalize(k, n);
}

// nondegenerate simplex of X x Y for two standard simplices
inline Simplex random_pair(const Product& P, int n, std::mt19937& rng)
{
    const auto& X = static_cast<const StandardSimplex&>(P.left());
    const auto& Y = static_cast<const StandardSimplex&>(P.right());
    for (;;) {
        auto s = P.make(random_delta_simplex(X, n, rng), random_delta_simplex(Y, n, rng));
        if (!s.degenerate())
            return s;
    }
}

inline Cochain random_cochain(const SimplicialSet& X, int p, int maxDim, std::mt19937& rng)
{
    auto tab = std::make_shared<std::map<Simplex, Scalar>>();
    std::uniform_int_distribution<int> d(-2, 2);
    for (const auto& g : X.generators(p))
        (*tab)[g] = d(rng);
    (void)maxDim;
    return {p, [tab](const Simplex& s) {
                auto it = tab->find(s);
                return it == tab->end() ? Scalar(0) : it->second;
            }};
}

}  // namespace testing_helpers
