#include "suite_util.hpp"

namespace eqt {

using namespace suite;

SuiteReport run_koszul_suite(const SuiteOptions& o)
{
    SuiteReport rep{"koszul", {}};
    std::mt19937_64 rng(o.seed + 2);
    {
        Check ck("Koszul complex is a resolution of the ground ring", 4);
        const Ring rings[] = {Ring::integers(), Ring::rationals(), Ring::prime_field(2), Ring::prime_field(3)};
        for (int r = 0; r <= 3; ++r)
            for (const Ring& R : rings) {
                TComplex K = koszul_complex(r, 9, R);
                ck.expect(K.d_squared_zero(), [&] { return "d^2 != 0 for r = " + std::to_string(r); });
                for (int n = 0; n <= 8; ++n) {
                    HomologyPresentation h = K.homology(n);
                    bool want = n == 0 ? h.free_rank == 1 && h.torsion.empty() : h.free_rank == 0 && h.torsion.empty();
                    ck.expect(want, [&] {
                        return "H_" + std::to_string(n) + "(K) = " + h.to_string() + " for r = " + std::to_string(r) +
                               " over " + R.name();
                    });
                }
            }
        rep.checks.push_back(ck.result());
    }
    {
        Check ck("canonical twisting cochain satisfies d(u) + u cup u = 0", 5);
        for (int r = 0; r <= 4; ++r) {
            std::string w = verify_canonical_twisting(r, 8);
            ck.expect(w.empty(), [&] { return w; });
        }
        rep.checks.push_back(ck.result());
    }
    {
        Check axioms("random modules satisfy the weak module condition", 4),
            quasi("H(h t N) = H(N) through the unit", 4), tri("adjunction triangle identities", 4);
        const Ring rings[] = {Ring::integers(), Ring::integers(), Ring::prime_field(3), Ring::rationals()};
        std::vector<LambdaModule> mods{lambda_free(2, Ring::integers()), trivial_lambda_module(2, Ring::integers())};
        int count = 20 * o.samples;
        for (int k = 0; k < count; ++k)
            mods.push_back(random_lambda_module(1 + k % 3, rings[k % 4], rng));
        for (std::size_t k = 0; k < mods.size(); ++k) {
            const LambdaModule& N = mods[k];
            std::string w = N.check_axioms();
            axioms.expect(w.empty(), [&] { return "module " + std::to_string(k) + ": " + w; });
            if (!w.empty())
                continue;
            KoszulCheck q = check_unit_quasi_iso(N, 6);
            quasi.expect(q.ok, [&] { return "module " + std::to_string(k) + ": " + q.witness; });
            if (k < 8 && N.r < 3) {
                KoszulCheck t = check_triangles(N, 4);
                tri.expect(t.ok, [&] { return "module " + std::to_string(k) + ": " + t.witness; });
            }
        }
        rep.checks.push_back(axioms.result());
        rep.checks.push_back(quasi.result());
        rep.checks.push_back(tri.result());
    }
    {
        Check ck("weak module condition rejects a broken action", 4);
        LambdaModule L = lambda_free(2, Ring::integers());
        L.c[Multi{1, 0}].add(1, 0, 1);
        ck.expect(!L.check_axioms().empty(), [] { return "perturbed action accepted"; });
        rep.checks.push_back(ck.result());
    }
    return rep;
}

}  // namespace eqt
