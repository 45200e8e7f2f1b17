#include "eqt/ih.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace eqt {

AllowableSubset all_simplices()
{
    return {[](const Simplex&) { return true; }};
}

AllowableSubset subcomplex_subset(const FiniteSpace& X, const std::vector<std::string>& names)
{
    std::set<std::int64_t> ids;
    for (const auto& n : names)
        ids.insert(static_cast<std::int64_t>(X.id_of(n)));
    return {[ids](const Simplex& s) { return ids.count(s.key.at(0)) > 0; }};
}

ClosureReport check_allowable_closure(const SimplicialSet& X, const AllowableSubset& V, int max_degree)
{
    for (int n = 0; n <= max_degree; ++n)
        for (const Simplex& s : X.all_simplices(n)) {
            if (!V.contains(s))
                continue;
            if (n > 0 && !V.contains(X.last_face(s)))
                return {false, "last face of " + X.describe(s) + " is not in the subset"};
            for (int i = 0; i <= n; ++i)
                if (!V.contains(X.degeneracy(s, i)))
                    return {false, "degeneracy s" + std::to_string(i) + " of " + X.describe(s) + " is not in the subset"};
        }
    return {};
}

int Perversity::operator[](int k) const
{
    if (k < static_cast<int>(p.size()))
        return p[static_cast<std::size_t>(k)];
    return p.back();
}

std::string Perversity::validate() const
{
    if (p.empty() || p[0] != 0)
        return "perversity must start with p_0 = 0";
    for (std::size_t j = 0; j + 1 < p.size(); ++j)
        if (p[j + 1] > p[j] + 1)
            return "perversity violates p_{j+1} <= p_j + 1 at j = " + std::to_string(j);
    return "";
}

Perversity Perversity::middle(int top)
{
    Perversity q;
    q.p.assign(static_cast<std::size_t>(top + 1), 0);
    for (int k = 2; k <= top; ++k)
        q.p[static_cast<std::size_t>(k)] = (k - 2) / 2;
    return q;
}

Perversity Perversity::top(int top)
{
    Perversity q;
    q.p.assign(static_cast<std::size_t>(top + 1), 0);
    for (int k = 2; k <= top; ++k)
        q.p[static_cast<std::size_t>(k)] = k - 2;
    return q;
}

int FilteredSpace::vertex_label(const Simplex& s, int i) const
{
    Simplex v = X->vertex(s, i);
    return label.at(static_cast<std::size_t>(v.key.at(0)));
}

int FilteredSpace::max_label() const
{
    int m = 0;
    for (int l : label)
        m = std::max(m, l);
    return m;
}

int FilteredSpace::part_dim(const Simplex& s, int k) const
{
    int n = s.dim(), cnt = 0;
    for (int i = 0; i <= n; ++i)
        if (vertex_label(s, i) >= k)
            ++cnt;
    return cnt - 1;
}

std::string FilteredSpace::validate() const
{
    if (label.size() != X->gens().size())
        return "filtration does not label every generator";
    for (std::size_t id = 0; id < label.size(); ++id) {
        Simplex s = X->gen(id);
        const std::string& name = X->gens()[id].name;
        int n = s.dim();
        for (int i = 0; i <= n && n > 0; ++i) {
            Simplex f = X->face(s, i);
            if (label.at(static_cast<std::size_t>(f.key.at(0))) < label[id])
                return name + ": face " + std::to_string(i) + " lies in a larger stratum than the simplex";
        }
        for (int i = 0; i < n; ++i)
            if (vertex_label(s, i) > vertex_label(s, i + 1))
                return name + ": vertex labels decrease, the filtration is not flag-like";
        for (int k = 1; k <= max_label(); ++k) {
            int d = part_dim(s, k);
            if (d < 0)
                continue;
            Simplex back = X->faces(s, 0, n - d - 1);
            if (label.at(static_cast<std::size_t>(back.key.at(0))) < k)
                return name + ": the part in codimension " + std::to_string(k) + " is not a back face";
        }
    }
    return "";
}

AllowableSubset allowable_from_perversity(const FilteredSpace& F, const Perversity& p)
{
    if (std::string w = F.validate(); !w.empty())
        throw std::invalid_argument(w);
    if (std::string w = p.validate(); !w.empty())
        throw std::invalid_argument(w);
    int top = F.max_label();
    return {[F, p, top](const Simplex& s) {
        int n = s.dim();
        for (int k = 1; k <= top; ++k) {
            int d = F.part_dim(s, k);
            if (d >= 0 && d > n - k + p[k])
                return false;
        }
        return true;
    }};
}

bool IntersectionComplex::contains(const std::vector<Scalar>& v) const
{
    std::vector<Scalar> c = apply(coords, v, R);
    std::vector<Scalar> back = apply(embed, c, R);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (R.normalize(back[i] - v[i]) != 0)
            return false;
    return true;
}

bool IntersectionComplex::restrict_operator(const Matrix& op, Matrix& out) const
{
    Matrix img = multiply(op, embed, R);
    Matrix c = multiply(coords, img, R);
    Matrix back = multiply(embed, c, R);
    if (!(back.reduced(R) == img.reduced(R)))
        return false;
    out = c.reduced(R);
    return true;
}

IntersectionComplex intersection_complex(const SimplicialSet& X, const AllowableSubset& V, const Ring& R,
                                         int max_degree)
{
    IntersectionComplex I;
    I.R = R;
    I.ambient = finite_chains(X, max_degree, R);
    const FiniteChains& A = I.ambient;
    std::vector<std::pair<std::size_t, Scalar>> emb_entries;
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> emb, crd;
    std::size_t next = 0;
    for (int n = 0; n <= max_degree; ++n) {
        std::vector<std::size_t> in, out;
        for (std::size_t j : A.in_degree(n))
            (V.contains(A.basis[j]) ? in : out).push_back(j);
        std::vector<std::size_t> bad;
        for (std::size_t j : A.in_degree(n - 1))
            if (!V.contains(A.basis[j]))
                bad.push_back(j);
        std::map<std::size_t, std::size_t> bad_row;
        for (std::size_t k = 0; k < bad.size(); ++k)
            bad_row[bad[k]] = k;
        std::map<std::size_t, std::size_t> in_col;
        for (std::size_t k = 0; k < in.size(); ++k)
            in_col[in[k]] = k;
        Matrix B(bad.size(), in.size());
        for (auto& [key, v] : A.d.entries()) {
            auto r = bad_row.find(key.first);
            auto c = in_col.find(key.second);
            if (r != bad_row.end() && c != in_col.end())
                B.set(r->second, c->second, v);
        }
        KernelBasis kb = kernel_basis(B, R);
        for (std::size_t c = 0; c < kb.basis.cols(); ++c) {
            I.deg.push_back(n);
            I.labels.push_back("ic" + std::to_string(n) + "." + std::to_string(c));
        }
        for (auto& [key, v] : kb.basis.entries())
            emb.push_back({in[key.first], next + key.second, v});
        for (auto& [key, v] : kb.coords.entries())
            crd.push_back({next + key.first, in[key.second], v});
        next += kb.basis.cols();
    }
    I.embed = Matrix(A.size(), next);
    I.coords = Matrix(next, A.size());
    for (auto& [i, j, v] : emb)
        I.embed.set(i, j, v);
    for (auto& [i, j, v] : crd)
        I.coords.set(i, j, v);
    if (!I.restrict_operator(A.d, I.d))
        throw std::logic_error("intersection chains are not closed under the boundary");
    return I;
}

TComplex equivariant_ih_t(const Torus& T, const TSpace& X, const AllowableSubset& V, int max_degree)
{
    IntersectionComplex I = intersection_complex(*X.X, V, T.ring(), max_degree + 1);
    LambdaModule N;
    static_cast<GradedComplex&>(N) = I;
    N.r = T.rank();
    if (!X.trivial) {
        LambdaModule full = chains_as_lambda_module(T, X, I.ambient);
        for (auto& [a, x] : full.c) {
            Matrix m;
            if (!I.restrict_operator(x, m))
                throw std::invalid_argument("the allowable subset is not stable under the action");
            N.c[a] = m;
        }
    }
    return t_functor(N, max_degree + 1);
}

HComplex equivariant_ih_h(const Torus& T, const SpaceOverBase& Y, const AllowableSubset& W, int max_degree)
{
    IntersectionComplex I = intersection_complex(*Y.total, W, T.ring(), max_degree + 1);
    SComodule full = chains_as_s_comodule(T, Y, I.ambient);
    SComodule M;
    static_cast<GradedComplex&>(M) = I;
    M.r = T.rank();
    for (auto& [pi, g] : full.gamma) {
        Matrix m;
        if (!I.restrict_operator(g, m))
            throw std::invalid_argument("intersection chains are not closed under the cap product");
        M.gamma[pi] = m;
    }
    return h_functor(M);
}

}  // namespace eqt
