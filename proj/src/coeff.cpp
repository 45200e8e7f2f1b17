#include "eqt/coeff.hpp"

#include <algorithm>
#include <sstream>

namespace eqt {

bool is_prime(std::int64_t p)
{
    if (p < 2)
        return false;
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

Ring Ring::prime_field(std::int64_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("prime field requires a prime, got " + std::to_string(p));
    return {RingKind::PrimeField, p};
}

Ring Ring::parse(const std::string& s)
{
    if (s == "Z")
        return integers();
    if (s == "Q")
        return rationals();
    if (s.rfind("Fp:", 0) == 0) {
        std::int64_t p = 0;
        try {
            p = std::stoll(s.substr(3));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad ring: " + s);
        }
        return prime_field(p);
    }
    if (s.size() > 1 && s[0] == 'F') {
        try {
            return prime_field(std::stoll(s.substr(1)));
        } catch (const std::logic_error&) {
        }
    }
    throw std::invalid_argument("bad ring: " + s + " (expected Z, Q or Fp:<p>)");
}

static BigInt mod_pos(const BigInt& a, std::int64_t p)
{
    BigInt r = a % p;
    if (r < 0)
        r += p;
    return r;
}

static BigInt mod_inverse(const BigInt& a, std::int64_t p)
{
    // a^(p-2) mod p
    BigInt base = mod_pos(a, p), res = 1;
    std::int64_t e = p - 2;
    while (e > 0) {
        if (e & 1)
            res = (res * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return res;
}

Scalar Ring::normalize(const Scalar& x) const
{
    if (kind != RingKind::PrimeField)
        return x;
    BigInt num = mod_pos(boost::multiprecision::numerator(x), p);
    BigInt den = mod_pos(boost::multiprecision::denominator(x), p);
    if (den == 0)
        throw std::domain_error("denominator divisible by the characteristic");
    if (den != 1)
        num = (num * mod_inverse(den, p)) % p;
    return Scalar(num);
}

Scalar Ring::inverse(const Scalar& x) const
{
    if (x == 0)
        throw std::domain_error("inverse of zero");
    switch (kind) {
    case RingKind::Integers:
        if (x == 1 || x == -1)
            return x;
        throw std::domain_error("not a unit in Z");
    case RingKind::Rationals:
        return Scalar(1) / x;
    case RingKind::PrimeField:
        return Scalar(mod_inverse(boost::multiprecision::numerator(normalize(x)), p));
    }
    return x;
}

bool Ring::is_unit(const Scalar& x) const
{
    Scalar y = normalize(x);
    if (y == 0)
        return false;
    return is_field() || y == 1 || y == -1;
}

std::string Ring::name() const
{
    switch (kind) {
    case RingKind::Integers:
        return "Z";
    case RingKind::Rationals:
        return "Q";
    case RingKind::PrimeField:
        return "Fp:" + std::to_string(p);
    }
    return "?";
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Scalar>>& d)
{
    Matrix m(d.size(), d.empty() ? 0 : d[0].size());
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d[i].size(); ++j)
            m.set(i, j, d[i][j]);
    return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const
{
    auto it = e_.find({i, j});
    return it == e_.end() ? Scalar(0) : it->second;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v)
{
    if (i >= rows_ || j >= cols_)
        throw std::out_of_range("matrix index");
    if (v == 0)
        e_.erase({i, j});
    else
        e_[{i, j}] = v;
}

void Matrix::add(std::size_t i, std::size_t j, const Scalar& v)
{
    if (v == 0)
        return;
    set(i, j, at(i, j) + v);
}

std::vector<std::vector<Scalar>> Matrix::dense() const
{
    std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_));
    for (auto& [k, v] : e_)
        d[k.first][k.second] = v;
    return d;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (auto& [k, v] : e_)
        t.set(k.second, k.first, v);
    return t;
}

Matrix Matrix::reduced(const Ring& R) const
{
    Matrix m(rows_, cols_);
    for (auto& [k, v] : e_)
        m.set(k.first, k.second, R.normalize(v));
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b, const Ring& R)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix dimension mismatch");
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> brow(b.rows());
    for (auto& [k, v] : b.entries())
        brow[k.first].push_back({k.second, v});
    std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
    for (auto& [k, v] : a.entries())
        for (auto& [j, w] : brow[k.second])
            acc[{k.first, j}] += v * w;
    Matrix c(a.rows(), b.cols());
    for (auto& [k, v] : acc)
        c.set(k.first, k.second, R.normalize(v));
    return c;
}

std::vector<Scalar> apply(const Matrix& a, const std::vector<Scalar>& v, const Ring& R)
{
    std::vector<Scalar> out(a.rows());
    for (auto& [k, x] : a.entries())
        out[k.first] += x * v[k.second];
    for (auto& x : out)
        x = R.normalize(x);
    return out;
}

namespace {

using Dense = std::vector<std::vector<Scalar>>;

struct Elim {
    const Ring& R;
    Dense A, U, Uinv, V, Vinv;
    std::size_t m, n;

    Elim(const Matrix& M, const Ring& R_) : R(R_), A(M.reduced(R_).dense()), m(M.rows()), n(M.cols())
    {
        U = Uinv = eye(m);
        V = Vinv = eye(n);
    }
    static Dense eye(std::size_t k)
    {
        Dense d(k, std::vector<Scalar>(k));
        for (std::size_t i = 0; i < k; ++i)
            d[i][i] = 1;
        return d;
    }
    Scalar nz(const Scalar& x) const { return R.normalize(x); }

    // row_i += q * row_j
    void row_add(std::size_t i, std::size_t j, const Scalar& q)
    {
        for (std::size_t c = 0; c < n; ++c)
            A[i][c] = nz(A[i][c] + q * A[j][c]);
        for (std::size_t c = 0; c < m; ++c)
            U[i][c] = nz(U[i][c] + q * U[j][c]);
        for (std::size_t r = 0; r < m; ++r)
            Uinv[r][j] = nz(Uinv[r][j] - q * Uinv[r][i]);
    }
    void row_swap(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        std::swap(A[i], A[j]);
        std::swap(U[i], U[j]);
        for (std::size_t r = 0; r < m; ++r)
            std::swap(Uinv[r][i], Uinv[r][j]);
    }
    void row_scale(std::size_t i, const Scalar& s)  // s a unit
    {
        Scalar si = R.inverse(s);
        for (std::size_t c = 0; c < n; ++c)
            A[i][c] = nz(A[i][c] * s);
        for (std::size_t c = 0; c < m; ++c)
            U[i][c] = nz(U[i][c] * s);
        for (std::size_t r = 0; r < m; ++r)
            Uinv[r][i] = nz(Uinv[r][i] * si);
    }
    // col_i += q * col_j
    void col_add(std::size_t i, std::size_t j, const Scalar& q)
    {
        for (std::size_t r = 0; r < m; ++r)
            A[r][i] = nz(A[r][i] + q * A[r][j]);
        for (std::size_t r = 0; r < n; ++r)
            V[r][i] = nz(V[r][i] + q * V[r][j]);
        for (std::size_t c = 0; c < n; ++c)
            Vinv[j][c] = nz(Vinv[j][c] - q * Vinv[i][c]);
    }
    void col_swap(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t r = 0; r < m; ++r)
            std::swap(A[r][i], A[r][j]);
        for (std::size_t r = 0; r < n; ++r)
            std::swap(V[r][i], V[r][j]);
        std::swap(Vinv[i], Vinv[j]);
    }

    static BigInt num(const Scalar& x) { return boost::multiprecision::numerator(x); }
    static BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

    std::size_t run_field()
    {
        std::size_t t = 0;
        while (t < m && t < n) {
            std::size_t pi = m, pj = n;
            for (std::size_t j = t; j < n && pi == m; ++j)
                for (std::size_t i = t; i < m; ++i)
                    if (A[i][j] != 0) {
                        pi = i, pj = j;
                        break;
                    }
            if (pi == m)
                break;
            row_swap(t, pi);
            col_swap(t, pj);
            row_scale(t, R.inverse(A[t][t]));
            for (std::size_t i = 0; i < m; ++i)
                if (i != t && A[i][t] != 0)
                    row_add(i, t, -A[i][t]);
            for (std::size_t j = t + 1; j < n; ++j)
                if (A[t][j] != 0)
                    col_add(j, t, -A[t][j]);
            ++t;
        }
        return t;
    }

    std::size_t run_integers()
    {
        std::size_t t = 0;
        while (t < m && t < n) {
            std::size_t pi = m, pj = n;
            BigInt best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (A[i][j] != 0 && (best == 0 || babs(num(A[i][j])) < best)) {
                        best = babs(num(A[i][j]));
                        pi = i, pj = j;
                    }
            if (pi == m)
                break;
            row_swap(t, pi);
            col_swap(t, pj);
            for (;;) {
                bool done = true;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (A[i][t] == 0)
                        continue;
                    BigInt q = num(A[i][t]) / num(A[t][t]);
                    if (q != 0)
                        row_add(i, t, Scalar(-q));
                    if (A[i][t] != 0) {
                        row_swap(i, t);
                        done = false;
                    }
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (A[t][j] == 0)
                        continue;
                    BigInt q = num(A[t][j]) / num(A[t][t]);
                    if (q != 0)
                        col_add(j, t, Scalar(-q));
                    if (A[t][j] != 0) {
                        col_swap(j, t);
                        done = false;
                    }
                }
                if (!done)
                    continue;
                BigInt piv = num(A[t][t]);
                for (std::size_t i = t + 1; i < m && done; ++i)
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (num(A[i][j]) % piv != 0) {
                            row_add(t, i, 1);
                            done = false;
                            break;
                        }
                if (done)
                    break;
            }
            if (A[t][t] < 0)
                row_scale(t, -1);
            ++t;
        }
        return t;
    }
};

Matrix to_matrix(const Dense& d, std::size_t r, std::size_t c)
{
    Matrix M(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            M.set(i, j, d[i][j]);
    return M;
}

struct FullSmith {
    SmithForm sf;
    Matrix Uinv;
};

FullSmith full_smith(const Matrix& A, const Ring& R)
{
    Elim e(A, R);
    std::size_t r = R.is_field() ? e.run_field() : e.run_integers();
    FullSmith out;
    out.sf.rank = r;
    out.sf.D = to_matrix(e.A, e.m, e.n);
    out.sf.U = to_matrix(e.U, e.m, e.m);
    out.sf.V = to_matrix(e.V, e.n, e.n);
    out.sf.Vinv = to_matrix(e.Vinv, e.n, e.n);
    out.Uinv = to_matrix(e.Uinv, e.m, e.m);
    for (std::size_t i = 0; i < r; ++i)
        out.sf.diagonal.push_back(e.A[i][i]);
    return out;
}

}  // namespace

SmithForm smith_normal_form(const Matrix& A, const Ring& R)
{
    return full_smith(A, R).sf;
}

std::size_t rank(const Matrix& A, const Ring& R)
{
    return smith_normal_form(A, R).rank;
}

std::string HomologyPresentation::to_string() const
{
    std::ostringstream os;
    os << "rank " << free_rank << " torsion ";
    if (torsion.empty())
        os << "-";
    for (std::size_t i = 0; i < torsion.size(); ++i)
        os << (i ? "," : "") << torsion[i];
    return os.str();
}

static void check_complex(const Matrix& d_in, const Matrix& d_out, const Ring& R)
{
    if (d_in.rows() != d_out.cols())
        throw std::invalid_argument("differentials do not share a basis");
    Matrix c = multiply(d_out, d_in, R);
    if (!c.is_zero()) {
        std::size_t w = c.entries().begin()->first.second;
        throw NotAComplex(w, "not a complex: d_out * d_in is nonzero on basis element " + std::to_string(w));
    }
}

HomologyPresentation homology_of_pair(const Matrix& d_in, const Matrix& d_out, const Ring& R)
{
    check_complex(d_in, d_out, R);
    std::size_t n = d_out.cols();
    std::size_t r_out = rank(d_out, R);
    SmithForm s = smith_normal_form(d_in, R);
    HomologyPresentation h;
    h.free_rank = n - r_out - s.rank;
    if (!R.is_field())
        for (auto& d : s.diagonal)
            if (!R.is_unit(d))
                h.torsion.push_back(d);
    return h;
}

KernelBasis kernel_basis(const Matrix& A, const Ring& R)
{
    FullSmith f = full_smith(A, R);
    std::size_t n = A.cols(), r = f.sf.rank, k = n - r;
    KernelBasis kb{Matrix(n, k), Matrix(k, n)};
    for (auto& [key, v] : f.sf.V.entries())
        if (key.second >= r)
            kb.basis.set(key.first, key.second - r, v);
    for (auto& [key, v] : f.sf.Vinv.entries())
        if (key.first >= r)
            kb.coords.set(key.first - r, key.second, v);
    return kb;
}

HomologyBasis homology_basis(const Matrix& d_in, const Matrix& d_out, const Ring& R)
{
    check_complex(d_in, d_out, R);
    KernelBasis kb = kernel_basis(d_out, R);
    Matrix B = multiply(kb.coords, d_in, R);
    FullSmith f = full_smith(B, R);
    std::size_t k = kb.basis.cols(), s = f.sf.rank;
    HomologyBasis hb;
    hb.presentation.free_rank = k - s;
    if (!R.is_field())
        for (auto& d : f.sf.diagonal)
            if (!R.is_unit(d))
                hb.presentation.torsion.push_back(d);
    Matrix sel_cols(k, k - s), sel_rows(k - s, k);
    for (std::size_t i = 0; i < k - s; ++i) {
        sel_cols.set(s + i, i, 1);
        sel_rows.set(i, s + i, 1);
    }
    hb.cycles = multiply(kb.basis, multiply(f.Uinv, sel_cols, R), R);
    hb.projection = multiply(multiply(sel_rows, f.sf.U, R), kb.coords, R);
    return hb;
}

}  // namespace eqt
