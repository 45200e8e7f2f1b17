#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eqt {

using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class RingKind { Integers, Rationals, PrimeField };

// Coefficient ring. Chain-level code works over any of the three kinds,
// homology only over Z, Q and F_p.
struct Ring {
    RingKind kind = RingKind::Integers;
    std::int64_t p = 0;

    static Ring integers() { return {RingKind::Integers, 0}; }
    static Ring rationals() { return {RingKind::Rationals, 0}; }
    static Ring prime_field(std::int64_t p);
    // "Z", "Q", "Fp:<p>"
    static Ring parse(const std::string& s);

    bool is_field() const { return kind != RingKind::Integers; }
    Scalar normalize(const Scalar& x) const;
    Scalar inverse(const Scalar& x) const;
    bool is_unit(const Scalar& x) const;
    std::string name() const;
    bool operator==(const Ring& o) const { return kind == o.kind && p == o.p; }
};

bool is_prime(std::int64_t p);

class NotAComplex : public std::runtime_error {
public:
    NotAComplex(std::size_t witness, const std::string& what)
        : std::runtime_error(what), witness_(witness) {}
    std::size_t witness() const { return witness_; }

private:
    std::size_t witness_;
};

// Sparse matrix, stored entries are nonzero.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_dense(const std::vector<std::vector<Scalar>>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& v);
    void add(std::size_t i, std::size_t j, const Scalar& v);
    const std::map<std::pair<std::size_t, std::size_t>, Scalar>& entries() const& { return e_; }
    std::map<std::pair<std::size_t, std::size_t>, Scalar> entries() && { return std::move(e_); }
    std::vector<std::vector<Scalar>> dense() const;
    bool is_zero() const { return e_.empty(); }
    Matrix transpose() const;
    Matrix reduced(const Ring& R) const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, Scalar> e_;
};

Matrix multiply(const Matrix& a, const Matrix& b, const Ring& R);
std::vector<Scalar> apply(const Matrix& a, const std::vector<Scalar>& v, const Ring& R);

struct SmithForm {
    Matrix D, U, V, Vinv;
    std::size_t rank = 0;
    std::vector<Scalar> diagonal;  // nonzero diagonal entries d1 | d2 | ...
};

// U*A*V = D with D diagonal; over a field the nonzero entries are 1.
SmithForm smith_normal_form(const Matrix& A, const Ring& R);
std::size_t rank(const Matrix& A, const Ring& R);

struct HomologyPresentation {
    std::size_t free_rank = 0;
    std::vector<Scalar> torsion;
    bool operator==(const HomologyPresentation& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
    std::string to_string() const;
};

// H = ker(d_out) / im(d_in) in a shared basis of the middle degree.
HomologyPresentation homology_of_pair(const Matrix& d_in, const Matrix& d_out, const Ring& R);

// Basis (columns) of ker A, saturated over Z, and a left inverse giving coordinates.
struct KernelBasis {
    Matrix basis;   // n x k
    Matrix coords;  // k x n, coords * basis = identity
};
KernelBasis kernel_basis(const Matrix& A, const Ring& R);

// Representatives of H = ker(d_out)/im(d_in): cycles whose classes span the free part,
// with a projection from cycles to coefficient vectors (free part only).
struct HomologyBasis {
    HomologyPresentation presentation;
    Matrix cycles;      // n x free_rank
    Matrix projection;  // free_rank x n, defined on cycles, kills boundaries (mod torsion)
};
HomologyBasis homology_basis(const Matrix& d_in, const Matrix& d_out, const Ring& R);

}  // namespace eqt
