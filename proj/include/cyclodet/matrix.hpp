#ifndef CYCLODET_MATRIX_HPP
#define CYCLODET_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "cyclodet/field.hpp"
#include "cyclodet/trinomial.hpp"  // Int

namespace cyclodet {

// Dense square matrix over a Field, row-major. Never mutated by the
// elimination routines; they work on a copy.
class FqMatrix {
public:
    FqMatrix(const Field& F, std::size_t dim) : field_(&F), dim_(dim), a_(dim * dim, Fq{0}) {}

    const Field& field() const { return *field_; }
    std::size_t dim() const { return dim_; }

    Fq at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
    Fq& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }

    std::span<const Fq> row(std::size_t i) const { return {a_.data() + i * dim_, dim_}; }
    std::span<Fq> row(std::size_t i) { return {a_.data() + i * dim_, dim_}; }

    friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
        return a.dim_ == b.dim_ && a.a_ == b.a_;
    }

private:
    const Field* field_;
    std::size_t dim_;
    std::vector<Fq> a_;
};

// Dense square matrix over arbitrary-precision integers (Carlitz check).
class ZMatrix {
public:
    ZMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, Int(0)) {}

    std::size_t dim() const { return dim_; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }

private:
    std::size_t dim_;
    std::vector<Int> a_;
};

// Exact determinant by Gaussian elimination; pivot is the first nonzero
// entry in the column, row swaps tracked for sign. Row updates below the
// pivot run in parallel.
Fq determinant(const FqMatrix& M);

// Row-echelon rank; (rank == dim) iff (determinant != 0).
std::size_t rank(const FqMatrix& M);

// Circulant C(t_0, ..., t_{m-1}): entry (i, j) = t_{(j-i) mod m}. Throws on
// an empty row.
FqMatrix circulant(const Field& F, std::span<const Fq> row);

// Product over pairs i < j of (x_j - x_i)(1/x_j - 1/x_i). Entries must be
// nonzero and pairwise distinct. Equals 1 when xs is the full canonical
// enumeration of the nonzero elements.
Fq vandermonde_pair_product(const Field& F, std::span<const Fq> xs);

inline constexpr std::size_t kCharPolyMaxDim = 50;  // bignum growth bound

// Characteristic polynomial det(tI - M) by the division-free Berkowitz
// recursion; coeffs[i] is the coefficient of t^i, coeffs.back() == 1.
std::vector<Int> char_poly(const ZMatrix& M);

// Serial reference implementations kept alongside the parallel kernels.
// determinant/rank mirror the elimination without any threading, and
// determinant_cofactor is an independent oracle for tiny matrices.
namespace reference {

Fq determinant(const FqMatrix& M);
std::size_t rank(const FqMatrix& M);

// Cofactor expansion along the first row; dim <= 6.
Fq determinant_cofactor(const FqMatrix& M);

}  // namespace reference

}  // namespace cyclodet

#endif
