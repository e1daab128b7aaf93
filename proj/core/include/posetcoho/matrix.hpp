#ifndef POSETCOHO_MATRIX_HPP
#define POSETCOHO_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace posetcoho {

using Int = boost::multiprecision::cpp_int;

/// Dense matrix over arbitrary-precision integers, row-major.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMat&) const = default;

    bool is_zero() const;
    IntMat transposed() const;
    IntMat operator*(const IntMat& rhs) const;
    IntMat operator+(const IntMat& rhs) const;
    IntMat operator-(const IntMat& rhs) const;
    IntMat operator-() const;

    IntMat rows_subset(const std::vector<std::size_t>& idx) const;
    IntMat cols_subset(const std::vector<std::size_t>& idx) const;
    void set_block(std::size_t i0, std::size_t j0, const IntMat& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

IntMat hstack(const IntMat& a, const IntMat& b);
IntMat vstack(const IntMat& a, const IntMat& b);

/// Smith normal form u*a*v = d with u, v unimodular and d diagonal with a
/// divisibility chain d1 | d2 | ... of non-negative entries.
struct SmithForm {
    IntMat u, v, d;
    std::size_t rank = 0;
    std::vector<Int> diag;  // the `rank` nonzero diagonal entries
};

SmithForm smith(const IntMat& a, bool transforms = true);

std::size_t rank_of(const IntMat& a);

/// Nonzero invariant factors of `a` as a divisibility chain (includes 1s).
std::vector<Int> invariant_factors(const IntMat& a);

/// Columns form a basis of {x : a x = 0}; the basis spans a saturated lattice.
IntMat kernel_basis(const IntMat& a);

/// X with k * X = m, if every column of m lies in the column span of k.
std::optional<IntMat> solve_in_span(const IntMat& k, const IntMat& m);

bool in_span(const IntMat& k, const IntMat& m);

/// Basis of the lattice {x : a x lies in the column span of r}.
IntMat preimage_lattice(const IntMat& a, const IntMat& r);

/// Basis (as columns) of the lattice spanned by the columns of m.
IntMat column_lattice_basis(const IntMat& m);

/// Exact inverse of a square matrix with determinant +-1.
IntMat inverse_unimodular(const IntMat& a);

}  // namespace posetcoho

#endif
