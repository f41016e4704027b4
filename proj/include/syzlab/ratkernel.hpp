#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace syz {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<std::vector<T>>& columns, std::size_t rows);
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const;
    std::vector<T> column(std::size_t c) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator-() const;
    bool operator==(const Matrix& rhs) const = default;

    bool is_identity() const;
    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

RatMatrix to_rational(const IntMatrix& m);
// Throws if some entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);
IntVector to_integer(const RatVector& v);

std::size_t rank(const RatMatrix& m);
inline std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

std::vector<RatVector> kernel_basis(const RatMatrix& m);
inline std::vector<RatVector> kernel_basis(const IntMatrix& m) { return kernel_basis(to_rational(m)); }

// A particular solution of a x = b with free variables set to zero.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

Rational determinant(const RatMatrix& m);
Integer determinant(const IntMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);
// Inverse of a matrix with determinant +-1; throws otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

IntMatrix power(const IntMatrix& m, int exponent);

struct SmithForm {
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix d;  // diagonal, d_i | d_{i+1}, nonnegative
    IntMatrix v;  // cols x cols, unimodular
    std::size_t rank = 0;
};

// u * m * v == d.
SmithForm smith_normal_form(const IntMatrix& m);

// Row-style Hermite normal form: nonzero rows only, positive pivots, entries above pivots reduced.
IntMatrix hermite_normal_form(const IntMatrix& rows);

// Basis of (Q-span of the vectors) intersected with Z^n, in Hermite form.
std::vector<IntVector> saturate(const std::vector<IntVector>& sublattice);

// Index [Z^n : L] of a full-rank lattice spanned by the given vectors; 0 if rank deficient.
Integer lattice_index(const std::vector<IntVector>& generators, std::size_t ambient);

Integer content(const IntVector& v);
bool is_primitive(const IntVector& v);

std::string to_string(const Rational& q);
std::string to_string(const IntMatrix& m);

// Integer matrices X with det +-1 satisfying X * a_k == b_k * X for every pair.
// The solution space is computed exactly and small combinations of a saturated basis are searched.
std::optional<IntMatrix> find_unimodular_intertwiner(
    const std::vector<std::pair<IntMatrix, IntMatrix>>& pairs, int coefficient_bound = 2);

}  // namespace syz
