#pragma once

// Exact integer and rational linear algebra. Everything here works on GMP
// integers and rationals; there is no floating point anywhere in the core.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;

/// Element of N or M (or an exponent vector) in fixed coordinates.
using LatticeVector = std::vector<Int>;
/// Element of N_R or M_R with exact rational coordinates.
using RationalVector = std::vector<Rat>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  /// Builds a matrix whose rows are `rows`; `cols` is needed when `rows` is empty.
  static IntMatrix from_rows(std::size_t cols, std::span<const LatticeVector> rows);
  static IntMatrix from_columns(std::size_t rows, std::span<const LatticeVector> cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  LatticeVector row(std::size_t i) const;
  LatticeVector column(std::size_t j) const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t i);

  bool is_diagonal() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

LatticeVector operator*(const IntMatrix& a, const LatticeVector& x);

struct Primitive {
  LatticeVector primitive;
  Int scale;
};

/// Divides `v` by the gcd of its coordinates. Throws ZeroVector on v = 0.
Primitive primitivize(const LatticeVector& v);

struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
};

/// D = U * A * V with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
SmithForm smith_normal_form(const IntMatrix& a);

struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
};

/// Row-style HNF: H = U * A, pivots positive, entries above a pivot reduced
/// into [0, pivot), zero rows at the bottom.
HermiteForm hermite_normal_form(const IntMatrix& a);

/// Basis of {x in Z^cols : A x = 0}, in HNF.
std::vector<LatticeVector> kernel_lattice(const IntMatrix& a);

/// Some x with A x = b. Pivots are taken leftmost; free variables are zero.
std::optional<RationalVector> solve_rational(const IntMatrix& a, const RationalVector& b);

std::size_t matrix_rank(const IntMatrix& a);
Int determinant(const IntMatrix& a);
/// Inverse of a unimodular matrix; throws Internal if det != +-1.
IntMatrix unimodular_inverse(const IntMatrix& a);

// Vector helpers.
Int dot(const LatticeVector& a, const LatticeVector& b);
Rat dot(const LatticeVector& a, const RationalVector& b);
bool is_zero(const LatticeVector& v);
bool is_zero(const RationalVector& v);
LatticeVector negated(const LatticeVector& v);
LatticeVector add(const LatticeVector& a, const LatticeVector& b);
LatticeVector sub(const LatticeVector& a, const LatticeVector& b);
LatticeVector scaled(const LatticeVector& v, const Int& c);
RationalVector to_rational(const LatticeVector& v);
/// Smallest positive integer multiple of v that is integral, then primitive.
/// Returns the zero vector unchanged.
LatticeVector primitive_direction(const RationalVector& v);
Int inf_norm(const LatticeVector& v);

/// Lattice span_R(gens) intersected with Z^rank, as an HNF basis.
std::vector<LatticeVector> saturated_basis(std::size_t rank, std::span<const LatticeVector> gens);
/// {m in Z^rank : <m, g> = 0 for every g}, as an HNF basis.
std::vector<LatticeVector> orthogonal_lattice(std::size_t rank, std::span<const LatticeVector> gens);
/// v minus its orthogonal projection onto span(basis), as a primitive
/// integer direction (zero if v lies in the span).
LatticeVector project_away(const LatticeVector& v, std::span<const LatticeVector> basis);

std::string to_string(const LatticeVector& v);
std::string to_string(const RationalVector& v);

}  // namespace toric
