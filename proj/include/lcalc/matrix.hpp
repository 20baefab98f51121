#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lcalc {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Zero-sized dimensions are legal and common: a hom out of the trivial group
/// has zero columns, a hom into it zero rows.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const IntVector& entries);
  static IntMatrix column(const IntVector& entries);
  /// Rows must all have length `cols`.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector column_vector(std::size_t c) const;
  IntVector row_vector(std::size_t r) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  /// [this | other]
  IntMatrix hstack(const IntMatrix& other) const;
  /// [this ; other]
  IntMatrix vstack(const IntMatrix& other) const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  static IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

  // Elementary operations used by the Smith reduction.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);
  /// row_i += q * row_j
  void add_row_multiple(std::size_t i, std::size_t j, const Integer& q);
  /// col_i += q * col_j
  void add_col_multiple(std::size_t i, std::size_t j, const Integer& q);

  IntVector operator*(const IntVector& v) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::vector<IntVector> to_rows() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free Bareiss elimination; square matrices only.
Integer determinant(const IntMatrix& m);

/// U * M * V == S with U, V unimodular and S diagonal, non-negative,
/// d_1 | d_2 | ... | d_rank, zero afterwards.
struct SmithDecomposition {
  IntMatrix left;           // U
  IntMatrix left_inverse;   // U^-1
  IntMatrix diagonal;       // S
  IntMatrix right;          // V
  IntMatrix right_inverse;  // V^-1
  std::size_t rank = 0;

  IntVector invariants() const;
};

/// Pivot rule: smallest absolute value among the remaining nonzero entries,
/// first in row-major scan order. Deterministic for a given input.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Basis of {v in Z^cols : m v = 0}, as matrix columns.
IntMatrix kernel_lattice(const IntMatrix& m);

/// Some v with m v = y, if one exists over the integers.
bool solve_integer(const IntMatrix& m, const IntVector& y, IntVector& solution);

/// Non-negative residue of a modulo d; d == 0 leaves a unchanged.
Integer reduce_mod(const Integer& a, const Integer& d);

}  // namespace lcalc
