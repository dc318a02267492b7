#pragma once

// Exact integer and rational linear algebra.
//
// Everything here works on GMP integers (mpz_class) and rationals
// (mpq_class, always canonicalized). Matrices are tiny in practice (at most a
// handful of rows and columns), so the algorithms favour clarity over speed.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torhyp {

using Int = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

/// Thrown when an input violates a documented precondition (bad parameters,
/// malformed divisors, unknown labels, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when two routes that must agree do not (an internal inconsistency).
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown when an enumeration would be unbounded or exceed its guard.
class EnumerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major integer matrix.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);
  IntMat(std::initializer_list<std::initializer_list<long>> rows);

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<IntVec>& rows, std::size_t cols = 0);
  static IntMat from_columns(const std::vector<IntVec>& cols, std::size_t rows = 0);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] IntVec row(std::size_t i) const;
  [[nodiscard]] IntVec col(std::size_t j) const;
  [[nodiscard]] IntMat transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const IntMat& a, const IntMat& b);
  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend IntVec operator*(const IntMat& a, const IntVec& v);

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMat& m);

/// U * M * V == S with U, V unimodular and S diagonal, d_1 | d_2 | ... .
struct SnfDecomposition {
  IntMat U;
  IntMat S;
  IntMat V;
  std::size_t rank = 0;

  /// Nonzero diagonal entries of S (all positive).
  [[nodiscard]] IntVec invariant_factors() const;
  /// Free rank of coker(M) = rows - rank.
  [[nodiscard]] std::size_t cokernel_free_rank() const { return S.rows() - rank; }
  /// Invariant factors > 1, i.e. the torsion part of coker(M).
  [[nodiscard]] IntVec cokernel_torsion() const;
};

SnfDecomposition smith_normal_form(const IntMat& m);

/// Lattice basis of ker(M) over Z. Empty when the kernel is trivial.
std::vector<IntVec> integer_kernel(const IntMat& m);

struct ExactSolution {
  enum class Status { Unique, Underdetermined, Inconsistent };
  Status status = Status::Inconsistent;
  /// Unique solution, or a particular solution (free variables set to zero).
  RatVec x;

  [[nodiscard]] bool has_solution() const { return status != Status::Inconsistent; }
};

/// Exact rational solution of M * x = b.
ExactSolution solve_exact(const IntMat& m, const IntVec& b);

/// Some integer solution of M * x = b, if one exists.
std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& b);

std::size_t rank(const IntMat& m);
Int determinant(const IntMat& m);

Int dot(const IntVec& a, const IntVec& b);
Int gcd_of(const IntVec& v);
bool is_zero(const IntVec& v);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const Int& k, const IntVec& v);
/// Cross product of two 3-vectors.
IntVec cross(const IntVec& a, const IntVec& b);

/// Converts a rational vector to integers; nullopt if some entry is not integral.
std::optional<IntVec> to_integers(const RatVec& v);

/// Canonical text form: "7", "-3/2".
std::string format(const Rational& q);
std::string format(const Int& z);

}  // namespace torhyp
