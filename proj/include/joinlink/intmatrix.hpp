#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "joinlink/error.hpp"
#include "joinlink/intpoly.hpp"

namespace jl {

// Dense matrix over the integers with value semantics.
class IMat {
public:
  IMat() = default;
  IMat(int rows, int cols);
  static IMat identity(int n);
  static IMat from_rows(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  mpz_class& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const mpz_class& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  IMat transpose() const;
  IMat operator-() const;
  friend IMat operator+(const IMat& a, const IMat& b);
  friend IMat operator-(const IMat& a, const IMat& b);
  friend IMat operator*(const IMat& a, const IMat& b);
  friend bool operator==(const IMat& a, const IMat& b);
  friend bool operator!=(const IMat& a, const IMat& b) { return !(a == b); }

  bool is_symmetric() const;
  mpz_class max_abs() const;

  // Exact determinant (modular with a Hadamard bound).
  mpz_class det() const;

  std::string to_string() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> a_;
};

IMat kron(const IMat& a, const IMat& b);

// Solves l * x = r exactly; l must have determinant +-1 (error NonUnimodular).
IMat solve_unimodular(const IMat& l, const IMat& r);

// Diagonal of the Smith normal form: nonnegative, each entry dividing the
// next, zeros trailing, length min(rows, cols).
std::vector<mpz_class> smith_diagonal(IMat a);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  int rank() const { return positive + negative; }
  int signature() const { return positive - negative; }
};

// Sylvester inertia of a symmetric matrix via rational congruence reduction.
Inertia symmetric_inertia(const IMat& s);

// det(t*I - m), monic and exact.
IntPoly charpoly(const IMat& m);

// det(a + t*b) by interpolation at integer nodes.
IntPoly det_pencil(const IMat& a, const IMat& b);

}  // namespace jl
