#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "joinlink/error.hpp"

namespace jl {

// Univariate polynomial over the integers.  Coefficients are stored constant
// term first; the invariant is that the leading (last) coefficient is nonzero,
// with the zero polynomial represented by an empty vector.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly constant(long v) { return IntPoly({mpz_class(v)}); }
  static IntPoly from_longs(const std::vector<long>& coeffs);

  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const mpz_class& leading() const;
  mpz_class constant_term() const { return c_.empty() ? mpz_class(0) : c_.front(); }

  mpz_class content() const;        // nonnegative gcd of coefficients
  IntPoly primitive_positive() const;  // content removed, leading coefficient > 0

  mpz_class eval(const mpz_class& x) const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  // Exact quotient; fails if the division leaves a remainder.
  IntPoly divide_exact(const IntPoly& d) const;

  // Human-readable form like "t^2 - 3t + 1" for messages and docs.
  std::string to_string() const;

private:
  void normalize();

  std::vector<mpz_class> c_;
};

// Resultant computed by the subresultant pseudo-remainder sequence; exact over
// arbitrary-precision integers.  Res(a, b) = 0 when either argument is zero.
mpz_class resultant(const IntPoly& a, const IntPoly& b);

// Positive-leading gcd including contents (primitive PRS).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Recovers the unique integer polynomial of degree < nodes.size() through the
// given points; fails if the data is not integral.
IntPoly interpolate_integer(const std::vector<mpz_class>& nodes,
                            const std::vector<mpz_class>& values);

}  // namespace jl
