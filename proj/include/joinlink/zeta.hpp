#pragma once

#include <vector>

#include "joinlink/intpoly.hpp"

namespace jl {

// Formal difference of root multisets in C*, stored as a reduced fraction of
// integer polynomials.  Both parts are primitive with positive leading
// coefficient and nonzero constant term, and gcd(num, den) = 1; leading
// scalars are deliberately forgotten, so equality of divisors is equality of
// the normalized pairs.
class Divisor {
public:
  // Zero divisor (1, 1).
  Divisor();

  // Normalizes and reduces.  Throws ZeroRoot if either polynomial is zero or
  // has a zero constant term.
  Divisor(IntPoly num, IntPoly den);

  // Divisor of (t - 1): the single root 1, the unit for divisor_join.
  static Divisor identity();

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const;

  bool operator==(const Divisor& o) const;
  bool operator!=(const Divisor& o) const { return !(*this == o); }

private:
  IntPoly num_;
  IntPoly den_;
};

Divisor divisor_of(const IntPoly& num, const IntPoly& den);

// Alternating product of monodromy characteristic polynomials over homology
// degrees: zeta(t) = prod_j P_j(t)^((-1)^(j+1)), so P_0 lands in the
// denominator and each subsequent degree alternates.
struct ZetaFunction {
  std::vector<IntPoly> charpolys;
  Divisor divisor;
};

// Each P_j must be nonzero with nonzero constant term.
ZetaFunction zeta_from_charpolys(std::vector<IntPoly> ps);

// Zeta of a fibered link in S^(2n-1) whose fiber has reduced homology only in
// middle degree n - 1 with characteristic polynomial p: the charpoly list is
// [1 - t, 1, ..., 1, p] of length n.  Requires n >= 2.
ZetaFunction zeta_from_middle_charpoly(const IntPoly& p, int n);

// Divisor of (t - 1) * zeta(t).
Divisor reduced_zeta(const ZetaFunction& z);

// Integer polynomial whose root multiset is {a * b : p(a) = 0, q(b) = 0},
// computed exactly as Res_y(p(y), y^deg(q) * q(t/y)) by interpolation at
// integer nodes.  Result is primitive with positive leading coefficient; the
// degree is deg(p) * deg(q).  Both inputs need nonzero constant terms.
IntPoly composed_product(const IntPoly& p, const IntPoly& q);

// Bilinear extension of composed_product to formal differences:
//   num = cp(n1, n2) * cp(d1, d2),  den = cp(n1, d2) * cp(d1, n2),
// reduced at the end.  Realizes the multiplicativity of reduced zeta
// divisors under the join.
Divisor divisor_join(const Divisor& a, const Divisor& b);

}  // namespace jl
