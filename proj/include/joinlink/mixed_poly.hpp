#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "joinlink/rational.hpp"

namespace jl {

using ComplexPoint = std::vector<std::complex<double>>;

// Exponent pair of one term c * z^nu * zbar^mu.  nu and mu have one entry per
// variable; entries are nonnegative and all exponent arithmetic is
// overflow-checked.
struct MixedMonomial {
  std::vector<int> nu, mu;

  MixedMonomial() = default;
  MixedMonomial(std::vector<int> n, std::vector<int> m)
      : nu(std::move(n)), mu(std::move(m)) {}

  // Radial exponent nu + mu, the lattice point the term contributes to the
  // Newton polytope.
  std::vector<long> radial() const;

  friend bool operator==(const MixedMonomial& a, const MixedMonomial& b) {
    return a.nu == b.nu && a.mu == b.mu;
  }

  // Lexicographic on (nu, mu); the canonical term order.
  friend bool operator<(const MixedMonomial& a, const MixedMonomial& b) {
    if (a.nu != b.nu) return a.nu < b.nu;
    return a.mu < b.mu;
  }
};

int checked_exp_add(int a, int b);

// Polynomial in z_1..z_n and their conjugates with Gaussian rational
// coefficients.  Terms are collected eagerly and zero coefficients dropped, so
// equal polynomials have identical term maps.
class MixedPolynomial {
public:
  explicit MixedPolynomial(int n);

  int nvars() const { return n_; }
  const std::map<MixedMonomial, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  void add_term(const MixedMonomial& m, const GaussianRational& c);

  static MixedPolynomial constant(int n, const GaussianRational& c);
  static MixedPolynomial variable(int n, int index, bool conjugated);

  MixedPolynomial conjugate() const;
  MixedPolynomial wirtinger(bool antiholomorphic, int var_index) const;  // 1-based index
  MixedPolynomial pow(long e) const;

  std::complex<double> evaluate(const ComplexPoint& w) const;

  // Canonical text in the input grammar; parse(text()) reproduces the value.
  std::string text() const;

  friend MixedPolynomial operator+(const MixedPolynomial& a, const MixedPolynomial& b);
  friend MixedPolynomial operator-(const MixedPolynomial& a, const MixedPolynomial& b);
  friend MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b);

  friend bool operator==(const MixedPolynomial& a, const MixedPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  friend bool operator!=(const MixedPolynomial& a, const MixedPolynomial& b) {
    return !(a == b);
  }

private:
  void check_same_vars(const MixedPolynomial& o) const;

  int n_;
  std::map<MixedMonomial, GaussianRational> terms_;
};

// Parses the polynomial grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' natural)?
//   base   := 'z' natural | 'zb' natural | 'conj' '(' expr ')' | '(' expr ')'
//             | coefficient
//   coefficient := rational | rational 'i' | '(' rational ('+'|'-') rational 'i' ')'
// declared_n = 0 infers the variable count from the largest index used
// (at least 1).  Syntax errors report line and column.
MixedPolynomial parse_poly(const std::string& source, int declared_n = 0);

}  // namespace jl
