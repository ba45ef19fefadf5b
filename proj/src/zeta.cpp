#include "joinlink/zeta.hpp"

#include <utility>

#include "joinlink/error.hpp"

namespace jl {

namespace {

void require_unit_roots(const IntPoly& p, const char* what) {
  if (p.is_zero())
    fail(errcode::zero_root, std::string(what) + ": zero polynomial");
  if (p.constant_term() == 0)
    fail(errcode::zero_root,
         std::string(what) + ": constant term is zero, a root would lie at 0");
}

}  // namespace

Divisor::Divisor() : num_(IntPoly::constant(1)), den_(IntPoly::constant(1)) {}

Divisor::Divisor(IntPoly num, IntPoly den) {
  require_unit_roots(num, "divisor numerator");
  require_unit_roots(den, "divisor denominator");
  num_ = num.primitive_positive();
  den_ = den.primitive_positive();
  IntPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
}

Divisor Divisor::identity() { return Divisor(IntPoly::from_longs({-1, 1}), IntPoly::constant(1)); }

bool Divisor::is_zero() const { return num_.degree() == 0 && den_.degree() == 0; }

bool Divisor::operator==(const Divisor& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

Divisor divisor_of(const IntPoly& num, const IntPoly& den) {
  return Divisor(num, den);
}

ZetaFunction zeta_from_charpolys(std::vector<IntPoly> ps) {
  IntPoly num = IntPoly::constant(1);
  IntPoly den = IntPoly::constant(1);
  for (size_t j = 0; j < ps.size(); ++j) {
    require_unit_roots(ps[j], "characteristic polynomial");
    if (j % 2 == 1)
      num = num * ps[j];
    else
      den = den * ps[j];
  }
  ZetaFunction z;
  z.charpolys = std::move(ps);
  z.divisor = Divisor(std::move(num), std::move(den));
  return z;
}

ZetaFunction zeta_from_middle_charpoly(const IntPoly& p, int n) {
  if (n < 2)
    fail(errcode::domain, "middle charpoly placement needs at least 2 variables");
  std::vector<IntPoly> ps(static_cast<size_t>(n), IntPoly::constant(1));
  ps[0] = IntPoly::from_longs({1, -1});
  ps[static_cast<size_t>(n) - 1] = p;
  return zeta_from_charpolys(std::move(ps));
}

Divisor reduced_zeta(const ZetaFunction& z) {
  return Divisor(z.divisor.num() * IntPoly::from_longs({-1, 1}), z.divisor.den());
}

IntPoly composed_product(const IntPoly& p, const IntPoly& q) {
  require_unit_roots(p, "composed product");
  require_unit_roots(q, "composed product");
  const long dp = p.degree();
  const long dq = q.degree();
  if (dp == 0 || dq == 0) return IntPoly::constant(1);

  // R(t) = Res_y(p(y), Q_t(y)) with Q_t(y) = sum_j q_j t^j y^(dq-j) has
  // y-leading coefficient q(0) for every t, so specializing t commutes with
  // the resultant and R has degree exactly dp*dq.
  const long deg = dp * dq;
  std::vector<mpz_class> nodes, values;
  nodes.reserve(deg + 1);
  values.reserve(deg + 1);
  for (long i = 0; i <= deg; ++i) {
    const long node = (i % 2 == 1) ? (i + 1) / 2 : -(i / 2);
    std::vector<mpz_class> qy(static_cast<size_t>(dq) + 1);
    mpz_class tp = 1;
    for (long j = 0; j <= dq; ++j) {
      qy[static_cast<size_t>(dq - j)] = q.coeffs()[static_cast<size_t>(j)] * tp;
      tp *= node;
    }
    nodes.emplace_back(node);
    values.push_back(resultant(p, IntPoly(std::move(qy))));
  }
  return interpolate_integer(nodes, values).primitive_positive();
}

Divisor divisor_join(const Divisor& a, const Divisor& b) {
  IntPoly num = composed_product(a.num(), b.num()) * composed_product(a.den(), b.den());
  IntPoly den = composed_product(a.num(), b.den()) * composed_product(a.den(), b.num());
  return Divisor(std::move(num), std::move(den));
}

}  // namespace jl
