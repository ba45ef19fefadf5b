#include "joinlink/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace jl {

namespace {

// Remainder of lc(d)^(deg n - deg d + 1) * n under division by d.  Requires
// deg n >= deg d >= 0.
IntPoly pseudo_rem(const IntPoly& n, const IntPoly& d) {
  std::vector<mpz_class> r = n.coeffs();
  const std::vector<mpz_class>& dc = d.coeffs();
  const int dn = n.degree();
  const int dd = d.degree();
  const mpz_class& lead = dc.back();
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(dn - dd + 1));
  for (auto& x : r) x *= scale;
  for (int k = dn; k >= dd; --k) {
    if (r[k] == 0) continue;
    mpz_class q = r[k] / lead;  // exact by the premultiplied scale
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= q * dc[j];
  }
  r.resize(dd > 0 ? dd : 0);
  return IntPoly(std::move(r));
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::from_longs(const std::vector<long>& coeffs) {
  std::vector<mpz_class> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return IntPoly(std::move(c));
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::leading() const {
  if (c_.empty()) fail(errcode::domain, "leading coefficient of zero polynomial");
  return c_.back();
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_positive() const {
  if (c_.empty()) return IntPoly();
  mpz_class g = content();
  if (c_.back() < 0) g = -g;
  std::vector<mpz_class> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(x / g);
  return IntPoly(std::move(out));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::operator-() const {
  std::vector<mpz_class> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(-x);
  return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> out(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> out(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
  if (d.is_zero()) fail(errcode::domain, "division by zero polynomial");
  if (is_zero()) return IntPoly();
  if (degree() < d.degree()) fail(errcode::internal, "inexact polynomial division");
  std::vector<mpz_class> r = c_;
  const std::vector<mpz_class>& dc = d.c_;
  const int dd = d.degree();
  std::vector<mpz_class> q(static_cast<size_t>(degree() - dd) + 1, mpz_class(0));
  for (int k = degree(); k >= dd; --k) {
    if (r[k] == 0) continue;
    mpz_class qk;
    mpz_class rem;
    mpz_tdiv_qr(qk.get_mpz_t(), rem.get_mpz_t(), r[k].get_mpz_t(), dc.back().get_mpz_t());
    if (rem != 0) fail(errcode::internal, "inexact polynomial division");
    q[k - dd] = qk;
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= qk * dc[j];
  }
  for (const auto& x : r)
    if (x != 0) fail(errcode::internal, "inexact polynomial division");
  return IntPoly(std::move(q));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& a = c_[k];
    if (a == 0) continue;
    mpz_class mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

mpz_class resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.degree() == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), a.leading().get_mpz_t(), static_cast<unsigned long>(b.degree()));
    return r;
  }
  if (b.degree() == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(a.degree()));
    return r;
  }

  IntPoly A = a;
  IntPoly B = b;
  int sign = 1;
  if (A.degree() < B.degree()) {
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    std::swap(A, B);
  }
  mpz_class ca = A.content();
  mpz_class cb = B.content();
  A = IntPoly([&] {
    std::vector<mpz_class> v;
    for (const auto& x : A.coeffs()) v.push_back(x / ca);
    return v;
  }());
  B = IntPoly([&] {
    std::vector<mpz_class> v;
    for (const auto& x : B.coeffs()) v.push_back(x / cb);
    return v;
  }());
  mpz_class t;
  {
    mpz_class pa, pb;
    mpz_pow_ui(pa.get_mpz_t(), ca.get_mpz_t(), static_cast<unsigned long>(B.degree()));
    mpz_pow_ui(pb.get_mpz_t(), cb.get_mpz_t(), static_cast<unsigned long>(A.degree()));
    t = pa * pb;
  }

  mpz_class g = 1;
  mpz_class h = 1;
  while (true) {
    int delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    IntPoly R = pseudo_rem(A, B);
    A = B;
    {
      mpz_class div;
      mpz_class hp;
      mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
      div = g * hp;
      std::vector<mpz_class> v;
      v.reserve(R.coeffs().size());
      for (const auto& x : R.coeffs()) v.push_back(x / div);
      B = IntPoly(std::move(v));
    }
    if (B.is_zero()) return 0;  // nontrivial common factor
    g = A.leading();
    if (delta >= 1) {
      // h = g^delta / h^(delta-1)
      mpz_class gp, hp;
      mpz_pow_ui(gp.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      h = gp / hp;
    }
    if (B.degree() == 0) break;
  }

  // res(A, B) with deg B = 0 equals lc(B)^deg A adjusted by the accumulated h.
  mpz_class lb;
  mpz_pow_ui(lb.get_mpz_t(), B.leading().get_mpz_t(), static_cast<unsigned long>(A.degree()));
  mpz_class hp;
  mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(A.degree() - 1));
  mpz_class res = lb / hp;
  return sign < 0 ? mpz_class(t * -res) : mpz_class(t * res);
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return IntPoly();
  if (a.is_zero()) return b.primitive_positive() * IntPoly({b.content()});
  if (b.is_zero()) return a.primitive_positive() * IntPoly({a.content()});

  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());

  IntPoly A = a.primitive_positive();
  IntPoly B = b.primitive_positive();
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    IntPoly R = pseudo_rem(A, B).primitive_positive();
    A = B;
    B = R;
    if (!B.is_zero() && A.degree() < B.degree()) std::swap(A, B);
  }
  return A.primitive_positive() * IntPoly({cg});
}

IntPoly interpolate_integer(const std::vector<mpz_class>& nodes,
                            const std::vector<mpz_class>& values) {
  if (nodes.size() != values.size())
    fail(errcode::dimension, "interpolation nodes and values differ in length");
  if (nodes.empty()) return IntPoly();
  const size_t m = nodes.size();

  // Newton divided differences over the rationals.
  std::vector<mpq_class> dd;
  dd.reserve(m);
  for (const auto& v : values) dd.emplace_back(v);
  std::vector<mpq_class> coeffs_newton;
  coeffs_newton.reserve(m);
  coeffs_newton.push_back(dd[0]);
  for (size_t level = 1; level < m; ++level) {
    for (size_t i = 0; i + level < m; ++i) {
      mpq_class denom(nodes[i + level] - nodes[i]);
      if (denom == 0) fail(errcode::domain, "repeated interpolation node");
      dd[i] = (dd[i + 1] - dd[i]) / denom;
    }
    dd.pop_back();
    coeffs_newton.push_back(dd[0]);
  }

  // Expand Newton form into monomial coefficients.
  std::vector<mpq_class> poly{coeffs_newton[m - 1]};
  for (size_t k = m - 1; k-- > 0;) {
    // poly = poly * (t - nodes[k]) + coeffs_newton[k]
    std::vector<mpq_class> next(poly.size() + 1, mpq_class(0));
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * mpq_class(nodes[k]);
    }
    next[0] += coeffs_newton[k];
    poly = std::move(next);
  }

  std::vector<mpz_class> out;
  out.reserve(poly.size());
  for (auto& q : poly) {
    q.canonicalize();
    if (q.get_den() != 1)
      fail(errcode::internal, "interpolation produced a non-integer coefficient");
    out.push_back(q.get_num());
  }
  return IntPoly(std::move(out));
}

}  // namespace jl
