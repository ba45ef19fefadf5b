#include "joinlink/mixed_poly.hpp"

#include <cmath>
#include <sstream>

namespace jl {

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) fail(errcode::syntax, "empty rational");
  size_t i = 0;
  if (text[i] == '-' || text[i] == '+') i++;
  bool digits = false;
  while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
    i++;
    digits = true;
  }
  if (!digits) fail(errcode::syntax, "malformed rational '" + text + "'");
  if (i < text.size()) {
    if (text[i] != '/') fail(errcode::syntax, "malformed rational '" + text + "'");
    i++;
    size_t denom_start = i;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) i++;
    if (i == denom_start || i != text.size())
      fail(errcode::syntax, "malformed rational '" + text + "'");
    if (text.substr(denom_start) == std::string(text.size() - denom_start, '0'))
      fail(errcode::syntax, "zero denominator in '" + text + "'");
  }
  mpq_class q(text);
  q.canonicalize();
  return q;
}

std::string rational_text(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::vector<long> MixedMonomial::radial() const {
  std::vector<long> r(nu.size());
  for (size_t j = 0; j < nu.size(); j++) r[j] = static_cast<long>(nu[j]) + mu[j];
  return r;
}

int checked_exp_add(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r))
    fail(errcode::overflow, "exponent overflow");
  return r;
}

MixedPolynomial::MixedPolynomial(int n) : n_(n) {
  if (n < 1) fail(errcode::domain, "variable count must be at least 1");
}

void MixedPolynomial::add_term(const MixedMonomial& m, const GaussianRational& c) {
  if (static_cast<int>(m.nu.size()) != n_ || static_cast<int>(m.mu.size()) != n_)
    fail(errcode::dimension, "monomial arity does not match variable count");
  for (int j = 0; j < n_; j++)
    if (m.nu[j] < 0 || m.mu[j] < 0)
      fail(errcode::domain, "negative exponent");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MixedPolynomial MixedPolynomial::constant(int n, const GaussianRational& c) {
  MixedPolynomial p(n);
  p.add_term(MixedMonomial(std::vector<int>(n, 0), std::vector<int>(n, 0)), c);
  return p;
}

MixedPolynomial MixedPolynomial::variable(int n, int index, bool conjugated) {
  MixedPolynomial p(n);
  if (index < 1 || index > n) fail(errcode::domain, "variable index out of range");
  std::vector<int> nu(n, 0), mu(n, 0);
  (conjugated ? mu : nu)[index - 1] = 1;
  p.add_term(MixedMonomial(std::move(nu), std::move(mu)), GaussianRational(1));
  return p;
}

MixedPolynomial MixedPolynomial::conjugate() const {
  MixedPolynomial r(n_);
  for (const auto& [m, c] : terms_)
    r.add_term(MixedMonomial(m.mu, m.nu), c.conj());
  return r;
}

MixedPolynomial MixedPolynomial::wirtinger(bool antiholomorphic, int var_index) const {
  if (var_index < 1 || var_index > n_)
    fail(errcode::domain, "derivative variable index out of range");
  int j = var_index - 1;
  MixedPolynomial r(n_);
  for (const auto& [m, c] : terms_) {
    const std::vector<int>& e = antiholomorphic ? m.mu : m.nu;
    if (e[j] == 0) continue;
    MixedMonomial d = m;
    (antiholomorphic ? d.mu : d.nu)[j] -= 1;
    r.add_term(d, c * GaussianRational(e[j]));
  }
  return r;
}

void MixedPolynomial::check_same_vars(const MixedPolynomial& o) const {
  if (n_ != o.n_) fail(errcode::dimension, "operands have different variable counts");
}

MixedPolynomial operator+(const MixedPolynomial& a, const MixedPolynomial& b) {
  a.check_same_vars(b);
  MixedPolynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

MixedPolynomial operator-(const MixedPolynomial& a, const MixedPolynomial& b) {
  a.check_same_vars(b);
  MixedPolynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b) {
  a.check_same_vars(b);
  MixedPolynomial r(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      MixedMonomial m;
      m.nu.resize(a.n_);
      m.mu.resize(a.n_);
      for (int j = 0; j < a.n_; j++) {
        m.nu[j] = checked_exp_add(ma.nu[j], mb.nu[j]);
        m.mu[j] = checked_exp_add(ma.mu[j], mb.mu[j]);
      }
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MixedPolynomial MixedPolynomial::pow(long e) const {
  if (e < 0) fail(errcode::domain, "negative exponent");
  if (e == 0) return constant(n_, GaussianRational(1));
  if (term_count() == 1) {
    const auto& [m, c] = *terms_.begin();
    if (e > INT32_MAX) fail(errcode::overflow, "exponent overflow");
    MixedMonomial r;
    r.nu.resize(n_);
    r.mu.resize(n_);
    for (int j = 0; j < n_; j++) {
      long nu = static_cast<long>(m.nu[j]) * e, mu = static_cast<long>(m.mu[j]) * e;
      if (nu > INT32_MAX || mu > INT32_MAX) fail(errcode::overflow, "exponent overflow");
      r.nu[j] = static_cast<int>(nu);
      r.mu[j] = static_cast<int>(mu);
    }
    GaussianRational cc(1), base = c;
    for (long i = e; i > 0; i >>= 1) {
      if (i & 1) cc = cc * base;
      if (i > 1) base = base * base;
    }
    MixedPolynomial out(n_);
    out.add_term(r, cc);
    return out;
  }
  if (e > 1000) fail(errcode::overflow, "exponent too large for expanded form");
  MixedPolynomial out = *this;
  for (long i = 1; i < e; i++) out = out * *this;
  return out;
}

std::complex<double> MixedPolynomial::evaluate(const ComplexPoint& w) const {
  if (static_cast<int>(w.size()) != n_)
    fail(errcode::dimension, "point arity does not match variable count");
  for (const auto& z : w)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      fail(errcode::domain, "non-finite point coordinate");
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [m, c] : terms_) {
    std::complex<double> t(c.re.get_d(), c.im.get_d());
    for (int j = 0; j < n_; j++) {
      for (int k = 0; k < m.nu[j]; k++) t *= w[j];
      std::complex<double> wc = std::conj(w[j]);
      for (int k = 0; k < m.mu[j]; k++) t *= wc;
    }
    acc += t;
  }
  return acc;
}

namespace {

// True when the sign of c should be pulled out in front of the term.
bool coeff_negative(const GaussianRational& c) {
  int s = sgn(c.re);
  if (s != 0) return s < 0;
  return sgn(c.im) < 0;
}

std::string coeff_text(const GaussianRational& c) {
  if (c.is_real()) return rational_text(c.re);
  if (sgn(c.re) == 0) return rational_text(c.im) + "i";
  std::string s = "(" + rational_text(c.re);
  if (sgn(c.im) > 0)
    s += "+" + rational_text(c.im) + "i";
  else
    s += "-" + rational_text(mpq_class(-c.im)) + "i";
  return s + ")";
}

void append_var(std::string& s, const char* name, int index, int e) {
  if (e == 0) return;
  if (!s.empty()) s += "*";
  s += name + std::to_string(index);
  if (e > 1) s += "^" + std::to_string(e);
}

}  // namespace

std::string MixedPolynomial::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending lexicographic on (nu, mu): higher powers first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool neg = coeff_negative(c);
    GaussianRational mag = neg ? -c : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    std::string vars;
    for (int j = 0; j < n_; j++) append_var(vars, "z", j + 1, m.nu[j]);
    for (int j = 0; j < n_; j++) append_var(vars, "zb", j + 1, m.mu[j]);
    if (vars.empty()) {
      out << coeff_text(mag);
    } else if (mag == GaussianRational(1)) {
      out << vars;
    } else {
      out << coeff_text(mag) << "*" << vars;
    }
  }
  return out.str();
}

}  // namespace jl
