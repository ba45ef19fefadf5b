#include "joinlink/json_io.hpp"

namespace jl {

namespace {

mpq_class rational_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return mpq_class(static_cast<long>(v.get<long long>()));
  fail(errcode::bad_input, "rational must be a string or integer");
}

std::vector<int> exponents_from_json(const json& v, int n, const char* what) {
  if (!v.is_array() || static_cast<int>(v.size()) != n)
    fail(errcode::bad_input, std::string(what) + " must be an array of length n");
  std::vector<int> e(n);
  for (int j = 0; j < n; j++) {
    if (!v[j].is_number_integer() || v[j].get<long long>() < 0 ||
        v[j].get<long long>() > INT32_MAX)
      fail(errcode::bad_input, std::string(what) + " entries must be naturals");
    e[j] = v[j].get<int>();
  }
  return e;
}

}  // namespace

json poly_to_json(const MixedPolynomial& p) {
  json terms = json::array();
  const auto& map = p.terms();
  for (auto it = map.rbegin(); it != map.rend(); ++it) {
    const auto& [m, c] = *it;
    terms.push_back({{"nu", m.nu},
                     {"mu", m.mu},
                     {"c", {rational_text(c.re), rational_text(c.im)}}});
  }
  return json{{"n", p.nvars()}, {"terms", terms}};
}

MixedPolynomial poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
    fail(errcode::bad_input, "polynomial JSON needs \"n\" and \"terms\"");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1 ||
      j["n"].get<long long>() > 1000000)
    fail(errcode::bad_input, "\"n\" must be a positive integer");
  int n = j["n"].get<int>();
  if (!j["terms"].is_array()) fail(errcode::bad_input, "\"terms\" must be an array");
  MixedPolynomial p(n);
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("nu") || !t.contains("mu") || !t.contains("c"))
      fail(errcode::bad_input, "term needs \"nu\", \"mu\", \"c\"");
    const json& c = t["c"];
    if (!c.is_array() || c.size() != 2)
      fail(errcode::bad_input, "\"c\" must be [re, im]");
    p.add_term(MixedMonomial(exponents_from_json(t["nu"], n, "nu"),
                             exponents_from_json(t["mu"], n, "mu")),
               GaussianRational(rational_from_json(c[0]), rational_from_json(c[1])));
  }
  return p;
}

json point_to_json(const ComplexPoint& w) {
  json out = json::array();
  for (const auto& z : w) out.push_back({z.real(), z.imag()});
  return out;
}

ComplexPoint point_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail(errcode::bad_input, "point must be a nonempty array");
  ComplexPoint w;
  for (const auto& z : j) {
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
      fail(errcode::bad_input, "point coordinates must be [re, im] pairs");
    w.emplace_back(z[0].get<double>(), z[1].get<double>());
  }
  return w;
}

namespace {

json mpz_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

mpz_class mpz_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      fail(errcode::bad_input, std::string(what) + ": bad integer literal");
    return v;
  }
  fail(errcode::bad_input, std::string(what) + " must be an integer or decimal string");
}

}  // namespace

json imat_to_json(const IMat& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(mpz_to_json(m.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

IMat imat_from_json(const json& j) {
  if (!j.is_array()) fail(errcode::bad_input, "matrix must be an array of row arrays");
  const int r = static_cast<int>(j.size());
  int c = -1;
  for (const auto& row : j) {
    if (!row.is_array()) fail(errcode::bad_input, "matrix rows must be arrays");
    if (c < 0)
      c = static_cast<int>(row.size());
    else if (static_cast<int>(row.size()) != c)
      fail(errcode::dimension, "matrix rows differ in length");
  }
  IMat m(r, std::max(c, 0));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < m.cols(); ++k) m.at(i, k) = mpz_from_json(j[i][k], "matrix entry");
  return m;
}

json intpoly_to_json(const IntPoly& p) {
  json out = json::array();
  for (const auto& v : p.coeffs()) out.push_back(mpz_to_json(v));
  return out;
}

IntPoly intpoly_from_json(const json& j) {
  if (!j.is_array()) fail(errcode::bad_input, "polynomial must be a coefficient array");
  std::vector<mpz_class> c;
  c.reserve(j.size());
  for (const auto& v : j) c.push_back(mpz_from_json(v, "coefficient"));
  return IntPoly(std::move(c));
}

}  // namespace jl
