// Acceptance suite.  Runs every shipped criterion at its stated tolerance
// and time limit, printing one PASS/FAIL line per criterion.  The process
// exit code is the number of failed criteria.

#include <sys/wait.h>

#include <chrono>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "joinlink/enhanced.hpp"
#include "joinlink/json_io.hpp"
#include "joinlink/newton.hpp"
#include "joinlink/seifert.hpp"
#include "joinlink/winding.hpp"
#include "joinlink/zeta.hpp"
#include "oracles.hpp"
#include "generators.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int exit_code = -1;
  json doc;
};

CliRun run_cli(const std::string& args) {
  CliRun r;
  const char* cli = std::getenv("JOINLINK_CLI");
  if (!cli) return r;
  const std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.doc = json::parse(out, nullptr, false);
  return r;
}

bool require(bool cond, std::string& note, const std::string& message) {
  if (!cond && note.empty()) note = message;
  return cond;
}

/* ---- criterion 1 ---- */

bool figure8_join(std::string& note) {
  CliRun r = run_cli("--quiet --json-indent -1 zeta join --num1 '[1,-3,1]' --num2 '[1,-3,1]'");
  if (!require(r.exit_code == 0, note, "CLI run failed (is JOINLINK_CLI set?)"))
    return false;
  bool ok = require(r.doc["result"]["num"] == json::parse("[1,-9,16,-9,1]"), note,
                    "CLI numerator mismatch");
  ok &= require(r.doc["result"]["den"] == json::parse("[1]"), note,
                "CLI denominator mismatch");

  const jl::Divisor fig8(jl::IntPoly::from_longs({1, -3, 1}), jl::IntPoly::constant(1));
  const jl::Divisor joined = jl::divisor_join(fig8, fig8);
  ok &= require(joined.num() == jl::IntPoly::from_longs({1, -9, 16, -9, 1}), note,
                "library numerator mismatch");
  ok &= require(joined.den() == jl::IntPoly::constant(1), note,
                "library denominator mismatch");
  return ok;
}

/* ---- criterion 2 ---- */

jl::IntPoly random_intpoly(gen::Rng& rng, int max_deg, long max_abs) {
  const int d = static_cast<int>(gen::uniform(rng, 1, max_deg));
  std::vector<mpz_class> c(static_cast<size_t>(d) + 1);
  for (auto& v : c) v = gen::uniform(rng, -max_abs, max_abs);
  while (c.front() == 0) c.front() = gen::uniform(rng, -max_abs, max_abs);
  while (c.back() == 0) c.back() = gen::uniform(rng, -max_abs, max_abs);
  return jl::IntPoly(c);
}

std::vector<std::complex<double>> to_doubles(const jl::IntPoly& p) {
  std::vector<std::complex<double>> c;
  for (const auto& v : p.coeffs()) c.emplace_back(v.get_d(), 0.0);
  return c;
}

std::vector<std::complex<double>> expand_roots(
    const std::vector<std::complex<double>>& roots) {
  std::vector<std::complex<double>> c{1.0};
  for (const auto& r : roots) {
    c.push_back(0.0);
    for (size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return c;
}

bool composed_oracle(std::string& note) {
  gen::Rng rng(0xC2);
  for (int trial = 0; trial < 200; ++trial) {
    const jl::IntPoly p = random_intpoly(rng, 5, 10);
    const jl::IntPoly q = random_intpoly(rng, 5, 10);
    const jl::IntPoly lib = jl::composed_product(p, q);

    std::vector<std::complex<double>> prods;
    for (const auto& a : oracle::roots(to_doubles(p)))
      for (const auto& b : oracle::roots(to_doubles(q))) prods.push_back(a * b);
    const auto expected = expand_roots(prods);

    if (lib.degree() != static_cast<int>(prods.size()))
      return require(false, note,
                     "degree mismatch in trial " + std::to_string(trial));
    const double lead = lib.leading().get_d();
    double scale = 1.0;
    for (const auto& v : expected) scale = std::max(scale, std::abs(v));
    for (size_t i = 0; i < expected.size(); ++i) {
      const double got = lib.coeffs()[i].get_d() / lead;
      if (std::abs(got - expected[i].real()) > 1e-6 * scale ||
          std::abs(expected[i].imag()) > 1e-6 * scale)
        return require(false, note,
                       "coefficient drift in trial " + std::to_string(trial));
    }
  }
  return true;
}

/* ---- criterion 3 ---- */

jl::Divisor reduced_brieskorn_zeta(const std::vector<long>& exponents) {
  const jl::IntPoly cp = jl::monodromy_charpoly(jl::brieskorn_form(exponents));
  return jl::reduced_zeta(
      jl::zeta_from_middle_charpoly(cp, static_cast<int>(exponents.size())));
}

bool brieskorn_join_consistency(std::string& note) {
  for (long a1 = 2; a1 <= 4; ++a1)
    for (long a2 = 2; a2 <= 4; ++a2)
      for (long b1 = 2; b1 <= 4; ++b1)
        for (long b2 = 2; b2 <= 4; ++b2) {
          const jl::Divisor whole = reduced_brieskorn_zeta({a1, a2, b1, b2});
          const jl::Divisor joined = jl::divisor_join(
              reduced_brieskorn_zeta({a1, a2}), reduced_brieskorn_zeta({b1, b2}));
          if (!(whole == joined))
            return require(false, note,
                           "mismatch at (" + std::to_string(a1) + "," +
                               std::to_string(a2) + ")x(" + std::to_string(b1) +
                               "," + std::to_string(b2) + ")");
        }
  return true;
}

/* ---- criterion 4 ---- */

bool building_block_anchors(std::string& note) {
  const jl::SeifertForm trefoil = jl::brieskorn_form({2, 3});
  bool ok = require(jl::congruence_invariants(trefoil).alexander ==
                        jl::IntPoly::from_longs({1, -1, 1}),
                    note, "trefoil Alexander polynomial mismatch");
  const jl::SeifertForm b222 = jl::brieskorn_form({2, 2, 2});
  ok &= require(b222.entries() == jl::IMat::from_rows({{1}}), note,
                "(2,2,2) form is not [[1]]");
  return ok;
}

/* ---- criterion 5 ---- */

bool exact_congruence(const jl::IMat& u, const jl::IMat& a, const jl::IMat& b) {
  return u * a * u.transpose() == b;
}

bool congruence_chain(std::string& note) {
  const jl::SeifertForm a(jl::IMat::from_rows({{0, -1}, {-1, 2}}));
  const jl::SeifertForm b(jl::IMat::from_rows({{0, 1}, {1, 2}}));
  const jl::CongruenceVerdict small = jl::check_congruent(a, b);
  bool ok = require(small.status == jl::CongruenceStatus::CongruentWitness, note,
                    "2x2 pair not resolved as congruent");
  if (small.witness)
    ok &= require(exact_congruence(*small.witness, a.entries(), b.entries()), note,
                  "2x2 witness does not transform a into b");
  else
    ok = require(false, note, "missing 2x2 witness");

  const jl::SeifertForm extended = jl::extend_form(b, {0, 0}, 1);
  ok &= require(extended.entries() ==
                    jl::IMat::from_rows({{0, 1, 0}, {1, 2, 0}, {0, 0, 1}}),
                note, "bordered extension mismatch");

  const jl::SeifertForm diag(jl::IMat::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}));
  jl::CongruenceLimits limits;
  limits.depth = 8;
  const jl::CongruenceVerdict big = jl::check_congruent(extended, diag, limits);
  ok &= require(big.status == jl::CongruenceStatus::CongruentWitness, note,
                "3x3 pair not resolved within depth 8");
  if (big.witness)
    ok &= require(exact_congruence(*big.witness, extended.entries(), diag.entries()),
                  note, "3x3 witness does not transform the extension");
  else
    ok = require(false, note, "missing 3x3 witness");
  return ok;
}

/* ---- criterion 6 ---- */

bool monomial_degrees(std::string& note) {
  for (long m = -5; m <= 5; ++m) {
    if (m == 0) continue;
    for (long ell = 0; ell <= 3; ++ell) {
      const long a = std::max(m, 0L) + ell;
      const long b = std::max(-m, 0L) + ell;
      std::string source;
      if (a > 0) source = "z1^" + std::to_string(a);
      if (b > 0) source += (source.empty() ? "" : "*") + std::string("zb1^") +
                           std::to_string(b);
      const jl::MixedPolynomial g = jl::parse_poly(source, 1);
      const jl::DegreeResult r = jl::mapping_degree(g, 1e-2);
      if (r.degree != m || !r.stable)
        return require(false, note,
                       "degree failure at m=" + std::to_string(m) +
                           ", ell=" + std::to_string(ell));
    }
  }
  return true;
}

/* ---- criterion 7 ---- */

bool witness_and_join_arithmetic(std::string& note) {
  for (long ell = 1; ell <= 10; ++ell)
    for (long k = 2; k <= 5; ++k) {
      const jl::JoinWitness w = jl::witness(ell, k);
      if (w.invariant.mu != ell || w.invariant.lambda != 1 ||
          w.variable_count != k + 1 || w.polynomial.nvars() != k + 1)
        return require(false, note,
                       "witness mismatch at ell=" + std::to_string(ell) +
                           ", k=" + std::to_string(k));
    }
  for (long m1 = 0; m1 <= 20; ++m1)
    for (int l1 = 0; l1 <= 1; ++l1)
      for (long m2 = 0; m2 <= 20; ++m2)
        for (int l2 = 0; l2 <= 1; ++l2) {
          const jl::EnhancedMilnor j = jl::join_enhanced(
              jl::EnhancedMilnor(m1, l1, 1), jl::EnhancedMilnor(m2, l2, 1));
          if (j.mu != m1 * m2 || j.lambda != (l1 * m2 + m1 * l2) % 2)
            return require(false, note, "join arithmetic mismatch at mu1=" +
                                            std::to_string(m1));
        }
  return true;
}

/* ---- criterion 8 ---- */

bool nondegeneracy_verdicts(std::string& note) {
  const auto clean = [&](const std::string& source, int vars) {
    const jl::MixedPolynomial p = jl::parse_poly(source, vars);
    if (!jl::is_convenient(p)) return false;
    for (const auto& r : jl::check_strong_nondegeneracy(p))
      if (r.verdict == jl::Verdict::DegenerateWitness) return false;
    return true;
  };
  bool ok = require(clean("z1^2 + zb2^2", 2), note, "z1^2 + zb2^2 not clean");
  ok &= require(clean("z1^2 + z2^3 + z3^4", 3), note, "w^(2,3,4) sum not clean");

  const jl::MixedPolynomial bad = jl::parse_poly("z1*zb1", 1);
  const auto reports = jl::check_strong_nondegeneracy(bad);
  bool saw = false;
  for (const auto& r : reports) saw |= r.verdict == jl::Verdict::DegenerateWitness;
  ok &= require(saw, note, "z*zbar did not produce a degenerate witness");
  return ok;
}

/* ---- criterion 9 ---- */

jl::Divisor random_divisor(gen::Rng& rng) {
  return jl::divisor_of(random_intpoly(rng, 2, 6), random_intpoly(rng, 2, 6));
}

bool property_suites(std::string& note) {
  gen::Rng rng(0xC9);

  for (int i = 0; i < 100; ++i) {
    const jl::Divisor a = random_divisor(rng);
    const jl::Divisor b = random_divisor(rng);
    const jl::Divisor c = random_divisor(rng);
    if (!(jl::divisor_join(a, b) == jl::divisor_join(b, a)))
      return require(false, note, "divisor_join commutativity failed");
    if (!(jl::divisor_join(jl::divisor_join(a, b), c) ==
          jl::divisor_join(a, jl::divisor_join(b, c))))
      return require(false, note, "divisor_join associativity failed");
  }

  const auto pow_z = [](mpz_class base, int e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
  };
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(gen::uniform(rng, 1, 3));
    const int m = static_cast<int>(gen::uniform(rng, 1, 3));
    jl::IMat a(n, n), b(m, m);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a.at(r, c) = gen::uniform(rng, -4, 4);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) b.at(r, c) = gen::uniform(rng, -4, 4);
    if (jl::kron(a, b).det() != pow_z(a.det(), m) * pow_z(b.det(), n))
      return require(false, note, "Kronecker determinant law failed");
  }

  for (int i = 0; i < 100; ++i) {
    jl::IMat l(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) l.at(r, c) = gen::uniform(rng, -3, 3);
    jl::IMat u = jl::IMat::identity(3);
    for (int step = 0; step < 6; ++step) {
      jl::IMat e = jl::IMat::identity(3);
      const int kind = static_cast<int>(gen::uniform(rng, 0, 2));
      int r = static_cast<int>(gen::uniform(rng, 0, 2));
      int c = static_cast<int>(gen::uniform(rng, 0, 2));
      if (kind == 0 && r != c) {
        e.at(r, c) = gen::uniform(rng, -2, 2);
      } else if (kind == 1) {
        e.at(r, r) = 0;
        e.at(c, c) = 0;
        e.at(r, c) = 1;
        e.at(c, r) = 1;
        if (r == c) e.at(r, r) = 1;
      } else {
        e.at(r, r) = -1;
      }
      u = e * u;
    }
    const auto via_l = jl::congruence_invariants(jl::SeifertForm::relaxed(l));
    const auto via_conj = jl::congruence_invariants(
        jl::SeifertForm::relaxed(u * l * u.transpose()));
    if (!(via_l == via_conj))
      return require(false, note, "congruence invariants moved under conjugation");
  }

  for (int i = 0; i < 100; ++i) {
    const jl::MixedPolynomial p = gen::poly(rng);
    if (!(jl::parse_poly(p.text(), p.nvars()) == p))
      return require(false, note, "parse/print round-trip failed");
  }
  return true;
}

}  // namespace

int main() {
  struct Row {
    int id;
    const char* label;
    double limit_ms;
    std::function<bool(std::string&)> check;
  };
  const std::vector<Row> rows = {
      {1, "figure-8 self-join divisor via `zeta join`", 1000, figure8_join},
      {2, "composed product vs numeric root products, 200 pairs", 30000,
       composed_oracle},
      {3, "Brieskorn reduced-zeta join consistency, 81 cases", 10000,
       brieskorn_join_consistency},
      {4, "building-block form anchors", 10000, building_block_anchors},
      {5, "congruence chain with bordered extension", 60000, congruence_chain},
      {6, "winding degrees of the monomial family", 5000, monomial_degrees},
      {7, "witness grid and join arithmetic", 10000, witness_and_join_arithmetic},
      {8, "Newton non-degeneracy verdicts on anchor inputs", 10000,
       nondegeneracy_verdicts},
      {9, "randomized property suites, 4 x 100 cases", 30000, property_suites},
  };

  int failures = 0;
  for (const auto& row : rows) {
    std::string note;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      ok = row.check(note);
    } catch (const std::exception& e) {
      ok = false;
      note = e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    if (ok && ms > row.limit_ms) {
      ok = false;
      note = "exceeded the time limit";
    }
    std::printf("%s criterion %d: %s (%.0f ms, limit %.0f ms)%s%s\n",
                ok ? "PASS" : "FAIL", row.id, row.label, ms, row.limit_ms,
                note.empty() ? "" : " -- ", note.c_str());
    if (!ok) failures++;
  }
  std::printf("%d/%d criteria passed\n", static_cast<int>(rows.size()) - failures,
              static_cast<int>(rows.size()));
  return failures;
}
