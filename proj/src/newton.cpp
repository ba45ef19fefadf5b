#include "joinlink/newton.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "joinlink/error.hpp"
#include "joinlink/simplex.hpp"

namespace jl {

namespace {

constexpr int kMaxVerticesForFaces = 12;

bool dominates(const std::vector<long>& a, const std::vector<long>& b) {
  // a >= b componentwise and a != b.
  bool strict = false;
  for (size_t j = 0; j < a.size(); ++j) {
    if (a[j] < b[j]) return false;
    if (a[j] > b[j]) strict = true;
  }
  return strict;
}

// x in conv(hull_pts) + R^n_{>=0}, decided exactly.
bool in_positive_hull(const std::vector<std::vector<long>>& hull_pts,
                      const std::vector<long>& x) {
  if (hull_pts.empty()) return false;
  const size_t n = x.size();
  const size_t k = hull_pts.size();
  std::vector<std::vector<mpq_class>> a(n + 1, std::vector<mpq_class>(k + n, 0));
  std::vector<mpq_class> b(n + 1);
  for (size_t j = 0; j < n; ++j) {
    for (size_t h = 0; h < k; ++h) a[j][h] = hull_pts[h][j];
    a[j][k + j] = 1;
    b[j] = x[j];
  }
  for (size_t h = 0; h < k; ++h) a[n][h] = 1;
  b[n] = 1;
  return lp_feasible(std::move(a), std::move(b));
}

// Strictly positive w taking one common value on sel and strictly larger
// values on rest; returned primitive integer.  Scaling freedom turns the
// strict inequalities into margins of at least 1 with all w_j >= 1.
std::optional<std::vector<long>> supporting_normal(
    const std::vector<std::vector<long>>& sel,
    const std::vector<std::vector<long>>& rest) {
  const size_t n = sel.front().size();
  const auto& t0 = sel.front();
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> b;
  const size_t nvars = n + rest.size();
  for (size_t t = 1; t < sel.size(); ++t) {
    std::vector<mpq_class> row(nvars, 0);
    long shift = 0;
    for (size_t j = 0; j < n; ++j) {
      row[j] = sel[t][j] - t0[j];
      shift += sel[t][j] - t0[j];
    }
    a.push_back(std::move(row));
    b.emplace_back(-shift);
  }
  for (size_t g = 0; g < rest.size(); ++g) {
    std::vector<mpq_class> row(nvars, 0);
    long shift = 0;
    for (size_t j = 0; j < n; ++j) {
      row[j] = rest[g][j] - t0[j];
      shift += rest[g][j] - t0[j];
    }
    row[n + g] = -1;
    a.push_back(std::move(row));
    b.emplace_back(1 - shift);
  }
  std::vector<mpq_class> x;
  if (a.empty()) {
    // Single selected point, nothing to separate: w = (1, ..., 1).
    return std::vector<long>(n, 1);
  }
  if (!lp_feasible(std::move(a), std::move(b), &x)) return std::nullopt;

  std::vector<mpq_class> w(n);
  mpz_class denom_lcm = 1;
  for (size_t j = 0; j < n; ++j) {
    w[j] = x[j] + 1;
    w[j].canonicalize();
    mpz_class d = w[j].get_den();
    denom_lcm = denom_lcm / gcd(denom_lcm, d) * d;
  }
  std::vector<mpz_class> wi(n);
  mpz_class g = 0;
  for (size_t j = 0; j < n; ++j) {
    wi[j] = mpz_class(w[j].get_num() * (denom_lcm / w[j].get_den()));
    g = gcd(g, wi[j]);
  }
  std::vector<long> out(n);
  for (size_t j = 0; j < n; ++j) {
    mpz_class v = wi[j] / g;
    if (!v.fits_slong_p()) fail(errcode::internal, "face normal entry overflow");
    out[j] = v.get_si();
  }
  return out;
}

int affine_rank(const std::vector<std::vector<long>>& pts) {
  if (pts.size() <= 1) return 0;
  const size_t n = pts.front().size();
  std::vector<std::vector<mpq_class>> rows;
  for (size_t i = 1; i < pts.size(); ++i) {
    std::vector<mpq_class> r(n);
    for (size_t j = 0; j < n; ++j) r[j] = pts[i][j] - pts[0][j];
    rows.push_back(std::move(r));
  }
  int rank = 0;
  for (size_t col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    size_t piv = rows.size();
    for (size_t i = rank; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == rank || rows[i][col] == 0) continue;
      mpq_class f = rows[i][col] / rows[rank][col];
      for (size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Wirtinger derivative rows of (Re f, Im f), reduced to the smallest singular
// value of the 2 x 2n Jacobian through the 2 x 2 Gram matrix.
double sigma_min(const std::vector<std::complex<double>>& dz,
                 const std::vector<std::complex<double>>& dzb) {
  double s11 = 0, s22 = 0, s12 = 0;
  for (size_t j = 0; j < dz.size(); ++j) {
    std::complex<double> dx = dz[j] + dzb[j];
    std::complex<double> dy = std::complex<double>(0, 1) * (dz[j] - dzb[j]);
    s11 += dx.real() * dx.real() + dy.real() * dy.real();
    s22 += dx.imag() * dx.imag() + dy.imag() * dy.imag();
    s12 += dx.real() * dx.imag() + dy.real() * dy.imag();
  }
  double disc = std::sqrt((s11 - s22) * (s11 - s22) + 4 * s12 * s12);
  double lmin = 0.5 * (s11 + s22 - disc);
  return std::sqrt(std::max(lmin, 0.0));
}

struct FaceSearch {
  const MixedPolynomial* f;
  std::vector<MixedPolynomial> dz, dzb;
  double rlo, rhi;

  FaceSearch(const MixedPolynomial& pf, const SearchBudget& budget) : f(&pf) {
    for (int j = 1; j <= pf.nvars(); ++j) {
      dz.push_back(pf.wirtinger(false, j));
      dzb.push_back(pf.wirtinger(true, j));
    }
    rlo = budget.radius_min / 4;
    rhi = budget.radius_max * 4;
  }

  double residual(const ComplexPoint& w) const {
    std::vector<std::complex<double>> a(dz.size()), b(dz.size());
    for (size_t j = 0; j < dz.size(); ++j) {
      a[j] = dz[j].evaluate(w);
      b[j] = dzb[j].evaluate(w);
    }
    return sigma_min(a, b);
  }

  ComplexPoint random_start(std::mt19937_64& rng, const SearchBudget& budget) const {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double lmin = std::log(budget.radius_min);
    const double lmax = std::log(budget.radius_max);
    ComplexPoint w(dz.size());
    for (auto& c : w) {
      double r = std::exp(lmin + (lmax - lmin) * unit(rng));
      double th = 2 * M_PI * unit(rng);
      c = std::polar(r, th);
    }
    return w;
  }

  // Greedy multiplicative local search in log-polar coordinates; radii stay
  // clamped to [rlo, rhi].  Returns iterations consumed.
  template <typename Objective>
  long descend(std::mt19937_64& rng, ComplexPoint& w, double& value, int iters,
               double stop_below, const Objective& obj) const {
    std::normal_distribution<double> noise(0.0, 1.0);
    double step = 0.5;
    long used = 0;
    for (int it = 0; it < iters && value > stop_below; ++it) {
      ++used;
      bool improved = false;
      for (int trial = 0; trial < 8; ++trial) {
        ComplexPoint cand(w.size());
        for (size_t j = 0; j < w.size(); ++j) {
          double r = std::abs(w[j]) * std::exp(step * noise(rng));
          r = std::min(std::max(r, rlo), rhi);
          cand[j] = std::polar(r, std::arg(w[j]) + step * noise(rng));
        }
        double v = obj(cand);
        if (v < value) {
          value = v;
          w = std::move(cand);
          improved = true;
          break;
        }
      }
      if (!improved) step *= 0.5;
    }
    return used;
  }
};

void run_face_search(const MixedPolynomial& pf, const SearchBudget& budget,
                     std::mt19937_64& rng, NondegeneracyReport& report) {
  FaceSearch ctx(pf, budget);
  auto objective = [&](const ComplexPoint& w) { return ctx.residual(w); };
  for (int s = 0; s < budget.samples; ++s) {
    ++report.samples_used;
    ComplexPoint w = ctx.random_start(rng, budget);
    double value = ctx.residual(w);
    report.descent_iters_used +=
        ctx.descend(rng, w, value, budget.iters, budget.tolerance / 4, objective);
    if (value < budget.tolerance) {
      report.verdict = Verdict::DegenerateWitness;
      report.witness = std::move(w);
      report.witness_residual = value;
      return;
    }
  }
  report.verdict = Verdict::NoWitnessFound;
}

void run_surjectivity_probe(const MixedPolynomial& pf, const SearchBudget& budget,
                            std::mt19937_64& rng, NondegeneracyReport& report) {
  FaceSearch ctx(pf, budget);
  double scale = 0;
  for (const auto& [mono, coeff] : pf.terms()) {
    (void)mono;
    scale += std::hypot(coeff.re.get_d(), coeff.im.get_d());
  }
  if (scale <= 0) scale = 1;
  const double radii[2] = {0.5 * scale, 2.0 * scale};
  for (double rho : radii) {
    for (int q = 0; q < 4; ++q) {
      std::complex<double> target = std::polar(rho, q * M_PI / 2);
      ++report.surjectivity_targets;
      auto objective = [&](const ComplexPoint& w) {
        return std::abs(pf.evaluate(w) - target);
      };
      const double accept = 1e-6 * std::max(1.0, std::abs(target));
      bool hit = false;
      for (int s = 0; s < 8 && !hit; ++s) {
        ComplexPoint w = ctx.random_start(rng, budget);
        double value = objective(w);
        ctx.descend(rng, w, value, budget.iters, accept / 4, objective);
        hit = value < accept;
      }
      if (hit) ++report.surjectivity_hits;
    }
  }
}

}  // namespace

NewtonPolytope newton_polytope(const MixedPolynomial& p) {
  if (p.is_zero())
    fail(errcode::domain, "zero polynomial has no Newton polytope");
  NewtonPolytope np;
  np.n = p.nvars();
  std::set<std::vector<long>> gens;
  for (const auto& [mono, coeff] : p.terms()) {
    (void)coeff;
    gens.insert(mono.radial());
  }
  np.generators.assign(gens.begin(), gens.end());

  std::vector<std::vector<long>> minimal;
  for (const auto& g : np.generators) {
    bool dominated = false;
    for (const auto& h : np.generators)
      if (dominates(g, h)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(g);
  }
  for (const auto& v : minimal) {
    std::vector<std::vector<long>> others;
    for (const auto& h : minimal)
      if (h != v) others.push_back(h);
    if (!in_positive_hull(others, v)) np.vertices.push_back(v);
  }
  return np;
}

std::vector<Face> compact_faces(const NewtonPolytope& np) {
  const auto& verts = np.vertices;
  if (verts.empty()) fail(errcode::domain, "polytope has no vertices");
  if (verts.size() > kMaxVerticesForFaces)
    fail(errcode::domain, "exact face enumeration supports at most 12 vertices");

  std::vector<Face> faces;
  const size_t nv = verts.size();
  for (size_t mask = 1; mask < (size_t{1} << nv); ++mask) {
    std::vector<std::vector<long>> sel, rest;
    for (size_t i = 0; i < nv; ++i)
      ((mask >> i) & 1 ? sel : rest).push_back(verts[i]);
    auto w = supporting_normal(sel, rest);
    if (!w) continue;

    mpz_class best = 0;
    bool first = true;
    std::vector<mpz_class> vals;
    vals.reserve(np.generators.size());
    for (const auto& g : np.generators) {
      mpz_class v = 0;
      for (size_t j = 0; j < g.size(); ++j) v += mpz_class(g[j]) * (*w)[j];
      if (first || v < best) {
        best = v;
        first = false;
      }
      vals.push_back(std::move(v));
    }
    Face f;
    f.normal = std::move(*w);
    for (size_t i = 0; i < np.generators.size(); ++i)
      if (vals[i] == best) f.points.push_back(np.generators[i]);
    f.dim = affine_rank(f.points);
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.points < b.points;
  });
  return faces;
}

MixedPolynomial face_function(const MixedPolynomial& p, const Face& f) {
  if (f.points.empty())
    fail(errcode::domain, "face has no points");
  for (const auto& pt : f.points)
    if (static_cast<int>(pt.size()) != p.nvars())
      fail(errcode::dimension, "face dimension does not match the polynomial");
  NewtonPolytope np = newton_polytope(p);
  std::set<std::vector<long>> gens(np.generators.begin(), np.generators.end());
  std::set<std::vector<long>> sel;
  for (const auto& pt : f.points) {
    if (!gens.count(pt))
      fail(errcode::domain, "face point is not a generator of this polytope");
    sel.insert(pt);
  }
  MixedPolynomial out(p.nvars());
  for (const auto& [mono, coeff] : p.terms())
    if (sel.count(mono.radial())) out.add_term(mono, coeff);
  return out;
}

bool is_convenient(const MixedPolynomial& p) {
  const int n = p.nvars();
  for (int axis = 0; axis < n; ++axis) {
    bool found = false;
    for (const auto& [mono, coeff] : p.terms()) {
      (void)coeff;
      bool pure = true;
      for (int j = 0; j < n && pure; ++j)
        if (j != axis && (mono.nu[j] != 0 || mono.mu[j] != 0)) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return !p.is_zero();
}

double criticality_residual(const MixedPolynomial& p, const ComplexPoint& w) {
  if (static_cast<int>(w.size()) != p.nvars())
    fail(errcode::dimension, "point dimension does not match the polynomial");
  std::vector<std::complex<double>> a, b;
  for (int j = 1; j <= p.nvars(); ++j) {
    a.push_back(p.wirtinger(false, j).evaluate(w));
    b.push_back(p.wirtinger(true, j).evaluate(w));
  }
  return sigma_min(a, b);
}

std::vector<NondegeneracyReport> check_strong_nondegeneracy(
    const MixedPolynomial& p, const SearchBudget& budget, std::uint64_t seed) {
  if (budget.samples < 1 || budget.iters < 1 || !(budget.radius_min > 0) ||
      !(budget.radius_max >= budget.radius_min) || !(budget.tolerance > 0))
    fail(errcode::budget, "search budget needs positive samples, iterations, "
                          "radii, and tolerance");

  NewtonPolytope np = newton_polytope(p);
  std::vector<Face> faces = compact_faces(np);
  std::vector<NondegeneracyReport> reports;
  reports.reserve(faces.size());

  for (size_t fi = 0; fi < faces.size(); ++fi) {
    const Face& f = faces[fi];
    MixedPolynomial pf = face_function(p, f);
    NondegeneracyReport report;
    report.face = f;
    std::mt19937_64 rng(splitmix64(seed ^ (0x9E3779B97F4A7C15ull * (fi + 1))));

    if (pf.term_count() == 1) {
      const auto& mono = pf.terms().begin()->first;
      if (mono.nu == mono.mu) {
        report.verdict = Verdict::DegenerateWitness;
        ComplexPoint ones(static_cast<size_t>(pf.nvars()),
                          std::complex<double>(1.0, 0.0));
        report.witness_residual = criticality_residual(pf, ones);
        report.witness = std::move(ones);
      } else {
        report.verdict = Verdict::ExactlyNondegenerate;
      }
    } else {
      run_face_search(pf, budget, rng, report);
    }

    if (f.dim >= 1) run_surjectivity_probe(pf, budget, rng, report);
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace jl
