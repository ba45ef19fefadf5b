#include "joinlink/winding.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "joinlink/error.hpp"

namespace jl {

namespace {

constexpr long kEvalCap = 1L << 20;

struct Segment {
  double t0, t1;
  std::complex<double> v0, v1;
};

// One full adaptive traversal; returns the integer winding and the number of
// evaluations it took.
std::pair<long, long> wind_once(const MixedPolynomial& f, double eps,
                                int samples) {
  double scale = 0;
  for (const auto& [mono, coeff] : f.terms()) {
    long deg = 0;
    for (size_t j = 0; j < mono.nu.size(); ++j) deg += mono.nu[j] + mono.mu[j];
    scale += std::hypot(coeff.re.get_d(), coeff.im.get_d()) * std::pow(eps, deg);
  }
  const double threshold = 1e-12 * scale;

  long evals = 0;
  auto value = [&](double theta) {
    if (++evals > kEvalCap)
      fail(errcode::adaptivity, "argument tracking exceeded 2^20 samples");
    std::complex<double> v = f.evaluate({std::polar(eps, theta)});
    if (std::abs(v) < threshold)
      fail(errcode::near_zero,
           "|f| vanishes on the sample circle; shrink the radius");
    return v;
  };

  std::vector<std::complex<double>> ring(samples);
  for (int k = 0; k < samples; ++k)
    ring[k] = value(2 * M_PI * k / samples);

  double total = 0;
  std::vector<Segment> stack;
  for (int k = 0; k < samples; ++k)
    stack.push_back({2 * M_PI * k / samples, 2 * M_PI * (k + 1) / samples,
                     ring[k], ring[(k + 1) % samples]});
  while (!stack.empty()) {
    Segment s = stack.back();
    stack.pop_back();
    double d = std::arg(s.v1 * std::conj(s.v0));
    // The margin keeps exact pi/2 ties (uniform samples of z^m hit them) on
    // the bisection side regardless of rounding.
    if (std::abs(d) < M_PI / 2 - 1e-9) {
      total += d;
      continue;
    }
    double tm = 0.5 * (s.t0 + s.t1);
    std::complex<double> vm = value(tm);
    stack.push_back({s.t0, tm, s.v0, vm});
    stack.push_back({tm, s.t1, vm, s.v1});
  }

  double turns = total / (2 * M_PI);
  long degree = std::lround(turns);
  if (std::abs(turns - degree) > 0.25)
    fail(errcode::internal, "argument increment far from an integer turn");
  return {degree, evals};
}

}  // namespace

DegreeResult mapping_degree(const MixedPolynomial& f, double eps, int samples) {
  if (f.nvars() != 1)
    fail(errcode::dimension, "mapping degree is defined for one variable");
  if (f.is_zero()) fail(errcode::domain, "zero polynomial has no mapping degree");
  if (!(eps > 0) || !std::isfinite(eps))
    fail(errcode::domain, "radius must be positive");
  if (samples < 2) fail(errcode::budget, "need at least 2 initial samples");

  auto [degree, evals] = wind_once(f, eps, samples);
  DegreeResult r;
  r.degree = degree;
  r.radius_used = eps;
  r.samples = evals;
  try {
    r.stable = wind_once(f, eps / 2, samples).first == degree;
  } catch (const Error&) {
    r.stable = false;
  }
  return r;
}

DegreeResult mapping_degree_auto(const MixedPolynomial& f, double eps,
                                 int samples, int max_halvings) {
  if (max_halvings < 0) fail(errcode::budget, "negative halving budget");
  for (int h = 0;; ++h) {
    try {
      return mapping_degree(f, eps, samples);
    } catch (const Error& e) {
      if (e.code() != errcode::near_zero || h == max_halvings) throw;
      eps /= 2;
    }
  }
}

}  // namespace jl
