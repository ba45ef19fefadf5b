#include "joinlink/enhanced.hpp"

#include "joinlink/error.hpp"

namespace jl {

namespace {

long checked_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(errcode::overflow, "Milnor number product overflows");
  return r;
}

std::string f1_text(long p) {
  std::string zp = "z1^" + std::to_string(p);
  return "(" + zp + " + z2)*(" + zp + " + 2*z2)*conj(" + zp + " + 3*z2)";
}

}  // namespace

EnhancedMilnor::EnhancedMilnor(long mu_, int lambda_, long k_, bool assumed)
    : mu(mu_), lambda(lambda_), k(k_), condition_assumed(assumed) {
  if (mu < 0) fail(errcode::domain, "Milnor number must be nonnegative");
  if (lambda != 0 && lambda != 1)
    fail(errcode::domain, "enhancement must be 0 or 1");
  if (k < 0) fail(errcode::domain, "fiber parameter must be nonnegative");
}

std::pair<long, int> EnhancedMilnor::display() const {
  return {(k % 2 == 0) ? -mu : mu, lambda};
}

EnhancedMilnor join_enhanced(const EnhancedMilnor& e1, const EnhancedMilnor& e2,
                             std::optional<long> k_result) {
  long mu = checked_mul(e1.mu, e2.mu);
  int lambda = static_cast<int>((e1.lambda * (e2.mu % 2) +
                                 (e1.mu % 2) * e2.lambda) % 2);
  long k = k_result ? *k_result : e1.k + e2.k + 1;
  return EnhancedMilnor(mu, lambda, k,
                        e1.condition_assumed && e2.condition_assumed);
}

EnhancedMilnor brieskorn_enhanced(const std::vector<long>& exponents) {
  if (exponents.empty())
    fail(errcode::domain, "need at least one Brieskorn exponent");
  long mu = 1;
  for (long a : exponents) {
    if (a < 2) fail(errcode::domain, "Brieskorn exponents must be at least 2");
    mu = checked_mul(mu, a - 1);
  }
  return EnhancedMilnor(mu, 0, static_cast<long>(exponents.size()) - 1);
}

std::vector<BaseCase> base_cases(long p) {
  if (p < 1) fail(errcode::domain, "the f1 family needs p >= 1");
  std::vector<BaseCase> table;
  table.push_back({"f1", parse_poly(f1_text(p), 2),
                   EnhancedMilnor(checked_mul(2, p), 1, 1)});
  table.push_back({"f2", parse_poly("z1^2 + zb2^2", 2), EnhancedMilnor(1, 1, 1)});
  table.push_back({"f3", parse_poly("z1^2", 1), EnhancedMilnor(1, 0, 0)});
  return table;
}

JoinWitness witness(long ell, long k) {
  if (ell < 1) fail(errcode::domain, "witness needs ell >= 1");
  if (k < 2) fail(errcode::domain, "witness needs k >= 2");

  WitnessRecipe recipe = WitnessRecipe::EvenCase;
  long p = 0;
  std::vector<long> tail;
  std::string text;
  EnhancedMilnor head(0, 0, 0);
  if (ell % 2 == 0) {
    p = ell / 2;
    tail.assign(static_cast<size_t>(k) - 1, 2);
    text = f1_text(p);
    for (long i = 1; i <= k - 1; ++i)
      text += " + z" + std::to_string(i + 2) + "^2";
    head = EnhancedMilnor(2 * p, 1, 1);
  } else {
    recipe = WitnessRecipe::OddCase;
    tail.push_back(ell + 1);
    for (long i = 0; i < k - 2; ++i) tail.push_back(2);
    text = "z1^2 + zb2^2 + z3^" + std::to_string(ell + 1);
    for (long i = 2; i <= k - 1; ++i)
      text += " + z" + std::to_string(i + 2) + "^2";
    head = EnhancedMilnor(1, 1, 1);
  }
  int nvars = static_cast<int>(k) + 1;
  return JoinWitness{parse_poly(text, nvars), nvars,
                     join_enhanced(head, brieskorn_enhanced(tail), k), recipe,
                     p, tail};
}

}  // namespace jl
