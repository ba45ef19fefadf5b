#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "joinlink/mixed_poly.hpp"

namespace jl {

// Pair (mu, lambda) with the ambient fiber parameter k (link in S^{2k+1}).
// mu >= 0 and lambda in {0,1}; the signed display form is ((-1)^{k+1} mu,
// lambda).  condition_assumed records that the fibration hypothesis behind
// the multiplicative laws is taken on faith for this entry.
struct EnhancedMilnor {
  long mu = 0;
  int lambda = 0;
  long k = 0;
  bool condition_assumed = true;

  EnhancedMilnor() = default;
  EnhancedMilnor(long mu_, int lambda_, long k_, bool assumed = true);

  // ((-1)^{k+1} mu, lambda).
  std::pair<long, int> display() const;

  friend bool operator==(const EnhancedMilnor& a, const EnhancedMilnor& b) {
    return a.mu == b.mu && a.lambda == b.lambda && a.k == b.k;
  }
};

// mu multiplies, lambda follows the mod-2 product rule
// lambda = l1*mu2 + mu1*l2.  The resulting k is metadata: pass it explicitly,
// or omit it to use the variable-count bookkeeping k1 + k2 + 1.
EnhancedMilnor join_enhanced(const EnhancedMilnor& e1, const EnhancedMilnor& e2,
                             std::optional<long> k_result = std::nullopt);

// (prod (a_i - 1), 0) for Brieskorn exponents a_i >= 2, with k = m - 1.
EnhancedMilnor brieskorn_enhanced(const std::vector<long>& exponents);

struct BaseCase {
  std::string name;
  MixedPolynomial polynomial;
  EnhancedMilnor invariant;
};

// The tabulated generators of the witness construction: the f1(p) family
// ((2p, 1)), f2 = z1^2 + zbar2^2 ((1, 1)), and f3 = w1^2 ((1, 0)).  These are
// cited values, not computed ones.
std::vector<BaseCase> base_cases(long p = 1);

enum class WitnessRecipe { EvenCase, OddCase };

struct JoinWitness {
  MixedPolynomial polynomial;
  int variable_count = 0;
  EnhancedMilnor invariant;
  WitnessRecipe recipe = WitnessRecipe::EvenCase;
  long p = 0;                        // even recipe parameter
  std::vector<long> brieskorn_tail;  // exponents of the joined Brieskorn part
};

// Constructive realization of (mu, lambda) = (ell, 1) by a (k+1)-variable
// polynomial of join type, for ell >= 1 and k >= 2.  The invariant is
// assembled through join_enhanced from the recipe's factors.
JoinWitness witness(long ell, long k);

}  // namespace jl
