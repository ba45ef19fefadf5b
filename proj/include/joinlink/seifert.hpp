#pragma once

#include <optional>
#include <string>
#include <vector>

#include "joinlink/intmatrix.hpp"
#include "joinlink/intpoly.hpp"

namespace jl {

// Integer bilinear form carried by a fiber surface, with the fiber-dimension
// parameter k (the link lives in S^{2k+1}) as optional metadata.
class SeifertForm {
public:
  // Requires |det| = 1.
  explicit SeifertForm(IMat entries, std::optional<int> k = std::nullopt);
  // Skips the unimodularity check for intermediate matrices.
  static SeifertForm relaxed(IMat entries, std::optional<int> k = std::nullopt);

  const IMat& entries() const { return entries_; }
  int rank() const { return entries_.rows(); }
  std::optional<int> k() const { return k_; }
  bool unimodular_checked() const { return checked_; }

private:
  SeifertForm(IMat entries, std::optional<int> k, bool checked);

  IMat entries_;
  std::optional<int> k_;
  bool checked_ = false;
};

// Lambda'_m: size (|m|-1), ones on the diagonal; -1 on the subdiagonal for
// m > 0, on the superdiagonal (transpose) for m < 0.  |m| = 1 gives the
// empty form; m = 0 is a domain error.
SeifertForm lambda_matrix(long m);

// (-1)^(n*m) * (l1 tensor l2) where n, m are the factors' variable counts.
// k of the result is k1 + k2 + 1 when both inputs carry k.
SeifertForm join_tensor(const SeifertForm& l1, int n, const SeifertForm& l2, int m);

// (-1)^(n(n+1)/2) * Lambda'_{m_1} tensor ... tensor Lambda'_{m_n}.
SeifertForm brieskorn_form(const std::vector<long>& exponents);

// Bordered (r+1)x(r+1) matrix: last row (b, eps), zero last column above eps.
SeifertForm extend_form(const SeifertForm& l, const std::vector<mpz_class>& b, int eps);

struct CongruenceInvariants {
  mpz_class det;
  std::vector<mpz_class> smith;
  Inertia symmetrized;            // of L + L^T
  IntPoly alexander;              // det(t*L - L^T), primitive positive-leading

  friend bool operator==(const CongruenceInvariants& a, const CongruenceInvariants& b) {
    return a.det == b.det && a.smith == b.smith &&
           a.symmetrized.positive == b.symmetrized.positive &&
           a.symmetrized.negative == b.symmetrized.negative &&
           a.symmetrized.zero == b.symmetrized.zero && a.alexander == b.alexander;
  }
};

CongruenceInvariants congruence_invariants(const SeifertForm& l);

enum class CongruenceStatus { CongruentWitness, DistinguishedByInvariant, Unknown };

struct SeparatingInvariant {
  std::string name;
  std::string value_a;
  std::string value_b;
};

struct CongruenceVerdict {
  CongruenceStatus status = CongruenceStatus::Unknown;
  std::optional<IMat> witness;  // U with U*A*U^T = B, |det U| = 1
  std::optional<SeparatingInvariant> separating;
};

struct CongruenceLimits {
  int depth = 8;              // total number of elementary moves
  size_t state_cap = 1000000;  // per-direction explored-state budget
};

// Invariant comparison first; then a bidirectional breadth-first search over
// elementary congruences (row/column swaps, sign flips, transvections with
// coefficients in [-3, 3]).  Exhausting the budget yields Unknown.
CongruenceVerdict check_congruent(const SeifertForm& a, const SeifertForm& b,
                                  const CongruenceLimits& limits = {});

// det(Id - t*H) with H = L^{-1} L^T; the alternate convention uses
// H = L^T L^{-1}, which is conjugate and yields the same polynomial.
IntPoly monodromy_charpoly(const SeifertForm& l, bool alternate = false);

}  // namespace jl
