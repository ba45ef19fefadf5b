#include "joinlink/seifert.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <unordered_map>

namespace jl {

SeifertForm::SeifertForm(IMat entries, std::optional<int> k, bool checked)
    : entries_(std::move(entries)), k_(k), checked_(checked) {
  if (!entries_.is_square()) fail(errcode::dimension, "Seifert form must be square");
  if (checked_) {
    mpz_class d = entries_.det();
    if (d != 1 && d != -1)
      fail(errcode::non_unimodular,
           "Seifert form determinant is " + d.get_str() + ", expected +-1");
  }
}

SeifertForm::SeifertForm(IMat entries, std::optional<int> k)
    : SeifertForm(std::move(entries), k, true) {}

SeifertForm SeifertForm::relaxed(IMat entries, std::optional<int> k) {
  return SeifertForm(std::move(entries), k, false);
}

SeifertForm lambda_matrix(long m) {
  if (m == 0) fail(errcode::domain, "lambda matrix index must be nonzero");
  const long size = std::labs(m) - 1;
  IMat a(static_cast<int>(size), static_cast<int>(size));
  for (long i = 0; i < size; ++i) {
    a.at(static_cast<int>(i), static_cast<int>(i)) = 1;
    if (i > 0) {
      if (m > 0)
        a.at(static_cast<int>(i), static_cast<int>(i) - 1) = -1;
      else
        a.at(static_cast<int>(i) - 1, static_cast<int>(i)) = -1;
    }
  }
  return SeifertForm(std::move(a), 0);
}

SeifertForm join_tensor(const SeifertForm& l1, int n, const SeifertForm& l2, int m) {
  IMat t = kron(l1.entries(), l2.entries());
  if (((static_cast<long>(n) * m) % 2) != 0) t = -t;
  std::optional<int> k;
  if (l1.k() && l2.k()) k = *l1.k() + *l2.k() + 1;
  return SeifertForm(std::move(t), k);
}

SeifertForm brieskorn_form(const std::vector<long>& exponents) {
  for (long e : exponents)
    if (std::labs(e) < 2)
      fail(errcode::domain, "Brieskorn exponents must have absolute value at least 2");
  const size_t n = exponents.size();
  IMat t = IMat::identity(1);
  for (long e : exponents) t = kron(t, lambda_matrix(e).entries());
  if ((n * (n + 1) / 2) % 2 != 0) t = -t;
  return SeifertForm(std::move(t), static_cast<int>(n) - 1);
}

SeifertForm extend_form(const SeifertForm& l, const std::vector<mpz_class>& b, int eps) {
  if (eps != 1 && eps != -1) fail(errcode::domain, "extension sign must be +1 or -1");
  const int r = l.rank();
  if (static_cast<int>(b.size()) != r)
    fail(errcode::dimension, "extension row length must equal the rank");
  IMat a(r + 1, r + 1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a.at(i, j) = l.entries().at(i, j);
  for (int j = 0; j < r; ++j) a.at(r, j) = b[static_cast<size_t>(j)];
  a.at(r, r) = eps;
  if (l.unimodular_checked()) return SeifertForm(std::move(a), l.k());
  return SeifertForm::relaxed(std::move(a), l.k());
}

CongruenceInvariants congruence_invariants(const SeifertForm& l) {
  const IMat& a = l.entries();
  CongruenceInvariants inv;
  inv.det = a.det();
  inv.smith = smith_diagonal(a);
  inv.symmetrized = symmetric_inertia(a + a.transpose());
  IntPoly alex = det_pencil(-a.transpose(), a);
  inv.alexander = alex.is_zero() ? alex : alex.primitive_positive();
  return inv;
}

IntPoly monodromy_charpoly(const SeifertForm& l, bool alternate) {
  const IMat& a = l.entries();
  mpz_class d = a.det();
  if (d != 1 && d != -1)
    fail(errcode::non_unimodular, "monodromy needs a unimodular form");
  IMat h = alternate ? solve_unimodular(a.transpose(), a).transpose()
                     : solve_unimodular(a, a.transpose());
  IntPoly cp = charpoly(h);
  std::vector<mpz_class> rev(cp.coeffs().rbegin(), cp.coeffs().rend());
  return IntPoly(std::move(rev));
}

namespace {

using State = std::vector<int64_t>;

struct Move {
  enum Kind { Transvect, Swap, Flip } kind;
  int i;
  int j;
  long c;
};

std::vector<Move> move_table(int r) {
  std::vector<Move> moves;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      for (long c = -3; c <= 3; ++c)
        if (c != 0) moves.push_back({Move::Transvect, i, j, c});
    }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) moves.push_back({Move::Swap, i, j, 0});
  for (int i = 0; i < r; ++i) moves.push_back({Move::Flip, i, 0, 0});
  return moves;
}

// In-place E * M * E^T for the elementary matrix E described by the move.
void apply_move(State& s, int r, const Move& m) {
  auto at = [&](int i, int j) -> int64_t& { return s[static_cast<size_t>(i) * r + j]; };
  switch (m.kind) {
    case Move::Transvect:
      for (int t = 0; t < r; ++t) at(m.i, t) += m.c * at(m.j, t);
      for (int t = 0; t < r; ++t) at(t, m.i) += m.c * at(t, m.j);
      break;
    case Move::Swap:
      for (int t = 0; t < r; ++t) std::swap(at(m.i, t), at(m.j, t));
      for (int t = 0; t < r; ++t) std::swap(at(t, m.i), at(t, m.j));
      break;
    case Move::Flip:
      for (int t = 0; t < r; ++t) at(m.i, t) = -at(m.i, t);
      for (int t = 0; t < r; ++t) at(t, m.i) = -at(t, m.i);
      break;
  }
}

IMat move_matrix(int r, const Move& m) {
  IMat e = IMat::identity(r);
  switch (m.kind) {
    case Move::Transvect:
      e.at(m.i, m.j) = m.c;
      break;
    case Move::Swap:
      e.at(m.i, m.i) = 0;
      e.at(m.j, m.j) = 0;
      e.at(m.i, m.j) = 1;
      e.at(m.j, m.i) = 1;
      break;
    case Move::Flip:
      e.at(m.i, m.i) = -1;
      break;
  }
  return e;
}

std::string pack(const State& s) {
  return {reinterpret_cast<const char*>(s.data()), s.size() * sizeof(int64_t)};
}

struct Node {
  State state;
  int32_t parent;  // -1 at the root
  int32_t move;
};

struct Side {
  std::vector<Node> nodes;
  std::unordered_map<std::string, int32_t> seen;
  size_t level_begin = 0;  // current frontier [level_begin, nodes.size())
  int depth = 0;

  void init(State root) {
    seen.emplace(pack(root), 0);
    nodes.push_back({std::move(root), -1, -1});
  }
};

// Product of the elementary matrices along the ancestry, oldest move first.
IMat accumulated_transform(const Side& side, int32_t idx, int r,
                           const std::vector<Move>& moves) {
  std::vector<int32_t> chain;
  for (int32_t cur = idx; cur >= 0 && side.nodes[static_cast<size_t>(cur)].parent >= 0;
       cur = side.nodes[static_cast<size_t>(cur)].parent)
    chain.push_back(side.nodes[static_cast<size_t>(cur)].move);
  IMat u = IMat::identity(r);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    u = move_matrix(r, moves[static_cast<size_t>(*it)]) * u;
  return u;
}

bool state_of(const IMat& m, State& out) {
  out.clear();
  out.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).fits_slong_p()) return false;
      out.push_back(m.at(i, j).get_si());
    }
  return true;
}

std::string invariant_text(const CongruenceInvariants& v, int which) {
  switch (which) {
    case 0:
      return v.det.get_str();
    case 1: {
      std::string s = "(";
      for (size_t i = 0; i < v.smith.size(); ++i)
        s += (i ? ", " : "") + v.smith[i].get_str();
      return s + ")";
    }
    case 2:
      return "signature " + std::to_string(v.symmetrized.signature()) + ", rank " +
             std::to_string(v.symmetrized.rank());
    default:
      return v.alexander.to_string();
  }
}

}  // namespace

CongruenceVerdict check_congruent(const SeifertForm& a, const SeifertForm& b,
                                  const CongruenceLimits& limits) {
  CongruenceVerdict verdict;
  if (a.rank() != b.rank()) {
    verdict.status = CongruenceStatus::DistinguishedByInvariant;
    verdict.separating = {"rank", std::to_string(a.rank()), std::to_string(b.rank())};
    return verdict;
  }
  CongruenceInvariants ia = congruence_invariants(a);
  CongruenceInvariants ib = congruence_invariants(b);
  static const char* kNames[] = {"determinant", "smith_diagonal", "symmetrized_inertia",
                                 "alexander_polynomial"};
  auto part_equal = [&](int which) {
    switch (which) {
      case 0:
        return ia.det == ib.det;
      case 1:
        return ia.smith == ib.smith;
      case 2:
        return ia.symmetrized.positive == ib.symmetrized.positive &&
               ia.symmetrized.negative == ib.symmetrized.negative &&
               ia.symmetrized.zero == ib.symmetrized.zero;
      default:
        return ia.alexander == ib.alexander;
    }
  };
  for (int which = 0; which < 4; ++which) {
    if (!part_equal(which)) {
      verdict.status = CongruenceStatus::DistinguishedByInvariant;
      verdict.separating = {kNames[which], invariant_text(ia, which), invariant_text(ib, which)};
      return verdict;
    }
  }

  const int r = a.rank();
  if (a.entries() == b.entries()) {
    verdict.status = CongruenceStatus::CongruentWitness;
    verdict.witness = IMat::identity(r);
    return verdict;
  }

  State root_a, root_b;
  if (!state_of(a.entries(), root_a) || !state_of(b.entries(), root_b))
    return verdict;  // entries exceed the fixed-width search range: Unknown

  int64_t base = 1;
  for (int64_t v : root_a) base = std::max<int64_t>(base, std::llabs(v));
  for (int64_t v : root_b) base = std::max<int64_t>(base, std::llabs(v));
  const int64_t prune = std::max<int64_t>(16, 8 * base);

  const std::vector<Move> moves = move_table(r);
  Side fwd, bwd;
  fwd.init(root_a);
  bwd.init(root_b);

  auto finish = [&](int32_t fwd_idx, int32_t bwd_idx) {
    IMat uf = accumulated_transform(fwd, fwd_idx, r, moves);
    IMat ub = accumulated_transform(bwd, bwd_idx, r, moves);
    IMat u = solve_unimodular(ub, IMat::identity(r)) * uf;
    if (u * a.entries() * u.transpose() != b.entries())
      fail(errcode::internal, "congruence witness verification failed");
    verdict.status = CongruenceStatus::CongruentWitness;
    verdict.witness = std::move(u);
  };

  // The move set is closed under inversion, so the backward search may use
  // the same table; a shared state X gives U = U_b^{-1} U_f.
  while (fwd.depth + bwd.depth < limits.depth) {
    Side& grow = (fwd.nodes.size() - fwd.level_begin <= bwd.nodes.size() - bwd.level_begin)
                     ? fwd
                     : bwd;
    Side& other = (&grow == &fwd) ? bwd : fwd;
    const size_t begin = grow.level_begin;
    const size_t end = grow.nodes.size();
    if (begin == end) break;
    grow.level_begin = end;
    ++grow.depth;
    State next;
    for (size_t ni = begin; ni < end; ++ni) {
      for (size_t mi = 0; mi < moves.size(); ++mi) {
        next = grow.nodes[ni].state;
        apply_move(next, r, moves[mi]);
        bool within = true;
        for (int64_t v : next)
          if (std::llabs(v) > prune) {
            within = false;
            break;
          }
        if (!within) continue;
        std::string key = pack(next);
        if (grow.seen.count(key)) continue;
        if (grow.nodes.size() >= limits.state_cap) return verdict;  // Unknown
        grow.seen.emplace(std::move(key), static_cast<int32_t>(grow.nodes.size()));
        grow.nodes.push_back({next, static_cast<int32_t>(ni), static_cast<int32_t>(mi)});
        auto hit = other.seen.find(pack(next));
        if (hit != other.seen.end()) {
          int32_t self = static_cast<int32_t>(grow.nodes.size() - 1);
          if (&grow == &fwd)
            finish(self, hit->second);
          else
            finish(hit->second, self);
          return verdict;
        }
      }
    }
  }
  return verdict;
}

}  // namespace jl
