#include "joinlink/simplex.hpp"

#include <cstddef>

#include "joinlink/error.hpp"

namespace jl {

bool lp_feasible(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b,
                 std::vector<mpq_class>* out) {
  const size_t m = a.size();
  size_t nv = 0;
  for (const auto& row : a) nv = std::max(nv, row.size());
  for (auto& row : a) row.resize(nv, 0);
  if (b.size() != m) fail(errcode::dimension, "lp_feasible: rhs length mismatch");

  // Tableau [A | I | b] with one artificial per row; minimize their sum.
  for (size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }
  const size_t total = nv + m;
  std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(total + 1, 0));
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < nv; ++j) t[i][j] = a[i][j];
    t[i][nv + i] = 1;
    t[i][total] = b[i];
    basis[i] = nv + i;
  }

  // Reduced-cost row for minimizing the artificial sum: d_j = c_j - sum_i
  // T[i][j] while every basic variable is artificial; kept updated by pivots.
  std::vector<mpq_class> d(total + 1, 0);
  for (size_t j = 0; j <= total; ++j) {
    mpq_class s = 0;
    for (size_t i = 0; i < m; ++i) s += t[i][j];
    d[j] = (j < nv ? mpq_class(0) : mpq_class(j < total ? 1 : 0)) - s;
  }

  for (;;) {
    size_t enter = total;
    for (size_t j = 0; j < total; ++j)
      if (d[j] < 0) {
        enter = j;
        break;
      }
    if (enter == total) break;

    size_t leave = m;
    mpq_class best_ratio;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      mpq_class ratio = t[i][total] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) fail(errcode::internal, "phase-1 objective unbounded");

    mpq_class piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      mpq_class f = t[i][enter];
      for (size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
    }
    if (d[enter] != 0) {
      mpq_class f = d[enter];
      for (size_t j = 0; j <= total; ++j) d[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  mpq_class objective = 0;
  for (size_t i = 0; i < m; ++i)
    if (basis[i] >= nv) objective += t[i][total];
  if (objective != 0) return false;

  if (out) {
    out->assign(nv, 0);
    for (size_t i = 0; i < m; ++i)
      if (basis[i] < nv) (*out)[basis[i]] = t[i][total];
  }
  return true;
}

}  // namespace jl
