#include "joinlink/intmatrix.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <sstream>

namespace jl {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Fixed descending sequence of primes below 2^62; extended on demand.
// Returns a copy so callers are immune to cache growth from other threads.
std::vector<u64> primes_atleast(size_t count) {
  static std::mutex mu;
  static std::vector<u64> cache;
  static u64 next_candidate = (u64(1) << 62) - 1;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() < count) {
    while (!is_prime(next_candidate)) next_candidate -= 2;
    cache.push_back(next_candidate);
    next_candidate -= 2;
  }
  return {cache.begin(), cache.begin() + static_cast<long>(count)};
}

u64 entry_mod(const mpz_class& v, u64 p) {
  u64 r = mpz_fdiv_ui(v.get_mpz_t(), p);
  return r;
}

std::vector<u64> mat_mod(const IMat& m, u64 p) {
  std::vector<u64> out(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[static_cast<size_t>(i) * m.cols() + j] = entry_mod(m.at(i, j), p);
  return out;
}

u64 det_mod(std::vector<u64> a, int n, u64 p) {
  u64 det = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a[static_cast<size_t>(i) * n + k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<size_t>(piv) * n + j], a[static_cast<size_t>(k) * n + j]);
      det = p - det;
      if (det == p) det = 0;
    }
    u64 pivval = a[static_cast<size_t>(k) * n + k];
    det = mulmod(det, pivval, p);
    u64 inv = invmod(pivval, p);
    for (int i = k + 1; i < n; ++i) {
      u64 f = mulmod(a[static_cast<size_t>(i) * n + k], inv, p);
      if (f == 0) continue;
      for (int j = k; j < n; ++j) {
        u64& x = a[static_cast<size_t>(i) * n + j];
        x = (x + p - mulmod(f, a[static_cast<size_t>(k) * n + j], p)) % p;
      }
    }
  }
  return det;
}

// Chinese remainder combination with a symmetric-range final lift.
mpz_class crt_u64(const std::vector<u64>& residues, const std::vector<u64>& primes) {
  mpz_class x = 0;
  mpz_class modulus = 1;
  for (size_t i = 0; i < residues.size(); ++i) {
    const u64 p = primes[i];
    u64 xm = mpz_fdiv_ui(x.get_mpz_t(), p);
    u64 mm = mpz_fdiv_ui(modulus.get_mpz_t(), p);
    u64 delta = (residues[i] + p - xm) % p;
    u64 t = mulmod(delta, invmod(mm, p), p);
    x += modulus * mpz_class(static_cast<unsigned long>(t));
    modulus *= mpz_class(static_cast<unsigned long>(p));
  }
  mpz_class half = modulus / 2;
  if (x > half) x -= modulus;
  return x;
}

}  // namespace

IMat::IMat(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(errcode::dimension, "negative matrix dimension");
  a_.assign(static_cast<size_t>(rows) * cols, mpz_class(0));
}

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat IMat::from_rows(const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IMat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      fail(errcode::dimension, "ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IMat IMat::transpose() const {
  IMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IMat IMat::operator-() const {
  IMat t(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) t.a_[i] = -a_[i];
  return t;
}

IMat operator+(const IMat& a, const IMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(errcode::dimension, "matrix addition shape mismatch");
  IMat t(a.rows_, a.cols_);
  for (size_t i = 0; i < t.a_.size(); ++i) t.a_[i] = a.a_[i] + b.a_[i];
  return t;
}

IMat operator-(const IMat& a, const IMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(errcode::dimension, "matrix subtraction shape mismatch");
  IMat t(a.rows_, a.cols_);
  for (size_t i = 0; i < t.a_.size(); ++i) t.a_[i] = a.a_[i] - b.a_[i];
  return t;
}

IMat operator*(const IMat& a, const IMat& b) {
  if (a.cols_ != b.rows_) fail(errcode::dimension, "matrix product shape mismatch");
  IMat t(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const mpz_class& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) t.at(i, j) += aik * b.at(k, j);
    }
  return t;
}

bool operator==(const IMat& a, const IMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

bool IMat::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

mpz_class IMat::max_abs() const {
  mpz_class m = 0;
  for (const auto& x : a_) {
    mpz_class v = abs(x);
    if (v > m) m = v;
  }
  return m;
}

std::string IMat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

IMat kron(const IMat& a, const IMat& b) {
  IMat t(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i1 = 0; i1 < a.rows(); ++i1)
    for (int j1 = 0; j1 < a.cols(); ++j1) {
      const mpz_class& v = a.at(i1, j1);
      if (v == 0) continue;
      for (int i2 = 0; i2 < b.rows(); ++i2)
        for (int j2 = 0; j2 < b.cols(); ++j2)
          t.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = v * b.at(i2, j2);
    }
  return t;
}

namespace {

// Number of bits that surely bound |det| (Hadamard).
size_t det_bound_bits(const IMat& m) {
  mpz_class h2 = 1;
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class row = 0;
    for (int j = 0; j < m.cols(); ++j) row += m.at(i, j) * m.at(i, j);
    if (row == 0) return 1;  // zero row: det = 0
    h2 *= row;
  }
  return mpz_sizeinbase(h2.get_mpz_t(), 2) / 2 + 2;
}

size_t primes_for_bits(size_t bits) {
  // Each prime contributes at least 61 bits; one extra for the symmetric lift.
  return bits / 61 + 2;
}

}  // namespace

mpz_class IMat::det() const {
  if (!is_square()) fail(errcode::dimension, "determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  const size_t bits = det_bound_bits(*this);
  const size_t k = primes_for_bits(bits);
  const std::vector<u64> ps = primes_atleast(k);
  std::vector<u64> residues(k);
  for (size_t i = 0; i < k; ++i) residues[i] = det_mod(mat_mod(*this, ps[i]), n, ps[i]);
  return crt_u64(residues, ps);
}

IMat solve_unimodular(const IMat& l, const IMat& r) {
  if (!l.is_square()) fail(errcode::dimension, "coefficient matrix must be square");
  if (l.rows() != r.rows()) fail(errcode::dimension, "right-hand side row count mismatch");
  const int n = l.rows();
  const int m = r.cols();
  mpz_class d = l.det();
  if (d != 1 && d != -1)
    fail(errcode::non_unimodular, "matrix determinant is " + d.get_str() + ", expected +-1");
  if (n == 0 || m == 0) return IMat(n, m);

  // |adj(l)| entries are bounded by the Hadamard bound, so |x| <= n*H*max|r|.
  size_t bits = det_bound_bits(l);
  mpz_class scale = mpz_class(n) * (r.max_abs() + 1);
  bits += mpz_sizeinbase(scale.get_mpz_t(), 2) + 2;
  const size_t k = primes_for_bits(bits);
  const std::vector<u64> ps = primes_atleast(k);

  std::vector<std::vector<u64>> sols(k);
  for (size_t pi = 0; pi < k; ++pi) {
    const u64 p = ps[pi];
    std::vector<u64> a = mat_mod(l, p);
    std::vector<u64> b = mat_mod(r, p);
    // Gauss-Jordan on [a | b].
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int i = col; i < n; ++i)
        if (a[static_cast<size_t>(i) * n + col] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) fail(errcode::internal, "unimodular matrix singular mod prime");
      if (piv != col) {
        for (int j = 0; j < n; ++j)
          std::swap(a[static_cast<size_t>(piv) * n + j], a[static_cast<size_t>(col) * n + j]);
        for (int j = 0; j < m; ++j)
          std::swap(b[static_cast<size_t>(piv) * m + j], b[static_cast<size_t>(col) * m + j]);
      }
      u64 inv = invmod(a[static_cast<size_t>(col) * n + col], p);
      for (int j = 0; j < n; ++j)
        a[static_cast<size_t>(col) * n + j] = mulmod(a[static_cast<size_t>(col) * n + j], inv, p);
      for (int j = 0; j < m; ++j)
        b[static_cast<size_t>(col) * m + j] = mulmod(b[static_cast<size_t>(col) * m + j], inv, p);
      for (int i = 0; i < n; ++i) {
        if (i == col) continue;
        u64 f = a[static_cast<size_t>(i) * n + col];
        if (f == 0) continue;
        for (int j = 0; j < n; ++j) {
          u64& x = a[static_cast<size_t>(i) * n + j];
          x = (x + p - mulmod(f, a[static_cast<size_t>(col) * n + j], p)) % p;
        }
        for (int j = 0; j < m; ++j) {
          u64& x = b[static_cast<size_t>(i) * m + j];
          x = (x + p - mulmod(f, b[static_cast<size_t>(col) * m + j], p)) % p;
        }
      }
    }
    sols[pi] = std::move(b);
  }

  IMat x(n, m);
  std::vector<u64> residues(k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      for (size_t pi = 0; pi < k; ++pi) residues[pi] = sols[pi][static_cast<size_t>(i) * m + j];
      x.at(i, j) = crt_u64(residues, ps);
    }
  if (l * x != r) fail(errcode::internal, "exact solve verification failed");
  return x;
}

std::vector<mpz_class> smith_diagonal(IMat a) {
  const int r = a.rows();
  const int c = a.cols();
  const int n = std::min(r, c);
  std::vector<mpz_class> diag(static_cast<size_t>(n), mpz_class(0));

  auto row_sub = [&](int dst, int src, const mpz_class& q) {
    for (int j = 0; j < c; ++j) a.at(dst, j) -= q * a.at(src, j);
  };
  auto col_sub = [&](int dst, int src, const mpz_class& q) {
    for (int i = 0; i < r; ++i) a.at(i, dst) -= q * a.at(i, src);
  };
  auto row_swap = [&](int x, int y) {
    for (int j = 0; j < c; ++j) std::swap(a.at(x, j), a.at(y, j));
  };
  auto col_swap = [&](int x, int y) {
    for (int i = 0; i < r; ++i) std::swap(a.at(i, x), a.at(i, y));
  };

  for (int t = 0; t < n; ++t) {
    // Locate a nonzero entry of minimal magnitude in the trailing block.
    int pi = -1, pj = -1;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j) {
        if (a.at(i, j) == 0) continue;
        if (pi < 0 || abs(a.at(i, j)) < abs(a.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);

    // Every swap below installs a remainder strictly smaller than the pivot,
    // so the restarted clearing terminates.
    for (bool settled = false; !settled;) {
      settled = true;
      for (int i = t + 1; i < r && settled; ++i) {
        if (a.at(i, t) == 0) continue;
        row_sub(i, t, mpz_class(a.at(i, t) / a.at(t, t)));
        if (a.at(i, t) != 0) {
          row_swap(t, i);
          settled = false;
        }
      }
      for (int j = t + 1; j < c && settled; ++j) {
        if (a.at(t, j) == 0) continue;
        col_sub(j, t, mpz_class(a.at(t, j) / a.at(t, t)));
        if (a.at(t, j) != 0) {
          col_swap(t, j);
          settled = false;
        }
      }
      if (!settled) continue;

      // Divisibility sweep for the invariant-factor chain.
      for (int i = t + 1; i < r && settled; ++i)
        for (int j = t + 1; j < c; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            row_sub(t, i, mpz_class(-1));  // absorb the offending row, re-clear
            settled = false;
            break;
          }
    }
    diag[static_cast<size_t>(t)] = abs(a.at(t, t));
  }
  return diag;
}

Inertia symmetric_inertia(const IMat& s) {
  if (!s.is_square()) fail(errcode::dimension, "inertia of a non-square matrix");
  if (!s.is_symmetric()) fail(errcode::domain, "inertia requires a symmetric matrix");
  const int n = s.rows();
  std::vector<std::vector<mpq_class>> d(static_cast<size_t>(n),
                                        std::vector<mpq_class>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[i][j] = mpq_class(s.at(i, j));

  Inertia out;
  for (int k = 0; k < n; ++k) {
    if (d[k][k] == 0) {
      int dj = -1;
      for (int j = k + 1; j < n; ++j)
        if (d[j][j] != 0) {
          dj = j;
          break;
        }
      if (dj >= 0) {
        std::swap(d[k], d[dj]);
        for (int i = 0; i < n; ++i) std::swap(d[i][k], d[i][dj]);
      } else {
        int oj = -1;
        for (int j = k + 1; j < n; ++j)
          if (d[k][j] != 0) {
            oj = j;
            break;
          }
        if (oj < 0) {
          ++out.zero;
          continue;
        }
        // Both diagonals vanish; adding row/col oj makes d[k][k] = 2*d[k][oj].
        for (int j = 0; j < n; ++j) d[k][j] += d[oj][j];
        for (int i = 0; i < n; ++i) d[i][k] += d[i][oj];
      }
    }
    const mpq_class piv = d[k][k];
    if (piv > 0)
      ++out.positive;
    else
      ++out.negative;
    for (int i = k + 1; i < n; ++i) {
      if (d[i][k] == 0) continue;
      mpq_class f = d[i][k] / piv;
      for (int j = 0; j < n; ++j) d[i][j] -= f * d[k][j];
      for (int j = 0; j < n; ++j) d[j][i] -= f * d[j][k];
    }
  }
  return out;
}

namespace {

std::vector<u64> charpoly_mod(std::vector<u64> h, int n, u64 p) {
  // Reduce to upper Hessenberg form by similarity transformations.
  auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (h[idx(i, j)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int t = 0; t < n; ++t) std::swap(h[idx(piv, t)], h[idx(j + 1, t)]);
      for (int t = 0; t < n; ++t) std::swap(h[idx(t, piv)], h[idx(t, j + 1)]);
    }
    u64 inv = invmod(h[idx(j + 1, j)], p);
    for (int i = j + 2; i < n; ++i) {
      u64 f = mulmod(h[idx(i, j)], inv, p);
      if (f == 0) continue;
      for (int t = 0; t < n; ++t)
        h[idx(i, t)] = (h[idx(i, t)] + p - mulmod(f, h[idx(j + 1, t)], p)) % p;
      for (int t = 0; t < n; ++t)
        h[idx(t, j + 1)] = (h[idx(t, j + 1)] + mulmod(f, h[idx(t, i)], p)) % p;
    }
  }

  // Leading principal characteristic polynomials of the Hessenberg form.
  std::vector<std::vector<u64>> pk(static_cast<size_t>(n) + 1);
  pk[0] = {1};
  for (int k = 1; k <= n; ++k) {
    const std::vector<u64>& prev = pk[k - 1];
    std::vector<u64> cur(static_cast<size_t>(k) + 1, 0);
    u64 diag = h[idx(k - 1, k - 1)];
    for (size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = (cur[i + 1] + prev[i]) % p;
      cur[i] = (cur[i] + p - mulmod(diag, prev[i], p)) % p;
    }
    u64 prod = 1;
    for (int m = 1; m <= k - 1; ++m) {
      prod = mulmod(prod, h[idx(k - m, k - m - 1)], p);
      if (prod == 0) break;
      u64 coeff = mulmod(h[idx(k - m - 1, k - 1)], prod, p);
      if (coeff == 0) continue;
      const std::vector<u64>& lower = pk[k - m - 1];
      for (size_t i = 0; i < lower.size(); ++i)
        cur[i] = (cur[i] + p - mulmod(coeff, lower[i], p)) % p;
    }
    pk[static_cast<size_t>(k)] = std::move(cur);
  }
  return pk[static_cast<size_t>(n)];
}

}  // namespace

IntPoly charpoly(const IMat& m) {
  if (!m.is_square()) fail(errcode::dimension, "characteristic polynomial of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return IntPoly::constant(1);

  // Coefficients are sums of principal minors: |c_i| <= 2^n * (sqrt(n)*B)^n.
  mpz_class nb = mpz_class(n) * (m.max_abs() + 1);
  size_t bits = static_cast<size_t>(n) * (1 + mpz_sizeinbase(nb.get_mpz_t(), 2)) + 64;
  const size_t k = primes_for_bits(bits);
  const std::vector<u64> ps = primes_atleast(k);

  std::vector<std::vector<u64>> per_prime(k);
  for (size_t pi = 0; pi < k; ++pi)
    per_prime[pi] = charpoly_mod(mat_mod(m, ps[pi]), n, ps[pi]);

  std::vector<mpz_class> coeffs(static_cast<size_t>(n) + 1);
  std::vector<u64> residues(k);
  for (size_t ci = 0; ci <= static_cast<size_t>(n); ++ci) {
    for (size_t pi = 0; pi < k; ++pi) residues[pi] = per_prime[pi][ci];
    coeffs[ci] = crt_u64(residues, ps);
  }
  if (coeffs.back() != 1) fail(errcode::internal, "characteristic polynomial not monic");
  return IntPoly(std::move(coeffs));
}

IntPoly det_pencil(const IMat& a, const IMat& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    fail(errcode::dimension, "pencil determinant needs equal square matrices");
  const int n = a.rows();
  if (n == 0) return IntPoly::constant(1);
  std::vector<mpz_class> nodes, values;
  for (int k = 0; k <= n; ++k) {
    long node = (k + 1) / 2 * ((k % 2) ? 1 : -1);
    IMat m = a;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) += node * b.at(i, j);
    nodes.emplace_back(node);
    values.push_back(m.det());
  }
  return interpolate_integer(nodes, values);
}

}  // namespace jl
