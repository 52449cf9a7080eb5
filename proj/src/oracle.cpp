#include "ogus/oracle.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace ogus {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

long long mod(long long a, long long p) { return ((a % p) + p) % p; }

long long pow_mod(long long b, long long e, long long p) {
  long long r = 1;
  b = mod(b, p);
  for (; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return r;
}

}  // namespace

SparsePoly SparsePoly::constant(int nvars, long long c, long long modulus) {
  SparsePoly f(nvars, modulus);
  f.add_term(Monomial(nvars, 0), c);
  return f;
}

SparsePoly SparsePoly::variable(int nvars, int i, long long modulus) {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
  SparsePoly f(nvars, modulus);
  Monomial m(nvars, 0);
  m[i] = 1;
  f.add_term(m, 1);
  return f;
}

long long SparsePoly::norm(long long c) const { return mod_ > 0 ? mod(c, mod_) : c; }

void SparsePoly::check_ring(const SparsePoly& o) const {
  if (nvars_ != o.nvars_ || mod_ != o.mod_) throw std::invalid_argument("polynomial ring mismatch");
}

long long SparsePoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void SparsePoly::add_term(const Monomial& m, long long c) {
  if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("monomial arity");
  c = norm(c);
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second = norm(checked_add(it->second, c));
  if (it->second == 0) terms_.erase(it);
}

int SparsePoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
  return d;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  check_ring(o);
  SparsePoly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(nvars_, mod_);
  for (const auto& [m, c] : terms_) r.add_term(m, checked_mul(c, -1));
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  check_ring(o);
  SparsePoly r(nvars_, mod_);
  Monomial m(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      long long c = mod_ > 0 ? (ca % mod_) * (cb % mod_) % mod_ : checked_mul(ca, cb);
      r.add_term(m, c);
    }
  return r;
}

SparsePoly SparsePoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  SparsePoly r = constant(nvars_, 1, mod_);
  SparsePoly b = *this;
  for (; e; e >>= 1) {
    if (e & 1) r = r * b;
    if (e > 1) b = b * b;
  }
  return r;
}

SparsePoly SparsePoly::substitute(const std::vector<SparsePoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitution arity");
  if (images.empty()) return *this;
  const int nv = images[0].nvars();
  const long long p = images[0].modulus();
  SparsePoly out(nv, p);
  for (const auto& [m, c] : terms_) {
    SparsePoly t = constant(nv, c, p);
    for (int i = 0; i < nvars_; ++i)
      if (m[i]) t = t * images[i].pow(m[i]);
    out = out + t;
  }
  return out;
}

long long SparsePoly::evaluate(const std::vector<long long>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("evaluation arity");
  long long s = 0;
  for (const auto& [m, c] : terms_) {
    long long t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < m[i]; ++k) t = mod_ > 0 ? mod(t * mod(x[i], mod_), mod_) : checked_mul(t, x[i]);
    s = mod_ > 0 ? mod(s + t, mod_) : checked_add(s, t);
  }
  return s;
}

int order_at_zero(const SparsePoly& f, const std::vector<int>& vars) {
  if (f.is_zero()) throw std::domain_error("the zero polynomial has infinite order");
  int best = INT_MAX;
  for (const auto& [m, c] : f.terms()) {
    int d = 0;
    for (int v : vars) d += m.at(v);
    best = std::min(best, d);
  }
  return best;
}

PolyMatrix poly_identity(int n, int nvars, long long modulus) {
  PolyMatrix m(n, std::vector<SparsePoly>(n, SparsePoly(nvars, modulus)));
  for (int i = 0; i < n; ++i) m[i][i] = SparsePoly::constant(nvars, 1, modulus);
  return m;
}

PolyMatrix lift(const IntMatrix& a, int nvars, long long modulus) {
  PolyMatrix m;
  for (const auto& row : a) {
    std::vector<SparsePoly> r;
    for (long long x : row) r.push_back(SparsePoly::constant(nvars, x, modulus));
    m.push_back(r);
  }
  return m;
}

PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  const int nv = a[0][0].nvars();
  const long long p = a[0][0].modulus();
  PolyMatrix r(n, std::vector<SparsePoly>(m, SparsePoly(nv, p)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t t = 0; t < k; ++t)
        if (!a[i][t].is_zero() && !b[t][j].is_zero()) r[i][j] = r[i][j] + a[i][t] * b[t][j];
  return r;
}

SparsePoly minor(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor must be square");
  const int nv = m[0][0].nvars();
  const long long p = m[0][0].modulus();
  const size_t k = rows.size();
  if (k == 0) return SparsePoly::constant(nv, 1, p);
  if (k == 1) return m[rows[0]][cols[0]];
  // expansion along the first listed row
  SparsePoly s(nv, p);
  std::vector<int> rest_rows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < k; ++j) {
    const SparsePoly& e = m[rows[0]][cols[j]];
    if (e.is_zero()) continue;
    std::vector<int> rest_cols;
    for (size_t t = 0; t < k; ++t)
      if (t != j) rest_cols.push_back(cols[t]);
    SparsePoly term = e * minor(m, rest_rows, rest_cols);
    s = (j % 2) ? s - term : s + term;
  }
  return s;
}

SparsePoly det(const PolyMatrix& m) {
  std::vector<int> idx(m.size());
  std::iota(idx.begin(), idx.end(), 0);
  return minor(m, idx, idx);
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b, long long p) {
  const size_t n = a.size(), k = b.size(), m = b[0].size();
  IntMatrix r(n, std::vector<long long>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      long long s = 0;
      for (size_t t = 0; t < k; ++t) {
        s = checked_add(s, checked_mul(a[i][t], b[t][j]));
        if (p > 0) s = mod(s, p);
      }
      r[i][j] = s;
    }
  return r;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(a[0].size(), std::vector<long long>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long rank_mod_p(IntMatrix a, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
  const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (auto& r : a)
    for (auto& x : r) x = mod(x, p);
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    long long inv = pow_mod(a[rank][c], p - 2, p);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      long long f = a[r][c] * inv % p;
      for (size_t k = c; k < cols; ++k) a[r][k] = mod(a[r][k] - f * a[rank][k], p);
    }
    ++rank;
  }
  return static_cast<long long>(rank);
}

IntMatrix inverse_mod_p(const IntMatrix& a0, long long p) {
  const size_t n = a0.size();
  IntMatrix a(a0), inv = identity_matrix(static_cast<int>(n));
  for (auto& r : a)
    for (auto& x : r) x = mod(x, p);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw std::domain_error("matrix is singular mod p");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    long long s = pow_mod(a[c][c], p - 2, p);
    for (size_t k = 0; k < n; ++k) {
      a[c][k] = a[c][k] * s % p;
      inv[c][k] = inv[c][k] * s % p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      long long f = a[r][c];
      for (size_t k = 0; k < n; ++k) {
        a[r][k] = mod(a[r][k] - f * a[c][k], p);
        inv[r][k] = mod(inv[r][k] - f * inv[c][k], p);
      }
    }
  }
  return inv;
}

namespace {

// prod_k Delta_k(h)^{e_k}, Delta_k the leading principal k-minor
SparsePoly leading_minor_product(const PolyMatrix& h, const std::vector<long long>& lambda) {
  const int n = static_cast<int>(h.size());
  if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("weight length must be n");
  for (int k = 0; k + 1 < n; ++k)
    if (lambda[k] < lambda[k + 1]) throw std::invalid_argument("weight is not dominant for GL(n)");
  SparsePoly f = SparsePoly::constant(h[0][0].nvars(), 1, h[0][0].modulus());
  std::vector<int> idx;
  for (int k = 1; k <= n; ++k) {
    idx.push_back(k - 1);
    long long e = (k < n) ? lambda[k - 1] - lambda[k] : std::max<long long>(0, lambda[n - 1]);
    if (e > 0) f = f * minor(h, idx, idx).pow(static_cast<int>(e));
  }
  return f;
}

PolyMatrix reverse_conjugate(const PolyMatrix& g) {
  const size_t n = g.size();
  PolyMatrix h(g);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) h[i][j] = g[n - 1 - i][n - 1 - j];
  return h;
}

}  // namespace

SparsePoly gl_flambda(int n, const std::vector<long long>& lambda) {
  const int nv = n * n;
  PolyMatrix x(n, std::vector<SparsePoly>(n, SparsePoly(nv)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x[i][j] = SparsePoly::variable(nv, i * n + j);
  return leading_minor_product(x, lambda);
}

int gl_cell_order(int n, const std::vector<long long>& lambda, const Word& w,
                  std::mt19937_64& rng) {
  const int L = static_cast<int>(w.size());
  const int nv = std::max(L, 1);
  for (int i : w)
    if (i < 1 || i >= n) throw std::invalid_argument("letter outside GL(n)");
  std::uniform_int_distribution<int> small(-2, 2), sign(0, 1);
  IntMatrix u1 = identity_matrix(n), u2 = identity_matrix(n), t = identity_matrix(n);
  for (int i = 0; i < n; ++i) {
    t[i][i] = sign(rng) ? 1 : -1;
    for (int j = i + 1; j < n; ++j) {
      u1[i][j] = small(rng);
      u2[j][i] = small(rng);
    }
  }
  PolyMatrix g = lift(u1, nv);
  for (int k = 0; k < L; ++k) {
    const int i = w[k] - 1;
    PolyMatrix s = poly_identity(n, nv);
    s[i][i] = SparsePoly(nv);
    s[i + 1][i + 1] = SparsePoly(nv);
    s[i][i + 1] = SparsePoly::constant(nv, -1);
    s[i + 1][i] = SparsePoly::constant(nv, 1);
    PolyMatrix x = poly_identity(n, nv);
    x[i][i + 1] = SparsePoly::variable(nv, k);
    g = mul(mul(g, s), x);
  }
  g = mul(mul(g, lift(t, nv)), lift(u2, nv));
  // value lambda(t)^{-1} on u+ t u-: leading minors of the w0-conjugate, weight -w0 lambda
  std::vector<long long> dual(n);
  for (int i = 0; i < n; ++i) dual[i] = -lambda[n - 1 - i];
  for (int k = 0; k + 1 < n; ++k)
    if (lambda[k] < lambda[k + 1]) throw std::invalid_argument("weight is not dominant for GL(n)");
  SparsePoly f = leading_minor_product(reverse_conjugate(g), dual);
  std::vector<int> vars(L);
  std::iota(vars.begin(), vars.end(), 0);
  return order_at_zero(f, vars);
}

int gl_cell_order(int n, const std::vector<long long>& lambda, const Word& w) {
  std::mt19937_64 rng(0x5eed);
  return gl_cell_order(n, lambda, w, rng);
}

IntMatrix gsp_form(int n) {
  IntMatrix o(2 * n, std::vector<long long>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    o[i][2 * n - 1 - i] = -1;      // -J in the upper right
    o[n + i][n - 1 - i] = 1;       // J in the lower left
  }
  return o;
}

SparsePoly gsp_hasse(int n) {
  const int N = 2 * n, nv = N * N;
  PolyMatrix x(n, std::vector<SparsePoly>(n, SparsePoly(nv)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x[i][j] = SparsePoly::variable(nv, i * N + j);
  return det(x);
}

long long gsp_multiplier(const IntMatrix& X, long long p) {
  const int N = static_cast<int>(X.size());
  if (N % 2) return 0;
  IntMatrix o = gsp_form(N / 2);
  IntMatrix lhs = mul(mul(transpose(X), o, p), X, p);
  // read the factor off the (1, N) slot where the form has -1
  long long c = mod(-lhs[0][N - 1], p);
  if (c == 0) return 0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (mod(lhs[i][j] - c * o[i][j], p) != 0) return 0;
  return c;
}

namespace {

IntMatrix upper_left(const IntMatrix& X, int n) {
  IntMatrix a(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = X[i][j];
  return a;
}

void require_gsp(int n, long long p, const IntMatrix& X) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (static_cast<int>(X.size()) != 2 * n) throw std::invalid_argument("matrix must be 2n x 2n");
  if (gsp_multiplier(X, p) == 0)
    throw std::invalid_argument("matrix is not a symplectic similitude mod p");
}

}  // namespace

int gsp_point_order(int n, long long p, const IntMatrix& X) {
  require_gsp(n, p, X);
  return n - static_cast<int>(rank_mod_p(upper_left(X, n), p));
}

int gsp_point_order_poly(int n, long long p, const IntMatrix& X) {
  require_gsp(n, p, X);
  const int nv = n * n;
  PolyMatrix a(n, std::vector<SparsePoly>(n, SparsePoly(nv, p)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[i][j] = SparsePoly::constant(nv, X[i][j], p) + SparsePoly::variable(nv, i * n + j, p);
  std::vector<int> vars(nv);
  std::iota(vars.begin(), vars.end(), 0);
  return order_at_zero(det(a), vars);
}

IntMatrix gsp_witness(int n, int i) {
  if (i < 0 || i > n) throw std::out_of_range("witness index");
  IntMatrix X(2 * n, std::vector<long long>(2 * n, 0));
  for (int k = 0; k < i; ++k) X[k][k] = 1;
  for (int k = 0; k < n; ++k) {
    X[k][2 * n - 1 - k] = -1;
    X[n + k][n - 1 - k] = 1;
  }
  return X;
}

IntMatrix gsp_psi(int n, const std::vector<long long>& a) {
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("psi needs n parameters");
  // blocks [[a_i, -1], [1, 0]] placed as diag(a), diag(b)J, diag(c reversed)J, diag(d reversed)
  IntMatrix X(2 * n, std::vector<long long>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    X[i][i] = a[i];
    X[i][2 * n - 1 - i] = -1;
    X[n + i][n - 1 - i] = 1;
  }
  return X;
}

SparsePoly gsp_psi_hasse(int n, const std::vector<long long>& a0) {
  PolyMatrix a(n, std::vector<SparsePoly>(n, SparsePoly(n)));
  IntMatrix X = gsp_psi(n, a0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a[i][j] = SparsePoly::constant(n, X[i][j]);
      if (i == j) a[i][j] = a[i][j] + SparsePoly::variable(n, i);
    }
  return det(a);
}

namespace {

IntMatrix random_invertible(int n, long long p, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(0, p - 1);
  for (;;) {
    IntMatrix a(n, std::vector<long long>(n));
    for (auto& r : a)
      for (auto& x : r) x = d(rng);
    if (rank_mod_p(a, p) == n) return a;
  }
}

IntMatrix reversal(int n) {
  IntMatrix j(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) j[i][n - 1 - i] = 1;
  return j;
}

IntMatrix random_symmetric(int n, long long p, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(0, p - 1);
  IntMatrix s(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) s[i][j] = s[j][i] = d(rng);
  return s;
}

IntMatrix blocks(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const IntMatrix& d) {
  const size_t n = a.size();
  IntMatrix X(2 * n, std::vector<long long>(2 * n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      X[i][j] = a[i][j];
      X[i][n + j] = b[i][j];
      X[n + i][j] = c[i][j];
      X[n + i][n + j] = d[i][j];
    }
  return X;
}

IntMatrix random_levi(int n, long long p, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(1, p - 1);
  IntMatrix a = random_invertible(n, p, rng);
  IntMatrix J = reversal(n);
  long long c = d(rng);
  IntMatrix dd = mul(mul(J, transpose(inverse_mod_p(a, p)), p), J, p);
  for (auto& r : dd)
    for (auto& x : r) x = mod(c * x, p);
  IntMatrix z(n, std::vector<long long>(n, 0));
  return blocks(a, z, z, dd);
}

}  // namespace

IntMatrix gsp_random_p(int n, long long p, std::mt19937_64& rng) {
  IntMatrix J = reversal(n), z(n, std::vector<long long>(n, 0)), I = identity_matrix(n);
  IntMatrix u = blocks(I, z, mul(J, random_symmetric(n, p, rng), p), I);
  return mul(random_levi(n, p, rng), u, p);
}

IntMatrix gsp_random_q(int n, long long p, std::mt19937_64& rng) {
  IntMatrix J = reversal(n), z(n, std::vector<long long>(n, 0)), I = identity_matrix(n);
  IntMatrix u = blocks(I, mul(J, random_symmetric(n, p, rng), p), z, I);
  return mul(random_levi(n, p, rng), u, p);
}

IntMatrix gsp_lift(int n, const Perm& w) {
  const int N = 2 * n;
  if (static_cast<int>(w.size()) != N) throw std::invalid_argument("lift needs a permutation of 2n");
  IntMatrix o = gsp_form(n);
  std::vector<long long> eps(N, 1);
  for (int i = 1; i <= n; ++i) {
    const int bar = N + 1 - i;
    if (w[i - 1] + w[bar - 1] != N + 1) throw std::invalid_argument("not a signed permutation");
    eps[bar - 1] = o[i - 1][bar - 1] * o[w[i - 1] - 1][w[bar - 1] - 1];
  }
  IntMatrix X(N, std::vector<long long>(N, 0));
  for (int i = 1; i <= N; ++i) X[w[i - 1] - 1][i - 1] = eps[i - 1];
  return X;
}

int gl_plucker_order(int n, const Perm& sigma) {
  if (static_cast<int>(sigma.size()) != n || n < 2) throw std::invalid_argument("bad permutation");
  // variables: the lower triangle of b (diagonal included)
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) slots.push_back({i, j});
  const int nv = static_cast<int>(slots.size());
  PolyMatrix b(n, std::vector<SparsePoly>(n, SparsePoly(nv)));
  std::vector<int> off;
  for (int v = 0; v < nv; ++v) {
    b[slots[v].first][slots[v].second] = SparsePoly::variable(nv, v);
    if (slots[v].first != slots[v].second) off.push_back(v);
  }
  // columns b e_{sigma(n)}, ..., b e_{sigma(2)}, rows e_1..e_{n-1}
  std::vector<int> rows, cols;
  for (int i = 0; i + 1 < n; ++i) rows.push_back(i);
  for (int k = n; k >= 2; --k) cols.push_back(sigma[k - 1] - 1);
  SparsePoly x = minor(b, rows, cols);
  if (x.is_zero()) return 2;
  // the diagonal entries are units on the cell, so only off-diagonal degree counts
  return 2 * order_at_zero(x, off);
}

int gl_plucker_order_by_test(int n, const Perm& sigma) {
  if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("bad permutation");
  return sigma[0] != n ? 2 : 0;
}

}  // namespace ogus
