#pragma once

#include "ogus/weyl.hpp"

#include <map>
#include <random>
#include <vector>

namespace ogus {

// multivariate polynomial over Z, or over F_p when modulus > 0
class SparsePoly {
 public:
  using Monomial = std::vector<int>;

  explicit SparsePoly(int nvars = 0, long long modulus = 0) : nvars_(nvars), mod_(modulus) {}
  static SparsePoly constant(int nvars, long long c, long long modulus = 0);
  static SparsePoly variable(int nvars, int i, long long modulus = 0);  // 0-based

  int nvars() const { return nvars_; }
  long long modulus() const { return mod_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, long long>& terms() const { return terms_; }
  long long coeff(const Monomial& m) const;
  void add_term(const Monomial& m, long long c);
  int total_degree() const;

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly pow(int e) const;
  bool operator==(const SparsePoly& o) const {
    return nvars_ == o.nvars_ && mod_ == o.mod_ && terms_ == o.terms_;
  }

  // images[i] replaces variable i; all images share one ring
  SparsePoly substitute(const std::vector<SparsePoly>& images) const;
  long long evaluate(const std::vector<long long>& x) const;  // exact, or mod p

 private:
  long long norm(long long c) const;
  void check_ring(const SparsePoly& o) const;

  int nvars_;
  long long mod_;
  std::map<Monomial, long long> terms_;
};

// lowest total degree in the given variables over all monomials
int order_at_zero(const SparsePoly& f, const std::vector<int>& vars);

using PolyMatrix = std::vector<std::vector<SparsePoly>>;
using IntMatrix = std::vector<std::vector<long long>>;

PolyMatrix poly_identity(int n, int nvars, long long modulus = 0);
PolyMatrix lift(const IntMatrix& m, int nvars, long long modulus = 0);
PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b);
SparsePoly det(const PolyMatrix& m);
SparsePoly minor(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);
IntMatrix mul(const IntMatrix& a, const IntMatrix& b, long long p = 0);
IntMatrix transpose(const IntMatrix& a);
IntMatrix identity_matrix(int n);
long long rank_mod_p(IntMatrix a, long long p);
IntMatrix inverse_mod_p(const IntMatrix& a, long long p);
bool is_prime(long long p);

// product of leading principal minors Delta_k^{<lambda, alpha_k^vee>} * det^{lambda_n};
// variables are matrix entries x_{ij} at index (i-1)n + (j-1); a negative det power is a
// unit on GL(n) and is left out
SparsePoly gl_flambda(int n, const std::vector<long long>& lambda);

// order at a = 0 of the highest weight section (B+ x B semi-invariant, value lambda(t)^{-1}
// on u+ t u-) along u1 * prod(s_i x_{alpha_i}(a_i)) * t * u2, for random unipotent u1
// (upper), u2 (lower) and a random sign torus t
int gl_cell_order(int n, const std::vector<long long>& lambda, const Word& w,
                  std::mt19937_64& rng);
int gl_cell_order(int n, const std::vector<long long>& lambda, const Word& w);

// Siegel data: form [[0,-J],[J,0]], Hasse function det of the upper-left block
IntMatrix gsp_form(int n);
SparsePoly gsp_hasse(int n);
// similitude factor of X mod p, or 0 if X is not a symplectic similitude
long long gsp_multiplier(const IntMatrix& X, long long p);
int gsp_point_order(int n, long long p, const IntMatrix& X);
// same value by lowest-degree expansion of det(X_A + T) over F_p
int gsp_point_order_poly(int n, long long p, const IntMatrix& X);
IntMatrix gsp_witness(int n, int i);                          // X_i
IntMatrix gsp_psi(int n, const std::vector<long long>& a);  // image of a under the SL2^n curve
SparsePoly gsp_psi_hasse(int n, const std::vector<long long>& a0);  // ha(psi(a0 + t)) in t
IntMatrix gsp_random_p(int n, long long p, std::mt19937_64& rng);  // stabilizer of <v_{n+1..2n}>
IntMatrix gsp_random_q(int n, long long p, std::mt19937_64& rng);  // stabilizer of <v_1..v_n>
IntMatrix gsp_lift(int n, const Perm& w);  // signed permutation matrix in Sp(2n) over Z

// square of the e_1 ^ ... ^ e_{n-1} coordinate on the cell b sigma F, b lower triangular;
// 2 when it vanishes identically on the cell, 0 otherwise
int gl_plucker_order(int n, const Perm& sigma);
int gl_plucker_order_by_test(int n, const Perm& sigma);  // sigma(1) != n

}  // namespace ogus
