#include "ogus/reps.hpp"

#include <functional>

namespace ogus {

namespace {

constexpr long long kWedgeGuard = 10'000'000;

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long double r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<long long>(r + 0.5L);
}

}  // namespace

long long dimension(const WeightMultiset& V) {
  long long d = 0;
  for (const auto& [w, m] : V) d += m;
  return d;
}

WeightMultiset std_weights(const RootSystem& rs) {
  WeightMultiset V;
  const int n = rs.ambient_dim();
  for (int i = 1; i <= n; ++i) {
    V[unit_weight(n, i)] += 1;
    if (rs.type() != CartanType::A) V[unit_weight(n, i, -1)] += 1;
  }
  if (rs.type() == CartanType::B) V[Weight(n, Q(0))] += 1;
  return V;
}

WeightMultiset spin_weights(CartanType t, int m, int parity) {
  if (t != CartanType::B && t != CartanType::D)
    throw std::invalid_argument("spin weights only for types B and D");
  if (m < 1 || m > 20) throw std::invalid_argument("spin rank out of range");
  WeightMultiset V;
  for (long long mask = 0; mask < (1LL << m); ++mask) {
    int minus = __builtin_popcountll(mask);
    if (t == CartanType::D && minus % 2 != parity) continue;
    Weight w(m);
    for (int i = 0; i < m; ++i) w[i] = (mask >> i & 1) ? Q(-1, 2) : Q(1, 2);
    V[w] += 1;
  }
  return V;
}

WeightMultiset wedge(const WeightMultiset& V, int k) {
  std::vector<Weight> basis;
  for (const auto& [w, m] : V)
    for (long long j = 0; j < m; ++j) basis.push_back(w);
  const long long n = static_cast<long long>(basis.size());
  if (k < 0 || k > n) return {};
  if (binom(n, k) > kWedgeGuard) throw Unsupported("exterior power too large");
  WeightMultiset out;
  if (k == 0) {
    Weight zero(basis.empty() ? 0 : basis[0].size(), Q(0));
    out[zero] = 1;
    return out;
  }
  std::function<void(int, int, Weight)> rec = [&](int start, int depth, Weight acc) {
    if (depth == k) {
      out[acc] += 1;
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) rec(i + 1, depth + 1, add(acc, basis[i]));
  };
  rec(0, 0, Weight(basis[0].size(), Q(0)));
  return out;
}

WeightMultiset dual(const WeightMultiset& V) {
  WeightMultiset out;
  for (const auto& [w, m] : V) out[scale(w, -1)] += m;
  return out;
}

WeightMultiset dsum(const WeightMultiset& V, const WeightMultiset& W) {
  WeightMultiset out(V);
  for (const auto& [w, m] : W) {
    if (!out.empty() && out.begin()->first.size() != w.size())
      throw std::invalid_argument("direct sum of weights of different dimensions");
    out[w] += m;
  }
  return out;
}

WeightMultiset with_central(const WeightMultiset& V, Q c) {
  WeightMultiset out;
  for (const auto& [w, m] : V) {
    Weight x(w);
    x.push_back(c);
    out[x] += m;
  }
  return out;
}

MuProfile mu_profile(const WeightMultiset& V, const Weight& mu) {
  MuProfile p;
  for (const auto& [w, m] : V) {
    Q q = dot(w, mu);
    if (q.denominator() != 1)
      throw std::invalid_argument("non-integral mu-weight " + weight_string(w));
    p[q.numerator()] += m;
  }
  return p;
}

bool is_cy(const WeightMultiset& V, const Weight& mu) {
  auto p = mu_profile(V, mu);
  return !p.empty() && p.rbegin()->second == 1;
}

Weight hasse_character(const WeightMultiset& V, const Weight& mu) {
  auto p = mu_profile(V, mu);
  if (p.empty()) throw std::invalid_argument("empty representation");
  const long long lo = p.begin()->first;
  Weight eta(V.begin()->first.size(), Q(0));
  for (const auto& [w, m] : V)
    if (dot(w, mu) == lo) eta = add(eta, scale(w, Q(m)));
  return eta;
}

Weight hodge_character(const WeightMultiset& V, const Weight& mu) {
  if (mu_profile(V, mu).size() != 2)
    throw std::invalid_argument("Hodge character needs exactly two mu-weights");
  return hasse_character(V, mu);
}

Weight truncate(const Weight& w, int dim) {
  if (static_cast<int>(w.size()) < dim) throw std::invalid_argument("weight too short");
  return Weight(w.begin(), w.begin() + dim);
}

bool is_weyl_stable(const WeylGroup& W, const WeightMultiset& V) {
  const int dim = W.root_system().ambient_dim();
  for (int i = 1; i <= W.rank(); ++i) {
    WeightMultiset img;
    for (const auto& [w, m] : V) {
      Weight head = W.act(W.generator(i), truncate(w, dim));
      head.insert(head.end(), w.begin() + dim, w.end());
      img[head] += m;
    }
    if (img != V) return false;
  }
  return true;
}

}  // namespace ogus
