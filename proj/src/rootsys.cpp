#include "ogus/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ogus {

char type_letter(CartanType t) {
  switch (t) {
    case CartanType::A: return 'A';
    case CartanType::B: return 'B';
    case CartanType::C: return 'C';
    case CartanType::D: return 'D';
  }
  return '?';
}

CartanType parse_type(const std::string& s) {
  if (s == "A" || s == "a") return CartanType::A;
  if (s == "B" || s == "b") return CartanType::B;
  if (s == "C" || s == "c") return CartanType::C;
  if (s == "D" || s == "d") return CartanType::D;
  throw std::invalid_argument("unknown Cartan type '" + s + "'");
}

Weight make_weight(const std::vector<Q>& coords) {
  for (const Q& q : coords)
    if (2 % q.denominator() != 0)
      throw std::invalid_argument("weight coordinate with denominator not dividing 2");
  return coords;
}

Weight int_weight(const std::vector<long long>& coords) {
  Weight w;
  w.reserve(coords.size());
  for (long long c : coords) w.emplace_back(c);
  return w;
}

Weight to_weight(const Root& r) {
  Weight w;
  w.reserve(r.size());
  for (int c : r) w.emplace_back(c);
  return w;
}

Weight unit_weight(int dim, int i, Q c) {
  if (i < 1 || i > dim) throw std::out_of_range("unit_weight index");
  Weight w(dim, Q(0));
  w[i - 1] = c;
  return w;
}

static void same_dim(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight dimension mismatch");
}

Weight add(const Weight& a, const Weight& b) {
  same_dim(a, b);
  Weight r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Weight sub(const Weight& a, const Weight& b) {
  same_dim(a, b);
  Weight r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Weight scale(const Weight& a, Q c) {
  Weight r(a);
  for (auto& x : r) x *= c;
  return r;
}

bool is_zero(const Weight& a) {
  return std::all_of(a.begin(), a.end(), [](const Q& q) { return q == 0; });
}

Q dot(const Weight& a, const Weight& b) {
  same_dim(a, b);
  Q s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string weight_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    if (w[i].denominator() == 1)
      os << w[i].numerator();
    else
      os << w[i].numerator() << '/' << w[i].denominator();
  }
  os << ')';
  return os.str();
}

std::string root_string(const Root& r) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
  os << ')';
  return os.str();
}

RootSystem RootSystem::build(CartanType t, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (t == CartanType::D && rank < 2) throw std::invalid_argument("type D needs rank >= 2");
  if (rank > 64) throw std::invalid_argument("rank too large");

  RootSystem rs;
  rs.type_ = t;
  rs.rank_ = rank;
  const int n = (t == CartanType::A) ? rank + 1 : rank;
  rs.dim_ = n;

  auto vec = [n](int i, int a, int j = -1, int b = 0) {
    Root r(n, 0);
    r[i] += a;
    if (j >= 0) r[j] += b;
    return r;
  };

  std::vector<Root> pos;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pos.push_back(vec(i, 1, j, -1));
      if (t != CartanType::A) pos.push_back(vec(i, 1, j, 1));
    }
  if (t == CartanType::B)
    for (int i = 0; i < n; ++i) pos.push_back(vec(i, 1));
  if (t == CartanType::C)
    for (int i = 0; i < n; ++i) pos.push_back(vec(i, 2));

  for (int i = 0; i + 1 < n; ++i) rs.simple_.push_back(vec(i, 1, i + 1, -1));
  if (t == CartanType::B) rs.simple_.push_back(vec(n - 1, 1));
  if (t == CartanType::C) rs.simple_.push_back(vec(n - 1, 2));
  if (t == CartanType::D) rs.simple_.push_back(vec(n - 2, 1, n - 1, 1));

  rs.positive_ = pos;
  for (const auto& r : pos) {
    rs.roots_.push_back(r);
    Root neg(r);
    for (int& c : neg) c = -c;
    rs.roots_.push_back(neg);
  }
  rs.root_set_ = std::set<Root>(rs.roots_.begin(), rs.roots_.end());
  rs.positive_set_ = std::set<Root>(pos.begin(), pos.end());
  // ascending height; ties keep generation order
  std::stable_sort(rs.positive_.begin(), rs.positive_.end(),
                   [&](const Root& a, const Root& b) { return rs.height(a) < rs.height(b); });
  return rs;
}

std::string RootSystem::name() const {
  return std::string(1, type_letter(type_)) + std::to_string(rank_);
}

const Root& RootSystem::simple(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("simple root index " + std::to_string(i));
  return simple_[i - 1];
}

bool RootSystem::is_positive(const Root& r) const {
  if (!is_root(r)) throw NotARoot("not a root: " + root_string(r));
  return positive_set_.count(r) > 0;
}

std::vector<long long> RootSystem::simple_coefficients(const Root& r) const {
  if (!is_root(r)) throw NotARoot("not a root: " + root_string(r));
  const int m = rank_;
  std::vector<long long> partial(dim_);
  long long s = 0;
  for (int i = 0; i < dim_; ++i) partial[i] = (s += r[i]);
  std::vector<long long> c(m);
  switch (type_) {
    case CartanType::A:
    case CartanType::B:
      for (int k = 0; k < m; ++k) c[k] = partial[k];
      break;
    case CartanType::C:
      for (int k = 0; k + 1 < m; ++k) c[k] = partial[k];
      c[m - 1] = partial[m - 1] / 2;
      break;
    case CartanType::D:
      for (int k = 0; k + 2 < m; ++k) c[k] = partial[k];
      c[m - 1] = partial[m - 1] / 2;
      c[m - 2] = (partial[m - 2] - r[m - 1]) / 2;
      break;
  }
  return c;
}

int RootSystem::height(const Root& r) const {
  auto c = simple_coefficients(r);
  return static_cast<int>(std::accumulate(c.begin(), c.end(), 0LL));
}

Q RootSystem::pairing_q(const Weight& lambda, const Root& alpha) const {
  if (!is_root(alpha)) throw NotARoot("not a root: " + root_string(alpha));
  if (static_cast<int>(lambda.size()) != dim_)
    throw std::invalid_argument("weight has wrong dimension for " + name());
  Weight a = to_weight(alpha);
  return Q(2) * dot(lambda, a) / dot(a, a);
}

long long RootSystem::pairing(const Weight& lambda, const Root& alpha) const {
  Q q = pairing_q(lambda, alpha);
  if (q.denominator() != 1)
    throw std::invalid_argument("non-integral pairing of " + weight_string(lambda) + " with " +
                                root_string(alpha));
  return q.numerator();
}

long long RootSystem::pairing(const Root& beta, const Root& alpha) const {
  return pairing(to_weight(beta), alpha);
}

Weight RootSystem::reflect(const Weight& lambda, const Root& alpha) const {
  Q c = pairing_q(lambda, alpha);
  return sub(lambda, scale(to_weight(alpha), c));
}

Root RootSystem::reflect(const Root& beta, const Root& alpha) const {
  long long c = pairing(to_weight(beta), alpha);
  Root r(beta);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= static_cast<int>(c * alpha[i]);
  return r;
}

int RootSystem::cartan(int i, int j) const {
  return static_cast<int>(pairing(simple(i), simple(j)));
}

std::vector<long long> RootSystem::dynkin_labels(const Weight& lambda) const {
  std::vector<long long> out;
  for (const auto& a : simple_) out.push_back(pairing(lambda, a));
  return out;
}

bool RootSystem::is_dominant(const Weight& lambda) const {
  for (const auto& a : simple_)
    if (pairing_q(lambda, a) < 0) return false;
  return true;
}

std::vector<Weight> RootSystem::fundamental_weights() const {
  std::vector<Weight> out;
  const int m = rank_;
  auto prefix = [&](int k, Q c) {
    Weight w(dim_, Q(0));
    for (int i = 0; i < k; ++i) w[i] = c;
    return w;
  };
  for (int i = 1; i <= m; ++i) {
    if (type_ == CartanType::B && i == m) {
      out.push_back(prefix(m, Q(1, 2)));
    } else if (type_ == CartanType::D && i == m - 1) {
      Weight w = prefix(m, Q(1, 2));
      w[m - 1] = Q(-1, 2);
      out.push_back(w);
    } else if (type_ == CartanType::D && i == m) {
      out.push_back(prefix(m, Q(1, 2)));
    } else {
      out.push_back(prefix(i, 1));
    }
  }
  return out;
}

Weight RootSystem::from_fundamental(const std::vector<long long>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != rank_)
    throw std::invalid_argument("need one coefficient per fundamental weight");
  auto fw = fundamental_weights();
  Weight w(dim_, Q(0));
  for (int i = 0; i < rank_; ++i) w = add(w, scale(fw[i], Q(coeffs[i])));
  return w;
}

}  // namespace ogus
