#include "ogus/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace ogus {

std::string word_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += 's' + std::to_string(w[i]);
  }
  return s;
}

Word parse_word(const std::string& s) {
  std::istringstream is(s);
  std::string tok;
  Word w;
  while (is >> tok) {
    if (tok == "e") continue;
    std::string digits = (tok[0] == 's' || tok[0] == 'S') ? tok.substr(1) : tok;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad word token '" + tok + "'");
    w.push_back(std::stoi(digits));
  }
  return w;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation degree mismatch");
  Perm r(a.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i] - 1];
  return r;
}

Perm inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  return p;
}

namespace {

void swap_pair(Perm& p, int a, int b) { std::swap(p[a - 1], p[b - 1]); }

}  // namespace

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
  const int m = rs_.rank();
  switch (rs_.type()) {
    case CartanType::A: n_ = m + 1; break;
    case CartanType::B: n_ = 2 * m + 1; break;
    case CartanType::C:
    case CartanType::D: n_ = 2 * m; break;
  }
  const int N = n_;
  for (int i = 1; i <= m; ++i) {
    Perm p = identity_perm(N);
    if (rs_.type() == CartanType::A) {
      swap_pair(p, i, i + 1);
    } else if (i < m) {
      swap_pair(p, i, i + 1);
      swap_pair(p, N - i, N + 1 - i);
    } else if (rs_.type() == CartanType::B) {
      swap_pair(p, m, m + 2);
    } else if (rs_.type() == CartanType::C) {
      swap_pair(p, m, m + 1);
    } else {
      swap_pair(p, m - 1, m + 1);
      swap_pair(p, m, m + 2);
    }
    gens_.push_back(p);
  }
}

const Perm& WeylGroup::generator(int i) const {
  if (i < 1 || i > rank()) throw std::out_of_range("no simple reflection s" + std::to_string(i));
  return gens_[i - 1];
}

Perm WeylGroup::from_word(const Word& w) const {
  Perm p = identity();
  for (int i : w) p = compose(p, generator(i));
  return p;
}

void WeylGroup::check(const Perm& w) const {
  if (static_cast<int>(w.size()) != n_)
    throw std::invalid_argument("permutation of degree " + std::to_string(w.size()) +
                                " for a group of degree " + std::to_string(n_));
}

bool WeylGroup::contains(const Perm& w) const {
  if (static_cast<int>(w.size()) != n_) return false;
  std::vector<bool> seen(n_ + 1, false);
  for (int x : w) {
    if (x < 1 || x > n_ || seen[x]) return false;
    seen[x] = true;
  }
  if (rs_.type() == CartanType::A) return true;
  for (int i = 1; i <= n_; ++i)
    if (w[i - 1] + w[n_ - i] != n_ + 1) return false;
  if (rs_.type() == CartanType::D) {
    const int m = rs_.rank();
    int flips = 0;
    for (int i = 1; i <= m; ++i)
      if (w[i - 1] > m) ++flips;
    if (flips % 2) return false;
  }
  return true;
}

Root WeylGroup::act(const Perm& w, const Root& r) const {
  check(w);
  const int dim = rs_.ambient_dim();
  if (static_cast<int>(r.size()) != dim) throw std::invalid_argument("root dimension mismatch");
  Root out(dim, 0);
  if (rs_.type() == CartanType::A) {
    for (int i = 0; i < dim; ++i) out[w[i] - 1] += r[i];
    return out;
  }
  for (int i = 1; i <= dim; ++i) {
    int k = w[i - 1];
    if (k <= dim)
      out[k - 1] += r[i - 1];
    else
      out[n_ - k] -= r[i - 1];
  }
  return out;
}

Weight WeylGroup::act(const Perm& w, const Weight& v) const {
  check(w);
  const int dim = rs_.ambient_dim();
  if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("weight dimension mismatch");
  Weight out(dim, Q(0));
  if (rs_.type() == CartanType::A) {
    for (int i = 0; i < dim; ++i) out[w[i] - 1] += v[i];
    return out;
  }
  for (int i = 1; i <= dim; ++i) {
    int k = w[i - 1];
    if (k <= dim)
      out[k - 1] += v[i - 1];
    else
      out[n_ - k] -= v[i - 1];
  }
  return out;
}

bool WeylGroup::negative_image(const Perm& w, const Root& r) const {
  // first nonzero simple coefficient decides the sign; for these bases the
  // sign of the first nonzero e-coordinate agrees with it
  Root x = act(w, r);
  for (int c : x)
    if (c != 0) return c < 0;
  return false;
}

int WeylGroup::length(const Perm& w) const {
  check(w);
  int l = 0;
  for (const auto& a : rs_.positive_roots())
    if (negative_image(w, a)) ++l;
  return l;
}

bool WeylGroup::left_descent(const Perm& w, int i) const {
  return negative_image(inverse(w), rs_.simple(i));
}

bool WeylGroup::right_descent(const Perm& w, int i) const {
  return negative_image(w, rs_.simple(i));
}

Word WeylGroup::reduced_word(const Perm& w0) const {
  check(w0);
  Word out;
  Perm w = w0;
  for (;;) {
    int found = 0;
    for (int i = 1; i <= rank() && !found; ++i)
      if (left_descent(w, i)) found = i;
    if (!found) break;
    out.push_back(found);
    w = compose(generator(found), w);
  }
  return out;
}

bool WeylGroup::is_reduced(const Word& w) const {
  return length(from_word(w)) == static_cast<int>(w.size());
}

Perm WeylGroup::longest_in(const Subset& I) const {
  Perm w = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : I)
      if (!right_descent(w, i)) {
        w = compose(w, generator(i));
        grew = true;
      }
  }
  return w;
}

Perm WeylGroup::longest() const { return longest_in(full_subset()); }

Subset WeylGroup::full_subset() const {
  Subset s;
  for (int i = 1; i <= rank(); ++i) s.push_back(i);
  return s;
}

Subset WeylGroup::opposition(const Subset& I) const {
  Perm w0 = longest();
  Subset out;
  for (int i : I) {
    Root r = act(w0, rs_.simple(i));
    for (int& c : r) c = -c;
    for (int j = 1; j <= rank(); ++j)
      if (rs_.simple(j) == r) out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> WeylGroup::parabolic_elements(const Subset& I, std::size_t cap) const {
  std::set<Perm> seen{identity()};
  std::deque<Perm> q{identity()};
  while (!q.empty()) {
    Perm w = q.front();
    q.pop_front();
    for (int i : I) {
      Perm x = compose(w, generator(i));
      if (seen.insert(x).second) {
        if (seen.size() > cap) throw Unsupported("group enumeration exceeds cap");
        q.push_back(x);
      }
    }
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  sort_canonical(out);
  return out;
}

std::vector<Perm> WeylGroup::elements(std::size_t cap) const {
  return parabolic_elements(full_subset(), cap);
}

std::size_t WeylGroup::order() const {
  const int m = rank();
  std::size_t f = 1;
  for (int k = 2; k <= m; ++k) f *= k;
  switch (rs_.type()) {
    case CartanType::A: return f * (m + 1);
    case CartanType::B:
    case CartanType::C: return f << m;
    case CartanType::D: return f << (m - 1);
  }
  return 0;
}

void WeylGroup::sort_canonical(std::vector<Perm>& v) const {
  std::vector<std::pair<std::pair<int, Word>, Perm>> keyed;
  keyed.reserve(v.size());
  for (auto& p : v) keyed.push_back({{length(p), reduced_word(p)}, p});
  std::sort(keyed.begin(), keyed.end());
  for (size_t i = 0; i < v.size(); ++i) v[i] = keyed[i].second;
}

std::vector<Perm> WeylGroup::min_coset_reps(const Subset& I) const {
  auto no_left_in_I = [&](const Perm& w) {
    for (int i : I)
      if (left_descent(w, i)) return false;
    return true;
  };
  std::set<Perm> seen{identity()};
  std::deque<Perm> q{identity()};
  while (!q.empty()) {
    Perm w = q.front();
    q.pop_front();
    for (int i = 1; i <= rank(); ++i) {
      if (right_descent(w, i)) continue;
      Perm x = compose(w, generator(i));
      if (no_left_in_I(x) && seen.insert(x).second) q.push_back(x);
    }
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  sort_canonical(out);
  return out;
}

std::vector<Perm> WeylGroup::min_double_coset_reps(const Subset& I, const Subset& J) const {
  std::vector<Perm> out;
  for (auto& w : min_coset_reps(I)) {
    bool ok = true;
    for (int j : J) ok = ok && !right_descent(w, j);
    if (ok) out.push_back(w);
  }
  return out;
}

Perm WeylGroup::min_coset_rep(const Subset& I, Perm w) const {
  check(w);
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : I)
      if (left_descent(w, i)) {
        w = compose(generator(i), w);
        moved = true;
      }
  }
  return w;
}

Perm WeylGroup::min_double_coset_rep(const Subset& I, const Subset& J, Perm w) const {
  check(w);
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : I)
      if (left_descent(w, i)) {
        w = compose(generator(i), w);
        moved = true;
      }
    for (int j : J)
      if (right_descent(w, j)) {
        w = compose(w, generator(j));
        moved = true;
      }
  }
  return w;
}

bool WeylGroup::bruhat_leq(const Perm& u, const Perm& w) const {
  check(u);
  check(w);
  const int lu = length(u);
  if (lu > length(w)) return false;
  if (u == w) return true;
  // products of reduced subwords, grouped by their length
  std::set<Perm> reach{identity()};
  for (int s : reduced_word(w)) {
    std::vector<Perm> fresh;
    for (const auto& x : reach) {
      if (right_descent(x, s)) continue;
      Perm y = compose(x, generator(s));
      if (length(y) <= lu) fresh.push_back(std::move(y));
    }
    for (auto& y : fresh) {
      if (y == u) return true;
      reach.insert(std::move(y));
    }
  }
  return reach.count(u) > 0;
}

Perm element_z(const WeylGroup& W, const Subset& J) {
  return compose(W.longest(), W.longest_in(J));
}

CocharacterDatum make_datum(const WeylGroup& W, const Weight& mu, const Subset& I,
                            const Subset& J) {
  CocharacterDatum d;
  d.mu = mu;
  d.I = I;
  d.J = J;
  std::sort(d.I.begin(), d.I.end());
  std::sort(d.J.begin(), d.J.end());
  for (int i : d.I)
    if (i < 1 || i > W.rank()) throw std::invalid_argument("parabolic index out of range");
  for (int j : d.J)
    if (j < 1 || j > W.rank()) throw std::invalid_argument("parabolic index out of range");
  d.z = element_z(W, d.J);
  return d;
}

CocharacterDatum make_datum(const WeylGroup& W, const Weight& mu) {
  const auto& rs = W.root_system();
  Subset I;
  for (int i = 1; i <= rs.rank(); ++i)
    if (dot(mu, to_weight(rs.simple(i))) == 0)
      I.push_back(i);
  return make_datum(W, mu, I, W.opposition(I));
}

bool eo_same_stratum(const WeylGroup& W, const Perm& w, const Perm& w2,
                     const CocharacterDatum& d) {
  if (w == w2) return true;
  const Perm& z = d.z;
  for (const auto& y : W.parabolic_elements(d.I, 200'000)) {
    Perm lhs = compose(compose(compose(compose(y, w2), z), inverse(y)), z);
    if (lhs == w) return true;
  }
  return false;
}

Perm eo_label_of_cell(const WeylGroup& W, const Perm& w, const CocharacterDatum& d) {
  // B+ w B = B+ (w w0) B+ w0, so the P-coset data of the cell sits in w w0
  return W.min_coset_rep(d.I, compose(w, W.longest()));
}

}  // namespace ogus
