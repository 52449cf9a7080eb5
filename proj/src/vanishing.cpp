#include "ogus/vanishing.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

namespace ogus {

namespace {

// roots of classical systems have coordinates in [-2, 2]; pack them base 5
long long encode(const Root& r) {
  long long k = 0;
  for (int c : r) {
    if (c < -2 || c > 2) return -1;
    k = k * 5 + (c + 2);
  }
  return k;
}

bool distinct_letters(const Word& w) {
  std::set<int> s(w.begin(), w.end());
  return s.size() == w.size();
}

void require_letters(const RootSystem& rs, const Word& w) {
  for (int i : w)
    if (i < 1 || i > rs.rank())
      throw std::invalid_argument("letter s" + std::to_string(i) + " outside " + rs.name());
}

void require_dominant(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("weight " + weight_string(lambda) + " is not dominant");
}

void require_hypotheses(const RootSystem& rs, const Word& w) {
  if (!word_is_reduced(rs, w)) throw UnsupportedWord("word " + word_string(w) + " is not reduced");
  auto c = condition_closed(rs, w);
  if (!c.closed)
    throw UnsupportedWord("word " + word_string(w) + " fails the closedness condition at j=" +
                          std::to_string(c.j));
}

long long coroot_pair(const RootSystem& rs, int i, int j) {
  return rs.pairing(rs.simple(i), rs.simple(j));
}

}  // namespace

std::vector<Root> word_roots(const RootSystem& rs, const Word& w) {
  require_letters(rs, w);
  std::vector<Root> out;
  out.reserve(w.size());
  for (size_t t = 0; t < w.size(); ++t) {
    Root r = rs.simple(w[t]);
    for (size_t k = t; k-- > 0;) r = rs.reflect(r, rs.simple(w[k]));
    out.push_back(r);
  }
  return out;
}

std::vector<Root> complement_roots(const RootSystem& rs, const Word& w) {
  auto rw = word_roots(rs, w);
  std::set<Root> drop(rw.begin(), rw.end());
  std::vector<Root> out;
  for (const auto& a : rs.positive_roots())
    if (!drop.count(a)) out.push_back(a);
  return out;
}

bool word_is_reduced(const RootSystem& rs, const Word& w) {
  auto rw = word_roots(rs, w);
  std::set<Root> seen;
  for (const auto& r : rw) {
    if (!rs.is_positive(r) || !seen.insert(r).second) return false;
  }
  return true;
}

ClosureWitness closure_witness(const RootSystem& rs, const std::vector<Root>& subset) {
  std::unordered_set<long long> in, roots;
  for (const auto& r : subset) {
    if (!rs.is_root(r)) throw NotARoot("not a root: " + root_string(r));
    in.insert(encode(r));
  }
  for (const auto& r : rs.roots()) roots.insert(encode(r));
  Root s(rs.ambient_dim());
  for (const auto& x : subset)
    for (const auto& y : subset)
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
          for (size_t i = 0; i < s.size(); ++i) s[i] = a * x[i] + b * y[i];
          long long k = encode(s);
          if (k < 0 || !roots.count(k) || in.count(k)) continue;
          ClosureWitness w;
          w.closed = false;
          w.alpha = x;
          w.beta = y;
          w.sum = s;
          w.a = a;
          w.b = b;
          return w;
        }
  return {};
}

bool is_closed(const RootSystem& rs, const std::vector<Root>& subset) {
  return closure_witness(rs, subset).closed;
}

ClosureWitness condition_closed(const RootSystem& rs, const Word& w) {
  for (size_t j = 2; j <= w.size(); ++j) {
    Word suffix(w.begin() + static_cast<long>(j - 1), w.end());
    auto c = closure_witness(rs, complement_roots(rs, suffix));
    if (!c.closed) {
      c.j = static_cast<int>(j);
      return c;
    }
  }
  return {};
}

long long ord_distinct(const RootSystem& rs, const Weight& lambda, const Word& w,
                       const FormulaOptions&) {
  require_letters(rs, w);
  if (!distinct_letters(w)) throw UnsupportedWord("repeated letter in " + word_string(w));
  require_dominant(rs, lambda);
  require_hypotheses(rs, w);
  long long s = 0;
  for (int i : w) s += rs.pairing(lambda, rs.simple(i));
  return s;
}

long long ord_aba(const RootSystem& rs, const Weight& lambda, int a, int b,
                  const FormulaOptions& opt) {
  require_letters(rs, {a, b});
  if (a == b) throw UnsupportedWord("aba shape needs two different letters");
  require_dominant(rs, lambda);
  require_hypotheses(rs, {a, b, a});
  long long e = std::min<long long>(opt.order_cap, -coroot_pair(rs, a, b));
  return rs.pairing(lambda, rs.simple(b)) + rs.pairing(lambda, rs.simple(a)) * e;
}

std::vector<long long> e_orders(const RootSystem& rs, const Word& betas, const Word& alphas,
                                int gamma, const FormulaOptions& opt) {
  Word all(betas);
  all.insert(all.end(), alphas.begin(), alphas.end());
  all.push_back(gamma);
  require_letters(rs, all);
  if (!distinct_letters(all)) throw UnsupportedWord("letters must be pairwise distinct");
  std::vector<long long> ord;
  for (size_t i = 0; i < alphas.size(); ++i) {
    long long v = -coroot_pair(rs, alphas[i], gamma);
    for (size_t j = 0; j < i; ++j) v -= coroot_pair(rs, alphas[i], alphas[j]) * ord[j];
    ord.push_back(std::min<long long>(opt.order_cap, v));
  }
  return ord;
}

std::vector<long long> f_orders(const RootSystem& rs, const Word& etas, const Word& alphas,
                                int beta, int gamma, const FormulaOptions& opt) {
  Word all(etas);
  all.insert(all.end(), alphas.begin(), alphas.end());
  all.push_back(beta);
  all.push_back(gamma);
  require_letters(rs, all);
  if (!distinct_letters(all)) throw UnsupportedWord("letters must be pairwise distinct");
  std::vector<long long> ord;
  for (size_t i = 0; i < alphas.size(); ++i) {
    long long v = -coroot_pair(rs, alphas[i], beta) - coroot_pair(rs, alphas[i], gamma);
    for (size_t j = 0; j < i; ++j) v -= coroot_pair(rs, alphas[i], alphas[j]) * ord[j];
    ord.push_back(std::min<long long>(opt.order_cap, v));
  }
  return ord;
}

long long ord_typeB(const RootSystem& rs, const Weight& lambda, const Word& betas,
                    const Word& alphas, int gamma, const FormulaOptions& opt) {
  auto e = e_orders(rs, betas, alphas, gamma, opt);
  require_dominant(rs, lambda);
  Word w(betas);
  w.insert(w.end(), alphas.rbegin(), alphas.rend());
  w.push_back(gamma);
  w.insert(w.end(), alphas.begin(), alphas.end());
  require_hypotheses(rs, w);
  long long s = rs.pairing(lambda, rs.simple(gamma));
  for (int b : betas) s += rs.pairing(lambda, rs.simple(b));
  for (size_t i = 0; i < alphas.size(); ++i) s += rs.pairing(lambda, rs.simple(alphas[i])) * e[i];
  return s;
}

long long ord_typeD(const RootSystem& rs, const Weight& lambda, const Word& etas,
                    const Word& alphas, int beta, int gamma, const FormulaOptions& opt) {
  auto f = f_orders(rs, etas, alphas, beta, gamma, opt);
  require_dominant(rs, lambda);
  Word w(etas);
  w.insert(w.end(), alphas.rbegin(), alphas.rend());
  w.push_back(beta);
  w.push_back(gamma);
  w.insert(w.end(), alphas.begin(), alphas.end());
  require_hypotheses(rs, w);
  long long s = rs.pairing(lambda, rs.simple(beta)) + rs.pairing(lambda, rs.simple(gamma));
  for (int h : etas) s += rs.pairing(lambda, rs.simple(h));
  for (size_t i = 0; i < alphas.size(); ++i) s += rs.pairing(lambda, rs.simple(alphas[i])) * f[i];
  return s;
}

const char* shape_name(WordShape::Kind k) {
  switch (k) {
    case WordShape::Empty: return "empty";
    case WordShape::Distinct: return "distinct";
    case WordShape::ABA: return "aba";
    case WordShape::TypeB: return "typeB";
    case WordShape::TypeD: return "typeD";
  }
  return "?";
}

WordShape classify_word(const Word& w) {
  WordShape sh;
  const int L = static_cast<int>(w.size());
  if (L == 0) return sh;
  if (distinct_letters(w)) {
    sh.kind = WordShape::Distinct;
    sh.head = w;
    return sh;
  }
  if (L == 3 && w[0] == w[2] && w[0] != w[1]) {
    sh.kind = WordShape::ABA;
    sh.alphas = {w[0]};
    sh.gamma = w[1];
    return sh;
  }
  // head + reverse(A) + middle + A, middle of width 1 (B) or 2 (D)
  for (int mid = 1; mid <= 2; ++mid)
    for (int k = 1; 2 * k + mid <= L; ++k) {
      const int h = L - 2 * k - mid;
      Word head(w.begin(), w.begin() + h);
      Word rev(w.begin() + h, w.begin() + h + k);
      Word alphas(w.end() - k, w.end());
      std::reverse(rev.begin(), rev.end());
      if (rev != alphas) continue;
      Word letters(head);
      letters.insert(letters.end(), alphas.begin(), alphas.end());
      for (int t = 0; t < mid; ++t) letters.push_back(w[h + k + t]);
      if (!distinct_letters(letters)) continue;
      sh.kind = mid == 1 ? WordShape::TypeB : WordShape::TypeD;
      sh.head = head;
      sh.alphas = alphas;
      if (mid == 1) {
        sh.gamma = w[h + k];
      } else {
        sh.beta = w[h + k];
        sh.gamma = w[h + k + 1];
      }
      return sh;
    }
  throw UnsupportedWord("word " + word_string(w) + " matches none of the formula shapes");
}

long long ord_word(const RootSystem& rs, const Weight& lambda, const Word& w,
                   const FormulaOptions& opt) {
  WordShape sh = classify_word(w);
  switch (sh.kind) {
    case WordShape::Empty:
      require_dominant(rs, lambda);
      return 0;
    case WordShape::Distinct: return ord_distinct(rs, lambda, w, opt);
    case WordShape::ABA: return ord_aba(rs, lambda, sh.alphas[0], sh.gamma, opt);
    case WordShape::TypeB: return ord_typeB(rs, lambda, sh.head, sh.alphas, sh.gamma, opt);
    case WordShape::TypeD:
      return ord_typeD(rs, lambda, sh.head, sh.alphas, sh.beta, sh.gamma, opt);
  }
  return 0;
}

Weight d_w0(const WeylGroup& W, const Weight& lambda, long long p, const CocharacterDatum& d,
            bool sigma_trivial) {
  if (!sigma_trivial) throw Unsupported("non-trivial Frobenius action on characters");
  Perm zw = compose(d.z, inverse(W.longest()));
  return sub(lambda, scale(W.act(zw, lambda), Q(p)));
}

std::map<Perm, long long> strata_ord_table(const WeylGroup& W, const CocharacterDatum& d,
                                           const Weight& lambda, const FormulaOptions& opt) {
  std::map<Perm, long long> table;
  for (const auto& w : W.min_coset_reps(d.I)) {
    long long o = ord_word(W.root_system(), lambda, W.reduced_word(w), opt);
    Perm label = eo_label_of_cell(W, w, d);
    if (!table.emplace(label, o).second)
      throw std::logic_error("two cells map to the same EO stratum");
  }
  return table;
}

std::vector<FamilyWord> closedness_family(CartanType t, int m) {
  std::vector<FamilyWord> out;
  if (t == CartanType::B) {
    if (m < 2) throw std::invalid_argument("B family needs m >= 2");
    for (int j = 1; j <= m; ++j)
      for (int l = 0; l < m; ++l) {
        FamilyWord f{j, l, {}};
        for (int i = j; i <= m; ++i) f.word.push_back(i);
        for (int i = m - 1; i >= m - l; --i) f.word.push_back(i);
        out.push_back(f);
      }
  } else if (t == CartanType::D) {
    if (m < 3) throw std::invalid_argument("D family needs m >= 3");
    // l = 0 and l = 1 give the same word; keep l >= 1
    for (int j = 1; j <= m - 1; ++j)
      for (int l = 1; l < m; ++l) {
        FamilyWord f{j, l, {}};
        for (int i = j; i <= m; ++i) f.word.push_back(i);
        for (int i = m - 2; i >= m - l; --i) f.word.push_back(i);
        out.push_back(f);
      }
  } else {
    throw std::invalid_argument("closedness families exist for types B and D");
  }
  return out;
}

std::optional<NonClosedHit> scan_nonclosed(const RootSystem& rs, int max_len) {
  const int r = rs.rank();
  Word w;
  std::optional<NonClosedHit> hit;
  std::function<bool()> rec = [&]() {
    if (!w.empty()) {
      ClosureWitness c = condition_closed(rs, w);
      if (!c.closed) {
        hit = NonClosedHit{w, c};
        return true;
      }
    }
    if (static_cast<int>(w.size()) == max_len) return false;
    for (int i = 1; i <= r; ++i) {
      w.push_back(i);
      if (rec()) return true;
      w.pop_back();
    }
    return false;
  };
  rec();
  return hit;
}

}  // namespace ogus
