#include "ogus/cases.hpp"

#include "ogus/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace ogus {

namespace {

struct CaseInfo {
  CaseId id;
  const char* key;
  const char* name;
  int lo, hi;
};

const std::vector<CaseInfo>& infos() {
  static const std::vector<CaseInfo> v = {
      {CaseId::GLn_wedge_dualsum, "gl-unitary", "GLn_wedge_dualsum", 2, 8},
      {CaseId::GSp2n_wedge_dual, "gsp", "GSp2n_wedge_dual", 1, 6},
      {CaseId::SO_odd_std, "so-odd", "SO_odd_std", 2, 10},
      {CaseId::SO_even_std, "so-even", "SO_even_std", 3, 10},
      {CaseId::GL4_wedge2, "gl4-wedge2", "GL4_wedge2", 4, 4},
      {CaseId::Sp2n_std_Cn, "sp-cn", "Sp2n_std_Cn", 2, 8},
      {CaseId::GSpin_spin_odd, "gspin-odd", "GSpin_spin_odd", 2, 10},
      {CaseId::GSpin_spin_even, "gspin-even", "GSpin_spin_even", 3, 10},
  };
  return v;
}

const CaseInfo& info(CaseId id) {
  for (const auto& i : infos())
    if (i.id == id) return i;
  throw std::invalid_argument("unknown case");
}

// Hodge type of a zip with the given mu-weight profile: rk Gr^i = mult of -i
FZipType hodge_type(const MuProfile& p) {
  std::map<long long, long long> t;
  for (const auto& [w, m] : p) t[-w] = m;
  return FZipType::from_profile(t);
}

Weight e1(int dim, Q c = 1) { return unit_weight(dim, 1, c); }

// number of i <= n with u(i) <= n: rank of the upper-left block of u's matrix
long long upper_left_rank(const Perm& u, int n) {
  long long r = 0;
  for (int i = 1; i <= n; ++i)
    if (u[i - 1] <= n) ++r;
  return r;
}

}  // namespace

const std::vector<CaseId>& all_cases() {
  static std::vector<CaseId> v = [] {
    std::vector<CaseId> out;
    for (const auto& i : infos()) out.push_back(i.id);
    return out;
  }();
  return v;
}

std::string case_key(CaseId id) { return info(id).key; }
std::string case_name(CaseId id) { return info(id).name; }
int min_rank(CaseId id) { return info(id).lo; }
int max_rank(CaseId id) { return info(id).hi; }

CaseId parse_case(const std::string& s) {
  for (const auto& i : infos())
    if (s == i.key || s == i.name) return i.id;
  throw std::invalid_argument("unknown case '" + s + "'");
}

namespace {

RootSystem case_root_system(const CaseSpec& s) {
  switch (s.id) {
    case CaseId::GLn_wedge_dualsum: return RootSystem::build(CartanType::A, s.rank - 1);
    case CaseId::GSp2n_wedge_dual:
    case CaseId::Sp2n_std_Cn: return RootSystem::build(CartanType::C, s.rank);
    case CaseId::SO_odd_std:
    case CaseId::GSpin_spin_odd: return RootSystem::build(CartanType::B, s.rank);
    case CaseId::SO_even_std:
    case CaseId::GSpin_spin_even: return RootSystem::build(CartanType::D, s.rank);
    case CaseId::GL4_wedge2: return RootSystem::build(CartanType::A, 3);
  }
  throw std::invalid_argument("unknown case");
}

// representation weights and the cocharacter extended over central coordinates
std::pair<WeightMultiset, Weight> case_rep(const CaseSpec& s, const RootSystem& rs) {
  const int d = rs.ambient_dim();
  switch (s.id) {
    case CaseId::SO_odd_std:
    case CaseId::SO_even_std:
    case CaseId::Sp2n_std_Cn: return {std_weights(rs), e1(d)};
    case CaseId::GSpin_spin_odd:
    case CaseId::GSpin_spin_even: {
      auto V = with_central(spin_weights(rs.type(), s.rank, 0), Q(1, 2));
      Weight mu = e1(d);
      mu.push_back(-1);
      return {V, mu};
    }
    case CaseId::GSp2n_wedge_dual: {
      // Std has weights (e_i; 0) and (-e_i; 1), the central slot being the multiplier
      WeightMultiset std;
      for (int i = 1; i <= d; ++i) {
        Weight a = unit_weight(d, i), b = unit_weight(d, i, -1);
        a.push_back(0);
        b.push_back(1);
        std[a] += 1;
        std[b] += 1;
      }
      Weight mu(d, Q(1));
      mu.push_back(1);
      return {wedge(dual(std), s.rank), mu};
    }
    case CaseId::GLn_wedge_dualsum: {
      const int n = s.rank;
      auto V = dsum(with_central(std_weights(rs), 0), with_central(dual(std_weights(rs)), 1));
      Weight mu(n, Q(1));
      mu[n - 1] = 0;
      mu.push_back(1);
      return {wedge(V, n), mu};
    }
    case CaseId::GL4_wedge2: {
      Weight mu = int_weight({1, 1, 0, 0});
      return {wedge(std_weights(rs), 2), mu};
    }
  }
  throw std::invalid_argument("unknown case");
}

}  // namespace

CaseData case_data(const CaseSpec& spec) {
  if (!is_prime(spec.p)) throw std::invalid_argument("p must be prime");
  CaseSpec s = spec;
  if (s.id == CaseId::GL4_wedge2) s.rank = 4;
  if (s.rank < min_rank(s.id) || s.rank > max_rank(s.id))
    throw std::invalid_argument(case_key(s.id) + " supports ranks " +
                                std::to_string(min_rank(s.id)) + ".." +
                                std::to_string(max_rank(s.id)));
  RootSystem rs = case_root_system(s);
  WeylGroup W(rs);
  const int d = rs.ambient_dim();
  auto [V, mu_ext] = case_rep(s, rs);
  if (!is_cy(V, mu_ext) && s.id != CaseId::GSpin_spin_odd && s.id != CaseId::GSpin_spin_even)
    throw std::logic_error("representation is not of CY type");
  Weight hasse = hasse_character(V, mu_ext);
  Weight lambda = scale(truncate(hasse, d), -1);
  CocharacterDatum datum = make_datum(W, truncate(mu_ext, d));
  bool zip = s.id != CaseId::GSpin_spin_odd && s.id != CaseId::GSpin_spin_even;
  return CaseData{s, std::move(W), std::move(datum), lambda, hasse, zip};
}

StandardFZip case_zip(const CaseData& cd, const Perm& eo) {
  const auto& s = cd.spec;
  // the split model lists the top Hodge weight first, i.e. ascending mu-weights, while mu
  // descends along e_1, e_2, ...; conjugating by w0 reconciles the two orders
  const Perm w0 = cd.weyl.longest();
  const Perm u = compose(compose(w0, eo), w0);
  const auto& rs = cd.weyl.root_system();
  switch (s.id) {
    case CaseId::SO_odd_std:
    case CaseId::SO_even_std:
    case CaseId::Sp2n_std_Cn:
      return build_standard(hodge_type(mu_profile(std_weights(rs), cd.datum.mu)), u);
    case CaseId::GSp2n_wedge_dual: {
      const int n = s.rank;
      FZipType t;
      t.tau = {{-1, n}, {0, n}};
      return wedge(dual(build_standard(t, u)), n);
    }
    case CaseId::GLn_wedge_dualsum: {
      const int n = s.rank;
      FZipType t;
      t.tau = {{-1, n - 1}, {0, 1}};
      StandardFZip std = build_standard(t, u);
      return wedge(dsum(std, twist(dual(std), -1)), n);
    }
    case CaseId::GL4_wedge2: {
      FZipType t;
      t.tau = {{-1, 2}, {0, 2}};
      return wedge(build_standard(t, u), 2);
    }
    default: throw NotCY("spin representation is not of CY type");
  }
}

std::map<Perm, long long> case_ord_table(const CaseData& cd, const FormulaOptions& opt) {
  if (cd.spec.id == CaseId::GSp2n_wedge_dual) {
    // Hasse invariant det(A): order n - rk(A) at the cell point of u w0
    const int n = cd.spec.rank;
    const Perm w0 = cd.weyl.longest();
    std::map<Perm, long long> t;
    for (const auto& u : cd.weyl.min_coset_reps(cd.datum.I))
      t[u] = n - upper_left_rank(compose(u, w0), n);
    return t;
  }
  return strata_ord_table(cd.weyl, cd.datum, cd.lambda, opt);
}

CaseResult run_case(const CaseSpec& spec, const FormulaOptions& opt) {
  CaseData cd = case_data(spec);
  const auto& W = cd.weyl;
  auto table = case_ord_table(cd, opt);
  CaseResult res;
  res.spec = cd.spec;
  res.group = W.root_system().name();
  for (const auto& u : W.min_coset_reps(cd.datum.I)) {
    StratumReport r;
    r.w = u;
    r.word = W.reduced_word(u);
    r.length = static_cast<int>(r.word.size());
    r.bruhat = W.min_double_coset_rep(cd.datum.I, cd.datum.J, u);
    r.bruhat_word = W.reduced_word(r.bruhat);
    r.ord = table.at(u);
    if (cd.has_zip) {
      StandardFZip z = case_zip(cd, u);
      r.clp = clp(z);
      r.ogus_holds = (r.ord == *r.clp);
      r.ineq_holds = (r.ord <= *r.clp);
      r.hasse_nonzero = hasse_nonzero(z);
    }
    res.strata.push_back(std::move(r));
  }
  return res;
}

std::vector<int> a3_d3_letter_map(bool mismatched) {
  // index i-1 holds the A3 letter for the D3 letter s_i
  if (mismatched) return {1, 2, 3};
  return {2, 1, 3};
}

CheckOutcome functoriality_check_A3_D3(long long p, bool mismatched) {
  CaseResult a = run_case({CaseId::GL4_wedge2, 4, p});
  CaseResult d = run_case({CaseId::SO_even_std, 3, p});
  WeylGroup WA(RootSystem::build(CartanType::A, 3));
  auto map = a3_d3_letter_map(mismatched);
  auto translate = [&](const Word& w) {
    Word out;
    for (int i : w) out.push_back(map.at(i - 1));
    return out;
  };
  std::map<Perm, const StratumReport*> by_perm;
  for (const auto& r : a.strata) by_perm[r.w] = &r;
  if (a.strata.size() != d.strata.size())
    return {false, "stratum counts differ: " + std::to_string(a.strata.size()) + " vs " +
                       std::to_string(d.strata.size())};
  std::multiset<long long> ma, md;
  for (const auto& r : d.strata) {
    Perm img = WA.from_word(translate(r.word));
    auto it = by_perm.find(img);
    std::ostringstream os;
    if (it == by_perm.end()) {
      os << "D3 stratum " << word_string(r.word) << " maps to " << word_string(translate(r.word))
         << ", which is not an A3 stratum";
      return {false, os.str()};
    }
    const StratumReport& s = *it->second;
    if (s.ord != r.ord || s.clp != r.clp ||
        WA.from_word(translate(r.bruhat_word)) != s.bruhat) {
      os << "D3 stratum " << word_string(r.word) << ": ord/clp " << r.ord << "/" << *r.clp
         << " vs A3 " << word_string(s.word) << ": " << s.ord << "/" << *s.clp;
      return {false, os.str()};
    }
    md.insert(r.ord);
    ma.insert(s.ord);
  }
  if (ma != md) return {false, "ord multisets differ"};
  return {true, std::to_string(d.strata.size()) + " strata matched"};
}

CheckOutcome siegel_cross_check(int n, long long p, unsigned long long seed) {
  std::ostringstream os;
  CaseResult res = run_case({CaseId::GSp2n_wedge_dual, n, p});
  CaseData cd = case_data({CaseId::GSp2n_wedge_dual, n, p});
  const Perm w0 = cd.weyl.longest();
  std::mt19937_64 rng(seed);

  // one value per Bruhat class, values exactly 0..n
  std::map<Perm, std::set<long long>> per_class;
  std::set<long long> values;
  for (const auto& r : res.strata) {
    per_class[r.bruhat].insert(r.ord);
    values.insert(r.ord);
  }
  std::set<long long> expect;
  for (int i = 0; i <= n; ++i) expect.insert(i);
  if (values != expect) return {false, "formula values are not 0..n"};
  if (per_class.size() != static_cast<size_t>(n + 1))
    return {false, "expected n+1 Bruhat classes"};
  std::set<long long> seen;
  for (const auto& [cls, vals] : per_class) {
    if (vals.size() != 1) return {false, "order not constant on a Bruhat class"};
    if (!seen.insert(*vals.begin()).second) return {false, "two Bruhat classes share an order"};
  }

  // oracle at lifted cell points, moved around by P and Q
  for (const auto& r : res.strata) {
    IntMatrix X = gsp_lift(n, compose(r.w, w0));
    for (int k = 0; k < 3; ++k) {
      IntMatrix Y = mul(mul(gsp_random_p(n, p, rng), X, p), gsp_random_q(n, p, rng), p);
      int o = gsp_point_order(n, p, Y);
      if (o != r.ord) {
        os << "stratum " << word_string(r.word) << ": oracle " << o << " vs formula " << r.ord;
        return {false, os.str()};
      }
      if (n <= 3 && gsp_point_order_poly(n, p, Y) != o) return {false, "polynomial order differs"};
    }
    if (!r.clp || *r.clp != r.ord) {
      os << "stratum " << word_string(r.word) << ": clp differs from ord";
      return {false, os.str()};
    }
  }

  // witnesses X_i
  for (int i = 0; i <= n; ++i) {
    int o = gsp_point_order(n, p, gsp_witness(n, i));
    if (o != n - i) {
      os << "witness X_" << i << " has order " << o;
      return {false, os.str()};
    }
  }

  // points on the SL2^n curve: all of F_p^n when small, else a sample
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  const bool all = total <= 4096;
  std::uniform_int_distribution<long long> dist(0, p - 1);
  for (long long idx = 0; idx < (all ? total : 512); ++idx) {
    std::vector<long long> a(n);
    long long t = idx;
    for (int i = 0; i < n; ++i) {
      a[i] = all ? t % p : dist(rng);
      t /= p;
    }
    int zeros = static_cast<int>(std::count(a.begin(), a.end(), 0LL));
    int o = gsp_point_order(n, p, gsp_psi(n, a));
    SparsePoly h = gsp_psi_hasse(n, a);
    std::vector<int> vars(n);
    for (int i = 0; i < n; ++i) vars[i] = i;
    if (o != zeros || order_at_zero(h, vars) != zeros) {
      os << "curve point with " << zeros << " zero coordinates has order " << o;
      return {false, os.str()};
    }
  }
  os << res.strata.size() << " strata, " << n + 1 << " classes";
  return {true, os.str()};
}

CheckOutcome gl_formula_vs_oracle(int n, int max_entry, const FormulaOptions& opt,
                                  unsigned long long seed) {
  if (n < 2 || n > 5) throw std::invalid_argument("oracle sweep supports 2 <= n <= 5");
  RootSystem rs = RootSystem::build(CartanType::A, n - 1);
  std::vector<Word> words;
  // sequences of distinct letters
  std::function<void(Word&, std::vector<bool>&)> rec = [&](Word& w, std::vector<bool>& used) {
    if (!w.empty()) words.push_back(w);
    for (int i = 1; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      w.push_back(i);
      rec(w, used);
      w.pop_back();
      used[i] = false;
    }
  };
  Word w;
  std::vector<bool> used(n, false);
  rec(w, used);
  for (int a = 1; a < n; ++a)
    for (int b : {a - 1, a + 1})
      if (b >= 1 && b < n) words.push_back({a, b, a});

  std::vector<std::vector<long long>> lambdas;
  std::vector<long long> lam(n);
  std::function<void(int, long long)> gen = [&](int k, long long cap) {
    if (k == n) {
      lambdas.push_back(lam);
      return;
    }
    for (long long v = 0; v <= cap; ++v) {
      lam[k] = v;
      gen(k + 1, v);
    }
  };
  gen(0, max_entry);

  std::mt19937_64 rng(seed);
  long long checked = 0;
  for (const auto& l : lambdas) {
    Weight lw = int_weight(l);
    for (const auto& word : words) {
      long long f = ord_word(rs, lw, word, opt);
      int o = gl_cell_order(n, l, word, rng);
      ++checked;
      if (f != o) {
        std::ostringstream os;
        os << "n=" << n << " lambda=" << weight_string(lw) << " word " << word_string(word)
           << ": formula " << f << ", oracle " << o;
        return {false, os.str()};
      }
    }
  }
  return {true, std::to_string(checked) + " (weight, word) pairs"};
}

}  // namespace ogus
