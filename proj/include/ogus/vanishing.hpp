#pragma once

#include "ogus/rootsys.hpp"
#include "ogus/weyl.hpp"

#include <map>
#include <optional>

namespace ogus {

struct UnsupportedWord : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// R^w = {a1, s_a1(a2), s_a1 s_a2(a3), ...}
std::vector<Root> word_roots(const RootSystem& rs, const Word& w);
// R^{+,w} = R+ minus R^w
std::vector<Root> complement_roots(const RootSystem& rs, const Word& w);
bool word_is_reduced(const RootSystem& rs, const Word& w);

struct ClosureWitness {
  bool closed = true;
  int j = 0;  // 1-based start of the offending suffix (condition_closed only)
  Root alpha, beta, sum;
  int a = 0, b = 0;
};

ClosureWitness closure_witness(const RootSystem& rs, const std::vector<Root>& subset);
bool is_closed(const RootSystem& rs, const std::vector<Root>& subset);
// every suffix set R^{+, s_j ... s_n}, j > 1, is closed
ClosureWitness condition_closed(const RootSystem& rs, const Word& w);

// B_m: s_j ... s_m s_{m-1} ... s_{m-l};  D_m: s_j ... s_{m-1} s_m s_{m-2} ... s_{m-l}
struct FamilyWord {
  int j = 0, l = 0;
  Word word;
};
std::vector<FamilyWord> closedness_family(CartanType t, int m);

struct NonClosedHit {
  Word word;
  ClosureWitness witness;
};
// exhaustive over all words (reduced or not) up to max_len; empty if every word passes
std::optional<NonClosedHit> scan_nonclosed(const RootSystem& rs, int max_len);

struct FormulaOptions {
  int order_cap = 2;  // the min{2, ...} in the recursions; altered only by mutation runs
};

long long ord_distinct(const RootSystem& rs, const Weight& lambda, const Word& w,
                       const FormulaOptions& opt = {});
long long ord_aba(const RootSystem& rs, const Weight& lambda, int a, int b,
                  const FormulaOptions& opt = {});
std::vector<long long> e_orders(const RootSystem& rs, const Word& betas, const Word& alphas,
                                int gamma, const FormulaOptions& opt = {});
std::vector<long long> f_orders(const RootSystem& rs, const Word& etas, const Word& alphas,
                                int beta, int gamma, const FormulaOptions& opt = {});
// word = betas + reverse(alphas) + [gamma] + alphas
long long ord_typeB(const RootSystem& rs, const Weight& lambda, const Word& betas,
                    const Word& alphas, int gamma, const FormulaOptions& opt = {});
// word = etas + reverse(alphas) + [beta, gamma] + alphas
long long ord_typeD(const RootSystem& rs, const Weight& lambda, const Word& etas,
                    const Word& alphas, int beta, int gamma, const FormulaOptions& opt = {});

struct WordShape {
  enum Kind { Empty, Distinct, ABA, TypeB, TypeD } kind = Empty;
  Word head;    // betas or etas
  Word alphas;  // listed in the order they appear after the middle
  int beta = 0, gamma = 0;  // ABA: (a, b) stored as (gamma=b, alphas={a})
};
const char* shape_name(WordShape::Kind k);
// shape of a word with respect to the three formulas; throws UnsupportedWord otherwise
WordShape classify_word(const Word& w);
long long ord_word(const RootSystem& rs, const Weight& lambda, const Word& w,
                   const FormulaOptions& opt = {});

// lambda - p * z w0^{-1} lambda; sigma must be trivial
Weight d_w0(const WeylGroup& W, const Weight& lambda, long long p, const CocharacterDatum& d,
            bool sigma_trivial = true);

// cell orders composed over IW, keyed by the EO representative of each cell
std::map<Perm, long long> strata_ord_table(const WeylGroup& W, const CocharacterDatum& d,
                                           const Weight& lambda,
                                           const FormulaOptions& opt = {});

}  // namespace ogus
