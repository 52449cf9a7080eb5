#pragma once

#include "ogus/rootsys.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ogus {

// permutation of {1..N}: perm[i-1] = w(i)
using Perm = std::vector<int>;
// simple-reflection indices, 1-based, read left to right as a product
using Word = std::vector<int>;
// set of simple-root indices
using Subset = std::vector<int>;

std::string word_string(const Word& w);
Word parse_word(const std::string& s);

Perm compose(const Perm& a, const Perm& b);  // (a b)(x) = a(b(x))
Perm inverse(const Perm& a);
Perm identity_perm(int n);

class WeylGroup {
 public:
  explicit WeylGroup(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  int degree() const { return n_; }
  Perm identity() const { return identity_perm(n_); }
  const Perm& generator(int i) const;
  Perm from_word(const Word& w) const;

  // membership in the image of W inside S_N
  bool contains(const Perm& w) const;

  Root act(const Perm& w, const Root& r) const;
  Weight act(const Perm& w, const Weight& v) const;

  int length(const Perm& w) const;
  bool left_descent(const Perm& w, int i) const;   // l(s_i w) < l(w)
  bool right_descent(const Perm& w, int i) const;  // l(w s_i) < l(w)
  Word reduced_word(const Perm& w) const;           // smallest left descent first
  bool is_reduced(const Word& w) const;

  Perm longest() const;
  Perm longest_in(const Subset& I) const;

  std::vector<Perm> elements(std::size_t cap = 5'000'000) const;
  std::vector<Perm> parabolic_elements(const Subset& I, std::size_t cap = 5'000'000) const;
  std::size_t order() const;

  // sorted by length, then reduced word
  std::vector<Perm> min_coset_reps(const Subset& I) const;
  std::vector<Perm> min_double_coset_reps(const Subset& I, const Subset& J) const;
  Perm min_coset_rep(const Subset& I, Perm w) const;
  Perm min_double_coset_rep(const Subset& I, const Subset& J, Perm w) const;

  // subword criterion on the fixed reduced word of w
  bool bruhat_leq(const Perm& u, const Perm& w) const;

  Subset full_subset() const;
  Subset opposition(const Subset& I) const;  // -w0 I

  void sort_canonical(std::vector<Perm>& v) const;

 private:
  void check(const Perm& w) const;
  bool negative_image(const Perm& w, const Root& r) const;

  RootSystem rs_;
  int n_ = 0;
  std::vector<Perm> gens_;
};

struct CocharacterDatum {
  Weight mu;  // cocharacter in e-coordinates of the root system
  Subset I;   // type of P
  Subset J;   // type of Q
  Perm z;     // w0 * w0J
};

// I = simple roots orthogonal to mu, J = -w0 I, z = w0 w_{0,J}
CocharacterDatum make_datum(const WeylGroup& W, const Weight& mu);
CocharacterDatum make_datum(const WeylGroup& W, const Weight& mu, const Subset& I,
                            const Subset& J);
Perm element_z(const WeylGroup& W, const Subset& J);

// literal orbit search over W_I: exists y with y w' z y^{-1} z = w (Frobenius trivial)
bool eo_same_stratum(const WeylGroup& W, const Perm& w, const Perm& w2,
                     const CocharacterDatum& d);

// cell B+ w B  ->  EO representative; the one place where strata get relabeled
Perm eo_label_of_cell(const WeylGroup& W, const Perm& w, const CocharacterDatum& d);

}  // namespace ogus
