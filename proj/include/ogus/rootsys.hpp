#pragma once

#include <boost/rational.hpp>

// Boost 1.74's `scalar == rational` template recurses forever under C++20's reversed
// comparison candidates; exact non-template overloads take precedence
namespace boost {
inline bool operator==(long long b, const rational<long long>& a) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(int b, const rational<long long>& a) {
  return a.denominator() == 1 && a.numerator() == b;
}
}  // namespace boost

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ogus {

using Q = boost::rational<long long>;
// exact weight in e-coordinates, denominators 1 or 2
using Weight = std::vector<Q>;
// roots of classical systems are integral in e-coordinates
using Root = std::vector<int>;

enum class CartanType { A, B, C, D };

char type_letter(CartanType t);
CartanType parse_type(const std::string& s);

struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotARoot : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Weight make_weight(const std::vector<Q>& coords);
Weight int_weight(const std::vector<long long>& coords);
Weight to_weight(const Root& r);
Weight unit_weight(int dim, int i, Q c = 1);  // c*e_i, i is 1-based
Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);
Weight scale(const Weight& a, Q c);
bool is_zero(const Weight& a);
Q dot(const Weight& a, const Weight& b);
std::string weight_string(const Weight& w);
std::string root_string(const Root& r);

class RootSystem {
 public:
  static RootSystem build(CartanType t, int rank);

  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return dim_; }
  std::string name() const;

  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const std::vector<Root>& simple_roots() const { return simple_; }
  const Root& simple(int i) const;  // 1-based

  bool is_root(const Root& r) const { return root_set_.count(r) > 0; }
  bool is_positive(const Root& r) const;
  // coefficients in the simple roots; throws for non-roots
  std::vector<long long> simple_coefficients(const Root& r) const;
  int height(const Root& r) const;

  // <lambda, alpha^vee>; alpha must be a root, result must be integral
  long long pairing(const Weight& lambda, const Root& alpha) const;
  long long pairing(const Root& beta, const Root& alpha) const;
  Q pairing_q(const Weight& lambda, const Root& alpha) const;
  Weight reflect(const Weight& lambda, const Root& alpha) const;
  Root reflect(const Root& beta, const Root& alpha) const;

  int cartan(int i, int j) const;  // <alpha_i, alpha_j^vee>
  bool is_dominant(const Weight& lambda) const;
  // pairings with the simple coroots
  std::vector<long long> dynkin_labels(const Weight& lambda) const;
  std::vector<Weight> fundamental_weights() const;
  Weight from_fundamental(const std::vector<long long>& coeffs) const;

 private:
  CartanType type_ = CartanType::A;
  int rank_ = 0;
  int dim_ = 0;
  std::vector<Root> roots_, positive_, simple_;
  std::set<Root> root_set_, positive_set_;
};

}  // namespace ogus
