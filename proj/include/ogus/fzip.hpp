#pragma once

#include "ogus/weyl.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace ogus {

struct NotCY : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FZipType {
  std::map<int, int> tau;  // weight -> multiplicity, zeros dropped

  static FZipType from_profile(const std::map<long long, long long>& p);
  std::vector<int> support() const;  // ascending
  int r() const { return static_cast<int>(support().size()); }
  int n(int j) const;  // multiplicity of the j-th weight, 1-based
  int m(int j) const;  // cumulative, m(0) = 0
  int total() const;
};

// split model on basis e_1..e_N: each basis vector has a Hodge weight and a conjugate
// weight, and phi carries the Hodge graded pieces onto the conjugate ones
struct StandardFZip {
  std::vector<int> hodge;  // hodge[b-1]
  std::vector<int> conj;   // conj[b-1]
  Perm phi;

  int dim() const { return static_cast<int>(hodge.size()); }
  FZipType type() const;
  std::vector<int> weights() const;  // ascending support
  // fil^j for each support weight j, descending in j
  std::vector<std::vector<int>> hodge_steps() const;
  // fil_j for each support weight j, ascending in j
  std::vector<std::vector<int>> conj_steps() const;
  bool consistent() const;  // conj(phi(b)) == hodge(b)
};

// w_{0,I,J}(i) = i + m_j + m_{j-1} - N on the j-th block from the top
Perm w0IJ_formula(const FZipType& t);
StandardFZip build_standard(const FZipType& t, const Perm& w);

StandardFZip dual(const StandardFZip& z);
StandardFZip twist(const StandardFZip& z, int shift);
StandardFZip dsum(const StandardFZip& a, const StandardFZip& b);
StandardFZip wedge(const StandardFZip& z, int k);

int conjugate_line(const StandardFZip& z);
int clp(const StandardFZip& z);
bool hasse_nonzero(const StandardFZip& z);
// two-weight zips only: clp of the top exterior power of the lower Hodge piece
int clp_exterior_top(const StandardFZip& z);

}  // namespace ogus
