#include "ogus/fzip.hpp"

#include <algorithm>
#include <functional>

namespace ogus {

FZipType FZipType::from_profile(const std::map<long long, long long>& p) {
  FZipType t;
  for (const auto& [w, m] : p) {
    if (m < 0) throw std::invalid_argument("negative multiplicity in type");
    if (m > 0) t.tau[static_cast<int>(w)] = static_cast<int>(m);
  }
  return t;
}

std::vector<int> FZipType::support() const {
  std::vector<int> s;
  for (const auto& [w, m] : tau)
    if (m > 0) s.push_back(w);
  return s;
}

int FZipType::n(int j) const {
  auto s = support();
  if (j < 1 || j > static_cast<int>(s.size())) throw std::out_of_range("type index");
  return tau.at(s[j - 1]);
}

int FZipType::m(int j) const {
  int acc = 0;
  for (int k = 1; k <= j; ++k) acc += n(k);
  return acc;
}

int FZipType::total() const { return m(r()); }

FZipType StandardFZip::type() const {
  FZipType t;
  for (int h : hodge) t.tau[h] += 1;
  return t;
}

std::vector<int> StandardFZip::weights() const { return type().support(); }

std::vector<std::vector<int>> StandardFZip::hodge_steps() const {
  std::vector<std::vector<int>> out;
  auto ws = weights();
  for (auto it = ws.rbegin(); it != ws.rend(); ++it) {
    std::vector<int> step;
    for (int b = 1; b <= dim(); ++b)
      if (hodge[b - 1] >= *it) step.push_back(b);
    out.push_back(step);
  }
  return out;
}

std::vector<std::vector<int>> StandardFZip::conj_steps() const {
  std::vector<std::vector<int>> out;
  FZipType ct;
  for (int c : conj) ct.tau[c] += 1;
  for (int j : ct.support()) {
    std::vector<int> step;
    for (int b = 1; b <= dim(); ++b)
      if (conj[b - 1] <= j) step.push_back(b);
    out.push_back(step);
  }
  return out;
}

bool StandardFZip::consistent() const {
  if (conj.size() != hodge.size() || phi.size() != hodge.size()) return false;
  for (int b = 1; b <= dim(); ++b)
    if (conj[phi[b - 1] - 1] != hodge[b - 1]) return false;
  return true;
}

Perm w0IJ_formula(const FZipType& t) {
  const int N = t.total();
  Perm p(N);
  for (int j = 1; j <= t.r(); ++j) {
    const int mj = t.m(j), mj1 = t.m(j - 1);
    for (int i = N - mj + 1; i <= N - mj1; ++i) p[i - 1] = i + mj + mj1 - N;
  }
  return p;
}

StandardFZip build_standard(const FZipType& t, const Perm& w) {
  const int N = t.total();
  if (static_cast<int>(w.size()) != N)
    throw std::invalid_argument("permutation degree " + std::to_string(w.size()) +
                                " does not match type dimension " + std::to_string(N));
  const auto ws = t.support();
  const int r = t.r();
  // Hodge positions run through the blocks from the top weight down; position k
  // sits on basis vector pos(k) = w^{-1}(k)
  const Perm pos = inverse(w);
  const Perm w0 = w0IJ_formula(t);
  StandardFZip z;
  z.hodge.assign(N, 0);
  z.conj.assign(N, 0);
  z.phi.assign(N, 0);
  for (int j = 1; j <= r; ++j) {
    const int mj = t.m(j), mj1 = t.m(j - 1);
    for (int k = N - mj + 1; k <= N - mj1; ++k) z.hodge[pos[k - 1] - 1] = ws[j - 1];
    for (int i = mj1 + 1; i <= mj; ++i) z.conj[i - 1] = ws[j - 1];
  }
  for (int k = 1; k <= N; ++k) z.phi[pos[k - 1] - 1] = w0[k - 1];
  return z;
}

StandardFZip dual(const StandardFZip& z) {
  StandardFZip d(z);
  for (int& h : d.hodge) h = -h;
  for (int& c : d.conj) c = -c;
  return d;
}

StandardFZip twist(const StandardFZip& z, int shift) {
  StandardFZip d(z);
  for (int& h : d.hodge) h += shift;
  for (int& c : d.conj) c += shift;
  return d;
}

StandardFZip dsum(const StandardFZip& a, const StandardFZip& b) {
  StandardFZip s(a);
  const int off = a.dim();
  s.hodge.insert(s.hodge.end(), b.hodge.begin(), b.hodge.end());
  s.conj.insert(s.conj.end(), b.conj.begin(), b.conj.end());
  for (int x : b.phi) s.phi.push_back(x + off);
  return s;
}

StandardFZip wedge(const StandardFZip& z, int k) {
  const int N = z.dim();
  if (k < 1 || k > N) throw std::invalid_argument("exterior power degree out of range");
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      subsets.push_back(cur);
      return;
    }
    for (int b = start; b <= N; ++b) {
      cur.push_back(b);
      rec(b + 1);
      cur.pop_back();
      if (subsets.size() > 5'000'000) throw Unsupported("exterior power too large");
    }
  };
  rec(1);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < subsets.size(); ++i) index[subsets[i]] = static_cast<int>(i) + 1;
  StandardFZip out;
  for (const auto& s : subsets) {
    int h = 0, c = 0;
    std::vector<int> img;
    for (int b : s) {
      h += z.hodge[b - 1];
      c += z.conj[b - 1];
      img.push_back(z.phi[b - 1]);
    }
    std::sort(img.begin(), img.end());
    out.hodge.push_back(h);
    out.conj.push_back(c);
    out.phi.push_back(index.at(img));
  }
  return out;
}

int conjugate_line(const StandardFZip& z) {
  if (z.dim() == 0) throw NotCY("empty F-zip");
  const int lo = *std::min_element(z.conj.begin(), z.conj.end());
  int line = 0;
  for (int b = 1; b <= z.dim(); ++b)
    if (z.conj[b - 1] == lo) {
      if (line) throw NotCY("bottom conjugate piece is not a line; pass to an exterior power");
      line = b;
    }
  return line;
}

int clp(const StandardFZip& z) {
  const int line = conjugate_line(z);
  const auto ws = z.weights();
  int count = 0;
  // only graded steps that are actually nonzero are counted
  for (size_t j = 1; j < ws.size(); ++j)
    if (z.hodge[line - 1] >= ws[j]) ++count;
  return count;
}

bool hasse_nonzero(const StandardFZip& z) {
  conjugate_line(z);
  const int lo = *std::min_element(z.hodge.begin(), z.hodge.end());
  int b0 = 0;
  for (int b = 1; b <= z.dim(); ++b)
    if (z.hodge[b - 1] == lo) b0 = b;
  return z.hodge[z.phi[b0 - 1] - 1] == lo;
}

int clp_exterior_top(const StandardFZip& z) {
  const auto ws = z.weights();
  if (ws.size() != 2) throw std::invalid_argument("exterior-top clp needs a two-weight F-zip");
  int count = 0;
  for (int b = 1; b <= z.dim(); ++b)
    if (z.hodge[b - 1] == ws[0] && z.hodge[z.phi[b - 1] - 1] == ws[1]) ++count;
  return count;
}

}  // namespace ogus
