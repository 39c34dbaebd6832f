#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace chev {

// A root, identified by its signed index in the canonical ordering of
// the positive roots: index i > 0 is the i-th positive root, -i its
// negative.  Coefficients are over the simple roots.
struct Root {
  int signed_index = 0;
  std::vector<int> coeffs;
  int height = 0;
};

// Diagram symmetry data: tau is a graph automorphism (D4 triality,
// E6 involution), psi the exceptional isogeny of B2/G2/F4.  simple_map
// is 1-based on simple-root indices; squares[i] says the parameter of
// the i-th simple generator picks up t -> t^2 under the map (short
// roots under psi).
struct DynkinSymmetry {
  char kind = 0;  // 't' or 'p'
  std::vector<int> simple_map;
  std::vector<bool> squares;
};

// Root system with the canonical total order on positive roots:
// ordered by height, and within a height alpha < beta iff d_k > 0
// where alpha - beta = sum d_i alpha_i and k is minimal with d_k != 0.
// The first `rank` roots are the simple roots in Bourbaki order.
struct RootSystem {
  std::string label;
  char letter = 0;
  int rank = 0;
  int npos = 0;

  std::vector<std::vector<int>> pos;    // coefficient vectors, 0-based index
  std::vector<int> ht;                  // heights
  std::vector<int> dlen;                // (alpha,alpha)/2, normalized so short = 1
  std::vector<std::vector<int>> corow;  // coroot coordinates: alpha^ = sum corow[i][k] alpha_k^
  std::vector<std::vector<int8_t>> pp;  // pp[i][j] = <alpha_i, alpha_j^> on positive pairs
  std::vector<int> simple_d;            // (alpha_i,alpha_i)/2 for the simples

  std::vector<int32_t> sumtab;   // (2N)^2: signed index of alpha+beta, 0 if not a root
  std::vector<int32_t> refltab;  // N x 2N: slot of s_alpha(beta) for positive alpha

  int nslots() const { return 2 * npos; }
  // slots: 0..N-1 the positive roots, N..2N-1 their negatives
  int slot(int signed_idx) const { return signed_idx > 0 ? signed_idx - 1 : npos - signed_idx - 1; }
  int signed_of(int slot_) const { return slot_ < npos ? slot_ + 1 : -(slot_ - npos + 1); }

  Root root(int signed_idx) const;
  int height(int signed_idx) const { return signed_idx > 0 ? ht[signed_idx - 1] : -ht[-signed_idx - 1]; }
  int length2(int signed_idx) const { return dlen[std::abs(signed_idx) - 1]; }
  bool is_long(int signed_idx) const;

  // <beta, alpha^> for any pair of signed root indices
  int pairing(int beta, int alpha) const {
    int s = (beta > 0 ? 1 : -1) * (alpha > 0 ? 1 : -1);
    return s * pp[std::abs(beta) - 1][std::abs(alpha) - 1];
  }
  bool orthogonal(int a, int b) const { return pairing(a, b) == 0; }

  // signed index of alpha+beta, or 0 when the sum is zero or not a root
  int sum_index(int a, int b) const { return sumtab[size_t(slot(a)) * nslots() + slot(b)]; }

  // s_alpha(beta) as a signed index
  int reflect(int alpha, int beta) const {
    return signed_of(refltab[size_t(std::abs(alpha) - 1) * nslots() + slot(beta)]);
  }

  int highest_root() const { return npos; }

  // index of the positive root with the given coefficient vector, 0 if absent
  int index_of(const std::vector<int>& coeffs) const;

  // p-bar of the alpha-string through beta: max k with beta - k*alpha a root
  int string_down(int alpha, int beta) const;

 private:
  std::unordered_map<uint64_t, int> index_;
  friend RootSystem build_root_system(const std::string&);
};

RootSystem build_root_system(const std::string& type_label);

// process-wide cache keyed by label; the returned reference stays valid
const RootSystem& cached_root_system(const std::string& type_label);

// Strict canonical order on positive roots (by index into rs.pos).
// Returns <0, 0, >0 like a comparator.
int compare_roots(const RootSystem& rs, const Root& a, const Root& b);

DynkinSymmetry dynkin_symmetry(const RootSystem& rs, char kind);

// The permutation the symmetry induces on all signed roots, as images
// per slot.  For psi a long root maps to the short root alpha^ and
// vice versa.
std::vector<int32_t> symmetry_root_perm(const RootSystem& rs, const DynkinSymmetry& sym);

}  // namespace chev
