#pragma once

#include <string>
#include <vector>

#include "chev/matrix.hpp"
#include "chev/rootsys.hpp"
#include "chev/word.hpp"

namespace chev {

// Sparse integral square matrix, entries sorted by (row, col).
struct SpMat {
  int n = 0;
  struct Ent {
    int32_t r, c;
    long long v;
  };
  std::vector<Ent> ent;

  bool zero() const { return ent.empty(); }
};

SpMat sp_from_dense(const ZMat& a);
ZMat sp_to_dense(const SpMat& a);
SpMat sp_mul(const SpMat& a, const SpMat& b);
// divide all entries by k, throwing if not exact
SpMat sp_divexact(const SpMat& a, long long k);

// A highest-weight module realized on an integral lattice basis.
// x_alpha(t) acts as 1 + sum_k t^k * xparts[slot][k-1]; h_alpha(t)
// scales basis vector v by t^{<mu_v, alpha^>}; both exact over the
// coefficient ring selected by p (0 = rationals, else F_p).
struct RepModule {
  std::string group;       // root system label
  std::string name;        // adjoint | vmin | natural
  std::string provenance;  // adjoint | minuscule | folded(<parent>)
  int dim = 0;
  long p = 0;

  std::vector<std::vector<SpMat>> xparts;  // per signed-root slot
  std::vector<std::vector<int>> wtco;      // wtco[v][i] = <mu_v, alpha_i^>

  const RootSystem& rootsys() const;
};

// <mu_v, alpha^> for a signed root index, via the coroot expansion
int weight_pairing(const RootSystem& rs, const RepModule& m, int basis_vec, int signed_root);

// --- ring-generic factor application -------------------------------
// Shared by word evaluation and the relation verifier.  Scalars are
// lifted into each ring; the integer path only ever inverts +-1.

inline mpq_class lift_ll(const QRing&, long long v) { return mpq_class(long(v)); }
inline mpz_class lift_ll(const ZRing&, long long v) { return mpz_class(long(v)); }
inline FpRing::elem lift_ll(const FpRing& r, long long v) {
  long long m = v % (long long)(r.p);
  if (m < 0) m += (long long)(r.p);
  return FpRing::elem(m);
}

inline mpq_class lift_q(const QRing&, const mpq_class& v) { return v; }
inline mpz_class lift_q(const ZRing&, const mpq_class& v) {
  if (v.get_den() != 1) throw std::domain_error("integer path got a rational");
  return v.get_num();
}
inline FpRing::elem lift_q(const FpRing& r, const mpq_class& v) { return r.reduce(v); }

inline mpq_class inv_elem(const QRing& r, const mpq_class& t) { return r.inv(t); }
inline FpRing::elem inv_elem(const FpRing& r, FpRing::elem t) { return r.inv(t); }
inline mpz_class inv_elem(const ZRing&, const mpz_class& t) {
  if (t == 1 || t == -1) return t;
  throw std::domain_error("integer path cannot invert");
}

template <class R>
typename R::elem pow_signed(const R& ring, typename R::elem t, long e) {
  if (e < 0) {
    t = inv_elem(ring, t);
    e = -e;
  }
  typename R::elem r = ring.one();
  for (long i = 0; i < e; ++i) r = ring.mul(r, t);
  return r;
}

// acc := acc * x(t)  with x(t) = 1 + sum_k t^k P_k (column update)
template <class R>
void apply_x_right(Mat<R>& acc, const std::vector<SpMat>& parts, const typename R::elem& t) {
  Mat<R> base = acc;
  typename R::elem tp = acc.ring.one();
  for (size_t k = 0; k < parts.size(); ++k) {
    tp = acc.ring.mul(tp, t);
    for (const auto& e : parts[k].ent) {
      typename R::elem w = acc.ring.mul(tp, lift_ll(acc.ring, e.v));
      if (R::is_zero(w)) continue;
      for (int i = 0; i < acc.rows; ++i) acc.ring.add_mul(acc.at(i, e.c), base.at(i, e.r), w);
    }
  }
}

// acc := x(t) * acc  (row update)
template <class R>
void apply_x_left(Mat<R>& acc, const std::vector<SpMat>& parts, const typename R::elem& t) {
  Mat<R> base = acc;
  typename R::elem tp = acc.ring.one();
  for (size_t k = 0; k < parts.size(); ++k) {
    tp = acc.ring.mul(tp, t);
    for (const auto& e : parts[k].ent) {
      typename R::elem w = acc.ring.mul(tp, lift_ll(acc.ring, e.v));
      if (R::is_zero(w)) continue;
      for (int j = 0; j < acc.cols; ++j) acc.ring.add_mul(acc.at(e.r, j), base.at(e.c, j), w);
    }
  }
}

// acc := acc * h(t), the diagonal torus factor
template <class R>
void apply_h_right(Mat<R>& acc, const RootSystem& rs, const RepModule& m, int index,
                   const typename R::elem& t) {
  for (int j = 0; j < acc.cols; ++j) {
    int e = weight_pairing(rs, m, j, index);
    if (e == 0) continue;
    typename R::elem s = pow_signed(acc.ring, t, e);
    for (int i = 0; i < acc.rows; ++i) acc.at(i, j) = acc.ring.mul(acc.at(i, j), s);
  }
}

// Product of the generator matrices in word order over the module's
// ring.  Integer-only words over the rationals take an integer fast
// path before conversion.
ExactMatrix evaluate_word(const RepModule& m, const GeneratorWord& w);

// evaluate_word for a module taken at a different characteristic
ExactMatrix evaluate_word_at(const RepModule& m, const GeneratorWord& w, long p);

bool is_identity(const ExactMatrix& g);
// true when g is a scalar multiple of the identity; the scalar's
// printed form is reported through `scalar`
bool is_scalar_matrix(const ExactMatrix& g, std::string* scalar = nullptr);

}  // namespace chev
