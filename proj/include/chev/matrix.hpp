#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace chev {

// Coefficient rings for exact dense linear algebra.  Three rings cover
// everything: the rationals, the integers (a fast path inside the
// rationals), and prime fields F_p.  A ring object carries whatever
// runtime data the ring needs (the modulus for F_p) and exposes a
// uniform little dictionary of operations, so the matrix algorithms
// below are written once.

struct QRing {
  using elem = mpq_class;
  static elem zero() { return elem(0); }
  static elem one() { return elem(1); }
  static bool is_zero(const elem& a) { return a.get_num() == 0; }
  static bool eq(const elem& a, const elem& b) { return a == b; }
  static void add_mul(elem& acc, const elem& a, const elem& b) { acc += a * b; }
  static elem mul(const elem& a, const elem& b) { return a * b; }
  static elem neg(const elem& a) { return -a; }
  static elem sub(const elem& a, const elem& b) { return a - b; }
  static elem inv(const elem& a) {
    if (is_zero(a)) throw std::domain_error("QRing: division by zero");
    return 1 / a;
  }
  static std::string str(const elem& a) { return a.get_str(); }
};

struct ZRing {
  using elem = mpz_class;
  static elem zero() { return elem(0); }
  static elem one() { return elem(1); }
  static bool is_zero(const elem& a) { return mpz_sgn(a.get_mpz_t()) == 0; }
  static bool eq(const elem& a, const elem& b) { return a == b; }
  static void add_mul(elem& acc, const elem& a, const elem& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  static elem mul(const elem& a, const elem& b) { return a * b; }
  static elem neg(const elem& a) { return -a; }
  static elem sub(const elem& a, const elem& b) { return a - b; }
  static std::string str(const elem& a) { return a.get_str(); }
};

struct FpRing {
  using elem = std::uint64_t;
  std::uint64_t p;

  explicit FpRing(std::uint64_t p_) : p(p_) {
    if (p < 2 || p >= (std::uint64_t(1) << 31))
      throw std::invalid_argument("FpRing: modulus out of range");
  }
  static elem zero() { return 0; }
  elem one() const { return p == 1 ? 0 : 1; }
  static bool is_zero(const elem& a) { return a == 0; }
  static bool eq(const elem& a, const elem& b) { return a == b; }
  elem reduce(long v) const {
    long r = v % long(p);
    if (r < 0) r += long(p);
    return elem(r);
  }
  elem reduce(const mpz_class& v) const {
    mpz_class r = v % long(p);
    if (r < 0) r += long(p);
    return r.get_ui();
  }
  elem reduce(const mpq_class& v) const {
    elem num = reduce(mpz_class(v.get_num()));
    elem den = reduce(mpz_class(v.get_den()));
    if (den == 0) throw std::domain_error("FpRing: denominator divisible by p");
    return mul(num, inv(den));
  }
  elem mul(elem a, elem b) const { return (unsigned __int128)(a)*b % p; }
  void add_mul(elem& acc, elem a, elem b) const { acc = (acc + (unsigned __int128)(a)*b) % p; }
  elem neg(elem a) const { return a == 0 ? 0 : p - a; }
  elem sub(elem a, elem b) const { return a >= b ? a - b : a + p - b; }
  elem pow(elem a, std::uint64_t e) const {
    elem r = 1, base = a % p;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  elem inv(elem a) const {
    if (a == 0) throw std::domain_error("FpRing: division by zero");
    return pow(a, p - 2);  // p prime
  }
  static std::string str(elem a) { return std::to_string(a); }
};

template <class R>
struct Mat {
  using elem = typename R::elem;
  R ring;
  int rows = 0, cols = 0;
  std::vector<elem> a;

  Mat() = default;
  Mat(R r, int n, int m) : ring(std::move(r)), rows(n), cols(m), a(size_t(n) * m, R::zero()) {}

  elem& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const elem& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static Mat identity(R r, int n) {
    Mat m(std::move(r), n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = m.ring.one();
    return m;
  }

  bool operator==(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (size_t k = 0; k < a.size(); ++k)
      if (!R::eq(a[k], o.a[k])) return false;
    return true;
  }

  bool is_identity() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!R::eq(at(i, j), i == j ? ring.one() : R::zero())) return false;
    return true;
  }

  // g = c*I for some scalar c?  Returns the scalar through `c`.
  bool is_scalar(elem& c) const {
    if (rows != cols || rows == 0) return false;
    c = at(0, 0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!R::eq(at(i, j), i == j ? c : R::zero())) return false;
    return true;
  }
};

// c = a*b, skipping zero entries of a (generator matrices are sparse).
template <class R>
Mat<R> mul(const Mat<R>& x, const Mat<R>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("Mat::mul: shape mismatch");
  Mat<R> c(x.ring, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const auto& aik = x.at(i, k);
      if (R::is_zero(aik)) continue;
      const auto* yrow = &y.at(k, 0);
      auto* crow = &c.at(i, 0);
      for (int j = 0; j < y.cols; ++j)
        if (!R::is_zero(yrow[j])) c.ring.add_mul(crow[j], aik, yrow[j]);
    }
  return c;
}

template <class R>
Mat<R> sub(const Mat<R>& x, const Mat<R>& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("Mat::sub: shape mismatch");
  Mat<R> c(x.ring, x.rows, x.cols);
  for (size_t k = 0; k < x.a.size(); ++k) c.a[k] = c.ring.sub(x.a[k], y.a[k]);
  return c;
}

template <class R>
Mat<R> pow(const Mat<R>& x, unsigned e) {
  Mat<R> r = Mat<R>::identity(x.ring, x.rows), base = x;
  while (e) {
    if (e & 1) r = mul(r, base);
    if (e >>= 1) base = mul(base, base);
  }
  return r;
}

// Row-echelon rank over a field (QRing or FpRing): plain Gaussian
// elimination, destructive on a copy.
template <class R>
int rank_field(Mat<R> m) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (!R::is_zero(m.at(i, c))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    auto pinv = m.ring.inv(m.at(r, c));
    for (int i = r + 1; i < m.rows; ++i) {
      if (R::is_zero(m.at(i, c))) continue;
      auto f = m.ring.mul(m.at(i, c), pinv);
      m.at(i, c) = R::zero();
      for (int j = c + 1; j < m.cols; ++j)
        if (!R::is_zero(m.at(r, j)))
          m.at(i, j) = m.ring.sub(m.at(i, j), m.ring.mul(f, m.at(r, j)));
    }
    ++r;
  }
  return r;
}

// Fraction-free (Bareiss) rank over the integers; avoids rational
// arithmetic entirely, intermediate entries are minors of the input.
int rank_bareiss(Mat<ZRing> m);

// Bareiss determinant of a square integer matrix.
mpz_class det_bareiss(Mat<ZRing> m);

using QMat = Mat<QRing>;
using ZMat = Mat<ZRing>;
using FpMat = Mat<FpRing>;

inline QMat to_qmat(const ZMat& z) {
  QMat q(QRing{}, z.rows, z.cols);
  for (size_t k = 0; k < z.a.size(); ++k) q.a[k] = mpq_class(z.a[k]);
  return q;
}

// All denominators 1?  (Makes the integer fast path applicable.)
inline bool is_integral(const QMat& q) {
  for (const auto& e : q.a)
    if (e.get_den() != 1) return false;
  return true;
}

inline ZMat to_zmat(const QMat& q) {
  ZMat z(ZRing{}, q.rows, q.cols);
  for (size_t k = 0; k < q.a.size(); ++k) {
    if (q.a[k].get_den() != 1) throw std::domain_error("to_zmat: non-integral entry");
    z.a[k] = q.a[k].get_num();
  }
  return z;
}

inline FpMat to_fpmat(const QMat& q, std::uint64_t p) {
  FpRing f(p);
  FpMat m(f, q.rows, q.cols);
  for (size_t k = 0; k < q.a.size(); ++k) m.a[k] = f.reduce(q.a[k]);
  return m;
}

// A matrix over Q or over F_p — the two coefficient rings the toolkit
// exposes.  Rational matrices with integral entries are ranked through
// the Bareiss path automatically.
using ExactMatrix = std::variant<QMat, FpMat>;

inline int exact_rows(const ExactMatrix& m) {
  return std::visit([](const auto& x) { return x.rows; }, m);
}

inline int rank(const ExactMatrix& m) {
  if (std::holds_alternative<QMat>(m)) {
    const QMat& q = std::get<QMat>(m);
    if (is_integral(q)) return rank_bareiss(to_zmat(q));
    return rank_field(q);
  }
  return rank_field(std::get<FpMat>(m));
}

inline ExactMatrix exact_mul(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.index() != y.index()) throw std::invalid_argument("exact_mul: mixed rings");
  if (std::holds_alternative<QMat>(x))
    return mul(std::get<QMat>(x), std::get<QMat>(y));
  return mul(std::get<FpMat>(x), std::get<FpMat>(y));
}

inline bool exact_eq(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.index() != y.index()) return false;
  if (std::holds_alternative<QMat>(x)) return std::get<QMat>(x) == std::get<QMat>(y);
  return std::get<FpMat>(x) == std::get<FpMat>(y);
}

// dim ker(g - 1), the fixed-space dimension of g acting on its module.
inline int fixed_dim(const ExactMatrix& g) {
  if (std::holds_alternative<QMat>(g)) {
    const QMat& q = std::get<QMat>(g);
    QMat d = sub(q, QMat::identity(q.ring, q.rows));
    if (is_integral(d)) return d.rows - rank_bareiss(to_zmat(d));
    return d.rows - rank_field(d);
  }
  const FpMat& f = std::get<FpMat>(g);
  return f.rows - rank_field(sub(f, FpMat::identity(f.ring, f.rows)));
}

}  // namespace chev
