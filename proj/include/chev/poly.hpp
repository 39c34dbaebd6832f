#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace chev {

// Integer polynomials in one variable q, dense coefficient vectors,
// constant term first.  Just enough arithmetic for torus orders:
// these are always +-products of cyclotomic polynomials.
struct IPoly {
  std::vector<mpz_class> c;  // c[k] is the coefficient of q^k

  IPoly() = default;
  explicit IPoly(std::vector<mpz_class> cc) : c(std::move(cc)) { trim(); }
  static IPoly constant(long v) { return IPoly({mpz_class(v)}); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int degree() const { return int(c.size()) - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c.empty(); }

  mpz_class eval(const mpz_class& q) const {
    mpz_class r(0);
    for (size_t k = c.size(); k-- > 0;) r = r * q + c[k];
    return r;
  }

  bool operator==(const IPoly& o) const { return c == o.c; }
};

IPoly operator*(const IPoly& a, const IPoly& b);
IPoly operator-(const IPoly& a, const IPoly& b);
IPoly operator-(const IPoly& a);

// Exact division; throws if the remainder is nonzero.
IPoly divexact(const IPoly& a, const IPoly& b);
bool divides(const IPoly& b, const IPoly& a);

// q^n - 1.
IPoly qpow_minus_one(int n);

// The d-th cyclotomic polynomial, by exact division of q^d - 1.
const IPoly& cyclotomic(int d);

// Factor p as +-1 times a product of cyclotomic polynomials; returns
// the exponent of each d.  Throws if p is not of that form (torus
// order polynomials always are: the underlying lattice map has finite
// order).  `sign` receives the leading unit.
std::map<int, int> cyclotomic_factor(IPoly p, int& sign, int max_d = 64);

// "(q-1)^2", "(q^2+1)^2", "q^4-q^2+1" style rendering: the cyclotomic
// factorization if it exists, otherwise the expanded polynomial.
std::string pretty(const IPoly& p);

// Expanded rendering "q^4-q^2+1".
std::string expanded(const IPoly& p);

}  // namespace chev
