#include "chev/poly.hpp"

#include <mutex>
#include <stdexcept>

namespace chev {

IPoly operator*(const IPoly& a, const IPoly& b) {
  if (a.is_zero() || b.is_zero()) return IPoly{};
  IPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

IPoly operator-(const IPoly& a, const IPoly& b) {
  IPoly r = a;
  if (b.c.size() > r.c.size()) r.c.resize(b.c.size(), mpz_class(0));
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

IPoly operator-(const IPoly& a) {
  IPoly r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

IPoly divexact(const IPoly& a, const IPoly& b) {
  if (b.is_zero()) throw std::domain_error("IPoly: division by zero");
  IPoly rem = a, quo;
  if (a.degree() < b.degree()) {
    if (!a.is_zero()) throw std::domain_error("IPoly: inexact division");
    return IPoly{};
  }
  quo.c.assign(a.degree() - b.degree() + 1, mpz_class(0));
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    if (rem.degree() != b.degree() + k) continue;
    mpz_class q = rem.c.back() / b.c.back();
    if (q * b.c.back() != rem.c.back()) throw std::domain_error("IPoly: inexact division");
    quo.c[k] = q;
    for (int j = 0; j <= b.degree(); ++j) rem.c[j + k] -= q * b.c[j];
    rem.trim();
  }
  if (!rem.is_zero()) throw std::domain_error("IPoly: inexact division");
  quo.trim();
  return quo;
}

bool divides(const IPoly& b, const IPoly& a) {
  try {
    divexact(a, b);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

IPoly qpow_minus_one(int n) {
  IPoly r;
  r.c.assign(n + 1, mpz_class(0));
  r.c[0] = -1;
  r.c[n] = 1;
  return r;
}

static const IPoly& cyclo_impl(std::map<int, IPoly>& cache, int d) {
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  IPoly p = qpow_minus_one(d);
  for (int e = 1; e < d; ++e)
    if (d % e == 0) p = divexact(p, cyclo_impl(cache, e));
  return cache.emplace(d, std::move(p)).first->second;
}

const IPoly& cyclotomic(int d) {
  static std::map<int, IPoly> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  return cyclo_impl(cache, d);
}

std::map<int, int> cyclotomic_factor(IPoly p, int& sign, int max_d) {
  if (p.is_zero()) throw std::domain_error("cyclotomic_factor: zero polynomial");
  sign = mpz_sgn(p.c.back().get_mpz_t());
  if (sign < 0) p = -p;
  std::map<int, int> out;
  for (int d = 1; d <= max_d && p.degree() > 0; ++d) {
    const IPoly& cd = cyclotomic(d);
    while (cd.degree() <= p.degree() && divides(cd, p)) {
      p = divexact(p, cd);
      ++out[d];
    }
  }
  if (p.degree() != 0 || p.c[0] != 1)
    throw std::domain_error("cyclotomic_factor: not a unit times cyclotomics");
  return out;
}

std::string expanded(const IPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    if (p.c[k] == 0) continue;
    mpz_class a = p.c[k];
    bool neg = a < 0;
    if (neg) a = -a;
    if (!s.empty())
      s += neg ? "-" : "+";
    else if (neg)
      s += "-";
    std::string coeff = a.get_str();
    if (k == 0) {
      s += coeff;
    } else {
      if (coeff != "1") s += coeff + "*";
      s += k == 1 ? "q" : "q^" + std::to_string(k);
    }
  }
  return s;
}

std::string pretty(const IPoly& p) {
  int sign = 1;
  std::map<int, int> fac;
  try {
    fac = cyclotomic_factor(p, sign);
  } catch (const std::domain_error&) {
    return expanded(p);
  }
  std::string s = sign < 0 ? "-" : "";
  if (fac.empty()) return s + "1";
  bool first = true;
  for (const auto& [d, e] : fac) {
    if (!first) s += "*";
    first = false;
    s += "(" + expanded(cyclotomic(d)) + ")";
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace chev
