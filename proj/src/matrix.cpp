#include "chev/matrix.hpp"

namespace chev {

// Bareiss elimination: after step k the remaining entries are k+1-minors
// of the original matrix, and each division by the previous pivot is
// exact.  Column scan order makes it rank-revealing.
int rank_bareiss(Mat<ZRing> m) {
  mpz_class prev(1);
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (mpz_sgn(m.at(i, c).get_mpz_t()) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const mpz_class& p = m.at(r, c);
    for (int i = r + 1; i < m.rows; ++i) {
      mpz_class mi = m.at(i, c);
      for (int j = c + 1; j < m.cols; ++j) {
        mpz_class t = m.at(i, j) * p - mi * m.at(r, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

mpz_class det_bareiss(Mat<ZRing> m) {
  if (m.rows != m.cols) throw std::invalid_argument("det_bareiss: not square");
  int n = m.rows;
  mpz_class prev(1);
  int sign = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (mpz_sgn(m.at(i, c).get_mpz_t()) != 0) { piv = i; break; }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = c; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      sign = -sign;
    }
    const mpz_class& p = m.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      mpz_class mi = m.at(i, c);
      for (int j = c + 1; j < n; ++j) {
        mpz_class t = m.at(i, j) * p - mi * m.at(c, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, c) = 0;
    }
    prev = p;
  }
  return sign > 0 ? m.at(n - 1, n - 1) : mpz_class(-m.at(n - 1, n - 1));
}

}  // namespace chev
