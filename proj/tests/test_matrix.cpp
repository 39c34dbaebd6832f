#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "chev/matrix.hpp"

using namespace chev;

namespace {

ZMat random_zmat(std::mt19937& rng, int n, int m, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> d(lo, hi);
  ZMat a(ZRing{}, n, m);
  for (auto& e : a.a) e = d(rng);
  return a;
}

mpz_class det3(const ZMat& m) {
  auto e = [&](int i, int j) { return m.at(i, j); };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
         e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

}  // namespace

TEST_CASE("identity and multiplication") {
  QMat id = QMat::identity(QRing{}, 4);
  CHECK(id.is_identity());
  QMat a(QRing{}, 4, 4);
  a.at(0, 1) = mpq_class(1, 2);
  a.at(2, 3) = -3;
  for (int i = 0; i < 4; ++i) a.at(i, i) = 1;
  CHECK(mul(a, id) == a);
  CHECK(mul(id, a) == a);
  CHECK_FALSE(a.is_identity());
  CHECK_THROWS_AS(mul(a, QMat(QRing{}, 3, 3)), std::invalid_argument);
}

TEST_CASE("power by squaring matches repeated products") {
  std::mt19937 rng(11);
  ZMat a = random_zmat(rng, 5, 5, -3, 3);
  ZMat p = ZMat::identity(ZRing{}, 5);
  for (int e = 0; e <= 6; ++e) {
    CHECK(pow(a, unsigned(e)) == p);
    p = mul(p, a);
  }
}

TEST_CASE("bareiss determinant against cofactor expansion") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    ZMat m = random_zmat(rng, 3, 3);
    CHECK(det_bareiss(m) == det3(m));
  }
  ZMat sing(ZRing{}, 3, 3);
  for (int j = 0; j < 3; ++j) {
    sing.at(0, j) = j + 1;
    sing.at(1, j) = 2 * (j + 1);
    sing.at(2, j) = j;
  }
  CHECK(det_bareiss(sing) == 0);
}

TEST_CASE("bareiss rank agrees with rational elimination") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 5, m = 2 + (trial / 3) % 5;
    ZMat a = random_zmat(rng, n, m, -4, 4);
    if (trial % 3 == 0 && n >= 2) {
      for (int j = 0; j < m; ++j) a.at(1, j) = a.at(0, j) * 2;
    }
    CHECK(rank_bareiss(a) == rank_field(to_qmat(a)));
  }
}

TEST_CASE("rank over prime fields can drop") {
  ZMat a(ZRing{}, 2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 11;  // det = 5
  CHECK(rank_bareiss(a) == 2);
  CHECK(rank_field(to_fpmat(to_qmat(a), 5)) == 1);
  CHECK(rank_field(to_fpmat(to_qmat(a), 7)) == 2);
}

TEST_CASE("prime field arithmetic") {
  FpRing f(101);
  for (std::uint64_t a = 1; a < 101; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.reduce(-1L) == 100);
  CHECK(f.reduce(mpq_class(1, 2)) == 51);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK_THROWS_AS(f.reduce(mpq_class(1, 101)), std::domain_error);
  CHECK_THROWS_AS(FpRing(1), std::invalid_argument);
}

TEST_CASE("fixed space dimension") {
  QMat g = QMat::identity(QRing{}, 6);
  ExactMatrix e = g;
  CHECK(fixed_dim(e) == 6);
  g.at(0, 0) = -1;
  g.at(3, 3) = -1;
  e = g;
  CHECK(fixed_dim(e) == 4);
  QMat u = QMat::identity(QRing{}, 6);
  u.at(0, 1) = 1;  // one Jordan block of size 2
  e = u;
  CHECK(fixed_dim(e) == 5);
  // the same unipotent over F_2
  e = to_fpmat(u, 2);
  CHECK(fixed_dim(e) == 5);
}

TEST_CASE("exact matrix variant helpers") {
  QMat a = QMat::identity(QRing{}, 3);
  a.at(1, 2) = 5;
  ExactMatrix x = a, y = a;
  CHECK(exact_rows(x) == 3);
  CHECK(exact_eq(x, y));
  ExactMatrix prod = exact_mul(x, y);
  CHECK(std::get<QMat>(prod).at(1, 2) == 10);
  ExactMatrix fp = to_fpmat(a, 3);
  CHECK_FALSE(exact_eq(x, fp));
  CHECK_THROWS_AS(exact_mul(x, fp), std::invalid_argument);
  mpq_class c;
  QMat s(QRing{}, 2, 2);
  s.at(0, 0) = s.at(1, 1) = mpq_class(-1);
  CHECK(s.is_scalar(c));
  CHECK(c == -1);
}

TEST_CASE("integral detection and conversion") {
  QMat q = QMat::identity(QRing{}, 2);
  CHECK(is_integral(q));
  q.at(0, 1) = mpq_class(1, 3);
  CHECK_FALSE(is_integral(q));
  CHECK_THROWS_AS(to_zmat(q), std::domain_error);
  // non-integral matrices still rank correctly
  CHECK(rank(ExactMatrix(q)) == 2);
}
