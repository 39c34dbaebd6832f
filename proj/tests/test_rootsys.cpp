#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "chev/rootsys.hpp"

using namespace chev;

TEST_CASE("positive root counts and highest roots") {
  struct Row {
    const char* label;
    int rank, npos, top_height;
  };
  for (Row r : {Row{"G2", 2, 6, 5}, Row{"F4", 4, 24, 11}, Row{"D4", 4, 12, 5},
                Row{"E6", 6, 36, 11}, Row{"E7", 7, 63, 17}, Row{"E8", 8, 120, 29}}) {
    const auto& rs = cached_root_system(r.label);
    CHECK(rs.rank == r.rank);
    CHECK(rs.npos == r.npos);
    CHECK(rs.ht[rs.highest_root() - 1] == r.top_height);
    for (int i = 1; i < rs.npos; ++i) CHECK(rs.ht[i - 1] <= rs.ht[rs.highest_root() - 1]);
  }
  CHECK_THROWS_AS(build_root_system("H3"), std::invalid_argument);
}

TEST_CASE("canonical order sorts by height then first difference") {
  for (const char* label : {"G2", "F4", "D4", "E6", "E7", "E8"}) {
    const auto& rs = cached_root_system(label);
    for (int i = 1; i < rs.npos; ++i) {
      CHECK(compare_roots(rs, rs.root(i), rs.root(i + 1)) < 0);
      CHECK(rs.ht[i - 1] <= rs.ht[i]);
    }
    for (int i = 1; i <= rs.npos; ++i) CHECK(rs.index_of(rs.pos[i - 1]) == i);
    CHECK(rs.index_of(std::vector<int>(rs.rank, 9)) == 0);
  }
}

TEST_CASE("pinned root indices") {
  const auto& f4 = cached_root_system("F4");
  CHECK(f4.pos[24 - 1] == std::vector<int>{2, 3, 4, 2});
  CHECK(f4.index_of({0, 1, 1, 0}) == 6);
  CHECK(f4.index_of({0, 1, 2, 0}) == 9);
  CHECK(f4.index_of({0, 1, 2, 2}) == 16);
  const auto& e7 = cached_root_system("E7");
  CHECK(e7.pos[63 - 1] == std::vector<int>{2, 2, 3, 4, 3, 2, 1});
  // highest root of the D6 subsystem on {a2,a3,a4,a5,a6,a7}
  CHECK(e7.pos[49 - 1] == std::vector<int>{0, 1, 1, 2, 2, 2, 1});
}

TEST_CASE("pairings, lengths and coroots") {
  const auto& g2 = cached_root_system("G2");
  CHECK(g2.pairing(2, 1) == -3);
  CHECK(g2.pairing(1, 2) == -1);
  CHECK(g2.is_long(2));
  CHECK_FALSE(g2.is_long(1));
  CHECK(g2.is_long(g2.highest_root()));

  for (const char* label : {"G2", "F4", "D4", "E6", "E7", "E8"}) {
    const auto& rs = cached_root_system(label);
    for (int a = 1; a <= rs.npos; ++a) {
      CHECK(rs.pairing(a, a) == 2);
      CHECK(rs.pairing(-a, a) == -2);
      // coroot expansion reproduces every pairing
      for (int b = 1; b <= rs.npos; ++b) {
        int via_corow = 0;
        for (int k = 0; k < rs.rank; ++k) via_corow += rs.corow[a - 1][k] * rs.pairing(b, k + 1);
        CHECK(via_corow == rs.pairing(b, a));
      }
    }
  }
}

TEST_CASE("sums and reflections") {
  std::mt19937 rng(5);
  for (const char* label : {"G2", "F4", "E6"}) {
    const auto& rs = cached_root_system(label);
    std::uniform_int_distribution<int> d(1, rs.npos);
    for (int trial = 0; trial < 200; ++trial) {
      int a = d(rng) * (trial % 2 ? 1 : -1), b = d(rng) * (trial % 3 ? 1 : -1);
      int s = rs.sum_index(a, b);
      if (s != 0) {
        std::vector<int> sum = rs.root(a).coeffs;
        for (int k = 0; k < rs.rank; ++k) sum[k] += rs.root(b).coeffs[k];
        CHECK(rs.root(s).coeffs == sum);
      }
      int g = d(rng);
      // s_g is an involution and preserves pairings
      CHECK(rs.reflect(g, rs.reflect(g, b)) == b);
      CHECK(rs.pairing(rs.reflect(g, a), rs.reflect(g, b)) == rs.pairing(a, b));
      CHECK(rs.reflect(g, g) == -g);
    }
  }
}

TEST_CASE("root strings") {
  const auto& g2 = cached_root_system("G2");
  // alpha1-string through alpha2 has length 3 below: a2, a2+a1, a2+2a1, a2+3a1
  CHECK(g2.string_down(1, g2.index_of({3, 1})) == 3);
  CHECK(g2.string_down(1, 2) == 0);
  const auto& f4 = cached_root_system("F4");
  CHECK(f4.string_down(3, f4.index_of({0, 1, 2, 0})) == 2);
}

TEST_CASE("diagram symmetries") {
  const auto& d4 = cached_root_system("D4");
  auto tau = dynkin_symmetry(d4, 't');
  CHECK(tau.simple_map[1] == 3);
  CHECK(tau.simple_map[3] == 4);
  CHECK(tau.simple_map[4] == 1);
  CHECK(tau.simple_map[2] == 2);
  for (int i = 1; i <= 4; ++i) CHECK_FALSE(tau.squares[i]);

  const auto& e6 = cached_root_system("E6");
  auto tau6 = dynkin_symmetry(e6, 't');
  CHECK(tau6.simple_map[1] == 6);
  CHECK(tau6.simple_map[3] == 5);
  CHECK(tau6.simple_map[2] == 2);
  CHECK(tau6.simple_map[4] == 4);

  const auto& g2 = cached_root_system("G2");
  auto psi2 = dynkin_symmetry(g2, 'p');
  CHECK(psi2.simple_map[1] == 2);
  CHECK(psi2.simple_map[2] == 1);
  CHECK(psi2.squares[1]);  // the short simple picks up t -> t^2
  CHECK_FALSE(psi2.squares[2]);

  const auto& f4 = cached_root_system("F4");
  auto psi4 = dynkin_symmetry(f4, 'p');
  CHECK(psi4.simple_map[1] == 4);
  CHECK(psi4.simple_map[2] == 3);
  CHECK(psi4.simple_map[3] == 2);
  CHECK(psi4.simple_map[4] == 1);
  CHECK_FALSE(psi4.squares[1]);
  CHECK(psi4.squares[4]);

  CHECK_THROWS_AS(dynkin_symmetry(f4, 't'), std::invalid_argument);
  CHECK_THROWS_AS(dynkin_symmetry(e6, 'p'), std::invalid_argument);
}

TEST_CASE("symmetry root permutations") {
  const auto& e6 = cached_root_system("E6");
  auto perm6 = symmetry_root_perm(e6, dynkin_symmetry(e6, 't'));
  // a graph symmetry is a bijection preserving height and pairings
  std::set<int> seen;
  for (int s = 0; s < e6.nslots(); ++s) {
    seen.insert(perm6[s]);
    CHECK(e6.height(e6.signed_of(perm6[s])) == e6.height(e6.signed_of(s)));
  }
  CHECK(int(seen.size()) == e6.nslots());
  for (int a = 1; a <= e6.npos; ++a)
    for (int b = 1; b <= e6.npos; ++b)
      CHECK(e6.pairing(e6.signed_of(perm6[e6.slot(a)]), e6.signed_of(perm6[e6.slot(b)])) ==
            e6.pairing(a, b));

  const auto& f4 = cached_root_system("F4");
  auto permp = symmetry_root_perm(f4, dynkin_symmetry(f4, 'p'));
  for (int a = 1; a <= f4.npos; ++a) {
    int img = f4.signed_of(permp[f4.slot(a)]);
    CHECK(img > 0);
    CHECK(f4.is_long(img) != f4.is_long(a));
  }
}

TEST_CASE("orthogonal reflection supports") {
  const auto& e7 = cached_root_system("E7");
  std::vector<int> seven = {1, 2, 5, 7, 37, 55, 61};
  for (int a : seven)
    for (int b : seven)
      if (a != b) CHECK(e7.orthogonal(a, b));
  const auto& e8 = cached_root_system("E8");
  std::vector<int> eight = {1, 2, 5, 7, 44, 71, 89, 120};
  for (int a : eight)
    for (int b : eight)
      if (a != b) CHECK(e8.orthogonal(a, b));
  const auto& f4 = cached_root_system("F4");
  std::vector<int> four = {1, 3, 14, 21};
  for (int a : four)
    for (int b : four)
      if (a != b) CHECK(f4.orthogonal(a, b));
}
