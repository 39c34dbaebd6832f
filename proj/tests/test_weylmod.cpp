#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "chev/weylmod.hpp"

using namespace chev;

namespace {

std::map<std::vector<int>, mpz_class> freudenthal_map(const RootSystem& rs,
                                                      const std::vector<int>& lambda) {
  std::map<std::vector<int>, mpz_class> out;
  for (const auto& w : weight_multiplicities(rs, lambda)) out[w.coords] = w.mult;
  return out;
}

std::map<std::vector<int>, mpz_class> basis_weight_histogram(const RepModule& m) {
  std::map<std::vector<int>, mpz_class> out;
  for (const auto& c : m.wtco) out[c] += 1;
  return out;
}

}  // namespace

TEST_CASE("dimension formula on the classical highest weights") {
  const struct {
    const char* group;
    std::vector<int> lambda;
    long dim;
  } rows[] = {
      {"G2", {1, 0}, 7},
      {"G2", {0, 1}, 14},
      {"G2", {2, 0}, 27},
      {"F4", {0, 0, 0, 1}, 26},
      {"F4", {1, 0, 0, 0}, 52},
      {"D4", {1, 0, 0, 0}, 8},
      {"D4", {0, 1, 0, 0}, 28},
      {"E6", {1, 0, 0, 0, 0, 0}, 27},
      {"E6", {0, 1, 0, 0, 0, 0}, 78},
      {"E7", {0, 0, 0, 0, 0, 0, 1}, 56},
      {"E7", {1, 0, 0, 0, 0, 0, 0}, 133},
      {"E8", {0, 0, 0, 0, 0, 0, 0, 1}, 248},
      {"E8", {1, 0, 0, 0, 0, 0, 0, 0}, 3875},
      {"E6", {0, 0, 0, 0, 0, 0}, 1},
  };
  for (const auto& r : rows) CHECK(weyl_dim(cached_root_system(r.group), r.lambda) == r.dim);
  CHECK_THROWS(weyl_dim(cached_root_system("G2"), {1, 0, 0}));
}

TEST_CASE("weight multiplicities sum to the dimension") {
  const struct {
    const char* group;
    std::vector<int> lambda;
    size_t weights;
    long dim;
  } rows[] = {
      {"G2", {0, 1}, 13, 14},
      {"F4", {0, 0, 0, 1}, 25, 26},
      {"E7", {0, 0, 0, 0, 0, 0, 1}, 56, 56},
      {"E7", {1, 0, 0, 0, 0, 0, 0}, 127, 133},
  };
  for (const auto& r : rows) {
    const RootSystem& rs = cached_root_system(r.group);
    auto wm = weight_multiplicities(rs, r.lambda);
    CHECK(wm.size() == r.weights);
    mpz_class total = 0;
    bool saw_top = false;
    for (const auto& w : wm) {
      CHECK(w.mult >= 1);
      total += w.mult;
      if (w.coords == r.lambda) {
        saw_top = true;
        CHECK(w.mult == 1);
      }
    }
    CHECK(saw_top);
    CHECK(total == r.dim);
  }
}

TEST_CASE("zero weight of the adjoint carries multiplicity rank") {
  for (const char* g : {"G2", "F4", "D4"}) {
    const RootSystem& rs = cached_root_system(g);
    std::vector<int> theta(rs.rank);
    for (int i = 0; i < rs.rank; ++i) theta[i] = rs.pairing(rs.highest_root(), i + 1);
    auto fm = freudenthal_map(rs, theta);
    CHECK(fm.at(std::vector<int>(rs.rank, 0)) == rs.rank);
  }
}

TEST_CASE("minuscule construction") {
  RepModule e6 = build_minuscule(cached_root_system("E6"), 1);
  CHECK(e6.dim == 27);
  CHECK(e6.p == 0);
  CHECK(basis_weight_histogram(e6).size() == 27);

  RepModule d4 = build_minuscule(cached_root_system("D4"), 1);
  CHECK(d4.dim == 8);

  CHECK_THROWS(build_minuscule(cached_root_system("E6"), 2));
  CHECK_THROWS(build_minuscule(cached_root_system("G2"), 1));
  CHECK_THROWS(build_minuscule(cached_root_system("E7"), 0));
}

TEST_CASE("folded construction") {
  RepModule f4 = build_folded("F4");
  CHECK(f4.dim == 26);
  RepModule g2 = build_folded("G2");
  CHECK(g2.dim == 7);
  CHECK_THROWS(build_folded("E6"));
}

TEST_CASE("cached modules: dimensions, weight shifts, weight histograms") {
  const struct {
    const char* group;
    const char* name;
    int dim;
  } rows[] = {{"G2", "vmin", 7},     {"F4", "vmin", 26},    {"E6", "vmin", 27},
              {"E7", "vmin", 56},    {"D4", "natural", 8},  {"G2", "adjoint", 14},
              {"F4", "adjoint", 52}, {"D4", "adjoint", 28}, {"E6", "adjoint", 78},
              {"E7", "adjoint", 133}, {"E8", "adjoint", 248}};
  for (const auto& r : rows) {
    const RootSystem& rs = cached_root_system(r.group);
    const RepModule& m = cached_module(r.group, r.name);
    CHECK(m.dim == r.dim);
    CHECK(m.wtco.size() == size_t(r.dim));
    CHECK(check_weight_shifts(rs, m) == "");
  }
  CHECK_THROWS(cached_module("E8", "vmin"));
  CHECK_THROWS(cached_module("G2", "natural"));
}

TEST_CASE("basis weights agree with the multiplicity formula") {
  const struct {
    const char* group;
    const char* name;
    std::vector<int> lambda;
  } rows[] = {{"F4", "vmin", {0, 0, 0, 1}},
              {"E7", "vmin", {0, 0, 0, 0, 0, 0, 1}},
              {"G2", "adjoint", {0, 1}},
              {"D4", "natural", {1, 0, 0, 0}}};
  for (const auto& r : rows) {
    const RootSystem& rs = cached_root_system(r.group);
    CHECK(basis_weight_histogram(cached_module(r.group, r.name)) == freudenthal_map(rs, r.lambda));
  }
}

TEST_CASE("specialization to prime fields") {
  const RepModule& m = cached_module("F4", "vmin");
  RepModule m3 = specialize(m, 3);
  CHECK(m3.p == 3);
  CHECK(m3.dim == m.dim);
  CHECK(check_weight_shifts(cached_root_system("F4"), m3) == "");
  RepModule back = specialize(m3, 0);
  CHECK(back.p == 0);
  CHECK_THROWS(specialize(m, 4));

  GeneratorWord w = parse_word("x(1,1)*x(24,1)");
  RepModule m2 = specialize(m, 2);
  CHECK(exact_eq(evaluate_word(m2, w), evaluate_word_at(m, w, 2)));
}
