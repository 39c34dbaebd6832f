#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "chev/involutions.hpp"
#include "chev/weylmod.hpp"

using namespace chev;

namespace {

const std::vector<std::string> kGroups = {"G2", "F4", "D4", "E6", "E7", "E8"};

GeneratorWord inverse_word(const GeneratorWord& w) {
  GeneratorWord inv;
  for (auto it = w.terms.rbegin(); it != w.terms.rend(); ++it) {
    GenTerm t = *it;
    if (t.kind == 'x') {
      t.coeff = -t.coeff;
      inv.terms.push_back(t);
    } else if (t.kind == 'h') {
      t.coeff = 1 / t.coeff;
      inv.terms.push_back(t);
    } else {
      inv.terms.push_back(t);
      inv.terms.push_back({'h', t.index, -1});
    }
  }
  return inv;
}

GeneratorWord random_unit(const RootSystem& rs, std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> idx(1, rs.rank);
  std::uniform_int_distribution<int> kind(0, 3);
  GeneratorWord u;
  for (int i = 0; i < len; ++i) {
    switch (kind(rng)) {
      case 0: u.terms.push_back({'x', idx(rng), 1}); break;
      case 1: u.terms.push_back({'x', idx(rng), -1}); break;
      case 2: u.terms.push_back({'n', idx(rng), 1}); break;
      default: u.terms.push_back({'h', idx(rng), -1}); break;
    }
  }
  return u;
}

GeneratorWord conjugate(const GeneratorWord& u, const GeneratorWord& w) {
  GeneratorWord out = u;
  GeneratorWord uinv = inverse_word(u);
  out.terms.insert(out.terms.end(), w.terms.begin(), w.terms.end());
  out.terms.insert(out.terms.end(), uinv.terms.begin(), uinv.terms.end());
  return out;
}

}  // namespace

TEST_CASE("schema and table shape") {
  CHECK(kClassTableSchema == 1);
  const struct {
    const char* group;
    size_t char2_rows;
    size_t odd_rows;
  } rows[] = {{"G2", 2, 1}, {"F4", 4, 2}, {"D4", 2, 1},
              {"E6", 3, 2}, {"E7", 5, 3}, {"E8", 4, 2}};
  size_t total = 0;
  for (const auto& r : rows) {
    CHECK(class_table(r.group, true).size() == r.char2_rows);
    CHECK(class_table(r.group, false).size() == r.odd_rows);
    total += r.char2_rows + r.odd_rows;
  }
  CHECK(total == 31);
  CHECK_THROWS(class_table("B2", true));
}

TEST_CASE("table rows parse, validate, and are mutually distinguishable") {
  for (const auto& group : kGroups) {
    const RootSystem& rs = cached_root_system(group);
    for (bool c2 : {true, false}) {
      std::set<std::pair<std::vector<int>, int>> keys;
      for (const ClassRecord& r : class_table(group, c2)) {
        GeneratorWord w = parse_word(r.rep);
        CHECK_NOTHROW(validate_word(w, rs.npos));
        CHECK(!r.label.empty());
        CHECK(keys.insert({r.vmin_data, r.adjoint_data}).second);
        if (c2) {
          const RepModule& ad = cached_module(group, "adjoint");
          CHECK(2 * r.adjoint_data <= ad.dim);
          if (!r.vmin_data.empty()) {
            const RepModule& vm = cached_module(group, minimal_module_name(group));
            for (int v : r.vmin_data) CHECK(2 * v <= vm.dim);
          }
        }
      }
    }
  }
}

TEST_CASE("every tabulated representative classifies back to its own label") {
  for (const auto& group : kGroups) {
    for (const ClassRecord& r : class_table(group, true))
      CHECK(classify_involution(group, 2, parse_word(r.rep)) == r.label);
    for (const ClassRecord& r : class_table(group, false))
      for (long p : {0L, 3L, 5L})
        CHECK(classify_involution(group, p, parse_word(r.rep)) == r.label);
  }
}

TEST_CASE("tabulated module data matches the evaluated representatives") {
  for (const auto& group : kGroups) {
    std::string vname = minimal_module_name(group);
    for (const ClassRecord& r : class_table(group, true)) {
      GeneratorWord w = parse_word(r.rep);
      const RepModule& ad = cached_module(group, "adjoint");
      JordanType jt = jordan_partition(evaluate_word_at(ad, w, 2), 2);
      CHECK(jt.char2);
      CHECK(jt.two_blocks == r.adjoint_data);
      if (!r.vmin_data.empty()) {
        const RepModule& vm = cached_module(group, vname);
        JordanType jv = jordan_partition(evaluate_word_at(vm, w, 2), 2);
        CHECK(std::count(r.vmin_data.begin(), r.vmin_data.end(), jv.two_blocks) == 1);
      }
    }
    for (const ClassRecord& r : class_table(group, false)) {
      GeneratorWord w = parse_word(r.rep);
      const RepModule& ad = cached_module(group, "adjoint");
      CHECK(fixed_dim(evaluate_word_at(ad, w, 0)) == r.adjoint_data);
      if (!r.vmin_data.empty() && involution_kind(group, w, 0) == InvolutionKind::involution) {
        const RepModule& vm = cached_module(group, vname);
        int fv = fixed_dim(evaluate_word_at(vm, w, 0));
        CHECK(std::count(r.vmin_data.begin(), r.vmin_data.end(), fv) == 1);
      }
    }
  }
}

TEST_CASE("classification is invariant under conjugation") {
  const struct {
    const char* group;
    int rounds;
  } plan[] = {{"G2", 10}, {"F4", 8}, {"D4", 8}, {"E6", 4}, {"E7", 3}, {"E8", 2}};
  std::mt19937 rng(101);
  for (const auto& pl : plan) {
    const RootSystem& rs = cached_root_system(pl.group);
    const RepModule& ad = cached_module(pl.group, "adjoint");
    for (int round = 0; round < pl.rounds; ++round) {
      GeneratorWord u = random_unit(rs, rng, 6);
      GeneratorWord check = u;
      GeneratorWord uinv = inverse_word(u);
      check.terms.insert(check.terms.end(), uinv.terms.begin(), uinv.terms.end());
      REQUIRE(is_identity(evaluate_word_at(ad, check, 0)));

      const auto& c2rows = class_table(pl.group, true);
      const ClassRecord& r2 = c2rows[round % c2rows.size()];
      CHECK(classify_involution(pl.group, 2, conjugate(u, parse_word(r2.rep))) == r2.label);

      const auto& oddrows = class_table(pl.group, false);
      const ClassRecord& r0 = oddrows[round % oddrows.size()];
      CHECK(classify_involution(pl.group, 0, conjugate(u, parse_word(r0.rep))) == r0.label);
    }
  }
}

TEST_CASE("coefficient signs are invisible at characteristic two") {
  GeneratorWord w = parse_word("x(1,-1)*x(4,-1)");
  CHECK(classify_involution("F4", 2, w) == "A1~A1");
  CHECK(classify_involution("E8", 2, parse_word("x(1,-1)")) == "A1");
}

TEST_CASE("adjoint fixed dimensions tabulated for odd characteristic") {
  std::set<int> e7;
  for (const ClassRecord& r : class_table("E7", false)) e7.insert(r.adjoint_data);
  CHECK(e7 == std::set<int>{69, 79, 63});
  std::set<int> e8;
  for (const ClassRecord& r : class_table("E8", false)) e8.insert(r.adjoint_data);
  CHECK(e8 == std::set<int>{136, 120});
}

TEST_CASE("jordan data formatting") {
  CHECK(format_jordan(JordanType{8, true, 2, 0, 0}) == "(2^2,1^4)");
  CHECK(format_jordan(JordanType{8, true, 4, 0, 0}) == "(2^4)");
  CHECK(format_jordan(JordanType{8, true, 0, 0, 0}) == "(1^8)");
  CHECK(format_jordan(JordanType{7, false, 0, 3, 4}) == "(+3,-4)");
}

TEST_CASE("jordan data rejects non-involutions") {
  const RepModule& ad = cached_module("G2", "adjoint");
  CHECK_THROWS_AS(jordan_partition(evaluate_word_at(ad, parse_word("x(1,2)"), 0), 0),
                  std::domain_error);
  CHECK_THROWS_AS(jordan_partition(evaluate_word_at(ad, parse_word("n(1)"), 0), 0),
                  std::domain_error);
  CHECK_NOTHROW(jordan_partition(evaluate_word_at(ad, parse_word("x(1,1)"), 2), 2));
}

TEST_CASE("order of a word modulo the center") {
  CHECK(involution_kind("E7", parse_word("h(1,-1)"), 0) == InvolutionKind::involution);
  CHECK(involution_kind("E7", parse_word("n(2)*n(5)*n(7)"), 0) ==
        InvolutionKind::order4_central_square);
  CHECK(involution_kind("E7", parse_word("h(1,-1)*n(2)*n(5)*n(7)"), 0) ==
        InvolutionKind::order4_central_square);
  CHECK(involution_kind("E7", parse_word("h(2,-1)*h(5,-1)*h(7,-1)"), 0) ==
        InvolutionKind::involution);
  CHECK(involution_kind("G2", parse_word("x(1,2)"), 0) == InvolutionKind::neither);
  CHECK(involution_kind("G2", parse_word("x(1,1)"), 2) == InvolutionKind::involution);
  CHECK(involution_kind("E6", parse_word("h(2,-1)"), 0) == InvolutionKind::involution);
  CHECK(involution_kind("E8", parse_word("n(1)"), 0) == InvolutionKind::neither);
}

TEST_CASE("classification refuses words that are not involutions mod center") {
  CHECK_THROWS_AS(classify_involution("G2", 0, parse_word("x(1,1)")), std::domain_error);
  CHECK_THROWS_AS(classify_involution("E6", 0, parse_word("n(1)")), std::domain_error);
}

TEST_CASE("diagram symmetries permute the involution classes as tabulated") {
  const RootSystem& f4 = cached_root_system("F4");
  auto psi_label = [&](const char* rep) {
    return classify_involution("F4", 2, apply_symmetry(f4, parse_word(rep), 'p'));
  };
  CHECK(psi_label("x(1,1)") == "~A1");
  CHECK(psi_label("x(4,1)") == "A1");
  CHECK(psi_label("x(1,1)*x(4,1)") == "A1~A1");

  const RootSystem& e6 = cached_root_system("E6");
  auto tau_label = [&](const char* rep) {
    return classify_involution("E6", 2, apply_symmetry(e6, parse_word(rep), 't'));
  };
  for (const ClassRecord& r : class_table("E6", true)) {
    CHECK(r.tau_invariant);
    CHECK(tau_label(r.rep.c_str()) == r.label);
  }

  const RootSystem& d4 = cached_root_system("D4");
  CHECK(classify_involution(
            "D4", 2, apply_symmetry(d4, parse_word("x(1,1)*x(3,1)*x(4,1)"), 't')) == "A1^3");

  CHECK_THROWS(apply_symmetry(f4, parse_word("x(5,1)"), 'p'));
  CHECK_THROWS(apply_symmetry(f4, parse_word("x(1,1)"), 't'));
}

TEST_CASE("the isogeny symmetry squares short-root parameters") {
  const RootSystem& f4 = cached_root_system("F4");
  GeneratorWord w = apply_symmetry(f4, parse_word("x(4,3)*x(1,3)*h(3,5)"), 'p');
  CHECK(format_word(w) == "x(1,9)*x(4,3)*h(2,25)");
}

TEST_CASE("classes meeting the finite fixed-point groups") {
  ClassMeet g2n = classes_meeting_finite_group("G2", 2, 'n');
  CHECK(g2n.labels == std::vector<std::string>{"~A1", "A1"});
  REQUIRE(g2n.advisories.size() == 1);
  CHECK(g2n.advisories[0].find("G2(2)'") != std::string::npos);

  ClassMeet g2p = classes_meeting_finite_group("G2", 3, 'p');
  CHECK(g2p.labels == std::vector<std::string>{"A1~A1"});
  REQUIRE(g2p.advisories.size() == 1);
  CHECK(g2p.advisories[0].find("2G2(3)'") != std::string::npos);

  ClassMeet f4p = classes_meeting_finite_group("F4", 2, 'p');
  CHECK(f4p.labels == std::vector<std::string>{"A1~A1", "(~A1)2"});
  REQUIRE(f4p.advisories.size() == 1);
  CHECK(f4p.advisories[0].find("2F4(2)'") != std::string::npos);

  ClassMeet e6t = classes_meeting_finite_group("E6", 2, 't');
  CHECK(e6t.labels.size() == 3);
  CHECK(e6t.advisories.empty());

  ClassMeet d4t = classes_meeting_finite_group("D4", 2, 't');
  CHECK(d4t.labels.size() == 2);

  CHECK(classes_meeting_finite_group("E7", 3, 'n').labels.size() == 3);

  CHECK_THROWS_AS(classes_meeting_finite_group("E7", 2, 't'), std::invalid_argument);
  CHECK_THROWS_AS(classes_meeting_finite_group("G2", 2, 'p'), std::invalid_argument);
  CHECK_THROWS_AS(classes_meeting_finite_group("F4", 3, 'p'), std::invalid_argument);
  CHECK_THROWS_AS(classes_meeting_finite_group("F4", 2, 'x'), std::invalid_argument);
}

TEST_CASE("matrix commutation") {
  const RepModule& ad = cached_module("F4", "adjoint");
  CHECK(commutes(ad, parse_word("h(1,-1)"), parse_word("h(2,-1)"), 0));
  CHECK(commutes(ad, parse_word("h(1,-1)"), parse_word("h(2,-1)"), 3));
  const RepModule& g2 = cached_module("G2", "adjoint");
  CHECK(!commutes(g2, parse_word("x(1,1)"), parse_word("x(-1,1)"), 0));
  CHECK(commutes(g2, parse_word("x(1,1)"), parse_word("x(1,1/2)"), 0));
}
