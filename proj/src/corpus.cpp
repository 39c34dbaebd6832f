#include "chev/corpus.hpp"

#include <algorithm>
#include <stdexcept>

#include "chev/involutions.hpp"
#include "chev/weylmod.hpp"

namespace chev {

namespace {

std::vector<CorpusEntry> all_entries() {
  std::vector<CorpusEntry> t;
  auto add = [&t](const char* id, const char* group, long p, const char* module,
                  const char* word, const char* check, int dim, const char* text,
                  const char* note) {
    t.push_back({id, group, p, module, word, check, dim, text, note});
  };
  // characteristic 2
  add("g2-class-short", "G2", 2, "", "x(1,1)", "class", -1, "~A1",
      "short root element");
  add("g2-class-long", "G2", 2, "", "x(2,1)", "class", -1, "A1",
      "long root element");
  add("f4-mixed-pair-vmin", "F4", 2, "vmin", "x(1,1)*x(4,1)", "fixed-dim", 14, "",
      "commuting product of a long and a short root element on the "
      "26-dimensional module");
  add("f4-mixed-pair-adjoint", "F4", 2, "adjoint", "x(1,1)*x(4,1)", "fixed-dim",
      28, "", "");
  add("f4-quad-jordan", "F4", 2, "adjoint", "n(1)*n(3)*n(14)*n(21)", "jordan2",
      -1, "(2^24,1^4)",
      "lift of the longest Weyl element from four pairwise orthogonal roots");
  add("f4-class-long", "F4", 2, "", "n(1)", "class", -1, "A1", "");
  add("f4-class-short", "F4", 2, "", "n(4)", "class", -1, "~A1", "");
  add("f4-class-mixed", "F4", 2, "", "n(1)*n(4)", "class", -1, "A1~A1", "");
  add("f4-class-short-pair", "F4", 2, "", "n(6)*n(3)", "class", -1, "(~A1)2",
      "lifts of two short roots with short sum");
  add("d4-quad-jordan", "D4", 2, "natural", "n(1)*n(3)*n(4)", "jordan2", -1,
      "(2^4)", "lift of the longest Weyl element of D4");
  add("d4-quad-class", "D4", 2, "", "n(1)*n(3)*n(4)", "class", -1, "A1^3", "");
  // characteristic 0: E7
  add("e7-torus-adjoint", "E7", 0, "adjoint", "h(1,-1)", "fixed-dim", 69, "", "");
  add("e7-weyl-adjoint", "E7", 0, "adjoint", "n(2)*n(5)*n(7)", "fixed-dim", 79,
      "", "squares to the central involution of the simply connected group");
  add("e7-torus-weyl-adjoint", "E7", 0, "adjoint", "h(1,-1)*n(2)*n(5)*n(7)",
      "fixed-dim", 63, "", "");
  add("e7-class-torus", "E7", 0, "", "h(1,-1)", "class", -1, "A1D6", "");
  add("e7-class-weyl", "E7", 0, "", "n(2)*n(5)*n(7)", "class", -1, "E6T1", "");
  add("e7-class-torus-weyl", "E7", 0, "", "h(1,-1)*n(2)*n(5)*n(7)", "class", -1,
      "A7", "");
  add("e7-torus-triple", "E7", 0, "adjoint", "h(2,-1)*h(3,-1)*h(5,-1)",
      "fixed-dim", 69, "", "");
  add("e7-torus-six", "E7", 0, "adjoint",
      "h(7,-1)*h(63,-1)*h(49,-1)*h(2,-1)*h(3,-1)*h(5,-1)", "fixed-dim", 69, "",
      "the first three factors multiply to the central element, so the "
      "product lies in the class of the last three");
  add("e7-center-vmin", "E7", 0, "vmin", "h(2,-1)*h(5,-1)*h(7,-1)", "scalar",
      -1, "-1", "central involution of the simply connected group");
  add("e7-center-orth-vmin", "E7", 0, "vmin", "h(7,-1)*h(63,-1)*h(49,-1)",
      "scalar", -1, "-1",
      "coroot involutions of alpha7, the highest root and the highest root "
      "of the D6 subsystem also give the centre");
  add("e7-wlift-commutes-weyl", "E7", 0, "vmin",
      "n(1)*n(2)*n(5)*n(7)*n(37)*n(55)*n(61)", "commutes-weyl", -1, "all",
      "lift of the longest Weyl element from seven pairwise orthogonal "
      "roots; central in the extended Weyl group");
  add("e7-wlift-commutes-torus", "E7", 0, "vmin",
      "n(1)*n(2)*n(5)*n(7)*n(37)*n(55)*n(61)", "commutes-torus", -1, "all", "");
  add("e7-h2-adjoint", "E7", 0, "adjoint", "h(2,-1)", "fixed-dim", 69, "", "");
  add("e7-mixed-product-adjoint", "E7", 0, "adjoint",
      "h(2,-1)*n(2)*n(28)*n(38)*n(46)*n(1)*n(2)*n(5)*n(7)*n(37)*n(55)*n(61)",
      "fixed-dim", 79, "",
      "torus involution times two commuting lifts of involutory Weyl "
      "elements");
  add("e7-wlift-adjoint", "E7", 0, "adjoint",
      "n(1)*n(2)*n(5)*n(7)*n(37)*n(55)*n(61)", "fixed-dim", 63, "", "");
  // characteristic 0: E8
  add("e8-refl-octuple-adjoint", "E8", 0, "adjoint",
      "n(1)*n(2)*n(5)*n(7)*n(44)*n(71)*n(89)*n(120)", "fixed-dim", 120, "",
      "lift of the longest Weyl element from eight pairwise orthogonal "
      "roots");
  add("e8-refl-octuple-class", "E8", 0, "",
      "n(1)*n(2)*n(5)*n(7)*n(44)*n(71)*n(89)*n(120)", "class", -1, "D8", "");
  add("e8-asq-adjoint", "E8", 0, "adjoint",
      "h(2,-1)*n(2)*n(5)*h(2,-1)*n(2)*n(5)", "fixed-dim", 120, "",
      "square of a torus involution times a commuting rank-2 Weyl lift");
  add("e8-absq-adjoint", "E8", 0, "adjoint",
      "h(2,-1)*n(2)*n(5)*n(4)*n(17)*h(2,-1)*n(2)*n(5)*n(4)*n(17)", "fixed-dim",
      136, "", "");
  add("e8-torus-pair-adjoint", "E8", 0, "adjoint", "h(1,-1)*h(6,-1)",
      "fixed-dim", 120, "", "");
  add("e8-torus-quad-adjoint", "E8", 0, "adjoint",
      "h(1,-1)*h(4,-1)*h(6,-1)*h(8,-1)", "fixed-dim", 120, "", "");
  add("e8-mixed-inv-adjoint", "E8", 0, "adjoint",
      "h(1,-1)*h(4,-1)*n(1)*n(4)*n(18)*n(44)", "fixed-dim", 136, "", "");
  add("e8-t1-adjoint", "E8", 0, "adjoint", "h(1,-1)", "fixed-dim", 136, "", "");
  add("e8-t12-adjoint", "E8", 0, "adjoint", "h(1,-1)*h(2,-1)", "fixed-dim", 120,
      "", "");
  add("e8-class-t1", "E8", 0, "", "h(1,-1)", "class", -1, "A1E7", "");
  add("e8-class-t12", "E8", 0, "", "h(1,-1)*h(2,-1)", "class", -1, "D8", "");
  return t;
}

std::string mismatch(const CorpusEntry& e, const std::string& expected,
                     const std::string& got) {
  return e.id + ": expected " + expected + " got " + got;
}

std::string run_commute_sweep(const CorpusEntry& e, long p, char gen) {
  const auto& m = cached_module(e.group, e.module);
  const auto& rs = cached_root_system(e.group);
  auto w = parse_word(e.word);
  for (int i = 1; i <= rs.npos; ++i) {
    std::string other = gen == 'n' ? "n(" + std::to_string(i) + ")"
                                   : "h(" + std::to_string(i) + ",-1)";
    if (!commutes(m, w, parse_word(other), p))
      return e.id + ": does not commute with " + other;
  }
  return "";
}

std::string run_at(const CorpusEntry& e, long p) {
  if (e.check == "class") {
    auto got = classify_involution(e.group, p, parse_word(e.word));
    return got == e.expect_text ? "" : mismatch(e, e.expect_text, got);
  }
  if (e.check == "commutes-weyl") return run_commute_sweep(e, p, 'n');
  if (e.check == "commutes-torus") return run_commute_sweep(e, p, 'h');
  const auto& m = cached_module(e.group, e.module);
  auto g = evaluate_word_at(m, parse_word(e.word), p);
  if (e.check == "fixed-dim") {
    int got = fixed_dim(g);
    return got == e.expect_dim
               ? ""
               : mismatch(e, std::to_string(e.expect_dim), std::to_string(got));
  }
  if (e.check == "jordan2") {
    auto got = format_jordan(jordan_partition(g, p));
    return got == e.expect_text ? "" : mismatch(e, e.expect_text, got);
  }
  if (e.check == "scalar") {
    std::string got;
    if (!is_scalar_matrix(g, &got)) return e.id + ": not a scalar matrix";
    return got == e.expect_text ? "" : mismatch(e, e.expect_text, got);
  }
  throw std::invalid_argument("unknown corpus check " + e.check);
}

std::vector<ElusiveRow> all_elusive_rows() {
  std::vector<ElusiveRow> t;
  auto add = [&t](char table, const char* socle, const char* h0,
                  const char* conditions) {
    t.push_back({socle, h0, conditions, table});
  };
  add('A', "2F4", "3^(1+2):D8, 13:6", "q = 2, G = T.2");
  add('A', "2F4", "PGU3(q).2, SU3(q).2, (q+1)^2:GL2(3)", "q >= 8");
  add('A', "2F4", "(q^2 +- sqrt(2q^3) + q +- sqrt(2q) + 1):12", "q >= 8");
  add('A', "3D4", "(q^4-q^2+1).4, (q^2+-q+1)^2.SL2(3)", "p = 2");
  add('A', "3D4", "PGL3^eps(q)", "p = 2, q >= 4, q = eps mod 3");
  add('A', "F4", "3D4(q).3", "p >= 3");
  add('A', "F4", "PGL2(q)", "p >= 13");
  add('A', "F4", "G2(q)", "p = 7");
  add('A', "F4", "ASL3(3)", "q = p >= 5");
  add('A', "F4", "2F4(q0)", "q = q0^2, q0 = 2^a, a >= 1 odd");
  add('A', "F4", "(SL3^eps(q) o SL3^eps(q)).e.2", "p = 2, e = (3,q-eps)");
  add('A', "F4", "Sp4(q^2).2", "p = 2, graphs");
  add('A', "F4", "(q^2+eps*q+1)^2.(3 x SL2(3))",
      "p = 2, graphs, q >= 4 if eps = -");
  add('A', "F4", "(q^4-q^2+1).12, (q^2+1)^2.(SL2(3):4)", "p = 2, graphs, q >= 4");
  add('A', "E6", "L3^eps(q^3).3, G2(q), (3D4(q) x (q^2+eps*q+1)/e).3", "");
  add('A', "E6", "(q^2+eps*q+1)^3/e.(3^(1+2).SL2(3))", "");
  add('A', "E6", "PGL3^+-(q).2", "p >= 5, q = eps mod 4");
  add('A', "E6", "3^(3+3):SL3(3)", "q = p >= 5, q = eps mod 3");
  add('A', "E7", "P2, P5, P7", "q = 3 mod 4");
  add('A', "E7", "(L2(q^3) x 3D4(q)).3, L2(q^7).7", "");
  add('A', "E7", "L2(q) x PGL2(q), PGL3^+-(q).2", "p >= 5");
  add('A', "E7", "3D4(q).3", "p >= 3");
  add('A', "E7", "L2(q)", "2 classes; p >= 17, 19");
  add('A', "E8", "SU5(q^2).4, PGU5(q^2).4, U3(q^2)^2.8, U3(q^4).8", "");
  add('A', "E8", "(q^4 +- q^3 + q^2 +- q + 1)^2.(5 x SL2(5))", "");
  add('A', "E8", "(q^8 +- q^7 -+ q^5 - q^4 -+ q^3 +- q + 1).30", "");
  add('A', "E8", "O8^+(q^2).(Sym3 x 2), 3D4(q^2).6, (q^2+q+1)^4.2.(3 x U4(2))",
      "p = 2");
  add('A', "E8", "(q^4-q^2+1)^2.(12 o GL2(3)), (q^2+1)^4.(4 o 2^(1+4)).Alt6.2",
      "p = 2");
  add('A', "E8", "(q^2-q+1)^4.2.(3 x U4(2))", "p = 2, q >= 4");
  add('A', "E8", "F4(q)", "p = 3");
  add('A', "E8", "SO5(q)", "p >= 5");
  add('A', "E8", "PGL2(q)", "3 classes; p >= 23, 29, 31");
  add('A', "E8", "ASL3(5)", "p != 2, 5");
  add('B', "G2", "J2", "q = 4");
  add('B', "G2", "J1", "q = 11");
  add('B', "G2", "U3(3).2", "q = p >= 5");
  add('B', "G2", "L2(13)",
      "q = p = +-1, +-3, +-4 mod 13, or q = p^2, p != 2, p = +-2, +-5, +-6 "
      "mod 13");
  add('B', "G2", "L2(8)",
      "q = p = +-1 mod 9, or q = p^3, p != 2, p = +-2, +-4 mod 9");
  add('B', "2F4", "Alt6.2^2", "q = 2, G = T");
  add('B', "F4", "L4(3).2_2", "q = 2");
  add('B', "F4", "3D4(2).3", "q = p >= 3");
  add('B', "E6", "2F4(2)", "q = p = eps mod 4, G = T");
  add('B', "E6", "O7(3)", "(eps,q) = (-,2), G = T.2");
  add('B', "E6", "Fi22", "(eps,q) = (-,2)");
  add('C', "E8", "Sym6, Alt6.2 ~= PGL2(9), Alt6.2^2", "p != 2, 5");
  add('C', "E8", "PGL2(r)", "(r,p) = (7,3), (11,5), (13,7)");
  add('C', "E8", "L3(3).2", "p = 13");
  return t;
}

std::string socle_family(const std::string& socle) {
  return socle == "2E6" ? "E6" : socle;
}

}  // namespace

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> t = all_entries();
  return t;
}

std::string run_corpus_entry(const CorpusEntry& entry) {
  return run_at(entry, entry.p);
}

std::string run_corpus_entry(const CorpusEntry& entry, long p_override) {
  return run_at(entry, p_override);
}

const std::vector<ElusiveRow>& elusive_rows() {
  static const std::vector<ElusiveRow> t = all_elusive_rows();
  return t;
}

bool valid_socle(const std::string& socle) {
  static const char* keys[] = {"2B2", "2G2", "G2", "3D4", "2F4",
                               "F4",  "E6",  "2E6", "E7", "E8"};
  return std::find(std::begin(keys), std::end(keys), socle) != std::end(keys);
}

std::vector<ElusiveRow> elusive_lookup(const std::string& socle,
                                       const std::string& filter) {
  if (!valid_socle(socle)) throw std::invalid_argument("unknown socle " + socle);
  std::vector<ElusiveRow> sel;
  for (const auto& r : elusive_rows()) {
    if (r.socle != socle_family(socle)) continue;
    if (!filter.empty() && r.h0.find(filter) == std::string::npos) continue;
    sel.push_back(r);
  }
  return sel;
}

std::string elusive_verdict(char table) {
  switch (table) {
    case 'A': return "not-2-elusive";
    case 'B': return "2-elusive";
    case 'C': return "conditional";
  }
  throw std::invalid_argument("unknown table");
}

std::vector<FactorSummary> example_factor_list() {
  return {
      {1, 5, 0, 0, true, true},  {1, 9, 0, 0, false, true},
      {6, 5, 0, 0, false, true}, {6, 3, 0, 0, false, true},
      {6, 3, 0, 0, false, true}, {7, 10, 1, 1, false, true},
      {7, 14, 0, 0, false, true},
  };
}

}  // namespace chev
