#include "chev/involutions.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "chev/weylmod.hpp"

namespace chev {

namespace {

// Embedded class tables.  For char2 rows the module columns hold the
// number r of 2-blocks of the Jordan shape (2^r, 1^{n-2r}); for odd
// rows the fixed-space dimension.  The D4 adjoint numbers at p = 2 and
// the whole odd D4 row are computed from the representatives rather
// than tabulated; they are marked derived.
std::vector<ClassRecord> all_rows() {
  std::vector<ClassRecord> t;
  auto add = [&t](const char* g, bool c2, const char* label, const char* rep,
                  std::vector<int> vmin, int adj, bool tau, bool psi, bool derived = false) {
    t.push_back({g, c2, label, rep, std::move(vmin), adj, tau, psi, derived});
  };
  // p = 2
  add("G2", true, "~A1", "x(1,1)", {3}, 6, false, false);
  add("G2", true, "A1", "x(2,1)", {2}, 6, false, false);
  add("F4", true, "A1", "x(1,1)", {6}, 16, false, false);
  add("F4", true, "~A1", "x(4,1)", {10}, 16, false, false);
  add("F4", true, "A1~A1", "x(1,1)*x(4,1)", {12}, 24, false, true);
  add("F4", true, "(~A1)2", "x(6,1)*x(9,1)", {10}, 21, false, true);
  add("E6", true, "A1", "x(2,1)", {6}, 22, true, false);
  add("E6", true, "A1^2", "x(1,1)*x(6,1)", {10}, 32, true, false);
  add("E6", true, "A1^3", "x(1,1)*x(2,1)*x(6,1)", {12}, 38, true, false);
  add("E7", true, "A1", "x(1,1)", {12}, 34, false, false);
  add("E7", true, "A1^2", "x(1,1)*x(2,1)", {20}, 52, false, false);
  add("E7", true, "(A1^3)(1)", "x(2,1)*x(5,1)*x(7,1)", {28}, 53, false, false);
  add("E7", true, "(A1^3)(2)", "x(3,1)*x(5,1)*x(7,1)", {24}, 62, false, false);
  add("E7", true, "A1^4", "x(2,1)*x(3,1)*x(5,1)*x(7,1)", {28}, 63, false, false);
  add("E8", true, "A1", "x(1,1)", {}, 58, false, false);
  add("E8", true, "A1^2", "x(1,1)*x(4,1)", {}, 92, false, false);
  add("E8", true, "A1^3", "x(1,1)*x(4,1)*x(6,1)", {}, 110, false, false);
  add("E8", true, "A1^4", "x(1,1)*x(4,1)*x(6,1)*x(8,1)", {}, 120, false, false);
  add("D4", true, "A1", "x(1,1)", {2}, 10, true, false, true);
  add("D4", true, "A1^3", "x(1,1)*x(3,1)*x(4,1)", {4}, 12, true, false, true);
  // p odd
  add("G2", false, "A1~A1", "h(1,-1)*h(2,-1)", {3}, 6, false, true);
  add("F4", false, "A1C3", "h(1,-1)", {14}, 24, false, false);
  add("F4", false, "B4", "h(4,-1)", {10}, 36, false, false);
  add("E6", false, "A1A5", "h(2,-1)", {15}, 38, true, false);
  add("E6", false, "D5T1", "h(1,-1)*h(6,-1)", {11}, 46, true, false);
  add("E7", false, "A1D6", "h(1,-1)", {32, 24}, 69, false, false);
  add("E7", false, "E6T1", "n(2)*n(5)*n(7)", {0}, 79, false, false);
  add("E7", false, "A7", "h(1,-1)*n(2)*n(5)*n(7)", {0}, 63, false, false);
  add("E8", false, "A1E7", "h(1,-1)", {}, 136, false, false);
  add("E8", false, "D8", "h(1,-1)*h(2,-1)", {}, 120, false, false);
  add("D4", false, "A1^4", "h(2,-1)", {4}, 12, true, false, true);
  return t;
}

const std::vector<ClassRecord>& rows_for(const std::string& group, bool char2) {
  static std::mutex mu;
  static std::map<std::pair<std::string, bool>, std::vector<ClassRecord>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(group, char2);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<ClassRecord> sel;
  for (const auto& r : all_rows())
    if (r.group == group && r.char2 == char2) sel.push_back(r);
  if (sel.empty()) throw std::invalid_argument("no involution table for " + group);
  return cache.emplace(key, std::move(sel)).first->second;
}

std::string faithful_module_name(const std::string& group) {
  return (group == "E6" || group == "E7") ? "vmin" : "adjoint";
}

}  // namespace

const std::vector<ClassRecord>& class_table(const std::string& group, bool char2) {
  return rows_for(group, char2);
}

std::string minimal_module_name(const std::string& group) {
  if (group == "D4") return "natural";
  if (group == "E8") return "";
  return "vmin";
}

std::string format_jordan(const JordanType& t) {
  std::string s = "(";
  if (t.char2) {
    int ones = t.dim - 2 * t.two_blocks;
    if (t.two_blocks > 0) s += "2^" + std::to_string(t.two_blocks);
    if (t.two_blocks > 0 && ones > 0) s += ",";
    if (ones > 0 || t.two_blocks == 0) s += "1^" + std::to_string(ones);
  } else {
    s += "+" + std::to_string(t.d_plus) + ",-" + std::to_string(t.d_minus);
  }
  return s + ")";
}

InvolutionKind involution_kind(const std::string& group, const GeneratorWord& w, long p) {
  const RepModule& m = cached_module(group, faithful_module_name(group));
  ExactMatrix g = evaluate_word_at(m, w, p);
  ExactMatrix g2 = exact_mul(g, g);
  if (is_identity(g2)) return InvolutionKind::involution;
  if (is_scalar_matrix(g2) && is_identity(exact_mul(g2, g2)))
    return InvolutionKind::order4_central_square;
  return InvolutionKind::neither;
}

JordanType jordan_partition(const ExactMatrix& g, long p) {
  if (!is_identity(exact_mul(g, g))) throw std::domain_error("jordan data needs an involution");
  JordanType t;
  t.dim = exact_rows(g);
  t.char2 = (p == 2);
  if (t.char2) {
    t.two_blocks = t.dim - fixed_dim(g);
  } else {
    t.d_plus = fixed_dim(g);
    t.d_minus = t.dim - t.d_plus;
  }
  return t;
}

std::string classify_involution(const std::string& group, long p, const GeneratorWord& w) {
  if (involution_kind(group, w, p) == InvolutionKind::neither)
    throw std::domain_error("not an involution modulo the center: " + format_word(w));
  const bool c2 = (p == 2);
  const auto& rows = rows_for(group, c2);

  // which columns decide: the natural module for D4, both for G2 and
  // F4 when p = 2, the adjoint alone otherwise
  bool use_vmin = false, use_adjoint = true;
  if (c2) {
    if (group == "D4") {
      use_vmin = true;
      use_adjoint = false;
    } else if (group == "G2" || group == "F4") {
      use_vmin = true;
    }
  }

  int vdat = -1, adat = -1;
  if (use_vmin) {
    const RepModule& m = cached_module(group, minimal_module_name(group));
    ExactMatrix g = evaluate_word_at(m, w, p);
    vdat = c2 ? m.dim - fixed_dim(g) : fixed_dim(g);
  }
  if (use_adjoint) {
    const RepModule& m = cached_module(group, "adjoint");
    ExactMatrix g = evaluate_word_at(m, w, p);
    adat = c2 ? m.dim - fixed_dim(g) : fixed_dim(g);
  }

  const ClassRecord* hit = nullptr;
  for (const auto& r : rows) {
    if (use_vmin) {
      bool in = false;
      for (int v : r.vmin_data) in = in || (v == vdat);
      if (!in) continue;
    }
    if (use_adjoint && r.adjoint_data != adat) continue;
    if (hit) throw std::logic_error("involution tables are ambiguous for " + group);
    hit = &r;
  }
  if (!hit)
    throw std::domain_error("no involution class of " + group + " matches " + format_word(w));
  return hit->label;
}

ClassMeet classes_meeting_finite_group(const std::string& group, long p, char twist) {
  const bool c2 = (p == 2);
  const auto& rows = rows_for(group, c2);
  if (twist != 'n' && twist != 't' && twist != 'p')
    throw std::invalid_argument("twist must be one of n, t, p");
  if (twist == 't' && group != "D4" && group != "E6")
    throw std::invalid_argument("no graph symmetry of order > 1 acts on " + group);
  if (twist == 'p' && !((group == "G2" && p == 3) || (group == "F4" && p == 2)))
    throw std::invalid_argument("the exceptional isogeny needs (G2, p = 3) or (F4, p = 2)");

  ClassMeet out;
  for (const auto& r : rows) {
    if (twist == 't' && !r.tau_invariant) continue;
    if (twist == 'p' && !r.psi_invariant) continue;
    out.labels.push_back(r.label);
  }
  if (group == "G2" && twist == 'n' && c2)
    out.advisories.push_back(
        "q = 2 has a proper derived subgroup G2(2)' with a single class of involutions (long "
        "root elements)");
  if (group == "G2" && twist == 'p')
    out.advisories.push_back(
        "q = 3 has a proper derived subgroup 2G2(3)' with a single class of involutions");
  if (group == "F4" && twist == 'p')
    out.advisories.push_back(
        "q = 2 has a proper derived subgroup 2F4(2)'; both classes still meet it");
  return out;
}

GeneratorWord apply_symmetry(const RootSystem& rs, const GeneratorWord& w, char kind) {
  DynkinSymmetry sym = dynkin_symmetry(rs, kind);
  GeneratorWord out;
  out.terms.reserve(w.terms.size());
  for (const GenTerm& t : w.terms) {
    int a = std::abs(t.index);
    if (a < 1 || a > rs.rank)
      throw std::invalid_argument("diagram symmetries act on simple-root generators only");
    GenTerm img = t;
    img.index = (t.index < 0 ? -sym.simple_map[a] : sym.simple_map[a]);
    if (sym.squares[a] && (t.kind == 'x' || t.kind == 'h')) img.coeff = t.coeff * t.coeff;
    out.terms.push_back(std::move(img));
  }
  return out;
}

bool commutes(const RepModule& m, const GeneratorWord& a, const GeneratorWord& b, long p) {
  ExactMatrix ga = evaluate_word_at(m, a, p);
  ExactMatrix gb = evaluate_word_at(m, b, p);
  return exact_eq(exact_mul(ga, gb), exact_mul(gb, ga));
}

}  // namespace chev
