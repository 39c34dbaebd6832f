#pragma once

#include <string>
#include <vector>

#include "chev/repmod.hpp"
#include "chev/rootsys.hpp"
#include "chev/word.hpp"

namespace chev {

// Jordan data of an element of order at most 2.  At p = 2 the shape is
// (2^r, 1^{n-2r}) with r = rank(g - 1); at odd characteristic (or over
// the rationals) the element is diagonalizable and the +-1 eigenspace
// dimensions carry the same information.
struct JordanType {
  int dim = 0;
  bool char2 = false;
  int two_blocks = 0;  // r, char-2 shape only
  int d_plus = 0;      // fixed-space dimension, odd shape only
  int d_minus = 0;
};

// "(2^r,1^s)" or "(+a,-b)"
std::string format_jordan(const JordanType& t);

// One row of the embedded involution-class tables.  Module data is the
// number of 2-blocks for p = 2 and the fixed-space dimension otherwise;
// vmin covers the minimal module of the group (the natural 8 for D4)
// and is empty where the tables leave the column blank.  The E7 A1D6
// row keeps both values realized by the two lifts to the simply
// connected group, which differ by the central -1 on the 56.
struct ClassRecord {
  std::string group;
  bool char2 = false;
  std::string label;
  std::string rep;               // representative generator word
  std::vector<int> vmin_data;
  int adjoint_data = -1;
  bool tau_invariant = false;
  bool psi_invariant = false;
  bool derived = false;  // computed here rather than tabulated
};

inline constexpr int kClassTableSchema = 1;

// every embedded row for the group at the given characteristic parity
const std::vector<ClassRecord>& class_table(const std::string& group, bool char2);

// name of the group's minimal module as served by cached_module, or ""
// when the tables only use the adjoint (E8)
std::string minimal_module_name(const std::string& group);

enum class InvolutionKind { involution, order4_central_square, neither };

// Order of the word modulo the center, decided on a faithful module:
// the minimal module for E6 and E7, the adjoint elsewhere.  Squares
// that land on a noncentral matrix, or on a scalar that is not an
// involution itself, come back as `neither`.
InvolutionKind involution_kind(const std::string& group, const GeneratorWord& w, long p);

// Jordan data of an involution; throws std::domain_error when g^2 != 1
// on the module.
JordanType jordan_partition(const ExactMatrix& g, long p);

// Class label of an involution (mod center), matched against the
// embedded tables: the natural module decides for D4, the minimal
// module joins the adjoint for G2 and F4 at p = 2, and the adjoint
// fixed-space dimension suffices everywhere else.  Throws
// std::domain_error when the word is not an involution mod center or
// no row matches.
std::string classify_involution(const std::string& group, long p, const GeneratorWord& w);

struct ClassMeet {
  std::vector<std::string> labels;
  std::vector<std::string> advisories;
};

// Class labels meeting the finite fixed-point group of the given twist
// ('n' untwisted, 't' graph, 'p' exceptional isogeny): every label when
// untwisted, the tau/psi-invariant ones otherwise.  Advisories flag the
// small-field cases where the derived subgroup is proper and the
// general statement needs care.  Throws std::invalid_argument for a
// twist the type (or characteristic) does not admit.
ClassMeet classes_meeting_finite_group(const std::string& group, long p, char twist);

// Image of a word under a diagram symmetry ('t' or 'p').  Only words in
// simple-root generators are in the domain; psi squares the parameter
// on the short-root generators.
GeneratorWord apply_symmetry(const RootSystem& rs, const GeneratorWord& w, char kind);

// matrix commutation test after evaluating both words at p
bool commutes(const RepModule& m, const GeneratorWord& a, const GeneratorWord& b, long p);

}  // namespace chev
