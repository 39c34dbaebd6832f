#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chev/repmod.hpp"
#include "chev/rootsys.hpp"
#include "chev/word.hpp"

namespace chev {

// Structure constants N_{alpha,beta} of the Chevalley basis, built by
// the extraspecial-pair method with positive signs on extraspecial
// pairs.  The positive-positive table is stored; mixed-sign values are
// derived on demand from the standard symmetry relations.
struct StructureConstants {
  std::string group;
  int npos = 0;
  std::vector<int8_t> tab;                       // npos x npos, N_{a,b} for positive a,b
  std::vector<std::pair<int, int>> extraspecial;  // per positive root, (0,0) for simples

  int postab(int a, int b) const { return tab[size_t(a - 1) * npos + (b - 1)]; }
};

StructureConstants compute_structure_constants(const RootSystem& rs);

// N_{a,b} for any signed pair; 0 when a+b is zero or not a root
int nconst(const RootSystem& rs, const StructureConstants& sc, int a, int b);

// Exhaustive consistency of the table: |N| = pbar+1, antisymmetry,
// opposite-pair symmetry, the zero-sum ratio identities, the Jacobi
// identity on all root triples, and the coroot-pairing identity.
// Returns an empty string on success, else the first failure.
std::string verify_structure_constants(const RootSystem& rs, const StructureConstants& sc);

// The Lie algebra as a module over itself: basis e_1..e_N, h_1..h_l,
// e_{-1}..e_{-N}; dimension |Phi| + rank.
RepModule adjoint_module(const RootSystem& rs, const StructureConstants& sc);

struct RelationReport {
  bool ok = true;
  std::string first_failure;
  int roots_checked = 0;
  long pairs_checked = 0;
};

// Matrix-level verification on a module carrying the basis action:
// w_a(1)^2 = h_a(-1), h_a(s)h_a(t) = h_a(st), h_{-a}(t) = h_a(1/t) for
// every root, and the commutator formula (x_a(1), x_b(1)) =
// prod x_{ia+jb}(C_ij) with integer C and C_11 = N_{a,b}, for
// non-opposite root pairs.  pair_cap < 0 checks every pair; otherwise
// low-height pairs are checked exhaustively and the rest are strided
// down to the cap.
RelationReport verify_chevalley_relations(const RootSystem& rs, const StructureConstants& sc,
                                          const RepModule& m, long pair_cap = -1);

// process-wide caches (modules are immutable once built)
const StructureConstants& cached_structure_constants(const std::string& group);
const RepModule& cached_adjoint_module(const std::string& group);

}  // namespace chev
