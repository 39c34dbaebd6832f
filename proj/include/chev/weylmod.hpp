#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "chev/chevbasis.hpp"
#include "chev/repmod.hpp"
#include "chev/rootsys.hpp"

namespace chev {

// dim V(lambda) by the Weyl dimension formula; lambda in fundamental
// weight coordinates
mpz_class weyl_dim(const RootSystem& rs, const std::vector<int>& lambda);

struct WeightMult {
  std::vector<int> coords;  // fundamental weight coordinates
  mpz_class mult;
};

// all weights of V(lambda) with their multiplicities, by Freudenthal's
// recursion level by level below lambda; the zero-multiplicity
// candidates are pruned
std::vector<WeightMult> weight_multiplicities(const RootSystem& rs,
                                              const std::vector<int>& lambda);

// Minuscule highest-weight module at the given fundamental weight: the
// basis is the Weyl orbit of the weight, every root vector acts by
// single steps with signs +-1.  Covers the natural A_n and D_n modules
// and the 27 and 56 of E6 and E7.
RepModule build_minuscule(const RootSystem& rs, int fund);

// The 26 of F4 out of the 27 of E6, and the 7 of G2 out of the 8 of
// D4: fold the parent module along its diagram symmetry, saturate the
// integral span of the highest weight vector under divided powers, and
// rewrite the folded operators on that basis.  The folded subalgebra
// fixes a complementary line of the parent over the rationals.
RepModule build_folded(const std::string& group);

// same lattice and operators, coefficients taken mod p (p = 0 back to
// the rationals); p must be 0 or prime
RepModule specialize(const RepModule& m, long p);

// entries of every generator part must shift weights by the root:
// wt(row) - wt(col) = k * root for the k-th divided power.  Empty
// string when the module passes.
std::string check_weight_shifts(const RootSystem& rs, const RepModule& m);

// process-wide module cache: name is adjoint, vmin, or natural
const RepModule& cached_module(const std::string& group, const std::string& name);

}  // namespace chev
