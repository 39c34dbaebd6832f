#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chev/matrix.hpp"
#include "chev/poly.hpp"
#include "chev/rootsys.hpp"

namespace chev {

// A Weyl group element as a permutation of the signed roots (slots of
// the RootSystem).  `word` is a product expression in simple
// reflections (1-based indices), kept for reporting.
struct WeylElem {
  std::vector<int32_t> perm;
  std::vector<int> word;

  bool operator==(const WeylElem& o) const { return perm == o.perm; }
};

// sigma acting on W by conjugation: untwisted ('n'), graph ('t'),
// or exceptional isogeny ('p').  froot is the induced permutation of
// the signed roots.
struct TwistSpec {
  char kind = 'n';
  std::vector<int32_t> froot;
};

struct SigmaClass {
  WeylElem rep;
  std::uint64_t size = 0;
};

struct SigmaClassSet {
  std::vector<SigmaClass> classes;
};

WeylElem weyl_identity(const RootSystem& rs);
// reflection in the alpha-th root (any root index, not only simple)
WeylElem reflection(const RootSystem& rs, int alpha);

int act(const RootSystem& rs, const WeylElem& w, int signed_root);
Root act(const RootSystem& rs, const WeylElem& w, const Root& r);

// (w*v)(x) = w(v(x)); words concatenate in the same order
WeylElem compose(const RootSystem& rs, const WeylElem& w, const WeylElem& v);
WeylElem inverse(const WeylElem& w);
int element_order(const WeylElem& w);
bool is_negation(const RootSystem& rs, const WeylElem& w);

// matrix of w on the root lattice (columns = images of the simples)
ZMat lattice_matrix(const RootSystem& rs, const WeylElem& w);

TwistSpec make_twist(const RootSystem& rs, char kind);

// Full enumeration; rank <= 4 only.
std::vector<WeylElem> enumerate_group(const RootSystem& rs);

// sigma-conjugacy classes x ~ g^-1 x sigma(g); rank <= 4 only.
SigmaClassSet sigma_classes(const RootSystem& rs, const TwistSpec& twist);

// C_{W,sigma}(w) = { x : x^-1 w sigma(x) = w }.  Full computation for
// rank <= 4; for larger ranks only the trivial central cases.
struct Centralizer {
  std::uint64_t order = 0;
  std::vector<WeylElem> gens;
};
Centralizer sigma_centralizer(const RootSystem& rs, const WeylElem& w, const TwistSpec& twist);

// |det(q F0 Mw - 1)| on the root lattice, and its polynomial in q.
mpz_class torus_order(const RootSystem& rs, const WeylElem& w, const TwistSpec& twist,
                      const mpz_class& q);
IPoly torus_order_poly(const RootSystem& rs, const WeylElem& w, const TwistSpec& twist);

// Membership structure for W on the signed roots (all ranks).
struct StabChain {
  struct Level {
    int base = 0;
    std::vector<int32_t> tvidx;               // slot -> transversal index, -1 outside orbit
    std::vector<std::vector<int32_t>> tperm;  // transversal elements u with u(base) = point
    std::vector<std::vector<int32_t>> gens;
  };
  int degree = 0;
  std::vector<Level> levels;

  std::uint64_t order() const;
  bool contains(const std::vector<int32_t>& perm) const;
};

StabChain stabilizer_chain(const RootSystem& rs);

// Same sigma-class test usable at every rank: a certified answer when
// the char-poly invariant separates x and y or a conjugator is found
// within `budget` orbit elements; nullopt when the budget runs out.
std::optional<bool> same_sigma_class(const RootSystem& rs, const WeylElem& x, const WeylElem& y,
                                     const TwistSpec& twist, std::uint64_t budget = 200000);

}  // namespace chev
