#include "chev/chevbasis.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace chev {

namespace {

// positive decompositions gamma = a + b with a < b, in increasing a
std::vector<std::pair<int, int>> special_pairs(const RootSystem& rs, int g) {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a < g; ++a) {
    std::vector<int> diff = rs.pos[g - 1];
    bool ok = true, zero = true;
    for (int k = 0; k < rs.rank; ++k) {
      diff[k] -= rs.pos[a - 1][k];
      if (diff[k] < 0) ok = false;
      if (diff[k] != 0) zero = false;
    }
    if (!ok || zero) continue;
    int b = rs.index_of(diff);
    if (b > a) out.push_back({a, b});
  }
  return out;
}

}  // namespace

int nconst(const RootSystem& rs, const StructureConstants& sc, int a, int b) {
  int s = rs.sum_index(a, b);
  if (s == 0) return 0;
  if (a > 0 && b > 0) return sc.postab(a, b);
  if (a < 0 && b < 0) return -nconst(rs, sc, -a, -b);
  if (a < 0) return -nconst(rs, sc, b, a);
  if (s < 0) return nconst(rs, sc, -b, -a);
  // a > 0, b < 0, a+b > 0: rescale through the zero-sum triple
  // (a, b, -s): N_{a,b} = -(s,s)/(a,a) N_{-b,s}
  long num = -(long)rs.length2(s) * nconst(rs, sc, -b, s);
  long den = rs.length2(a);
  if (num % den != 0) throw std::logic_error("structure constants: inexact length rescale");
  return int(num / den);
}

StructureConstants compute_structure_constants(const RootSystem& rs) {
  StructureConstants sc;
  sc.group = rs.label;
  sc.npos = rs.npos;
  sc.tab.assign(size_t(rs.npos) * rs.npos, 0);
  sc.extraspecial.assign(rs.npos, {0, 0});

  auto set = [&](int a, int b, long v) {
    if (v == 0 || std::abs(v) > 127) throw std::logic_error("structure constants: bad value");
    sc.tab[size_t(a - 1) * sc.npos + (b - 1)] = int8_t(v);
    sc.tab[size_t(b - 1) * sc.npos + (a - 1)] = int8_t(-v);
  };

  // increasing index = increasing height, so every N consumed by the
  // Jacobi step below is already in the table
  for (int g = rs.rank + 1; g <= rs.npos; ++g) {
    auto pairs = special_pairs(rs, g);
    if (pairs.empty()) throw std::logic_error("structure constants: indecomposable root");
    auto [a1, b1] = pairs[0];
    sc.extraspecial[g - 1] = pairs[0];
    set(a1, b1, rs.string_down(a1, b1) + 1);

    for (size_t i = 1; i < pairs.size(); ++i) {
      auto [a, b] = pairs[i];
      long t1 = 0, t2 = 0;
      if (int d = rs.sum_index(a, -a1); d != 0)
        t1 = (long)nconst(rs, sc, -a1, a) * nconst(rs, sc, d, b);
      if (int d = rs.sum_index(b, -a1); d != 0)
        t2 = (long)nconst(rs, sc, b, -a1) * nconst(rs, sc, d, a);
      long num = -(long)rs.length2(b1) * sc.postab(a1, b1);
      if (num % rs.length2(g) != 0)
        throw std::logic_error("structure constants: inexact extraspecial rescale");
      long ng = num / rs.length2(g);
      long val = -(t1 + t2);
      if (ng == 0 || val % ng != 0) throw std::logic_error("structure constants: inexact Jacobi");
      long nab = val / ng;
      if (std::abs(nab) != rs.string_down(a, b) + 1)
        throw std::logic_error("structure constants: string length mismatch");
      set(a, b, nab);
    }
  }
  return sc;
}

std::string verify_structure_constants(const RootSystem& rs, const StructureConstants& sc) {
  const int S = rs.nslots();
  auto nc = [&](int a, int b) { return nconst(rs, sc, a, b); };
  std::ostringstream bad;

  // pairwise family: magnitude, antisymmetry, opposite pairs, zero sums
  for (int sa = 0; sa < S; ++sa) {
    int a = rs.signed_of(sa);
    for (int sb = 0; sb < S; ++sb) {
      int b = rs.signed_of(sb);
      int s = rs.sum_index(a, b);
      if (s == 0) continue;
      int n = nc(a, b);
      if (n == 0) {
        bad << "N(" << a << "," << b << ") = 0 on a root sum";
        return bad.str();
      }
      if (std::abs(n) != rs.string_down(a, b) + 1) {
        bad << "|N(" << a << "," << b << ")| != pbar+1";
        return bad.str();
      }
      if (nc(b, a) != -n) {
        bad << "N(" << b << "," << a << ") != -N(" << a << "," << b << ")";
        return bad.str();
      }
      if (nc(-a, -b) != -n) {
        bad << "N(" << -a << "," << -b << ") != -N(" << a << "," << b << ")";
        return bad.str();
      }
      // zero-sum triple (a, b, c), c = -(a+b)
      if ((long)n * rs.length2(a) != (long)nc(b, -s) * rs.length2(s)) {
        bad << "zero-sum ratio fails at (" << a << "," << b << ")";
        return bad.str();
      }
      if ((long)nc(b, -s) * rs.length2(b) != (long)nc(-s, a) * rs.length2(a)) {
        bad << "zero-sum ratio (cyclic) fails at (" << a << "," << b << ")";
        return bad.str();
      }
    }
  }

  // Jacobi identity over all triples with no opposite pair and
  // non-zero total; triples with no summable pair hold trivially
  for (int sa = 0; sa < S; ++sa) {
    int a = rs.signed_of(sa);
    for (int sb = 0; sb < S; ++sb) {
      int b = rs.signed_of(sb);
      int s1 = rs.sum_index(a, b);
      if (s1 == 0) continue;
      long nab = nc(a, b);
      for (int sc_ = 0; sc_ < S; ++sc_) {
        int c = rs.signed_of(sc_);
        if (c == -a || c == -b || c == -s1) continue;
        long j = nab * nc(s1, c);
        if (int s2 = rs.sum_index(b, c); s2 != 0) j += (long)nc(b, c) * nc(s2, a);
        if (int s3 = rs.sum_index(c, a); s3 != 0) j += (long)nc(c, a) * nc(s3, b);
        if (j != 0) {
          bad << "Jacobi fails at (" << a << "," << b << "," << c << ")";
          return bad.str();
        }
      }
    }
  }

  // the h-part of Jacobi on (a, -a, c): <c,a^> closes the triple
  for (int sa = 0; sa < S; ++sa) {
    int a = rs.signed_of(sa);
    for (int sc_ = 0; sc_ < S; ++sc_) {
      int c = rs.signed_of(sc_);
      if (c == a || c == -a) continue;
      long t = rs.pairing(c, a);
      if (int d = rs.sum_index(-a, c); d != 0) t += (long)nc(-a, c) * nc(d, a);
      if (int d = rs.sum_index(c, a); d != 0) t += (long)nc(c, a) * nc(d, -a);
      if (t != 0) {
        bad << "coroot identity fails at (" << a << "," << c << ")";
        return bad.str();
      }
    }
  }
  return "";
}

RepModule adjoint_module(const RootSystem& rs, const StructureConstants& sc) {
  const int N = rs.npos, l = rs.rank;
  RepModule m;
  m.group = rs.label;
  m.name = "adjoint";
  m.provenance = "adjoint";
  m.p = 0;
  m.dim = 2 * N + l;

  auto bidx = [&](int a) { return a > 0 ? a - 1 : N + l - a - 1; };

  m.wtco.assign(m.dim, std::vector<int>(l, 0));
  for (int s = 0; s < rs.nslots(); ++s) {
    int a = rs.signed_of(s);
    for (int i = 0; i < l; ++i) m.wtco[bidx(a)][i] = rs.pairing(a, i + 1);
  }

  m.xparts.resize(rs.nslots());
  for (int s = 0; s < rs.nslots(); ++s) {
    int a = rs.signed_of(s);
    SpMat p1;
    p1.n = m.dim;
    for (int sb = 0; sb < rs.nslots(); ++sb) {
      int b = rs.signed_of(sb);
      if (b == -a) continue;
      if (int su = rs.sum_index(a, b); su != 0)
        p1.ent.push_back({bidx(su), bidx(b), nconst(rs, sc, a, b)});
    }
    // [e_a, e_{-a}] = h_a, expanded over the simple coroots
    int aa = std::abs(a), sgn = a > 0 ? 1 : -1;
    for (int k = 0; k < l; ++k)
      if (int v = sgn * rs.corow[aa - 1][k]; v != 0) p1.ent.push_back({N + k, bidx(-a), v});
    // [e_a, h_k] = -<a, alpha_k^> e_a
    for (int k = 0; k < l; ++k)
      if (int v = rs.pairing(a, k + 1); v != 0) p1.ent.push_back({bidx(a), N + k, -v});
    std::sort(p1.ent.begin(), p1.ent.end(),
              [](const SpMat::Ent& x, const SpMat::Ent& y) {
                return x.r != y.r ? x.r < y.r : x.c < y.c;
              });

    std::vector<SpMat> parts{p1};
    for (long long k = 2; !parts.back().zero(); ++k) {
      if (k > 6) throw std::logic_error("adjoint action not nilpotent");
      parts.push_back(sp_divexact(sp_mul(parts.back(), p1), k));
    }
    parts.pop_back();
    m.xparts[s] = std::move(parts);
  }
  return m;
}

namespace {

// one scalar division in the coefficient ring; false when v is not a
// unit there (F_p with p | v)
bool try_div(const QRing&, const mpq_class& num, long long v, mpq_class& out) {
  out = num / mpq_class((long)v);
  return true;
}
bool try_div(const ZRing&, const mpz_class& num, long long v, mpz_class& out) {
  mpz_class q = num / (long)v;
  if (q * (long)v != num) return false;
  out = q;
  return true;
}
bool try_div(const FpRing& r, FpRing::elem num, long long v, FpRing::elem& out) {
  FpRing::elem rv = r.reduce((long)v);
  if (rv == 0) return false;
  out = r.mul(num, r.inv(rv));
  return true;
}

bool coeff_integral(const QRing&, const mpq_class& c) { return c.get_den() == 1; }
bool coeff_integral(const ZRing&, const mpz_class&) { return true; }
bool coeff_integral(const FpRing&, FpRing::elem) { return true; }

// (x_a(1), x_b(1)) = prod_{ia+jb root} x_{ia+jb}(C_ij) in increasing
// i+j, peeled off grade by grade: with a, b linearly independent the
// weight shift pins each factor, so any entry of the P_1 part of
// x_{ia+jb} reads off C_ij exactly.
template <class R>
std::string commutator_check(const R& ring, const RootSystem& rs, const StructureConstants& sc,
                             const RepModule& m, int a, int b) {
  std::ostringstream bad;
  auto where = [&]() -> std::ostringstream& {
    bad << "pair (" << a << "," << b << "): ";
    return bad;
  };

  Mat<R> acc = Mat<R>::identity(ring, m.dim);
  typename R::elem one = ring.one(), mone = ring.neg(one);
  apply_x_right(acc, m.xparts[rs.slot(a)], mone);
  apply_x_right(acc, m.xparts[rs.slot(b)], mone);
  apply_x_right(acc, m.xparts[rs.slot(a)], one);
  apply_x_right(acc, m.xparts[rs.slot(b)], one);

  struct Target {
    int i, j, g;
  };
  std::vector<Target> targets;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      std::vector<int> v(rs.rank);
      int aa = std::abs(a), ab = std::abs(b);
      for (int k = 0; k < rs.rank; ++k)
        v[k] = i * (a > 0 ? 1 : -1) * rs.pos[aa - 1][k] + j * (b > 0 ? 1 : -1) * rs.pos[ab - 1][k];
      if (int g = rs.index_of(v); g != 0) targets.push_back({i, j, g});
    }
  std::sort(targets.begin(), targets.end(), [](const Target& x, const Target& y) {
    return x.i + x.j != y.i + y.j ? x.i + x.j < y.i + y.j : x.i < y.i;
  });

  for (const auto& t : targets) {
    const auto& parts = m.xparts[rs.slot(t.g)];
    typename R::elem c{};
    bool got = false;
    for (const auto& e : parts[0].ent)
      if (try_div(ring, acc.at(e.r, e.c), e.v, c)) {
        got = true;
        break;
      }
    if (!got) {
      where() << "no unit entry to peel x_" << t.g;
      return bad.str();
    }
    if (!coeff_integral(ring, c)) {
      where() << "non-integral coefficient at (" << t.i << "," << t.j << ")";
      return bad.str();
    }
    if (t.i == 1 && t.j == 1 &&
        !R::eq(c, lift_ll(ring, nconst(rs, sc, a, b)))) {
      where() << "C_11 != N(" << a << "," << b << ")";
      return bad.str();
    }
    apply_x_left(acc, parts, ring.neg(c));
  }
  if (!acc.is_identity()) {
    where() << "residue after peeling all root factors";
    return bad.str();
  }
  return "";
}

GeneratorWord make_word(std::initializer_list<GenTerm> ts) {
  GeneratorWord w;
  w.terms.assign(ts);
  return w;
}

}  // namespace

RelationReport verify_chevalley_relations(const RootSystem& rs, const StructureConstants& sc,
                                          const RepModule& m, long pair_cap) {
  RelationReport rep;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.first_failure = msg;
    return rep;
  };

  // torus units for the multiplicativity and inversion checks
  long su = 2, tu = 3;
  if (m.p == 2) su = tu = 1;
  if (m.p == 3) su = tu = 2;
  mpq_class sq(su), tq(tu);

  for (int a = 1; a <= rs.npos; ++a) {
    GenTerm xp{'x', a, 1}, xm{'x', -a, -1};
    auto w2 = make_word({xp, xm, xp, xp, xm, xp});
    if (!exact_eq(evaluate_word(m, w2), evaluate_word(m, make_word({{'h', a, -1}}))))
      return fail("w_a(1)^2 != h_a(-1) at root " + std::to_string(a));
    auto hs = evaluate_word(m, make_word({{'h', a, sq}, {'h', a, tq}}));
    if (!exact_eq(hs, evaluate_word(m, make_word({{'h', a, sq * tq}}))))
      return fail("h_a not multiplicative at root " + std::to_string(a));
    auto hn = evaluate_word(m, make_word({{'h', -a, tq}}));
    if (!exact_eq(hn, evaluate_word(m, make_word({{'h', a, 1 / tq}}))))
      return fail("h_{-a}(t) != h_a(1/t) at root " + std::to_string(a));
    ++rep.roots_checked;
  }

  std::vector<std::pair<int, int>> pairs;
  for (int sa = 0; sa < rs.nslots(); ++sa)
    for (int sb = sa + 1; sb < rs.nslots(); ++sb) {
      int a = rs.signed_of(sa), b = rs.signed_of(sb);
      if (b == -a) continue;
      pairs.push_back({a, b});
    }
  if (pair_cap >= 0 && (long)pairs.size() > pair_cap) {
    // keep all low-height pairs, stride through the rest
    std::vector<std::pair<int, int>> keep, rest;
    for (auto& pr : pairs)
      (std::abs(rs.height(pr.first)) + std::abs(rs.height(pr.second)) <= 4 ? keep : rest)
          .push_back(pr);
    long room = pair_cap > (long)keep.size() ? pair_cap - (long)keep.size() : 1;
    size_t stride = std::max<size_t>(1, rest.size() / room);
    for (size_t i = 0; i < rest.size(); i += stride) keep.push_back(rest[i]);
    pairs = std::move(keep);
  }

  for (auto [a, b] : pairs) {
    std::string msg = m.p == 0 ? commutator_check(ZRing{}, rs, sc, m, a, b)
                               : commutator_check(FpRing(m.p), rs, sc, m, a, b);
    if (!msg.empty()) return fail("commutator formula: " + msg);
    ++rep.pairs_checked;
  }
  return rep;
}

const StructureConstants& cached_structure_constants(const std::string& group) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<StructureConstants>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto& slot = cache[group];
  if (!slot)
    slot = std::make_unique<StructureConstants>(
        compute_structure_constants(cached_root_system(group)));
  return *slot;
}

const RepModule& cached_adjoint_module(const std::string& group) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<RepModule>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto& slot = cache[group];
  if (!slot)
    slot = std::make_unique<RepModule>(
        adjoint_module(cached_root_system(group), cached_structure_constants(group)));
  return *slot;
}

}  // namespace chev
