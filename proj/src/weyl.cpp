#include "chev/weyl.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace chev {

namespace {

std::vector<int32_t> perm_identity(int n) {
  std::vector<int32_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<int32_t> perm_compose(const std::vector<int32_t>& a, const std::vector<int32_t>& b) {
  // (a*b)(x) = a(b(x))
  std::vector<int32_t> r(a.size());
  for (size_t s = 0; s < a.size(); ++s) r[s] = a[b[s]];
  return r;
}

std::vector<int32_t> perm_inverse(const std::vector<int32_t>& a) {
  std::vector<int32_t> r(a.size());
  for (size_t s = 0; s < a.size(); ++s) r[a[s]] = s;
  return r;
}

bool perm_is_identity(const std::vector<int32_t>& a) {
  for (size_t s = 0; s < a.size(); ++s)
    if (a[s] != int32_t(s)) return false;
  return true;
}

struct PermHash {
  size_t operator()(const std::vector<int32_t>& p) const {
    size_t h = 1469598103934665603ull;
    for (int32_t v : p) {
      h ^= size_t(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

void require_small_rank(const RootSystem& rs, const char* what) {
  if (rs.rank > 4) throw std::runtime_error(std::string(what) + ": rank must be at most 4");
}

// sigma(g) = F g F^-1 on the signed roots
std::vector<int32_t> twist_apply(const TwistSpec& tw, const std::vector<int32_t>& g,
                                 const std::vector<int32_t>& finv) {
  if (tw.kind == 'n') return g;
  return perm_compose(tw.froot, perm_compose(g, finv));
}

}  // namespace

WeylElem weyl_identity(const RootSystem& rs) { return {perm_identity(rs.nslots()), {}}; }

WeylElem reflection(const RootSystem& rs, int alpha) {
  if (alpha < 1 || alpha > rs.npos) throw std::invalid_argument("reflection: bad root index");
  WeylElem w;
  w.perm.resize(rs.nslots());
  for (int s = 0; s < rs.nslots(); ++s) w.perm[s] = rs.slot(rs.reflect(alpha, rs.signed_of(s)));
  if (alpha <= rs.rank) w.word = {alpha};
  return w;
}

int act(const RootSystem& rs, const WeylElem& w, int signed_root) {
  return rs.signed_of(w.perm[rs.slot(signed_root)]);
}

Root act(const RootSystem& rs, const WeylElem& w, const Root& r) {
  return rs.root(act(rs, w, r.signed_index));
}

WeylElem compose(const RootSystem&, const WeylElem& w, const WeylElem& v) {
  WeylElem r;
  r.perm = perm_compose(w.perm, v.perm);
  r.word = w.word;
  r.word.insert(r.word.end(), v.word.begin(), v.word.end());
  return r;
}

WeylElem inverse(const WeylElem& w) {
  WeylElem r;
  r.perm = perm_inverse(w.perm);
  r.word.assign(w.word.rbegin(), w.word.rend());
  return r;
}

int element_order(const WeylElem& w) {
  int n = int(w.perm.size());
  std::vector<char> seen(n, 0);
  long long ord = 1;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int len = 0, t = s;
    while (!seen[t]) {
      seen[t] = 1;
      t = w.perm[t];
      ++len;
    }
    ord = std::lcm(ord, (long long)len);
  }
  return int(ord);
}

bool is_negation(const RootSystem& rs, const WeylElem& w) {
  for (int s = 0; s < rs.nslots(); ++s)
    if (rs.signed_of(w.perm[s]) != -rs.signed_of(s)) return false;
  return true;
}

ZMat lattice_matrix(const RootSystem& rs, const WeylElem& w) {
  ZMat m(ZRing{}, rs.rank, rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    int img = act(rs, w, j + 1);
    int sign = img > 0 ? 1 : -1;
    const auto& c = rs.pos[std::abs(img) - 1];
    for (int i = 0; i < rs.rank; ++i) m.at(i, j) = sign * c[i];
  }
  return m;
}

TwistSpec make_twist(const RootSystem& rs, char kind) {
  TwistSpec tw;
  tw.kind = kind;
  if (kind == 'n')
    tw.froot = perm_identity(rs.nslots());
  else
    tw.froot = symmetry_root_perm(rs, dynkin_symmetry(rs, kind));
  return tw;
}

std::vector<WeylElem> enumerate_group(const RootSystem& rs) {
  require_small_rank(rs, "enumerate_group");
  std::vector<WeylElem> gens;
  for (int i = 1; i <= rs.rank; ++i) gens.push_back(reflection(rs, i));

  std::vector<WeylElem> all;
  std::unordered_set<std::vector<int32_t>, PermHash> seen;
  all.push_back(weyl_identity(rs));
  seen.insert(all[0].perm);
  for (size_t head = 0; head < all.size(); ++head) {
    WeylElem cur = all[head];  // copy: all may reallocate
    for (const auto& g : gens) {
      WeylElem nxt = compose(rs, cur, g);
      if (seen.insert(nxt.perm).second) all.push_back(std::move(nxt));
    }
  }
  return all;
}

SigmaClassSet sigma_classes(const RootSystem& rs, const TwistSpec& twist) {
  require_small_rank(rs, "sigma_classes");
  auto els = enumerate_group(rs);
  std::unordered_map<std::vector<int32_t>, size_t, PermHash> index;
  for (size_t i = 0; i < els.size(); ++i) index.emplace(els[i].perm, i);

  auto finv = perm_inverse(twist.froot);
  std::vector<std::vector<int32_t>> gen_inv, sgen;
  for (int i = 1; i <= rs.rank; ++i) {
    auto g = reflection(rs, i).perm;
    gen_inv.push_back(perm_inverse(g));
    sgen.push_back(twist_apply(twist, g, finv));
  }

  SigmaClassSet out;
  std::vector<char> done(els.size(), 0);
  for (size_t i = 0; i < els.size(); ++i) {
    if (done[i]) continue;
    SigmaClass cls;
    cls.rep = els[i];
    std::vector<size_t> stack{i};
    done[i] = 1;
    while (!stack.empty()) {
      size_t j = stack.back();
      stack.pop_back();
      ++cls.size;
      for (size_t k = 0; k < gen_inv.size(); ++k) {
        auto img = perm_compose(gen_inv[k], perm_compose(els[j].perm, sgen[k]));
        size_t t = index.at(img);
        if (!done[t]) {
          done[t] = 1;
          stack.push_back(t);
        }
      }
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

Centralizer sigma_centralizer(const RootSystem& rs, const WeylElem& w, const TwistSpec& twist) {
  Centralizer cz;
  if (rs.rank > 4) {
    // only the central cases are available at large rank
    if (twist.kind == 'n' && (perm_is_identity(w.perm) || is_negation(rs, w))) {
      cz.order = stabilizer_chain(rs).order();
      for (int i = 1; i <= rs.rank; ++i) cz.gens.push_back(reflection(rs, i));
      return cz;
    }
    throw std::runtime_error("sigma_centralizer: full computation needs rank at most 4");
  }

  auto finv = perm_inverse(twist.froot);
  auto els = enumerate_group(rs);
  std::vector<WeylElem> members;
  for (const auto& x : els) {
    auto sx = twist_apply(twist, x.perm, finv);
    if (perm_compose(perm_inverse(x.perm), perm_compose(w.perm, sx)) == w.perm)
      members.push_back(x);
  }
  cz.order = members.size();

  // greedy generating set: keep an element only if it enlarges the
  // closure of what we already kept
  std::unordered_set<std::vector<int32_t>, PermHash> closure;
  closure.insert(perm_identity(rs.nslots()));
  for (const auto& m : members) {
    if (closure.count(m.perm)) continue;
    cz.gens.push_back(m);
    std::vector<std::vector<int32_t>> frontier(closure.begin(), closure.end());
    std::vector<std::vector<int32_t>> gp;
    for (const auto& g : cz.gens) gp.push_back(g.perm);
    while (!frontier.empty()) {
      auto cur = frontier.back();
      frontier.pop_back();
      for (const auto& g : gp) {
        auto nxt = perm_compose(cur, g);
        if (closure.insert(nxt).second) frontier.push_back(nxt);
      }
    }
    if (closure.size() == cz.order) break;
  }
  return cz;
}

namespace {

ZMat twist_lattice_matrix(const RootSystem& rs, const TwistSpec& tw) {
  ZMat f(ZRing{}, rs.rank, rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    int img = rs.signed_of(tw.froot[rs.slot(j + 1)]);
    int sign = img > 0 ? 1 : -1;
    const auto& c = rs.pos[std::abs(img) - 1];
    for (int i = 0; i < rs.rank; ++i) f.at(i, j) = sign * c[i];
  }
  return f;
}

mpz_class torus_det(const ZMat& a, const mpz_class& q) {
  int n = a.rows;
  ZMat b(ZRing{}, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      b.at(i, j) = q * a.at(i, j);
      if (i == j) b.at(i, j) -= 1;
    }
  return det_bareiss(b);
}

}  // namespace

mpz_class torus_order(const RootSystem& rs, const WeylElem& w, const TwistSpec& twist,
                      const mpz_class& q) {
  ZMat a = mul(twist_lattice_matrix(rs, twist), lattice_matrix(rs, w));
  return abs(torus_det(a, q));
}

IPoly torus_order_poly(const RootSystem& rs, const WeylElem& w, const TwistSpec& twist) {
  ZMat a = mul(twist_lattice_matrix(rs, twist), lattice_matrix(rs, w));
  int n = rs.rank;

  // interpolate det(qA - 1), degree n, via n+1 sample points
  std::vector<mpz_class> xs(n + 1), ys(n + 1);
  for (int i = 0; i <= n; ++i) {
    xs[i] = i;
    ys[i] = torus_det(a, xs[i]);
  }
  std::vector<mpq_class> coef(n + 1, 0);  // running Newton->monomial form
  std::vector<mpq_class> basis{1};        // prod (x - xs[j]) so far, monomial coeffs
  std::vector<mpq_class> divided(ys.begin(), ys.end());
  for (int level = 1; level <= n; ++level)
    for (int i = n; i >= level; --i)
      divided[i] = (divided[i] - divided[i - 1]) / mpq_class(xs[i] - xs[i - level]);
  for (int i = 0; i <= n; ++i) {
    for (size_t k = 0; k < basis.size(); ++k) coef[k] += divided[i] * basis[k];
    if (i < n) {
      basis.insert(basis.begin(), 0);  // multiply by x
      for (size_t k = 0; k + 1 < basis.size(); ++k) basis[k] -= mpq_class(xs[i]) * basis[k + 1];
    }
  }

  IPoly p;
  p.c.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    mpq_class v = coef[i];
    v.canonicalize();
    if (v.get_den() != 1) throw std::logic_error("torus polynomial interpolation not integral");
    p.c[i] = v.get_num();
  }
  p.trim();
  // eigenvalues of A are roots of unity, so the sign is constant from
  // q = 2 on; normalize to the positive branch
  if (p.degree() >= 0 && p.c.back() < 0)
    for (auto& v : p.c) v = -v;
  return p;
}

std::uint64_t StabChain::order() const {
  std::uint64_t o = 1;
  for (const auto& l : levels) o *= l.tperm.size();
  return o;
}

bool StabChain::contains(const std::vector<int32_t>& perm) const {
  std::vector<int32_t> g = perm;
  for (const auto& l : levels) {
    int img = g[l.base];
    if (l.tvidx[img] < 0) return false;
    g = perm_compose(perm_inverse(l.tperm[l.tvidx[img]]), g);
  }
  return perm_is_identity(g);
}

namespace {

struct ChainBuilder {
  int degree;
  StabChain chain;

  void rebuild_orbit(StabChain::Level& l) {
    l.tvidx.assign(degree, -1);
    l.tperm.clear();
    std::vector<int> pts{l.base};
    l.tvidx[l.base] = 0;
    l.tperm.push_back(perm_identity(degree));
    for (size_t h = 0; h < pts.size(); ++h) {
      int p = pts[h];
      for (const auto& g : l.gens) {
        int q = g[p];
        if (l.tvidx[q] < 0) {
          l.tvidx[q] = int(l.tperm.size());
          l.tperm.push_back(perm_compose(g, l.tperm[l.tvidx[p]]));
          pts.push_back(q);
        }
      }
    }
  }

  // strip g through levels >= from; true when it sifts to the identity
  bool strip(std::vector<int32_t>& g, size_t from) const {
    for (size_t k = from; k < chain.levels.size(); ++k) {
      const auto& l = chain.levels[k];
      int img = g[l.base];
      if (l.tvidx[img] < 0) return false;
      g = perm_compose(perm_inverse(l.tperm[l.tvidx[img]]), g);
    }
    return perm_is_identity(g);
  }

  void add_generator(size_t k, std::vector<int32_t> g) {
    if (perm_is_identity(g)) return;
    if (k == chain.levels.size()) {
      StabChain::Level l;
      l.base = 0;
      while (g[l.base] == l.base) ++l.base;
      chain.levels.push_back(std::move(l));
    }
    auto& l = chain.levels[k];
    l.gens.push_back(std::move(g));
    rebuild_orbit(l);
    for (int p = 0; p < degree; ++p) {
      if (l.tvidx[p] < 0) continue;
      const auto& up = l.tperm[l.tvidx[p]];
      for (size_t gi = 0; gi < l.gens.size(); ++gi) {
        auto sg = perm_compose(l.gens[gi], up);
        int q = sg[l.base];
        sg = perm_compose(perm_inverse(l.tperm[l.tvidx[q]]), sg);
        if (!strip(sg, k + 1)) add_generator(k + 1, sg);
      }
    }
  }
};

}  // namespace

StabChain stabilizer_chain(const RootSystem& rs) {
  ChainBuilder b;
  b.degree = rs.nslots();
  b.chain.degree = b.degree;
  // level references survive recursive insertion only if the vector
  // never reallocates; one level per base point bounds the count
  b.chain.levels.reserve(b.degree);
  for (int i = 1; i <= rs.rank; ++i) b.add_generator(0, reflection(rs, i).perm);
  return b.chain;
}

std::optional<bool> same_sigma_class(const RootSystem& rs, const WeylElem& x, const WeylElem& y,
                                     const TwistSpec& twist, std::uint64_t budget) {
  if (torus_order_poly(rs, x, twist) != torus_order_poly(rs, y, twist)) return false;
  if (x.perm == y.perm) return true;

  auto finv = perm_inverse(twist.froot);
  std::vector<std::vector<int32_t>> gen_inv, sgen;
  for (int i = 1; i <= rs.rank; ++i) {
    auto g = reflection(rs, i).perm;
    gen_inv.push_back(perm_inverse(g));
    sgen.push_back(twist_apply(twist, g, finv));
  }

  std::unordered_set<std::vector<int32_t>, PermHash> seen;
  std::vector<std::vector<int32_t>> frontier{x.perm};
  seen.insert(x.perm);
  while (!frontier.empty()) {
    auto cur = frontier.back();
    frontier.pop_back();
    for (size_t k = 0; k < gen_inv.size(); ++k) {
      auto img = perm_compose(gen_inv[k], perm_compose(cur, sgen[k]));
      if (img == y.perm) return true;
      if (seen.size() >= budget) return std::nullopt;
      if (seen.insert(img).second) frontier.push_back(img);
    }
  }
  return false;  // class exhausted without meeting y
}

}  // namespace chev
