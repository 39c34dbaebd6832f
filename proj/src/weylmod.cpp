#include "chev/weylmod.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace chev {

namespace {

// Gram matrix of the fundamental weights: with P_kj = <alpha_k,
// alpha_j^> on the simples, (w_i, w_j) = (P^-1)_ij d_j.
std::vector<std::vector<mpq_class>> weight_gram(const RootSystem& rs) {
  int l = rs.rank;
  std::vector<std::vector<mpq_class>> m(l, std::vector<mpq_class>(2 * l, 0));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) m[i][j] = int(rs.pp[i][j]);
    m[i][l + i] = 1;
  }
  for (int c = 0; c < l; ++c) {
    int piv = -1;
    for (int r = c; r < l; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("singular Cartan pairing matrix");
    std::swap(m[c], m[piv]);
    mpq_class d = m[c][c];
    for (int j = 0; j < 2 * l; ++j) m[c][j] /= d;
    for (int r = 0; r < l; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c];
      for (int j = 0; j < 2 * l; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<std::vector<mpq_class>> g(l, std::vector<mpq_class>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) g[i][j] = m[i][l + j] * rs.simple_d[j];
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (g[i][j] != g[j][i]) throw std::logic_error("weight Gram matrix not symmetric");
  return g;
}

mpq_class gram_ip(const std::vector<std::vector<mpq_class>>& g, const std::vector<int>& u,
                  const std::vector<int>& v) {
  mpq_class s = 0;
  int l = int(g.size());
  for (int i = 0; i < l; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < l; ++j)
      if (v[j] != 0) s += mpq_class(u[i]) * v[j] * g[i][j];
  }
  return s;
}

// fundamental-weight coordinates of a positive root
std::vector<int> root_weight_row(const RootSystem& rs, int a) {
  std::vector<int> w(rs.rank);
  for (int i = 0; i < rs.rank; ++i) w[i] = rs.pp[a - 1][i];
  return w;
}

// dense integer matrices over long long, for the small module spaces
struct DenseLL {
  int n = 0;
  std::vector<long long> a;

  DenseLL() = default;
  explicit DenseLL(int n_) : n(n_), a(size_t(n_) * n_, 0) {}
  long long& at(int i, int j) { return a[size_t(i) * n + j]; }
  long long at(int i, int j) const { return a[size_t(i) * n + j]; }
  bool zero() const {
    return std::all_of(a.begin(), a.end(), [](long long v) { return v == 0; });
  }
};

DenseLL ll_from_sp(const SpMat& s) {
  DenseLL d(s.n);
  for (const auto& e : s.ent) d.at(e.r, e.c) = e.v;
  return d;
}

SpMat ll_to_sp(const DenseLL& d) {
  SpMat s;
  s.n = d.n;
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j)
      if (d.at(i, j) != 0) s.ent.push_back({i, j, d.at(i, j)});
  return s;
}

DenseLL ll_mul(const DenseLL& x, const DenseLL& y) {
  DenseLL c(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      long long v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.n; ++j)
        if (y.at(k, j) != 0) c.at(i, j) += v * y.at(k, j);
    }
  return c;
}

DenseLL ll_bracket_div(const DenseLL& x, const DenseLL& y, long long d) {
  DenseLL c = ll_mul(x, y);
  DenseLL yx = ll_mul(y, x);
  for (size_t k = 0; k < c.a.size(); ++k) {
    long long v = c.a[k] - yx.a[k];
    if (v % d != 0) throw std::logic_error("inexact root-vector bracket");
    c.a[k] = v / d;
  }
  return c;
}

DenseLL ll_divexact(const DenseLL& x, long long d) {
  DenseLL c = x;
  for (auto& v : c.a) {
    if (v % d != 0) throw std::logic_error("inexact divided power");
    v /= d;
  }
  return c;
}

// one solution of a homogeneous GF(2) system, free variables zero;
// used for the step-sign constraints, where it lands on all-positive
std::vector<int> gf2_signs(int nvars, const std::vector<std::vector<int>>& eqs) {
  std::vector<std::vector<uint8_t>> rows;
  for (const auto& eq : eqs) {
    std::vector<uint8_t> r(nvars, 0);
    for (int v : eq) r[v] ^= 1;
    rows.push_back(std::move(r));
  }
  size_t rank = 0;
  for (int c = 0; c < nvars && rank < rows.size(); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && !rows[piv][c]) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (int j = 0; j < nvars; ++j) rows[r][j] ^= rows[rank][j];
    ++rank;
  }
  // homogeneous, so the zero assignment satisfies every row
  std::vector<int> sign(nvars, 1);
  return sign;
}

// non-simple root vectors by the bracket recursion through the
// extraspecial pairs, on an arbitrary faithful lattice realization
void fill_nonsimple_parts(const RootSystem& rs, const StructureConstants& sc, RepModule& m,
                          int max_power) {
  for (int g = rs.rank + 1; g <= rs.npos; ++g) {
    auto [a, b] = sc.extraspecial[g - 1];
    for (int sgn : {1, -1}) {
      DenseLL ea = ll_from_sp(m.xparts[rs.slot(sgn * a)][0]);
      DenseLL eb = ll_from_sp(m.xparts[rs.slot(sgn * b)][0]);
      DenseLL eg = ll_bracket_div(ea, eb, nconst(rs, sc, sgn * a, sgn * b));
      std::vector<SpMat> parts{ll_to_sp(eg)};
      DenseLL p = eg;
      for (int k = 2;; ++k) {
        p = ll_divexact(ll_mul(p, eg), k);
        if (p.zero()) break;
        if (k > max_power) throw std::logic_error("root vector power exceeds module bound");
        parts.push_back(ll_to_sp(p));
      }
      m.xparts[rs.slot(sgn * g)] = std::move(parts);
    }
  }
}

}  // namespace

mpz_class weyl_dim(const RootSystem& rs, const std::vector<int>& lambda) {
  if ((int)lambda.size() != rs.rank) throw std::invalid_argument("weight rank mismatch");
  mpq_class prod = 1;
  for (int a = 1; a <= rs.npos; ++a) {
    long num = 0, den = 0;
    for (int i = 0; i < rs.rank; ++i) {
      num += (long)(lambda[i] + 1) * rs.corow[a - 1][i];
      den += rs.corow[a - 1][i];
    }
    prod *= mpq_class(num, den);
  }
  prod.canonicalize();
  if (prod.get_den() != 1) throw std::logic_error("Weyl dimension not integral");
  return prod.get_num();
}

std::vector<WeightMult> weight_multiplicities(const RootSystem& rs,
                                              const std::vector<int>& lambda) {
  if ((int)lambda.size() != rs.rank) throw std::invalid_argument("weight rank mismatch");
  auto g = weight_gram(rs);
  std::vector<int> rho(rs.rank, 1);
  auto plus_rho = [&](const std::vector<int>& u) {
    std::vector<int> v = u;
    for (auto& x : v) ++x;
    return v;
  };
  mpq_class top = gram_ip(g, plus_rho(lambda), plus_rho(lambda));

  std::vector<std::vector<int>> arow;
  for (int a = 1; a <= rs.npos; ++a) arow.push_back(root_weight_row(rs, a));

  std::map<std::vector<int>, mpz_class> mult;
  std::vector<std::vector<std::vector<int>>> levels{{lambda}};
  mult[lambda] = 1;

  while (!levels.back().empty()) {
    int h = int(levels.size());
    std::vector<std::vector<int>> cand;
    for (const auto& nu : levels.back())
      for (int j = 0; j < rs.rank; ++j) {
        std::vector<int> mu = nu;
        for (int i = 0; i < rs.rank; ++i) mu[i] -= arow[j][i];
        cand.push_back(std::move(mu));
      }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    std::vector<std::vector<int>> level;
    for (const auto& mu : cand) {
      if (mult.count(mu)) continue;
      mpq_class num = 0;
      for (int a = 1; a <= rs.npos; ++a) {
        for (int k = 1; k * rs.ht[a - 1] <= h; ++k) {
          std::vector<int> w = mu;
          for (int i = 0; i < rs.rank; ++i) w[i] += k * arow[a - 1][i];
          auto it = mult.find(w);
          if (it != mult.end()) num += mpq_class(it->second) * gram_ip(g, w, arow[a - 1]);
        }
      }
      if (num == 0) continue;  // not a weight
      mpq_class den = top - gram_ip(g, plus_rho(mu), plus_rho(mu));
      if (den <= 0) throw std::logic_error("weight norm recursion out of order");
      mpq_class mq = 2 * num / den;
      mq.canonicalize();
      if (mq.get_den() != 1 || mq < 0)
        throw std::logic_error("weight multiplicity not a nonnegative integer");
      if (mq == 0) continue;
      mult[mu] = mq.get_num();
      level.push_back(mu);
    }
    levels.push_back(std::move(level));
  }

  std::vector<WeightMult> out;
  for (const auto& lev : levels)
    for (const auto& mu : lev) out.push_back({mu, mult.at(mu)});
  return out;
}

RepModule build_minuscule(const RootSystem& rs, int fund) {
  if (fund < 1 || fund > rs.rank) throw std::invalid_argument("fundamental index out of range");
  for (int a = 1; a <= rs.npos; ++a)
    if (rs.corow[a - 1][fund - 1] > 1)
      throw std::invalid_argument("weight is not minuscule for this group");

  std::vector<int> lam(rs.rank, 0);
  lam[fund - 1] = 1;

  // the weights are a single Weyl orbit; walk it downward from lambda
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> wts{lam};
  index[lam] = 0;
  for (size_t h = 0; h < wts.size(); ++h)
    for (int j = 1; j <= rs.rank; ++j) {
      if (wts[h][j - 1] != 1) continue;
      std::vector<int> mu = wts[h];
      for (int i = 0; i < rs.rank; ++i) mu[i] -= rs.pp[j - 1][i];
      if (index.emplace(mu, int(wts.size())).second) wts.push_back(mu);
    }
  int dim = int(wts.size());
  if (mpz_class(dim) != weyl_dim(rs, lam))
    throw std::logic_error("orbit size disagrees with the Weyl dimension");

  // one sign per lowering step, constrained over GF(2) by the
  // commuting squares; adjacent squares cannot occur on a minuscule
  // orbit, so the system is homogeneous
  std::map<std::pair<int, int>, int> edge;  // (source weight, simple) -> variable
  for (int v = 0; v < dim; ++v)
    for (int j = 1; j <= rs.rank; ++j)
      if (wts[v][j - 1] == 1) {
        int id = int(edge.size());
        edge[{v, j}] = id;
      }
  auto lower = [&](int v, int j) {
    std::vector<int> mu = wts[v];
    for (int i = 0; i < rs.rank; ++i) mu[i] -= rs.pp[j - 1][i];
    return index.at(mu);
  };
  std::vector<std::vector<int>> eqs;
  for (int v = 0; v < dim; ++v)
    for (int i = 1; i <= rs.rank; ++i)
      for (int j = i + 1; j <= rs.rank; ++j) {
        if (wts[v][i - 1] != 1 || wts[v][j - 1] != 1) continue;
        if (rs.pp[i - 1][j - 1] != 0) continue;
        eqs.push_back({edge.at({v, i}), edge.at({lower(v, i), j}), edge.at({v, j}),
                       edge.at({lower(v, j), i})});
      }
  std::vector<int> sign = gf2_signs(int(edge.size()), eqs);

  RepModule m;
  m.group = rs.label;
  m.name = (rs.letter == 'E') ? "vmin" : "natural";
  m.provenance = "minuscule";
  m.p = 0;
  m.dim = dim;
  m.wtco = wts;
  m.xparts.resize(rs.nslots());
  for (int j = 1; j <= rs.rank; ++j) {
    SpMat up, down;
    up.n = down.n = dim;
    for (const auto& [key, id] : edge) {
      if (key.second != j) continue;
      int hi = key.first, lo = lower(hi, j);
      up.ent.push_back({hi, lo, (long long)sign[id]});
      down.ent.push_back({lo, hi, (long long)sign[id]});
    }
    auto byrc = [](const SpMat::Ent& x, const SpMat::Ent& y) {
      return x.r != y.r ? x.r < y.r : x.c < y.c;
    };
    std::sort(up.ent.begin(), up.ent.end(), byrc);
    std::sort(down.ent.begin(), down.ent.end(), byrc);
    m.xparts[rs.slot(j)] = {up};
    m.xparts[rs.slot(-j)] = {down};
  }
  fill_nonsimple_parts(rs, cached_structure_constants(rs.label), m, 1);
  for (int s = 0; s < rs.nslots(); ++s)
    if (m.xparts[s].empty() || m.xparts[s][0].zero())
      throw std::logic_error("root vector acts by zero on a minuscule module");
  return m;
}

namespace {

// integer row echelon with positive pivots and reduced off-pivot
// entries; canonical, so lattice growth is plain inequality
std::vector<std::vector<long long>> hermite(std::vector<std::vector<long long>> rows) {
  if (rows.empty()) return rows;
  size_t cols = rows[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    // reduce column c below r to a single entry by gcd steps
    while (true) {
      size_t best = rows.size();
      for (size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() ||
                                std::abs(rows[i][c]) < std::abs(rows[best][c])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clear = true;
      for (size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        long long q = rows[i][c] / rows[r][c];
        for (size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clear = false;
      }
      if (clear) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (size_t j = 0; j < cols; ++j) rows[r][j] = -rows[r][j];
    for (size_t i = 0; i < r; ++i) {
      long long q = rows[i][c] >= 0 ? rows[i][c] / rows[r][c]
                                    : -((-rows[i][c] + rows[r][c] - 1) / rows[r][c]);
      if (q != 0)
        for (size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  while (!rows.empty() &&
         std::all_of(rows.back().begin(), rows.back().end(), [](long long v) { return v == 0; }))
    rows.pop_back();
  return rows;
}

struct FoldSpec {
  const char* parent;
  const char* parent_module;
  std::vector<std::vector<int>> orbits;  // per folded simple root
};

FoldSpec fold_spec(const std::string& group) {
  if (group == "F4") return {"E6", "vmin", {{2}, {4}, {3, 5}, {1, 6}}};
  if (group == "G2") return {"D4", "natural", {{1, 3, 4}, {2}}};
  throw std::invalid_argument("no folded module for this group");
}

}  // namespace

RepModule build_folded(const std::string& group) {
  FoldSpec fs = fold_spec(group);
  const RootSystem& frs = cached_root_system(group);
  const RepModule& par = cached_module(fs.parent, fs.parent_module);
  const int pdim = par.dim, l = frs.rank;

  // folded torus weight of a parent basis vector: orbit sums
  auto folded_wt = [&](int v) {
    std::vector<int> w(l, 0);
    for (int i = 0; i < l; ++i)
      for (int j : fs.orbits[i]) w[i] += par.wtco[v][j - 1];
    return w;
  };

  // folded simple root vectors on the parent space: orbit sums of
  // commuting square-zero steps, divided powers up to the orbit size
  struct POp {
    DenseLL m;
    std::vector<int> shift;  // folded weight shift
    int i, k, dir;
  };
  std::vector<POp> ops;
  const RootSystem& prs = cached_root_system(fs.parent);
  for (int i = 1; i <= l; ++i)
    for (int dir : {1, -1}) {
      DenseLL sum(pdim);
      for (int j : fs.orbits[i - 1]) {
        const SpMat& s = par.xparts[prs.slot(dir * j)][0];
        for (const auto& e : s.ent) sum.at(e.r, e.c) += e.v;
      }
      DenseLL p = sum;
      long long fact = 1;
      for (int k = 1; k <= (int)fs.orbits[i - 1].size(); ++k) {
        if (k > 1) {
          fact *= k;
          p = ll_mul(p, sum);
        }
        DenseLL dp = ll_divexact(p, fact);
        if (dp.zero()) break;
        std::vector<int> sh(l);
        for (int t = 0; t < l; ++t) sh[t] = dir * k * frs.pp[i - 1][t];
        ops.push_back({std::move(dp), std::move(sh), i, k, dir});
      }
    }

  // saturate the integral span of the parent highest weight vector,
  // block by folded weight
  struct Block {
    int level;
    std::vector<std::vector<long long>> rows;
  };
  std::map<std::vector<int>, Block> blocks;
  {
    std::vector<long long> v0(pdim, 0);
    v0[0] = 1;
    blocks[folded_wt(0)] = {0, {v0}};
  }
  for (bool grew = true; grew;) {
    grew = false;
    auto snapshot = blocks;
    for (const auto& [wt, blk] : snapshot)
      for (const auto& row : blk.rows)
        for (const auto& op : ops) {
          std::vector<long long> img(pdim, 0);
          bool nz = false;
          for (int r = 0; r < pdim; ++r) {
            long long s = 0;
            for (int c = 0; c < pdim; ++c)
              if (row[c] != 0) s += op.m.at(r, c) * row[c];
            img[r] = s;
            nz |= s != 0;
          }
          if (!nz) continue;
          std::vector<int> twt(l);
          for (int t = 0; t < l; ++t) twt[t] = wt[t] + op.shift[t];
          auto it = blocks.find(twt);
          if (it == blocks.end())
            it = blocks.emplace(twt, Block{blk.level - op.dir * op.k, {}}).first;
          auto withimg = it->second.rows;
          withimg.push_back(img);
          auto h = hermite(std::move(withimg));
          if (h != it->second.rows) {
            it->second.rows = std::move(h);
            grew = true;
          }
        }
  }

  // deterministic basis: blocks from the top level down, echelon rows
  std::vector<std::pair<std::vector<int>, const Block*>> order;
  for (const auto& [wt, blk] : blocks) order.push_back({wt, &blk});
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.second->level != b.second->level) return a.second->level < b.second->level;
    return a.first > b.first;
  });
  int fdim = 0;
  for (const auto& [wt, blk] : order) fdim += int(blk->rows.size());

  mpz_class want = weyl_dim(frs, folded_wt(0));
  if (mpz_class(fdim) != want) throw std::logic_error("folded lattice has the wrong rank");

  // the complementary fixed line: everything killed by every folded
  // generator must be 1-dimensional over the rationals
  {
    QMat stack(QRing{}, int(ops.size()) * pdim, pdim);
    int r0 = 0;
    for (const auto& op : ops) {
      for (int r = 0; r < pdim; ++r)
        for (int c = 0; c < pdim; ++c)
          if (op.m.at(r, c) != 0) stack.at(r0 + r, c) = (long)op.m.at(r, c);
      r0 += pdim;
    }
    if (rank_field(stack) != pdim - 1)
      throw std::logic_error("folded generators do not fix a line in the parent");
  }

  RepModule m;
  m.group = group;
  m.name = "vmin";
  m.provenance = std::string("folded(") + fs.parent + ")";
  m.p = 0;
  m.dim = fdim;
  for (const auto& [wt, blk] : order)
    for (size_t r = 0; r < blk->rows.size(); ++r) m.wtco.push_back(wt);

  // rewrite each folded operator on the lattice basis: solve P C = X P
  // column by column; saturation closure makes C integral
  QMat pq(QRing{}, pdim, fdim);
  std::vector<std::vector<long long>> pcol;
  for (const auto& [wt, blk] : order)
    for (const auto& row : blk->rows) {
      int c = int(pcol.size());
      for (int r = 0; r < pdim; ++r) pq.at(r, c) = (long)row[r];
      pcol.push_back(row);
    }
  // factor once: row operations L with L P = U, U upper triangular on
  // the first fdim rows and zero below
  QMat u = pq, lt = QMat::identity(QRing{}, pdim);
  for (int c = 0; c < fdim; ++c) {
    int piv = -1;
    for (int i = c; i < pdim; ++i)
      if (u.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::logic_error("folded basis not independent");
    if (piv != c)
      for (int j = 0; j < pdim; ++j) {
        if (j < fdim) std::swap(u.at(piv, j), u.at(c, j));
        std::swap(lt.at(piv, j), lt.at(c, j));
      }
    mpq_class pv = u.at(c, c);
    for (int i = c + 1; i < pdim; ++i) {
      if (u.at(i, c) == 0) continue;
      mpq_class f = u.at(i, c) / pv;
      for (int j = c; j < fdim; ++j) u.at(i, j) -= f * u.at(c, j);
      for (int j = 0; j < pdim; ++j) lt.at(i, j) -= f * lt.at(c, j);
    }
  }
  auto solve_column = [&](const std::vector<mpq_class>& rhs) {
    std::vector<mpq_class> b(pdim, 0);
    for (int i = 0; i < pdim; ++i)
      for (int j = 0; j < pdim; ++j)
        if (lt.at(i, j) != 0 && rhs[j] != 0) b[i] += lt.at(i, j) * rhs[j];
    for (int i = fdim; i < pdim; ++i)
      if (b[i] != 0) throw std::logic_error("folded operator leaves the lattice span");
    std::vector<mpq_class> x(fdim, 0);
    for (int c = fdim - 1; c >= 0; --c) {
      mpq_class s = b[c];
      for (int j = c + 1; j < fdim; ++j) s -= u.at(c, j) * x[j];
      x[c] = s / u.at(c, c);
    }
    return x;
  };

  m.xparts.resize(frs.nslots());
  for (const auto& op : ops) {
    SpMat conv;
    conv.n = fdim;
    for (int c = 0; c < fdim; ++c) {
      std::vector<mpq_class> rhs(pdim, 0);
      for (int r = 0; r < pdim; ++r) {
        long long s = 0;
        for (int t = 0; t < pdim; ++t)
          if (pcol[c][t] != 0) s += op.m.at(r, t) * pcol[c][t];
        rhs[r] = (long)s;
      }
      auto x = solve_column(rhs);
      for (int r = 0; r < fdim; ++r) {
        if (x[r] == 0) continue;
        if (x[r].get_den() != 1) throw std::logic_error("folded operator not integral");
        if (!x[r].get_num().fits_slong_p()) throw std::overflow_error("folded entry overflow");
        conv.ent.push_back({r, c, x[r].get_num().get_si()});
      }
    }
    std::sort(conv.ent.begin(), conv.ent.end(), [](const SpMat::Ent& x, const SpMat::Ent& y) {
      return x.r != y.r ? x.r < y.r : x.c < y.c;
    });
    auto& parts = m.xparts[frs.slot(op.dir * op.i)];
    if ((int)parts.size() < op.k) parts.resize(op.k);
    parts[op.k - 1] = std::move(conv);
  }
  for (int j = 1; j <= l; ++j)
    for (int dir : {1, -1}) {
      auto& parts = m.xparts[frs.slot(dir * j)];
      while (!parts.empty() && parts.back().zero()) parts.pop_back();
      if (parts.empty()) throw std::logic_error("folded simple root acts by zero");
    }

  fill_nonsimple_parts(frs, cached_structure_constants(group), m, 2);
  return m;
}

RepModule specialize(const RepModule& m, long p) {
  if (p != 0) {
    mpz_class pz(p);
    if (p < 2 || mpz_probab_prime_p(pz.get_mpz_t(), 30) == 0)
      throw std::invalid_argument("characteristic must be 0 or a prime");
  }
  RepModule out = m;
  out.p = p;
  return out;
}

std::string check_weight_shifts(const RootSystem& rs, const RepModule& m) {
  for (int s = 0; s < rs.nslots(); ++s) {
    int g = rs.signed_of(s);
    for (size_t k = 0; k < m.xparts[s].size(); ++k)
      for (const auto& e : m.xparts[s][k].ent)
        for (int i = 1; i <= rs.rank; ++i) {
          long want = (long)(k + 1) * rs.pairing(g, i);
          if (m.wtco[e.r][i - 1] - m.wtco[e.c][i - 1] != want)
            return "entry (" + std::to_string(e.r) + "," + std::to_string(e.c) +
                   ") of root " + std::to_string(g) + " breaks the weight grading";
        }
  }
  return "";
}

const RepModule& cached_module(const std::string& group, const std::string& name) {
  if (name == "adjoint") return cached_adjoint_module(group);
  // recursive: a folded build pulls its parent through this cache
  static std::recursive_mutex mu;
  static std::map<std::string, std::unique_ptr<RepModule>> cache;
  std::lock_guard<std::recursive_mutex> lk(mu);
  auto& slot = cache[group + "/" + name];
  if (slot) return *slot;

  const RootSystem& rs = cached_root_system(group);
  RepModule built;
  if (name == "natural" && (rs.letter == 'A' || rs.letter == 'D'))
    built = build_minuscule(rs, 1);
  else if (name == "vmin" && group == "E6")
    built = build_minuscule(rs, 1);
  else if (name == "vmin" && group == "E7")
    built = build_minuscule(rs, 7);
  else if (name == "vmin" && (group == "F4" || group == "G2"))
    built = build_folded(group);
  else
    throw std::invalid_argument("no module named " + name + " for " + group);
  slot = std::make_unique<RepModule>(std::move(built));
  return *slot;
}

}  // namespace chev
