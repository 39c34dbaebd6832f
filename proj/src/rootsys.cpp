#include "chev/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace chev {

namespace {

struct TypeData {
  int rank;
  std::vector<int> d;                        // (alpha_i,alpha_i)/2
  std::vector<std::pair<int, int>> edges;    // Dynkin adjacency, 1-based
};

// Bourbaki numbering throughout.  E-types: chain 1-3-4-5-6(-7)(-8)
// with node 2 hanging off node 4.  D-types: chain 1..n-2 with both
// n-1 and n attached to n-2.  B_n: short last node; C_n: long last
// node; F4: 1,2 long, 3,4 short; G2: alpha_1 short.
TypeData type_data(char letter, int rank) {
  TypeData t;
  t.rank = rank;
  auto chain = [&](int a, int b) {
    for (int i = a; i < b; ++i) t.edges.push_back({i, i + 1});
  };
  switch (letter) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("unsupported rank for type A");
      t.d.assign(rank, 1);
      chain(1, rank);
      return t;
    case 'B':
      if (rank < 2) throw std::invalid_argument("unsupported rank for type B");
      t.d.assign(rank, 2);
      t.d[rank - 1] = 1;
      chain(1, rank);
      return t;
    case 'C':
      if (rank < 2) throw std::invalid_argument("unsupported rank for type C");
      t.d.assign(rank, 1);
      t.d[rank - 1] = 2;
      chain(1, rank);
      return t;
    case 'D':
      if (rank < 3) throw std::invalid_argument("unsupported rank for type D");
      t.d.assign(rank, 1);
      chain(1, rank - 2);
      t.edges.push_back({rank - 2, rank - 1});
      t.edges.push_back({rank - 2, rank});
      return t;
    case 'E':
      if (rank < 6 || rank > 8) throw std::invalid_argument("unsupported rank for type E");
      t.d.assign(rank, 1);
      t.edges.push_back({1, 3});
      t.edges.push_back({3, 4});
      t.edges.push_back({2, 4});
      for (int i = 4; i < rank; ++i) t.edges.push_back({i, i + 1});
      return t;
    case 'F':
      if (rank != 4) throw std::invalid_argument("unsupported rank for type F");
      t.d = {2, 2, 1, 1};
      chain(1, 4);
      return t;
    case 'G':
      if (rank != 2) throw std::invalid_argument("unsupported rank for type G");
      t.d = {1, 3};
      chain(1, 2);
      return t;
    default:
      throw std::invalid_argument("unsupported type label");
  }
}

uint64_t key_of(const std::vector<int>& c) {
  uint64_t k = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] > 15) throw std::logic_error("root coefficient out of key range");
    k |= uint64_t(c[i]) << (4 * i);
  }
  return k;
}

}  // namespace

Root RootSystem::root(int signed_idx) const {
  if (signed_idx == 0 || std::abs(signed_idx) > npos)
    throw std::invalid_argument("root index out of range");
  Root r;
  r.signed_index = signed_idx;
  r.coeffs = pos[std::abs(signed_idx) - 1];
  if (signed_idx < 0)
    for (auto& c : r.coeffs) c = -c;
  r.height = height(signed_idx);
  return r;
}

bool RootSystem::is_long(int signed_idx) const {
  int dmax = *std::max_element(dlen.begin(), dlen.end());
  return dlen[std::abs(signed_idx) - 1] == dmax;
}

int RootSystem::index_of(const std::vector<int>& coeffs) const {
  bool all_nonneg = true, all_nonpos = true;
  for (int c : coeffs) {
    if (c < 0) all_nonneg = false;
    if (c > 0) all_nonpos = false;
  }
  if (!all_nonneg && !all_nonpos) return 0;
  std::vector<int> c = coeffs;
  int sign = 1;
  if (all_nonpos && !all_nonneg) {
    sign = -1;
    for (auto& x : c) x = -x;
  }
  // beyond the key packing range is beyond every root coefficient
  for (int x : c)
    if (x > 15) return 0;
  auto it = index_.find(key_of(c));
  return it == index_.end() ? 0 : sign * it->second;
}

int RootSystem::string_down(int alpha, int beta) const {
  int p = 0, cur = beta;
  while (true) {
    cur = sum_index(cur, -alpha);
    if (cur == 0) break;
    ++p;
  }
  return p;
}

int compare_roots(const RootSystem& rs, const Root& a, const Root& b) {
  if (a.signed_index <= 0 || b.signed_index <= 0)
    throw std::invalid_argument("compare_roots: positive roots only");
  if (a.coeffs.size() != size_t(rs.rank) || b.coeffs.size() != size_t(rs.rank))
    throw std::invalid_argument("compare_roots: root from a different system");
  if (a.height != b.height) return a.height < b.height ? -1 : 1;
  for (int k = 0; k < rs.rank; ++k) {
    int d = a.coeffs[k] - b.coeffs[k];
    if (d != 0) return d > 0 ? -1 : 1;
  }
  return 0;
}

RootSystem build_root_system(const std::string& type_label) {
  if (type_label.size() < 2) throw std::invalid_argument("unsupported type label");
  char letter = type_label[0];
  int rank = std::atoi(type_label.c_str() + 1);
  if (rank <= 0 || rank > 8) throw std::invalid_argument("unsupported type label");
  TypeData td = type_data(letter, rank);

  RootSystem rs;
  rs.label = type_label;
  rs.letter = letter;
  rs.rank = rank;
  rs.simple_d = td.d;

  // Symmetrized Cartan data on the simples: (alpha_i, alpha_j) is
  // 2 d_i on the diagonal, -max(d_i,d_j) across an edge, 0 otherwise.
  std::vector<std::vector<int>> gram(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) gram[i][i] = 2 * td.d[i];
  for (auto [i, j] : td.edges) {
    int g = -std::max(td.d[i - 1], td.d[j - 1]);
    gram[i - 1][j - 1] = gram[j - 1][i - 1] = g;
  }
  auto pair_simple = [&](const std::vector<int>& beta, int i) {
    // <beta, alpha_i^> = (beta, alpha_i)/d_i
    int s = 0;
    for (int k = 0; k < rank; ++k) s += beta[k] * gram[k][i];
    if (s % td.d[i] != 0) throw std::logic_error("non-integral Cartan pairing");
    return s / td.d[i];
  };

  // Closure from the simples, height by height: beta + alpha_i is a
  // root iff p - <beta, alpha_i^> > 0 with p the depth of the
  // alpha_i-string below beta.
  std::vector<std::vector<int>> roots;
  std::unordered_map<uint64_t, int> seen;  // -> height, 1-based presence
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    roots.push_back(e);
    seen[key_of(e)] = 1;
  }
  size_t lo = 0;
  while (lo < roots.size()) {
    size_t hi = roots.size();
    for (size_t r = lo; r < hi; ++r)
      for (int i = 0; i < rank; ++i) {
        std::vector<int> beta = roots[r];
        int p = 0;
        {
          std::vector<int> down = beta;
          while (true) {
            down[i] -= 1;
            bool zero = std::all_of(down.begin(), down.end(), [](int c) { return c == 0; });
            if (zero || down[i] < 0 || !seen.count(key_of(down))) break;
            ++p;
          }
        }
        if (p - pair_simple(beta, i) <= 0) continue;
        beta[i] += 1;
        if (seen.emplace(key_of(beta), 1).second) roots.push_back(beta);
      }
    lo = hi;
  }

  std::sort(roots.begin(), roots.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
    int ha = 0, hb = 0;
    for (int k = 0; k < rank; ++k) ha += a[k], hb += b[k];
    if (ha != hb) return ha < hb;
    for (int k = 0; k < rank; ++k)
      if (a[k] != b[k]) return a[k] > b[k];
    return false;
  });

  rs.npos = int(roots.size());
  rs.pos = std::move(roots);
  for (int i = 0; i < rs.npos; ++i) {
    rs.index_[key_of(rs.pos[i])] = i + 1;
    int h = 0, g = 0;
    for (int k = 0; k < rank; ++k) h += rs.pos[i][k];
    rs.ht.push_back(h);
    // (alpha,alpha)/2 from the Gram form
    for (int k = 0; k < rank; ++k)
      for (int m = 0; m < rank; ++m) g += rs.pos[i][k] * rs.pos[i][m] * gram[k][m];
    if (g % 2 != 0) throw std::logic_error("odd root norm");
    rs.dlen.push_back(g / 2);
  }

  // pairings and coroot coordinates
  rs.pp.assign(rs.npos, std::vector<int8_t>(rs.npos, 0));
  for (int i = 0; i < rs.npos; ++i)
    for (int j = 0; j < rs.npos; ++j) {
      // <alpha_i, alpha_j^> = (alpha_i, alpha_j) / d_j
      int s = 0;
      for (int k = 0; k < rank; ++k)
        for (int m = 0; m < rank; ++m) s += rs.pos[i][k] * rs.pos[j][m] * gram[k][m];
      if (s % rs.dlen[j] != 0) throw std::logic_error("non-integral pairing");
      int v = s / rs.dlen[j];
      if (v < -3 || v > 3) {
        if (i != j) throw std::logic_error("pairing out of range");
      }
      rs.pp[i][j] = int8_t(v);
    }
  for (int i = 0; i < rs.npos; ++i) {
    std::vector<int> m(rank);
    for (int k = 0; k < rank; ++k) {
      int num = rs.pos[i][k] * td.d[k];
      if (num % rs.dlen[i] != 0) throw std::logic_error("non-integral coroot coordinate");
      m[k] = num / rs.dlen[i];
    }
    rs.corow.push_back(std::move(m));
  }

  // sum table over signed pairs
  int S = rs.nslots();
  rs.sumtab.assign(size_t(S) * S, 0);
  auto coeffs_of_slot = [&](int s) {
    std::vector<int> c = rs.pos[s < rs.npos ? s : s - rs.npos];
    if (s >= rs.npos)
      for (auto& x : c) x = -x;
    return c;
  };
  for (int s1 = 0; s1 < S; ++s1) {
    std::vector<int> c1 = coeffs_of_slot(s1);
    for (int s2 = 0; s2 < S; ++s2) {
      std::vector<int> c = coeffs_of_slot(s2);
      for (int k = 0; k < rank; ++k) c[k] += c1[k];
      rs.sumtab[size_t(s1) * S + s2] = rs.index_of(c);
    }
  }

  // reflection table: s_alpha(beta) = beta - <beta,alpha^> alpha
  rs.refltab.assign(size_t(rs.npos) * S, 0);
  for (int a = 1; a <= rs.npos; ++a)
    for (int s = 0; s < S; ++s) {
      int b = rs.signed_of(s);
      std::vector<int> c = coeffs_of_slot(s);
      int pr = rs.pairing(b, a);
      for (int k = 0; k < rank; ++k) c[k] -= pr * rs.pos[a - 1][k];
      int img = rs.index_of(c);
      if (img == 0) throw std::logic_error("reflection left the root system");
      rs.refltab[size_t(a - 1) * S + s] = rs.slot(img);
    }

  return rs;
}

DynkinSymmetry dynkin_symmetry(const RootSystem& rs, char kind) {
  DynkinSymmetry sym;
  sym.kind = kind;
  sym.simple_map.assign(rs.rank + 1, 0);
  sym.squares.assign(rs.rank + 1, false);
  auto set = [&](std::initializer_list<std::pair<int, int>> pairs) {
    for (auto [a, b] : pairs) sym.simple_map[a] = b;
  };
  if (kind == 't') {
    if (rs.label == "D4") {
      set({{1, 3}, {3, 4}, {4, 1}, {2, 2}});
    } else if (rs.label == "E6") {
      set({{1, 6}, {6, 1}, {3, 5}, {5, 3}, {2, 2}, {4, 4}});
    } else {
      throw std::invalid_argument("graph symmetry not available for " + rs.label);
    }
    return sym;
  }
  if (kind == 'p') {
    if (rs.label == "G2") {
      set({{1, 2}, {2, 1}});
    } else if (rs.label == "F4") {
      set({{1, 4}, {4, 1}, {2, 3}, {3, 2}});
    } else if (rs.label == "B2" || rs.label == "C2") {
      set({{1, 2}, {2, 1}});
    } else {
      throw std::invalid_argument("exceptional isogeny not available for " + rs.label);
    }
    for (int i = 1; i <= rs.rank; ++i) sym.squares[i] = !rs.is_long(i);
    return sym;
  }
  throw std::invalid_argument("unknown symmetry kind");
}

const RootSystem& cached_root_system(const std::string& type_label) {
  static std::mutex mtx;
  static std::map<std::string, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto& slot = cache[type_label];
  if (!slot) slot = std::make_unique<RootSystem>(build_root_system(type_label));
  return *slot;
}

std::vector<int32_t> symmetry_root_perm(const RootSystem& rs, const DynkinSymmetry& sym) {
  std::vector<int32_t> perm(rs.nslots());
  for (int s = 0; s < rs.nslots(); ++s) {
    int b = rs.signed_of(s);
    int idx = std::abs(b);
    std::vector<int> img(rs.rank, 0);
    if (sym.kind == 't') {
      for (int k = 0; k < rs.rank; ++k) img[sym.simple_map[k + 1] - 1] += rs.pos[idx - 1][k];
    } else {
      // psi sends alpha to its coroot read as a root of the dual
      // system, identified with the same system by simple_map
      for (int k = 0; k < rs.rank; ++k) img[sym.simple_map[k + 1] - 1] += rs.corow[idx - 1][k];
    }
    int i = rs.index_of(img);
    if (i == 0) throw std::logic_error("diagram symmetry left the root system");
    perm[s] = rs.slot(b > 0 ? i : -i);
  }
  return perm;
}

}  // namespace chev
