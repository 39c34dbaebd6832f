#include "chev/repmod.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace chev {

SpMat sp_from_dense(const ZMat& a) {
  if (a.rows != a.cols) throw std::invalid_argument("sparse matrices are square");
  SpMat s;
  s.n = a.rows;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (a.at(i, j) != 0) {
        if (!a.at(i, j).fits_slong_p()) throw std::overflow_error("sparse entry overflow");
        s.ent.push_back({i, j, a.at(i, j).get_si()});
      }
  return s;
}

ZMat sp_to_dense(const SpMat& a) {
  ZMat d(ZRing{}, a.n, a.n);
  for (const auto& e : a.ent) d.at(e.r, e.c) = (long)e.v;
  return d;
}

SpMat sp_mul(const SpMat& a, const SpMat& b) {
  // index b by row, then accumulate a's entries against it
  std::vector<std::pair<size_t, size_t>> brow(b.n, {0, 0});
  {
    size_t i = 0;
    while (i < b.ent.size()) {
      size_t j = i;
      while (j < b.ent.size() && b.ent[j].r == b.ent[i].r) ++j;
      brow[b.ent[i].r] = {i, j};
      i = j;
    }
  }
  std::map<std::pair<int, int>, long long> acc;
  for (const auto& ea : a.ent) {
    auto [lo, hi] = brow[ea.c];
    for (size_t k = lo; k < hi; ++k) {
      const auto& eb = b.ent[k];
      acc[{ea.r, eb.c}] += ea.v * eb.v;
    }
  }
  SpMat s;
  s.n = a.n;
  for (const auto& [rc, v] : acc)
    if (v != 0) s.ent.push_back({rc.first, rc.second, v});
  return s;
}

SpMat sp_divexact(const SpMat& a, long long k) {
  SpMat s;
  s.n = a.n;
  for (const auto& e : a.ent) {
    if (e.v % k != 0) throw std::domain_error("inexact sparse division");
    s.ent.push_back({e.r, e.c, e.v / k});
  }
  return s;
}

const RootSystem& RepModule::rootsys() const { return cached_root_system(group); }

int weight_pairing(const RootSystem& rs, const RepModule& m, int basis_vec, int signed_root) {
  int a = signed_root > 0 ? signed_root : -signed_root;
  int sign = signed_root > 0 ? 1 : -1;
  long s = 0;
  for (int i = 0; i < rs.rank; ++i) s += (long)rs.corow[a - 1][i] * m.wtco[basis_vec][i];
  return int(sign * s);
}

namespace {

struct Factor {
  char kind;  // 'x' or 'h'
  int index;
  mpq_class coeff;
};

// n(i) stands for x_i(1) x_{-i}(-1) x_i(1)
std::vector<Factor> desugar(const GeneratorWord& w) {
  std::vector<Factor> out;
  for (const auto& t : w.terms) {
    if (t.kind == 'n') {
      out.push_back({'x', t.index, 1});
      out.push_back({'x', -t.index, -1});
      out.push_back({'x', t.index, 1});
    } else {
      out.push_back({t.kind, t.index, t.coeff});
    }
  }
  return out;
}

// words whose x-coefficients are integers and h-coefficients are +-1
// stay inside the integer lattice
bool integer_fast_path(const std::vector<Factor>& fs) {
  for (const auto& f : fs) {
    if (f.coeff.get_den() != 1) return false;
    if (f.kind == 'h' && f.coeff != 1 && f.coeff != -1) return false;
  }
  return true;
}

template <class R>
Mat<R> eval_ring(const R& ring, const RepModule& m, const std::vector<Factor>& fs) {
  const RootSystem& rs = m.rootsys();
  Mat<R> acc = Mat<R>::identity(ring, m.dim);
  for (const auto& f : fs) {
    if (f.kind == 'x') {
      apply_x_right(acc, m.xparts[rs.slot(f.index)], lift_q(ring, f.coeff));
    } else {
      apply_h_right(acc, rs, m, f.index, lift_q(ring, f.coeff));
    }
  }
  return acc;
}

ExactMatrix evaluate_at_impl(const RepModule& m, const GeneratorWord& w, long p) {
  auto fs = desugar(w);
  if (p == 0) {
    if (integer_fast_path(fs)) return to_qmat(eval_ring(ZRing{}, m, fs));
    return eval_ring(QRing{}, m, fs);
  }
  return eval_ring(FpRing(p), m, fs);
}

}  // namespace

ExactMatrix evaluate_word(const RepModule& m, const GeneratorWord& w) {
  return evaluate_at_impl(m, w, m.p);
}

ExactMatrix evaluate_word_at(const RepModule& m, const GeneratorWord& w, long p) {
  return evaluate_at_impl(m, w, p);
}

bool is_identity(const ExactMatrix& g) {
  return std::visit([](const auto& a) { return a.is_identity(); }, g);
}

bool is_scalar_matrix(const ExactMatrix& g, std::string* scalar) {
  return std::visit(
      [&](const auto& a) {
        typename std::decay_t<decltype(a)>::elem c;
        if (!a.is_scalar(c)) return false;
        if (scalar) *scalar = std::decay_t<decltype(a.ring)>::str(c);
        return true;
      },
      g);
}

}  // namespace chev
