#ifndef FQK_REFLECTION_HPP
#define FQK_REFLECTION_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fqk/coxeter.hpp"
#include "fqk/error.hpp"
#include "fqk/fusion_ring.hpp"
#include "fqk/integer.hpp"
#include "fqk/module_category.hpp"
#include "fqk/quantum.hpp"
#include "fqk/quiver.hpp"
#include "fqk/unfolding.hpp"

namespace fqk {

/// <alpha_v, alpha_w>_Q with values in [C].
struct BilinearFormQ {
  std::vector<std::vector<RingElement>> entries;

  std::size_t size() const noexcept { return entries.size(); }
  const RingElement& operator()(std::size_t v, std::size_t w) const { return entries[v][w]; }
};

inline void require_full_ring(const FusionQuiver& q) {
  if (!q.ring || q.partial())
    throw Error(ErrorKind::MissingAction, "operation needs full-ring labels; only the real form is available");
}

/// 2[1] on the diagonal; an edge v -> w labelled Pi contributes -[dual Pi]
/// at (v, w) and -[Pi] at (w, v). Loops are ignored.
inline BilinearFormQ bilinear_form(const FusionQuiver& q) {
  require_full_ring(q);
  check_edges(q);
  const FusionRing& ring = *q.ring;
  const std::size_t n = q.size();
  BilinearFormQ b;
  b.entries.assign(n, std::vector<RingElement>(n, ring.zero()));
  for (std::size_t v = 0; v < n; ++v) b.entries[v][v] = Integer(2) * ring.one();
  for (const auto& e : q.edges) {
    if (e.source == e.target) continue;
    const auto& pi = std::get<RingElement>(e.label);
    b.entries[e.source][e.target] -= dual(ring, pi);
    b.entries[e.target][e.source] -= pi;
  }
  return b;
}

/// The form pushed to R by FPdim.
inline std::vector<std::vector<double>> real_bilinear_form(const FusionQuiver& q) {
  return labeled_graph(q).gram();
}

using ReflectionMatrix = std::vector<std::vector<RingElement>>;

/// sigma_v as a matrix over [C]: identity except row v, which is
/// (-<alpha_v, alpha_w>) off the diagonal and -1 on it.
inline ReflectionMatrix reflection_matrix(const FusionQuiver& q, std::size_t v) {
  if (v >= q.size()) throw Error(ErrorKind::OutOfRange, "vertex out of range");
  const BilinearFormQ b = bilinear_form(q);
  const FusionRing& ring = *q.ring;
  const std::size_t n = q.size();
  ReflectionMatrix r(n, std::vector<RingElement>(n, ring.zero()));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = ring.one();
  for (std::size_t w = 0; w < n; ++w) r[v][w] = w == v ? -ring.one() : -b(v, w);
  return r;
}

/// Class in [M]^V: one module element per vertex.
using DimensionVector = std::vector<ModuleElement>;

inline bool is_positive(const DimensionVector& x) {
  bool nonzero = false;
  for (const auto& c : x) {
    if (!c.is_nonnegative()) return false;
    nonzero = nonzero || !c.is_zero();
  }
  return nonzero;
}

inline std::string to_string(const DimensionVector& x) {
  std::string s;
  for (std::size_t v = 0; v < x.size(); ++v) s += (v ? " " : "") + x[v].str();
  return s;
}

/// Simple reflections on [M]^V. Row v of sigma_v takes x_w through the
/// label's action on edges w -> v and through the dual label's action on
/// edges v -> w.
class ReflectionAction {
 public:
  ReflectionAction(const FusionQuiver& q, const ModuleCategory& M) : qsize_(q.size()), msize_(M.size()) {
    check_edges(q);
    rows_.resize(qsize_);
    for (const auto& e : q.edges) {
      if (e.source == e.target) continue;
      rows_[e.target].push_back({e.source, label_action(M, e.label)});
      rows_[e.source].push_back({e.target, label_action(M, dual_label(q, e.label))});
    }
  }

  std::size_t qsize() const noexcept { return qsize_; }
  std::size_t msize() const noexcept { return msize_; }

  DimensionVector zero() const { return DimensionVector(qsize_, ModuleElement(msize_)); }

  /// [L] alpha_v.
  DimensionVector simple(std::size_t v, std::size_t l) const {
    DimensionVector x = zero();
    x.at(v) = ModuleElement::basis(msize_, l);
    return x;
  }

  DimensionVector apply(std::size_t v, DimensionVector x) const {
    check(x);
    if (v >= qsize_) throw Error(ErrorKind::OutOfRange, "vertex out of range");
    ModuleElement nv = -x[v];
    for (const auto& [w, a] : rows_[v]) nv += a.apply(x[w]);
    x[v] = std::move(nv);
    return x;
  }

 private:
  void check(const DimensionVector& x) const {
    if (x.size() != qsize_) throw Error(ErrorKind::DimensionMismatch, "dimension vector has wrong length");
    for (const auto& c : x)
      if (c.size() != msize_) throw Error(ErrorKind::DimensionMismatch, "module element has wrong length");
  }

  std::size_t qsize_, msize_;
  std::vector<std::vector<std::pair<std::size_t, IntMatrix>>> rows_;
};

inline DimensionVector reflect_dimvec(const FusionQuiver& q, const ModuleCategory& M, std::size_t v,
                                      const DimensionVector& x) {
  return ReflectionAction(q, M).apply(v, x);
}

/// Common Perron vector of the module: of the ring's action when present,
/// otherwise of the quiver's labels and their transposes.
inline std::vector<double> module_fp_vector(const FusionQuiver& q, const ModuleCategory& M) {
  if (M.has_ring()) return module_fpdims(M);
  const std::size_t m = M.size();
  std::vector<std::vector<double>> sum(m, std::vector<double>(m, 0.0));
  for (const auto& e : q.edges) {
    const auto a = label_action(M, e.label).to_double();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) sum[i][j] += a[i][j] + a[j][i];
  }
  return perron(sum).vector;
}

/// FPdim image of a dimension vector in R^V.
inline std::vector<double> fpdim_image(const DimensionVector& x, const std::vector<double>& fp) {
  std::vector<double> out(x.size(), 0.0);
  for (std::size_t v = 0; v < x.size(); ++v)
    for (std::size_t l = 0; l < fp.size(); ++l) out[v] += to_double(x[v][l]) * fp[l];
  return out;
}

inline double fp_norm(const DimensionVector& x, const std::vector<double>& fp) {
  double s = 0.0;
  for (double f : fpdim_image(x, fp)) s += std::abs(f);
  return s;
}

/// Length of the orbit of x under repeated application of step. Returns
/// nullopt (infinite) when the orbit has not closed after cap steps and the
/// FP norm has grown strictly over the last 50 of them. A periodic orbit of
/// length m can show about m/2 steps of growth, so the certificate is only
/// trusted past the cap, and the cap exceeds every order we expect.
template <class Step>
std::optional<std::uint64_t> orbit_length(const DimensionVector& x, Step step, const std::vector<double>& fp,
                                          std::uint64_t cap) {
  DimensionVector y = x;
  std::uint64_t growth = 0;
  double last = fp_norm(x, fp);
  for (std::uint64_t k = 1; k <= cap; ++k) {
    y = step(y);
    if (y == x) return k;
    const double nrm = fp_norm(y, fp);
    // once the norm overflows it can only have kept growing
    growth = nrm > last || (std::isinf(nrm) && std::isinf(last)) ? growth + 1 : 0;
    last = nrm;
  }
  if (growth >= 50) return std::nullopt;
  throw Error(ErrorKind::NonConvergence,
              "orbit neither closed nor diverged within " + std::to_string(cap) + " steps");
}

inline FusionQuiver two_vertex_quiver(std::shared_ptr<const FusionRing> ring,
                                      std::shared_ptr<const ModuleCategory> module, EdgeLabel pi) {
  FusionQuiver q;
  q.vertices = {"a", "b"};
  q.ring = std::move(ring);
  q.module = std::move(module);
  q.edges.push_back({0, 1, std::move(pi)});
  return q;
}

inline double label_fpdim(const ModuleCategory& M, const EdgeLabel& pi) {
  if (std::holds_alternative<RingElement>(pi)) {
    const FPVector fp = fpdim(M.ring());
    return label_fpdim(pi, &fp);
  }
  return label_fpdim(pi, nullptr);
}

struct RankTwoOrder {
  CoxeterLabel by_fpdim;
  CoxeterLabel by_quantum;               // first vanishing [k]
  std::vector<CoxeterLabel> by_orbit;    // one per simple of M
  CoxeterLabel order;
};

/// Order of sigma_a sigma_b on the quiver a -> b labelled Pi, found three
/// ways: from FPdim(Pi), from the first vanishing quantum number, and from
/// orbit sizes on [L] alpha_a.
inline RankTwoOrder rank_two_order(std::shared_ptr<const ModuleCategory> M, const EdgeLabel& pi,
                                   double tol = default_tolerance()) {
  RankTwoOrder out;
  out.by_fpdim = angle_label(label_fpdim(*M, pi), tol);
  const std::uint64_t expected = out.by_fpdim.is_finite() ? out.by_fpdim.value() : 0;
  const std::uint64_t K = std::max<std::uint64_t>(2 * expected + 1, 40);

  if (const auto* r = std::get_if<RingElement>(&pi); r && M->has_ring()) {
    const auto rep = sign_coherence(M->ring(), *r, K);
    out.by_quantum = rep.minimal_m ? CoxeterLabel(*rep.minimal_m) : CoxeterLabel::infinity();
  } else {
    // [k] evaluated on [M]; it vanishes exactly when [k] does.
    const IntMatrix a = label_action(*M, pi);
    const IntMatrix at = a.transpose();
    const std::size_t m = a.rows();
    IntMatrix prev_d(m, m), prev_dp(m, m), cur_d = IntMatrix::identity(m), cur_dp = cur_d;
    out.by_quantum = CoxeterLabel::infinity();
    for (std::uint64_t k = 2; k <= K; ++k) {
      IntMatrix nd = a * cur_dp - prev_d;
      IntMatrix ndp = at * cur_d - prev_dp;
      prev_d = std::move(cur_d);
      prev_dp = std::move(cur_dp);
      cur_d = std::move(nd);
      cur_dp = std::move(ndp);
      if (cur_d.is_zero() && cur_dp.is_zero()) {
        out.by_quantum = CoxeterLabel(k);
        break;
      }
    }
  }

  const FusionQuiver q = two_vertex_quiver(M->ring_ptr(), M, pi);
  const ReflectionAction act(q, *M);
  const auto fp = module_fp_vector(q, *M);
  const std::uint64_t cap = std::max<std::uint64_t>(1000, 4 * expected);
  auto step = [&](const DimensionVector& y) { return act.apply(0, act.apply(1, y)); };
  for (std::size_t l = 0; l < M->size(); ++l) {
    const auto len = orbit_length(act.simple(0, l), step, fp, cap);
    out.by_orbit.push_back(len ? CoxeterLabel(*len) : CoxeterLabel::infinity());
  }

  out.order = out.by_fpdim;
  bool agree = out.by_quantum == out.order;
  for (const auto& o : out.by_orbit) agree = agree && o == out.order;
  if (!agree) {
    std::string orbits;
    for (const auto& o : out.by_orbit) orbits += " " + o.str();
    throw Error(ErrorKind::InconsistentVerdict, "rank-two order: fpdim " + out.by_fpdim.str() + ", quantum " +
                                                    out.by_quantum.str() + ", orbits" + orbits);
  }
  return out;
}

inline RankTwoOrder rank_two_order(std::shared_ptr<const FusionRing> ring, const RingElement& pi,
                                   double tol = default_tolerance()) {
  return rank_two_order(std::make_shared<const ModuleCategory>(regular_module(std::move(ring))), pi, tol);
}

/// Dimension vector of X^(l)(L) on a -> b labelled Pi:
/// l odd:  [l]_d' [L] alpha_a + [l-1]_d [L] alpha_b,
/// l even: [l-1]_d' [L] alpha_a + [l]_d [L] alpha_b.
/// Checked against l-1 alternating reflections sigma_b, sigma_a, ... of [L] alpha_a.
inline DimensionVector x_ell_dimvec(std::shared_ptr<const ModuleCategory> M, const EdgeLabel& pi,
                                    std::size_t L, std::uint64_t ell, double tol = default_tolerance()) {
  if (L >= M->size()) throw Error(ErrorKind::OutOfRange, "simple index out of range");
  const CoxeterLabel m = angle_label(label_fpdim(*M, pi), tol);
  if (ell < 1 || (m.is_finite() && ell > m.value()))
    throw Error(ErrorKind::OutOfRange, "l = " + std::to_string(ell) + " outside 1.." + m.str());
  const IntMatrix a = label_action(*M, pi);
  const long long l = static_cast<long long>(ell);
  const ModuleElement u = M->simple(L);
  DimensionVector x(2);
  if (ell % 2 == 1) {
    x[0] = qnum_matrix(a, l).second.apply(u);
    x[1] = qnum_matrix(a, l - 1).first.apply(u);
  } else {
    x[0] = qnum_matrix(a, l - 1).second.apply(u);
    x[1] = qnum_matrix(a, l).first.apply(u);
  }

  const FusionQuiver q = two_vertex_quiver(M->ring_ptr(), M, pi);
  const ReflectionAction act(q, *M);
  DimensionVector y = act.simple(0, L);
  for (std::uint64_t i = 1; i < ell; ++i) y = act.apply(i % 2 == 1 ? 1 : 0, y);
  if (!(x == y))
    throw Error(ErrorKind::InconsistentVerdict, "closed form " + to_string(x) + " differs from reflections " +
                                                    to_string(y));
  return x;
}

/// Positive vectors reachable from the [L] alpha_v by simple reflections
/// through positive vectors only, sorted.
inline std::vector<DimensionVector> enumerate_by_reflection_closure(const FusionQuiver& q,
                                                                    const ModuleCategory& M,
                                                                    std::size_t cap = 1'000'000) {
  const ReflectionAction act(q, M);
  std::set<DimensionVector> seen;
  std::deque<DimensionVector> todo;
  for (std::size_t v = 0; v < q.size(); ++v)
    for (std::size_t l = 0; l < M.size(); ++l) {
      auto s = act.simple(v, l);
      seen.insert(s);
      todo.push_back(std::move(s));
    }
  while (!todo.empty()) {
    DimensionVector x = std::move(todo.front());
    todo.pop_front();
    for (std::size_t v = 0; v < q.size(); ++v) {
      DimensionVector y = act.apply(v, x);
      if (!is_positive(y)) continue;
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw Error(ErrorKind::InfiniteType, "reflection closure exceeded the cap");
        todo.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

/// Coefficient of alpha_v is sum_L root(v, L) [L].
inline DimensionVector fold(const UnfoldedQuiver& u, const RootVector& root) {
  DimensionVector x(u.qsize, ModuleElement(u.msize));
  for (std::size_t i = 0; i < root.size(); ++i) x[u.vertex_of(i)][u.simple_of(i)] = Integer(root[i]);
  return x;
}

/// Dimension vectors of the indecomposable representations: positive
/// roots of the unfolded quiver, folded back, and cross-checked against the
/// reflection closure in [M]^V.
inline std::vector<DimensionVector> enumerate_indecomposables(const FusionQuiver& q, const ModuleCategory& M) {
  if (!admissible_sink_ordering(q)) throw Error(ErrorKind::NotAcyclic, "quiver has a loop or a directed cycle");
  const FiniteTypeVerdict verdict = is_finite_type(q, M);
  if (!verdict.finite)
    throw Error(ErrorKind::InfiniteType, "Gamma_Q = " + verdict.gamma.str() + " is not of finite type");
  const UnfoldedQuiver u = unfold(q, M);
  std::vector<DimensionVector> out;
  for (const auto& r : positive_roots_simply_laced(u.quiver)) out.push_back(fold(u, r));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw Error(ErrorKind::InconsistentVerdict, "folding is not injective");
  if (enumerate_by_reflection_closure(q, M) != out)
    throw Error(ErrorKind::InconsistentVerdict, "folded roots and reflection closure differ");
  return out;
}

inline std::vector<DimensionVector> enumerate_indecomposables(const FusionQuiver& q) {
  return enumerate_indecomposables(q, *default_module(q));
}

/// Right multiplication of every coefficient by [L] (M = C).
inline DimensionVector times_simple(const FusionRing& ring, const DimensionVector& x, std::size_t L) {
  DimensionVector out;
  for (const auto& c : x) {
    const RingElement p = multiply(ring, RingElement(c.coeffs()), ring.simple(L));
    out.push_back(ModuleElement(p.coeffs()));
  }
  return out;
}

struct ExtendedRoots {
  std::vector<DimensionVector> positive;  // W(Q)-orbit of the alpha_v, positive part
  std::vector<DimensionVector> extended;  // = indecomposables for M = C
  /// For each positive root r, the list r [L] over the simples L.
  std::vector<std::pair<DimensionVector, std::vector<DimensionVector>>> classes;
};

inline ExtendedRoots extended_positive_roots(const FusionQuiver& q, std::size_t cap = 1'000'000) {
  require_full_ring(q);
  const FusionRing& ring = *q.ring;
  const ModuleCategory M = regular_module(q.ring);
  ExtendedRoots out;
  out.extended = enumerate_indecomposables(q, M);

  // Full orbit, negatives included; finite because W(Q) is.
  const ReflectionAction act(q, M);
  std::set<DimensionVector> orbit;
  std::deque<DimensionVector> todo;
  for (std::size_t v = 0; v < q.size(); ++v) {
    auto s = act.simple(v, ring.unit());
    if (orbit.insert(s).second) todo.push_back(std::move(s));
  }
  while (!todo.empty()) {
    DimensionVector x = std::move(todo.front());
    todo.pop_front();
    for (std::size_t v = 0; v < q.size(); ++v) {
      DimensionVector y = act.apply(v, x);
      if (orbit.insert(y).second) {
        if (orbit.size() > cap) throw Error(ErrorKind::InfiniteType, "root orbit exceeded the cap");
        todo.push_back(std::move(y));
      }
    }
  }
  for (const auto& x : orbit)
    if (is_positive(x)) out.positive.push_back(x);

  std::set<DimensionVector> products;
  for (const auto& r : out.positive) {
    std::vector<DimensionVector> cls;
    for (std::size_t l = 0; l < ring.rank(); ++l) {
      cls.push_back(times_simple(ring, r, l));
      products.insert(cls.back());
    }
    out.classes.push_back({r, std::move(cls)});
  }
  if (std::vector<DimensionVector>(products.begin(), products.end()) != out.extended)
    throw Error(ErrorKind::InconsistentVerdict, "positive roots times simples do not give the extended roots");
  return out;
}

/// Order of sigma_{o[0]} ... sigma_{o[n-1]} on [M]^V (nullopt when
/// infinite). The default ordering is the vertex order of the input.
inline std::optional<std::uint64_t> coxeter_element_order(const FusionQuiver& q, const ModuleCategory& M,
                                                          std::optional<std::vector<std::size_t>> ordering = {},
                                                          std::uint64_t cap = 1000) {
  std::vector<std::size_t> o;
  if (ordering) {
    o = *ordering;
  } else {
    o.resize(q.size());
    std::iota(o.begin(), o.end(), std::size_t{0});
  }
  const ReflectionAction act(q, M);
  const auto fp = module_fp_vector(q, M);
  auto step = [&](DimensionVector y) {
    for (auto it = o.rbegin(); it != o.rend(); ++it) y = act.apply(*it, std::move(y));
    return y;
  };
  std::uint64_t order = 1;
  for (std::size_t v = 0; v < q.size(); ++v)
    for (std::size_t l = 0; l < M.size(); ++l) {
      const auto len = orbit_length(act.simple(v, l), step, fp, cap);
      if (!len) return std::nullopt;
      order = std::lcm(order, *len);
    }
  return order;
}

}  // namespace fqk

#endif  // FQK_REFLECTION_HPP
