#ifndef FQK_QUIVER_HPP
#define FQK_QUIVER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fqk/error.hpp"
#include "fqk/fusion_ring.hpp"
#include "fqk/integer.hpp"
#include "fqk/module_category.hpp"

namespace fqk {

using EdgeLabel = std::variant<RingElement, ActionLabel>;

struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;
  EdgeLabel label;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.source == b.source && a.target == b.target && a.label == b.label;
  }
};

/// Quiver with edges labelled by objects of a fusion category (full-ring
/// mode) or by action matrices on a fixed Irr(M) (partial mode).
struct FusionQuiver {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::shared_ptr<const FusionRing> ring;        // null in partial mode
  std::shared_ptr<const ModuleCategory> module;  // null means the regular module

  std::size_t size() const noexcept { return vertices.size(); }

  bool partial() const {
    return std::any_of(edges.begin(), edges.end(), [](const Edge& e) {
      return std::holds_alternative<ActionLabel>(e.label);
    });
  }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == name) return i;
    return std::nullopt;
  }

  bool has_loop() const {
    return std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.source == e.target; });
  }

  friend bool operator==(const FusionQuiver& a, const FusionQuiver& b) {
    auto same_ptr = [](const auto& x, const auto& y) {
      return (!x && !y) || (x && y && *x == *y);
    };
    return a.vertices == b.vertices && a.edges == b.edges && same_ptr(a.ring, b.ring) &&
           same_ptr(a.module, b.module);
  }
};

inline void check_edges(const FusionQuiver& q) {
  for (const auto& e : q.edges)
    if (e.source >= q.size() || e.target >= q.size())
      throw Error(ErrorKind::OutOfRange, "edge endpoint out of range");
}

/// The module used for unfolding and dimension vectors.
inline std::shared_ptr<const ModuleCategory> default_module(const FusionQuiver& q) {
  if (q.module) return q.module;
  if (q.ring) return std::make_shared<const ModuleCategory>(regular_module(q.ring));
  throw Error(ErrorKind::MissingAction, "quiver has neither a ring nor a module");
}

inline bool is_zero_label(const EdgeLabel& l) {
  if (const auto* r = std::get_if<RingElement>(&l)) return r->is_zero();
  return std::get<ActionLabel>(l).matrix.is_zero();
}

/// Action of a label on [M].
inline IntMatrix label_action(const ModuleCategory& M, const EdgeLabel& l) {
  if (const auto* r = std::get_if<RingElement>(&l)) {
    if (!M.has_ring())
      throw Error(ErrorKind::MissingAction, "ring label " + r->str() + " on an action-only module");
    return M.action_of(*r);
  }
  const auto& a = std::get<ActionLabel>(l);
  if (a.matrix.rows() != M.size() || a.matrix.cols() != M.size())
    throw Error(ErrorKind::MissingAction, "action label is not a " + std::to_string(M.size()) + "x" +
                                              std::to_string(M.size()) + " matrix");
  return a.matrix;
}

/// FPdim of a label: linear extension of the ring's FPdim, or the Perron
/// eigenvalue of an action matrix.
inline double label_fpdim(const EdgeLabel& l, const FPVector* fp) {
  if (const auto* r = std::get_if<RingElement>(&l)) {
    if (!fp) throw Error(ErrorKind::MissingAction, "ring label without a fusion ring");
    return fpdim_of(*fp, *r);
  }
  const auto& a = std::get<ActionLabel>(l);
  if (a.fpdim) return *a.fpdim;
  return perron(a.matrix).value;
}

inline double label_fpdim(const FusionQuiver& q, const EdgeLabel& l) {
  if (std::holds_alternative<RingElement>(l)) {
    if (!q.ring) throw Error(ErrorKind::MissingAction, "ring label without a fusion ring");
    const FPVector fp = fpdim(*q.ring);
    return label_fpdim(l, &fp);
  }
  return label_fpdim(l, nullptr);
}

inline EdgeLabel dual_label(const FusionQuiver& q, const EdgeLabel& l) {
  if (const auto* r = std::get_if<RingElement>(&l)) {
    if (!q.ring) throw Error(ErrorKind::MissingAction, "ring label without a fusion ring");
    return dual(*q.ring, *r);
  }
  const auto& a = std::get<ActionLabel>(l);
  return ActionLabel{a.matrix.transpose(), a.fpdim};
}

inline EdgeLabel add_labels(const EdgeLabel& x, const EdgeLabel& y) {
  if (x.index() != y.index())
    throw Error(ErrorKind::InvalidParameter, "cannot merge a ring label with an action label");
  if (const auto* r = std::get_if<RingElement>(&x)) return *r + std::get<RingElement>(y);
  const auto& a = std::get<ActionLabel>(x);
  const auto& b = std::get<ActionLabel>(y);
  std::optional<double> f;
  if (a.fpdim && b.fpdim) f = *a.fpdim + *b.fpdim;
  return ActionLabel{a.matrix + b.matrix, f};
}

/// Merges parallel edges by adding labels and drops zero labels. Edge order
/// follows the first occurrence of each (source, target) pair.
inline FusionQuiver normalize(const FusionQuiver& q) {
  check_edges(q);
  FusionQuiver out = q;
  out.edges.clear();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
  for (const auto& e : q.edges) {
    auto key = std::make_pair(e.source, e.target);
    auto it = slot.find(key);
    if (it == slot.end()) {
      slot.emplace(key, out.edges.size());
      out.edges.push_back(e);
    } else {
      out.edges[it->second].label = add_labels(out.edges[it->second].label, e.label);
    }
  }
  std::erase_if(out.edges, [](const Edge& e) { return is_zero_label(e.label); });
  return out;
}

inline bool is_sink(const FusionQuiver& q, std::size_t v) {
  return std::none_of(q.edges.begin(), q.edges.end(), [v](const Edge& e) { return e.source == v; });
}

inline bool is_source(const FusionQuiver& q, std::size_t v) {
  return std::none_of(q.edges.begin(), q.edges.end(), [v](const Edge& e) { return e.target == v; });
}

/// Reverses every arrow at a sink or source v and dualises its label.
inline FusionQuiver reflect_quiver(const FusionQuiver& q, std::size_t v) {
  if (v >= q.size()) throw Error(ErrorKind::OutOfRange, "vertex out of range");
  if (!is_sink(q, v) && !is_source(q, v))
    throw Error(ErrorKind::NotReflectable, "vertex " + q.vertices[v] + " is neither a sink nor a source");
  FusionQuiver out = q;
  for (auto& e : out.edges)
    if (e.source == v || e.target == v) {
      std::swap(e.source, e.target);
      e.label = dual_label(q, e.label);
    }
  return out;
}

struct WeightedEdge {
  std::size_t u = 0;
  std::size_t w = 0;  // u < w
  double weight = 0.0;
};

/// |Q|: the underlying undirected graph with FPdim labels.
struct LabeledGraph {
  std::vector<std::string> vertices;
  std::vector<WeightedEdge> edges;

  std::size_t size() const noexcept { return vertices.size(); }

  /// Gram matrix of the symmetric form: 2 on the diagonal, minus the label
  /// off the diagonal.
  std::vector<std::vector<double>> gram() const {
    const std::size_t n = size();
    std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) g[i][i] = 2.0;
    for (const auto& e : edges) {
      g[e.u][e.w] -= e.weight;
      g[e.w][e.u] -= e.weight;
    }
    return g;
  }
};

struct LabelledCoxeterEdge {
  std::size_t u = 0;
  std::size_t w = 0;  // u < w
  CoxeterLabel m;
};

/// Gamma_Q: edges labelled by m >= 3 or infinity.
struct CoxeterGraph {
  std::vector<std::string> vertices;
  std::vector<LabelledCoxeterEdge> edges;

  std::size_t size() const noexcept { return vertices.size(); }

  std::vector<std::vector<double>> gram() const {
    const std::size_t n = size();
    std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) g[i][i] = 2.0;
    for (const auto& e : edges) {
      g[e.u][e.w] -= e.m.two_cos();
      g[e.w][e.u] -= e.m.two_cos();
    }
    return g;
  }
};

/// Loops carry no off-diagonal entry and are ignored here.
inline LabeledGraph labeled_graph(const FusionQuiver& q) {
  check_edges(q);
  std::optional<FPVector> fp;
  if (q.ring) fp = fpdim(*q.ring);
  std::map<std::pair<std::size_t, std::size_t>, double> acc;
  for (const auto& e : q.edges) {
    if (e.source == e.target) continue;
    const double f = label_fpdim(e.label, fp ? &*fp : nullptr);
    acc[{std::min(e.source, e.target), std::max(e.source, e.target)}] += f;
  }
  LabeledGraph g;
  g.vertices = q.vertices;
  for (const auto& [k, f] : acc) g.edges.push_back({k.first, k.second, f});
  return g;
}

inline CoxeterGraph coxeter_graph(const LabeledGraph& g, double tol = default_tolerance()) {
  CoxeterGraph c;
  c.vertices = g.vertices;
  for (const auto& e : g.edges) {
    const CoxeterLabel m = angle_label(e.weight, tol);
    if (m.is_finite() && m.value() == 2) continue;
    c.edges.push_back({e.u, e.w, m});
  }
  return c;
}

inline CoxeterGraph coxeter_graph(const FusionQuiver& q, double tol = default_tolerance()) {
  return coxeter_graph(labeled_graph(q), tol);
}

/// Sinks first: vertex i is a sink once 1..i-1 have been reflected. Empty
/// when Q has a loop or a directed cycle.
inline std::optional<std::vector<std::size_t>> admissible_sink_ordering(const FusionQuiver& q) {
  check_edges(q);
  const std::size_t n = q.size();
  std::vector<std::size_t> outdeg(n, 0);
  std::vector<std::vector<std::size_t>> preds(n);
  for (const auto& e : q.edges) {
    if (e.source == e.target) return std::nullopt;
    ++outdeg[e.source];
    preds[e.target].push_back(e.source);
  }
  std::vector<bool> done(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  while (order.size() < n) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!done[v] && outdeg[v] == 0) {
        pick = v;
        break;
      }
    if (pick == n) return std::nullopt;
    done[pick] = true;
    order.push_back(pick);
    for (std::size_t p : preds[pick]) --outdeg[p];
  }
  return order;
}

}  // namespace fqk

#endif  // FQK_QUIVER_HPP
