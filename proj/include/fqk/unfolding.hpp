#ifndef FQK_UNFOLDING_HPP
#define FQK_UNFOLDING_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "fqk/coxeter.hpp"
#include "fqk/error.hpp"
#include "fqk/module_category.hpp"
#include "fqk/ordinary_quiver.hpp"
#include "fqk/quiver.hpp"

namespace fqk {

/// Ordinary quiver on V x Irr(M). Vertex (v, L) has index v * msize + L.
struct UnfoldedQuiver {
  OrdinaryQuiver quiver;
  std::size_t qsize = 0;
  std::size_t msize = 0;

  std::size_t index(std::size_t v, std::size_t l) const { return v * msize + l; }
  std::size_t vertex_of(std::size_t i) const { return i / msize; }
  std::size_t simple_of(std::size_t i) const { return i % msize; }
};

inline UnfoldedQuiver unfold(const FusionQuiver& q, const ModuleCategory& M) {
  check_edges(q);
  UnfoldedQuiver u;
  u.qsize = q.size();
  u.msize = M.size();
  for (const auto& v : q.vertices)
    for (const auto& l : M.names()) u.quiver.vertices.push_back("(" + v + "," + l + ")");
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> mult;
  for (const auto& e : q.edges) {
    const IntMatrix a = label_action(M, e.label);
    for (std::size_t l = 0; l < u.msize; ++l)
      for (std::size_t lp = 0; lp < u.msize; ++lp)
        if (a(lp, l) != 0)
          mult[{u.index(e.source, l), u.index(e.target, lp)}] += a(lp, l).convert_to<std::uint64_t>();
  }
  for (const auto& [k, c] : mult) u.quiver.arrows.push_back({k.first, k.second, c});
  return u;
}

inline UnfoldedQuiver unfold(const FusionQuiver& q) { return unfold(q, *default_module(q)); }

struct UnfoldedComponent {
  std::vector<std::size_t> vertices;
  bool simply_laced = false;
  bool bipartite = false;
  CoxeterType type;

  bool finite() const { return type.finite(); }
  std::optional<std::uint64_t> coxeter_number() const { return type.coxeter_number(); }
  std::optional<std::uint64_t> positive_root_count() const { return type.reflection_count(); }
};

struct ComponentReport {
  std::vector<UnfoldedComponent> components;

  bool all_finite() const {
    return std::all_of(components.begin(), components.end(),
                       [](const UnfoldedComponent& c) { return c.finite(); });
  }

  std::optional<std::uint64_t> total_roots() const {
    std::uint64_t n = 0;
    for (const auto& c : components) {
      auto r = c.positive_root_count();
      if (!r) return std::nullopt;
      n += *r;
    }
    return n;
  }

  /// Types grouped as "2 × A5" or "A4 ⊔ D4".
  std::string summary() const {
    std::vector<std::pair<std::string, std::size_t>> groups;
    for (const auto& c : components) {
      const std::string t = c.type.str();
      auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == t; });
      if (it == groups.end())
        groups.push_back({t, 1});
      else
        ++it->second;
    }
    std::string s;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (i) s += " ⊔ ";
      if (groups[i].second > 1) s += std::to_string(groups[i].second) + " × ";
      s += groups[i].first;
    }
    return s;
  }
};

/// Components of the underlying multigraph. A component is finite ADE when
/// it is simply laced (no loops, no doubled edges) and its shape is A, D
/// or E; positive definiteness is checked as a guard.
inline ComponentReport components(const OrdinaryQuiver& q) {
  const auto w = q.undirected_weights();
  const std::size_t n = q.size();
  ComponentReport rep;
  for (const auto& comp : connected_components(w)) {
    UnfoldedComponent c;
    c.vertices = comp;
    std::vector<std::size_t> local(n, n);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;

    c.simply_laced = true;
    std::vector<LabelledCoxeterEdge> edges;
    std::vector<std::vector<double>> gram(comp.size(), std::vector<double>(comp.size(), 0.0));
    for (std::size_t i = 0; i < comp.size(); ++i) {
      gram[i][i] = 2.0 - 2.0 * static_cast<double>(w[comp[i]][comp[i]]);
      if (w[comp[i]][comp[i]] != 0) c.simply_laced = false;
      for (std::size_t j = i + 1; j < comp.size(); ++j) {
        const std::uint64_t m = w[comp[i]][comp[j]];
        if (m == 0) continue;
        if (m > 1) c.simply_laced = false;
        gram[i][j] = gram[j][i] = -static_cast<double>(m);
        edges.push_back({i, j, m == 1 ? CoxeterLabel(3) : CoxeterLabel::infinity()});
      }
    }

    std::vector<int> colour(comp.size(), -1);
    c.bipartite = true;
    for (std::size_t s = 0; s < comp.size(); ++s) {
      if (colour[s] != -1) continue;
      colour[s] = 0;
      std::deque<std::size_t> todo{s};
      while (!todo.empty()) {
        std::size_t x = todo.front();
        todo.pop_front();
        if (w[comp[x]][comp[x]]) c.bipartite = false;
        for (std::size_t y = 0; y < comp.size(); ++y) {
          if (y == x || !w[comp[x]][comp[y]]) continue;
          if (colour[y] == -1) {
            colour[y] = 1 - colour[x];
            todo.push_back(y);
          } else if (colour[y] == colour[x]) {
            c.bipartite = false;
          }
        }
      }
    }

    if (!c.simply_laced) {
      c.type = infinite_type(comp.size());
    } else {
      c.type = match_coxeter_type(comp.size(), edges);
      if (positive_definite(gram) != c.type.finite())
        throw Error(ErrorKind::InconsistentVerdict, "unfolded component: shape and form disagree");
    }
    rep.components.push_back(std::move(c));
  }
  return rep;
}

inline ComponentReport components(const UnfoldedQuiver& u) { return components(u.quiver); }

struct FiniteTypeVerdict {
  bool finite = false;
  CoxeterClassification gamma;  // path (a): depends on Q only
  ComponentReport unfolded;     // path (b): depends on M
};

/// Finite representation type, decided from Gamma_Q and from the unfolding,
/// matched component by component through (v, L) -> v.
inline FiniteTypeVerdict is_finite_type(const FusionQuiver& q, const ModuleCategory& M) {
  if (q.has_loop()) throw Error(ErrorKind::NotAcyclic, "quiver has a loop");
  FiniteTypeVerdict v;
  v.gamma = classify_coxeter(labeled_graph(q));
  const UnfoldedQuiver u = unfold(q, M);
  v.unfolded = components(u);

  std::vector<std::size_t> gamma_of(q.size());
  for (std::size_t i = 0; i < v.gamma.components.size(); ++i)
    for (std::size_t x : v.gamma.components[i].vertices) gamma_of[x] = i;

  for (const auto& c : v.unfolded.components) {
    const std::size_t g = gamma_of[u.vertex_of(c.vertices.front())];
    for (std::size_t x : c.vertices)
      if (gamma_of[u.vertex_of(x)] != g)
        throw Error(ErrorKind::InconsistentVerdict, "unfolded component spans two components of Gamma_Q");
    const auto& gc = v.gamma.components[g];
    if (gc.finite() != c.finite())
      throw Error(ErrorKind::InconsistentVerdict,
                  "Gamma_Q component " + gc.name() + " and unfolded component " + c.type.str() +
                      " disagree on finiteness");
    if (gc.finite() && gc.type.coxeter_number() != c.coxeter_number())
      throw Error(ErrorKind::InconsistentVerdict,
                  "Coxeter number of " + c.type.str() + " differs from that of " + gc.name());
  }
  v.finite = v.gamma.finite();
  return v;
}

inline FiniteTypeVerdict is_finite_type(const FusionQuiver& q) {
  return is_finite_type(q, *default_module(q));
}

using RootVector = std::vector<std::int64_t>;

/// Positive roots of a simply-laced quiver by closure of the simple roots
/// under simple reflections, keeping non-negative vectors.
inline std::vector<RootVector> positive_roots_simply_laced(const OrdinaryQuiver& q,
                                                          std::size_t cap = 1'000'000) {
  const ComponentReport rep = components(q);
  for (const auto& c : rep.components)
    if (!c.finite())
      throw Error(ErrorKind::InfiniteComponent, "component containing " + q.vertices[c.vertices.front()] +
                                                    " is not of finite ADE type");
  const auto w = q.undirected_weights();
  const std::size_t n = q.size();
  std::unordered_set<RootVector, boost::hash<RootVector>> seen;
  std::deque<RootVector> todo;
  for (std::size_t i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    todo.push_back(std::move(e));
  }
  while (!todo.empty()) {
    RootVector x = std::move(todo.front());
    todo.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t pair = 2 * x[i];
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) pair -= static_cast<std::int64_t>(w[i][j]) * x[j];
      if (pair == 0) continue;
      RootVector y = x;
      y[i] -= pair;
      if (y[i] < 0) continue;
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw Error(ErrorKind::InfiniteComponent, "root closure exceeded the cap");
        todo.push_back(std::move(y));
      }
    }
  }
  std::vector<RootVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  if (auto expect = rep.total_roots(); expect && *expect != out.size())
    throw Error(ErrorKind::InconsistentVerdict, "root closure found " + std::to_string(out.size()) +
                                                    " roots, table says " + std::to_string(*expect));
  return out;
}

}  // namespace fqk

#endif  // FQK_UNFOLDING_HPP
