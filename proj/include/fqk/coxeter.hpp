#ifndef FQK_COXETER_HPP
#define FQK_COXETER_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqk/error.hpp"
#include "fqk/fusion_ring.hpp"
#include "fqk/ordinary_quiver.hpp"
#include "fqk/quiver.hpp"

namespace fqk {

/// Named finite Coxeter type, or "infinite".
struct CoxeterType {
  std::string family;        // "A".."I", or "infinite"
  std::size_t rank = 0;
  std::uint64_t m = 0;       // dihedral parameter for I2(m)

  bool finite() const { return family != "infinite"; }

  std::string str() const {
    if (!finite()) return "infinite";
    if (family == "I") return "I2(" + std::to_string(m) + ")";
    return family + std::to_string(rank);
  }

  /// Coxeter number; nullopt for infinite types.
  std::optional<std::uint64_t> coxeter_number() const {
    const std::uint64_t n = rank;
    if (family == "A") return n + 1;
    if (family == "B") return 2 * n;
    if (family == "D") return 2 * n - 2;
    if (family == "E") return n == 6 ? 12 : n == 7 ? 18 : 30;
    if (family == "F") return 12;
    if (family == "G") return 6;
    if (family == "H") return n == 3 ? 10 : 30;
    if (family == "I") return m;
    return std::nullopt;
  }

  /// Number of reflections, n*h/2 (positive roots in the crystallographic case).
  std::optional<std::uint64_t> reflection_count() const {
    auto h = coxeter_number();
    if (!h) return std::nullopt;
    return rank * *h / 2;
  }

  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
};

inline CoxeterType infinite_type(std::size_t rank) { return {"infinite", rank, 0}; }

/// Sylvester criterion: every leading principal minor exceeds tol.
inline bool positive_definite(std::vector<std::vector<double>> a, double tol = 1e-9) {
  const std::size_t n = a.size();
  double minor = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double pivot = a[k][k];
    minor *= pivot;
    if (!(minor > tol) || !(pivot > 0.0)) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

/// Names a connected Coxeter graph by its shape, without linear algebra.
/// Vertices are 0..n-1; edges carry labels >= 3 or infinity.
inline CoxeterType match_coxeter_type(std::size_t n, const std::vector<LabelledCoxeterEdge>& edges) {
  if (n == 0) return infinite_type(0);
  if (n == 1) return {"A", 1, 0};
  if (edges.size() != n - 1) return infinite_type(n);
  std::vector<std::vector<std::pair<std::size_t, CoxeterLabel>>> adj(n);
  for (const auto& e : edges) {
    if (e.m.is_infinite()) return infinite_type(n);
    if (e.u == e.w) return infinite_type(n);
    adj[e.u].push_back({e.w, e.m});
    adj[e.w].push_back({e.u, e.m});
  }
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].empty()) return infinite_type(n);  // disconnected input
    if (adj[v].size() > 3) return infinite_type(n);
    if (adj[v].size() == 3) branch.push_back(v);
  }
  if (branch.size() > 1) return infinite_type(n);

  if (branch.size() == 1) {
    for (const auto& e : edges)
      if (e.m.value() != 3) return infinite_type(n);
    std::array<std::size_t, 3> arms{};
    for (std::size_t a = 0; a < 3; ++a) {
      std::size_t prev = branch[0], cur = adj[branch[0]][a].first, len = 1;
      while (adj[cur].size() == 2) {
        const std::size_t next = adj[cur][0].first == prev ? adj[cur][1].first : adj[cur][0].first;
        prev = cur;
        cur = next;
        ++len;
      }
      arms[a] = len;
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] != 1) return infinite_type(n);
    if (arms[1] == 1) return {"D", n, 0};
    if (arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {"E", n, 0};
    return infinite_type(n);
  }

  // Path: walk from an end vertex collecting labels in order.
  std::size_t start = 0;
  while (adj[start].size() != 1) ++start;
  std::vector<std::uint64_t> labels;
  std::size_t prev = n, cur = start;
  for (std::size_t step = 0; step + 1 < n; ++step) {
    const auto& nb = adj[cur][0].first == prev ? adj[cur][1] : adj[cur][0];
    labels.push_back(nb.second.value());
    prev = cur;
    cur = nb.first;
  }
  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != 3) odd.push_back(i);
  if (odd.empty()) return {"A", n, 0};
  if (odd.size() > 1) return infinite_type(n);
  const std::uint64_t m = labels[odd[0]];
  if (n == 2) {
    if (m == 4) return {"B", 2, 0};
    if (m == 6) return {"G", 2, 0};
    return {"I", 2, m};
  }
  const bool at_end = odd[0] == 0 || odd[0] + 1 == labels.size();
  if (at_end) {
    if (m == 4) return {"B", n, 0};
    if (m == 5 && (n == 3 || n == 4)) return {"H", n, 0};
    return infinite_type(n);
  }
  if (m == 4 && n == 4) return {"F", 4, 0};
  return infinite_type(n);
}

struct CoxeterComponent {
  std::vector<std::size_t> vertices;  // sorted, indices into the input graph
  CoxeterType type;
  bool positive_definite = false;

  bool finite() const { return type.finite(); }

  /// Display name; an infinite rank-two component is I2(inf).
  std::string name() const {
    if (!type.finite() && vertices.size() == 2) return "I2(∞)";
    return type.str();
  }
};

struct CoxeterClassification {
  std::vector<CoxeterComponent> components;

  bool finite() const {
    return std::all_of(components.begin(), components.end(),
                       [](const CoxeterComponent& c) { return c.finite(); });
  }

  /// Component names joined with " ⊔ ".
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < components.size(); ++i) s += (i ? " ⊔ " : "") + components[i].name();
    return s;
  }
};

/// Per component: finiteness by positive definiteness of the form, type
/// by shape. The two must agree.
inline CoxeterClassification classify_coxeter(const CoxeterGraph& g, double tol = 1e-9) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::uint64_t>> w(n, std::vector<std::uint64_t>(n, 0));
  for (const auto& e : g.edges) {
    if (e.u >= n || e.w >= n) throw Error(ErrorKind::OutOfRange, "Coxeter edge endpoint out of range");
    w[e.u][e.w] = w[e.w][e.u] = 1;
  }
  const auto gram = g.gram();
  CoxeterClassification out;
  for (const auto& comp : connected_components(w)) {
    std::vector<std::size_t> local(n, n);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;
    std::vector<LabelledCoxeterEdge> edges;
    for (const auto& e : g.edges)
      if (local[e.u] != n) edges.push_back({local[e.u], local[e.w], e.m});
    std::vector<std::vector<double>> sub(comp.size(), std::vector<double>(comp.size()));
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j) sub[i][j] = gram[comp[i]][comp[j]];

    CoxeterComponent c;
    c.vertices = comp;
    c.positive_definite = positive_definite(sub, tol);
    c.type = match_coxeter_type(comp.size(), edges);
    if (c.positive_definite != c.type.finite())
      throw Error(ErrorKind::InconsistentVerdict,
                  "positive definiteness and shape disagree on a component of rank " +
                      std::to_string(comp.size()));
    out.components.push_back(std::move(c));
  }
  return out;
}

inline CoxeterClassification classify_coxeter(const LabeledGraph& g, double tol = 1e-9) {
  // Finiteness of the real form is checked directly as well, so a label that
  // is not exactly 2cos(pi/m) cannot slip through the conversion.
  CoxeterClassification c = classify_coxeter(coxeter_graph(g), tol);
  const auto gram = g.gram();
  for (const auto& comp : c.components) {
    std::vector<std::vector<double>> sub(comp.vertices.size(), std::vector<double>(comp.vertices.size()));
    for (std::size_t i = 0; i < comp.vertices.size(); ++i)
      for (std::size_t j = 0; j < comp.vertices.size(); ++j)
        sub[i][j] = gram[comp.vertices[i]][comp.vertices[j]];
    if (positive_definite(sub, tol) != comp.finite())
      throw Error(ErrorKind::InconsistentVerdict, "real form and Coxeter graph disagree");
  }
  return c;
}

}  // namespace fqk

#endif  // FQK_COXETER_HPP
