#ifndef FQK_ORDINARY_QUIVER_HPP
#define FQK_ORDINARY_QUIVER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace fqk {

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::uint64_t multiplicity = 1;

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend bool operator<(const Arrow& a, const Arrow& b) {
    return std::tie(a.source, a.target, a.multiplicity) <
           std::tie(b.source, b.target, b.multiplicity);
  }
};

/// Quiver over Vect: named vertices and arrows with multiplicities.
struct OrdinaryQuiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::size_t size() const noexcept { return vertices.size(); }

  std::uint64_t arrow_count() const {
    std::uint64_t n = 0;
    for (const auto& a : arrows) n += a.multiplicity;
    return n;
  }

  /// Symmetric adjacency: entry (i,j) counts arrows i->j plus j->i; loops
  /// are counted once on the diagonal.
  std::vector<std::vector<std::uint64_t>> undirected_weights() const {
    const std::size_t n = size();
    std::vector<std::vector<std::uint64_t>> w(n, std::vector<std::uint64_t>(n, 0));
    for (const auto& a : arrows) {
      if (a.source == a.target) {
        w[a.source][a.source] += a.multiplicity;
      } else {
        w[a.source][a.target] += a.multiplicity;
        w[a.target][a.source] += a.multiplicity;
      }
    }
    return w;
  }

  std::vector<Arrow> sorted_arrows() const {
    auto out = arrows;
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Connected components of a symmetric weight matrix, each sorted, ordered
/// by smallest vertex.
inline std::vector<std::vector<std::size_t>> connected_components(
    const std::vector<std::vector<std::uint64_t>>& w) {
  const std::size_t n = w.size();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (std::size_t u = 0; u < n; ++u)
        if (u != v && w[v][u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace fqk

#endif  // FQK_ORDINARY_QUIVER_HPP
