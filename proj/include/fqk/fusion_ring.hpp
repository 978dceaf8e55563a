#ifndef FQK_FUSION_RING_HPP
#define FQK_FUSION_RING_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "fqk/error.hpp"
#include "fqk/integer.hpp"
#include "fqk/perron.hpp"

namespace fqk {

/// Findings of a data validation pass. Violations make the data invalid;
/// warnings are informational.
struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;

  bool ok() const noexcept { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
};

/// Grothendieck ring of a fusion category: simples, structure constants
/// N[i][j][k] (multiplicity of S_k in S_i (x) S_j), unit and dual permutation.
///
/// Construction only checks shapes. The fusion axioms are checked by
/// validate(), which reports instead of throwing.
class FusionRing {
 public:
  FusionRing(std::vector<std::string> names, std::size_t unit, std::vector<Integer> structure,
             std::optional<std::vector<std::size_t>> dual = std::nullopt)
      : names_(std::move(names)), unit_(unit), n_(std::move(structure)) {
    const std::size_t r = names_.size();
    if (r == 0) throw Error(ErrorKind::InvalidParameter, "fusion ring needs at least one simple");
    if (n_.size() != r * r * r)
      throw Error(ErrorKind::DimensionMismatch,
                  "structure tensor has " + std::to_string(n_.size()) + " entries, expected " +
                      std::to_string(r * r * r));
    if (unit_ >= r) throw Error(ErrorKind::OutOfRange, "unit index out of range");
    if (dual) {
      if (dual->size() != r) throw Error(ErrorKind::DimensionMismatch, "dual permutation length");
      for (std::size_t d : *dual)
        if (d >= r) throw Error(ErrorKind::OutOfRange, "dual permutation entry out of range");
      dual_ = *dual;
      dual_given_ = true;
    } else {
      dual_ = derive_dual();
    }
  }

  std::size_t rank() const noexcept { return names_.size(); }
  std::size_t unit() const noexcept { return unit_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<std::size_t>& dual_permutation() const noexcept { return dual_; }
  std::size_t dual_index(std::size_t i) const { return dual_.at(i); }
  bool dual_was_given() const noexcept { return dual_given_; }

  const Integer& N(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t r = rank();
    return n_[(i * r + j) * r + k];
  }
  const std::vector<Integer>& structure() const noexcept { return n_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  RingElement simple(std::size_t i) const { return RingElement::basis(rank(), i); }
  RingElement one() const { return simple(unit_); }
  RingElement zero() const { return RingElement(rank()); }

  /// Matrix of left multiplication by S_i: column j holds S_i (x) S_j.
  IntMatrix left_multiplication(std::size_t i) const {
    const std::size_t r = rank();
    IntMatrix m(r, r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) m(k, j) = N(i, j, k);
    return m;
  }

  friend bool operator==(const FusionRing& a, const FusionRing& b) {
    return a.names_ == b.names_ && a.unit_ == b.unit_ && a.n_ == b.n_ && a.dual_ == b.dual_;
  }

 private:
  std::vector<std::size_t> derive_dual() const {
    const std::size_t r = rank();
    std::vector<std::size_t> d(r);
    for (std::size_t i = 0; i < r; ++i) {
      d[i] = i;  // fallback; validate() reports the rigidity failure
      for (std::size_t j = 0; j < r; ++j)
        if (N(i, j, unit_) == 1) {
          d[i] = j;
          break;
        }
    }
    return d;
  }

  std::vector<std::string> names_;
  std::size_t unit_;
  std::vector<Integer> n_;
  std::vector<std::size_t> dual_;
  bool dual_given_ = false;
};

inline std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

inline ValidationReport validate(const FusionRing& ring) {
  ValidationReport rep;
  const std::size_t r = ring.rank();
  const std::size_t u = ring.unit();
  const auto& dual = ring.dual_permutation();

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (ring.N(i, j, k) < 0) rep.add("negative structure constant N" + triple(i, j, k));

  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) {
      const Integer expect = (j == k) ? 1 : 0;
      if (ring.N(u, j, k) != expect) rep.add("unit law (left) fails at N" + triple(u, j, k));
      if (ring.N(j, u, k) != expect) rep.add("unit law (right) fails at N" + triple(j, u, k));
    }

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l) {
          Integer lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < r; ++m) {
            lhs += ring.N(i, j, m) * ring.N(m, k, l);
            rhs += ring.N(j, k, m) * ring.N(i, m, l);
          }
          if (lhs != rhs)
            rep.add("associativity fails for (i,j,k,l)=(" + std::to_string(i) + "," +
                    std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")");
        }

  if (dual[u] != u) rep.add("dual of the unit is not the unit");
  for (std::size_t i = 0; i < r; ++i) {
    if (dual[dual[i]] != i) rep.add("dual is not an involution at " + std::to_string(i));
    for (std::size_t j = 0; j < r; ++j) {
      const Integer expect = (j == dual[i]) ? 1 : 0;
      if (ring.N(i, j, u) != expect) rep.add("rigidity fails at N" + triple(i, j, u));
    }
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (ring.N(i, j, k) != ring.N(dual[j], dual[i], dual[k]))
          rep.add("duality symmetry fails at N" + triple(i, j, k));
  return rep;
}

inline RingElement multiply(const FusionRing& ring, const RingElement& x, const RingElement& y) {
  const std::size_t r = ring.rank();
  if (x.size() != r || y.size() != r)
    throw Error(ErrorKind::DimensionMismatch, "ring element length does not match rank");
  RingElement out(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (y[j] == 0) continue;
      const Integer c = x[i] * y[j];
      for (std::size_t k = 0; k < r; ++k)
        if (ring.N(i, j, k) != 0) out[k] += c * ring.N(i, j, k);
    }
  }
  return out;
}

inline RingElement dual(const FusionRing& ring, const RingElement& x) {
  if (x.size() != ring.rank())
    throw Error(ErrorKind::DimensionMismatch, "ring element length does not match rank");
  RingElement out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[ring.dual_index(i)] = x[i];
  return out;
}

/// Frobenius-Perron dimensions of the simples.
struct FPVector {
  std::vector<double> dims;
  double tol = 1e-10;
};

/// Common Perron eigenvector of left multiplications: power iteration on the
/// positive matrix sum_i L(S_i), normalised at the unit, followed by
/// per-simple eigenvalue extraction.
inline FPVector fpdim(const FusionRing& ring, double tol = 1e-10, std::size_t cap = 1'000'000) {
  const std::size_t r = ring.rank();
  std::vector<std::vector<double>> sum(r, std::vector<double>(r, 0.0));
  std::vector<std::vector<std::vector<double>>> left(r);
  for (std::size_t i = 0; i < r; ++i) {
    left[i] = ring.left_multiplication(i).to_double();
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) sum[a][b] += left[i][a][b];
  }
  PerronResult pr = perron(sum, tol * 1e-2, cap);
  std::vector<double> v = pr.vector;
  const double at_unit = v[ring.unit()];
  if (!(at_unit > 0.0))
    throw Error(ErrorKind::NonConvergence, "Perron vector vanishes at the unit; ring data invalid");
  double vsum = 0.0;
  for (double& e : v) {
    e /= at_unit;
    vsum += e;
  }
  FPVector out;
  out.tol = tol;
  out.dims.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    double s = 0.0;
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) s += left[i][a][b] * v[b];
    out.dims[i] = s / vsum;
  }
  return out;
}

inline double fpdim_of(const FPVector& fp, const RingElement& x) {
  if (x.size() != fp.dims.size())
    throw Error(ErrorKind::DimensionMismatch, "ring element length does not match rank");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += to_double(x[i]) * fp.dims[i];
  return s;
}

inline double fpdim_of(const FusionRing& ring, const RingElement& x) {
  return fpdim_of(fpdim(ring), x);
}

/// Coxeter edge label m in {2, 3, ...} or infinity.
class CoxeterLabel {
 public:
  constexpr CoxeterLabel() = default;
  constexpr explicit CoxeterLabel(std::uint64_t m) : m_(m) {}
  static constexpr CoxeterLabel infinity() { return CoxeterLabel(); }

  constexpr bool is_infinite() const noexcept { return m_ == 0; }
  constexpr bool is_finite() const noexcept { return m_ != 0; }
  constexpr std::uint64_t value() const noexcept { return m_; }

  /// 2cos(pi/m), or 2 for m = infinity.
  double two_cos() const {
    return is_infinite() ? 2.0 : 2.0 * std::cos(std::numbers::pi / static_cast<double>(m_));
  }

  std::string str() const { return is_infinite() ? std::string("∞") : std::to_string(m_); }

  friend constexpr bool operator==(CoxeterLabel a, CoxeterLabel b) { return a.m_ == b.m_; }

 private:
  std::uint64_t m_ = 0;  // 0 encodes infinity
};

/// Inverts f = 2cos(pi/m). Values within tol of 2 or above are infinite.
inline CoxeterLabel angle_label(double f, double tol = default_tolerance()) {
  if (f < -tol) throw Error(ErrorKind::InvalidDimension, "negative dimension " + std::to_string(f));
  if (f >= 2.0 - tol) return CoxeterLabel::infinity();
  if (std::abs(f) < tol) return CoxeterLabel(2);
  const double angle = std::acos(std::clamp(f / 2.0, -1.0, 1.0));
  const double m = std::round(std::numbers::pi / angle);
  if (m >= 2.0) {
    const CoxeterLabel label(static_cast<std::uint64_t>(m));
    if (std::abs(label.two_cos() - f) < tol) return label;
  }
  throw Error(ErrorKind::InvalidDimension,
              "dimension " + std::to_string(f) + " is not of the form 2cos(pi/m)");
}

}  // namespace fqk

#endif  // FQK_FUSION_RING_HPP
