#ifndef FQK_MODULE_CATEGORY_HPP
#define FQK_MODULE_CATEGORY_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fqk/error.hpp"
#include "fqk/fusion_ring.hpp"
#include "fqk/integer.hpp"
#include "fqk/ordinary_quiver.hpp"
#include "fqk/perron.hpp"

namespace fqk {

/// Semisimple module category over a fusion ring, given by the action
/// matrices of the simples of C on Irr(M).
///
/// A module without a ring is "action-only": it fixes Irr(M) so that edges
/// labelled by raw action matrices can be unfolded.
class ModuleCategory {
 public:
  ModuleCategory(std::shared_ptr<const FusionRing> ring, std::vector<std::string> mnames,
                 std::vector<IntMatrix> act)
      : ring_(std::move(ring)), mnames_(std::move(mnames)), act_(std::move(act)) {
    const std::size_t m = mnames_.size();
    if (m == 0) throw Error(ErrorKind::InvalidParameter, "module needs at least one simple");
    if (ring_ && act_.size() != ring_->rank())
      throw Error(ErrorKind::DimensionMismatch,
                  "module has " + std::to_string(act_.size()) + " action matrices for a ring of rank " +
                      std::to_string(ring_->rank()));
    if (!ring_ && !act_.empty())
      throw Error(ErrorKind::InvalidParameter, "action matrices given without a ring");
    for (const auto& a : act_)
      if (a.rows() != m || a.cols() != m)
        throw Error(ErrorKind::DimensionMismatch, "action matrix is not " + std::to_string(m) + "x" +
                                                      std::to_string(m));
  }

  static ModuleCategory action_only(std::vector<std::string> mnames) {
    return ModuleCategory(nullptr, std::move(mnames), {});
  }

  bool has_ring() const noexcept { return static_cast<bool>(ring_); }
  const FusionRing& ring() const {
    if (!ring_) throw Error(ErrorKind::MissingAction, "module has no fusion ring attached");
    return *ring_;
  }
  const std::shared_ptr<const FusionRing>& ring_ptr() const noexcept { return ring_; }

  std::size_t size() const noexcept { return mnames_.size(); }
  const std::vector<std::string>& names() const noexcept { return mnames_; }
  const std::vector<IntMatrix>& actions() const noexcept { return act_; }
  const IntMatrix& act(std::size_t i) const {
    if (!ring_) throw Error(ErrorKind::MissingAction, "module has no fusion ring attached");
    return act_.at(i);
  }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < mnames_.size(); ++i)
      if (mnames_[i] == name) return i;
    return std::nullopt;
  }

  ModuleElement simple(std::size_t l) const { return ModuleElement::basis(size(), l); }

  /// Matrix of x acting on [M]: sum_i x_i act[i].
  IntMatrix action_of(const RingElement& x) const {
    const FusionRing& r = ring();
    if (x.size() != r.rank())
      throw Error(ErrorKind::DimensionMismatch, "ring element length does not match rank");
    IntMatrix out(size(), size());
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) out += x[i] * act_[i];
    return out;
  }

  friend bool operator==(const ModuleCategory& a, const ModuleCategory& b) {
    const bool rings_equal =
        (!a.ring_ && !b.ring_) || (a.ring_ && b.ring_ && *a.ring_ == *b.ring_);
    return rings_equal && a.mnames_ == b.mnames_ && a.act_ == b.act_;
  }

 private:
  std::shared_ptr<const FusionRing> ring_;
  std::vector<std::string> mnames_;
  std::vector<IntMatrix> act_;
};

/// Edge label given only by its action on Irr(M).
struct ActionLabel {
  IntMatrix matrix;
  std::optional<double> fpdim;

  friend bool operator==(const ActionLabel& a, const ActionLabel& b) {
    return a.matrix == b.matrix && a.fpdim == b.fpdim;
  }
};

inline ValidationReport validate_module(const ModuleCategory& M) {
  ValidationReport rep;
  const std::size_t m = M.size();
  if (!M.has_ring()) {
    rep.warnings.push_back("action-only module: no ring axioms to check");
    return rep;
  }
  const FusionRing& ring = M.ring();
  const std::size_t r = ring.rank();

  for (std::size_t i = 0; i < r; ++i)
    if (!M.act(i).is_nonnegative()) rep.add("negative entry in act[" + std::to_string(i) + "]");

  if (!(M.act(ring.unit()) == IntMatrix::identity(m))) rep.add("unit does not act as the identity");

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      IntMatrix lhs = M.act(i) * M.act(j);
      IntMatrix rhs(m, m);
      for (std::size_t k = 0; k < r; ++k)
        if (ring.N(i, j, k) != 0) rhs += ring.N(i, j, k) * M.act(k);
      if (!(lhs == rhs))
        rep.add("action axiom fails for (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }

  for (std::size_t i = 0; i < r; ++i)
    if (!(M.act(ring.dual_index(i)) == M.act(i).transpose()))
      rep.add("act[dual(" + std::to_string(i) + ")] is not the transpose of act[" +
              std::to_string(i) + "]");

  std::vector<std::vector<std::uint64_t>> support(m, std::vector<std::uint64_t>(m, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (M.act(i)(a, b) != 0) support[a][b] = support[b][a] = 1;
  if (connected_components(support).size() > 1)
    rep.warnings.push_back("module is decomposable (action support is disconnected)");
  return rep;
}

inline ModuleCategory regular_module(std::shared_ptr<const FusionRing> ring) {
  std::vector<IntMatrix> act;
  act.reserve(ring->rank());
  for (std::size_t i = 0; i < ring->rank(); ++i) act.push_back(ring->left_multiplication(i));
  auto names = ring->names();
  return ModuleCategory(std::move(ring), std::move(names), std::move(act));
}

inline ModuleCategory regular_module(const FusionRing& ring) {
  return regular_module(std::make_shared<const FusionRing>(ring));
}

inline ModuleElement act_on(const ModuleCategory& M, const RingElement& x, const ModuleElement& u) {
  if (u.size() != M.size())
    throw Error(ErrorKind::DimensionMismatch, "module element length does not match |Irr(M)|");
  return M.action_of(x).apply(u);
}

/// True when x acts nonzero on u. For x in +-[C]_{>=0} and u a nonzero
/// object class this holds exactly when x != 0.
inline bool nonzero_action_check(const ModuleCategory& M, const RingElement& x,
                                 const ModuleElement& u) {
  if (!x.is_nonnegative() && !x.is_nonpositive())
    throw Error(ErrorKind::SignIncoherentInput, "element " + x.str() + " is not sign-coherent");
  if (!u.is_positive())
    throw Error(ErrorKind::SignIncoherentInput, "module element " + u.str() + " is not an object class");
  return !act_on(M, x, u).is_zero();
}

/// FP dimensions of the simples of M, normalised so the smallest is 1.
inline std::vector<double> module_fpdims(const ModuleCategory& M, double tol = 1e-10) {
  const std::size_t m = M.size();
  std::vector<std::vector<double>> sum(m, std::vector<double>(m, 0.0));
  for (const auto& a : M.actions()) {
    auto d = a.to_double();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) sum[i][j] += d[i][j];
  }
  auto v = perron(sum, tol).vector;
  double lo = 0.0;
  for (double e : v)
    if (e > 0.0 && (lo == 0.0 || e < lo)) lo = e;
  if (lo > 0.0)
    for (double& e : v) e /= lo;
  return v;
}

/// Arrows L -> L' with multiplicity equal to the multiplicity of L' in
/// Pi (x) L. Diagonal entries give loops (or, separated, arrows (s,L)->(t,L)).
inline OrdinaryQuiver mckay_quiver(const ModuleCategory& M, const IntMatrix& action, bool separated) {
  const std::size_t m = M.size();
  if (action.rows() != m || action.cols() != m)
    throw Error(ErrorKind::DimensionMismatch, "label matrix does not match |Irr(M)|");
  OrdinaryQuiver q;
  if (separated) {
    for (const auto& n : M.names()) q.vertices.push_back("(s," + n + ")");
    for (const auto& n : M.names()) q.vertices.push_back("(t," + n + ")");
  } else {
    q.vertices = M.names();
  }
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t lp = 0; lp < m; ++lp) {
      const Integer& c = action(lp, l);
      if (c == 0) continue;
      q.arrows.push_back({l, separated ? m + lp : lp, c.convert_to<std::uint64_t>()});
    }
  return q;
}

inline OrdinaryQuiver mckay_quiver(const ModuleCategory& M, const RingElement& label, bool separated) {
  return mckay_quiver(M, M.action_of(label), separated);
}

inline OrdinaryQuiver mckay_quiver(const ModuleCategory& M, const ActionLabel& label, bool separated) {
  return mckay_quiver(M, label.matrix, separated);
}

}  // namespace fqk

#endif  // FQK_MODULE_CATEGORY_HPP
