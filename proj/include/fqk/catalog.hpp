#ifndef FQK_CATALOG_HPP
#define FQK_CATALOG_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fqk/error.hpp"
#include "fqk/fusion_ring.hpp"
#include "fqk/integer.hpp"
#include "fqk/module_category.hpp"
#include "fqk/quiver.hpp"

namespace fqk {

namespace detail {

inline std::shared_ptr<const FusionRing> checked(FusionRing ring, const std::string& key) {
  const auto rep = validate(ring);
  if (!rep.ok()) throw Error(ErrorKind::InvalidParameter, "builtin " + key + " is invalid: " + rep.violations.front());
  return std::make_shared<const FusionRing>(std::move(ring));
}

inline std::shared_ptr<const ModuleCategory> checked(ModuleCategory m, const std::string& key) {
  const auto rep = validate_module(m);
  if (!rep.ok()) throw Error(ErrorKind::InvalidParameter, "builtin " + key + " is invalid: " + rep.violations.front());
  return std::make_shared<const ModuleCategory>(std::move(m));
}

}  // namespace detail

/// Fusion rules of Rep(G) from a real character table:
/// N_ijk = (1/|G|) sum_c |c| chi_i(c) chi_j(c) chi_k(c).
inline FusionRing ring_from_characters(std::vector<std::string> names, const std::vector<long long>& class_sizes,
                                       const std::vector<std::vector<long long>>& chars) {
  const std::size_t r = names.size();
  long long order = 0;
  for (long long s : class_sizes) order += s;
  std::vector<Integer> n(r * r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        long long s = 0;
        for (std::size_t c = 0; c < class_sizes.size(); ++c)
          s += class_sizes[c] * chars[i][c] * chars[j][c] * chars[k][c];
        if (s % order != 0)
          throw Error(ErrorKind::InvalidParameter, "character table gives a non-integer multiplicity");
        n[(i * r + j) * r + k] = s / order;
      }
  return FusionRing(std::move(names), 0, std::move(n));
}

inline std::shared_ptr<const FusionRing> make_vect() {
  return detail::checked(FusionRing({"1"}, 0, {Integer(1)}), "vect");
}

inline std::shared_ptr<const FusionRing> make_rep_s2() {
  return detail::checked(ring_from_characters({"1", "S"}, {1, 1}, {{1, 1}, {1, -1}}), "rep_s2");
}

inline std::shared_ptr<const FusionRing> make_rep_s3() {
  // classes: e, transpositions, 3-cycles
  return detail::checked(
      ring_from_characters({"1", "S", "V"}, {1, 3, 2}, {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}}), "rep_s3");
}

inline std::shared_ptr<const FusionRing> make_rep_s4() {
  // classes: e, (12), (12)(34), (123), (1234)
  return detail::checked(ring_from_characters({"1", "S", "W", "V", "V'"}, {1, 6, 3, 8, 6},
                                              {{1, 1, 1, 1, 1},
                                               {1, -1, 1, 1, -1},
                                               {2, 0, 2, -1, 0},
                                               {3, 1, -1, 0, -1},
                                               {3, -1, -1, 0, 1}}),
                         "rep_s4");
}

inline std::shared_ptr<const FusionRing> make_fibonacci() {
  // tau (x) tau = 1 + tau
  std::vector<Integer> n = {1, 0, 0, 1, 0, 1, 1, 1};
  return detail::checked(FusionRing({"1", "tau"}, 0, std::move(n)), "fibonacci");
}

/// sl2 at level l: V_i (x) V_j = sum of V_k, |i-j| <= k <= min(i+j, 2l-i-j), step 2.
inline std::shared_ptr<const FusionRing> make_verlinde_sl2(long long level) {
  if (level < 1) throw Error(ErrorKind::InvalidParameter, "level must be at least 1");
  const std::size_t r = static_cast<std::size_t>(level) + 1;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < r; ++i) names.push_back("V" + std::to_string(i));
  std::vector<Integer> n(r * r * r);
  for (long long i = 0; i <= level; ++i)
    for (long long j = 0; j <= level; ++j) {
      const long long lo = i > j ? i - j : j - i;
      const long long hi = std::min(i + j, 2 * level - i - j);
      for (long long k = lo; k <= hi; k += 2) n[(i * r + j) * r + k] = 1;
    }
  return detail::checked(FusionRing(std::move(names), 0, std::move(n)),
                         "verlinde_sl2:" + std::to_string(level));
}

/// Type-D module over sl2 at even level l. Simples L_0 .. L_{l/2-1},
/// L_{l/2}^+, L_{l/2}^-; V_1 acts as the adjacency of D_{l/2+2}, and the
/// other V_i follow from V_1 V_i = V_{i-1} + V_{i+1}.
inline std::shared_ptr<const ModuleCategory> make_verlinde_typeD(long long level) {
  if (level < 2 || level % 2 != 0)
    throw Error(ErrorKind::InvalidParameter, "type-D module needs an even level >= 2");
  const auto ring = make_verlinde_sl2(level);
  const std::size_t h = static_cast<std::size_t>(level / 2);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < h; ++i) names.push_back("L" + std::to_string(i));
  names.push_back("L" + std::to_string(h) + "+");
  names.push_back("L" + std::to_string(h) + "-");
  const std::size_t m = names.size(), plus = h, minus = h + 1;

  IntMatrix v1(m, m);
  auto link = [&](std::size_t a, std::size_t b) { v1(a, b) = v1(b, a) = 1; };
  for (std::size_t i = 0; i + 1 < h; ++i) link(i, i + 1);
  link(h - 1, plus);
  link(h - 1, minus);

  std::vector<IntMatrix> act{IntMatrix::identity(m), v1};
  for (long long i = 1; i < level; ++i) act.push_back(v1 * act[i] - act[i - 1]);
  return detail::checked(ModuleCategory(ring, std::move(names), std::move(act)),
                         "verlinde_typeD:" + std::to_string(level));
}

/// Action of the fundamental object X on the six simples of sl3 at level 2
/// (the figure's McKay graph). Only this action is known; there is no ring.
inline const std::vector<std::string>& sl3at5_names() {
  static const std::vector<std::string> names{"1", "X", "Y", "L20", "L11", "L02"};
  return names;
}

inline ActionLabel sl3at5_x() {
  IntMatrix a(6, 6);
  auto put = [&](std::size_t from, std::size_t to) { a(to, from) += 1; };
  enum { One, X, Y, L20, L11, L02 };
  put(One, X);
  put(X, Y);
  put(X, L20);
  put(Y, One);
  put(Y, L11);
  put(L20, L11);
  put(L11, L02);
  put(L11, X);
  put(L02, Y);
  return ActionLabel{a, std::nullopt};
}

inline std::shared_ptr<const ModuleCategory> make_sl3at5_module() {
  return std::make_shared<const ModuleCategory>(ModuleCategory::action_only(sl3at5_names()));
}

inline RingElement element(const FusionRing& ring, const std::string& name) {
  auto i = ring.index_of(name);
  if (!i) throw Error(ErrorKind::UnknownKey, "no simple named " + name);
  return ring.simple(*i);
}

/// Chain v0 - v1 - ... with edges v_i -> v_{i+1} labelled in order.
inline FusionQuiver chain_quiver(std::shared_ptr<const FusionRing> ring, std::shared_ptr<const ModuleCategory> module,
                                 std::vector<EdgeLabel> labels) {
  FusionQuiver q;
  const char* letters = "abcdefghijklmnopqrstuvwxyz";
  for (std::size_t i = 0; i <= labels.size(); ++i) q.vertices.push_back(std::string(1, letters[i % 26]));
  for (std::size_t i = 0; i < labels.size(); ++i) q.edges.push_back({i, i + 1, std::move(labels[i])});
  q.ring = std::move(ring);
  q.module = std::move(module);
  return q;
}

enum class CatalogKind { Ring, Module, Quiver };

inline std::string_view to_string(CatalogKind k) {
  switch (k) {
    case CatalogKind::Ring: return "ring";
    case CatalogKind::Module: return "module";
    case CatalogKind::Quiver: return "quiver";
  }
  return "?";
}

struct CatalogEntry {
  std::string key;  // ":<level>" suffix when parametrised
  CatalogKind kind;
  std::string description;
  bool parametrised = false;
};

inline const std::vector<CatalogEntry>& catalog_list() {
  static const std::vector<CatalogEntry> entries{
      {"vect", CatalogKind::Ring, "vector spaces, one simple", false},
      {"rep_s2", CatalogKind::Ring, "representations of S2: 1, S", false},
      {"rep_s3", CatalogKind::Ring, "representations of S3: 1, S, V", false},
      {"rep_s4", CatalogKind::Ring, "representations of S4: 1, S, W, V, V'", false},
      {"fibonacci", CatalogKind::Ring, "Fibonacci: tau^2 = 1 + tau", false},
      {"verlinde_sl2", CatalogKind::Ring, "sl2 at level l (verlinde_sl2:<l>)", true},
      {"verlinde_typeD", CatalogKind::Module, "type-D module over sl2 at even level (verlinde_typeD:<l>)", true},
      {"sl3at5_action", CatalogKind::Module, "six simples of sl3 at level 2, action of X only", false},
      {"kronecker2", CatalogKind::Quiver, "two arrows a -> b over vect", false},
      {"s2_sign_quiver", CatalogKind::Quiver, "a -> b labelled S over rep_s2", false},
      {"s2_sign_a3", CatalogKind::Quiver, "a -> b -> c labelled S, 1 over rep_s2", false},
      {"s3_std_quiver", CatalogKind::Quiver, "a -> b labelled V over rep_s3", false},
      {"s4_std_quiver", CatalogKind::Quiver, "a -> b labelled V over rep_s4", false},
      {"fib_edge_quiver", CatalogKind::Quiver, "a -> b labelled tau over fibonacci", false},
      {"fib_h4_quiver", CatalogKind::Quiver, "a -> b -> c -> d labelled tau, 1, 1 over fibonacci", false},
      {"verlinde_edge_quiver", CatalogKind::Quiver, "a -> b labelled V1 over verlinde_sl2:<l>", true},
      {"verlinde_typeD_quiver", CatalogKind::Quiver, "a -> b labelled V1 acting on verlinde_typeD:<l>", true},
      {"sl3at5_quiver", CatalogKind::Quiver, "a -> b labelled by the action of X (partial mode)", false},
  };
  return entries;
}

/// Splits "name:param" into its parts.
inline std::pair<std::string, std::optional<long long>> parse_key(const std::string& key) {
  const auto colon = key.find(':');
  if (colon == std::string::npos) return {key, std::nullopt};
  const std::string p = key.substr(colon + 1);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(p, &used);
    if (used != p.size()) throw std::invalid_argument(p);
    return {key.substr(0, colon), v};
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidParameter, "bad parameter '" + p + "' in key " + key);
  }
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog_list())
    if (e.key == name) return e;
  throw Error(ErrorKind::UnknownKey, "unknown builtin " + name);
}

using CatalogObject = std::variant<std::shared_ptr<const FusionRing>, std::shared_ptr<const ModuleCategory>,
                                   std::shared_ptr<const FusionQuiver>>;

namespace detail {

inline CatalogObject construct(const std::string& name, std::optional<long long> p) {
  auto quiver = [](FusionQuiver q) { return std::make_shared<const FusionQuiver>(std::move(q)); };
  if (name == "vect") return make_vect();
  if (name == "rep_s2") return make_rep_s2();
  if (name == "rep_s3") return make_rep_s3();
  if (name == "rep_s4") return make_rep_s4();
  if (name == "fibonacci") return make_fibonacci();
  if (name == "verlinde_sl2") return make_verlinde_sl2(*p);
  if (name == "verlinde_typeD") return make_verlinde_typeD(*p);
  if (name == "sl3at5_action") return make_sl3at5_module();
  if (name == "kronecker2") {
    auto r = make_vect();
    return quiver(chain_quiver(r, nullptr, {Integer(2) * r->one()}));
  }
  if (name == "s2_sign_quiver") {
    auto r = make_rep_s2();
    return quiver(chain_quiver(r, nullptr, {element(*r, "S")}));
  }
  if (name == "s2_sign_a3") {
    auto r = make_rep_s2();
    return quiver(chain_quiver(r, nullptr, {element(*r, "S"), r->one()}));
  }
  if (name == "s3_std_quiver") {
    auto r = make_rep_s3();
    return quiver(chain_quiver(r, nullptr, {element(*r, "V")}));
  }
  if (name == "s4_std_quiver") {
    auto r = make_rep_s4();
    return quiver(chain_quiver(r, nullptr, {element(*r, "V")}));
  }
  if (name == "fib_edge_quiver") {
    auto r = make_fibonacci();
    return quiver(chain_quiver(r, nullptr, {element(*r, "tau")}));
  }
  if (name == "fib_h4_quiver") {
    auto r = make_fibonacci();
    return quiver(chain_quiver(r, nullptr, {element(*r, "tau"), r->one(), r->one()}));
  }
  if (name == "verlinde_edge_quiver") {
    auto r = make_verlinde_sl2(*p);
    return quiver(chain_quiver(r, nullptr, {element(*r, "V1")}));
  }
  if (name == "verlinde_typeD_quiver") {
    auto m = make_verlinde_typeD(*p);
    return quiver(chain_quiver(m->ring_ptr(), m, {element(m->ring(), "V1")}));
  }
  if (name == "sl3at5_quiver") return quiver(chain_quiver(nullptr, make_sl3at5_module(), {sl3at5_x()}));
  throw Error(ErrorKind::UnknownKey, "unknown builtin " + name);
}

}  // namespace detail

/// Builtin object by key ("fibonacci", "verlinde_sl2:4", ...). Objects are
/// built once and shared.
inline CatalogObject builtin(const std::string& key) {
  const auto [name, param] = parse_key(key);
  const CatalogEntry& entry = catalog_entry(name);
  if (entry.parametrised && !param) throw Error(ErrorKind::InvalidParameter, name + " needs a level, e.g. " + name + ":4");
  if (!entry.parametrised && param) throw Error(ErrorKind::InvalidParameter, name + " takes no parameter");
  static std::mutex mu;
  static std::map<std::string, CatalogObject> cache;
  const std::string canonical = param ? name + ":" + std::to_string(*param) : name;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(canonical); it != cache.end()) return it->second;
  }
  CatalogObject obj = detail::construct(name, param);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(canonical, std::move(obj)).first->second;
}

inline std::shared_ptr<const FusionRing> builtin_ring(const std::string& key) {
  auto obj = builtin(key);
  if (auto* r = std::get_if<std::shared_ptr<const FusionRing>>(&obj)) return *r;
  if (auto* m = std::get_if<std::shared_ptr<const ModuleCategory>>(&obj); m && (*m)->has_ring())
    return (*m)->ring_ptr();
  if (auto* q = std::get_if<std::shared_ptr<const FusionQuiver>>(&obj); q && (*q)->ring) return (*q)->ring;
  throw Error(ErrorKind::UnknownKey, key + " has no fusion ring");
}

inline std::shared_ptr<const ModuleCategory> builtin_module(const std::string& key) {
  auto obj = builtin(key);
  if (auto* m = std::get_if<std::shared_ptr<const ModuleCategory>>(&obj)) return *m;
  if (auto* r = std::get_if<std::shared_ptr<const FusionRing>>(&obj))
    return std::make_shared<const ModuleCategory>(regular_module(*r));
  return default_module(*std::get<std::shared_ptr<const FusionQuiver>>(obj));
}

inline std::shared_ptr<const FusionQuiver> builtin_quiver(const std::string& key) {
  auto obj = builtin(key);
  if (auto* q = std::get_if<std::shared_ptr<const FusionQuiver>>(&obj)) return *q;
  throw Error(ErrorKind::UnknownKey, key + " is not a quiver");
}

}  // namespace fqk

#endif  // FQK_CATALOG_HPP
