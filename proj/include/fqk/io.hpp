#ifndef FQK_IO_HPP
#define FQK_IO_HPP

#include <cctype>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fqk/catalog.hpp"
#include "fqk/coxeter.hpp"
#include "fqk/error.hpp"
#include "fqk/fusion_ring.hpp"
#include "fqk/module_category.hpp"
#include "fqk/quiver.hpp"
#include "fqk/unfolding.hpp"

namespace fqk {

using json = nlohmann::json;

/// "[1]+[tau]", "2[V]", "0".
template <class Tag>
std::string format_element(const std::vector<std::string>& names, const ClassVector<Tag>& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const bool neg = x[i] < 0;
    const Integer mag = neg ? Integer(-x[i]) : x[i];
    if (!s.empty())
      s += neg ? "-" : "+";
    else if (neg)
      s += "-";
    if (mag != 1) s += mag.str();
    s += "[" + names.at(i) + "]";
  }
  return s.empty() ? "0" : s;
}

inline std::string format_label(const FusionQuiver& q, const EdgeLabel& l) {
  if (const auto* r = std::get_if<RingElement>(&l)) return q.ring ? format_element(q.ring->names(), *r) : r->str();
  return "action";
}

namespace detail {

inline json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

inline Integer json_integer(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorKind::ParseError, "expected an integer, got " + j.dump());
}

inline json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline IntMatrix json_matrix(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "matrix must be an array of rows");
  const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw Error(ErrorKind::ParseError, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = json_integer(j[r][c]);
  }
  return m;
}

inline std::vector<std::string> json_names(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw Error(ErrorKind::ParseError, std::string("missing array '") + key + "'");
  std::vector<std::string> out;
  for (const auto& n : j[key]) {
    if (!n.is_string()) throw Error(ErrorKind::ParseError, std::string("'") + key + "' must hold strings");
    out.push_back(n.get<std::string>());
  }
  return out;
}

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
}

}  // namespace detail

// ---- fusion rings

inline json to_json(const FusionRing& ring) {
  const std::size_t r = ring.rank();
  json n = json::array();
  for (std::size_t i = 0; i < r; ++i) {
    json a = json::array();
    for (std::size_t j = 0; j < r; ++j) {
      json b = json::array();
      for (std::size_t k = 0; k < r; ++k) b.push_back(detail::integer_json(ring.N(i, j, k)));
      a.push_back(std::move(b));
    }
    n.push_back(std::move(a));
  }
  json out = {{"names", ring.names()}, {"unit", ring.unit()}, {"N", std::move(n)}};
  if (ring.dual_was_given()) out["dual"] = ring.dual_permutation();
  return out;
}

inline FusionRing ring_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "ring must be an object");
  auto names = detail::json_names(j, "names");
  const std::size_t r = names.size();
  if (!j.contains("unit") || !j["unit"].is_number_unsigned()) throw Error(ErrorKind::ParseError, "missing 'unit'");
  if (!j.contains("N") || !j["N"].is_array() || j["N"].size() != r)
    throw Error(ErrorKind::ParseError, "'N' must be a rank x rank x rank array");
  std::vector<Integer> n;
  n.reserve(r * r * r);
  for (const auto& a : j["N"]) {
    if (!a.is_array() || a.size() != r) throw Error(ErrorKind::ParseError, "'N' has the wrong shape");
    for (const auto& b : a) {
      if (!b.is_array() || b.size() != r) throw Error(ErrorKind::ParseError, "'N' has the wrong shape");
      for (const auto& c : b) n.push_back(detail::json_integer(c));
    }
  }
  std::optional<std::vector<std::size_t>> dual;
  if (j.contains("dual")) dual = j["dual"].get<std::vector<std::size_t>>();
  return FusionRing(std::move(names), j["unit"].get<std::size_t>(), std::move(n), std::move(dual));
}

/// A ring given inline, as "builtin:<key>", or as a path relative to base.
inline std::shared_ptr<const FusionRing> resolve_ring(const json& j, const std::filesystem::path& base) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.rfind("builtin:", 0) == 0) return builtin_ring(s.substr(8));
    return std::make_shared<const FusionRing>(ring_from_json(detail::read_json_file(base / s)));
  }
  return std::make_shared<const FusionRing>(ring_from_json(j));
}

// ---- module categories

inline json to_json(const ModuleCategory& m) {
  json out = {{"mnames", m.names()}};
  if (m.has_ring()) {
    out["ring"] = to_json(m.ring());
    json act = json::array();
    for (const auto& a : m.actions()) act.push_back(detail::matrix_json(a));
    out["act"] = std::move(act);
  }
  return out;
}

inline ModuleCategory module_from_json(const json& j, const std::filesystem::path& base = {}) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "module must be an object");
  auto names = detail::json_names(j, "mnames");
  if (!j.contains("ring")) return ModuleCategory::action_only(std::move(names));
  auto ring = resolve_ring(j["ring"], base);
  if (!j.contains("act") || !j["act"].is_array()) throw Error(ErrorKind::ParseError, "missing 'act'");
  std::vector<IntMatrix> act;
  for (const auto& a : j["act"]) act.push_back(detail::json_matrix(a));
  return ModuleCategory(std::move(ring), std::move(names), std::move(act));
}

inline std::shared_ptr<const ModuleCategory> resolve_module(const json& j, const std::filesystem::path& base) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.rfind("builtin:", 0) == 0) return builtin_module(s.substr(8));
    const auto path = base / s;
    return std::make_shared<const ModuleCategory>(module_from_json(detail::read_json_file(path), path.parent_path()));
  }
  return std::make_shared<const ModuleCategory>(module_from_json(j, base));
}

// ---- labels and quivers

/// A simple's name, "[0,1]", "0,1", "2*tau" or "1+tau".
inline RingElement parse_element(const FusionRing& ring, const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty ring element");
  if (auto i = ring.index_of(s)) return ring.simple(*i);
  if (s.front() == '[' || s.find(',') != std::string::npos || (ring.rank() == 1 && std::isdigit(s.front()))) {
    std::string body = s;
    if (body.front() == '[') {
      if (body.back() != ']') throw Error(ErrorKind::ParseError, "unbalanced bracket in " + text);
      body = body.substr(1, body.size() - 2);
    }
    std::vector<Integer> coeffs;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        coeffs.emplace_back(item);
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad coefficient '" + item + "'");
      }
    }
    if (coeffs.size() != ring.rank())
      throw Error(ErrorKind::DimensionMismatch, "vector " + text + " has " + std::to_string(coeffs.size()) +
                                                    " entries, ring has rank " + std::to_string(ring.rank()));
    return RingElement(std::move(coeffs));
  }
  RingElement out = ring.zero();
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, '+')) {
    Integer c = 1;
    std::string name = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      try {
        c = Integer(term.substr(0, star));
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad coefficient in '" + term + "'");
      }
      name = term.substr(star + 1);
    }
    auto i = ring.index_of(name);
    if (!i) throw Error(ErrorKind::UnknownKey, "no simple named '" + name + "'");
    out[*i] += c;
  }
  return out;
}

inline json label_json(const FusionQuiver& q, const EdgeLabel& l) {
  if (const auto* r = std::get_if<RingElement>(&l)) {
    if (q.ring) {
      std::size_t nonzero = 0, at = 0;
      for (std::size_t i = 0; i < r->size(); ++i)
        if ((*r)[i] != 0) {
          ++nonzero;
          at = i;
        }
      if (nonzero == 1 && (*r)[at] == 1) return q.ring->names()[at];
    }
    json v = json::array();
    for (const auto& c : r->coeffs()) v.push_back(detail::integer_json(c));
    return v;
  }
  const auto& a = std::get<ActionLabel>(l);
  json out = {{"matrix", detail::matrix_json(a.matrix)}};
  if (a.fpdim) out["fpdim"] = *a.fpdim;
  return out;
}

inline EdgeLabel label_from_json(const json& j, const FusionRing* ring) {
  if (j.is_object()) {
    if (!j.contains("matrix")) throw Error(ErrorKind::ParseError, "action label needs 'matrix'");
    ActionLabel a{detail::json_matrix(j["matrix"]), std::nullopt};
    if (j.contains("fpdim")) a.fpdim = j["fpdim"].get<double>();
    return a;
  }
  if (!ring) throw Error(ErrorKind::MissingAction, "ring label " + j.dump() + " but the quiver has no ring");
  if (j.is_string()) return parse_element(*ring, j.get<std::string>());
  if (j.is_array()) {
    std::vector<Integer> coeffs;
    for (const auto& c : j) coeffs.push_back(detail::json_integer(c));
    if (coeffs.size() != ring->rank()) throw Error(ErrorKind::DimensionMismatch, "label vector has the wrong length");
    return RingElement(std::move(coeffs));
  }
  throw Error(ErrorKind::ParseError, "unrecognised label " + j.dump());
}

inline json to_json(const FusionQuiver& q) {
  json edges = json::array();
  for (const auto& e : q.edges)
    edges.push_back({{"from", q.vertices.at(e.source)}, {"to", q.vertices.at(e.target)}, {"label", label_json(q, e.label)}});
  json out = {{"vertices", q.vertices}, {"edges", std::move(edges)}};
  if (q.ring) out["ring"] = to_json(*q.ring);
  if (q.module) out["module"] = to_json(*q.module);
  return out;
}

inline FusionQuiver quiver_from_json(const json& j, const std::filesystem::path& base = {}) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "quiver must be an object");
  FusionQuiver q;
  q.vertices = detail::json_names(j, "vertices");
  if (j.contains("ring")) q.ring = resolve_ring(j["ring"], base);
  if (j.contains("module")) {
    q.module = resolve_module(j["module"], base);
    if (!q.ring && q.module->has_ring()) q.ring = q.module->ring_ptr();
  }
  if (!j.contains("edges") || !j["edges"].is_array()) throw Error(ErrorKind::ParseError, "missing 'edges'");
  auto vertex = [&](const json& v) -> std::size_t {
    if (v.is_number_unsigned()) {
      const auto i = v.get<std::size_t>();
      if (i >= q.size()) throw Error(ErrorKind::OutOfRange, "vertex index " + std::to_string(i));
      return i;
    }
    if (v.is_string())
      if (auto i = q.index_of(v.get<std::string>())) return *i;
    throw Error(ErrorKind::ParseError, "unknown vertex " + v.dump());
  };
  for (const auto& e : j["edges"]) {
    if (!e.contains("from") || !e.contains("to") || !e.contains("label"))
      throw Error(ErrorKind::ParseError, "edge needs 'from', 'to' and 'label'");
    q.edges.push_back({vertex(e["from"]), vertex(e["to"]), label_from_json(e["label"], q.ring.get())});
  }
  return q;
}

inline FusionRing load_ring(const std::filesystem::path& path) { return ring_from_json(detail::read_json_file(path)); }

inline ModuleCategory load_module(const std::filesystem::path& path) {
  return module_from_json(detail::read_json_file(path), path.parent_path());
}

inline FusionQuiver load_quiver(const std::filesystem::path& path) {
  return quiver_from_json(detail::read_json_file(path), path.parent_path());
}

// ---- DOT

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string to_dot(const FusionQuiver& q) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (const auto& v : q.vertices) os << "  " << dot_quote(v) << ";\n";
  for (const auto& e : q.edges)
    os << "  " << dot_quote(q.vertices[e.source]) << " -> " << dot_quote(q.vertices[e.target])
       << " [label=" << dot_quote(format_label(q, e.label)) << "];\n";
  os << "}\n";
  return os.str();
}

/// Edges labelled 3 are drawn plain.
inline std::string to_dot(const CoxeterGraph& g) {
  std::ostringstream os;
  os << "graph gamma {\n";
  for (const auto& v : g.vertices) os << "  " << dot_quote(v) << ";\n";
  for (const auto& e : g.edges) {
    os << "  " << dot_quote(g.vertices[e.u]) << " -- " << dot_quote(g.vertices[e.w]);
    if (!(e.m == CoxeterLabel(3))) os << " [label=" << dot_quote(e.m.str()) << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const OrdinaryQuiver& q, const std::string& name = "unfolded") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (const auto& v : q.vertices) os << "  " << dot_quote(v) << ";\n";
  for (const auto& a : q.arrows) {
    os << "  " << dot_quote(q.vertices[a.source]) << " -> " << dot_quote(q.vertices[a.target]);
    if (a.multiplicity != 1) os << " [label=" << dot_quote(std::to_string(a.multiplicity)) << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace fqk

#endif  // FQK_IO_HPP
