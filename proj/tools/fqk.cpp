// fqk: command-line front end for the fusion quiver toolkit.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fqk/fqk.hpp"

namespace {

using namespace fqk;

struct Inputs {
  std::string builtin;
  std::string ring;
  std::string module;
  std::string quiver;
  std::string object;
  std::string label;
  std::string format = "table";
  std::string dot;
  std::string in;
  std::string what = "quiver";
  long long upto = 20;
  bool separated = false;
  bool free = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool json_out(const Inputs& in) { return in.format == "json"; }

std::shared_ptr<const FusionRing> need_ring(const Inputs& in) {
  if (!in.ring.empty()) {
    if (in.ring.rfind("builtin:", 0) == 0) return builtin_ring(in.ring.substr(8));
    return std::make_shared<const FusionRing>(load_ring(in.ring));
  }
  if (!in.builtin.empty()) return builtin_ring(in.builtin);
  throw UsageError("need --ring or --builtin");
}

std::shared_ptr<const ModuleCategory> module_override(const Inputs& in) {
  if (in.module.empty()) return nullptr;
  if (in.module.rfind("builtin:", 0) == 0) return builtin_module(in.module.substr(8));
  return std::make_shared<const ModuleCategory>(load_module(in.module));
}

std::shared_ptr<const FusionQuiver> need_quiver(const Inputs& in, const std::string& path) {
  if (!path.empty()) return std::make_shared<const FusionQuiver>(load_quiver(path));
  if (!in.builtin.empty()) return builtin_quiver(in.builtin);
  throw UsageError("need --quiver or --builtin");
}

std::shared_ptr<const ModuleCategory> module_for(const Inputs& in, const FusionQuiver& q) {
  if (auto m = module_override(in)) return m;
  return default_module(q);
}

std::string dimvec_row(const FusionQuiver& q, const ModuleCategory& M, const DimensionVector& x) {
  std::string s;
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (x[v].is_zero()) continue;
    if (!s.empty()) s += " + ";
    const std::string c = format_element(M.names(), x[v]);
    s += (c.find('+') != std::string::npos ? "(" + c + ")" : c) + "α_" + q.vertices[v];
  }
  return s;
}

std::string h_and_roots(const ComponentReport& rep) {
  std::vector<std::uint64_t> hs;
  for (const auto& c : rep.components)
    if (auto h = c.coxeter_number(); h && std::find(hs.begin(), hs.end(), *h) == hs.end()) hs.push_back(*h);
  std::string s = "h=";
  for (std::size_t i = 0; i < hs.size(); ++i) s += (i ? "/" : "") + std::to_string(hs[i]);
  return s + ", " + std::to_string(*rep.total_roots()) + " roots";
}

int cmd_validate(const Inputs& in) {
  ValidationReport rep;
  std::string what;
  if (!in.quiver.empty() || (!in.builtin.empty() && std::holds_alternative<std::shared_ptr<const FusionQuiver>>(builtin(in.builtin)))) {
    auto q = need_quiver(in, in.quiver);
    what = "quiver";
    try {
      check_edges(*q);
      if (q->ring) rep = validate(*q->ring);
      auto m = validate_module(*module_for(in, *q));
      for (auto& v : m.violations) rep.add(v);
      for (auto& w : m.warnings) rep.warnings.push_back(w);
      const auto M = module_for(in, *q);
      for (const auto& e : q->edges) label_action(*M, e.label);
    } catch (const Error& e) {
      rep.add(e.what());
    }
  } else if (!in.module.empty() || (!in.builtin.empty() && std::holds_alternative<std::shared_ptr<const ModuleCategory>>(builtin(in.builtin)))) {
    what = "module";
    auto m = in.module.empty() ? builtin_module(in.builtin) : module_override(in);
    if (m->has_ring()) rep = validate(m->ring());
    auto mr = validate_module(*m);
    for (auto& v : mr.violations) rep.add(v);
    for (auto& w : mr.warnings) rep.warnings.push_back(w);
  } else {
    what = "ring";
    rep = validate(*need_ring(in));
  }
  if (json_out(in)) {
    std::cout << json{{"kind", what}, {"valid", rep.ok()}, {"violations", rep.violations}, {"warnings", rep.warnings}}.dump(2)
              << "\n";
  } else {
    std::cout << what << ": " << (rep.ok() ? "valid" : "INVALID") << "\n";
    for (const auto& v : rep.violations) std::cout << "  violation: " << v << "\n";
    for (const auto& w : rep.warnings) std::cout << "  warning: " << w << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int cmd_fpdim(const Inputs& in) {
  auto ring = need_ring(in);
  const FPVector fp = fpdim(*ring);
  std::cout << std::setprecision(12);
  if (!in.object.empty()) {
    const RingElement x = parse_element(*ring, in.object);
    const double f = fpdim_of(fp, x);
    if (json_out(in))
      std::cout << json{{"object", in.object}, {"fpdim", f}}.dump(2) << "\n";
    else
      std::cout << "FPdim(" << format_element(ring->names(), x) << ") = " << f << "\n";
    return 0;
  }
  if (json_out(in)) {
    json j = json::object();
    for (std::size_t i = 0; i < ring->rank(); ++i) j[ring->names()[i]] = fp.dims[i];
    std::cout << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < ring->rank(); ++i) std::cout << ring->names()[i] << "\t" << fp.dims[i] << "\n";
  }
  return 0;
}

int cmd_gamma(const Inputs& in) {
  auto q = need_quiver(in, in.quiver);
  const CoxeterGraph g = coxeter_graph(normalize(*q));
  const CoxeterClassification c = classify_coxeter(g);
  if (json_out(in)) {
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({{"u", g.vertices[e.u]}, {"w", g.vertices[e.w]}, {"m", e.m.str()}});
    std::cout << json{{"gamma", c.str()}, {"finite", c.finite()}, {"edges", edges}}.dump(2) << "\n";
  } else {
    std::cout << c.str() << "\n";
  }
  return 0;
}

int cmd_classify(const Inputs& in) {
  auto q = std::make_shared<const FusionQuiver>(normalize(*need_quiver(in, in.quiver)));
  const auto M = module_for(in, *q);
  const FiniteTypeVerdict v = is_finite_type(*q, *M);
  const auto& rep = v.unfolded;
  if (json_out(in)) {
    json comps = json::array();
    for (const auto& c : rep.components) {
      json jc = {{"type", c.type.str()}, {"size", c.vertices.size()}};
      if (auto h = c.coxeter_number()) jc["coxeter_number"] = *h;
      if (auto r = c.positive_root_count()) jc["roots"] = *r;
      comps.push_back(jc);
    }
    std::cout << json{{"finite", v.finite}, {"gamma", v.gamma.str()}, {"unfolded", rep.summary()}, {"components", comps}}.dump(2)
              << "\n";
    return 0;
  }
  std::cout << (v.finite ? "finite" : "infinite") << "; Γ_Q = " << v.gamma.str() << "; Q̌ = " << rep.summary();
  if (rep.all_finite()) std::cout << " (" << h_and_roots(rep) << ")";
  std::cout << "\n";
  for (const auto& c : rep.components) {
    auto h = c.coxeter_number();
    auto r = c.positive_root_count();
    std::cout << "  " << std::left << std::setw(10) << c.type.str() << " vertices=" << c.vertices.size()
              << " h=" << (h ? std::to_string(*h) : "∞") << " roots=" << (r ? std::to_string(*r) : "∞") << "\n";
  }
  return 0;
}

int cmd_unfold(const Inputs& in) {
  auto q = normalize(*need_quiver(in, in.quiver));
  const auto M = module_for(in, q);
  const UnfoldedQuiver u = unfold(q, *M);
  if (!in.dot.empty()) {
    std::ofstream out(in.dot);
    if (!out) throw UsageError("cannot write " + in.dot);
    out << to_dot(u.quiver);
  }
  if (json_out(in)) {
    json arrows = json::array();
    for (const auto& a : u.quiver.arrows)
      arrows.push_back({{"from", u.quiver.vertices[a.source]}, {"to", u.quiver.vertices[a.target]}, {"multiplicity", a.multiplicity}});
    std::cout << json{{"vertices", u.quiver.vertices}, {"arrows", arrows}}.dump(2) << "\n";
  } else {
    std::cout << u.quiver.size() << " vertices, " << u.quiver.arrow_count() << " arrows; " << components(u).summary() << "\n";
    for (const auto& a : u.quiver.arrows) {
      std::cout << "  " << u.quiver.vertices[a.source] << " -> " << u.quiver.vertices[a.target];
      if (a.multiplicity != 1) std::cout << " x" << a.multiplicity;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_enumerate(const Inputs& in) {
  auto q = normalize(*need_quiver(in, in.quiver));
  const auto M = module_for(in, q);
  const auto vecs = enumerate_indecomposables(q, *M);
  if (json_out(in)) {
    json rows = json::array();
    for (const auto& x : vecs) {
      json row = json::object();
      for (std::size_t v = 0; v < x.size(); ++v) {
        json c = json::array();
        for (const auto& e : x[v].coeffs()) c.push_back(detail::integer_json(e));
        row[q.vertices[v]] = c;
      }
      rows.push_back(row);
    }
    std::cout << json{{"count", vecs.size()}, {"mnames", M->names()}, {"vectors", rows}}.dump(2) << "\n";
  } else {
    for (const auto& x : vecs) std::cout << dimvec_row(q, *M, x) << "\n";
    std::cout << vecs.size() << " indecomposables\n";
  }
  return 0;
}

int cmd_mckay(const Inputs& in) {
  std::shared_ptr<const ModuleCategory> M = module_override(in);
  if (!M && !in.builtin.empty()) M = builtin_module(in.builtin);
  if (!M) throw UsageError("need --module or --builtin");
  if (in.label.empty()) throw UsageError("need --label");
  OrdinaryQuiver q;
  if (in.label.front() == '{' || in.label.rfind("[[", 0) == 0) {
    json j = json::parse(in.label);
    const IntMatrix a = detail::json_matrix(j.is_object() ? j.at("matrix") : j);
    q = mckay_quiver(*M, a, in.separated);
  } else if (M->has_ring()) {
    q = mckay_quiver(*M, parse_element(M->ring(), in.label), in.separated);
  } else if (!in.builtin.empty() && std::holds_alternative<std::shared_ptr<const FusionQuiver>>(builtin(in.builtin))) {
    const auto bq = builtin_quiver(in.builtin);
    q = mckay_quiver(*M, label_action(*M, bq->edges.at(0).label), in.separated);
  } else {
    throw UsageError("action-only module: give the label as a matrix");
  }
  if (json_out(in)) {
    json arrows = json::array();
    for (const auto& a : q.arrows) arrows.push_back({{"from", q.vertices[a.source]}, {"to", q.vertices[a.target]}, {"multiplicity", a.multiplicity}});
    std::cout << json{{"vertices", q.vertices}, {"arrows", arrows}}.dump(2) << "\n";
  } else {
    std::cout << to_dot(q, "mckay");
  }
  return 0;
}

int cmd_qnum(const Inputs& in) {
  if (in.free) {
    for (long long k = 0; k <= in.upto; ++k)
      std::cout << "[" << k << "]_d = " << qnum_free(k, Color::D).str() << "\t[" << k
                << "]_d′ = " << qnum_free(k, Color::DPrime).str() << "\n";
    return 0;
  }
  auto ring = need_ring(in);
  if (in.object.empty()) throw UsageError("need --object");
  const RingElement pi = parse_element(*ring, in.object);
  const FPVector fp = fpdim(*ring);
  json rows = json::array();
  for (long long k = 0; k <= in.upto; ++k) {
    auto [d, dp] = qnum_in_ring(*ring, pi, k);
    if (json_out(in))
      rows.push_back({{"k", k}, {"d", format_element(ring->names(), d)}, {"dprime", format_element(ring->names(), dp)},
                      {"fpdim", fpdim_of(fp, d)}});
    else
      std::cout << "[" << k << "]_d = " << format_element(ring->names(), d) << "\t[" << k
                << "]_d′ = " << format_element(ring->names(), dp) << "\n";
  }
  if (json_out(in)) std::cout << rows.dump(2) << "\n";
  return 0;
}

int cmd_rank2(const Inputs& in) {
  RankTwoOrder r;
  if (!in.builtin.empty() && std::holds_alternative<std::shared_ptr<const FusionQuiver>>(builtin(in.builtin))) {
    const auto q = builtin_quiver(in.builtin);
    if (q->edges.size() != 1) throw UsageError(in.builtin + " is not a one-edge quiver");
    r = rank_two_order(module_for(in, *q), q->edges[0].label);
  } else {
    auto ring = need_ring(in);
    if (in.object.empty()) throw UsageError("need --object");
    auto M = module_override(in);
    if (!M) M = std::make_shared<const ModuleCategory>(regular_module(ring));
    r = rank_two_order(M, parse_element(*ring, in.object));
  }
  std::string orbits;
  for (const auto& o : r.by_orbit) orbits += (orbits.empty() ? "" : ",") + o.str();
  if (json_out(in))
    std::cout << json{{"order", r.order.str()}, {"fpdim", r.by_fpdim.str()}, {"quantum", r.by_quantum.str()}, {"orbits", orbits}}.dump(2)
              << "\n";
  else
    std::cout << r.order.str() << "  (fpdim " << r.by_fpdim.str() << ", quantum " << r.by_quantum.str() << ", orbits "
              << orbits << ")\n";
  return 0;
}

int cmd_dot(const Inputs& in) {
  auto q = need_quiver(in, in.in);
  std::string text;
  if (in.what == "quiver")
    text = to_dot(*q);
  else if (in.what == "gamma")
    text = to_dot(coxeter_graph(normalize(*q)));
  else if (in.what == "unfolded")
    text = to_dot(unfold(normalize(*q), *module_for(in, *q)).quiver);
  else
    throw UsageError("--what must be quiver, gamma or unfolded");
  if (!in.dot.empty()) {
    std::ofstream out(in.dot);
    out << text;
  } else {
    std::cout << text;
  }
  return 0;
}

int cmd_catalog(const Inputs& in) {
  if (json_out(in)) {
    json rows = json::array();
    for (const auto& e : catalog_list())
      rows.push_back({{"key", e.key}, {"kind", to_string(e.kind)}, {"parametrised", e.parametrised}, {"description", e.description}});
    std::cout << rows.dump(2) << "\n";
    return 0;
  }
  for (const auto& e : catalog_list())
    std::cout << std::left << std::setw(24) << (e.parametrised ? e.key + ":<l>" : e.key) << std::setw(8)
              << to_string(e.kind) << e.description << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion quivers: finite type, unfolding and indecomposables"};
  app.require_subcommand(1);
  Inputs in;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--builtin", in.builtin, "builtin catalog key");
    sub->add_option("--format", in.format, "output format")->check(CLI::IsMember({"table", "json"}));
  };
  auto add_quiver = [&](CLI::App* sub) {
    sub->add_option("--quiver", in.quiver, "quiver JSON file");
    sub->add_option("--module", in.module, "module JSON file or builtin:<key>");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check ring, module or quiver data");
  add_common(validate_cmd);
  add_quiver(validate_cmd);
  validate_cmd->add_option("--ring", in.ring, "ring JSON file");

  auto* fpdim_cmd = app.add_subcommand("fpdim", "Frobenius-Perron dimensions");
  add_common(fpdim_cmd);
  fpdim_cmd->add_option("--ring", in.ring, "ring JSON file");
  fpdim_cmd->add_option("--object", in.object, "simple name or coefficient vector");

  auto* gamma_cmd = app.add_subcommand("gamma", "Coxeter graph of a quiver");
  add_common(gamma_cmd);
  add_quiver(gamma_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "decide finite representation type");
  add_common(classify_cmd);
  add_quiver(classify_cmd);

  auto* unfold_cmd = app.add_subcommand("unfold", "unfolded ordinary quiver");
  add_common(unfold_cmd);
  add_quiver(unfold_cmd);
  unfold_cmd->add_option("--dot", in.dot, "write DOT to this file");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "dimension vectors of indecomposables");
  add_common(enumerate_cmd);
  add_quiver(enumerate_cmd);

  auto* mckay_cmd = app.add_subcommand("mckay", "McKay quiver of a module");
  add_common(mckay_cmd);
  mckay_cmd->add_option("--module", in.module, "module JSON file or builtin:<key>");
  mckay_cmd->add_option("--label", in.label, "simple name, vector, or JSON matrix");
  mckay_cmd->add_flag("--separated", in.separated, "bipartite doubling");

  auto* qnum_cmd = app.add_subcommand("qnum", "two-coloured quantum numbers");
  add_common(qnum_cmd);
  qnum_cmd->add_option("--ring", in.ring, "ring JSON file");
  qnum_cmd->add_option("--object", in.object, "the object Pi");
  qnum_cmd->add_option("--upto", in.upto, "largest k")->check(CLI::Range(0LL, 100000LL));
  qnum_cmd->add_flag("--free", in.free, "print the polynomials in d, d'");

  auto* rank2_cmd = app.add_subcommand("rank2", "order of sigma_a sigma_b on a -> b");
  add_common(rank2_cmd);
  rank2_cmd->add_option("--ring", in.ring, "ring JSON file");
  rank2_cmd->add_option("--module", in.module, "module JSON file or builtin:<key>");
  rank2_cmd->add_option("--object", in.object, "the edge label");

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz export");
  add_common(dot_cmd);
  dot_cmd->add_option("--in", in.in, "quiver JSON file");
  dot_cmd->add_option("--module", in.module, "module JSON file or builtin:<key>");
  dot_cmd->add_option("--what", in.what, "quiver, gamma or unfolded")->check(CLI::IsMember({"quiver", "gamma", "unfolded"}));
  dot_cmd->add_option("--dot", in.dot, "output file (default stdout)");

  auto* catalog_cmd = app.add_subcommand("catalog", "builtin data");
  catalog_cmd->add_option("--format", in.format, "output format")->check(CLI::IsMember({"table", "json"}));
  catalog_cmd->add_subcommand("list", "list builtin keys");
  catalog_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(in);
    if (*fpdim_cmd) return cmd_fpdim(in);
    if (*gamma_cmd) return cmd_gamma(in);
    if (*classify_cmd) return cmd_classify(in);
    if (*unfold_cmd) return cmd_unfold(in);
    if (*enumerate_cmd) return cmd_enumerate(in);
    if (*mckay_cmd) return cmd_mckay(in);
    if (*qnum_cmd) return cmd_qnum(in);
    if (*rank2_cmd) return cmd_rank2(in);
    if (*dot_cmd) return cmd_dot(in);
    if (*catalog_cmd) return cmd_catalog(in);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::UnknownKey:
      case ErrorKind::InvalidParameter:
      case ErrorKind::ParseError: return 2;
      default: return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
