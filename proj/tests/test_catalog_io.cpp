#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <regex>

#include "fqk/fqk.hpp"
#include "oracles.hpp"

using namespace fqk;

namespace {

struct DotGraph {
  std::set<std::string> nodes;
  std::multiset<std::tuple<std::string, std::string, std::string>> edges;  // from, to, label
};

// Just enough DOT to read back what to_dot writes.
DotGraph parse_dot(const std::string& text) {
  DotGraph g;
  const std::regex node(R"re(^\s*"((?:[^"\\]|\\.)*)";\s*$)re");
  const std::regex edge(R"re(^\s*"((?:[^"\\]|\\.)*)"\s*(?:->|--)\s*"((?:[^"\\]|\\.)*)"(?:\s*\[label="((?:[^"\\]|\\.)*)"\])?;\s*$)re");
  std::istringstream in(text);
  std::string line;
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_match(line, m, edge))
      g.edges.insert({m[1], m[2], m[3]});
    else if (std::regex_match(line, m, node))
      g.nodes.insert(m[1]);
  }
  return g;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "fqk_io_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("catalog lists every builtin", "[catalog]") {
  CHECK(catalog_list().size() == 18);
  for (const auto& e : catalog_list()) {
    INFO(e.key);
    const std::string key = e.parametrised ? e.key + ":4" : e.key;
    CHECK_NOTHROW(builtin(key));
  }
  CHECK(catalog_entry("fibonacci").kind == CatalogKind::Ring);
  CHECK(to_string(CatalogKind::Quiver) == "quiver");
}

TEST_CASE("builtin rings and modules validate", "[catalog]") {
  for (const auto& key : oracle::builtin_ring_keys()) {
    INFO(key);
    CHECK(validate(*builtin_ring(key)).ok());
  }
  for (const auto& key : oracle::builtin_module_keys()) {
    INFO(key);
    CHECK(validate_module(*builtin_module(key)).ok());
  }
  CHECK(validate_module(*builtin_module("sl3at5_action")).ok());
  CHECK(builtin_ring("fibonacci")->names() == std::vector<std::string>{"1", "tau"});
  CHECK(builtin_ring("rep_s4")->names() == std::vector<std::string>{"1", "S", "W", "V", "V'"});
  CHECK(builtin_module("sl3at5_action")->names() == sl3at5_names());
  CHECK(builtin_ring("fibonacci") == builtin_ring("fibonacci"));
}

TEST_CASE("unknown keys and bad parameters", "[catalog]") {
  const auto kind_of = [](const std::string& key) -> std::optional<ErrorKind> {
    try {
      builtin(key);
    } catch (const Error& e) {
      return e.kind();
    }
    return std::nullopt;
  };
  CHECK(kind_of("no_such_thing") == ErrorKind::UnknownKey);
  CHECK(kind_of("verlinde_sl2") == ErrorKind::InvalidParameter);
  CHECK(kind_of("verlinde_sl2:x") == ErrorKind::InvalidParameter);
  CHECK(kind_of("verlinde_sl2:0") == ErrorKind::InvalidParameter);
  CHECK(kind_of("fibonacci:3") == ErrorKind::InvalidParameter);
  CHECK(kind_of("verlinde_typeD:5") == ErrorKind::InvalidParameter);
  CHECK_THROWS_AS(builtin_quiver("fibonacci"), Error);
  CHECK_THROWS_AS(builtin_ring("sl3at5_quiver"), Error);
  CHECK(parse_key("verlinde_sl2:12") == std::pair<std::string, std::optional<long long>>{"verlinde_sl2", 12});
}

TEST_CASE("JSON round trips are exact", "[io]") {
  for (const auto& key : oracle::builtin_ring_keys()) {
    const auto ring = builtin_ring(key);
    const json j = to_json(*ring);
    const FusionRing back = ring_from_json(json::parse(j.dump()));
    CHECK(back == *ring);
    CHECK(to_json(back).dump() == j.dump());
  }
  for (const auto& key : oracle::builtin_module_keys()) {
    const auto m = builtin_module(key);
    const json j = to_json(*m);
    const ModuleCategory back = module_from_json(json::parse(j.dump()));
    CHECK(back == *m);
    CHECK(to_json(back).dump() == j.dump());
  }
  for (const auto& key : oracle::builtin_quiver_keys()) {
    INFO(key);
    const auto q = builtin_quiver(key);
    const json j = to_json(*q);
    const FusionQuiver back = quiver_from_json(json::parse(j.dump()));
    CHECK(to_json(back).dump() == j.dump());
    CHECK(back.vertices == q->vertices);
    CHECK(back.edges == q->edges);
  }
}

TEST_CASE("big structure constants survive JSON", "[io]") {
  std::vector<Integer> n = {1, 0, 0, 1, 0, 1, 1, 0};
  n[7] = Integer("123456789012345678901234567890");
  FusionRing big({"1", "x"}, 0, n);
  const auto back = ring_from_json(json::parse(to_json(big).dump()));
  CHECK(back.N(1, 1, 1) == Integer("123456789012345678901234567890"));
}

TEST_CASE("malformed JSON is a parse error", "[io]") {
  const auto kind_of = [](const json& j) -> std::optional<ErrorKind> {
    try {
      ring_from_json(j);
    } catch (const Error& e) {
      return e.kind();
    }
    return std::nullopt;
  };
  CHECK(kind_of(json::array()) == ErrorKind::ParseError);
  CHECK(kind_of(json{{"names", {"1"}}}) == ErrorKind::ParseError);
  CHECK(kind_of(json{{"names", {"1"}}, {"unit", 0}, {"N", {{{1, 2}}}}}) == ErrorKind::ParseError);
  CHECK_THROWS_AS(quiver_from_json(json{{"vertices", {"a"}}, {"edges", {{{"from", "a"}, {"to", "z"}, {"label", "1"}}}}}),
                  Error);
}

TEST_CASE("files reference builtins and each other", "[io]") {
  const auto dir = scratch_dir();
  {
    std::ofstream(dir / "fib.json") << to_json(*builtin_ring("fibonacci")).dump(2);
    json q = {{"vertices", {"a", "b"}}, {"ring", "fib.json"}, {"edges", {{{"from", "a"}, {"to", "b"}, {"label", "tau"}}}}};
    std::ofstream(dir / "q.json") << q.dump(2);
    json qb = {{"vertices", {"x", "y"}},
               {"module", "builtin:verlinde_typeD:4"},
               {"edges", {{{"from", 0}, {"to", 1}, {"label", "V1"}}}}};
    std::ofstream(dir / "qb.json") << qb.dump(2);
  }
  const auto q = load_quiver(dir / "q.json");
  CHECK(is_finite_type(q).unfolded.summary() == "A4");
  const auto qb = load_quiver(dir / "qb.json");
  REQUIRE(qb.ring);
  CHECK(enumerate_indecomposables(qb).size() == 24);
  CHECK(load_ring(dir / "fib.json") == *builtin_ring("fibonacci"));
  CHECK_THROWS_AS(load_ring(dir / "missing.json"), Error);
  std::ofstream(dir / "broken.json") << "{ not json";
  try {
    load_ring(dir / "broken.json");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
}

TEST_CASE("parse_element accepts names, vectors and sums", "[io]") {
  const auto fib = builtin_ring("fibonacci");
  CHECK(parse_element(*fib, "tau") == fib->simple(1));
  CHECK(parse_element(*fib, "[0,1]") == fib->simple(1));
  CHECK(parse_element(*fib, "1,1") == RingElement({1, 1}));
  CHECK(parse_element(*fib, "2*tau") == RingElement({0, 2}));
  CHECK(parse_element(*fib, "1 + tau") == RingElement({1, 1}));
  CHECK(parse_element(*builtin_ring("vect"), "2") == RingElement({2}));
  CHECK_THROWS_AS(parse_element(*fib, "sigma"), Error);
  CHECK_THROWS_AS(parse_element(*fib, "[1,2,3]"), Error);
  CHECK_THROWS_AS(parse_element(*fib, ""), Error);
  CHECK(format_element(fib->names(), RingElement({1, 1})) == "[1]+[tau]");
  CHECK(format_element(fib->names(), RingElement({0, -2})) == "-2[tau]");
  CHECK(format_element(fib->names(), fib->zero()) == "0");
}

TEST_CASE("DOT output reads back", "[io]") {
  for (const auto& key : oracle::builtin_quiver_keys()) {
    INFO(key);
    const auto q = *builtin_quiver(key);
    const auto g = parse_dot(to_dot(q));
    CHECK(g.nodes == std::set<std::string>(q.vertices.begin(), q.vertices.end()));
    CHECK(g.edges.size() == q.edges.size());
    for (const auto& e : q.edges)
      CHECK(g.edges.count({q.vertices[e.source], q.vertices[e.target], format_label(q, e.label)}) == 1);

    const auto u = unfold(q);
    const auto gu = parse_dot(to_dot(u.quiver));
    CHECK(gu.nodes.size() == u.quiver.size());
    std::uint64_t arrows = 0;
    for (const auto& [from, to, label] : gu.edges) arrows += label.empty() ? 1 : std::stoull(label);
    CHECK(arrows == u.quiver.arrow_count());
  }
  const auto h4 = parse_dot(to_dot(coxeter_graph(*builtin_quiver("fib_h4_quiver"))));
  CHECK(h4.edges.count({"a", "b", "5"}) == 1);
  CHECK(h4.edges.count({"b", "c", ""}) == 1);
  FusionQuiver odd{{"say \"hi\""}, {}, builtin_ring("vect"), nullptr};
  CHECK(parse_dot(to_dot(odd)).nodes.count("say \\\"hi\\\"") == 1);
}
