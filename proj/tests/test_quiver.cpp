#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "fqk/fqk.hpp"
#include "oracles.hpp"

using namespace fqk;
using Catch::Matchers::WithinAbs;

namespace {

const double golden = (1.0 + std::sqrt(5.0)) / 2.0;

std::vector<std::uint64_t> coxeter_labels(const CoxeterGraph& g) {
  std::vector<std::uint64_t> out;
  for (const auto& e : g.edges) out.push_back(e.m.value());
  return out;
}

// Undirected weights keyed by sorted endpoints.
std::map<std::pair<std::size_t, std::size_t>, double> weights(const LabeledGraph& g) {
  std::map<std::pair<std::size_t, std::size_t>, double> w;
  for (const auto& e : g.edges) w[{e.u, e.w}] = e.weight;
  return w;
}

}  // namespace

TEST_CASE("normalize merges parallel edges and drops zeros", "[quiver]") {
  const auto fib = builtin_ring("fibonacci");
  FusionQuiver q{{"a", "b", "c"}, {}, fib, nullptr};
  q.edges.push_back({0, 1, element(*fib, "tau")});
  q.edges.push_back({1, 2, fib->zero()});
  q.edges.push_back({0, 1, fib->one()});
  q.edges.push_back({2, 1, fib->one()});
  const auto n = normalize(q);
  REQUIRE(n.edges.size() == 2);
  CHECK(n.edges[0].source == 0);
  CHECK(std::get<RingElement>(n.edges[0].label) == RingElement({1, 1}));
  CHECK(n.edges[1].source == 2);
  CHECK(normalize(n) == n);

  FusionQuiver bad = q;
  bad.edges.push_back({0, 7, fib->one()});
  CHECK_THROWS_AS(normalize(bad), Error);
}

TEST_CASE("normalize is idempotent on random quivers", "[quiver][property]") {
  std::mt19937_64 rng(11);
  const auto ring = builtin_ring("rep_s3");
  std::uniform_int_distribution<std::size_t> vtx(0, 3);
  for (int t = 0; t < 100; ++t) {
    FusionQuiver q{{"a", "b", "c", "d"}, {}, ring, nullptr};
    for (int e = 0; e < 6; ++e) q.edges.push_back({vtx(rng), vtx(rng), oracle::random_nonneg<RingTag>(rng, 3, 1)});
    const auto once = normalize(q);
    CHECK(normalize(once) == once);
    auto before = weights(labeled_graph(q));
    std::erase_if(before, [](const auto& kv) { return kv.second == 0.0; });
    const auto after = weights(labeled_graph(once));
    REQUIRE(after.size() == before.size());
    for (const auto& [k, f] : before) CHECK_THAT(after.at(k), WithinAbs(f, 1e-9));
  }
}

TEST_CASE("reflect_quiver reverses and dualises", "[quiver]") {
  const auto q = *builtin_quiver("fib_edge_quiver");
  CHECK(is_sink(q, 1));
  CHECK(is_source(q, 0));
  const auto r = reflect_quiver(q, 1);
  REQUIRE(r.edges.size() == 1);
  CHECK(r.edges[0].source == 1);
  CHECK(r.edges[0].target == 0);
  CHECK(std::get<RingElement>(r.edges[0].label) == element(*q.ring, "tau"));
  CHECK(reflect_quiver(r, 1) == q);

  const auto h4 = *builtin_quiver("fib_h4_quiver");
  try {
    reflect_quiver(h4, 1);
    FAIL("expected NotReflectable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotReflectable);
  }
  CHECK_THROWS_AS(reflect_quiver(h4, 9), Error);

  const auto sl3 = *builtin_quiver("sl3at5_quiver");
  const auto rs = reflect_quiver(sl3, 0);
  const auto& x = std::get<ActionLabel>(sl3.edges[0].label);
  const auto& y = std::get<ActionLabel>(rs.edges[0].label);
  CHECK(y.matrix == x.matrix.transpose());
  CHECK_FALSE(y.matrix == x.matrix);
  CHECK(reflect_quiver(rs, 0) == sl3);
}

TEST_CASE("dual labels in Rep S3 and Z3", "[quiver]") {
  std::vector<Integer> z3(27);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) z3[(i * 3 + j) * 3 + (i + j) % 3] = 1;
  auto ring = std::make_shared<const FusionRing>(std::vector<std::string>{"0", "1", "2"}, 0, z3);
  const auto q = chain_quiver(ring, nullptr, {ring->simple(1)});
  const auto r = reflect_quiver(q, 0);
  CHECK(std::get<RingElement>(r.edges[0].label) == ring->simple(2));
}

TEST_CASE("|Q| and Gamma_Q of the worked examples", "[quiver]") {
  const auto fib = labeled_graph(*builtin_quiver("fib_edge_quiver"));
  REQUIRE(fib.edges.size() == 1);
  CHECK_THAT(fib.edges[0].weight, WithinAbs(golden, 1e-9));
  CHECK(coxeter_labels(coxeter_graph(fib)) == std::vector<std::uint64_t>{5});

  const auto s3 = coxeter_graph(*builtin_quiver("s3_std_quiver"));
  REQUIRE(s3.edges.size() == 1);
  CHECK(s3.edges[0].m.is_infinite());

  CHECK(coxeter_labels(coxeter_graph(*builtin_quiver("fib_h4_quiver"))) == std::vector<std::uint64_t>{5, 3, 3});
  CHECK(coxeter_labels(coxeter_graph(*builtin_quiver("verlinde_edge_quiver:4"))) == std::vector<std::uint64_t>{6});

  const auto sl3 = labeled_graph(*builtin_quiver("sl3at5_quiver"));
  CHECK_THAT(sl3.edges[0].weight, WithinAbs(golden, 1e-9));

  // m = 2 edges vanish from Gamma_Q
  const auto vect = builtin_ring("vect");
  FusionQuiver zero{{"a", "b"}, {{0, 1, vect->zero()}}, vect, nullptr};
  CHECK(coxeter_graph(zero).edges.empty());
}

TEST_CASE("classify_coxeter names the worked examples", "[quiver][coxeter]") {
  const auto name = [](const std::string& key) { return classify_coxeter(labeled_graph(*builtin_quiver(key))).str(); };
  CHECK(name("fib_edge_quiver") == "I2(5)");
  CHECK(name("s3_std_quiver") == "I2(∞)");
  CHECK(name("kronecker2") == "I2(∞)");
  CHECK(name("s2_sign_quiver") == "A2");
  CHECK(name("s2_sign_a3") == "A3");
  CHECK(name("fib_h4_quiver") == "H4");
  CHECK(name("verlinde_edge_quiver:4") == "G2");
  CHECK(name("verlinde_typeD_quiver:2") == "B2");
  const auto h4 = classify_coxeter(coxeter_graph(*builtin_quiver("fib_h4_quiver")));
  CHECK(h4.components[0].type.coxeter_number() == 30u);
  CHECK(h4.components[0].type.reflection_count() == 60u);

  CoxeterGraph two{{"a", "b", "c"}, {{0, 1, CoxeterLabel(5)}}};
  CHECK(classify_coxeter(two).str() == "I2(5) ⊔ A1");
}

TEST_CASE("Coxeter numbers of the finite families", "[coxeter]") {
  CHECK(CoxeterType{"A", 4, 0}.coxeter_number() == 5u);
  CHECK(CoxeterType{"B", 3, 0}.coxeter_number() == 6u);
  CHECK(CoxeterType{"D", 5, 0}.coxeter_number() == 8u);
  CHECK(CoxeterType{"E", 6, 0}.coxeter_number() == 12u);
  CHECK(CoxeterType{"E", 7, 0}.coxeter_number() == 18u);
  CHECK(CoxeterType{"E", 8, 0}.coxeter_number() == 30u);
  CHECK(CoxeterType{"F", 4, 0}.coxeter_number() == 12u);
  CHECK(CoxeterType{"H", 3, 0}.coxeter_number() == 10u);
  CHECK(CoxeterType{"I", 2, 7}.coxeter_number() == 7u);
  CHECK_FALSE(infinite_type(3).coxeter_number());
}

TEST_CASE("admissible sink orderings", "[quiver]") {
  CHECK(admissible_sink_ordering(*builtin_quiver("fib_h4_quiver")) == std::vector<std::size_t>{3, 2, 1, 0});
  CHECK(admissible_sink_ordering(*builtin_quiver("fib_edge_quiver")) == std::vector<std::size_t>{1, 0});

  const auto ring = builtin_ring("vect");
  FusionQuiver cyc{{"a", "b", "c"}, {{0, 1, ring->one()}, {1, 2, ring->one()}, {2, 0, ring->one()}}, ring, nullptr};
  CHECK_FALSE(admissible_sink_ordering(cyc));
  FusionQuiver loop{{"a"}, {{0, 0, ring->one()}}, ring, nullptr};
  CHECK_FALSE(admissible_sink_ordering(loop));
  CHECK(loop.has_loop());

  // reflecting in the given order keeps each next vertex a sink
  for (const auto& key : oracle::builtin_quiver_keys()) {
    auto q = *builtin_quiver(key);
    const auto order = admissible_sink_ordering(q);
    REQUIRE(order);
    for (std::size_t v : *order) {
      CHECK(is_sink(q, v));
      q = reflect_quiver(q, v);
    }
    CHECK(q == *builtin_quiver(key));
  }
}

TEST_CASE("|Q| is invariant under reflection", "[quiver][property]") {
  for (const auto& key : oracle::builtin_quiver_keys()) {
    const auto q = *builtin_quiver(key);
    const auto base = weights(labeled_graph(q));
    for (std::size_t v = 0; v < q.size(); ++v) {
      if (!is_sink(q, v) && !is_source(q, v)) continue;
      const auto w = weights(labeled_graph(reflect_quiver(q, v)));
      REQUIRE(w.size() == base.size());
      for (const auto& [k, f] : base) CHECK_THAT(w.at(k), WithinAbs(f, 1e-9));
    }
  }
}

TEST_CASE("shape matcher agrees with positive definiteness on random trees", "[coxeter][property]") {
  std::mt19937_64 rng(424242);
  const std::vector<std::uint64_t> pool{3, 3, 3, 3, 3, 4, 5, 6, 0};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t finite = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 9;
    CoxeterGraph g;
    for (std::size_t i = 0; i < n; ++i) g.vertices.push_back(std::to_string(i));
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t parent = rng() % i;
      g.edges.push_back({parent, i, CoxeterLabel(pool[pick(rng)])});
    }
    const bool pd = positive_definite(g.gram());
    const auto type = match_coxeter_type(n, g.edges);
    INFO(n << " " << type.str());
    CHECK(pd == type.finite());
    finite += pd;
  }
  CHECK(finite > 20);
}

TEST_CASE("dihedral graphs for every m", "[coxeter]") {
  for (std::uint64_t m = 3; m <= 40; ++m) {
    CoxeterGraph g{{"a", "b"}, {{0, 1, CoxeterLabel(m)}}};
    const auto c = classify_coxeter(g);
    REQUIRE(c.components.size() == 1);
    CHECK(c.components[0].type.coxeter_number() == m);
  }
  CoxeterGraph inf{{"a", "b"}, {{0, 1, CoxeterLabel::infinity()}}};
  CHECK_FALSE(classify_coxeter(inf).finite());
}

TEST_CASE("labels that are not 2cos(pi/m) are rejected", "[quiver]") {
  LabeledGraph g{{"a", "b"}, {{0, 1, 1.9}}};
  try {
    classify_coxeter(g);
    FAIL("expected InvalidDimension");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidDimension);
  }
}
