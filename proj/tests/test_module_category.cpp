#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "fqk/fqk.hpp"
#include "oracles.hpp"

using namespace fqk;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<std::shared_ptr<const ModuleCategory>> all_modules() {
  std::vector<std::shared_ptr<const ModuleCategory>> out;
  for (const auto& key : oracle::builtin_ring_keys()) out.push_back(builtin_module(key));
  for (const auto& key : oracle::builtin_module_keys()) out.push_back(builtin_module(key));
  return out;
}

std::size_t named(const ModuleCategory& M, const std::string& n) { return *M.index_of(n); }

}  // namespace

TEST_CASE("regular modules", "[module]") {
  const auto fib = builtin_module("fibonacci");
  CHECK(validate_module(*fib).ok());
  CHECK(fib->act(1) == IntMatrix{{0, 1}, {1, 1}});
  CHECK(fib->act(0) == IntMatrix::identity(2));

  const auto s2 = builtin_module("rep_s2");
  CHECK(s2->act(1) == IntMatrix{{0, 1}, {1, 0}});
  for (const auto& M : all_modules()) CHECK(M->act(M->ring().unit()) == IntMatrix::identity(M->size()));
}

TEST_CASE("type-D module at level 4 follows the stated rules", "[module]") {
  const auto D = builtin_module("verlinde_typeD:4");
  CHECK(D->size() == 4);
  CHECK(D->names() == std::vector<std::string>{"L0", "L1", "L2+", "L2-"});
  const auto rep = validate_module(*D);
  CHECK(rep.ok());
  CHECK(rep.warnings.empty());
  const auto& ring = D->ring();
  const auto v1 = element(ring, "V1");
  CHECK(act_on(*D, v1, D->simple(named(*D, "L0"))) == ModuleElement({0, 1, 0, 0}));
  CHECK(act_on(*D, v1, D->simple(named(*D, "L1"))) == ModuleElement({1, 0, 1, 1}));
  CHECK(act_on(*D, v1, D->simple(named(*D, "L2+"))) == ModuleElement({0, 1, 0, 0}));

  const auto D2 = builtin_module("verlinde_typeD:2");
  CHECK(D2->names() == std::vector<std::string>{"L0", "L1+", "L1-"});
  CHECK(act_on(*D2, element(D2->ring(), "V1"), D2->simple(0)) == ModuleElement({0, 1, 1}));

  CHECK_THROWS_AS(builtin_module("verlinde_typeD:3"), Error);
  CHECK_THROWS_AS(builtin_module("verlinde_typeD:0"), Error);
}

TEST_CASE("validate_module reports a corrupted action", "[module]") {
  const auto D = builtin_module("verlinde_typeD:4");
  auto act = D->actions();
  act[1](0, 1) = 2;
  ModuleCategory bad(D->ring_ptr(), D->names(), act);
  const auto rep = validate_module(bad);
  CHECK_FALSE(rep.ok());
  bool axiom = false;
  for (const auto& v : rep.violations) axiom = axiom || v.find("action axiom") != std::string::npos;
  CHECK(axiom);

  auto act2 = D->actions();
  act2[0](0, 0) = 0;
  CHECK_FALSE(validate_module(ModuleCategory(D->ring_ptr(), D->names(), act2)).ok());
}

TEST_CASE("decomposable modules only warn", "[module]") {
  const auto ring = builtin_ring("fibonacci");
  std::vector<IntMatrix> act;
  for (std::size_t i = 0; i < 2; ++i) {
    IntMatrix a(4, 4);
    const IntMatrix l = ring->left_multiplication(i);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) a(r, c) = a(r + 2, c + 2) = l(r, c);
    act.push_back(a);
  }
  ModuleCategory twice(ring, {"1", "tau", "1'", "tau'"}, act);
  const auto rep = validate_module(twice);
  CHECK(rep.ok());
  CHECK(rep.warnings.size() == 1);
}

TEST_CASE("act_on is linear and multiplicative", "[module][property]") {
  std::mt19937_64 rng(99);
  for (const auto& M : all_modules()) {
    const auto& ring = M->ring();
    const auto u0 = M->simple(0);
    CHECK(act_on(*M, ring.one(), u0) == u0);
    for (int t = 0; t < 10; ++t) {
      const auto x = oracle::random_signed<RingTag>(rng, ring.rank());
      const auto y = oracle::random_signed<RingTag>(rng, ring.rank());
      const auto u = oracle::random_signed<ModuleTag>(rng, M->size());
      CHECK(act_on(*M, multiply(ring, x, y), u) == act_on(*M, x, act_on(*M, y, u)));
      CHECK(act_on(*M, x + y, u) == act_on(*M, x, u) + act_on(*M, y, u));
    }
  }
  const auto fib = builtin_module("fibonacci");
  CHECK(act_on(*fib, fib->ring().simple(1), fib->simple(1)) == ModuleElement({1, 1}));
  CHECK_THROWS_AS(act_on(*fib, fib->ring().simple(1), ModuleElement(3)), Error);
}

TEST_CASE("nonzero_action_check", "[module]") {
  const auto fib = builtin_module("fibonacci");
  CHECK(nonzero_action_check(*fib, fib->ring().simple(1), fib->simple(0)));
  CHECK_FALSE(nonzero_action_check(*fib, fib->ring().zero(), fib->simple(1)));
  try {
    nonzero_action_check(*fib, RingElement({1, -1}), fib->simple(0));
    FAIL("expected SignIncoherentInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SignIncoherentInput);
  }

  // act[V4] on the type-D module computed here by the recursion from V1.
  const auto D = builtin_module("verlinde_typeD:4");
  const IntMatrix v1 = D->act(1);
  std::vector<IntMatrix> v{IntMatrix::identity(4), v1};
  for (int i = 1; i < 4; ++i) v.push_back(v1 * v[i] - v[i - 1]);
  CHECK(v[4] == D->act(4));
  const auto lp = D->simple(named(*D, "L2+"));
  CHECK(!v[4].apply(lp).is_zero());
  CHECK(nonzero_action_check(*D, element(D->ring(), "V4"), lp));

  // Prop: for sign-coherent nonzero x and nonzero object u, x.u != 0.
  std::mt19937_64 rng(5);
  for (const auto& M : all_modules())
    for (int t = 0; t < 20; ++t) {
      auto x = oracle::random_nonneg<RingTag>(rng, M->ring().rank(), 2);
      if (t % 2) x = -x;
      auto u = oracle::random_nonneg<ModuleTag>(rng, M->size(), 2);
      if (u.is_zero()) continue;
      CHECK(nonzero_action_check(*M, x, u) == !x.is_zero());
    }
}

TEST_CASE("action axiom and transpose law on every builtin module", "[module][property]") {
  for (const auto& M : all_modules()) {
    const auto& ring = M->ring();
    for (std::size_t i = 0; i < ring.rank(); ++i) {
      CHECK(M->act(ring.dual_index(i)) == M->act(i).transpose());
      for (std::size_t j = 0; j < ring.rank(); ++j) {
        IntMatrix rhs(M->size(), M->size());
        for (std::size_t k = 0; k < ring.rank(); ++k) rhs += ring.N(i, j, k) * M->act(k);
        CHECK(M->act(i) * M->act(j) == rhs);
      }
    }
  }
}

TEST_CASE("Perron eigenvalue of each action matrix is the FPdim", "[module][property]") {
  for (const auto& M : all_modules()) {
    const auto fp = fpdim(M->ring());
    for (std::size_t i = 0; i < M->ring().rank(); ++i)
      CHECK_THAT(perron(M->act(i)).value, WithinAbs(fp.dims[i], 1e-8));
    const auto mfp = module_fpdims(*M);
    for (std::size_t i = 0; i < M->ring().rank(); ++i) {
      const auto a = M->act(i).to_double();
      for (std::size_t l = 0; l < M->size(); ++l) {
        double s = 0.0;
        for (std::size_t k = 0; k < M->size(); ++k) s += a[l][k] * mfp[k];
        CHECK_THAT(s, WithinAbs(fp.dims[i] * mfp[l], 1e-8));
      }
    }
  }
  const IntMatrix x = sl3at5_x().matrix;
  CHECK_THAT(perron(x).value, WithinAbs(2.0 * std::cos(std::numbers::pi / 5.0), 1e-8));
}

TEST_CASE("McKay quivers", "[module]") {
  const auto fib = builtin_module("fibonacci");
  const auto q = mckay_quiver(*fib, fib->ring().simple(1), true);
  CHECK(q.size() == 4);
  CHECK(q.arrow_count() == 3);
  const auto rep = components(q);
  REQUIRE(rep.components.size() == 1);
  CHECK(rep.components[0].type.str() == "A4");
  // path (s,1) - (t,tau) - (s,tau) - (t,1)
  const auto w = q.undirected_weights();
  CHECK(w[0][3] == 1);
  CHECK(w[3][1] == 1);
  CHECK(w[1][2] == 1);

  const auto sl3 = make_sl3at5_module();
  const auto m = mckay_quiver(*sl3, sl3at5_x(), false);
  CHECK(m.size() == 6);
  CHECK(m.arrow_count() == 9);

  const auto s3 = builtin_module("rep_s3");
  const auto q3 = mckay_quiver(*s3, element(s3->ring(), "V"), true);
  CHECK(q3.size() == 6);
  CHECK(q3.arrow_count() == 5);
  std::vector<Arrow> expect{{0, 5, 1}, {1, 5, 1}, {2, 3, 1}, {2, 4, 1}, {2, 5, 1}};
  CHECK(q3.sorted_arrows() == expect);

  // non-separated quivers keep the diagonal as loops
  const auto loops = mckay_quiver(*s3, element(s3->ring(), "V"), false);
  CHECK(std::count_if(loops.arrows.begin(), loops.arrows.end(), [](const Arrow& a) { return a.source == a.target; }) == 1);
}

TEST_CASE("separated McKay quiver equals the unfolding of a -> b", "[module][property]") {
  for (const auto& M : all_modules()) {
    const auto& ring = M->ring();
    for (std::size_t i = 0; i < ring.rank(); ++i) {
      const auto q = two_vertex_quiver(M->ring_ptr(), M, ring.simple(i));
      const auto u = unfold(q, *M);
      const auto mk = mckay_quiver(*M, ring.simple(i), true);
      CHECK(u.quiver.sorted_arrows() == mk.sorted_arrows());
    }
  }
  const auto sl3 = make_sl3at5_module();
  const auto q = two_vertex_quiver(nullptr, sl3, sl3at5_x());
  CHECK(unfold(q, *sl3).quiver.sorted_arrows() == mckay_quiver(*sl3, sl3at5_x(), true).sorted_arrows());
}

TEST_CASE("action-only modules", "[module]") {
  const auto sl3 = make_sl3at5_module();
  CHECK_FALSE(sl3->has_ring());
  CHECK(validate_module(*sl3).ok());
  CHECK_THROWS_AS(sl3->ring(), Error);
  CHECK_THROWS_AS(ModuleCategory(nullptr, {"a"}, {IntMatrix::identity(1)}), Error);
  CHECK_THROWS_AS(ModuleCategory(builtin_ring("fibonacci"), {"a"}, {IntMatrix::identity(1)}), Error);
}
