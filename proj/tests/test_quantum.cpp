#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "fqk/fqk.hpp"
#include "oracles.hpp"

using namespace fqk;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

struct Labelled {
  std::string key;
  std::shared_ptr<const FusionRing> ring;
  RingElement pi;
};

std::vector<Labelled> all_simples() {
  std::vector<Labelled> out;
  for (const auto& key : oracle::builtin_ring_keys()) {
    const auto ring = builtin_ring(key);
    for (std::size_t i = 0; i < ring->rank(); ++i) out.push_back({key + "/" + ring->names()[i], ring, ring->simple(i)});
  }
  return out;
}

}  // namespace

TEST_CASE("free two-coloured quantum numbers", "[quantum]") {
  CHECK(qnum_free(0, Color::D).str() == "0");
  CHECK(qnum_free(1, Color::D).str() == "1");
  CHECK(qnum_free(2, Color::D).str() == "d");
  CHECK(qnum_free(2, Color::DPrime).str() == "d′");
  CHECK(qnum_free(3, Color::D).str() == "dd′ - 1");
  CHECK(qnum_free(3, Color::DPrime).str() == "d′d - 1");
  CHECK(qnum_free(4, Color::D).str() == "dd′d - 2d");
  CHECK(qnum_free(-3, Color::D).str() == "-dd′ + 1");
}

TEST_CASE("colour swap exchanges [k]_d and [k]_d'", "[quantum][property]") {
  for (long long k = 1; k <= 12; ++k) {
    const auto a = qnum_free(k, Color::D), b = qnum_free(k, Color::DPrime);
    for (const auto& [w, c] : a.terms()) {
      NCPolynomial::Word flipped(w.begin(), w.end());
      flipped.flip();
      CHECK(b.coefficient(flipped) == c);
    }
    CHECK(a.terms().size() == b.terms().size());
    // leading word alternates and has length k-1
    CHECK(a.coefficient(NCPolynomial::Word(k - 1, false)) == (k <= 2 ? 1 : 0));
  }
}

TEST_CASE("quantum numbers of tau in the Fibonacci ring", "[quantum]") {
  const auto fib = builtin_ring("fibonacci");
  const auto tau = element(*fib, "tau");
  CHECK(qnum_in_ring(*fib, tau, 1, Color::D) == fib->one());
  CHECK(qnum_in_ring(*fib, tau, 2, Color::D) == tau);
  CHECK(qnum_in_ring(*fib, tau, 3, Color::D) == tau);
  CHECK(qnum_in_ring(*fib, tau, 4, Color::D) == fib->one());
  CHECK(qnum_in_ring(*fib, tau, 5, Color::D).is_zero());
  CHECK(qnum_in_ring(*fib, tau, 6, Color::D) == -fib->one());

  const auto rep = sign_coherence(*fib, tau, 12);
  CHECK(rep.minimal_m == 5u);
  CHECK(rep.pattern() == "+ + + + 0 - - - - 0 + +");
  CHECK(rep.pattern(Color::DPrime) == rep.pattern());
}

TEST_CASE("sign coherence of the other examples", "[quantum]") {
  const auto s3 = builtin_ring("rep_s3");
  const auto r3 = sign_coherence(*s3, element(*s3, "V"), 20);
  CHECK_FALSE(r3.minimal_m);
  CHECK(r3.pattern().find_first_not_of("+ ") == std::string::npos);
  for (long long k = 1; k <= 6; ++k) CHECK(fpdim_of(*s3, qnum_in_ring(*s3, element(*s3, "V"), k, Color::D)) == Catch::Approx(k));

  CHECK(sign_coherence(*s3, s3->zero(), 6).minimal_m == 2u);
  CHECK(sign_coherence(*s3, s3->one(), 9).minimal_m == 3u);
  CHECK(sign_coherence(*builtin_ring("rep_s2"), element(*builtin_ring("rep_s2"), "S"), 9).minimal_m == 3u);

  try {
    sign_coherence(*builtin_ring("fibonacci"), RingElement({-1, 1}), 4);
    FAIL("expected SignCoherenceViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SignCoherenceViolation);
  }
  CHECK_THROWS_AS(sign_coherence(*s3, s3->one(), 0), Error);
}

TEST_CASE("FPdim of [k] is the real quantum integer", "[quantum][oracle]") {
  for (const auto& s : all_simples()) {
    INFO(s.key);
    const double f = fpdim_of(*s.ring, s.pi);
    for (long long k = 1; k <= 20; ++k) {
      const auto [a, b] = qnum_in_ring(*s.ring, s.pi, k);
      const double expect = oracle::quantum_integer(k, f);
      CHECK_THAT(fpdim_of(*s.ring, a), WithinAbs(expect, 1e-7 * std::max(1.0, std::abs(expect))));
      CHECK_THAT(fpdim_of(*s.ring, b), WithinAbs(expect, 1e-7 * std::max(1.0, std::abs(expect))));
      CHECK_THAT(qnum_real(k, f), WithinAbs(expect, 1e-7 * std::max(1.0, std::abs(expect))));
    }
  }
}

TEST_CASE("evaluating the free polynomial agrees with the ring recursion", "[quantum][property]") {
  for (const auto& s : all_simples())
    for (long long k = 0; k <= 8; ++k) {
      const auto [a, b] = qnum_in_ring(*s.ring, s.pi, k);
      const auto dp = dual(*s.ring, s.pi);
      CHECK(evaluate(qnum_free(k, Color::D), *s.ring, s.pi, dp) == a);
      CHECK(evaluate(qnum_free(k, Color::DPrime), *s.ring, s.pi, dp) == b);
      CHECK(dual(*s.ring, a) == evaluate(qnum_free(k, k % 2 ? Color::D : Color::DPrime), *s.ring, s.pi, dp));
    }
}

TEST_CASE("objects of FPdim at least 2 have positive quantum numbers", "[quantum][property]") {
  for (const auto& s : all_simples()) {
    if (fpdim_of(*s.ring, s.pi) < 2.0 - 1e-9) continue;
    INFO(s.key);
    const auto rep = sign_coherence(*s.ring, s.pi, 15);
    CHECK_FALSE(rep.minimal_m);
  }
  const auto vect = builtin_ring("vect");
  CHECK_FALSE(sign_coherence(*vect, Integer(2) * vect->one(), 10).minimal_m);
  CHECK_FALSE(sign_coherence(*vect, Integer(3) * vect->one(), 10).minimal_m);
}

TEST_CASE("minimal vanishing index matches the angle label", "[quantum][property]") {
  for (const auto& s : all_simples()) {
    INFO(s.key);
    const auto rep = sign_coherence(*s.ring, s.pi, 30);
    const CoxeterLabel m = angle_label(fpdim_of(*s.ring, s.pi));
    if (m.is_infinite())
      CHECK_FALSE(rep.minimal_m);
    else
      CHECK(rep.minimal_m == m.value());
  }
}

TEST_CASE("matrix powers of sigma_a sigma_b have the closed form", "[quantum][property]") {
  for (const auto& s : all_simples())
    for (long long k = 0; k <= 10; ++k) CHECK(matrix_power_identity_check(*s.ring, s.pi, k));
  CHECK_THROWS_AS(matrix_power_identity_check(*builtin_ring("vect"), builtin_ring("vect")->one(), -1), Error);
}

TEST_CASE("matrix quantum numbers act like ring quantum numbers", "[quantum][property]") {
  for (const auto& s : all_simples()) {
    const ModuleCategory M = regular_module(s.ring);
    const IntMatrix a = M.action_of(s.pi);
    for (long long k = 0; k <= 10; ++k) {
      const auto [qa, qb] = qnum_matrix(a, k);
      const auto [ra, rb] = qnum_in_ring(*s.ring, s.pi, k);
      CHECK(qa == M.action_of(ra));
      CHECK(qb == M.action_of(rb));
    }
  }
  const auto x = sl3at5_x().matrix;
  CHECK_FALSE(qnum_matrix(x, 4).first.is_zero());
  CHECK(qnum_matrix(x, 5).first.is_zero());
  CHECK(qnum_matrix(x, 5).second.is_zero());
}
