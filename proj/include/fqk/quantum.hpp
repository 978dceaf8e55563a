#ifndef FQK_QUANTUM_HPP
#define FQK_QUANTUM_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fqk/error.hpp"
#include "fqk/fusion_ring.hpp"
#include "fqk/integer.hpp"

namespace fqk {

enum class Color { D, DPrime };

inline Color other(Color c) { return c == Color::D ? Color::DPrime : Color::D; }

/// Element of Z<d, d'>. A word is a bit string, false = d, true = d'.
class NCPolynomial {
 public:
  using Word = std::vector<bool>;

  NCPolynomial() = default;
  static NCPolynomial constant(const Integer& c) {
    NCPolynomial p;
    if (c != 0) p.terms_[Word{}] = c;
    return p;
  }
  static NCPolynomial variable(Color c) {
    NCPolynomial p;
    p.terms_[Word{c == Color::DPrime}] = 1;
    return p;
  }

  const std::map<Word, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  NCPolynomial& operator+=(const NCPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NCPolynomial& operator-=(const NCPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator-(const NCPolynomial& a) { return NCPolynomial() - a; }

  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
    NCPolynomial p;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        p.add_term(w, ca * cb);
      }
    return p;
  }

  friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

  /// Longest words first, e.g. "dd′d - 2d".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Word, Integer>> order(terms_.begin(), terms_.end());
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
    std::string s;
    bool first = true;
    for (const auto& [w, c] : order) {
      Integer mag = c < 0 ? Integer(-c) : c;
      if (first)
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      first = false;
      if (mag != 1 || w.empty()) s += mag.str();
      for (bool b : w) s += b ? "d′" : "d";
    }
    return s;
  }

 private:
  void add_term(const Word& w, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Word, Integer> terms_;
};

/// Two-coloured quantum number pair ([k]_d, [k]_d') in any ring-like type,
/// given d, d', zero, one and a product. Negative k uses [-k] = -[k].
template <class T, class Mul>
std::pair<T, T> qnum_pair(long long k, const T& d, const T& dp, const T& zero, const T& one, Mul mul) {
  const long long n = k < 0 ? -k : k;
  T prev_d = zero, prev_dp = zero, cur_d = one, cur_dp = one;
  if (n == 0) return {zero, zero};
  for (long long i = 1; i < n; ++i) {
    T next_d = mul(d, cur_dp) - prev_d;
    T next_dp = mul(dp, cur_d) - prev_dp;
    prev_d = std::move(cur_d);
    prev_dp = std::move(cur_dp);
    cur_d = std::move(next_d);
    cur_dp = std::move(next_dp);
  }
  if (k < 0) return {zero - cur_d, zero - cur_dp};
  return {cur_d, cur_dp};
}

inline NCPolynomial qnum_free(long long k, Color color) {
  auto [a, b] = qnum_pair(k, NCPolynomial::variable(Color::D), NCPolynomial::variable(Color::DPrime),
                          NCPolynomial(), NCPolynomial::constant(1),
                          [](const NCPolynomial& x, const NCPolynomial& y) { return x * y; });
  return color == Color::D ? a : b;
}

/// Specialises a polynomial at d = x, d' = y in a fusion ring.
inline RingElement evaluate(const NCPolynomial& p, const FusionRing& ring, const RingElement& x,
                            const RingElement& y) {
  RingElement out = ring.zero();
  for (const auto& [w, c] : p.terms()) {
    RingElement term = ring.one();
    for (bool b : w) term = multiply(ring, term, b ? y : x);
    out += c * term;
  }
  return out;
}

/// [k] at d = [Pi], d' = dual([Pi]), by recursion in the ring.
inline std::pair<RingElement, RingElement> qnum_in_ring(const FusionRing& ring, const RingElement& pi,
                                                        long long k) {
  return qnum_pair(k, pi, dual(ring, pi), ring.zero(), ring.one(),
                   [&](const RingElement& a, const RingElement& b) { return multiply(ring, a, b); });
}

inline RingElement qnum_in_ring(const FusionRing& ring, const RingElement& pi, long long k, Color color) {
  auto [a, b] = qnum_in_ring(ring, pi, k);
  return color == Color::D ? a : b;
}

/// Same recursion with d acting as a matrix A and d' as its transpose.
inline std::pair<IntMatrix, IntMatrix> qnum_matrix(const IntMatrix& a, long long k) {
  const std::size_t n = a.rows();
  return qnum_pair(k, a, a.transpose(), IntMatrix(n, n), IntMatrix::identity(n),
                   [](const IntMatrix& x, const IntMatrix& y) { return x * y; });
}

/// [k]_q with q + 1/q = f, computed by the real recursion.
inline double qnum_real(long long k, double f) {
  const long long n = k < 0 ? -k : k;
  double prev = 0.0, cur = n == 0 ? 0.0 : 1.0;
  for (long long i = 1; i < n; ++i) {
    double next = f * cur - prev;
    prev = cur;
    cur = next;
  }
  return k < 0 ? -cur : cur;
}

enum class SignClass { Positive, Zero, Negative, Incoherent };

inline std::string_view to_string(SignClass s) {
  switch (s) {
    case SignClass::Positive: return "+";
    case SignClass::Zero: return "0";
    case SignClass::Negative: return "-";
    case SignClass::Incoherent: return "?";
  }
  return "?";
}

template <class Tag>
SignClass sign_class(const ClassVector<Tag>& x) {
  if (x.is_zero()) return SignClass::Zero;
  if (x.is_nonnegative()) return SignClass::Positive;
  if (x.is_nonpositive()) return SignClass::Negative;
  return SignClass::Incoherent;
}

struct SignCoherenceReport {
  std::optional<std::uint64_t> minimal_m;  // nullopt = infinity
  std::vector<SignClass> d;                // index k-1
  std::vector<SignClass> dprime;

  std::string pattern(Color c = Color::D) const {
    std::string s;
    const auto& v = c == Color::D ? d : dprime;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::string(to_string(v[i]));
    return s;
  }
};

/// Classifies [k]_d and [k]_d' for 1 <= k <= K and checks the zero and
/// sign-alternation pattern forced by the minimal vanishing index m.
inline SignCoherenceReport sign_coherence(const FusionRing& ring, const RingElement& pi, std::uint64_t K,
                                          double tol = 1e-8) {
  if (K < 1) throw Error(ErrorKind::InvalidParameter, "K must be at least 1");
  const FPVector fp = fpdim(ring);
  SignCoherenceReport rep;
  const RingElement dp = dual(ring, pi);
  RingElement prev_d = ring.zero(), prev_dp = ring.zero(), cur_d = ring.one(), cur_dp = ring.one();
  for (std::uint64_t k = 1; k <= K; ++k) {
    if (k > 1) {
      RingElement nd = multiply(ring, pi, cur_dp) - prev_d;
      RingElement ndp = multiply(ring, dp, cur_d) - prev_dp;
      prev_d = std::move(cur_d);
      prev_dp = std::move(cur_dp);
      cur_d = std::move(nd);
      cur_dp = std::move(ndp);
    }
    const SignClass sd = sign_class(cur_d), sdp = sign_class(cur_dp);
    rep.d.push_back(sd);
    rep.dprime.push_back(sdp);
    if (sd == SignClass::Incoherent || sdp == SignClass::Incoherent)
      throw Error(ErrorKind::SignCoherenceViolation, "[" + std::to_string(k) + "] is not sign-coherent");
    const bool zd = sd == SignClass::Zero, zdp = sdp == SignClass::Zero;
    const bool zf = std::abs(fpdim_of(fp, cur_d)) < tol;
    if (zd != zdp || zd != zf)
      throw Error(ErrorKind::SignCoherenceViolation,
                  "vanishing of [" + std::to_string(k) + "]_d, [" + std::to_string(k) +
                      "]_d' and its FPdim disagree");
    if (zd && !rep.minimal_m) rep.minimal_m = k;
  }
  for (std::uint64_t k = 1; k <= K; ++k) {
    SignClass expect = SignClass::Positive;
    if (rep.minimal_m) {
      const std::uint64_t m = *rep.minimal_m;
      if (k % m == 0)
        expect = SignClass::Zero;
      else if ((k / m) % 2 == 1)
        expect = SignClass::Negative;
    }
    if (rep.d[k - 1] != expect || rep.dprime[k - 1] != expect)
      throw Error(ErrorKind::SignCoherenceViolation,
                  "[" + std::to_string(k) + "] breaks the sign pattern of period " +
                      (rep.minimal_m ? std::to_string(*rep.minimal_m) : std::string("∞")));
  }
  return rep;
}

/// 2x2 matrix over a fusion ring; products multiply entries in order.
using RingMatrix2 = std::array<std::array<RingElement, 2>, 2>;

inline RingMatrix2 multiply(const FusionRing& ring, const RingMatrix2& a, const RingMatrix2& b) {
  RingMatrix2 p;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      p[i][j] = multiply(ring, a[i][0], b[0][j]) + multiply(ring, a[i][1], b[1][j]);
  return p;
}

/// (sigma_a sigma_b)^k by repeated multiplication, compared with the closed
/// form [[ [2k+1]_d', -[2k]_d' ], [ [2k]_d, -[2k-1]_d ]].
inline bool matrix_power_identity_check(const FusionRing& ring, const RingElement& pi, long long k) {
  if (k < 0) throw Error(ErrorKind::InvalidParameter, "k must be non-negative");
  const RingElement one = ring.one(), zero = ring.zero(), dp = dual(ring, pi);
  const RingMatrix2 sa{{{-one, dp}, {zero, one}}};
  const RingMatrix2 sb{{{one, zero}, {pi, -one}}};
  const RingMatrix2 step = multiply(ring, sa, sb);
  RingMatrix2 acc{{{one, zero}, {zero, one}}};
  for (long long i = 0; i < k; ++i) acc = multiply(ring, acc, step);
  const auto q2k1 = qnum_in_ring(ring, pi, 2 * k + 1);
  const auto q2k = qnum_in_ring(ring, pi, 2 * k);
  const auto q2km1 = qnum_in_ring(ring, pi, 2 * k - 1);
  const RingMatrix2 closed{{{q2k1.second, -q2k.second}, {q2k.first, -q2km1.first}}};
  return acc == closed;
}

}  // namespace fqk

#endif  // FQK_QUANTUM_HPP
