#pragma once

// Truncated arithmetic functions f(0..K) and the products acting on them.

#include "arconv/binomial.hpp"
#include "arconv/error.hpp"
#include "arconv/ring.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arconv {

/// f(0), ..., f(K) over a coefficient ring. Always holds depth()+1 values.
template <CoeffRing R>
class TruncSeq {
 public:
  using value_type = R;

  /// The zero sequence of the given depth.
  explicit TruncSeq(std::size_t depth) : values_(depth + 1, ring_traits<R>::zero()) {}
  explicit TruncSeq(std::vector<R> values) : values_(std::move(values)) {
    if (values_.empty()) throw Error(Errc::invalid_argument, "a sequence needs at least f(0)");
  }

  std::size_t depth() const { return values_.size() - 1; }
  std::size_t size() const { return values_.size(); }

  const R& operator[](std::size_t k) const { return values_[k]; }
  R& operator[](std::size_t k) { return values_[k]; }

  const std::vector<R>& values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const TruncSeq& a, const TruncSeq& b) { return a.values_ == b.values_; }

 private:
  std::vector<R> values_;
};

using Seq = TruncSeq<Rat>;
using PolySeq = TruncSeq<RatPoly>;

enum class Named { e, I, nu, xi1, fact };

/// Accepts "e", "I" (or "i"), "nu", "xi1", "fact".
Named parse_named(std::string_view name);

namespace detail {

template <CoeffRing R>
void require_same_depth(const TruncSeq<R>& f, const TruncSeq<R>& g, std::string_view op) {
  if (f.depth() != g.depth())
    throw Error(Errc::depth_mismatch, std::string(op) + ": depths " + std::to_string(f.depth()) +
                                          " and " + std::to_string(g.depth()));
}

template <CoeffRing R>
R times_int(const R& a, const Int& c) {
  return ring_traits<R>::scale(Rat(c), a);
}

}  // namespace detail

// ---- construction -------------------------------------------------------

template <CoeffRing R = Rat>
TruncSeq<R> make_named(Named name, std::size_t depth) {
  using T = ring_traits<R>;
  TruncSeq<R> out(depth);
  for (std::size_t k = 0; k <= depth; ++k) {
    switch (name) {
      case Named::e: out[k] = k == 0 ? T::one() : T::zero(); break;
      case Named::I: out[k] = T::one(); break;
      case Named::nu: out[k] = k % 2 == 0 ? T::one() : R(-T::one()); break;
      case Named::xi1: out[k] = T::from_rat(make_rat(1, static_cast<long>(k + 1))); break;
      case Named::fact: out[k] = T::from_rat(Rat(factorial(k))); break;
    }
  }
  return out;
}

template <CoeffRing R = Rat>
TruncSeq<R> identity_seq(std::size_t depth) {
  return make_named<R>(Named::e, depth);
}

/// eps_x(k) = x^k with eps_x(0) = 1, so eps_0 = e.
template <CoeffRing R>
TruncSeq<R> make_eps(const R& x, std::size_t depth) {
  TruncSeq<R> out(depth);
  out[0] = ring_traits<R>::one();
  for (std::size_t k = 1; k <= depth; ++k) out[k] = R(out[k - 1] * x);
  return out;
}

/// xi_{x,m}(k) = x^(k+m)/(k+m) for x != 0, and e for x == 0.
template <CoeffRing R>
TruncSeq<R> make_xi(const R& x, long m, std::size_t depth) {
  if (m < 1) throw Error(Errc::invalid_argument, "xi needs m >= 1");
  if (x == ring_traits<R>::zero()) return identity_seq<R>(depth);
  R power = ring_traits<R>::one();
  for (long i = 0; i < m; ++i) power = R(power * x);
  TruncSeq<R> out(depth);
  for (std::size_t k = 0; k <= depth; ++k) {
    out[k] = ring_traits<R>::div_int(power, static_cast<long>(k) + m);
    power = R(power * x);
  }
  return out;
}

/// Embeds a rational sequence into a polynomial one (constant coefficients).
inline PolySeq lift(const Seq& f) {
  std::vector<RatPoly> v;
  v.reserve(f.size());
  for (const auto& c : f) v.emplace_back(c);
  return PolySeq(std::move(v));
}

/// Pointwise evaluation of every polynomial entry at x.
inline Seq evaluate(const PolySeq& f, const Rat& x) {
  std::vector<Rat> v;
  v.reserve(f.size());
  for (const auto& p : f) v.push_back(p(x));
  return Seq(std::move(v));
}

/// Pointwise substitution x -> q(x).
inline PolySeq compose(const PolySeq& f, const RatPoly& q) {
  std::vector<RatPoly> v;
  v.reserve(f.size());
  for (const auto& p : f) v.push_back(p(q));
  return PolySeq(std::move(v));
}

template <CoeffRing R>
TruncSeq<R> truncate(const TruncSeq<R>& f, std::size_t depth) {
  if (depth > f.depth())
    throw Error(Errc::invalid_argument, "cannot extend a sequence from depth " + std::to_string(f.depth()) +
                                            " to " + std::to_string(depth));
  return TruncSeq<R>(std::vector<R>(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(depth + 1)));
}

// ---- pointwise ----------------------------------------------------------

template <CoeffRing R>
TruncSeq<R> add(const TruncSeq<R>& f, const TruncSeq<R>& g) {
  detail::require_same_depth(f, g, "add");
  TruncSeq<R> out(f.depth());
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = R(f[k] + g[k]);
  return out;
}

template <CoeffRing R>
TruncSeq<R> sub(const TruncSeq<R>& f, const TruncSeq<R>& g) {
  detail::require_same_depth(f, g, "sub");
  TruncSeq<R> out(f.depth());
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = R(f[k] - g[k]);
  return out;
}

template <CoeffRing R>
TruncSeq<R> scale(const R& c, const TruncSeq<R>& f) {
  TruncSeq<R> out(f.depth());
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = R(c * f[k]);
  return out;
}

template <CoeffRing R>
TruncSeq<R> scale(const Rat& c, const TruncSeq<R>& f)
  requires(!std::same_as<R, Rat>)
{
  TruncSeq<R> out(f.depth());
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = ring_traits<R>::scale(c, f[k]);
  return out;
}

template <CoeffRing R>
TruncSeq<R> pointwise_mul(const TruncSeq<R>& f, const TruncSeq<R>& g) {
  detail::require_same_depth(f, g, "pointwise_mul");
  TruncSeq<R> out(f.depth());
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = R(f[k] * g[k]);
  return out;
}

/// Pointwise quotient by a sequence of nonzero rationals (used for f/xi, f/gamma).
template <CoeffRing R>
TruncSeq<R> pointwise_div(const TruncSeq<R>& f, const Seq& g) {
  if (f.depth() != g.depth()) throw Error(Errc::depth_mismatch, "pointwise_div");
  TruncSeq<R> out(f.depth());
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (g[k] == 0) throw Error(Errc::invalid_argument, "pointwise_div by zero at " + std::to_string(k));
    out[k] = ring_traits<R>::scale(Rat(1 / g[k]), f[k]);
  }
  return out;
}

// ---- products -----------------------------------------------------------

/// Cauchy-type (binomial) product: sum_m C(k,m) f(m) g(k-m).
template <CoeffRing R>
TruncSeq<R> bullet(const TruncSeq<R>& f, const TruncSeq<R>& g) {
  detail::require_same_depth(f, g, "bullet");
  const std::size_t K = f.depth();
  auto C = binomials(K);
  TruncSeq<R> out(K);
  for (std::size_t k = 0; k <= K; ++k) {
    R acc = ring_traits<R>::zero();
    for (std::size_t m = 0; m <= k; ++m) {
      R term = R(f[m] * g[k - m]);
      if (term == ring_traits<R>::zero()) continue;
      acc = R(acc + detail::times_int(term, (*C)(k, m)));
    }
    out[k] = std::move(acc);
  }
  return out;
}

/// Unweighted Cauchy product: sum_m f(m) g(k-m).
template <CoeffRing R>
TruncSeq<R> cauchy(const TruncSeq<R>& f, const TruncSeq<R>& g) {
  detail::require_same_depth(f, g, "cauchy");
  const std::size_t K = f.depth();
  TruncSeq<R> out(K);
  for (std::size_t k = 0; k <= K; ++k) {
    R acc = ring_traits<R>::zero();
    for (std::size_t m = 0; m <= k; ++m) acc = R(acc + f[m] * g[k - m]);
    out[k] = std::move(acc);
  }
  return out;
}

/// F = f . I, i.e. F(k) = sum_m C(k,m) f(m).
template <CoeffRing R>
TruncSeq<R> binomial_transform(const TruncSeq<R>& f) {
  return bullet(f, make_named<R>(Named::I, f.depth()));
}

/// Inverse of binomial_transform: f = F . nu.
template <CoeffRing R>
TruncSeq<R> binomial_invert(const TruncSeq<R>& F) {
  return bullet(F, make_named<R>(Named::nu, F.depth()));
}

/// g(n) = f(n + m), depth reduced by m.
template <CoeffRing R>
TruncSeq<R> compose_shift(const TruncSeq<R>& f, std::size_t m) {
  if (m > f.depth())
    throw Error(Errc::invalid_argument,
                "shift " + std::to_string(m) + " exceeds depth " + std::to_string(f.depth()));
  return TruncSeq<R>(std::vector<R>(f.begin() + static_cast<std::ptrdiff_t>(m), f.end()));
}

/// (f (x)_m g)(n) = sum_i C(n,i) f(m+i) g(m+n-i); output depth is depth - m.
template <CoeffRing R>
TruncSeq<R> psi_product(const TruncSeq<R>& f, const TruncSeq<R>& g, std::size_t m) {
  detail::require_same_depth(f, g, "psi_product");
  if (m > f.depth())
    throw Error(Errc::invalid_argument, "psi_product: shift " + std::to_string(m) + " exceeds depth " +
                                            std::to_string(f.depth()));
  return bullet(compose_shift(f, m), compose_shift(g, m));
}

/// Single value (f (x)_m g)(n); needs m + n <= depth.
template <CoeffRing R>
R psi_value(const TruncSeq<R>& f, const TruncSeq<R>& g, std::size_t m, std::size_t n) {
  detail::require_same_depth(f, g, "psi_value");
  if (m + n > f.depth())
    throw Error(Errc::invalid_argument, "psi_value: m + n = " + std::to_string(m + n) + " exceeds depth " +
                                            std::to_string(f.depth()));
  auto C = binomials(n);
  R acc = ring_traits<R>::zero();
  for (std::size_t i = 0; i <= n; ++i)
    acc = R(acc + detail::times_int(R(f[m + i] * g[m + n - i]), (*C)(n, i)));
  return acc;
}

/// Delta_f = I . f - nu f; zero exactly when f satisfies the symmetric identity.
template <CoeffRing R>
TruncSeq<R> deviation(const TruncSeq<R>& f) {
  auto I = make_named<R>(Named::I, f.depth());
  auto nu = make_named<R>(Named::nu, f.depth());
  return sub(bullet(I, f), pointwise_mul(nu, f));
}

}  // namespace arconv
