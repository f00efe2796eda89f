#pragma once

// The unit group {f : f(0) != 0} under the Cauchy-type product.

#include "arconv/seq.hpp"

#include <cstdlib>
#include <numeric>

namespace arconv {

namespace detail {

/// f(0) as a rational, failing when it is zero or not a constant of the ring.
template <CoeffRing R>
Rat unit_constant(const TruncSeq<R>& f, std::string_view op) {
  auto c = ring_traits<R>::as_constant(f[0]);
  if (!c) throw Error(Errc::not_invertible_in_ring, std::string(op) + ": f(0) is not a constant");
  if (*c == 0) throw Error(Errc::not_a_unit, std::string(op) + ": f(0) = 0");
  return *c;
}

}  // namespace detail

/// g = f^{-1}: g(0) = 1/f(0), g(k) = -(1/f(0)) sum_{m=1}^{k} C(k,m) f(m) g(k-m).
template <CoeffRing R>
TruncSeq<R> inverse(const TruncSeq<R>& f) {
  const Rat inv0 = 1 / detail::unit_constant(f, "inverse");
  const std::size_t K = f.depth();
  auto C = binomials(K);
  TruncSeq<R> g(K);
  g[0] = ring_traits<R>::from_rat(inv0);
  for (std::size_t k = 1; k <= K; ++k) {
    R acc = ring_traits<R>::zero();
    for (std::size_t m = 1; m <= k; ++m) {
      R term = R(f[m] * g[k - m]);
      if (term == ring_traits<R>::zero()) continue;
      acc = R(acc + detail::times_int(term, (*C)(k, m)));
    }
    g[k] = ring_traits<R>::scale(Rat(-inv0), acc);
  }
  return g;
}

/// n-fold product; f^0 = e, f^{-n} = (f^n)^{-1}.
template <CoeffRing R>
TruncSeq<R> power_int(const TruncSeq<R>& f, long n) {
  if (n < 0) {
    detail::unit_constant(f, "power_int");
    return inverse(power_int(f, -n));
  }
  TruncSeq<R> result = identity_seq<R>(f.depth());
  TruncSeq<R> base = f;
  auto e = static_cast<unsigned long>(n);
  while (e > 0) {
    if (e & 1) result = bullet(result, base);
    e >>= 1;
    if (e > 0) base = bullet(base, base);
  }
  return result;
}

/// The unique g with g^m = f. g(0) must be an exact rational m-th root of f(0).
///
/// Each step sets g(k) = (f(k) - P_m(k)) / (m g(0)^{m-1}), where P_j(k) is the
/// k-th value of g^j computed with g(k) still zero. The partial powers P_j are
/// kept incrementally, so the cost is O(m K^2) ring operations.
template <CoeffRing R>
TruncSeq<R> mth_root(const TruncSeq<R>& f, long m) {
  if (m < 1) throw Error(Errc::invalid_argument, "mth_root needs m >= 1");
  const Rat f0 = detail::unit_constant(f, "mth_root");
  auto root0 = exact_root(f0, static_cast<unsigned long>(m));
  if (!root0)
    throw Error(Errc::root_not_representable,
                "f(0) = " + to_string(f0) + " has no rational root of order " + std::to_string(m));
  if (m == 1) return f;

  const std::size_t K = f.depth();
  auto C = binomials(K);
  const auto mm = static_cast<std::size_t>(m);
  const R zero = ring_traits<R>::zero();

  // powers[j](k) = (g^{j+1})(k), j = 0..m-1
  std::vector<TruncSeq<R>> powers(mm, TruncSeq<R>(K));
  // g0pow[j] = g(0)^j
  std::vector<Rat> g0pow(mm + 1);
  g0pow[0] = 1;
  for (std::size_t j = 1; j <= mm; ++j) g0pow[j] = g0pow[j - 1] * *root0;
  for (std::size_t j = 0; j < mm; ++j) powers[j][0] = ring_traits<R>::from_rat(g0pow[j + 1]);

  const Rat denom_inv = 1 / (Rat(m) * g0pow[mm - 1]);
  TruncSeq<R>& g = powers[0];
  for (std::size_t k = 1; k <= K; ++k) {
    // partial[j] = (g^{j+1})(k) with g(k) treated as zero; partial[0] = 0.
    std::vector<R> partial(mm, zero);
    for (std::size_t j = 1; j < mm; ++j) {
      R acc = zero;
      // i = k term uses powers[j-1](k), already partial; i = 0 term has g(k) = 0.
      for (std::size_t i = 1; i <= k; ++i) {
        const R& left = i == k ? partial[j - 1] : powers[j - 1][i];
        R term = R(left * g[k - i]);
        if (term == zero) continue;
        acc = R(acc + detail::times_int(term, (*C)(k, i)));
      }
      partial[j] = std::move(acc);
    }
    R gk = ring_traits<R>::scale(denom_inv, R(f[k] - partial[mm - 1]));
    // (g^{j+1})(k) is linear in g(k) with slope (j+1) g(0)^j.
    for (std::size_t j = 0; j < mm; ++j)
      powers[j][k] = R(partial[j] + ring_traits<R>::scale(Rat(g0pow[j] * static_cast<unsigned long>(j + 1)), gk));
  }
  return std::move(powers[0]);
}

/// f^{p/q}: the unique g with g^q = f^p.
template <CoeffRing R>
TruncSeq<R> power_rat(const TruncSeq<R>& f, long p, long q) {
  if (q < 1) throw Error(Errc::invalid_argument, "power_rat needs q >= 1");
  long d = std::gcd(std::labs(p), q);
  if (d == 0) d = 1;
  p /= d;
  q /= d;
  return mth_root(power_int(f, p), q);
}

struct Membership {
  bool in_A = false;  // f(0) != 0
  bool in_U = false;  // f(0) == 1
  bool in_C = false;  // f = f(0) e, f(0) != 0
  bool in_V = false;  // f(0) == 1, f(k) = f(1)^k
  bool in_W = false;  // f(0) == 1, f(1) == 0
};

template <CoeffRing R>
Membership membership(const TruncSeq<R>& f) {
  const R zero = ring_traits<R>::zero();
  const R one = ring_traits<R>::one();
  Membership out;
  out.in_A = !(f[0] == zero);
  out.in_U = f[0] == one;
  out.in_C = out.in_A;
  for (std::size_t k = 1; k <= f.depth() && out.in_C; ++k) out.in_C = f[k] == zero;
  if (out.in_U) {
    if (f.depth() >= 1) {
      out.in_V = make_eps(f[1], f.depth()) == f;
      out.in_W = f[1] == zero;
    } else {
      out.in_V = out.in_W = true;
    }
  }
  return out;
}

template <CoeffRing R>
struct Decomposition {
  TruncSeq<R> v;  // geometric factor, in V
  TruncSeq<R> w;  // in W
  TruncSeq<R> c;  // f(0) e, in C
};

/// f = v . w . c with c = f(0) e, v = eps(u(1)), w = eps(-u(1)) . u, u = f / f(0).
template <CoeffRing R>
Decomposition<R> decompose(const TruncSeq<R>& f) {
  const Rat f0 = detail::unit_constant(f, "decompose");
  const std::size_t K = f.depth();
  TruncSeq<R> u = scale(Rat(1 / f0), f);
  R u1 = K >= 1 ? u[1] : ring_traits<R>::zero();
  TruncSeq<R> v = make_eps(u1, K);
  TruncSeq<R> w = bullet(make_eps(R(-u1), K), u);
  TruncSeq<R> c = scale(ring_traits<R>::from_rat(f0), identity_seq<R>(K));
  return {std::move(v), std::move(w), std::move(c)};
}

}  // namespace arconv
