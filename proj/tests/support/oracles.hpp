#pragma once

// Reference computations that share no code with the library: they use the
// closed forms or generating functions directly instead of the unit-group
// machinery.

#include "arconv/rat.hpp"

#include <vector>

namespace oracle {

using arconv::Int;
using arconv::Rat;

inline Rat fact(unsigned long n) {
  Int out = 1;
  for (unsigned long i = 2; i <= n; ++i) out *= i;
  return Rat(out);
}

inline Rat choose(unsigned long n, unsigned long k) {
  if (k > n) return Rat(0);
  Rat out = fact(n) / (fact(k) * fact(n - k));
  out.canonicalize();
  return out;
}

/// B(0..n) by the Akiyama-Tanigawa algorithm, sign of B(1) set to -1/2.
inline std::vector<Rat> bernoulli_numbers(std::size_t n) {
  std::vector<Rat> a(n + 1), out;
  for (std::size_t m = 0; m <= n; ++m) {
    a[m] = Rat(1, m + 1);
    for (std::size_t j = m; j >= 1; --j) {
      a[j - 1] = Rat(j) * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out.push_back(a[0]);
  }
  if (n >= 1) out[1] = -out[1];
  return out;
}

/// B_n(x) = sum_k C(n,k) B(k) x^(n-k), evaluated at a rational point.
inline Rat bernoulli_poly_at(std::size_t n, const Rat& x) {
  auto B = bernoulli_numbers(n);
  Rat acc(0), xp(1);
  // Horner-free: accumulate x^(n-k) from k = n downwards.
  for (std::size_t k = n + 1; k-- > 0;) {
    acc += choose(n, k) * B[k] * xp;
    xp *= x;
  }
  return acc;
}

/// Ordinary power series with exact coefficients, truncated at degree n.
using Series = std::vector<Rat>;

inline Series mul(const Series& a, const Series& b) {
  Series out(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// log(a) for a(0) = 1, via a' / a integrated termwise.
inline Series log1(const Series& a) {
  const std::size_t n = a.size();
  Series inv(n, Rat(0));  // 1 / a
  inv[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    Rat s(0);
    for (std::size_t j = 1; j <= k; ++j) s += a[j] * inv[k - j];
    inv[k] = -s;
  }
  Series da(n, Rat(0));
  for (std::size_t k = 1; k < n; ++k) da[k - 1] = a[k] * Rat(k);
  Series q = mul(da, inv);
  Series out(n, Rat(0));
  for (std::size_t k = 1; k < n; ++k) {
    out[k] = q[k - 1] / Rat(k);
    out[k].canonicalize();
  }
  return out;
}

/// exp(a) for a(0) = 0, via b' = a' b.
inline Series exp0(const Series& a) {
  const std::size_t n = a.size();
  Series out(n, Rat(0));
  out[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    Rat s(0);
    for (std::size_t j = 1; j <= k; ++j) s += Rat(j) * a[j] * out[k - j];
    out[k] = s / Rat(k);
    out[k].canonicalize();
  }
  return out;
}

/// k! [t^k] (t / (e^t - 1))^(p/q), k = 0..n: the Noerlund numbers of order p/q.
inline std::vector<Rat> norlund_egf(long p, long q, std::size_t n) {
  // t / (e^t - 1) = 1 / (sum_k t^k / (k+1)!)
  Series d(n + 1);
  for (std::size_t k = 0; k <= n; ++k) d[k] = 1 / fact(k + 1);
  Series l = log1(d);
  Rat alpha = -Rat(p) / Rat(q);
  alpha.canonicalize();
  for (auto& c : l) c *= alpha;
  Series e = exp0(l);
  std::vector<Rat> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = e[k] * fact(k);
  return out;
}

inline Rat power_sum(unsigned long n, unsigned long k) {
  Rat acc(0);
  for (unsigned long x = 1; x <= n; ++x) {
    Int t;
    mpz_ui_pow_ui(t.get_mpz_t(), x, k);
    acc += t;
  }
  return acc;
}

/// E_k(1) from the generating function 2 e^t / (e^t + 1) = 2 / (1 + e^{-t}).
inline std::vector<Rat> euler_at_one(std::size_t n) {
  Series d(n + 1);  // (1 + e^{-t}) / 2
  d[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) d[k] = (k % 2 == 0 ? Rat(1, 2) : Rat(-1, 2)) / fact(k);
  Series inv(n + 1, Rat(0));
  inv[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rat s(0);
    for (std::size_t j = 1; j <= k; ++j) s += d[j] * inv[k - j];
    inv[k] = -s;
  }
  std::vector<Rat> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = inv[k] * fact(k);
  return out;
}

}  // namespace oracle
