#pragma once

// Bernoulli, Euler, power-sum, Noerlund and Moebius-Bernoulli families.

#include "arconv/seq.hpp"

namespace arconv {

/// B(0..K) as the inverse of xi1 under the Cauchy-type product.
Seq bernoulli(std::size_t depth);

/// Entry k is the Bernoulli polynomial B_k(x) = (B . eps_x)(k).
PolySeq bernoulli_poly(std::size_t depth);

struct BernoulliFamily {
  Seq numbers;
  PolySeq polys;
};
BernoulliFamily bernoulli_family(std::size_t depth);

/// Closed form for the n-th inverse power of the Bernoulli-polynomial sequence:
///   (k!/(k+n)!) sum_j C(n,j) (-1)^(n-j) (j - n x)^(k+n).
PolySeq ber_inv_pow(long n, std::size_t depth);

/// E_k(1), obtained as 2 (e + nu)^{-1}.
Seq euler1(std::size_t depth);

/// E_k(x) from the generating function 2 e^{xt} / (e^t + 1), i.e. 2 eps_x . (I + e)^{-1}.
PolySeq euler_poly(std::size_t depth);

/// sigma_x(n) with (n+1) sigma_x(n) = B_{n+1}(x+1) - B_{n+1}, n = 0..K.
/// At a nonnegative integer x = N this is sum_{i=0}^{N} i^n with 0^0 = 1.
PolySeq sigma(std::size_t depth);

/// sum_{x=1}^{n} x^k, computed directly. Empty sum for n = 0; the k = 0 sum is n.
Rat power_sum_bruteforce(unsigned long n, unsigned long k);

/// Entry k: sum_m C(k,m) B(m) ((n+1)^(k+1-m) - 1)/(k+1-m).
Seq faulhaber(unsigned long n, std::size_t depth);

/// The power-sum polynomials S_x = B . xi_{x+1,1} - e.
PolySeq powersum_poly(std::size_t depth);

/// B^{p/q}, the rational power of the Bernoulli numbers in the unit group.
Seq norlund(long p, long q, std::size_t depth);

/// Entry k: M_k(x, n) = sum_{d | n} mu(d) d^(k-1) B_k(x/d).
PolySeq mobius_bernoulli(unsigned long n, std::size_t depth);

/// M_k(x, n) evaluated at a rational x.
Seq mobius_bernoulli_at(unsigned long n, const Rat& x, std::size_t depth);

}  // namespace arconv
