#pragma once

// Arithmetic functions on {1..N} under Dirichlet convolution.

#include "arconv/error.hpp"
#include "arconv/rat.hpp"

#include <utility>
#include <vector>

namespace arconv {

/// f(1), ..., f(N). Indexing is 1-based: f(k) for 1 <= k <= bound().
class DirSeq {
 public:
  explicit DirSeq(std::size_t bound);
  explicit DirSeq(std::vector<Rat> values);

  std::size_t bound() const { return values_.size(); }
  const Rat& operator()(std::size_t k) const { return values_[k - 1]; }
  Rat& operator()(std::size_t k) { return values_[k - 1]; }
  const std::vector<Rat>& values() const { return values_; }

  friend bool operator==(const DirSeq& a, const DirSeq& b) { return a.values_ == b.values_; }

 private:
  std::vector<Rat> values_;
};

/// Smallest-prime-factor table for 1..N (linear sieve) with cached factorizations.
class Sieve {
 public:
  explicit Sieve(std::size_t bound);

  std::size_t bound() const { return spf_.size() - 1; }
  /// (prime, exponent) pairs of k, ascending primes; empty for k = 1.
  const std::vector<std::pair<unsigned long, unsigned>>& factorize(std::size_t k) const { return factors_[k]; }
  int mobius(std::size_t k) const { return mu_[k]; }

 private:
  std::vector<unsigned long> spf_;
  std::vector<int> mu_;
  std::vector<std::vector<std::pair<unsigned long, unsigned>>> factors_;
};

DirSeq dirichlet_conv(const DirSeq& f, const DirSeq& g);
DirSeq mobius(std::size_t bound);
/// Unit recursion: g(1) = 1/f(1), g(k) = -(1/f(1)) sum_{d | k, d > 1} f(d) g(k/d).
DirSeq dirichlet_inverse(const DirSeq& f);

/// sum_{d | k} gamma(k) / (gamma(d) gamma(k/d)) f(d) g(k/d); gamma must be nowhere zero.
DirSeq gamma_twisted_conv(const DirSeq& f, const DirSeq& g, const DirSeq& gamma);

/// gamma(prod p^a) = prod a!, which turns the twisted product into the binomial convolution.
DirSeq prime_exponent_factorial(std::size_t bound);

DirSeq dirichlet_delta(std::size_t bound);
DirSeq dirichlet_ones(std::size_t bound);
/// k -> k^a for integer a (a may be negative).
DirSeq power_function(std::size_t bound, long a);

DirSeq pointwise_mul(const DirSeq& f, const DirSeq& g);
DirSeq pointwise_div(const DirSeq& f, const DirSeq& g);

/// f(ab) = f(a) f(b) for all a b <= bound, and f(1) = 1.
bool is_completely_multiplicative(const DirSeq& f);

/// The three evaluations of the coprime power sum sum_{i <= n, gcd(i,n) = 1} i^k.
struct CoprimePowerSum {
  Rat brute;           // direct enumeration
  Rat cauchy_side;     // via Moebius-Bernoulli numbers and the Cauchy-type product
  Rat dirichlet_side;  // via mu N_k * S(k) with S the power-sum polynomial
  bool agree() const { return brute == cauchy_side && brute == dirichlet_side; }
};

CoprimePowerSum coprime_power_sum_identity(unsigned long n, unsigned long k);

}  // namespace arconv
