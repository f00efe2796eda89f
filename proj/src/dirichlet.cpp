#include "arconv/dirichlet.hpp"

#include "arconv/seq.hpp"
#include "arconv/special.hpp"

#include <numeric>
#include <string>

namespace arconv {

DirSeq::DirSeq(std::size_t bound) : values_(bound) {
  if (bound == 0) throw Error(Errc::invalid_argument, "a Dirichlet sequence needs bound >= 1");
}

DirSeq::DirSeq(std::vector<Rat> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(Errc::invalid_argument, "a Dirichlet sequence needs bound >= 1");
}

Sieve::Sieve(std::size_t bound) : spf_(bound + 1, 0), mu_(bound + 1, 0), factors_(bound + 1) {
  std::vector<unsigned long> primes;
  if (bound >= 1) mu_[1] = 1;
  for (std::size_t i = 2; i <= bound; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      mu_[i] = -1;
      primes.push_back(i);
    }
    for (unsigned long p : primes) {
      if (p > spf_[i] || i * p > bound) break;
      spf_[i * p] = p;
      mu_[i * p] = p == spf_[i] ? 0 : -mu_[i];
    }
  }
  for (std::size_t k = 2; k <= bound; ++k) {
    std::size_t rest = k;
    auto& out = factors_[k];
    while (rest > 1) {
      unsigned long p = spf_[rest];
      unsigned a = 0;
      while (rest % p == 0) {
        rest /= p;
        ++a;
      }
      out.emplace_back(p, a);
    }
  }
}

namespace {

void require_same_bound(const DirSeq& f, const DirSeq& g, const char* op) {
  if (f.bound() != g.bound())
    throw Error(Errc::depth_mismatch, std::string(op) + ": bounds " + std::to_string(f.bound()) + " and " +
                                          std::to_string(g.bound()));
}

}  // namespace

DirSeq dirichlet_conv(const DirSeq& f, const DirSeq& g) {
  require_same_bound(f, g, "dirichlet_conv");
  const std::size_t N = f.bound();
  DirSeq out(N);
  for (std::size_t d = 1; d <= N; ++d) {
    if (f(d) == 0) continue;
    for (std::size_t e = 1; d * e <= N; ++e) out(d * e) += f(d) * g(e);
  }
  return out;
}

DirSeq mobius(std::size_t bound) {
  Sieve sieve(bound);
  DirSeq out(bound);
  for (std::size_t k = 1; k <= bound; ++k) out(k) = sieve.mobius(k);
  return out;
}

DirSeq dirichlet_inverse(const DirSeq& f) {
  if (f(1) == 0) throw Error(Errc::not_a_unit, "dirichlet_inverse: f(1) = 0");
  const std::size_t N = f.bound();
  const Rat inv1 = 1 / f(1);
  DirSeq g(N);
  g(1) = inv1;
  for (std::size_t k = 2; k <= N; ++k) {
    Rat acc(0);
    for (std::size_t d = 2; d <= k; ++d)
      if (k % d == 0) acc += f(d) * g(k / d);
    g(k) = -inv1 * acc;
  }
  return g;
}

DirSeq gamma_twisted_conv(const DirSeq& f, const DirSeq& g, const DirSeq& gamma) {
  require_same_bound(f, g, "gamma_twisted_conv");
  require_same_bound(f, gamma, "gamma_twisted_conv");
  const std::size_t N = f.bound();
  for (std::size_t k = 1; k <= N; ++k)
    if (gamma(k) == 0) throw Error(Errc::invalid_argument, "gamma vanishes at " + std::to_string(k));
  DirSeq out(N);
  for (std::size_t d = 1; d <= N; ++d)
    for (std::size_t e = 1; d * e <= N; ++e) out(d * e) += gamma(d * e) / (gamma(d) * gamma(e)) * f(d) * g(e);
  return out;
}

DirSeq prime_exponent_factorial(std::size_t bound) {
  Sieve sieve(bound);
  DirSeq out(bound);
  for (std::size_t k = 1; k <= bound; ++k) {
    Int v = 1;
    for (auto [p, a] : sieve.factorize(k)) v *= factorial(a);
    out(k) = Rat(v);
  }
  return out;
}

DirSeq dirichlet_delta(std::size_t bound) {
  DirSeq out(bound);
  out(1) = 1;
  return out;
}

DirSeq dirichlet_ones(std::size_t bound) { return DirSeq(std::vector<Rat>(bound, Rat(1))); }

DirSeq power_function(std::size_t bound, long a) {
  DirSeq out(bound);
  for (std::size_t k = 1; k <= bound; ++k) out(k) = pow(Rat(static_cast<unsigned long>(k)), a);
  return out;
}

DirSeq pointwise_mul(const DirSeq& f, const DirSeq& g) {
  require_same_bound(f, g, "pointwise_mul");
  DirSeq out(f.bound());
  for (std::size_t k = 1; k <= f.bound(); ++k) out(k) = f(k) * g(k);
  return out;
}

DirSeq pointwise_div(const DirSeq& f, const DirSeq& g) {
  require_same_bound(f, g, "pointwise_div");
  DirSeq out(f.bound());
  for (std::size_t k = 1; k <= f.bound(); ++k) {
    if (g(k) == 0) throw Error(Errc::invalid_argument, "pointwise_div by zero at " + std::to_string(k));
    out(k) = f(k) / g(k);
  }
  return out;
}

bool is_completely_multiplicative(const DirSeq& f) {
  if (f(1) != 1) return false;
  const std::size_t N = f.bound();
  for (std::size_t a = 2; a <= N; ++a)
    for (std::size_t b = a; a * b <= N; ++b)
      if (f(a * b) != f(a) * f(b)) return false;
  return true;
}

CoprimePowerSum coprime_power_sum_identity(unsigned long n, unsigned long k) {
  if (n == 0) throw Error(Errc::invalid_argument, "coprime power sum needs n >= 1");
  CoprimePowerSum out;

  for (unsigned long i = 1; i <= n; ++i)
    if (std::gcd(i, n) == 1) out.brute += pow(Rat(i), static_cast<long>(k));

  // Cauchy side: (1/(k+1)) (M_{0,n} . (eps_n - eps_0))(k+1). This sums i^k over
  // reduced residues 0 <= i < n, which differs from 1 <= i <= n only at n = 1.
  const std::size_t depth = k + 1;
  Seq m0 = mobius_bernoulli_at(n, Rat(0), depth);
  Seq diff = sub(make_eps(Rat(n), depth), identity_seq<Rat>(depth));
  out.cauchy_side = bullet(m0, diff)[k + 1] / Rat(k + 1);
  if (n == 1) out.cauchy_side += k == 0 ? Rat(0) : Rat(1);

  // Dirichlet side: (mu N_k * S(k))(n), S(k)(m) = S_m(k) read off the power-sum polynomial.
  const RatPoly s_k = powersum_poly(k)[k];
  DirSeq left = pointwise_mul(mobius(n), power_function(n, static_cast<long>(k)));
  DirSeq right(n);
  for (std::size_t m = 1; m <= n; ++m) right(m) = s_k(Rat(m));
  out.dirichlet_side = dirichlet_conv(left, right)(n);
  return out;
}

}  // namespace arconv
