#include "arconv/special.hpp"

#include "arconv/dirichlet.hpp"
#include "arconv/units.hpp"

namespace arconv {

Seq bernoulli(std::size_t depth) { return inverse(make_named<Rat>(Named::xi1, depth)); }

PolySeq bernoulli_poly(std::size_t depth) {
  return bullet(lift(bernoulli(depth)), make_eps(RatPoly::x(), depth));
}

BernoulliFamily bernoulli_family(std::size_t depth) {
  Seq numbers = bernoulli(depth);
  PolySeq polys = bullet(lift(numbers), make_eps(RatPoly::x(), depth));
  return {std::move(numbers), std::move(polys)};
}

PolySeq ber_inv_pow(long n, std::size_t depth) {
  if (n < 1) throw Error(Errc::invalid_argument, "ber_inv_pow needs n >= 1");
  const auto un = static_cast<unsigned long>(n);
  std::vector<RatPoly> out;
  out.reserve(depth + 1);
  for (std::size_t k = 0; k <= depth; ++k) {
    RatPoly acc;
    for (unsigned long j = 0; j <= un; ++j) {
      RatPoly base = RatPoly::linear(Rat(-n), Rat(j));  // j - n x
      Rat c(binomial(un, j));
      if ((un - j) % 2 == 1) c = -c;
      acc += base.pow(k + un) * c;
    }
    out.push_back(acc * make_rat(factorial(k), factorial(k + un)));
  }
  return PolySeq(std::move(out));
}

Seq euler1(std::size_t depth) {
  Seq e_plus_nu = add(make_named<Rat>(Named::e, depth), make_named<Rat>(Named::nu, depth));
  return scale(Rat(2), inverse(e_plus_nu));
}

PolySeq euler_poly(std::size_t depth) {
  Seq i_plus_e = add(make_named<Rat>(Named::I, depth), make_named<Rat>(Named::e, depth));
  PolySeq eps_x = make_eps(RatPoly::x(), depth);
  return scale(Rat(2), bullet(eps_x, lift(inverse(i_plus_e))));
}

PolySeq sigma(std::size_t depth) {
  BernoulliFamily fam = bernoulli_family(depth + 1);
  PolySeq shifted = compose(fam.polys, RatPoly::linear(Rat(1), Rat(1)));  // B_k(x + 1)
  std::vector<RatPoly> out;
  out.reserve(depth + 1);
  for (std::size_t n = 0; n <= depth; ++n)
    out.push_back((shifted[n + 1] - RatPoly(fam.numbers[n + 1])) * make_rat(1, static_cast<long>(n + 1)));
  return PolySeq(std::move(out));
}

Rat power_sum_bruteforce(unsigned long n, unsigned long k) {
  Int acc = 0;
  Int term;
  for (unsigned long x = 1; x <= n; ++x) {
    mpz_ui_pow_ui(term.get_mpz_t(), x, k);
    acc += term;
  }
  return Rat(acc);
}

Seq faulhaber(unsigned long n, std::size_t depth) {
  Seq B = bernoulli(depth);
  auto C = binomials(depth);
  const Rat base(n + 1);
  Seq out(depth);
  for (std::size_t k = 0; k <= depth; ++k) {
    Rat acc(0);
    for (std::size_t m = 0; m <= k; ++m) {
      if (B[m] == 0) continue;
      const long e = static_cast<long>(k + 1 - m);
      acc += Rat((*C)(k, m)) * B[m] * (pow(base, e) - 1) / Rat(e);
    }
    out[k] = acc;
  }
  return out;
}

PolySeq powersum_poly(std::size_t depth) {
  PolySeq xi = make_xi(RatPoly::linear(Rat(1), Rat(1)), 1, depth);  // xi_{x+1,1}
  return sub(bullet(lift(bernoulli(depth)), xi), identity_seq<RatPoly>(depth));
}

Seq norlund(long p, long q, std::size_t depth) {
  if (q < 1) throw Error(Errc::invalid_argument, "norlund needs q >= 1");
  return power_rat(bernoulli(depth), p, q);
}

PolySeq mobius_bernoulli(unsigned long n, std::size_t depth) {
  if (n < 1) throw Error(Errc::invalid_argument, "mobius_bernoulli needs n >= 1");
  Sieve sieve(n);
  PolySeq bx = bernoulli_poly(depth);
  std::vector<RatPoly> out(depth + 1);
  for (unsigned long d = 1; d <= n; ++d) {
    if (n % d != 0 || sieve.mobius(d) == 0) continue;
    PolySeq scaled = compose(bx, RatPoly::linear(make_rat(1, static_cast<long>(d)), Rat(0)));  // B_k(x/d)
    for (std::size_t k = 0; k <= depth; ++k) {
      Rat w = pow(Rat(d), static_cast<long>(k) - 1) * sieve.mobius(d);
      out[k] += scaled[k] * w;
    }
  }
  return PolySeq(std::move(out));
}

Seq mobius_bernoulli_at(unsigned long n, const Rat& x, std::size_t depth) {
  return evaluate(mobius_bernoulli(n, depth), x);
}

}  // namespace arconv
