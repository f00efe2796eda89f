#pragma once

// Hand-rolled generators for property tests.

#include "arconv/dirichlet.hpp"
#include "arconv/seq.hpp"

#include <random>

namespace gen {

using arconv::DirSeq;
using arconv::PolySeq;
using arconv::Rat;
using arconv::RatPoly;
using arconv::Seq;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// Numerator in [-9, 9], denominator in [1, 9].
  Rat rat() { return arconv::make_rat(integer(-9, 9), integer(1, 9)); }

  Rat nonzero_rat() {
    for (;;) {
      Rat r = rat();
      if (r != 0) return r;
    }
  }

  Seq seq(std::size_t depth) {
    Seq f(depth);
    for (std::size_t k = 0; k <= depth; ++k) f[k] = rat();
    return f;
  }

  /// f(0) != 0.
  Seq unit(std::size_t depth) {
    Seq f = seq(depth);
    f[0] = nonzero_rat();
    return f;
  }

  /// f(0) == 1.
  Seq normalized_unit(std::size_t depth) {
    Seq f = seq(depth);
    f[0] = 1;
    return f;
  }

  RatPoly poly(long max_degree) {
    std::vector<Rat> c(static_cast<std::size_t>(integer(0, max_degree) + 1));
    for (auto& x : c) x = rat();
    return RatPoly(std::move(c));
  }

  PolySeq poly_seq(std::size_t depth, long max_degree) {
    PolySeq f(depth);
    for (std::size_t k = 0; k <= depth; ++k) f[k] = poly(max_degree);
    return f;
  }

  DirSeq dirseq(std::size_t bound, bool unit = false) {
    DirSeq f(bound);
    for (std::size_t k = 1; k <= bound; ++k) f(k) = rat();
    if (unit) f(1) = nonzero_rat();
    return f;
  }

  std::size_t depth(std::size_t lo, std::size_t hi) {
    return static_cast<std::size_t>(integer(static_cast<long>(lo), static_cast<long>(hi)));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
