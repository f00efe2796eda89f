#pragma once

#include "arconv/rat.hpp"
#include "arconv/ratpoly.hpp"

#include <concepts>
#include <optional>

namespace arconv {

/// Per-type operations the sequence code needs beyond the arithmetic operators.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_rat(const Rat& q) { return q; }
  static std::optional<Rat> as_constant(const Rat& a) { return a; }
  static Rat scale(const Rat& c, const Rat& a) { return c * a; }
  static Rat div_int(const Rat& a, long n) { return a / Rat(n); }
};

template <>
struct ring_traits<RatPoly> {
  static RatPoly zero() { return RatPoly(); }
  static RatPoly one() { return RatPoly(Rat(1)); }
  static RatPoly from_rat(const Rat& q) { return RatPoly(q); }
  static std::optional<Rat> as_constant(const RatPoly& a) {
    if (!a.is_constant()) return std::nullopt;
    return a.constant_term();
  }
  static RatPoly scale(const Rat& c, const RatPoly& a) { return a * c; }
  static RatPoly div_int(const RatPoly& a, long n) { return a * make_rat(1, n); }
};

/// Commutative ring with identity, scalar action of Rat and exact division by
/// nonzero integers. Rat and RatPoly are the two conforming instances.
template <class R>
concept CoeffRing = std::copyable<R> && requires(const R a, const R b, const Rat q, long n) {
  { ring_traits<R>::zero() } -> std::same_as<R>;
  { ring_traits<R>::one() } -> std::same_as<R>;
  { ring_traits<R>::from_rat(q) } -> std::same_as<R>;
  { ring_traits<R>::as_constant(a) } -> std::same_as<std::optional<Rat>>;
  { ring_traits<R>::scale(q, a) } -> std::same_as<R>;
  { ring_traits<R>::div_int(a, n) } -> std::same_as<R>;
  { R(a + b) };
  { R(a - b) };
  { R(-a) };
  { R(a * b) };
  { a == b } -> std::convertible_to<bool>;
};

static_assert(CoeffRing<Rat>);
static_assert(CoeffRing<RatPoly>);

}  // namespace arconv
