#pragma once

#include "arconv/rat.hpp"

#include <string>
#include <vector>

namespace arconv {

/// Dense univariate polynomial over Rat in the indeterminate x.
/// coefficients()[i] multiplies x^i; the zero polynomial has no coefficients
/// and a nonzero polynomial never has a zero leading coefficient.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(const Rat& constant);
  explicit RatPoly(std::vector<Rat> coefficients);

  static RatPoly x();
  static RatPoly monomial(const Rat& c, std::size_t degree);
  /// (a*x + b)
  static RatPoly linear(const Rat& a, const Rat& b);

  const std::vector<Rat>& coefficients() const { return coeffs_; }
  Rat coeff(std::size_t i) const;
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rat constant_term() const { return coeff(0); }

  Rat operator()(const Rat& at) const;
  /// Composition p(q(x)).
  RatPoly operator()(const RatPoly& q) const;
  RatPoly derivative() const;
  RatPoly pow(unsigned long e) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rat& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rat& c) { return a *= c; }
  friend RatPoly operator*(const Rat& c, RatPoly a) { return a *= c; }
  friend RatPoly operator-(RatPoly a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable, highest degree first: "x^2 - x + 1/6".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

}  // namespace arconv
