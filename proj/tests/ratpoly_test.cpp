#include "arconv/ratpoly.hpp"

#include "doctest.h"

using namespace arconv;

namespace {

RatPoly P(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return RatPoly(std::move(v));
}

}  // namespace

TEST_CASE("trailing zero coefficients are trimmed") {
  RatPoly p(std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
  CHECK(p.degree() == 0);
  CHECK(RatPoly().degree() == -1);
  CHECK(RatPoly(Rat(0)).is_zero());
  CHECK((P({1, 2}) - P({1, 2})).is_zero());
}

TEST_CASE("arithmetic") {
  RatPoly a = P({1, 1});   // x + 1
  RatPoly b = P({-1, 1});  // x - 1
  CHECK(a * b == P({-1, 0, 1}));
  CHECK(a + b == P({0, 2}));
  CHECK(-a == P({-1, -1}));
  CHECK(a.pow(3) == P({1, 3, 3, 1}));
  CHECK(a.pow(0) == P({1}));
  CHECK(a * make_rat(1, 2) == RatPoly::linear(make_rat(1, 2), make_rat(1, 2)));
}

TEST_CASE("evaluation, composition, derivative") {
  RatPoly p = P({1, -3, 0, 2});  // 2x^3 - 3x + 1
  CHECK(p(Rat(2)) == 11);
  CHECK(p(make_rat(1, 2)) == make_rat(-1, 4));
  CHECK(p(RatPoly::linear(Rat(1), Rat(1))) == P({0, 3, 6, 2}));
  CHECK(p.derivative() == P({-3, 0, 6}));
  CHECK(RatPoly(Rat(5)).derivative().is_zero());
}

TEST_CASE("to_string") {
  CHECK(RatPoly().to_string() == "0");
  CHECK(P({1, -1, 1}).to_string() == "x^2 - x + 1");
  CHECK(RatPoly::monomial(make_rat(1, 2), 1).to_string() == "1/2*x");
  CHECK(RatPoly(std::vector<Rat>{make_rat(1, 6), Rat(-1), Rat(1)}).to_string() == "x^2 - x + 1/6");
  CHECK(P({0, -1}).to_string() == "-x");
}
