#include "arconv/seq.hpp"
#include "arconv/special.hpp"

#include "doctest.h"

#include <initializer_list>

using namespace arconv;

namespace {

Seq S(std::initializer_list<Rat> v) { return Seq(std::vector<Rat>(v)); }
Rat q(long n, long d = 1) { return make_rat(n, d); }

}  // namespace

TEST_CASE("named sequences") {
  CHECK(make_named(Named::e, 3) == S({1, 0, 0, 0}));
  CHECK(make_named(Named::nu, 3) == S({1, -1, 1, -1}));
  CHECK(make_named(Named::xi1, 3) == S({1, q(1, 2), q(1, 3), q(1, 4)}));
  CHECK(make_named(Named::fact, 4) == S({1, 1, 2, 6, 24}));
  CHECK(make_named(Named::I, 0) == S({1}));
  CHECK(parse_named("i") == Named::I);
  CHECK_THROWS_AS(parse_named("zeta"), Error);
}

TEST_CASE("eps and xi") {
  CHECK(make_eps(q(2), 3) == S({1, 2, 4, 8}));
  CHECK(make_eps(q(0), 3) == S({1, 0, 0, 0}));
  CHECK(make_eps(q(-1), 3) == make_named(Named::nu, 3));
  CHECK(make_xi(q(1), 1, 3) == make_named(Named::xi1, 3));
  CHECK(make_xi(q(0), 2, 2) == S({1, 0, 0}));
  CHECK(make_xi(q(2), 1, 2) == S({2, 2, q(8, 3)}));
  CHECK_THROWS_AS(make_xi(q(2), 0, 2), Error);

  PolySeq ex = make_eps(RatPoly::x(), 2);
  CHECK(ex[2] == RatPoly::monomial(q(1), 2));
}

TEST_CASE("pointwise operations") {
  CHECK(add(make_named(Named::e, 2), make_named(Named::e, 2)) == S({2, 0, 0}));
  CHECK(pointwise_mul(make_named(Named::nu, 4), make_named(Named::I, 4)) == make_named(Named::nu, 4));
  CHECK(scale(q(3), make_named(Named::xi1, 2))[1] == q(3, 2));
  CHECK(sub(make_named(Named::I, 2), make_named(Named::I, 2)) == Seq(2));
  CHECK_THROWS_AS(pointwise_div(make_named(Named::I, 2), S({1, 0, 1})), Error);
}

TEST_CASE("bullet product") {
  CHECK(bullet(make_named(Named::I, 6), make_named(Named::nu, 6)) == make_named(Named::e, 6));
  Seq f = S({3, q(-1, 2), 7, q(2, 9)});
  CHECK(bullet(make_named(Named::e, 3), f) == f);
  CHECK(bullet(make_eps(q(2, 3), 5), make_eps(q(-5, 4), 5)) == make_eps(Rat(q(2, 3) + q(-5, 4)), 5));
  // (f . g)(2) = f0 g2 + 2 f1 g1 + f2 g0
  Seq g = S({1, 2, 3, 4});
  CHECK(bullet(f, g)[2] == 3 * 3 + 2 * q(-1, 2) * 2 + 7 * 1);
}

TEST_CASE("mismatched depths are rejected") {
  try {
    bullet(make_named(Named::I, 3), make_named(Named::I, 4));
    FAIL("expected DepthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::depth_mismatch);
  }
  CHECK_THROWS_AS(add(Seq(1), Seq(2)), Error);
  CHECK_THROWS_AS(cauchy(Seq(1), Seq(2)), Error);
}

TEST_CASE("Cauchy product") {
  Seq c = cauchy(make_named(Named::I, 5), make_named(Named::I, 5));
  for (std::size_t k = 0; k <= 5; ++k) CHECK(c[k] == Rat(k + 1));
  Seq f = S({2, 5, q(1, 3)});
  CHECK(cauchy(make_named(Named::e, 2), f) == f);
  CHECK(cauchy(make_named(Named::fact, 2), make_named(Named::fact, 2))[2] == 5);
}

TEST_CASE("binomial transform and its inverse") {
  CHECK(binomial_transform(make_named(Named::e, 4)) == make_named(Named::I, 4));
  Seq t = binomial_transform(make_named(Named::I, 6));
  for (std::size_t k = 0; k <= 6; ++k) CHECK(t[k] == pow(q(2), static_cast<long>(k)));
  CHECK(binomial_invert(binomial_transform(make_named(Named::nu, 6))) == make_named(Named::nu, 6));
}

TEST_CASE("shift and psi product") {
  CHECK(compose_shift(make_named(Named::nu, 3), 1) == S({-1, 1, -1}));
  Seq f = S({1, 5, 7, 9});
  CHECK(compose_shift(f, 0) == f);
  CHECK(compose_shift(f, 2) == S({7, 9}));
  CHECK_THROWS_AS(compose_shift(f, 4), Error);

  Seq g = S({2, q(1, 2), 3, -1});
  CHECK(psi_product(f, g, 0) == bullet(f, g));
  CHECK(psi_product(f, g, 1).depth() == 2);

  Seq B = bernoulli(3);
  Seq I = make_named(Named::I, 3);
  CHECK(psi_value(I, B, 1, 2) == q(-1, 6));
  CHECK(psi_product(I, B, 1)[2] == q(-1, 6));
  CHECK_THROWS_AS(psi_product(I, B, 4), Error);
  CHECK_THROWS_AS(psi_value(I, B, 2, 2), Error);
}

TEST_CASE("deviation") {
  CHECK(deviation(bernoulli(10)) == Seq(10));
  Seq d = deviation(euler1(8));
  CHECK(d[0] == 0);
  for (std::size_t k = 1; k <= 8; ++k) CHECK(d[k] == 2);
  Seq de = deviation(make_named(Named::e, 4));
  CHECK(de == S({0, 1, 1, 1, 1}));
}

TEST_CASE("polynomial sequences") {
  PolySeq bx = bernoulli_poly(3);
  CHECK(evaluate(bx, q(0)) == bernoulli(3));
  CHECK(compose(bx, RatPoly::linear(q(-1), q(1)))[1] == -bx[1]);
  CHECK(lift(make_named(Named::I, 2))[1] == RatPoly(q(1)));
  CHECK(truncate(make_named(Named::I, 5), 2) == make_named(Named::I, 2));
}
