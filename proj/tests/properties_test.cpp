// Randomised algebraic laws. Each case draws fresh inputs from a seeded
// generator so failures are reproducible from the printed seed.

#include "arconv/dirichlet.hpp"
#include "arconv/units.hpp"

#include "doctest.h"
#include "gen.hpp"

using namespace arconv;

namespace {

constexpr int kCases = 200;
constexpr std::size_t kMaxDepth = 16;

template <class Body>
void for_cases(std::uint64_t salt, Body body) {
  for (int i = 0; i < kCases; ++i) {
    std::uint64_t seed = salt * 1000 + static_cast<std::uint64_t>(i);
    CAPTURE(seed);
    gen::Gen g(seed);
    body(g);
  }
}

}  // namespace

TEST_CASE("bullet is a commutative ring product with identity e") {
  for_cases(1, [](gen::Gen& g) {
    std::size_t K = g.depth(0, kMaxDepth);
    Seq f = g.seq(K), h = g.seq(K), u = g.seq(K);
    CHECK(bullet(f, h) == bullet(h, f));
    CHECK(bullet(bullet(f, h), u) == bullet(f, bullet(h, u)));
    CHECK(bullet(f, add(h, u)) == add(bullet(f, h), bullet(f, u)));
    CHECK(bullet(f, identity_seq<Rat>(K)) == f);
  });
}

TEST_CASE("scalar action commutes with the product") {
  for_cases(2, [](gen::Gen& g) {
    std::size_t K = g.depth(0, kMaxDepth);
    Seq f = g.seq(K), h = g.seq(K);
    Rat c = g.rat();
    CHECK(bullet(scale(c, f), h) == scale(c, bullet(f, h)));
  });
}

TEST_CASE("geometric sequences multiply by adding ratios") {
  for_cases(3, [](gen::Gen& g) {
    std::size_t K = g.depth(0, kMaxDepth);
    Rat a = g.rat(), b = g.rat();
    CHECK(bullet(make_eps(a, K), make_eps(b, K)) == make_eps(Rat(a + b), K));
  });
}

TEST_CASE("pointwise multiplication by a geometric sequence is a ring map") {
  for_cases(4, [](gen::Gen& g) {
    std::size_t K = g.depth(0, kMaxDepth);
    Seq f = g.seq(K), h = g.seq(K), ex = make_eps(g.rat(), K);
    CHECK(pointwise_mul(ex, bullet(f, h)) == bullet(pointwise_mul(ex, f), pointwise_mul(ex, h)));
  });
}

TEST_CASE("binomial transform and its inverse") {
  for_cases(5, [](gen::Gen& g) {
    std::size_t K = g.depth(0, kMaxDepth);
    Seq f = g.seq(K);
    CHECK(binomial_invert(binomial_transform(f)) == f);
    CHECK(binomial_transform(binomial_invert(f)) == f);
  });
}

TEST_CASE("inverse round trip") {
  for_cases(6, [](gen::Gen& g) {
    std::size_t K = g.depth(0, kMaxDepth);
    Seq f = g.unit(K);
    Seq inv = inverse(f);
    CHECK(bullet(f, inv) == identity_seq<Rat>(K));
    CHECK(inverse(inv) == f);
    CHECK(power_int(f, -1) == inv);
  });
}

TEST_CASE("roots round trip") {
  for_cases(7, [](gen::Gen& g) {
    std::size_t K = g.depth(0, kMaxDepth);
    long m = g.integer(2, 5);
    CAPTURE(m);
    Seq f = g.normalized_unit(K);
    Seq r = mth_root(f, m);
    CHECK(r[0] == 1);
    CHECK(power_int(r, m) == f);
    CHECK(mth_root(power_int(f, m), m) == f);
  });
}

TEST_CASE("the only root of e with leading 1 is e") {
  for (std::size_t K : {0u, 1u, 8u, 16u})
    for (long s = 1; s <= 6; ++s) CHECK(mth_root(identity_seq<Rat>(K), s) == identity_seq<Rat>(K));
}

TEST_CASE("rational powers compose") {
  for_cases(8, [](gen::Gen& g) {
    std::size_t K = g.depth(0, 10);
    Seq f = g.normalized_unit(K);
    long p1 = g.integer(-3, 3), q1 = g.integer(1, 3), p2 = g.integer(-3, 3), q2 = g.integer(1, 3);
    CAPTURE(p1);
    CAPTURE(q1);
    CAPTURE(p2);
    CAPTURE(q2);
    CHECK(bullet(power_rat(f, p1, q1), power_rat(f, p2, q2)) == power_rat(f, p1 * q2 + p2 * q1, q1 * q2));
  });
}

TEST_CASE("decomposition reassembles and its parts are in their subgroups") {
  for_cases(9, [](gen::Gen& g) {
    std::size_t K = g.depth(0, kMaxDepth);
    Seq f = g.unit(K);
    auto d = decompose(f);
    CHECK(bullet(bullet(d.v, d.w), d.c) == f);
    CHECK(membership(d.v).in_V);
    CHECK(membership(d.w).in_W);
    CHECK(membership(d.c).in_C);
    // any other factorisation through V, W and C gives the same parts
    Seq v2 = make_eps(g.rat(), K);
    Seq w2 = g.normalized_unit(K);
    if (K >= 1) w2[1] = 0;
    Rat c0 = g.nonzero_rat();
    Seq c2 = scale(c0, identity_seq<Rat>(K));
    auto d2 = decompose(bullet(bullet(v2, w2), c2));
    CHECK(d2.v == v2);
    CHECK(d2.w == w2);
    CHECK(d2.c == c2);
  });
}

TEST_CASE("Dirichlet convolution is a commutative monoid with inverses") {
  for_cases(10, [](gen::Gen& g) {
    std::size_t N = g.depth(1, 40);
    DirSeq f = g.dirseq(N), h = g.dirseq(N), u = g.dirseq(N, true);
    CHECK(dirichlet_conv(f, h) == dirichlet_conv(h, f));
    CHECK(dirichlet_conv(dirichlet_conv(f, h), u) == dirichlet_conv(f, dirichlet_conv(h, u)));
    CHECK(dirichlet_conv(f, dirichlet_delta(N)) == f);
    CHECK(dirichlet_conv(u, dirichlet_inverse(u)) == dirichlet_delta(N));
  });
}

TEST_CASE("dividing by gamma carries the twisted product to the plain one") {
  for_cases(11, [](gen::Gen& g) {
    std::size_t N = g.depth(1, 40);
    DirSeq gamma = prime_exponent_factorial(N);
    DirSeq f = g.dirseq(N), h = g.dirseq(N);
    CHECK(pointwise_div(gamma_twisted_conv(f, h, gamma), gamma) ==
          dirichlet_conv(pointwise_div(f, gamma), pointwise_div(h, gamma)));
  });
}

TEST_CASE("polynomial sequences form a ring under bullet") {
  for_cases(12, [](gen::Gen& g) {
    std::size_t K = g.depth(0, 8);
    PolySeq f = g.poly_seq(K, 2), h = g.poly_seq(K, 2), u = g.poly_seq(K, 2);
    CHECK(bullet(f, h) == bullet(h, f));
    CHECK(bullet(bullet(f, h), u) == bullet(f, bullet(h, u)));
    CHECK(bullet(f, add(h, u)) == add(bullet(f, h), bullet(f, u)));
    // evaluation at a point is a ring map
    Rat x = g.rat();
    CHECK(evaluate(bullet(f, h), x) == bullet(evaluate(f, x), evaluate(h, x)));
  });
}
