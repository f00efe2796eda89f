#include "arconv/identities.hpp"

#include "arconv/dirichlet.hpp"
#include "arconv/special.hpp"
#include "arconv/units.hpp"

#include <functional>
#include <random>

namespace arconv {

namespace {

constexpr std::size_t kDefaultDepth = 12;

Rat sign(std::size_t k) { return k % 2 == 0 ? Rat(1) : Rat(-1); }
Rat q(long n, long d = 1) { return make_rat(n, d); }
Rat as_rat(const Int& v) { return Rat(v); }

// ---- evaluation context ---------------------------------------------------

class Ctx {
 public:
  Ctx(std::string name, Params params, std::size_t depth) : params_(std::move(params)) {
    report.name = std::move(name);
    report.depth = depth;
  }

  IdentityReport report;

  /// The seeded generator; the seed is recorded once a check draws from it.
  std::mt19937_64& rng() {
    if (!seeded_) {
      seeded_ = true;
      rng_.seed(static_cast<std::uint64_t>(get_long("seed", 1)));
    }
    return rng_;
  }

  std::size_t depth() const { return report.depth; }
  bool failed() const { return !report.pass; }

  std::optional<std::string> raw(const std::string& key) const {
    auto it = params_.find(key);
    if (it == params_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<long> opt_long(const std::string& key) {
    auto v = raw(key);
    if (!v) return std::nullopt;
    try {
      std::size_t pos = 0;
      long out = std::stol(*v, &pos);
      if (pos != v->size()) throw std::invalid_argument(*v);
      record(key, *v);
      return out;
    } catch (const std::logic_error&) {
      throw Error(Errc::invalid_argument, "parameter " + key + " must be an integer, got '" + *v + "'");
    }
  }

  long get_long(const std::string& key, long fallback) {
    auto v = opt_long(key);
    if (!v) {
      record(key, std::to_string(fallback));
      return fallback;
    }
    return *v;
  }

  long get_nonneg(const std::string& key, long fallback) {
    long v = get_long(key, fallback);
    if (v < 0) throw Error(Errc::invalid_argument, "parameter " + key + " must be >= 0");
    return v;
  }

  std::optional<Rat> opt_rat(const std::string& key) {
    auto v = raw(key);
    if (!v) return std::nullopt;
    Rat r;
    try {
      r = parse_rat(*v);
    } catch (const Error&) {
      throw Error(Errc::invalid_argument, "parameter " + key + " must be a rational, got '" + *v + "'");
    }
    record(key, to_string(r));
    return r;
  }

  std::string get_choice(const std::string& key, const std::string& fallback,
                         std::initializer_list<const char*> allowed) {
    std::string v = raw(key).value_or(fallback);
    for (const char* a : allowed)
      if (v == a) {
        record(key, v);
        return v;
      }
    throw Error(Errc::invalid_argument, "parameter " + key + " has unsupported value '" + v + "'");
  }

  void record(const std::string& key, const std::string& value) { report.params[key] = value; }
  void note(std::string text) { report.notes.push_back(std::move(text)); }

  template <class V>
  bool expect(Index index, const V& lhs, const V& rhs) {
    if (lhs == rhs) return true;
    if (report.pass) {
      report.pass = false;
      report.first_failure = Failure{std::move(index), Value(lhs), Value(rhs)};
    }
    return false;
  }

  template <CoeffRing R>
  bool expect_seq(const TruncSeq<R>& lhs, const TruncSeq<R>& rhs, Index prefix = {}) {
    for (std::size_t k = 0; k < lhs.size() && k < rhs.size(); ++k) {
      Index idx = prefix;
      idx.emplace_back("k", static_cast<long>(k));
      if (!expect(std::move(idx), lhs[k], rhs[k])) return false;
    }
    return true;
  }

  // Small-height samples: numerators in [-9, 9], denominators in [1, 9].
  Rat random_rat() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    return make_rat(num(rng()), den(rng()));
  }

  Rat random_nonzero_rat() {
    for (;;) {
      Rat r = random_rat();
      if (r != 0) return r;
    }
  }

  Seq random_unit(std::size_t depth, bool normalized = false) {
    Seq f(depth);
    f[0] = normalized ? Rat(1) : random_nonzero_rat();
    for (std::size_t k = 1; k <= depth; ++k) f[k] = random_rat();
    return f;
  }

  /// Named rational parameter, or a fresh nonzero sample recorded in the report.
  Rat rat_or_sample(const std::string& key, std::initializer_list<Rat> avoid = {}) {
    if (auto v = opt_rat(key)) return *v;
    for (;;) {
      Rat r = random_nonzero_rat();
      bool clash = false;
      for (const Rat& a : avoid) clash = clash || r == a;
      if (clash) continue;
      record(key, to_string(r));
      return r;
    }
  }

 private:
  Params params_;
  std::mt19937_64 rng_;
  bool seeded_ = false;
};

template <CoeffRing R>
TruncSeq<R> ones_like(std::size_t depth) {
  return make_named<R>(Named::I, depth);
}

// B_c as a sequence: numeric c evaluates, polynomial c substitutes.
Seq at(const PolySeq& f, const Rat& c) { return evaluate(f, c); }
PolySeq at(const PolySeq& f, const RatPoly& c) { return compose(f, c); }

template <CoeffRing R>
TruncSeq<R> eps_of(const Rat& a, std::size_t depth) {
  return make_eps(ring_traits<R>::from_rat(a), depth);
}

template <CoeffRing R>
R shift_by(const R& c, const Rat& d) {
  return R(c + ring_traits<R>::from_rat(d));
}

Seq make_test_sequence(Ctx& ctx, std::size_t depth) {
  std::string kind = ctx.get_choice("f", "bernoulli", {"bernoulli", "constructed", "random"});
  if (kind == "bernoulli") return bernoulli(depth);
  if (kind == "constructed") return symmetric_from_even(ctx.random_unit(depth));
  return ctx.random_unit(depth);
}

// ---- Bernoulli machinery --------------------------------------------------

void run_eq3(Ctx& c) {
  const std::size_t K = c.depth();
  c.expect_seq(bullet(bernoulli(K), make_named<Rat>(Named::xi1, K)), identity_seq<Rat>(K));
}

void run_eq5(Ctx& c) {
  const std::size_t K = c.depth();
  c.record("mode", "polynomial");
  PolySeq inv = inverse(bernoulli_poly(K));
  PolySeq via_product = bullet(lift(make_named<Rat>(Named::xi1, K)), make_eps(RatPoly::linear(q(-1), q(0)), K));
  PolySeq closed = sub(make_xi(RatPoly::linear(q(-1), q(1)), 1, K), make_xi(RatPoly::linear(q(-1), q(0)), 1, K));
  c.note("checked: inverse(B_x) = xi1 . eps_{-x} = xi_{1-x,1} - xi_{-x,1}");
  if (!c.expect_seq(inv, via_product, {{"part", 1}})) return;
  c.expect_seq(inv, closed, {{"part", 2}});
}

void run_eq6(Ctx& c) {
  const std::size_t K = c.depth();
  c.record("mode", "polynomial");
  PolySeq lhs = compose(inverse(bernoulli_poly(K)), RatPoly::linear(q(-1), q(0)));
  for (std::size_t k = 0; k <= K; ++k) {
    RatPoly rhs = (RatPoly::linear(q(1), q(1)).pow(k + 1) - RatPoly::x().pow(k + 1)) * q(1, static_cast<long>(k + 1));
    if (!c.expect({{"k", static_cast<long>(k)}}, lhs[k], rhs)) return;
  }
}

void run_eq7(Ctx& c) {
  const std::size_t K = c.depth();
  c.record("mode", "polynomial");
  Seq xi_sq = power_int(make_named<Rat>(Named::xi1, K), 2);
  for (std::size_t k = 0; k <= K; ++k) {
    Rat rhs = 2 * (pow(q(2), static_cast<long>(k + 1)) - 1) / Rat((k + 1) * (k + 2));
    if (!c.expect({{"part", 1}, {"k", static_cast<long>(k)}}, xi_sq[k], rhs)) return;
  }
  PolySeq lhs = power_int(inverse(bernoulli_poly(K)), 2);
  for (std::size_t k = 0; k <= K; ++k) {
    const unsigned long e = k + 2;
    Rat two_pow = pow(q(2), static_cast<long>(k + 1));
    RatPoly inner = RatPoly::linear(q(-2), q(1)).pow(e) - RatPoly::linear(q(-1), q(1)).pow(e) * two_pow -
                    RatPoly::linear(q(-1), q(0)).pow(e) * two_pow;
    RatPoly rhs = inner * make_rat(-2, static_cast<long>((k + 1) * (k + 2)));
    if (!c.expect({{"part", 2}, {"k", static_cast<long>(k)}}, lhs[k], rhs)) return;
  }
}

std::vector<long> range_or_single(Ctx& c, const std::string& key, long lo, long hi) {
  if (auto v = c.opt_long(key)) return {*v};
  std::vector<long> out;
  for (long i = lo; i <= hi; ++i) out.push_back(i);
  c.record(key, std::to_string(lo) + ".." + std::to_string(hi));
  return out;
}

void run_eq8(Ctx& c) {
  const std::size_t K = c.depth();
  c.record("mode", "polynomial");
  PolySeq inv = inverse(bernoulli_poly(K));
  for (long n : range_or_single(c, "n", 1, 4)) {
    if (n < 1) throw Error(Errc::invalid_argument, "eq8 needs n >= 1");
    if (!c.expect_seq(ber_inv_pow(n, K), power_int(inv, n), {{"n", n}})) return;
  }
}

void run_eq8_reflection(Ctx& c) {
  const std::size_t K = c.depth();
  c.record("mode", "polynomial");
  for (long n : range_or_single(c, "n", 1, 4)) {
    if (n < 1) throw Error(Errc::invalid_argument, "eq8-reflection needs n >= 1");
    PolySeq closed = ber_inv_pow(n, K);
    PolySeq reflected = compose(closed, RatPoly::linear(q(-1), q(1)));
    for (std::size_t k = 0; k <= K; ++k)
      if (!c.expect({{"n", n}, {"k", static_cast<long>(k)}}, reflected[k], closed[k] * sign(k))) return;
  }
}

void run_eq8_derivative(Ctx& c) {
  const std::size_t K = c.depth();
  c.record("mode", "polynomial");
  for (long n : range_or_single(c, "n", 1, 4)) {
    if (n < 1) throw Error(Errc::invalid_argument, "eq8-derivative needs n >= 1");
    PolySeq closed = ber_inv_pow(n, K);
    if (!c.expect({{"n", n}, {"k", 0}}, closed[0].derivative(), RatPoly())) return;
    for (std::size_t k = 1; k <= K; ++k) {
      RatPoly rhs = closed[k - 1] * Rat(-n * static_cast<long>(k));
      if (!c.expect({{"n", n}, {"k", static_cast<long>(k)}}, closed[k].derivative(), rhs)) return;
    }
  }
}

// (j - n x)^e / denom as a polynomial.
RatPoly shifted_power(long j, long n, unsigned long e) { return RatPoly::linear(q(-n), q(j)).pow(e); }

void run_eq9(Ctx& c) {
  const std::size_t K = c.depth();
  c.record("mode", "polynomial");
  PolySeq bx = bernoulli_poly(K);
  for (long n : range_or_single(c, "n", 1, 3)) {
    if (n < 1) throw Error(Errc::invalid_argument, "eq9 needs n >= 1");
    PolySeq bn = power_int(bx, n);
    const Rat nfact = as_rat(factorial(n));
    for (std::size_t k = 0; k <= K; ++k) {
      RatPoly acc;
      for (std::size_t m = 0; m <= k; ++m) {
        RatPoly inner;
        for (long j = 0; j <= n; ++j) {
          Rat w = sign(static_cast<std::size_t>(n - j)) /
                  (as_rat(factorial(n - j)) * as_rat(factorial(m + n)) * as_rat(factorial(j)));
          inner += shifted_power(j, n, m + n) * w;
        }
        acc += bn[k - m] * inner * Rat(nfact / as_rat(factorial(k - m)));
      }
      RatPoly rhs = k == 0 ? RatPoly(q(1)) : RatPoly();
      if (!c.expect({{"n", n}, {"k", static_cast<long>(k)}}, acc, rhs)) return;
    }
  }
}

RatPoly k0_sum(long n, long exponent) {
  RatPoly acc;
  for (long j = 0; j <= n; ++j) {
    Rat w = sign(static_cast<std::size_t>(n - j)) / (as_rat(factorial(n - j)) * as_rat(factorial(j)));
    acc += shifted_power(j, n, static_cast<unsigned long>(exponent)) * w;
  }
  return acc;
}

void run_eq9_k0_a(Ctx& c) {
  c.record("mode", "polynomial");
  for (long n : range_or_single(c, "n", 1, 8)) {
    if (n < 1) throw Error(Errc::invalid_argument, "eq9-k0-a needs n >= 1");
    if (!c.expect({{"n", n}}, k0_sum(n, n), RatPoly(q(1)))) return;
  }
}

void run_eq9_k0_b(Ctx& c) {
  c.record("mode", "polynomial");
  auto alphas = range_or_single(c, "alpha", 1, 3);
  auto given_n = c.opt_long("n");
  for (long alpha : alphas) {
    if (alpha < 1) throw Error(Errc::invalid_argument, "eq9-k0-b needs alpha >= 1");
    long lo = given_n ? *given_n : alpha;
    long hi = given_n ? *given_n : 8;
    if (lo < alpha) throw Error(Errc::invalid_argument, "eq9-k0-b needs n >= alpha");
    for (long n = lo; n <= hi; ++n)
      if (!c.expect({{"alpha", alpha}, {"n", n}}, k0_sum(n, n - alpha), RatPoly())) return;
  }
}

// ---- power sums -----------------------------------------------------------

void run_faulhaber(Ctx& c) {
  const std::size_t K = c.depth();
  for (long n : range_or_single(c, "n", 0, 20)) {
    if (n < 0) throw Error(Errc::invalid_argument, "faulhaber needs n >= 0");
    Seq fs = faulhaber(static_cast<unsigned long>(n), K);
    for (std::size_t k = 0; k <= K; ++k)
      if (!c.expect({{"n", n}, {"k", static_cast<long>(k)}}, fs[k], power_sum_bruteforce(n, k))) return;
  }
}

void run_powersum_sigma_form(Ctx& c) {
  const std::size_t K = c.depth();
  c.record("mode", "polynomial");
  PolySeq s = powersum_poly(K);
  PolySeq bx = bernoulli_poly(K + 1);
  PolySeq shifted = compose(bx, RatPoly::linear(q(1), q(1)));
  Seq b1 = evaluate(bx, q(1));
  for (std::size_t k = 0; k <= K; ++k) {
    RatPoly rhs = (shifted[k + 1] - RatPoly(b1[k + 1])) * q(1, static_cast<long>(k + 1));
    if (!c.expect({{"k", static_cast<long>(k)}}, s[k], rhs)) return;
  }
  for (long N = 0; N <= 5; ++N)
    for (std::size_t k = 0; k <= K; ++k)
      if (!c.expect({{"N", N}, {"k", static_cast<long>(k)}}, s[k](Rat(N)), power_sum_bruteforce(N, k))) return;
}

// ---- symmetric identities -------------------------------------------------

void carlitz_pairs(Ctx& c, const Seq& B, const std::vector<std::pair<long, long>>& pairs);

void run_carlitz(Ctx& c) {
  auto m_opt = c.opt_long("m");
  auto n_opt = c.opt_long("n");
  if (m_opt.has_value() != n_opt.has_value())
    throw Error(Errc::invalid_argument, "carlitz takes both m and n or neither");
  std::vector<std::pair<long, long>> pairs;
  if (m_opt) {
    if (*m_opt < 0 || *n_opt < 0) throw Error(Errc::invalid_argument, "carlitz needs m, n >= 0");
    pairs.emplace_back(*m_opt, *n_opt);
    c.report.depth = static_cast<std::size_t>(*m_opt + *n_opt);
  } else {
    const long K = static_cast<long>(c.depth());
    for (long m = 0; m <= K; ++m)
      for (long n = 0; m + n <= K; ++n) pairs.emplace_back(m, n);
  }
  carlitz_pairs(c, bernoulli(c.depth()), pairs);
}

void carlitz_pairs(Ctx& c, const Seq& B, const std::vector<std::pair<long, long>>& pairs) {
  for (auto [m, n] : pairs) {
    Rat lhs(0), rhs(0);
    for (long i = 0; i <= n; ++i) lhs += as_rat(binomial(n, i)) * B[m + i];
    for (long i = 0; i <= m; ++i) rhs += as_rat(binomial(m, i)) * B[n + i];
    lhs *= sign(n);
    rhs *= sign(m);
    if (!c.expect({{"m", m}, {"n", n}}, lhs, rhs)) return;
  }
}

void run_gould12(Ctx& c, const Seq& f) {
  const long K = static_cast<long>(f.depth());
  Seq F = binomial_transform(f);
  for (long m = 0; m <= K; ++m)
    for (long n = 0; m + n <= K; ++n) {
      Rat lhs(0), rhs(0);
      for (long i = 0; i <= n; ++i) lhs += as_rat(binomial(n, i)) * f[m + i];
      for (long i = 0; i <= m; ++i) rhs += as_rat(binomial(m, i)) * sign(m - i) * F[n + i];
      if (!c.expect({{"m", m}, {"n", n}}, lhs, rhs)) return;
    }
}

void run_eq13(Ctx& c, const Seq& f) {
  const std::size_t K = f.depth();
  Seq I = ones_like<Rat>(K);
  Seq nu = make_named<Rat>(Named::nu, K);
  Seq F = binomial_transform(f);
  for (std::size_t m = 0; m <= K; ++m)
    for (std::size_t n = 0; m + n <= K; ++n) {
      Rat lhs = psi_value(I, f, m, n);
      Rat rhs = sign(n) * psi_value(nu, F, n, m);
      if (!c.expect({{"m", static_cast<long>(m)}, {"n", static_cast<long>(n)}}, lhs, rhs)) return;
    }
}

bool symmetric_identity_holds(const Seq& f, Ctx* c) {
  const std::size_t K = f.depth();
  Seq I = ones_like<Rat>(K);
  for (std::size_t m = 0; m <= K; ++m)
    for (std::size_t n = 0; m + n <= K; ++n) {
      Rat lhs = sign(n) * psi_value(I, f, m, n);
      Rat rhs = sign(m) * psi_value(I, f, n, m);
      if (c) {
        if (!c->expect({{"m", static_cast<long>(m)}, {"n", static_cast<long>(n)}}, lhs, rhs)) return false;
      } else if (lhs != rhs) {
        return false;
      }
    }
  return true;
}

void run_thm5_forward(Ctx& c, const Seq& f) {
  const std::size_t K = f.depth();
  if (bullet(ones_like<Rat>(K), f) != pointwise_mul(make_named<Rat>(Named::nu, K), f))
    c.note("f does not satisfy I . f = nu f; the symmetric identity is not expected to hold");
  symmetric_identity_holds(f, &c);
}

void run_thm5_converse(Ctx& c, const Seq& f) {
  const std::size_t K = f.depth();
  if (!symmetric_identity_holds(f, nullptr))
    c.note("f does not satisfy the symmetric identity; the conclusion is not expected to hold");
  // m = 0 instance: (-1)^n (I . f)(n) = f(n), i.e. I . f = nu f.
  Seq I = ones_like<Rat>(K);
  Seq lhs = psi_product(I, f, 0);
  Seq rhs = pointwise_mul(make_named<Rat>(Named::nu, K), f);
  c.expect_seq(lhs, rhs);
}

void run_eq15(Ctx& c, const Seq& f) {
  const std::size_t K = f.depth();
  Seq E1 = euler1(K);
  for (std::size_t k = 0; 2 * k + 1 <= K; ++k) {
    Rat rhs(0);
    for (std::size_t i = 0; i <= k; ++i) rhs -= as_rat(binomial(2 * k + 1, 2 * i + 1)) * E1[2 * i + 1] * f[2 * (k - i)];
    if (!c.expect({{"k", static_cast<long>(2 * k + 1)}}, f[2 * k + 1], rhs)) return;
  }
}

void run_eq16(Ctx& c) {
  const std::size_t K = c.depth();
  Seq E1 = euler1(K);
  Seq nu = make_named<Rat>(Named::nu, K);
  Seq nu_bullet = bullet(nu, E1);
  if (!c.expect_seq(add(nu_bullet, E1), scale(q(2), identity_seq<Rat>(K)), {{"part", 1}})) return;
  c.expect_seq(nu_bullet, pointwise_mul(nu, E1), {{"part", 2}});
}

void run_eq18(Ctx& c, const Seq& f) {
  const std::size_t K = f.depth();
  Seq B = bernoulli(K);
  for (std::size_t k = 1; 2 * k + 1 <= K; ++k) {
    Rat sum(0);
    for (std::size_t i = 0; i <= k; ++i) sum += as_rat(binomial(2 * k + 1, 2 * i + 1)) * B[2 * (k - i)] * f[2 * i + 1];
    Rat rhs = q(-2, static_cast<long>(2 * k + 1)) * sum;
    if (!c.expect({{"k", static_cast<long>(2 * k)}}, f[2 * k], rhs)) return;
  }
}

Rat symmetric_defect(const Seq& I, const Seq& f, std::size_t m, std::size_t n) {
  return sign(n) * psi_value(I, f, m, n) - sign(m) * psi_value(I, f, n, m);
}

void run_eq19(Ctx& c, const Seq& f) {
  const std::size_t K = f.depth();
  Seq I = ones_like<Rat>(K);
  Seq nu = make_named<Rat>(Named::nu, K);
  Seq delta = deviation(f);
  for (std::size_t m = 0; m <= K; ++m)
    for (std::size_t n = 0; m + n <= K; ++n)
      if (!c.expect({{"m", static_cast<long>(m)}, {"n", static_cast<long>(n)}}, symmetric_defect(I, f, m, n),
                    psi_value(nu, delta, n, m)))
        return;
}

void run_eq20(Ctx& c) {
  const std::size_t K = c.depth();
  Seq E1 = euler1(K);
  Seq I = ones_like<Rat>(K);
  Seq nu = make_named<Rat>(Named::nu, K);
  Seq delta = deviation(E1);
  auto e = [](std::size_t k) { return k == 0 ? Rat(1) : Rat(0); };
  std::optional<std::pair<std::size_t, std::size_t>> intermediate_mismatch;
  for (std::size_t m = 0; m <= K; ++m)
    for (std::size_t n = 0; m + n <= K; ++n) {
      Rat via_delta = psi_value(nu, delta, n, m);
      if (!intermediate_mismatch && via_delta != -2 * sign(m) * e(n)) intermediate_mismatch.emplace(m, n);
      Rat rhs = 2 * (sign(n) * e(m) - sign(m) * e(n));
      if (!c.expect({{"m", static_cast<long>(m)}, {"n", static_cast<long>(n)}}, symmetric_defect(I, E1, m, n), rhs))
        return;
    }
  c.note("Delta_{E_1} = 2 (I - e)");
  if (intermediate_mismatch)
    c.note("(nu (x)_n Delta_{E_1})(m) = -2 nu(m) e(n) fails, first at m=" + std::to_string(intermediate_mismatch->first) +
           ", n=" + std::to_string(intermediate_mismatch->second) +
           "; it equals 2 (nu(n) e(m) - nu(m) e(n)), which is the form checked");
}

// ---- Bernoulli-polynomial symmetries with parameters a, b, c ---------------

struct Abc {
  Rat a, b;
  std::optional<Rat> c;  // absent: c is the polynomial indeterminate
};

Abc sample_abc(Ctx& ctx, bool c_numeric_required, std::optional<Rat> fixed_c = std::nullopt) {
  Abc out;
  out.a = ctx.rat_or_sample("a");
  out.b = ctx.rat_or_sample("b", {out.a});
  if (fixed_c) {
    out.c = fixed_c;
    ctx.record("c", to_string(*fixed_c));
  } else if (auto cv = ctx.opt_rat("c")) {
    out.c = cv;
  } else if (c_numeric_required) {
    out.c = ctx.rat_or_sample("c", {out.a, out.b});
  }
  ctx.record("mode", out.c ? "point" : "polynomial");
  return out;
}

template <CoeffRing R>
struct SymmetryInputs {
  TruncSeq<R> bc, bac, bbc, sac, sbc, eps_a, eps_b;
  TruncSeq<R> b0;  // Bernoulli numbers lifted
};

template <CoeffRing R>
SymmetryInputs<R> symmetry_inputs(const Rat& a, const Rat& b, const R& c, std::size_t K) {
  BernoulliFamily fam = bernoulli_family(K);
  PolySeq sig = sigma(K);
  auto lift_numbers = [&]() {
    if constexpr (std::same_as<R, Rat>) return fam.numbers;
    else return lift(fam.numbers);
  };
  return SymmetryInputs<R>{at(fam.polys, c),
                           at(fam.polys, shift_by(c, a)),
                           at(fam.polys, shift_by(c, b)),
                           at(sig, shift_by(c, Rat(a - 1))),
                           at(sig, shift_by(c, Rat(b - 1))),
                           eps_of<R>(a, K),
                           eps_of<R>(b, K),
                           lift_numbers()};
}

template <CoeffRing R>
void eq21_body(Ctx& ctx, const Rat& a, const Rat& b, const R& c) {
  auto in = symmetry_inputs(a, b, c, ctx.depth());
  ctx.expect_seq(bullet(pointwise_mul(in.eps_a, in.bc), pointwise_mul(in.eps_b, in.bac)),
                 bullet(pointwise_mul(in.eps_b, in.bc), pointwise_mul(in.eps_a, in.bbc)));
}

template <CoeffRing R>
void eq22_body(Ctx& ctx, const Rat& a, const Rat& b, const R& c) {
  auto in = symmetry_inputs(a, b, c, ctx.depth());
  auto lhs = scale(b, bullet(pointwise_mul(in.eps_a, in.bc), pointwise_mul(in.eps_b, in.sac)));
  auto rhs = scale(a, bullet(pointwise_mul(in.eps_b, in.bc), pointwise_mul(in.eps_a, in.sbc)));
  if (!ctx.expect_seq(lhs, rhs)) ctx.note("holds for c = 0 (or a = b); for other c see eq22-general");
}

// n b (eps_a B_c . eps_b sigma_{a+c-1})(n-1) - n a (eps_b B_c . eps_a sigma_{b+c-1})(n-1)
//   = (eps_b B_c . eps_a B - eps_a B_c . eps_b B)(n)
template <CoeffRing R>
void eq22_general_body(Ctx& ctx, const Rat& a, const Rat& b, const R& c) {
  const std::size_t K = ctx.depth();
  auto in = symmetry_inputs(a, b, c, K);
  auto left = bullet(pointwise_mul(in.eps_a, in.bc), pointwise_mul(in.eps_b, in.sac));
  auto right = bullet(pointwise_mul(in.eps_b, in.bc), pointwise_mul(in.eps_a, in.sbc));
  auto defect = sub(bullet(pointwise_mul(in.eps_b, in.bc), pointwise_mul(in.eps_a, in.b0)),
                    bullet(pointwise_mul(in.eps_a, in.bc), pointwise_mul(in.eps_b, in.b0)));
  for (std::size_t n = 1; n <= K; ++n) {
    R lhs = ring_traits<R>::scale(Rat(static_cast<unsigned long>(n)),
                                  R(ring_traits<R>::scale(b, left[n - 1]) - ring_traits<R>::scale(a, right[n - 1])));
    if (!ctx.expect({{"k", static_cast<long>(n)}}, lhs, defect[n])) return;
  }
}

template <template <class> class Body>
void dispatch_abc(Ctx& ctx, const Abc& p) {
  if (p.c) Body<Rat>::run(ctx, p.a, p.b, *p.c);
  else Body<RatPoly>::run(ctx, p.a, p.b, RatPoly::x());
}

template <class R> struct Eq21 { static void run(Ctx& c, const Rat& a, const Rat& b, const R& x) { eq21_body(c, a, b, x); } };
template <class R> struct Eq22 { static void run(Ctx& c, const Rat& a, const Rat& b, const R& x) { eq22_body(c, a, b, x); } };
template <class R> struct Eq22General { static void run(Ctx& c, const Rat& a, const Rat& b, const R& x) { eq22_general_body(c, a, b, x); } };

void run_eq21(Ctx& c) { dispatch_abc<Eq21>(c, sample_abc(c, false)); }
void run_eq22(Ctx& c) { dispatch_abc<Eq22>(c, sample_abc(c, false)); }
void run_eq22_general(Ctx& c) { dispatch_abc<Eq22General>(c, sample_abc(c, false)); }

Rat eq23_denominator(const Rat& a, const Rat& b, const Rat& c, long n) {
  return pow(b, n - 1) * (b + c) - pow(a, n - 1) * (a + c);
}

void eq23_body(Ctx& ctx, const Abc& p) {
  const Rat& a = p.a;
  const Rat& b = p.b;
  const Rat& c = *p.c;
  const long K = static_cast<long>(ctx.depth());
  std::vector<long> ns;
  if (auto n = ctx.opt_long("n")) {
    if (*n < 1) throw Error(Errc::invalid_argument, "eq23 needs n >= 1");
    ns.push_back(*n);
    ctx.report.depth = static_cast<std::size_t>(*n);
  } else {
    for (long n = 1; n <= K; ++n) ns.push_back(n);
  }
  for (long n : ns)
    if (eq23_denominator(a, b, c, n) == 0)
      throw Error(Errc::invalid_argument, "b^(n-1)(b+c) - a^(n-1)(a+c) vanishes at n=" + std::to_string(n));

  const std::size_t depth = ctx.depth();
  BernoulliFamily fam = bernoulli_family(depth);
  PolySeq sig = sigma(depth);
  Seq bc = evaluate(fam.polys, c);
  Seq sac = evaluate(sig, Rat(a + c - 1));
  Seq sbc = evaluate(sig, Rat(b + c - 1));
  for (long n : ns) {
    Rat sum(0);
    for (long i = 1; i <= n; ++i)
      sum += as_rat(binomial(n, i)) * bc[n - i] *
             (pow(a, n - 1 - i) * pow(b, i) * sac[i] - pow(a, i) * pow(b, n - 1 - i) * sbc[i]);
    Rat rhs = sum / eq23_denominator(a, b, c, n);
    if (!ctx.expect({{"n", n}}, bc[n], rhs)) {
      if (c != 0) ctx.note("holds for c = 0; the c-dependent correction is checked by eq22-general");
      return;
    }
  }
}

// Resamples (a, b[, c]) until the eq23 denominator is nonzero for every tested n.
Abc sample_admissible(Ctx& ctx, std::optional<Rat> fixed_c) {
  const long K = static_cast<long>(ctx.depth());
  Abc p = sample_abc(ctx, true, fixed_c);
  auto admissible = [&](const Abc& s) {
    for (long n = 1; n <= K; ++n)
      if (eq23_denominator(s.a, s.b, *s.c, n) == 0) return false;
    return true;
  };
  bool user_given = ctx.raw("a") || ctx.raw("b") || ctx.raw("c");
  while (!admissible(p) && !user_given && !ctx.raw("n")) p = sample_abc(ctx, true, fixed_c);
  return p;
}

void run_eq23(Ctx& c) { eq23_body(c, sample_admissible(c, std::nullopt)); }
void run_tuenter(Ctx& c) { eq23_body(c, sample_admissible(c, Rat(0))); }

void run_eq24(Ctx& ctx) {
  Abc p = sample_admissible(ctx, Rat(1));
  const Rat& a = p.a;
  const Rat& b = p.b;
  const long K = static_cast<long>(ctx.depth());
  Seq B = bernoulli(ctx.depth());
  PolySeq sig = sigma(ctx.depth());
  Seq sa = evaluate(sig, a);
  Seq sb = evaluate(sig, b);
  for (long n = 1; n <= K; ++n) {
    Rat sum(0);
    for (long i = 1; i <= n; ++i)
      sum += as_rat(binomial(n, i)) * B[n - i] * sign(i) *
             (pow(a, n - 1 - i) * pow(b, i) * sa[i] - pow(a, i) * pow(b, n - 1 - i) * sb[i]);
    Rat rhs = sum / eq23_denominator(a, b, Rat(1), n);
    if (!ctx.expect({{"n", n}}, B[n], rhs)) {
      ctx.note("fails at even n; it inherits the c-dependent correction of eq22-general at c = 1");
      return;
    }
  }
}

template <CoeffRing R>
void cor9_body(Ctx& ctx, const Rat& a, const Rat& b, const R& c, long r) {
  const std::size_t K = ctx.depth();
  auto in = symmetry_inputs(a, b, c, K);
  // (eps_x f)^r = eps_x f^r
  if (!ctx.expect_seq(power_int(pointwise_mul(in.eps_a, in.bc), r), pointwise_mul(in.eps_a, power_int(in.bc, r)),
                      {{"part", 0}}))
    return;
  auto bc_r = power_int(in.bc, r);
  auto lhs1 = bullet(pointwise_mul(in.eps_a, bc_r), pointwise_mul(in.eps_b, power_int(in.bac, r)));
  auto rhs1 = bullet(pointwise_mul(in.eps_b, bc_r), pointwise_mul(in.eps_a, power_int(in.bbc, r)));
  if (!ctx.expect_seq(lhs1, rhs1, {{"part", 1}})) return;
  const Rat ar = pow(a, r), br = pow(b, r);
  auto lhs2 = scale(br, bullet(pointwise_mul(in.eps_a, bc_r), pointwise_mul(in.eps_b, power_int(in.sac, r))));
  auto rhs2 = scale(ar, bullet(pointwise_mul(in.eps_b, bc_r), pointwise_mul(in.eps_a, power_int(in.sbc, r))));
  if (!ctx.expect_seq(lhs2, rhs2, {{"part", 2}})) ctx.note("the sigma^r identity holds for c = 0");
}

void run_cor9(Ctx& ctx) {
  long r = ctx.get_long("r", 2);
  if (r < 1) throw Error(Errc::invalid_argument, "cor9 needs r >= 1");
  Abc p = sample_abc(ctx, false);
  if (p.c) cor9_body<Rat>(ctx, p.a, p.b, *p.c, r);
  else cor9_body<RatPoly>(ctx, p.a, p.b, RatPoly::x(), r);
}

// ---- unit-group identities ------------------------------------------------

void run_prop10(Ctx& c, const Seq& f, const Seq& g2) {
  const std::size_t K = f.depth();
  Seq I = ones_like<Rat>(K);
  Seq F = bullet(I, f);
  Seq g1 = bullet(I, g2);
  if (!c.expect_seq(bullet(f, g1), bullet(F, g2), {{"part", 1}})) return;
  Seq solved = bullet(inverse(f), bullet(F, g2));
  c.expect_seq(solved, g1, {{"part", 2}});
}

void run_eq31(Ctx& c, const Seq& f, long m, long n) {
  if (m < 0 || n < 0) throw Error(Errc::invalid_argument, "eq31 needs m, n >= 0");
  const std::size_t K = f.depth();
  Seq g1(K), g2(K);
  for (std::size_t s = 0; s <= K; ++s) {
    const long t = m + n + static_cast<long>(s);
    g1[s] = 1 / (Rat(t + 1) * as_rat(binomial(t, m)));
    g2[s] = sign(s) / (Rat(t + 1) * as_rat(binomial(t, n)));
  }
  Seq I = ones_like<Rat>(K);
  if (!c.expect_seq(g1, bullet(I, g2), {{"m", m}, {"n", n}, {"part", 1}})) return;
  Seq F = bullet(I, f);
  for (std::size_t s = 0; s <= K; ++s) {
    Rat lhs(0), rhs(0);
    for (std::size_t i = 0; i <= s; ++i) {
      const long t = m + n + static_cast<long>(s - i);
      Rat bin_si = as_rat(binomial(s, i));
      lhs += bin_si * f[i] / (Rat(t + 1) * as_rat(binomial(t, m)));
      rhs += bin_si * sign(s - i) * F[i] / (Rat(t + 1) * as_rat(binomial(t, n)));
    }
    if (!c.expect({{"m", m}, {"n", n}, {"part", 2}, {"s", static_cast<long>(s)}}, lhs, rhs)) return;
  }
}

void run_eq32(Ctx& c, const Seq& f) {
  const std::size_t K = f.depth();
  Seq B = bernoulli(K);
  Seq F = binomial_transform(f);
  for (std::size_t s = 0; s <= K; ++s) {
    Rat lhs(0), rhs(0);
    for (std::size_t i = 0; i <= s; ++i) {
      Rat w = as_rat(binomial(s, i)) * B[s - i];
      lhs += w * sign(s - i) * f[i];
      rhs += w * F[i];
    }
    if (!c.expect({{"s", static_cast<long>(s)}}, lhs, rhs)) return;
  }
}

void run_eq25(Ctx& c, const Seq& f, const Seq& g) {
  const std::size_t K = f.depth();
  Seq xi = make_named<Rat>(Named::fact, K);
  if (!c.expect_seq(pointwise_mul(xi, cauchy(f, g)), bullet(pointwise_mul(xi, f), pointwise_mul(xi, g)), {{"part", 1}}))
    return;
  c.expect_seq(pointwise_mul(xi, cauchy(pointwise_div(f, xi), pointwise_div(g, xi))), bullet(f, g), {{"part", 2}});
}

void run_prop2(Ctx& c) {
  const std::size_t K = c.depth();
  Seq f = c.random_unit(K);
  Seq F = binomial_transform(f);
  for (std::size_t k = 0; k <= K; ++k) {
    Rat direct(0);
    for (std::size_t m = 0; m <= k; ++m) direct += as_rat(binomial(k, m)) * f[m];
    if (!c.expect({{"part", 1}, {"k", static_cast<long>(k)}}, F[k], direct)) return;
  }
  c.expect_seq(binomial_invert(F), f, {{"part", 2}});
}

void run_norlund_closed_form(Ctx& c) {
  std::vector<std::pair<long, long>> pq;
  auto p_opt = c.opt_long("p");
  auto q_opt = c.opt_long("q");
  if (p_opt || q_opt) {
    if (!p_opt || !q_opt) throw Error(Errc::invalid_argument, "norlund-closed-form takes both p and q");
    if (*q_opt < 1) throw Error(Errc::invalid_argument, "norlund-closed-form needs q >= 1");
    pq.emplace_back(*p_opt, *q_opt);
  } else {
    long samples = c.get_long("samples", 5);
    std::uniform_int_distribution<long> dist(1, 9);
    std::string listed;
    for (long i = 0; i < samples; ++i) {
      pq.emplace_back(dist(c.rng()), dist(c.rng()));
      listed += (i ? " " : "") + std::to_string(pq.back().first) + "/" + std::to_string(pq.back().second);
    }
    c.record("pairs", listed);
  }
  c.report.depth = 4;
  for (auto [p, qq] : pq) {
    Seq got = norlund(p, qq, 4);
    const Rat P(p), Q(qq);
    std::array<Rat, 5> want = {Rat(1), Rat(-P / (2 * Q)), Rat(P * (3 * P - Q) / (12 * Q * Q)),
                               Rat(-P * P * (P - Q) / (8 * Q * Q * Q)),
                               Rat(P * (15 * P * P * P - 30 * P * P * Q + 5 * P * Q * Q + 2 * Q * Q * Q) / (240 * Q * Q * Q * Q))};
    for (std::size_t k = 0; k <= 4; ++k)
      if (!c.expect({{"p", p}, {"q", qq}, {"k", static_cast<long>(k)}}, got[k], want[k])) return;
  }
}

// ---- Dirichlet side -------------------------------------------------------

DirSeq random_dirseq(Ctx& c, std::size_t bound) {
  DirSeq f(bound);
  f(1) = c.random_nonzero_rat();
  for (std::size_t k = 2; k <= bound; ++k) f(k) = c.random_rat();
  return f;
}

void run_eq26(Ctx& c) {
  const std::size_t N = c.depth();
  if (N < 1) throw Error(Errc::invalid_argument, "eq26-iso needs a bound >= 1");
  DirSeq gamma = prime_exponent_factorial(N);
  DirSeq f = random_dirseq(c, N), g = random_dirseq(c, N);
  DirSeq lhs = gamma_twisted_conv(f, g, gamma);
  DirSeq rhs = pointwise_mul(gamma, dirichlet_conv(pointwise_div(f, gamma), pointwise_div(g, gamma)));
  for (std::size_t k = 1; k <= N; ++k)
    if (!c.expect({{"k", static_cast<long>(k)}}, lhs(k), rhs(k))) return;
}

void run_eq29(Ctx& c) {
  auto ns = range_or_single(c, "n", 1, 30);
  auto ks = range_or_single(c, "k", 0, 6);
  long max_k = 0;
  for (long n : ns)
    for (long k : ks) {
      if (n < 1 || k < 0) throw Error(Errc::invalid_argument, "eq29 needs n >= 1 and k >= 0");
      max_k = std::max(max_k, k);
      CoprimePowerSum s = coprime_power_sum_identity(n, k);
      if (!c.expect({{"n", n}, {"k", k}, {"side", 1}}, s.brute, s.cauchy_side)) return;
      if (!c.expect({{"n", n}, {"k", k}, {"side", 2}}, s.brute, s.dirichlet_side)) return;
    }
  c.report.depth = static_cast<std::size_t>(max_k + 1);
  c.note("side 1: (1/(k+1)) (M_{0,n} . (eps_n - e))(k+1), plus 1 when n = 1 and k > 0");
  c.note("side 2: sum_{d|n} mu(d) d^k S_{n/d}(k)");
}

// ---- registry -------------------------------------------------------------

struct Entry {
  const char* name;
  std::size_t default_depth;
  std::function<void(Ctx&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"eq3", kDefaultDepth, run_eq3},
      {"prop2", kDefaultDepth, run_prop2},
      {"eq5", kDefaultDepth, run_eq5},
      {"eq6", kDefaultDepth, run_eq6},
      {"eq7", kDefaultDepth, run_eq7},
      {"eq8", kDefaultDepth, run_eq8},
      {"eq8-reflection", kDefaultDepth, run_eq8_reflection},
      {"eq8-derivative", kDefaultDepth, run_eq8_derivative},
      {"eq9", 10, run_eq9},
      {"eq9-k0-a", 0, run_eq9_k0_a},
      {"eq9-k0-b", 0, run_eq9_k0_b},
      {"faulhaber", kDefaultDepth, run_faulhaber},
      {"powersum-sigma-form", kDefaultDepth, run_powersum_sigma_form},
      {"carlitz", kDefaultDepth, run_carlitz},
      {"gould12", kDefaultDepth, [](Ctx& c) { run_gould12(c, c.random_unit(c.depth())); }},
      {"eq13", kDefaultDepth, [](Ctx& c) { run_eq13(c, c.random_unit(c.depth())); }},
      {"thm5-forward", kDefaultDepth, [](Ctx& c) { run_thm5_forward(c, make_test_sequence(c, c.depth())); }},
      {"thm5-converse", kDefaultDepth, [](Ctx& c) { run_thm5_converse(c, make_test_sequence(c, c.depth())); }},
      {"eq15", kDefaultDepth, [](Ctx& c) { run_eq15(c, make_test_sequence(c, c.depth())); }},
      {"eq16", kDefaultDepth, run_eq16},
      {"eq18", kDefaultDepth, [](Ctx& c) { run_eq18(c, make_test_sequence(c, c.depth())); }},
      {"eq19", kDefaultDepth, [](Ctx& c) { run_eq19(c, c.random_unit(c.depth())); }},
      {"eq20", kDefaultDepth, run_eq20},
      {"eq21", kDefaultDepth, run_eq21},
      {"eq22", kDefaultDepth, run_eq22},
      {"eq22-general", kDefaultDepth, run_eq22_general},
      {"eq23", kDefaultDepth, run_eq23},
      {"tuenter", kDefaultDepth, run_tuenter},
      {"eq24", kDefaultDepth, run_eq24},
      {"cor9", 8, run_cor9},
      {"prop10", kDefaultDepth,
       [](Ctx& c) {
         Seq f = c.random_unit(c.depth());
         run_prop10(c, f, c.random_unit(c.depth()));
       }},
      {"eq31", kDefaultDepth,
       [](Ctx& c) {
         Seq f = c.random_unit(c.depth());
         auto ms = range_or_single(c, "m", 0, 3);
         auto ns = range_or_single(c, "n", 0, 3);
         for (long m : ms)
           for (long n : ns) {
             run_eq31(c, f, m, n);
             if (c.failed()) return;
           }
       }},
      {"eq32", kDefaultDepth, [](Ctx& c) { run_eq32(c, c.random_unit(c.depth())); }},
      {"eq25-iso", kDefaultDepth,
       [](Ctx& c) {
         Seq f = c.random_unit(c.depth());
         run_eq25(c, f, c.random_unit(c.depth()));
       }},
      {"eq26-iso", 64, run_eq26},
      {"eq29", 0, run_eq29},
      {"norlund-closed-form", 4, run_norlund_closed_form},
  };
  return entries;
}

IdentityReport finish(Ctx& c) { return std::move(c.report); }

}  // namespace

std::vector<std::string> registered_identities() {
  std::vector<std::string> out;
  for (const auto& e : registry()) out.emplace_back(e.name);
  return out;
}

IdentityReport check(std::string_view name, const Params& params, std::optional<std::size_t> depth) {
  for (const auto& entry : registry()) {
    if (name != entry.name) continue;
    Ctx ctx(entry.name, params, depth.value_or(entry.default_depth));
    entry.run(ctx);
    return finish(ctx);
  }
  throw Error(Errc::unknown_name, "no identity named '" + std::string(name) + "'");
}

Seq symmetric_from_even(const Seq& even_part) {
  Seq h = even_part;
  for (std::size_t k = 1; k <= h.depth(); k += 2) h[k] = 0;
  return pointwise_mul(make_named<Rat>(Named::nu, h.depth()), bullet(euler1(h.depth()), h));
}

#define ARCONV_EXPLICIT_CHECK(fn, label, ...)        \
  {                                                  \
    Ctx ctx(label, {}, f.depth());                   \
    fn(ctx, __VA_ARGS__);                            \
    return finish(ctx);                              \
  }

IdentityReport check_carlitz(const Seq& b) {
  Ctx ctx("carlitz", {}, b.depth());
  const long K = static_cast<long>(b.depth());
  std::vector<std::pair<long, long>> pairs;
  for (long m = 0; m <= K; ++m)
    for (long n = 0; m + n <= K; ++n) pairs.emplace_back(m, n);
  carlitz_pairs(ctx, b, pairs);
  return finish(ctx);
}

IdentityReport check_gould12(const Seq& f) ARCONV_EXPLICIT_CHECK(run_gould12, "gould12", f)
IdentityReport check_thm5_forward(const Seq& f) ARCONV_EXPLICIT_CHECK(run_thm5_forward, "thm5-forward", f)
IdentityReport check_thm5_converse(const Seq& f) ARCONV_EXPLICIT_CHECK(run_thm5_converse, "thm5-converse", f)
IdentityReport check_eq15(const Seq& f) ARCONV_EXPLICIT_CHECK(run_eq15, "eq15", f)
IdentityReport check_eq31(const Seq& f, long m, long n) ARCONV_EXPLICIT_CHECK(run_eq31, "eq31", f, m, n)
IdentityReport check_eq32(const Seq& f) ARCONV_EXPLICIT_CHECK(run_eq32, "eq32", f)
IdentityReport check_prop10(const Seq& f, const Seq& g2) ARCONV_EXPLICIT_CHECK(run_prop10, "prop10", f, g2)
IdentityReport check_eq25(const Seq& f, const Seq& g) ARCONV_EXPLICIT_CHECK(run_eq25, "eq25-iso", f, g)

#undef ARCONV_EXPLICIT_CHECK

}  // namespace arconv
