#include "arconv/rat.hpp"

#include "arconv/error.hpp"

#include <cctype>

namespace arconv {

Rat make_rat(long num, long den) {
  if (den == 0) throw Error(Errc::invalid_argument, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(Errc::invalid_argument, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Int parse_int(std::string_view s) {
  if (!is_decimal_integer(s))
    throw Error(Errc::parse_error, "not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Int(std::string(s), 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
  return make_rat(num, den);
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat pow(const Rat& r, long e) {
  if (e < 0) {
    if (r == 0) throw Error(Errc::invalid_argument, "zero to a negative power");
    Rat inv = 1 / r;
    return pow(inv, -e);
  }
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(num, den);  // already coprime
}

std::optional<Rat> exact_root(const Rat& r, unsigned long m) {
  if (m == 0) throw Error(Errc::invalid_argument, "root of order zero");
  if (m == 1) return r;
  if (r < 0 && m % 2 == 0) return std::nullopt;
  Int num = abs(r.get_num());
  Int rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), m) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), r.get_den_mpz_t(), m) == 0) return std::nullopt;
  if (r < 0) rn = -rn;
  return Rat(rn, rd);
}

Int binomial(unsigned long n, unsigned long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace arconv
