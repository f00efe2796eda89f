#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace arconv {

/// Exact rational scalar. GMP keeps values canonical (positive denominator,
/// lowest terms) as long as they are built through the helpers below.
using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(long num, long den = 1);
Rat make_rat(const Int& num, const Int& den);

/// Accepts "p", "p/q", "-p/q" (decimal). Throws Error(parse_error).
Rat parse_rat(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

/// r^e for any integer e; negative e requires r != 0.
Rat pow(const Rat& r, long e);

/// The rational s with s^m == r, if one exists (m >= 1).
std::optional<Rat> exact_root(const Rat& r, unsigned long m);

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

}  // namespace arconv
