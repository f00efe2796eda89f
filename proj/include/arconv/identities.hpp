#pragma once

// Registry of named identity checks. Each check evaluates both sides exactly
// and reports the first index where they differ.

#include "arconv/seq.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace arconv {

using Params = std::map<std::string, std::string>;
using Value = std::variant<Rat, RatPoly>;

/// Coordinates of a failing comparison, e.g. {{"k", 3}} or {{"m", 1}, {"n", 2}}.
using Index = std::vector<std::pair<std::string, long>>;

struct Failure {
  Index index;
  Value lhs;
  Value rhs;
};

struct IdentityReport {
  std::string name;
  Params params;  // effective parameters, including sampled ones and the comparison mode
  std::size_t depth = 0;
  bool pass = true;
  std::optional<Failure> first_failure;  // present exactly when pass is false
  std::vector<std::string> notes;
};

/// Names accepted by check(), in registration order.
std::vector<std::string> registered_identities();

/// Runs the named check. Throws Error(unknown_name) for an unregistered name
/// and Error(invalid_argument) for parameters outside the check's domain.
IdentityReport check(std::string_view name, const Params& params = {},
                     std::optional<std::size_t> depth = std::nullopt);

// Variants taking caller-supplied sequences (the registry draws random ones).

/// Carlitz symmetry for a caller-supplied Bernoulli sequence b, all m + n <= depth(b).
IdentityReport check_carlitz(const Seq& b);
/// sum_i C(n,i) f(m+i) = sum_i C(m,i) (-1)^(m-i) F(n+i), F = I . f, for m + n <= depth(f).
IdentityReport check_gould12(const Seq& f);
/// Both directions of the symmetric-identity characterisation for this f.
IdentityReport check_thm5_forward(const Seq& f);
IdentityReport check_thm5_converse(const Seq& f);
/// Odd values of f rebuilt from even values through E_1.
IdentityReport check_eq15(const Seq& f);
/// The pair g1(s) = 1/((m+n+s+1) C(m+n+s,m)), g2(s) = (-1)^s/((m+n+s+1) C(m+n+s,n)).
IdentityReport check_eq31(const Seq& f, long m, long n);
IdentityReport check_eq32(const Seq& f);
/// f . g1 = F . g2 <=> g1 = I . g2 for the given f, g2.
IdentityReport check_prop10(const Seq& f, const Seq& g2);
/// xi (f o g) = (xi f) . (xi g) and xi ((f/xi) o (g/xi)) = f . g, xi(k) = k!.
IdentityReport check_eq25(const Seq& f, const Seq& g);

/// Sequence with I . f = nu f built from arbitrary even values h(0), h(2), ...:
/// f = nu (E_1 . h).
Seq symmetric_from_even(const Seq& even_part);

}  // namespace arconv
