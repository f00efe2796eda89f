#pragma once

// Text forms of sequences and reports. Output is canonical: rationals reduced
// with positive denominator, JSON keys in a fixed order.

#include "arconv/dirichlet.hpp"
#include "arconv/identities.hpp"
#include "arconv/seq.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace arconv {

using AnySeq = std::variant<Seq, PolySeq>;

struct NamedSeq {
  std::string name;
  AnySeq seq;
};

std::size_t depth_of(const AnySeq& s);

/// {"name","depth","values"}; a rational is ["num","den"], a polynomial is the
/// list of its coefficients (constant term first), the zero polynomial is [].
std::string to_json(const NamedSeq& s);
/// Inverse of to_json. Accepts non-reduced pairs and canonicalises them.
NamedSeq seq_from_json(std::string_view text);

/// "k,numerator,denominator" rows, or "k,polynomial" for polynomial entries.
std::string to_csv(const NamedSeq& s);

/// {"name","bound","index_base":1,"values"}.
std::string to_json(const std::string& name, const DirSeq& f);

/// {"name","params","depth","pass","first_failure","notes"}; first_failure
/// is null on pass, and its index is a bare integer for one-coordinate indices.
std::string to_json(const IdentityReport& report);

std::string value_string(const Value& v);

}  // namespace arconv
