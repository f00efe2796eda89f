#include "arconv/seq.hpp"

namespace arconv {

Named parse_named(std::string_view name) {
  if (name == "e") return Named::e;
  if (name == "I" || name == "i") return Named::I;
  if (name == "nu") return Named::nu;
  if (name == "xi1") return Named::xi1;
  if (name == "fact") return Named::fact;
  throw Error(Errc::unknown_name, "no named sequence '" + std::string(name) + "'");
}

}  // namespace arconv
