#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arconv {

enum class Errc {
  depth_mismatch,
  not_a_unit,
  not_invertible_in_ring,
  root_not_representable,
  invalid_argument,
  unknown_name,
  parse_error,
};

constexpr std::string_view errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::depth_mismatch: return "DepthMismatch";
    case Errc::not_a_unit: return "NotAUnit";
    case Errc::not_invertible_in_ring: return "NotInvertibleInRing";
    case Errc::root_not_representable: return "RootNotRepresentable";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::unknown_name: return "UnknownName";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the Errc codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace arconv
