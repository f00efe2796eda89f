#pragma once

// OEIS b-file reading, writing and comparison.

#include "arconv/seq.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arconv {

using BfileEntries = std::vector<std::pair<long, Int>>;

/// "index value" per line; blank lines and lines starting with '#' are skipped.
/// Throws Error(parse_error) naming the first bad line.
BfileEntries parse_bfile(std::string_view text);

enum class BfilePart { numerator, denominator };

/// Numerators carry the sign; denominators are positive.
Int part_of(const Rat& r, BfilePart part);

std::string to_bfile(const Seq& f, BfilePart part);

struct BfileMismatch {
  long index;
  Int expected;  // b-file value
  Int actual;    // from the sequence
};

struct BfileComparison {
  std::optional<std::pair<long, long>> overlap;  // first and last compared index
  std::size_t compared = 0;
  std::optional<BfileMismatch> mismatch;
  bool agree() const { return overlap && !mismatch; }
};

/// Compares the chosen part of f(k) with every b-file entry whose index lies in [0, depth].
BfileComparison compare_bfile(const Seq& f, const BfileEntries& entries, BfilePart part);

}  // namespace arconv
