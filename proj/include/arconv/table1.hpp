#pragma once

// Roots B^{1/m}(k) of the Bernoulli numbers for m = 2..5, k = 0..8, next to a
// reference table of previously published values.

#include "arconv/rat.hpp"

#include <string>
#include <vector>

namespace arconv {

struct Table1Cell {
  long m;
  long k;
  Rat computed;
  Rat printed;
  bool agree() const { return computed == printed; }
};

inline constexpr long kTable1MinRoot = 2;
inline constexpr long kTable1MaxRoot = 5;
inline constexpr long kTable1Depth = 8;

/// Published values for root m, k = 0..8.
const std::vector<Rat>& table1_printed_row(long m);

/// All cells, row-major by m then k.
std::vector<Table1Cell> table1();

/// Aligned text table with one status column per cell and a closing summary line.
std::string format_table1(const std::vector<Table1Cell>& cells);
std::string table1_json(const std::vector<Table1Cell>& cells);

}  // namespace arconv
