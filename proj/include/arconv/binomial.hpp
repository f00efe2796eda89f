#pragma once

#include "arconv/rat.hpp"

#include <memory>
#include <vector>

namespace arconv {

/// Pascal triangle rows 0..depth, built by the additive recurrence.
class BinomialTable {
 public:
  explicit BinomialTable(std::size_t depth);

  std::size_t depth() const { return rows_.size() - 1; }
  /// C(n, k) for k <= n <= depth.
  const Int& operator()(std::size_t n, std::size_t k) const { return rows_[n][k]; }

 private:
  std::vector<std::vector<Int>> rows_;
};

/// Shared, immutable table covering at least `depth`. Safe to call from
/// several threads; the returned table is never mutated.
std::shared_ptr<const BinomialTable> binomials(std::size_t depth);

}  // namespace arconv
