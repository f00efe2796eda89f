#include "arconv/binomial.hpp"

#include <mutex>

namespace arconv {

BinomialTable::BinomialTable(std::size_t depth) : rows_(depth + 1) {
  for (std::size_t n = 0; n <= depth; ++n) {
    auto& row = rows_[n];
    row.resize(n + 1);
    row[0] = 1;
    row[n] = 1;
    for (std::size_t k = 1; k < n; ++k) row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
  }
}

std::shared_ptr<const BinomialTable> binomials(std::size_t depth) {
  static std::mutex mu;
  static std::shared_ptr<const BinomialTable> cached;
  std::lock_guard lock(mu);
  if (!cached || cached->depth() < depth) {
    // Grow geometrically so repeated small increases stay cheap.
    std::size_t target = cached ? std::max(depth, 2 * cached->depth()) : std::max<std::size_t>(depth, 64);
    cached = std::make_shared<const BinomialTable>(target);
  }
  return cached;
}

}  // namespace arconv
