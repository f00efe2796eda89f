#include "arconv/table1.hpp"

#include "arconv/special.hpp"
#include "arconv/units.hpp"

#include "json.hpp"

#include <iomanip>
#include <sstream>

namespace arconv {

namespace {

std::vector<Rat> row(std::initializer_list<std::pair<long, long>> cells) {
  std::vector<Rat> out;
  for (auto [n, d] : cells) out.push_back(make_rat(Int(n), Int(d)));
  return out;
}

}  // namespace

const std::vector<Rat>& table1_printed_row(long m) {
  static const std::vector<std::vector<Rat>> rows = {
      row({{1, 1}, {-1, 4}, {1, 48}, {1, 64}, {-3, 1280}, {-19, 3072}, {79, 86016}, {275, 49152}, {-2339, 2949120}}),
      row({{1, 1}, {-1, 6}, {1, 54}, {7, 324}, {2, 3645}, {-197, 13122}, {-683, 61236}, {1009, 59049},
           {261203, 5314410}}),
      row({{1, 1}, {-1, 8}, {7, 384}, {39, 2048}, {-2311, 491520}, {-9471, 524288}, {254713, 176160768},
           {16744565, 402653184}, {1127877731L, 96636764160L}}),
      row({{1, 1}, {-1, 10}, {13, 750}, {97, 6250}, {-237, 31250}, {-69061, 4687500}, {9768883, 820312500},
           {99676471, 2929687500L}, {-827331922, 18310546875L}}),
  };
  if (m < kTable1MinRoot || m > kTable1MaxRoot) throw Error(Errc::invalid_argument, "table rows cover m = 2..5");
  return rows[static_cast<std::size_t>(m - kTable1MinRoot)];
}

std::vector<Table1Cell> table1() {
  const Seq B = bernoulli(kTable1Depth);
  std::vector<Table1Cell> out;
  for (long m = kTable1MinRoot; m <= kTable1MaxRoot; ++m) {
    Seq root = mth_root(B, m);
    const auto& printed = table1_printed_row(m);
    for (long k = 0; k <= kTable1Depth; ++k)
      out.push_back({m, k, root[static_cast<std::size_t>(k)], printed[static_cast<std::size_t>(k)]});
  }
  return out;
}

std::string format_table1(const std::vector<Table1Cell>& cells) {
  std::ostringstream os;
  os << std::left << std::setw(3) << "m" << std::setw(3) << "k" << std::setw(24) << "computed" << std::setw(24)
     << "printed"
     << "status\n";
  std::size_t agree = 0;
  for (const auto& c : cells) {
    os << std::setw(3) << c.m << std::setw(3) << c.k << std::setw(24) << to_string(c.computed) << std::setw(24)
       << to_string(c.printed) << (c.agree() ? "agree" : "DIFFER") << '\n';
    agree += c.agree();
  }
  os << agree << " of " << cells.size() << " cells agree\n";
  return os.str();
}

std::string table1_json(const std::vector<Table1Cell>& cells) {
  using json = nlohmann::ordered_json;
  json arr = json::array();
  for (const auto& c : cells) {
    json cell;
    cell["m"] = c.m;
    cell["k"] = c.k;
    cell["computed"] = to_string(c.computed);
    cell["printed"] = to_string(c.printed);
    cell["agree"] = c.agree();
    arr.push_back(std::move(cell));
  }
  return arr.dump(2) + "\n";
}

}  // namespace arconv
