#include "arconv/bfile.hpp"

#include <cctype>
#include <sstream>

namespace arconv {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_integer(std::string_view token, Int& out) {
  if (token.empty()) return false;
  std::size_t start = token[0] == '-' || token[0] == '+' ? 1 : 0;
  if (start == token.size()) return false;
  for (std::size_t i = start; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  std::string digits(token[0] == '+' ? token.substr(1) : token);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

BfileEntries parse_bfile(std::string_view text) {
  BfileEntries out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    std::size_t gap = line.find_first_of(" \t");
    auto fail = [&](const std::string& why) -> void {
      throw Error(Errc::parse_error, "b-file line " + std::to_string(line_no) + ": " + why);
    };
    if (gap == std::string_view::npos) fail("expected \"index value\"");
    std::string_view idx_tok = line.substr(0, gap);
    std::string_view val_tok = trim(line.substr(gap));
    if (val_tok.find_first_of(" \t") != std::string_view::npos) fail("trailing text after value");
    Int idx, val;
    if (!parse_integer(idx_tok, idx) || !idx.fits_slong_p()) fail("bad index '" + std::string(idx_tok) + "'");
    if (!parse_integer(val_tok, val)) fail("bad value '" + std::string(val_tok) + "'");
    out.emplace_back(idx.get_si(), std::move(val));
  }
  return out;
}

Int part_of(const Rat& r, BfilePart part) {
  return part == BfilePart::numerator ? Int(r.get_num()) : Int(r.get_den());
}

std::string to_bfile(const Seq& f, BfilePart part) {
  std::ostringstream os;
  for (std::size_t k = 0; k < f.size(); ++k) os << k << ' ' << part_of(f[k], part) << '\n';
  return os.str();
}

BfileComparison compare_bfile(const Seq& f, const BfileEntries& entries, BfilePart part) {
  BfileComparison out;
  const long last = static_cast<long>(f.depth());
  for (const auto& [idx, value] : entries) {
    if (idx < 0 || idx > last) continue;
    if (!out.overlap) out.overlap.emplace(idx, idx);
    out.overlap->first = std::min(out.overlap->first, idx);
    out.overlap->second = std::max(out.overlap->second, idx);
    ++out.compared;
    Int actual = part_of(f[static_cast<std::size_t>(idx)], part);
    if (!out.mismatch && actual != value) out.mismatch = BfileMismatch{idx, value, actual};
  }
  return out;
}

}  // namespace arconv
