#include "siegel/golden.hpp"

#include <charconv>
#include <stdexcept>
#include <string_view>

#include "golden_csv.hpp"

namespace siegel {

namespace {

Int parse_int(std::string_view s) {
  Int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::runtime_error("golden table: bad integer field '" +
                             std::string(s) + "'");
  return value;
}

std::vector<GoldenCell> parse_csv(std::string_view csv) {
  std::vector<GoldenCell> cells;
  bool header = true;
  while (!csv.empty()) {
    const std::size_t eol = csv.find('\n');
    std::string_view line = csv.substr(0, eol);
    csv.remove_prefix(eol == std::string_view::npos ? csv.size() : eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    Int fields[5];
    for (int f = 0; f < 5; ++f) {
      const std::size_t comma = line.find(',');
      if ((comma == std::string_view::npos) != (f == 4))
        throw std::runtime_error("golden table: malformed row");
      fields[f] = parse_int(line.substr(0, comma));
      if (f < 4) line.remove_prefix(comma + 1);
    }
    cells.push_back({fields[0], fields[1], fields[2], fields[3], fields[4]});
  }
  return cells;
}

}  // namespace

const std::vector<GoldenCell>& golden_cells() {
  static const std::vector<GoldenCell> cells = parse_csv(detail::golden_csv);
  return cells;
}

}  // namespace siegel
