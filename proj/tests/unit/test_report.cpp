#include <doctest.h>

#include <nlohmann/json.hpp>

#include "siegel/golden.hpp"
#include "siegel/report.hpp"

using namespace siegel;

TEST_CASE("embedded reference data is complete and reproduced") {
  CHECK(golden_cells().size() == 960);
  CHECK(verify_golden().empty());
}

TEST_CASE("csv rendering") {
  TableRequest req;
  req.d1 = 1;
  req.d2 = 15;
  req.k_min = req.k_max = 5;
  req.j_min = req.j_max = 0;
  req.format = TableFormat::Csv;
  CHECK(render_table(req) == "d1,d2,k,j,dim,validity\n1,15,5,0,4,proven\n");

  req.d1 = 6;
  req.d2 = 1;
  req.j_min = req.j_max = 1;  // odd j renders as 0
  CHECK(render_table(req) == "d1,d2,k,j,dim,validity\n6,1,5,1,0,proven\n");

  req.k_min = 0;
  req.k_max = 4;
  req.j_min = req.j_max = 0;
  const std::string out = render_table(req);
  CHECK(out.find("6,1,1,0,-1,formal") != std::string::npos);
}

TEST_CASE("renderings agree cell for cell") {
  TableRequest req;
  req.d1 = 3;
  req.d2 = 2;
  req.k_min = 0;
  req.k_max = 9;
  req.j_min = 0;
  req.j_max = 4;

  req.format = TableFormat::Csv;
  const std::string csv = render_table(req);
  CHECK(csv == render_table(req));  // deterministic

  req.format = TableFormat::Json;
  const auto parsed = nlohmann::json::parse(render_table(req));
  std::size_t idx = 0;
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    const auto& rec = parsed.at(idx++);
    std::ostringstream expect;
    expect << rec["d1"].get<Int>() << ',' << rec["d2"].get<Int>() << ','
           << rec["k"].get<Int>() << ',' << rec["j"].get<Int>() << ','
           << rec["dim"].get<Int>() << ','
           << rec["validity"].get<std::string>();
    CHECK(line == expect.str());
  }
  CHECK(idx == parsed.size());
}

TEST_CASE("json breakdown uses exact fraction strings") {
  TableRequest req;
  req.d1 = 6;
  req.d2 = 1;
  req.k_min = req.k_max = 5;
  req.j_min = req.j_max = 0;
  req.format = TableFormat::Json;
  req.include_breakdown = true;
  const auto parsed = nlohmann::json::parse(render_table(req));
  const auto& b = parsed.at(0)["breakdown"];
  CHECK(b["h1"] == "35/72");
  CHECK(b["h7"] == "43/36");
  CHECK(b["i2"] == "-1/4");
  CHECK(b["total"] == "0");
}

TEST_CASE("latex rendering matches the row/column orientation") {
  TableRequest req;
  req.d1 = 6;
  req.d2 = 1;
  req.k_min = 0;
  req.k_max = 15;
  req.j_min = 0;
  req.j_max = 8;
  req.format = TableFormat::Latex;
  const std::string out = render_table(req);
  CHECK(out.find("\\begin{tabular}") != std::string::npos);
  CHECK(out.find("$j\\backslash k$") != std::string::npos);
  // j = 0 row of the Gamma(6,1) reference table.
  CHECK(out.find("0 & 0 & -1 & 0 & -1 & 2 & 0 & 4 & 2 & 8 & 5 & 15 & 10 & "
                 "25 & 15 & 34 & 26 \\\\") != std::string::npos);
}

TEST_CASE("render_table validates input") {
  TableRequest req;
  req.d1 = 4;
  req.d2 = 3;
  CHECK_THROWS_AS(render_table(req), LevelError);
  req.d1 = 6;
  req.d2 = 1;
  req.k_min = 5;
  req.k_max = 3;
  CHECK_THROWS_AS(render_table(req), std::invalid_argument);
}

TEST_CASE("oracle crosscheck helper") {
  CHECK(crosscheck_oracle(29, 20).empty());
}
