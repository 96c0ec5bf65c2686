#include "siegel/report.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "siegel/oracle.hpp"

namespace siegel {

namespace {

const char* validity_label(Validity v) {
  return v == Validity::Proven ? "proven" : "formal";
}

void check_ranges(const TableRequest& req) {
  if (req.k_min < 0 || req.j_min < 0 || req.k_min > req.k_max ||
      req.j_min > req.j_max)
    throw std::invalid_argument("table request: ranges must be nonempty and "
                                "nonnegative");
}

nlohmann::json breakdown_json(const ContributionBreakdown& b) {
  nlohmann::json out;
  for (std::size_t t = 0; t < b.h.size(); ++t)
    out["h" + std::to_string(t + 1)] = to_fraction_string(b.h[t]);
  for (std::size_t t = 0; t < b.i.size(); ++t)
    out["i" + std::to_string(t + 1)] = to_fraction_string(b.i[t]);
  out["total"] = to_fraction_string(b.total);
  return out;
}

}  // namespace

std::string to_fraction_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string render_table(const TableRequest& req) {
  check_ranges(req);
  const Level L = make_level(req.d1, req.d2);

  // One grid pass shared by every format; rows j ascending, columns k
  // ascending, so all renderings agree cell for cell.
  struct Cell {
    DimensionResult r;
  };
  std::vector<std::vector<Cell>> grid;
  for (Int j = req.j_min; j <= req.j_max; ++j) {
    std::vector<Cell> row;
    for (Int k = req.k_min; k <= req.k_max; ++k)
      row.push_back({dim_cusp_forms({k, j}, L)});
    grid.push_back(std::move(row));
  }

  std::ostringstream os;
  switch (req.format) {
    case TableFormat::Plain: {
      std::size_t width = 3;
      for (const auto& row : grid)
        for (const auto& c : row)
          width = std::max(width, c.r.dimension.str().size());
      os << "dim S_{k,j}(Gamma(" << req.d1 << "," << req.d2 << "))\n";
      os << std::setw(5) << "j\\k";
      for (Int k = req.k_min; k <= req.k_max; ++k)
        os << ' ' << std::setw(static_cast<int>(width)) << k;
      os << '\n';
      for (Int j = req.j_min; j <= req.j_max; ++j) {
        os << std::setw(5) << j;
        for (const auto& c : grid[static_cast<std::size_t>(j - req.j_min)])
          os << ' ' << std::setw(static_cast<int>(width))
             << c.r.dimension.str();
        os << '\n';
      }
      break;
    }
    case TableFormat::Csv: {
      os << "d1,d2,k,j,dim,validity\n";
      for (Int j = req.j_min; j <= req.j_max; ++j)
        for (Int k = req.k_min; k <= req.k_max; ++k) {
          const auto& c =
              grid[static_cast<std::size_t>(j - req.j_min)]
                  [static_cast<std::size_t>(k - req.k_min)];
          os << req.d1 << ',' << req.d2 << ',' << k << ',' << j << ','
             << c.r.dimension << ',' << validity_label(c.r.validity) << '\n';
        }
      break;
    }
    case TableFormat::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (Int j = req.j_min; j <= req.j_max; ++j)
        for (Int k = req.k_min; k <= req.k_max; ++k) {
          const auto& c =
              grid[static_cast<std::size_t>(j - req.j_min)]
                  [static_cast<std::size_t>(k - req.k_min)];
          nlohmann::json rec{{"d1", req.d1},
                             {"d2", req.d2},
                             {"k", k},
                             {"j", j},
                             {"validity", validity_label(c.r.validity)}};
          // Dimensions can outgrow 64-bit integers at large weights; keep
          // JSON numeric only when safe.
          const BigInt& dim = c.r.dimension;
          if (dim >= std::numeric_limits<std::int64_t>::min() &&
              dim <= std::numeric_limits<std::int64_t>::max())
            rec["dim"] = static_cast<std::int64_t>(dim);
          else
            rec["dim"] = dim.str();
          if (req.include_breakdown)
            rec["breakdown"] = breakdown_json(c.r.breakdown);
          arr.push_back(std::move(rec));
        }
      os << arr.dump(2) << '\n';
      break;
    }
    case TableFormat::Latex: {
      os << "\\begin{tabular}{c|";
      for (Int k = req.k_min; k <= req.k_max; ++k) os << 'r';
      os << "}\n$j\\backslash k$";
      for (Int k = req.k_min; k <= req.k_max; ++k) os << " & " << k;
      os << " \\\\ \\hline\n";
      for (Int j = req.j_min; j <= req.j_max; ++j) {
        os << j;
        for (const auto& c : grid[static_cast<std::size_t>(j - req.j_min)])
          os << " & " << c.r.dimension;
        os << " \\\\\n";
      }
      os << "\\end{tabular}\n";
      break;
    }
  }
  return os.str();
}

std::vector<GoldenMismatch> verify_golden(const EvalVariant& v) {
  std::vector<GoldenMismatch> mismatches;
  for (const GoldenCell& cell : golden_cells()) {
    const Level L = make_level(cell.d1, cell.d2);
    // Compare against the raw rational total: a mutated variant may produce
    // a non-integral sum, which must count as a mismatch, not an abort.
    const ContributionBreakdown b =
        evaluate_contributions({cell.k, cell.j}, L, v);
    if (b.total != cell.value) mismatches.push_back({cell, b.total, b});
  }
  return mismatches;
}

std::vector<CrosscheckMismatch> crosscheck_oracle(Int pmax, Int kmax) {
  std::vector<CrosscheckMismatch> mismatches;
  for (Int p = 3; p <= pmax; p += 2) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    const Level L = make_level(1, 2 * p);
    for (Int k = 0; k <= kmax; ++k) {
      const Rational expected = oracle::intro_dim(k, p);
      const DimensionResult got = dim_cusp_forms({k, 0}, L);
      if (expected != got.dimension)
        mismatches.push_back({p, k, expected, got.dimension});
    }
  }
  return mismatches;
}

}  // namespace siegel
