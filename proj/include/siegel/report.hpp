#pragma once

#include <string>
#include <vector>

#include "siegel/dimension.hpp"
#include "siegel/golden.hpp"

namespace siegel {

enum class TableFormat { Plain, Csv, Json, Latex };

struct TableRequest {
  Int d1 = 1, d2 = 1;
  Int k_min = 0, k_max = 0;
  Int j_min = 0, j_max = 0;
  TableFormat format = TableFormat::Csv;
  bool include_breakdown = false;  // honored by the JSON format
};

/// Renders the requested table; deterministic, rows by j ascending and
/// columns (or records) by k ascending. Throws LevelError for invalid
/// (d1, d2) and std::invalid_argument for empty ranges.
std::string render_table(const TableRequest& req);

struct GoldenMismatch {
  GoldenCell cell;
  Rational got;  // may be non-integral under a mutated EvalVariant
  ContributionBreakdown breakdown;
};

/// Recomputes every embedded reference cell; empty result means all match.
std::vector<GoldenMismatch> verify_golden(const EvalVariant& v = {});

struct CrosscheckMismatch {
  Int p, k;
  Rational oracle_value;
  BigInt engine_value;
};

/// Compares the closed-form oracle with the engine at (1, 2p), j = 0, for
/// all odd primes p <= pmax and k in [0, kmax].
std::vector<CrosscheckMismatch> crosscheck_oracle(Int pmax, Int kmax);

/// "num/den" (or "num" when integral) — the exact-fraction wire format.
std::string to_fraction_string(const Rational& r);

}  // namespace siegel
