// Command-line surface for exact dimensions of vector-valued Siegel cusp
// forms of degree two on the quaternion unitary groups Gamma(D1, D2).
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "siegel/dimension.hpp"
#include "siegel/oracle.hpp"
#include "siegel/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalidLevel = 2;
constexpr int kExitUsage = 64;

struct Range {
  siegel::Int lo = 0;
  siegel::Int hi = 0;
};

// Accepts "a" or "a..b" (inclusive, nonnegative, a <= b).
Range parse_range(const std::string& text) {
  const auto parse_int = [](const std::string& s) {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size() || v < 0)
      throw std::invalid_argument("bad range bound '" + s + "'");
    return static_cast<siegel::Int>(v);
  };
  const std::size_t dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi)
    throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

const char* validity_suffix(siegel::Validity v) {
  return v == siegel::Validity::Proven ? "proven, k>=5" : "formal, k<=4";
}

void print_breakdown(const siegel::ContributionBreakdown& b) {
  for (std::size_t t = 0; t < b.h.size(); ++t)
    std::cout << "  H" << t + 1 << (t + 1 < 10 ? "  = " : " = ")
              << siegel::to_fraction_string(b.h[t]) << '\n';
  for (std::size_t t = 0; t < b.i.size(); ++t)
    std::cout << "  I" << t + 1 << "  = "
              << siegel::to_fraction_string(b.i[t]) << '\n';
  std::cout << "  total = " << siegel::to_fraction_string(b.total) << '\n';
}

int run_compute(siegel::Int d1, siegel::Int d2, siegel::Int k, siegel::Int j,
                bool with_breakdown) {
  const siegel::Level L = siegel::make_level(d1, d2);
  const siegel::DimensionResult r = siegel::dim_cusp_forms({k, j}, L);
  std::cout << r.dimension << " (" << validity_suffix(r.validity) << ")\n";
  if (with_breakdown) {
    if (j % 2 != 0)
      std::cout << "  (j odd: the space vanishes; no terms evaluated)\n";
    else
      print_breakdown(r.breakdown);
  }
  return kExitOk;
}

int run_table(siegel::Int d1, siegel::Int d2, const std::string& k_text,
              const std::string& j_text, const std::string& format,
              bool with_breakdown) {
  const Range kr = parse_range(k_text);
  const Range jr = parse_range(j_text);
  siegel::TableRequest req;
  req.d1 = d1;
  req.d2 = d2;
  req.k_min = kr.lo;
  req.k_max = kr.hi;
  req.j_min = jr.lo;
  req.j_max = jr.hi;
  req.include_breakdown = with_breakdown;
  if (format == "plain")
    req.format = siegel::TableFormat::Plain;
  else if (format == "csv")
    req.format = siegel::TableFormat::Csv;
  else if (format == "json")
    req.format = siegel::TableFormat::Json;
  else if (format == "latex")
    req.format = siegel::TableFormat::Latex;
  else
    throw std::invalid_argument("unknown format '" + format + "'");
  std::cout << siegel::render_table(req);
  return kExitOk;
}

int run_verify() {
  const auto mismatches = siegel::verify_golden();
  for (const auto& m : mismatches) {
    std::cout << "MISMATCH Gamma(" << m.cell.d1 << "," << m.cell.d2
              << ") k=" << m.cell.k << " j=" << m.cell.j << ": expected "
              << m.cell.value << ", got "
              << siegel::to_fraction_string(m.got) << '\n';
    print_breakdown(m.breakdown);
  }
  const std::size_t total = siegel::golden_cells().size();
  std::cout << total - mismatches.size() << "/" << total << " cells match\n";
  return mismatches.empty() ? kExitOk : kExitMismatch;
}

int run_crosscheck(siegel::Int pmax, siegel::Int kmax) {
  if (pmax < 3) {
    std::cerr << "crosscheck: no odd primes <= " << pmax << '\n';
    return kExitUsage;
  }
  const auto mismatches = siegel::crosscheck_oracle(pmax, kmax);
  for (const auto& m : mismatches)
    std::cout << "MISMATCH p=" << m.p << " k=" << m.k << ": closed form "
              << siegel::to_fraction_string(m.oracle_value) << ", engine "
              << m.engine_value << '\n';
  if (mismatches.empty())
    std::cout << "oracle agrees for all odd primes p <= " << pmax
              << ", k in [0, " << kmax << "]\n";
  return mismatches.empty() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact dimensions of vector-valued Siegel cusp forms of degree two "
      "for the arithmetic groups Gamma(D1,D2)"};
  app.require_subcommand(1);

  siegel::Int d1 = 1, d2 = 1, k = 0, j = 0;
  siegel::Int pmax = 97, kmax = 40;
  std::string k_text = "0..15", j_text = "0..8", format = "plain";
  bool with_breakdown = false;

  auto* compute =
      app.add_subcommand("compute", "Evaluate one dimension dim S_{k,j}");
  compute->add_option("--d1", d1, "First part of the discriminant")
      ->required();
  compute->add_option("--d2", d2, "Second part of the discriminant")
      ->required();
  compute->add_option("--k", k, "Weight k")
      ->required()
      ->check(CLI::NonNegativeNumber);
  compute->add_option("--j", j, "Weight j")
      ->required()
      ->check(CLI::NonNegativeNumber);
  compute->add_flag("--breakdown", with_breakdown,
                    "Print all fifteen terms as exact fractions");

  auto* table = app.add_subcommand("table", "Render a table of dimensions");
  table->add_option("--d1", d1, "First part of the discriminant")->required();
  table->add_option("--d2", d2, "Second part of the discriminant")
      ->required();
  table->add_option("--k", k_text, "Weight k or inclusive range a..b")
      ->capture_default_str();
  table->add_option("--j", j_text, "Weight j or inclusive range a..b")
      ->capture_default_str();
  table->add_option("--format", format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"plain", "csv", "json", "latex"}));
  table->add_flag("--breakdown", with_breakdown,
                  "Include per-term fractions (json format)");

  app.add_subcommand("verify",
                     "Recompute every embedded reference table cell");

  auto* crosscheck = app.add_subcommand(
      "crosscheck", "Compare the engine with the independent closed form "
                    "for Gamma(1,2p), j=0");
  crosscheck->add_option("--pmax", pmax, "Largest prime to test")
      ->capture_default_str();
  crosscheck->add_option("--kmax", kmax, "Largest weight k to test")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) return run_compute(d1, d2, k, j, with_breakdown);
    if (table->parsed())
      return run_table(d1, d2, k_text, j_text, format, with_breakdown);
    if (app.got_subcommand("verify")) return run_verify();
    return run_crosscheck(pmax, kmax);
  } catch (const siegel::LevelError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidLevel;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
}
