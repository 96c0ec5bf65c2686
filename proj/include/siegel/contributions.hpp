#pragma once

#include <array>

#include "siegel/level.hpp"
#include "siegel/number_theory.hpp"

namespace siegel {

/// Weight (k, j) of the representation det^k (x) Sym_j.
struct Weight {
  Int k = 0;
  Int j = 0;
};

/// Alternate readings of the formula's ambiguous clauses. The defaults are
/// the pinned readings; the non-default settings exist so the test suite can
/// demonstrate that the reference tables actually constrain each decision.
struct EvalVariant {
  /// Swap which parity of #D(5;12) selects case (I) vs (III) for the A and
  /// B columns of the H12 table.
  bool swap_h12_case_binding = false;
  /// Take the splitting symbol of 2 in Q(sqrt(-3)) to be +1 instead of -1.
  bool eisenstein_splits_at_two = false;
  /// Let the H6/H7 divisor sums range over all divisors (with multiplicity)
  /// instead of squarefree divisors only.
  bool h6_all_divisors = false;
};

/// The fifteen terms H1..H12, I1..I3 and their sum.
struct ContributionBreakdown {
  std::array<Rational, 12> h{};
  std::array<Rational, 3> i{};
  Rational total = 0;
};

// Each term evaluator requires j even and throws std::domain_error
// ("contributions defined for even j only") otherwise. All are pure and
// exact; k in [0,4] evaluates formally.
Rational h1(Weight w, const Level& L, const EvalVariant& v = {});
Rational h2(Weight w, const Level& L, const EvalVariant& v = {});
Rational h3(Weight w, const Level& L, const EvalVariant& v = {});
Rational h4(Weight w, const Level& L, const EvalVariant& v = {});
Rational h5(Weight w, const Level& L, const EvalVariant& v = {});
Rational h6(Weight w, const Level& L, const EvalVariant& v = {});
Rational h7(Weight w, const Level& L, const EvalVariant& v = {});
Rational h8(Weight w, const Level& L, const EvalVariant& v = {});
Rational h9(Weight w, const Level& L, const EvalVariant& v = {});
Rational h10(Weight w, const Level& L, const EvalVariant& v = {});
Rational h11(Weight w, const Level& L, const EvalVariant& v = {});
Rational h12(Weight w, const Level& L, const EvalVariant& v = {});
Rational i1(Weight w, const Level& L, const EvalVariant& v = {});
Rational i2(Weight w, const Level& L, const EvalVariant& v = {});
Rational i3(Weight w, const Level& L, const EvalVariant& v = {});

/// Evaluates all fifteen terms; requires j even.
ContributionBreakdown evaluate_contributions(Weight w, const Level& L,
                                             const EvalVariant& v = {});

}  // namespace siegel
