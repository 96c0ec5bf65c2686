#pragma once

#include "siegel/contributions.hpp"

namespace siegel {

/// PROVEN: k >= 5, where the formula is a theorem and the result is a
/// genuine (nonnegative) dimension. FORMAL: k <= 4, formal substitution
/// into the same expression; the value may be negative.
enum class Validity { Proven, Formal };

struct DimensionResult {
  BigInt dimension;
  ContributionBreakdown breakdown;
  Validity validity = Validity::Proven;
};

/// dim S_{k,j}(Gamma(D1,D2)). For odd j the dimension is 0 (the group
/// contains -1) and no terms are evaluated. For even j the fifteen terms are
/// summed and the total is certified to be an exact integer; a non-integral
/// total throws std::logic_error with all fifteen terms in the message.
DimensionResult dim_cusp_forms(Weight w, const Level& L,
                               const EvalVariant& v = {});

/// Per-term report for even j; throws std::domain_error for odd j.
ContributionBreakdown breakdown(Weight w, const Level& L,
                                const EvalVariant& v = {});

}  // namespace siegel
