#include "siegel/dimension.hpp"

#include <sstream>

namespace siegel {

ContributionBreakdown breakdown(Weight w, const Level& L,
                                const EvalVariant& v) {
  return evaluate_contributions(w, L, v);
}

DimensionResult dim_cusp_forms(Weight w, const Level& L,
                               const EvalVariant& v) {
  DimensionResult res;
  if (w.j % 2 != 0) {
    // The group contains -1, which acts by -1 on Sym_j for odd j, so the
    // space vanishes identically; nothing to evaluate.
    res.dimension = 0;
    res.validity = Validity::Proven;
    return res;
  }
  res.breakdown = evaluate_contributions(w, L, v);
  if (denominator(res.breakdown.total) != 1) {
    std::ostringstream msg;
    msg << "non-integral total " << res.breakdown.total << " at k=" << w.k
        << " j=" << w.j << " Gamma(" << L.D1 << "," << L.D2 << "); terms:";
    for (std::size_t t = 0; t < res.breakdown.h.size(); ++t)
      msg << " H" << t + 1 << "=" << res.breakdown.h[t];
    for (std::size_t t = 0; t < res.breakdown.i.size(); ++t)
      msg << " I" << t + 1 << "=" << res.breakdown.i[t];
    throw std::logic_error(msg.str());
  }
  res.dimension = numerator(res.breakdown.total);
  res.validity = w.k >= 5 ? Validity::Proven : Validity::Formal;
  return res;
}

}  // namespace siegel
