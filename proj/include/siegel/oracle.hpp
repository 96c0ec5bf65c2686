#pragma once

#include "siegel/number_theory.hpp"

namespace siegel::oracle {

/// Independent closed form for dim S_{k,0}(Gamma(1, 2p)), p an odd prime.
/// Implemented directly from the scalar-weight special case, not via the
/// fifteen-term engine; used to cross-validate it.
/// Throws std::domain_error if p is 2 or composite.
Rational intro_dim(Int k, Int p);

}  // namespace siegel::oracle
