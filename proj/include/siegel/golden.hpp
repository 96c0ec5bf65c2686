#pragma once

#include <vector>

#include "siegel/number_theory.hpp"

namespace siegel {

/// One cell of the reference tables: dim S_{k,j}(Gamma(d1,d2)) = value.
struct GoldenCell {
  Int d1, d2, j, k;
  Int value;
};

/// The 960 reference cells embedded in the binary: twelve (d1,d2)
/// configurations with D in {6,10,15}, j in {0,2,4,6,8}, k in 0..15.
const std::vector<GoldenCell>& golden_cells();

}  // namespace siegel
