#include <doctest.h>

#include "siegel/dimension.hpp"
#include "siegel/oracle.hpp"

using namespace siegel;

TEST_CASE("reference dimensions") {
  auto dim = [](Int k, Int j, Int d1, Int d2) {
    return dim_cusp_forms({k, j}, make_level(d1, d2));
  };
  CHECK(dim(5, 0, 6, 1).dimension == 0);
  CHECK(dim(5, 0, 6, 1).validity == Validity::Proven);
  CHECK(dim(10, 0, 6, 1).dimension == 15);
  CHECK(dim(5, 2, 3, 2).dimension == 1);
  CHECK(dim(15, 8, 1, 15).dimension == 1004);
  CHECK(dim(5, 0, 10, 1).dimension == 2);
  CHECK(dim(1, 0, 6, 1).dimension == -1);
  CHECK(dim(1, 0, 6, 1).validity == Validity::Formal);
}

TEST_CASE("odd j vanishes without evaluation") {
  const DimensionResult r = dim_cusp_forms({7, 3}, make_level(6, 1));
  CHECK(r.dimension == 0);
  CHECK(r.validity == Validity::Proven);
  CHECK(r.breakdown.total == 0);
  CHECK(dim_cusp_forms({0, 1}, make_level(1, 10)).dimension == 0);
}

TEST_CASE("breakdown total equals the dimension") {
  const Level L = make_level(5, 2);
  for (Int k : {0, 3, 5, 11}) {
    for (Int j : {0, 2, 8}) {
      const ContributionBreakdown b = breakdown({k, j}, L);
      CHECK(b.total == dim_cusp_forms({k, j}, L).dimension);
      Rational sum = 0;
      for (const Rational& t : b.h) sum += t;
      for (const Rational& t : b.i) sum += t;
      CHECK(sum == b.total);
    }
  }
  CHECK_THROWS_AS(breakdown({5, 3}, L), std::domain_error);
}

TEST_CASE("oracle closed form") {
  CHECK(oracle::intro_dim(5, 3) == 2);
  CHECK(oracle::intro_dim(15, 3) == 13);
  CHECK(oracle::intro_dim(5, 5) == 3);
  CHECK(oracle::intro_dim(2, 3) == 0);
  CHECK_THROWS_AS(oracle::intro_dim(5, 2), std::domain_error);
  CHECK_THROWS_AS(oracle::intro_dim(5, 9), std::domain_error);
}

TEST_CASE("oracle values are integers") {
  for (Int p = 3; p <= 199; p += 2) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    for (Int k : {0, 1, 2, 5, 8, 13, 27})
      CHECK(denominator(oracle::intro_dim(k, p)) == 1);
  }
}

TEST_CASE("oracle matches the engine at small levels") {
  for (Int p : {3, 5, 7, 11, 13}) {
    const Level L = make_level(1, 2 * p);
    for (Int k = 0; k <= 20; ++k)
      CHECK(oracle::intro_dim(k, p) == dim_cusp_forms({k, 0}, L).dimension);
  }
}
