#include "siegel/level.hpp"

#include <algorithm>

namespace siegel {

Level make_level(Int D1, Int D2) {
  if (D1 < 1 || D2 < 1)
    throw LevelError(LevelError::Kind::NotSquarefree,
                     "D1 and D2 must be positive");
  Level L;
  L.D1 = D1;
  L.D2 = D2;
  L.D = D1 * D2;
  try {
    L.d = factor_squarefree(L.D);
    L.d1 = factor_squarefree(D1);
    L.d2 = factor_squarefree(D2);
  } catch (const NotSquarefreeError& e) {
    throw LevelError(LevelError::Kind::NotSquarefree,
                     std::string("D not squarefree (") + e.what() + ")");
  }
  if (L.D == 1)
    throw LevelError(LevelError::Kind::TrivialDiscriminant,
                     "trivial discriminant: D = 1 (split case) is not a "
                     "division algebra level");
  if (L.d.size() % 2 != 0)
    throw LevelError(LevelError::Kind::OddRamificationCount,
                     "odd ramification count: D = " + std::to_string(L.D) +
                         " has an odd number of prime factors");
  return L;
}

std::vector<Int> class_set(const Level& level, PrimeSubset which, Int m,
                           Int n) {
  switch (which) {
    case PrimeSubset::D:
      return residue_class(level.d.primes, m, n);
    case PrimeSubset::D1:
      return residue_class(level.d1.primes, m, n);
    case PrimeSubset::D2:
      return residue_class(level.d2.primes, m, n);
  }
  throw std::domain_error("class_set: unknown subset");
}

}  // namespace siegel
