#pragma once

#include <stdexcept>
#include <string>

#include "siegel/number_theory.hpp"

namespace siegel {

struct LevelError : std::domain_error {
  enum class Kind { NotSquarefree, OddRamificationCount, TrivialDiscriminant };
  LevelError(Kind k, const std::string& msg) : std::domain_error(msg), kind(k) {}
  Kind kind;
};

/// Which prime set a residue-class query filters: all of D, or one part.
enum class PrimeSubset { D, D1, D2 };

/// Validated descriptor of the group Gamma(D1, D2): the discriminant
/// D = D1*D2 must be squarefree with an even number (>= 2) of prime factors.
struct Level {
  PrimeFactorization d1;  // primes of D1
  PrimeFactorization d2;  // primes of D2
  PrimeFactorization d;   // primes of D, ascending
  Int D1 = 1;
  Int D2 = 1;
  Int D = 1;
};

/// Builds a Level or throws LevelError: "not squarefree" if p^2 | D1*D2,
/// "odd ramification count" if the number of primes of D is odd,
/// "trivial discriminant" if D = 1.
Level make_level(Int D1, Int D2);

/// The set T(m; n) = { p | T : p = m (mod n) } for T in {D, D1, D2}.
std::vector<Int> class_set(const Level& level, PrimeSubset which, Int m, Int n);

}  // namespace siegel
