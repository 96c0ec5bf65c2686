#include <doctest.h>

#include "siegel/level.hpp"

using namespace siegel;

TEST_CASE("make_level accepts the reference configurations") {
  const Level a = make_level(6, 1);
  CHECK(a.d1.primes == std::vector<Int>{2, 3});
  CHECK(a.d2.primes.empty());
  CHECK(a.D == 6);

  const Level b = make_level(1, 6);
  CHECK(b.d1.primes.empty());
  CHECK(b.d2.primes == std::vector<Int>{2, 3});

  const Level c = make_level(5, 3);
  CHECK(c.d.primes == std::vector<Int>{3, 5});
  CHECK(c.D1 == 5);
  CHECK(c.D2 == 3);
}

TEST_CASE("make_level rejects invalid inputs") {
  auto kind_of = [](Int d1, Int d2) {
    try {
      make_level(d1, d2);
    } catch (const LevelError& e) {
      return e.kind;
    }
    FAIL("expected LevelError");
    return LevelError::Kind::NotSquarefree;
  };
  CHECK(kind_of(2, 1) == LevelError::Kind::OddRamificationCount);
  CHECK(kind_of(30, 1) == LevelError::Kind::OddRamificationCount);
  CHECK(kind_of(4, 3) == LevelError::Kind::NotSquarefree);
  CHECK(kind_of(6, 2) == LevelError::Kind::NotSquarefree);  // shared prime
  CHECK(kind_of(1, 1) == LevelError::Kind::TrivialDiscriminant);
}

TEST_CASE("level validity is symmetric in (D1, D2)") {
  for (Int d1 = 1; d1 <= 20; ++d1) {
    for (Int d2 = 1; d2 <= 20; ++d2) {
      bool ok_fwd = true, ok_rev = true;
      try {
        make_level(d1, d2);
      } catch (const LevelError&) {
        ok_fwd = false;
      }
      try {
        make_level(d2, d1);
      } catch (const LevelError&) {
        ok_rev = false;
      }
      CHECK(ok_fwd == ok_rev);
    }
  }
}

TEST_CASE("every valid level has an even number of ramified primes") {
  int seen = 0;
  for (Int D1 = 1; D1 <= 60; ++D1) {
    for (Int D2 = 1; D2 <= 60; ++D2) {
      try {
        const Level L = make_level(D1, D2);
        CHECK((L.d1.primes.size() + L.d2.primes.size()) % 2 == 0);
        CHECK(L.d.primes.size() >= 2);
        ++seen;
      } catch (const LevelError&) {
      }
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("class_set") {
  CHECK(class_set(make_level(15, 1), PrimeSubset::D, 4, 5).empty());
  CHECK(class_set(make_level(6, 1), PrimeSubset::D1, 2, 3) ==
        std::vector<Int>{2});
  CHECK(class_set(make_level(1, 10), PrimeSubset::D2, 1, 8).empty());
  CHECK(class_set(make_level(5, 3), PrimeSubset::D, 5, 12) ==
        std::vector<Int>{5});
}
