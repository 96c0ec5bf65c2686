#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace siegel {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Deterministic primality test for 64-bit integers (Miller-Rabin with a
/// fixed witness set that is exact below 2^64).
bool is_prime(std::uint64_t n);

/// Legendre symbol (a/p) for an odd prime p; 0 iff p divides a.
/// Throws std::domain_error if p is not an odd prime.
int legendre_symbol(Int a, Int p);

/// The imaginary quadratic fields whose splitting behaviour drives the
/// torsion contributions: Q(sqrt(-1)) and Q(sqrt(-3)).
enum class QuadField { Gaussian, Eisenstein };

/// Splitting symbol of the prime p in the given field: +1 split, -1 inert,
/// 0 ramified (p=2 for Gaussian, p=3 for Eisenstein; note (-3/2) = -1).
/// Throws std::domain_error if p is not prime.
int splitting_symbol(QuadField field, Int p);

/// m-periodic sequence: at(n) yields value i when n = i (mod m).
class Bracket {
 public:
  Bracket(std::initializer_list<Rational> values) : values_(values) {
    if (values_.empty()) throw std::invalid_argument("Bracket: empty period");
  }
  explicit Bracket(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("Bracket: empty period");
  }

  const Rational& at(Int n) const {
    const Int m = static_cast<Int>(values_.size());
    return values_[static_cast<std::size_t>(((n % m) + m) % m)];
  }
  std::size_t period() const { return values_.size(); }

 private:
  std::vector<Rational> values_;
};

/// Integer-valued periodic sequence; the common case in the case tables.
class IntBracket {
 public:
  IntBracket(std::initializer_list<Int> values) : values_(values) {}
  Int at(Int n) const {
    const Int m = static_cast<Int>(values_.size());
    return values_[static_cast<std::size_t>(((n % m) + m) % m)];
  }

 private:
  std::vector<Int> values_;
};

struct NotSquarefreeError : std::domain_error {
  NotSquarefreeError(Int n, Int p);
  Int offending_prime;
};

/// Ascending distinct prime factors of a squarefree positive integer.
struct PrimeFactorization {
  std::vector<Int> primes;

  Int value() const {
    Int v = 1;
    for (Int p : primes) v *= p;
    return v;
  }
  bool contains(Int p) const;
  std::size_t size() const { return primes.size(); }
};

/// Factors N >= 1; throws NotSquarefreeError (carrying the offending prime)
/// if p^2 | N for some p. factor_squarefree(1) is the empty factorization.
PrimeFactorization factor_squarefree(Int n);

/// Subset of `primes` congruent to m mod n.
std::vector<Int> residue_class(const std::vector<Int>& primes, Int m, Int n);

/// All squarefree divisors of q * rad(base), i.e. of the radical of
/// q * prod(base); 2^s of them where s counts the distinct primes involved.
std::vector<PrimeFactorization> squarefree_divisors_with_prime(
    const PrimeFactorization& base, Int q);

}  // namespace siegel
