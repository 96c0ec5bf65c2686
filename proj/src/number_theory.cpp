#include "siegel/number_theory.hpp"

#include <algorithm>
#include <string>

namespace siegel {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact for all n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int legendre_symbol(Int a, Int p) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::domain_error("legendre_symbol: p must be an odd prime");
  Int r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  // Euler's criterion on 64-bit residues.
  std::uint64_t e = powmod(static_cast<std::uint64_t>(r),
                           static_cast<std::uint64_t>((p - 1) / 2),
                           static_cast<std::uint64_t>(p));
  return e == 1 ? 1 : -1;
}

int splitting_symbol(QuadField field, Int p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::domain_error("splitting_symbol: p must be prime");
  switch (field) {
    case QuadField::Gaussian:
      if (p == 2) return 0;
      return p % 4 == 1 ? 1 : -1;
    case QuadField::Eisenstein:
      if (p == 3) return 0;
      if (p == 2) return -1;
      return p % 3 == 1 ? 1 : -1;
  }
  throw std::domain_error("splitting_symbol: unknown field");
}

NotSquarefreeError::NotSquarefreeError(Int n, Int p)
    : std::domain_error("not squarefree: " + std::to_string(p * p) +
                        " divides " + std::to_string(n)),
      offending_prime(p) {}

bool PrimeFactorization::contains(Int p) const {
  return std::binary_search(primes.begin(), primes.end(), p);
}

PrimeFactorization factor_squarefree(Int n) {
  if (n < 1) throw std::domain_error("factor_squarefree: n must be >= 1");
  const Int original = n;
  PrimeFactorization f;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) throw NotSquarefreeError(original, p);
      f.primes.push_back(p);
    }
  }
  if (n > 1) f.primes.push_back(n);
  return f;
}

std::vector<Int> residue_class(const std::vector<Int>& primes, Int m, Int n) {
  if (n < 1) throw std::domain_error("residue_class: modulus must be >= 1");
  const Int target = ((m % n) + n) % n;
  std::vector<Int> out;
  for (Int p : primes)
    if (p % n == target) out.push_back(p);
  return out;
}

std::vector<PrimeFactorization> squarefree_divisors_with_prime(
    const PrimeFactorization& base, Int q) {
  std::vector<Int> support = base.primes;
  if (!base.contains(q)) {
    support.push_back(q);
    std::sort(support.begin(), support.end());
  }
  std::vector<PrimeFactorization> divisors{PrimeFactorization{}};
  for (Int p : support) {
    const std::size_t n = divisors.size();
    for (std::size_t i = 0; i < n; ++i) {
      PrimeFactorization d = divisors[i];
      d.primes.push_back(p);  // support is ascending, so d stays sorted
      divisors.push_back(std::move(d));
    }
  }
  return divisors;
}

}  // namespace siegel
