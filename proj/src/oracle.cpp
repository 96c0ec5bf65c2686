#include "siegel/oracle.hpp"

namespace siegel::oracle {

namespace {
Int sign_pow(Int n) { return n % 2 == 0 ? 1 : -1; }
}  // namespace

Rational intro_dim(Int k, Int p) {
  if (p == 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::domain_error("intro_dim: p must be an odd prime");
  const int c1 = splitting_symbol(QuadField::Gaussian, p);
  const int c3 = splitting_symbol(QuadField::Eisenstein, p);
  // The (p - (-3/p)) local factor degenerates to 1 at the ramified prime.
  const Int eis_factor = p == 3 ? 1 : p - c3;

  Rational t(BigInt(k - 2) * (k - 1) * (2 * k - 3) * (BigInt(p) * p - 1),
             5760);
  t += Rational(p - 1, 24);
  t += Rational((sign_pow(k) * (8 + c1) + (2 * k - 3) * (8 - c1)) * (p - c1),
                384);
  static const IntBracket br_k3{0, -1, 1};
  t += Rational(br_k3.at(k) * (8 + c3 * (1 - 5 * c3)) * eis_factor, 72);
  t += Rational((2 * k - 3) * (10 - c3 * (1 + 7 * c3)) * eis_factor, 72);
  t -= Rational(1 - c1, 8);
  t -= Rational(1 - c3, 3);
  static const IntBracket br_k5{1, 0, 0, -1, 0};
  t += Rational(2 * br_k5.at(k) * (1 - legendre_symbol(p, 5)), 5);
  static const IntBracket br_k4{1, 0, 0, -1};
  if (p % 8 == 3 || p % 8 == 5) t += Rational(br_k4.at(k), 4);

  Rational last;
  if (p == 3) {
    last = Rational(sign_pow(k), 2);
  } else if (p % 12 == 5) {
    static const IntBracket br{0, 1, -1};
    last = br.at(k);
  } else if (p % 12 == 7) {
    last = sign_pow(k);
  }  // p = 1, 11 mod 12: last stays 0
  t += last / 6;
  return t;
}

}  // namespace siegel::oracle
