#include "siegel/contributions.hpp"

#include <algorithm>

namespace siegel {

namespace {

void require_even_j(Weight w) {
  if (w.j % 2 != 0)
    throw std::domain_error("contributions defined for even j only");
}

Int sign_pow(Int n) { return n % 2 == 0 ? 1 : -1; }

int chi(QuadField f, Int p, const EvalVariant& v) {
  if (f == QuadField::Eisenstein && p == 2 && v.eisenstein_splits_at_two)
    return 1;
  return splitting_symbol(f, p);
}

bool contains(const std::vector<Int>& sorted, Int p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

// One value of the summation variable n in the H6/H7 divisor sums: its
// distinct prime support, its number of prime divisors (with multiplicity
// only under the all-divisors variant), and whether the base prime q | n.
struct NTerm {
  std::vector<Int> primes;
  Int omega = 0;
  bool contains_q = false;
};

// n ranges over squarefree products F * s where F is the product of the
// primes of D at which the field splits (they always divide n) and s runs
// over the squarefree divisors of q * (odd part of D1 away from the split
// primes). Primes of D2 other than q never divide n.
std::vector<NTerm> enumerate_n(const Level& L, Int q, QuadField f,
                               const EvalVariant& v) {
  std::vector<Int> forced, free_primes{q};
  for (Int p : L.d.primes)
    if (chi(f, p, v) == 1) forced.push_back(p);
  for (Int p : L.d1.primes)
    if (p != q && chi(f, p, v) != 1) free_primes.push_back(p);

  std::vector<NTerm> out;
  if (!v.h6_all_divisors) {
    const std::size_t m = free_primes.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      NTerm t;
      t.primes = forced;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (std::size_t{1} << i)) t.primes.push_back(free_primes[i]);
      std::sort(t.primes.begin(), t.primes.end());
      t.omega = static_cast<Int>(t.primes.size());
      t.contains_q = contains(t.primes, q);
      out.push_back(std::move(t));
    }
  } else {
    // Variant reading: all divisors of the literal integer q * D1-part,
    // prime divisors counted with multiplicity.
    Int N = L.d1.contains(q) ? q : 1;
    for (Int p : free_primes) N *= p;
    for (Int n = 1; n <= N; ++n) {
      if (N % n != 0) continue;
      NTerm t;
      t.primes = forced;
      t.omega = static_cast<Int>(forced.size());
      Int rem = n;
      for (Int p = 2; p * p <= rem; ++p) {
        if (rem % p) continue;
        t.primes.push_back(p);
        while (rem % p == 0) {
          rem /= p;
          ++t.omega;
        }
      }
      if (rem > 1) {
        t.primes.push_back(rem);
        ++t.omega;
      }
      std::sort(t.primes.begin(), t.primes.end());
      t.primes.erase(std::unique(t.primes.begin(), t.primes.end()),
                     t.primes.end());
      t.contains_q = n % q == 0;
      out.push_back(std::move(t));
    }
  }
  return out;
}

// Shared shell of H6 and H7: sum over n of A(n) * prod_{p|n}(p-1)
// * prod_{p|D2, p∤n, p≠q}(p+1) * prod_{p|D1, p∤n, p≠q} 2 * B(n).
template <typename AFn, typename BFn>
Rational divisor_sum(const Level& L, Int q, QuadField f, const EvalVariant& v,
                     AFn A, BFn B) {
  Rational total = 0;
  for (const NTerm& t : enumerate_n(L, q, f, v)) {
    Rational term = A(t.omega % 2 != 0) * B(t.contains_q);
    for (Int p : t.primes) term *= p - 1;
    for (Int p : L.d2.primes)
      if (p != q && !contains(t.primes, p)) term *= p + 1;
    for (Int p : L.d1.primes)
      if (p != q && !contains(t.primes, p)) term *= 2;
    total += term;
  }
  return total;
}

// Case tables for H8..H11, keyed by j mod (2 * period of the row).
const IntBracket& c1_row(Int j) {
  static const IntBracket rows[6] = {
      {1, 0, 0, -1, -1, -1, -1, 0, 0, 1, 1, 1},
      {-1, 1, 0, 1, 1, 0, 1, -1, 0, -1, -1, 0},
      {1, -1, 0, 0, -1, 1, -1, 1, 0, 0, 1, -1},
      {-1, 0, 0, -1, 1, -1, 1, 0, 0, 1, -1, 1},
      {1, 1, 0, 1, -1, 0, -1, -1, 0, -1, 1, 0},
      {-1, -1, 0, 0, 1, 1, 1, 1, 0, 0, -1, -1}};
  return rows[(j % 12) / 2];
}

const IntBracket& c2_row(Int j) {
  static const IntBracket rows[3] = {{1, 0, 0, -1, 0, 0},
                                     {-1, 1, 0, 1, -1, 0},
                                     {0, -1, 0, 0, 1, 0}};
  return rows[(j % 6) / 2];
}

const IntBracket& c3_row(Int j) {
  static const IntBracket rows[5] = {{1, 0, 0, -1, 0},
                                     {-1, 1, 0, 0, 0},
                                     {0, 0, 0, 0, 0},
                                     {0, 0, 0, 1, -1},
                                     {0, -1, 0, 0, 1}};
  return rows[(j % 10) / 2];
}

const IntBracket& c4_row(Int j) {
  static const IntBracket rows[4] = {
      {1, 0, 0, -1}, {-1, 1, 0, 0}, {-1, 0, 0, 1}, {1, -1, 0, 0}};
  return rows[(j % 8) / 2];
}

}  // namespace

Rational h1(Weight w, const Level& L, const EvalVariant&) {
  require_even_j(w);
  const Int k = w.k, j = w.j;
  Rational r(BigInt(j + 1) * (k - 2) * (j + k - 1) * (j + 2 * k - 3),
             BigInt(128) * 27 * 5);
  for (Int p : L.d1.primes) r *= BigInt(p - 1) * (p * p + 1);
  for (Int p : L.d2.primes) r *= BigInt(p) * p - 1;
  return r;
}

Rational h2(Weight w, const Level& L, const EvalVariant&) {
  require_even_j(w);
  const Int k = w.k, j = w.j;
  Int c;
  if (L.D2 == 1)
    c = L.d1.contains(2) ? 13 : 7;
  else if (L.D2 == 2)
    c = 3;
  else
    return 0;
  Rational r(sign_pow(k) * (j + k - 1) * (k - 2) * c, 128 * 9);
  for (Int p : L.d.primes) r *= BigInt(p - 1) * (p - 1);
  return r;
}

Rational h3(Weight w, const Level& L, const EvalVariant& v) {
  require_even_j(w);
  const Int k = w.k, j = w.j;
  Int c;
  if (L.D2 == 1)
    c = 1;
  else if (L.D2 == 2)
    c = 3;
  else
    return 0;
  const Int e = sign_pow(j / 2);
  const IntBracket br{e * (k - 2), -(j + k - 1), -e * (k - 2), j + k - 1};
  Rational r(br.at(k) * c, 32 * 3);
  for (Int p : L.d1.primes)
    r *= (p - 1) * (1 - chi(QuadField::Gaussian, p, v));
  return r;
}

Rational h4(Weight w, const Level& L, const EvalVariant& v) {
  require_even_j(w);
  const Int k = w.k, j = w.j;
  Int c;
  if (L.D2 == 1)
    c = 1;
  else if (L.D2 == 3)
    c = 8;
  else
    return 0;
  const IntBracket brk{j + k - 1, -(j + k - 1), 0};
  const IntBracket brjk{k - 2, 0, -(k - 2)};
  Rational r((brk.at(k) + brjk.at(j + k)) * c, 8 * 27);
  for (Int p : L.d1.primes)
    r *= (p - 1) * (1 - chi(QuadField::Eisenstein, p, v));
  return r;
}

Rational h5(Weight w, const Level& L, const EvalVariant& v) {
  require_even_j(w);
  if (L.D2 != 1) return 0;
  const Int k = w.k, j = w.j;
  const IntBracket brk{-(j + k - 1), -(j + k - 1), 0, j + k - 1, j + k - 1, 0};
  const IntBracket brjk{k - 2, 0, -(k - 2), -(k - 2), 0, k - 2};
  Rational r(brk.at(k) + brjk.at(j + k), 8 * 9);
  for (Int p : L.d1.primes)
    r *= (p - 1) * (1 - chi(QuadField::Eisenstein, p, v));
  return r;
}

Rational h6(Weight w, const Level& L, const EvalVariant& v) {
  require_even_j(w);
  const Int k = w.k, j = w.j;
  auto A = [&](bool omega_odd) {
    return omega_odd ? Rational(sign_pow(k + j / 2) * (j + 1), 384)
                     : Rational(sign_pow(j / 2) * (j + 2 * k - 3), 384);
  };
  auto B = [&](bool two_in_n) -> Int {
    if (L.d1.contains(2)) return two_in_n ? 5 : 11;
    if (L.d2.contains(2)) return two_in_n ? 7 : 9;
    return two_in_n ? 3 : 5;
  };
  return divisor_sum(L, 2, QuadField::Gaussian, v, A, B);
}

Rational h7(Weight w, const Level& L, const EvalVariant& v) {
  require_even_j(w);
  const Int k = w.k, j = w.j;
  static const IntBracket br_odd{0, 1, -1};
  static const IntBracket br_even{1, -1, 0};
  auto A = [&](bool omega_odd) {
    return omega_odd
               ? Rational((j + 1) * br_odd.at(j + 2 * k), 216)
               : Rational((j + 2 * k - 3) * br_even.at(j), 216);
  };
  auto B = [&](bool three_in_n) -> Int {
    if (L.d1.contains(3)) return three_in_n ? 1 : 16;
    if (L.d2.contains(3)) return three_in_n ? 4 : 10;
    return three_in_n ? 1 : 4;
  };
  return divisor_sum(L, 3, QuadField::Eisenstein, v, A, B);
}

Rational h8(Weight w, const Level& L, const EvalVariant& v) {
  require_even_j(w);
  if (L.D2 != 1) return 0;
  Rational r(c1_row(w.j).at(w.k), 12);
  for (Int p : L.d.primes)
    r *= (1 - chi(QuadField::Gaussian, p, v)) *
         (1 - chi(QuadField::Eisenstein, p, v));
  return r;
}

Rational h9(Weight w, const Level& L, const EvalVariant& v) {
  require_even_j(w);
  Int c;
  if (L.D2 == 1)
    c = L.d1.contains(2) ? 5 : 2;
  else if (L.D2 == 2)
    c = L.d1.contains(2) ? 0 : 3;
  else
    return 0;
  Rational r(c2_row(w.j).at(w.k) * c, 18);
  for (Int p : L.d1.primes) {
    if (p == 2) continue;
    const Int s = 1 - chi(QuadField::Eisenstein, p, v);
    r *= s * s;
  }
  return r;
}

Rational h10(Weight w, const Level& L, const EvalVariant&) {
  require_even_j(w);
  const bool blocked = !class_set(L, PrimeSubset::D1, 1, 5).empty() ||
                       !class_set(L, PrimeSubset::D1, 2, 5).empty() ||
                       !class_set(L, PrimeSubset::D1, 3, 5).empty() ||
                       !class_set(L, PrimeSubset::D2, 1, 5).empty() ||
                       !class_set(L, PrimeSubset::D2, 4, 5).empty();
  Int gate;
  if (blocked)
    gate = 0;
  else
    gate = L.d.contains(5) ? 1 : 2;
  if (gate == 0) return 0;
  Rational r(c3_row(w.j).at(w.k) * gate, 10);
  r *= BigInt(1) << L.d.primes.size();
  r *= BigInt(1) << class_set(L, PrimeSubset::D, 4, 5).size();
  return r;
}

Rational h11(Weight w, const Level& L, const EvalVariant&) {
  require_even_j(w);
  if (!class_set(L, PrimeSubset::D, 1, 8).empty() ||
      !class_set(L, PrimeSubset::D2, 7, 8).empty())
    return 0;
  Rational r(c4_row(w.j).at(w.k), 8);
  std::size_t odd_primes = L.d.primes.size() - (L.d.contains(2) ? 1 : 0);
  r *= BigInt(1) << odd_primes;
  r *= BigInt(1) << class_set(L, PrimeSubset::D1, 7, 8).size();
  return r;
}

Rational h12(Weight w, const Level& L, const EvalVariant& v) {
  require_even_j(w);
  const Int k = w.k, j = w.j;
  Rational A = 0, B = 0;
  if (class_set(L, PrimeSubset::D, 1, 12).empty() &&
      class_set(L, PrimeSubset::D2, 11, 12).empty()) {
    // Table rows keyed by how 2 and 3 sit relative to the level:
    // index 0 = p does not divide D, 1 = p | D1, 2 = p | D2.
    auto part = [&](Int p) -> int {
      if (L.d1.contains(p)) return 1;
      if (L.d2.contains(p)) return 2;
      return 0;
    };
    static const Rational table[3][3][3] = {
        {{Rational(0), Rational(1, 2), Rational(1)},
         {Rational(1, 2), Rational(3, 4), Rational(1)},
         {Rational(0), Rational(1, 4), Rational(1, 2)}},
        {{Rational(1), Rational(3, 4), Rational(1, 2)},
         {Rational(5, 4), Rational(9, 8), Rational(1)},
         {Rational(1, 2), Rational(3, 8), Rational(1, 4)}},
        {{Rational(1, 2), Rational(1, 4), Rational(0)},
         {Rational(1, 2), Rational(3, 8), Rational(1, 4)},
         {Rational(1, 4), Rational(1, 8), Rational(0)}}};
    const Rational* row = table[part(2)][part(3)];
    if (!class_set(L, PrimeSubset::D1, 11, 12).empty()) {
      A = B = row[1];  // middle column, parity-independent
    } else {
      const bool even = class_set(L, PrimeSubset::D, 5, 12).size() % 2 == 0;
      // Pinned binding: the A column reads (even -> first case, odd ->
      // third), the B column the other way around; the variant swaps them.
      const int a_even = v.swap_h12_case_binding ? 2 : 0;
      const int b_even = 2 - a_even;
      A = row[even ? a_even : 2 - a_even];
      B = row[even ? b_even : 2 - b_even];
    }
  }
  Rational mult(BigInt(1) << (L.d.primes.size() +
                              class_set(L, PrimeSubset::D1, 11, 12).size()));
  static const IntBracket br_a{1, -1, 0};
  static const IntBracket br_b{0, -1, 1};
  Rational ta = Rational(sign_pow(j / 2 + k) * br_a.at(j), 12) * mult * A;
  Rational tb = Rational(sign_pow(j / 2) * br_b.at(j + 2 * k), 12) * mult * B;
  return ta + tb;
}

Rational i1(Weight w, const Level& L, const EvalVariant&) {
  require_even_j(w);
  Rational r(w.j + 1, 24);
  for (Int p : L.d.primes) r *= p - 1;
  return r;
}

Rational i2(Weight w, const Level& L, const EvalVariant& v) {
  require_even_j(w);
  Rational r(-sign_pow(w.j / 2), 8);
  for (Int p : L.d.primes) r *= 1 - chi(QuadField::Gaussian, p, v);
  return r;
}

Rational i3(Weight w, const Level& L, const EvalVariant& v) {
  require_even_j(w);
  static const IntBracket br{1, -1, 0};
  Rational r(-br.at(w.j), 6);
  for (Int p : L.d.primes) r *= 1 - chi(QuadField::Eisenstein, p, v);
  return r;
}

ContributionBreakdown evaluate_contributions(Weight w, const Level& L,
                                             const EvalVariant& v) {
  require_even_j(w);
  ContributionBreakdown b;
  b.h = {h1(w, L, v), h2(w, L, v), h3(w, L, v),  h4(w, L, v),
         h5(w, L, v), h6(w, L, v), h7(w, L, v),  h8(w, L, v),
         h9(w, L, v), h10(w, L, v), h11(w, L, v), h12(w, L, v)};
  b.i = {i1(w, L, v), i2(w, L, v), i3(w, L, v)};
  for (const Rational& t : b.h) b.total += t;
  for (const Rational& t : b.i) b.total += t;
  return b;
}

}  // namespace siegel
