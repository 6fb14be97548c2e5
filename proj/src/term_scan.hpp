#pragma once

#include <gmpxx.h>

#include <vector>

namespace exhyp::detail {

// Walks every weak composition of budget n into r parts in colexicographic
// order (first part fastest, last slowest), carrying a running term scaled
// to an integer: the caller passes unit = D, a common multiple of every
// term's denominator, and the walk maintains T = D * term exactly. Updates
// are then one multiply and one exact division, with no gcd work; the
// single canonicalization happens when the caller divides its total by D.
//
// Each recursion level keeps the value it entered with, so inner levels
// restart from a saved product and nothing is ever divided back out: a zero
// factor picked up along the way zeroes exactly the terms it belongs to.
//
// ratio_num/ratio_den fill the integer pair of the term-to-term ratio when
// part j steps k -> k+1 with the running sum at `total` (j's k included).
// emit(parts, total, T) fires once per composition.
template <class RatioNum, class RatioDen, class Emit>
void scan_terms(unsigned long r, unsigned long n, const mpz_class& unit, RatioNum&& ratio_num,
                RatioDen&& ratio_den, Emit&& emit) {
  std::vector<unsigned long> parts(r, 0);
  mpz_class num, den, tmp;
  auto walk = [&](auto&& self, unsigned long level, unsigned long total,
                  const mpz_class& base) -> void {
    if (level == 0) {
      emit(parts, total, base);
      return;
    }
    const unsigned long j = level - 1;
    mpz_class cur = base;
    for (unsigned long k = 0;; ++k) {
      parts[j] = k;
      self(self, level - 1, total + k, cur);
      if (total + k == n) break;
      ratio_num(j, k, total + k, num);
      ratio_den(j, k, total + k, den);
      mpz_mul(tmp.get_mpz_t(), cur.get_mpz_t(), num.get_mpz_t());
      mpz_divexact(cur.get_mpz_t(), tmp.get_mpz_t(), den.get_mpz_t());
    }
    parts[j] = 0;
  };
  walk(walk, r, 0, unit);
}

}  // namespace exhyp::detail
