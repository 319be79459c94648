#include "bpa/series.hpp"

#include <functional>
#include <utility>

#include "bpa/errors.hpp"
#include "bpa/exact.hpp"

namespace bpa {

Rat tail_bound(const Rat& last_term, const Rat& ratio_bound) {
  if (ratio_bound < 0 || ratio_bound >= 1)
    throw InvalidRatio("ratio bound must lie in [0, 1), got " +
                       ratio_bound.get_str());
  return last_term * ratio_bound / (1 - ratio_bound);
}

namespace {

// From index s0 onward the term ratio is at most (1 + 1/s)^(n+m) / 2, which
// we keep below 3/4 by choosing s0 as the first s with
// 2 (s+1)^(n+m) <= 3 s^(n+m).
index_t ratio_settles_at(index_t exponent) {
  for (index_t s = 1;; ++s) {
    Nat lhs = 2 * power(Nat(static_cast<unsigned long>(s + 1)), exponent);
    Nat rhs = 3 * power(Nat(static_cast<unsigned long>(s)), exponent);
    if (lhs <= rhs) return s;
  }
}

SeriesResult sum_until_certified(index_t exponent,
                                 const std::function<Rat(index_t)>& term,
                                 index_t min_terms) {
  const index_t s0 = ratio_settles_at(exponent);
  const Rat ratio(3, 4);
  const Rat half(1, 2);

  Rat partial(0);
  Rat last(0);
  index_t s = 0;
  for (;; ++s) {
    last = term(s);
    partial += last;
    if (s < s0 || s + 1 < min_terms) continue;
    if (tail_bound(last, ratio) < half) break;
  }
  Rat bound = tail_bound(last, ratio);

  // The omitted tail is strictly positive, so the limit sits in
  // (partial, partial + bound], an interval shorter than 1/2 that can hold
  // only one integer: the ceiling of the partial sum.
  Nat rounded;
  mpz_cdiv_q(rounded.get_mpz_t(), partial.get_num().get_mpz_t(),
             partial.get_den().get_mpz_t());
  if (Rat(rounded) <= partial || Rat(rounded) > partial + bound)
    throw InternalInconsistency("series certificate failed to pin an integer");
  return SeriesResult{std::move(partial), s + 1, std::move(bound),
                      std::move(rounded)};
}

}  // namespace

SeriesResult fubini_series(index_t n, index_t min_terms) {
  auto term = [n](index_t s) {
    Nat denominator = Nat(1) << static_cast<unsigned long>(s + 1);
    Rat t(power(Nat(static_cast<unsigned long>(s)), n), denominator);
    t.canonicalize();
    return t;
  };
  return sum_until_certified(n, term, min_terms);
}

SeriesResult barred_series(index_t n, index_t m, index_t min_terms) {
  const Nat scale = factorial(m) << static_cast<unsigned long>(m + 1);
  auto term = [n, m, &scale](index_t s) {
    Nat numerator = rising_factorial(Nat(static_cast<unsigned long>(s + 1)), m) *
                    power(Nat(static_cast<unsigned long>(s)), n);
    Nat denominator = scale << static_cast<unsigned long>(s);
    Rat t(numerator, denominator);
    t.canonicalize();
    return t;
  };
  return sum_until_certified(n + m, term, min_terms);
}

}  // namespace bpa
