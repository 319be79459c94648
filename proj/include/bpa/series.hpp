#pragma once

#include "bpa/numeric.hpp"

namespace bpa {

/// Outcome of summing one of the infinite series below far enough that the
/// unsummed tail is provably smaller than 1/2.
///
/// The series converge to integers, so once the tail certificate is tight
/// enough there is exactly one integer the full sum can be; that integer is
/// stored in `rounded`.
struct SeriesResult {
  Rat partial_sum;     ///< exact sum of the first `terms_used` terms
  index_t terms_used;  ///< number of leading terms summed
  Rat tail_bound;      ///< certified upper bound on the omitted tail
  Nat rounded;         ///< the unique integer within tail_bound of the sum
};

/// Bound on a series tail whose term ratios are all at most `ratio_bound`:
/// last_term * ratio / (1 - ratio). Throws InvalidRatio unless
/// 0 <= ratio_bound < 1.
Rat tail_bound(const Rat& last_term, const Rat& ratio_bound);

/// Sums (1/2) * sum_{s>=0} s^n / 2^s, which converges to fubini(n).
///
/// `min_terms` forces at least that many terms into the partial sum; the
/// result is the same, only the certificate gets tighter.
SeriesResult fubini_series(index_t n, index_t min_terms = 0);

/// Sums 1/(2^{m+1} m!) * sum_{s>=0} (s+1)(s+2)...(s+m) s^n / 2^s, which
/// converges to barred_count(n, m). With m = 0 this is fubini_series.
SeriesResult barred_series(index_t n, index_t m, index_t min_terms = 0);

}  // namespace bpa
