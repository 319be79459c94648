#pragma once

#include <cstddef>

#include "bpa/numeric.hpp"

namespace bpa {

// Exact integer primitives. All triangles are filled by their additive
// recurrences and cached row by row; callers may hit these from several
// threads at once and will see each value as if it were computed exactly
// once. Out-of-range arguments (k > n and the like) return 0 so that
// summation loops need no boundary cases.

/// C(n, k); 0 when k > n.
Nat binomial(index_t n, index_t k);

/// n! with 0! = 1.
Nat factorial(index_t n);

/// Stirling number of the second kind {n k}: partitions of an n-set into k
/// nonempty blocks. {0 0} = 1, {n 0} = 0 for n >= 1, {n k} = 0 for k > n.
Nat stirling2(index_t n, index_t k);

/// Signed Stirling number of the first kind s(m, t), via
/// s(m+1, t) = s(m, t-1) - m*s(m, t) with s(0, 0) = 1.
/// Sign of s(m, t) is (-1)^(m-t).
Int stirling1_signed(index_t m, index_t t);

/// Rising factorial x * (x+1) * ... * (x+m-1); empty product (m = 0) is 1.
Nat rising_factorial(const Nat& x, index_t m);

/// base^exp with the convention 0^0 = 1.
Nat power(const Nat& base, index_t exp);

}  // namespace bpa
