#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace bpa {

/// Arbitrary-precision natural number. Every count in this library (J_n,
/// J_n^m, I_n^m, factorials, binomials, ...) is a Nat; the operations that
/// produce them never go negative.
using Nat = mpz_class;

/// Arbitrary-precision signed integer. Needed for the signed Stirling
/// numbers of the first kind, whose sign alternates.
using Int = mpz_class;

/// Exact rational, always kept in canonical (reduced) form by GMP.
using Rat = mpq_class;

/// Grid index (n, m, k, ...). Small in practice; counts are the big ones.
using index_t = std::size_t;

inline std::string to_decimal(const Nat& v) { return v.get_str(); }

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string to_fraction(const Rat& v) { return v.get_str(); }

}  // namespace bpa
