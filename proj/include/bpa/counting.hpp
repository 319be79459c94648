#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bpa/numeric.hpp"

namespace bpa {

// Exact counts of preferential arrangements:
//   fubini(n)              J_n,   ordered set partitions of an n-set
//   barred_count(n, m)     J_n^m, arrangements of an n-set with m bars
//   restricted_count(n, m) I_n^m, arrangements whose non-free sections hold
//                                 at most one block
// Every family has two independent computation routes (closed form vs
// recurrence); build_table() cross-checks them cell by cell.

/// J_n by the Stirling closed form, sum over s of {n s} * s!.
Nat fubini(index_t n);

/// J_n by the binomial recurrence J_{n+1} = sum over s of C(n+1, s) * J_s,
/// J_0 = 1. Independent cross-check route for fubini().
Nat fubini_recurrence(index_t n);

/// J_n^m by the closed form, sum over s of {n s} * s! * C(m+s, m).
Nat barred_count(index_t n, index_t m);

/// J_n^m by the sectioning recurrence
/// J_n^m = sum over s of C(n, s) * J_s^0 * J_{n-s}^{m-1}  (m >= 1),
/// memoized down to J_.^0 = fubini. Same value as barred_count().
Nat barred_count_rec(index_t n, index_t m);

/// I_n^m via I_n^{k+1} = 2 * I_n^k - k^n applied upward from I_n^0 = J_n,
/// with 0^0 = 1 so the n = 0 column is identically 1.
Nat restricted_count(index_t n, index_t m);

/// I_n^m by the direct sum over free-section contents,
/// I_n^m = sum over s of C(n, s) * m^(n-s) * J_s. Same value as
/// restricted_count(); validated against exhaustive enumeration in tests.
Nat restricted_count_sum(index_t n, index_t m);

enum class TableKind { Barred, Restricted };

enum class Provenance { ClosedForm, Recurrence, LoadedFromCache };

/// Memoized (n, m) grid of J_n^m or I_n^m values.
///
/// Grows monotonically: value(n, m) above the current bounds extends the
/// grid instead of recomputing it. Concurrent reads are safe; extension is
/// a write and must be serialized by the caller (single writer, multiple
/// readers). Equality compares kind and values; provenance is metadata.
class CountTable {
 public:
  explicit CountTable(TableKind kind) : kind_(kind) {}

  TableKind kind() const { return kind_; }
  index_t n_max() const { return rows_.empty() ? 0 : rows_.size() - 1; }
  index_t m_max() const { return rows_.empty() ? 0 : rows_[0].size() - 1; }
  bool empty() const { return rows_.empty(); }

  /// Stored value; extends the table if (n, m) is out of bounds.
  const Nat& value(index_t n, index_t m);

  /// Stored value; throws std::out_of_range instead of extending.
  const Nat& at(index_t n, index_t m) const;

  Provenance provenance(index_t n, index_t m) const;

  /// Grows the grid so it covers 0..n_max x 0..m_max. Every new cell is
  /// computed by both the closed form and the recurrence; a disagreement
  /// throws InternalInconsistency.
  void extend(index_t n_max, index_t m_max);

  friend bool operator==(const CountTable& a, const CountTable& b) {
    return a.kind_ == b.kind_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const CountTable& a, const CountTable& b) {
    return !(a == b);
  }

 private:
  friend CountTable load_cache(std::istream& in);

  TableKind kind_;
  std::vector<std::vector<Nat>> rows_;        // rows_[n][m]
  std::vector<std::vector<Provenance>> prov_;  // parallel to rows_
};

/// Fully populated table over 0..n_max x 0..m_max, every cell cross-checked
/// closed form vs recurrence.
CountTable build_table(index_t n_max, index_t m_max, TableKind kind);

// Cache file format (bit-exact):
//   line 1:    bpa-cache v1 <kind>         kind in {barred, restricted}
//   then:      <n> <m> <decimal value>     one line per cell, sorted by (n, m)
//   last line: # sha256 <hex digest of all preceding lines, newlines included>
// Other lines starting '#' are ignored (but still feed the digest).

void save_cache(const CountTable& table, std::ostream& out);
void save_cache(const CountTable& table, const std::string& path);

CountTable load_cache(std::istream& in);
CountTable load_cache(const std::string& path);

std::string table_kind_name(TableKind kind);

}  // namespace bpa
