#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bpa/numeric.hpp"

namespace bpa {

/// Where the verifiers read their counts from. The default wires in the
/// production counting functions; tests substitute deliberately broken ones
/// to prove a mismatch is actually reported.
struct CountSource {
  std::function<Nat(index_t)> fubini;
  std::function<Nat(index_t, index_t)> barred;
  std::function<Nat(index_t, index_t)> restricted;

  static CountSource standard();
};

/// One evaluated grid point of one identity. `m` carries whichever second
/// index the identity uses (bar count or iteration step); identities indexed
/// by n alone store 0.
struct IdentityCheck {
  std::string identity_id;
  index_t n = 0;
  index_t m = 0;
  Nat lhs;
  Nat rhs;

  bool equal() const { return lhs == rhs; }
};

struct IdentityReport {
  std::string identity_id;
  std::vector<IdentityCheck> points;   // sorted by (identity_id, n, m)
  std::vector<std::string> notes;      // observations that are not failures

  bool passed() const;
  const IdentityCheck* first_counterexample() const;
};

/// J_{n+1} = sum_s C(n,s) J_s^1 for 0 <= n <= n_max, plus one grid point
/// recomputed on both sides by exhaustive enumeration.
IdentityReport verify_lemma1(index_t n_max,
                             const CountSource& src = CountSource::standard());

/// J_{n+1}^m = (m+1) sum_s C(n,s) J_s^{m+1} over the full grid, plus an
/// enumeration-backed point.
IdentityReport verify_theorem1(index_t n_max, index_t m_max,
                               const CountSource& src = CountSource::standard());

/// The three fixed small equalities J_2^1 = 4 J_1^1, J_1^1 = J_0^1 + J_1^0
/// and J_2^1 = 3 J_1^1 + 2 J_0^1, each confirmed a second time with every
/// operand enumerated.
IdentityReport verify_corollaries(
    const CountSource& src = CountSource::standard());

/// J_n^k = J_n^{k-1} + sum_{s<n} C(n,s) J_s^{k-1} J_{n-s} for n, k >= 1,
/// plus an enumeration-backed point.
IdentityReport verify_section_split(
    index_t n_max, index_t k_max,
    const CountSource& src = CountSource::standard());

/// The restricted-count identities: 2 I_n^m - m^n = I_n^{m+1} on the full
/// grid (0^0 taken as 1), its three special cases on their consistent
/// ranges, agreement with exhaustive enumeration for n <= 5, m <= 3, and
/// invariance of the count under moving the free section from last to first
/// for n <= 4, m <= 2. The special case 2 I_n^0 = I_n^1 holds only for
/// n >= 1; the n = 0 behavior is recorded as a note.
IdentityReport verify_restricted(
    index_t n_max, index_t m_max,
    const CountSource& src = CountSource::standard());

/// Runs every verifier above and merges the reports. `jobs` > 1 evaluates
/// the verifiers on that many threads; the merged report is identical either
/// way.
IdentityReport verify_all(index_t n_max, index_t m_max, index_t jobs = 1,
                          const CountSource& src = CountSource::standard());

/// Human-readable table with notes and a summary line.
std::string render_text(const IdentityReport& report);

/// One JSON object per grid point with fields identity_id, n, m, lhs, rhs
/// and verdict; counts are decimal strings.
std::string render_json_lines(const IdentityReport& report);

}  // namespace bpa
