#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bpa/counting.hpp"
#include "bpa/numeric.hpp"

namespace bpa {

/// One block of an ordered set partition: distinct labels, kept ascending.
using Block = std::vector<int>;

/// An ordered partition of {1..ground_size} into nonempty blocks. The block
/// order matters ("who tied with whom, and in what order"); the order inside
/// a block does not, so blocks are stored sorted.
struct PreferentialArrangement {
  index_t ground_size = 0;
  std::vector<Block> blocks;

  friend bool operator==(const PreferentialArrangement&,
                         const PreferentialArrangement&) = default;
};

/// A preferential arrangement cut by m bars into m + 1 sections, any of
/// which may be empty. sections.size() is always bars() + 1.
struct BarredArrangement {
  index_t ground_size = 0;
  std::vector<std::vector<Block>> sections;

  index_t bars() const { return sections.empty() ? 0 : sections.size() - 1; }

  friend bool operator==(const BarredArrangement&,
                         const BarredArrangement&) = default;
};

/// Same shape as BarredArrangement, with the extra rule that every section
/// except the last holds at most one block. The last section is the free
/// section and may hold any preferential arrangement.
using RestrictedArrangement = BarredArrangement;

bool is_valid(const PreferentialArrangement& pa);
bool is_valid(const BarredArrangement& ba);
bool is_valid_restricted(const RestrictedArrangement& ra);

/// Wraps a preferential arrangement as a zero-bar barred arrangement.
BarredArrangement to_barred(const PreferentialArrangement& pa);

/// Visitors return false to stop early; each generator returns false when a
/// visitor did so, true after a complete stream.
using PreferentialVisitor = std::function<bool(const PreferentialArrangement&)>;
using BarredVisitor = std::function<bool(const BarredArrangement&)>;

/// Every preferential arrangement of {1..n} exactly once, ordered by block
/// count and then lexicographically by the block sequence. n = 0 yields the
/// single empty arrangement.
bool for_each_preferential(index_t n, const PreferentialVisitor& visit);

/// Every barred arrangement of {1..n} with m bars exactly once: outer order
/// follows for_each_preferential, inner order walks the bar placements of
/// each arrangement lexicographically by gap position.
bool for_each_barred(index_t n, index_t m, const BarredVisitor& visit);

/// Every restricted arrangement of {1..n} with m bars exactly once: for each
/// subset of {1..n} destined for the free section (subsets in lexicographic
/// order, empty first), each assignment of the leftover elements to the m
/// one-block sections, and each preferential arrangement of the subset.
bool for_each_restricted(index_t n, index_t m, const BarredVisitor& visit);

/// Brute-force safety limit for count_by_enumeration; larger n needs an
/// explicit override.
inline constexpr index_t kDefaultEnumerationLimit = 8;

/// Cardinality of the (n, m) stream of the given kind, by actually running
/// it. Throws LimitExceeded when n exceeds the safety limit (the override
/// replaces the default limit).
Nat count_by_enumeration(index_t n, index_t m, TableKind kind,
                         std::optional<index_t> limit_override = std::nullopt);

/// Like for_each_restricted but with the free section first instead of last;
/// only the count is exposed. Confirms that which section is designated free
/// does not change the count.
Nat count_restricted_free_first(index_t n, index_t m);

/// Text form: sections joined by '|', blocks inside a section joined by
/// single spaces, block members ascending. Labels are bare digits, or
/// comma-separated decimals when ground_size > 9. The empty arrangement with
/// m bars is m bars and nothing else.
std::string canonical_render(const BarredArrangement& a);

/// Inverse of canonical_render. Accepts unsorted members inside a block and
/// normalizes them; everything else is strict: single spaces, labels forming
/// exactly {1..max}. Throws ParseError (with byte position) or
/// DuplicateLabel. Comma/multi-digit form is detected from the text itself.
BarredArrangement parse(const std::string& text);

}  // namespace bpa
