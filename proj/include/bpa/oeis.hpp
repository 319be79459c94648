#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bpa/numeric.hpp"

namespace bpa {

/// An integer sequence as published in an OEIS b-file: consecutive terms
/// starting at `offset`.
struct Sequence {
  std::string id;  // e.g. "A000670"; empty when parsed from bare text
  long long offset = 0;
  std::vector<Nat> terms;

  friend bool operator==(const Sequence&, const Sequence&) = default;
};

enum class Verdict { Match, Mismatch, InsufficientOverlap };

std::string verdict_name(Verdict v);

/// Element-wise comparison over the overlapping index range of two
/// sequences. With no overlap the verdict is InsufficientOverlap; a verdict
/// of Match requires at least one compared term.
struct ComparisonReport {
  struct Mismatch {
    long long index;
    Nat local;
    Nat remote;
  };

  index_t compared = 0;
  std::optional<Mismatch> first_mismatch;
  Verdict verdict = Verdict::InsufficientOverlap;
};

ComparisonReport compare(const Sequence& local, const Sequence& remote);

/// Parses b-file text: lines starting with '#' and blank lines are skipped,
/// every other line is "<index> <value>", indices consecutive. Throws
/// ParseError on malformed lines, gaps, or an empty sequence.
Sequence parse_bfile(const std::string& text);

/// Inverse of parse_bfile for locally built sequences (the id is not part
/// of the b-file format and is not rendered).
std::string render_bfile(const Sequence& seq);

struct FetchOptions {
  bool offline = false;
  /// Directory holding bNNNNNN.txt fixtures; when empty, the
  /// BPA_OEIS_FIXTURES environment variable is consulted.
  std::string fixture_dir;
  std::string base_url = "https://oeis.org";
};

/// Retrieves and parses the b-file for an id of the form A-followed-by-six-
/// digits. Offline mode reads only the fixture directory and reports a
/// missing fixture as NetworkFailure. Online, a failed request is retried
/// once after a short pause; 404 means NotFound.
Sequence fetch_bfile(const std::string& id, const FetchOptions& options = {});

}  // namespace bpa
