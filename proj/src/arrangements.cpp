#include "bpa/arrangements.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <string>

#include "bpa/errors.hpp"

namespace bpa {
namespace {

using Blocks = std::vector<Block>;
using BlocksVisitor = std::function<bool(const Blocks&)>;

// Visits every ordered partition of pool (ascending labels) into exactly
// k_left further nonempty blocks, appended to prefix. Candidate first blocks
// are tried in subset-lex order: a block counts as complete the moment it is
// nonempty, and each completion is explored before the block is extended
// with a larger element. That makes the full stream lexicographic in the
// block sequence.
bool into_blocks(const std::vector<int>& pool, index_t k_left, Blocks& prefix,
                 const BlocksVisitor& visit) {
  if (k_left == 1) {
    prefix.push_back(pool);
    bool keep = visit(prefix);
    prefix.pop_back();
    return keep;
  }
  const index_t cap = pool.size() - (k_left - 1);  // one element per later block
  Block block;
  std::vector<char> taken(pool.size(), 0);
  std::function<bool(index_t)> grow = [&](index_t from) -> bool {
    if (!block.empty()) {
      std::vector<int> rest;
      rest.reserve(pool.size() - block.size());
      for (index_t i = 0; i < pool.size(); ++i)
        if (!taken[i]) rest.push_back(pool[i]);
      prefix.push_back(block);
      bool keep = into_blocks(rest, k_left - 1, prefix, visit);
      prefix.pop_back();
      if (!keep) return false;
      if (block.size() == cap) return true;
    }
    for (index_t j = from; j < pool.size(); ++j) {
      taken[j] = 1;
      block.push_back(pool[j]);
      bool keep = grow(j + 1);
      block.pop_back();
      taken[j] = 0;
      if (!keep) return false;
    }
    return true;
  };
  return grow(0);
}

// Preferential arrangements of an arbitrary ascending element list, ordered
// by block count then lexicographically. An empty list yields one empty
// arrangement.
bool for_each_pa_blocks(const std::vector<int>& elems,
                        const BlocksVisitor& visit) {
  if (elems.empty()) {
    Blocks none;
    return visit(none);
  }
  Blocks prefix;
  for (index_t k = 1; k <= elems.size(); ++k)
    if (!into_blocks(elems, k, prefix, visit)) return false;
  return true;
}

// Non-decreasing m-tuples of gap positions in 0..k, in lexicographic order.
// Gap g sits before block g; gap k sits after the last block.
bool for_each_bar_placement(
    index_t k, index_t m,
    const std::function<bool(const std::vector<index_t>&)>& visit) {
  std::vector<index_t> gaps(m, 0);
  for (;;) {
    if (!visit(gaps)) return false;
    index_t i = m;
    while (i > 0 && gaps[i - 1] == k) --i;
    if (i == 0) return true;
    ++gaps[i - 1];
    for (index_t j = i; j < m; ++j) gaps[j] = gaps[i - 1];
  }
}

std::vector<Blocks> cut_into_sections(const Blocks& blocks,
                                      const std::vector<index_t>& gaps) {
  std::vector<Blocks> sections;
  sections.reserve(gaps.size() + 1);
  Blocks current;
  index_t next_bar = 0;
  const index_t k = blocks.size();
  for (index_t g = 0; g <= k; ++g) {
    while (next_bar < gaps.size() && gaps[next_bar] == g) {
      sections.push_back(std::move(current));
      current.clear();
      ++next_bar;
    }
    if (g < k) current.push_back(blocks[g]);
  }
  sections.push_back(std::move(current));
  return sections;
}

// Subsets of {1..n} in lexicographic order, empty set first.
bool for_each_subset(index_t n,
                     const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> subset;
  std::function<bool(int)> grow = [&](int from) -> bool {
    if (!visit(subset)) return false;
    for (int j = from; j <= static_cast<int>(n); ++j) {
      subset.push_back(j);
      bool keep = grow(j + 1);
      subset.pop_back();
      if (!keep) return false;
    }
    return true;
  };
  return grow(1);
}

bool for_each_restricted_impl(index_t n, index_t m, bool free_first,
                              const BarredVisitor& visit) {
  BarredArrangement ra;
  ra.ground_size = n;
  return for_each_subset(n, [&](const std::vector<int>& subset) {
    std::vector<int> leftover;
    leftover.reserve(n - subset.size());
    index_t p = 0;
    for (int e = 1; e <= static_cast<int>(n); ++e) {
      if (p < subset.size() && subset[p] == e)
        ++p;
      else
        leftover.push_back(e);
    }
    if (!leftover.empty() && m == 0) return true;  // nowhere to put them

    std::vector<index_t> digit(leftover.size(), 0);  // element -> section
    for (;;) {
      std::vector<Block> members(m);
      for (index_t i = 0; i < leftover.size(); ++i)
        members[digit[i]].push_back(leftover[i]);

      bool keep = for_each_pa_blocks(subset, [&](const Blocks& free_blocks) {
        ra.sections.clear();
        ra.sections.reserve(m + 1);
        if (free_first) ra.sections.push_back(free_blocks);
        for (index_t g = 0; g < m; ++g) {
          if (members[g].empty())
            ra.sections.emplace_back();
          else
            ra.sections.push_back(Blocks{members[g]});
        }
        if (!free_first) ra.sections.push_back(free_blocks);
        return visit(ra);
      });
      if (!keep) return false;

      index_t i = leftover.size();
      while (i > 0 && digit[i - 1] == m - 1) {
        digit[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
      ++digit[i - 1];
    }
    return true;
  });
}

// Shared block-list well-formedness: nonempty blocks, ascending distinct
// labels within 1..n, no label reuse across the accumulating `seen` set.
bool blocks_well_formed(const Blocks& blocks, index_t n, std::set<int>& seen) {
  for (const Block& b : blocks) {
    if (b.empty()) return false;
    for (index_t i = 0; i < b.size(); ++i) {
      const int label = b[i];
      if (label < 1 || label > static_cast<int>(n)) return false;
      if (i > 0 && b[i - 1] >= label) return false;
      if (!seen.insert(label).second) return false;
    }
  }
  return true;
}

}  // namespace

bool is_valid(const PreferentialArrangement& pa) {
  std::set<int> seen;
  return blocks_well_formed(pa.blocks, pa.ground_size, seen) &&
         seen.size() == pa.ground_size;
}

bool is_valid(const BarredArrangement& ba) {
  if (ba.sections.empty()) return false;
  std::set<int> seen;
  for (const auto& section : ba.sections)
    if (!blocks_well_formed(section, ba.ground_size, seen)) return false;
  return seen.size() == ba.ground_size;
}

bool is_valid_restricted(const RestrictedArrangement& ra) {
  if (!is_valid(ra)) return false;
  for (index_t s = 0; s + 1 < ra.sections.size(); ++s)
    if (ra.sections[s].size() > 1) return false;
  return true;
}

BarredArrangement to_barred(const PreferentialArrangement& pa) {
  return BarredArrangement{pa.ground_size, {pa.blocks}};
}

bool for_each_preferential(index_t n, const PreferentialVisitor& visit) {
  PreferentialArrangement pa;
  pa.ground_size = n;
  if (n == 0) return visit(pa);
  std::vector<int> elems(n);
  std::iota(elems.begin(), elems.end(), 1);
  Blocks prefix;
  for (index_t k = 1; k <= n; ++k) {
    bool keep = into_blocks(elems, k, prefix, [&](const Blocks& blocks) {
      pa.blocks = blocks;
      return visit(pa);
    });
    if (!keep) return false;
  }
  return true;
}

bool for_each_barred(index_t n, index_t m, const BarredVisitor& visit) {
  BarredArrangement ba;
  ba.ground_size = n;
  return for_each_preferential(n, [&](const PreferentialArrangement& pa) {
    return for_each_bar_placement(
        pa.blocks.size(), m, [&](const std::vector<index_t>& gaps) {
          ba.sections = cut_into_sections(pa.blocks, gaps);
          return visit(ba);
        });
  });
}

bool for_each_restricted(index_t n, index_t m, const BarredVisitor& visit) {
  return for_each_restricted_impl(n, m, false, visit);
}

Nat count_by_enumeration(index_t n, index_t m, TableKind kind,
                         std::optional<index_t> limit_override) {
  const index_t limit = limit_override.value_or(kDefaultEnumerationLimit);
  if (n > limit)
    throw LimitExceeded("enumeration at n=" + std::to_string(n) +
                        " exceeds the safety limit of " +
                        std::to_string(limit));
  Nat count = 0;
  auto tally = [&count](const BarredArrangement&) {
    count += 1;
    return true;
  };
  if (kind == TableKind::Barred)
    for_each_barred(n, m, tally);
  else
    for_each_restricted(n, m, tally);
  return count;
}

Nat count_restricted_free_first(index_t n, index_t m) {
  Nat count = 0;
  for_each_restricted_impl(n, m, true, [&count](const BarredArrangement&) {
    count += 1;
    return true;
  });
  return count;
}

std::string canonical_render(const BarredArrangement& a) {
  const bool multi = a.ground_size > 9;
  std::string out;
  for (index_t s = 0; s < a.sections.size(); ++s) {
    if (s > 0) out.push_back('|');
    for (index_t b = 0; b < a.sections[s].size(); ++b) {
      if (b > 0) out.push_back(' ');
      Block block = a.sections[s][b];
      std::sort(block.begin(), block.end());
      for (index_t i = 0; i < block.size(); ++i) {
        if (multi) {
          if (i > 0) out.push_back(',');
          out += std::to_string(block[i]);
        } else {
          out.push_back(static_cast<char>('0' + block[i]));
        }
      }
    }
  }
  return out;
}

BarredArrangement parse(const std::string& text) {
  // Any arrangement over more than nine elements necessarily contains the
  // label 10, so a '0' (or an explicit comma) in the text identifies the
  // comma-separated form unambiguously.
  const bool multi = text.find(',') != std::string::npos ||
                     text.find('0') != std::string::npos;
  BarredArrangement result;
  result.sections.emplace_back();
  std::set<int> seen;
  int max_label = 0;
  index_t i = 0;
  const index_t size = text.size();

  auto at_digit = [&]() {
    return i < size && std::isdigit(static_cast<unsigned char>(text[i]));
  };

  auto read_label = [&]() -> int {
    const index_t start = i;
    if (!at_digit()) throw ParseError("expected a label", i);
    int value = 0;
    if (multi) {
      while (at_digit()) ++i;
      const std::string token = text.substr(start, i - start);
      if (token.size() > 1 && token[0] == '0')
        throw ParseError("label has a leading zero", start);
      if (token.size() > 9) throw ParseError("label is too large", start);
      value = std::stoi(token);
    } else {
      value = text[i++] - '0';
    }
    if (value < 1) throw ParseError("labels start at 1", start);
    if (!seen.insert(value).second)
      throw DuplicateLabel("duplicate label " + std::to_string(value), start,
                           value);
    max_label = std::max(max_label, value);
    return value;
  };

  auto read_block = [&]() -> Block {
    Block block;
    block.push_back(read_label());
    if (multi) {
      while (i < size && text[i] == ',') {
        ++i;
        block.push_back(read_label());
      }
    } else {
      while (at_digit()) block.push_back(read_label());
    }
    std::sort(block.begin(), block.end());
    return block;
  };

  while (i < size) {
    const char c = text[i];
    if (c == '|') {
      result.sections.emplace_back();
      ++i;
    } else if (c == ' ') {
      if (result.sections.back().empty())
        throw ParseError("space before any block", i);
      ++i;
      if (!at_digit()) throw ParseError("expected a block after space", i);
      result.sections.back().push_back(read_block());
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      result.sections.back().push_back(read_block());
    } else {
      throw ParseError("unexpected character", i);
    }
  }

  if (seen.size() != static_cast<index_t>(max_label))
    throw ParseError("labels must cover 1.." + std::to_string(max_label) +
                     " with none missing");
  result.ground_size = static_cast<index_t>(max_label);
  return result;
}

}  // namespace bpa
