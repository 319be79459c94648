#include "bpa/counting.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bpa/errors.hpp"
#include "bpa/exact.hpp"

namespace bpa {
namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1)
    throw Error("sha256 digest failed");
  static const char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Nat fubini(index_t n) {
  static std::mutex mu;
  static std::vector<Nat> memo;
  std::lock_guard<std::mutex> lock(mu);
  while (memo.size() <= n) {
    index_t k = memo.size();
    Nat v(0);
    for (index_t s = 0; s <= k; ++s) v += stirling2(k, s) * factorial(s);
    memo.push_back(std::move(v));
  }
  return memo[n];
}

Nat fubini_recurrence(index_t n) {
  static std::mutex mu;
  static std::vector<Nat> memo{Nat(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (memo.size() <= n) {
    index_t next = memo.size();  // computing J_next from J_0 .. J_{next-1}
    Nat v(0);
    for (index_t s = 0; s < next; ++s) v += binomial(next, s) * memo[s];
    memo.push_back(std::move(v));
  }
  return memo[n];
}

Nat barred_count(index_t n, index_t m) {
  Nat total(0);
  for (index_t s = 0; s <= n; ++s)
    total += stirling2(n, s) * factorial(s) * binomial(m + s, m);
  return total;
}

Nat barred_count_rec(index_t n, index_t m) {
  static std::mutex mu;
  static std::vector<std::vector<Nat>> memo;  // memo[m][n]
  static index_t width = 0;

  std::lock_guard<std::mutex> lock(mu);
  index_t new_width = std::max(width, n + 1);
  if (memo.empty()) memo.emplace_back();
  if (new_width > width) {
    for (index_t nn = width; nn < new_width; ++nn)
      memo[0].push_back(fubini(nn));
    for (index_t mm = 1; mm < memo.size(); ++mm) {
      for (index_t nn = width; nn < new_width; ++nn) {
        Nat v(0);
        for (index_t s = 0; s <= nn; ++s)
          v += binomial(nn, s) * memo[0][s] * memo[mm - 1][nn - s];
        memo[mm].push_back(std::move(v));
      }
    }
    width = new_width;
  }
  while (memo.size() <= m) {
    index_t mm = memo.size();
    std::vector<Nat> row;
    row.reserve(width);
    for (index_t nn = 0; nn < width; ++nn) {
      Nat v(0);
      for (index_t s = 0; s <= nn; ++s)
        v += binomial(nn, s) * memo[0][s] * memo[mm - 1][nn - s];
      row.push_back(std::move(v));
    }
    memo.push_back(std::move(row));
  }
  return memo[m][n];
}

Nat restricted_count(index_t n, index_t m) {
  Nat value = fubini(n);  // I_n^0
  for (index_t k = 0; k < m; ++k)
    value = 2 * value - power(Nat(static_cast<unsigned long>(k)), n);
  return value;
}

Nat restricted_count_sum(index_t n, index_t m) {
  Nat base(static_cast<unsigned long>(m));
  Nat total(0);
  for (index_t s = 0; s <= n; ++s)
    total += binomial(n, s) * power(base, n - s) * fubini(s);
  return total;
}

namespace {

Nat cell_closed(TableKind kind, index_t n, index_t m) {
  return kind == TableKind::Barred ? barred_count(n, m)
                                   : restricted_count_sum(n, m);
}

Nat cell_recurrence(TableKind kind, index_t n, index_t m) {
  return kind == TableKind::Barred ? barred_count_rec(n, m)
                                   : restricted_count(n, m);
}

}  // namespace

const Nat& CountTable::value(index_t n, index_t m) {
  if (rows_.empty() || n >= rows_.size() || m >= rows_[0].size())
    extend(std::max(n, n_max()), std::max(m, m_max()));
  return rows_[n][m];
}

const Nat& CountTable::at(index_t n, index_t m) const {
  if (n >= rows_.size() || m >= rows_[n].size())
    throw std::out_of_range("CountTable::at");
  return rows_[n][m];
}

Provenance CountTable::provenance(index_t n, index_t m) const {
  if (n >= prov_.size() || m >= prov_[n].size())
    throw std::out_of_range("CountTable::provenance");
  return prov_[n][m];
}

void CountTable::extend(index_t n_max, index_t m_max) {
  index_t new_rows = n_max + 1;
  index_t new_cols = m_max + 1;
  if (!rows_.empty()) {
    new_rows = std::max(new_rows, static_cast<index_t>(rows_.size()));
    new_cols = std::max(new_cols, static_cast<index_t>(rows_[0].size()));
  }
  rows_.resize(new_rows);
  prov_.resize(new_rows);
  for (index_t n = 0; n < new_rows; ++n) {
    for (index_t m = rows_[n].size(); m < new_cols; ++m) {
      Nat closed = cell_closed(kind_, n, m);
      Nat rec = cell_recurrence(kind_, n, m);
      if (closed != rec)
        throw InternalInconsistency(
            "closed form and recurrence disagree at n=" + std::to_string(n) +
            " m=" + std::to_string(m) + ": " + closed.get_str() + " vs " +
            rec.get_str());
      rows_[n].push_back(std::move(closed));
      prov_[n].push_back(Provenance::ClosedForm);
    }
  }
}

CountTable build_table(index_t n_max, index_t m_max, TableKind kind) {
  CountTable table(kind);
  table.extend(n_max, m_max);
  return table;
}

std::string table_kind_name(TableKind kind) {
  return kind == TableKind::Barred ? "barred" : "restricted";
}

void save_cache(const CountTable& table, std::ostream& out) {
  std::ostringstream body;
  body << "bpa-cache v1 " << table_kind_name(table.kind()) << "\n";
  for (index_t n = 0; n <= table.n_max(); ++n)
    for (index_t m = 0; m <= table.m_max(); ++m)
      body << n << " " << m << " " << table.at(n, m).get_str() << "\n";
  const std::string text = body.str();
  out << text << "# sha256 " << sha256_hex(text) << "\n";
  if (!out) throw IoFailure("cache write failed");
}

void save_cache(const CountTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot open cache file for writing: " + path);
  save_cache(table, out);
}

CountTable load_cache(std::istream& in) {
  std::string line;
  std::string digested;  // everything before the digest line, verbatim
  bool have_header = false;
  bool have_digest = false;
  TableKind kind = TableKind::Barred;
  struct Entry {
    index_t n, m;
    Nat value;
  };
  std::vector<Entry> entries;

  while (std::getline(in, line)) {
    if (have_digest)
      throw MalformedCache("content after checksum line");
    if (line.rfind("# sha256 ", 0) == 0) {
      const std::string expected = line.substr(9);
      if (sha256_hex(digested) != expected)
        throw MalformedCache("checksum mismatch");
      have_digest = true;
      continue;
    }
    digested += line;
    digested += '\n';
    if (!line.empty() && line[0] == '#') continue;
    if (!have_header) {
      if (line == "bpa-cache v1 barred")
        kind = TableKind::Barred;
      else if (line == "bpa-cache v1 restricted")
        kind = TableKind::Restricted;
      else
        throw MalformedCache("bad or missing cache header: \"" + line + "\"");
      have_header = true;
      continue;
    }
    std::istringstream fields(line);
    std::string n_str, m_str, v_str, extra;
    if (!(fields >> n_str >> m_str >> v_str) || (fields >> extra))
      throw MalformedCache("bad entry line: \"" + line + "\"");
    if (!all_digits(n_str) || !all_digits(m_str) || !all_digits(v_str))
      throw MalformedCache("bad entry line: \"" + line + "\"");
    entries.push_back(Entry{static_cast<index_t>(std::stoull(n_str)),
                            static_cast<index_t>(std::stoull(m_str)),
                            Nat(v_str)});
  }
  if (!have_header) throw MalformedCache("empty cache file");
  if (!have_digest) throw MalformedCache("missing checksum line");
  if (entries.empty()) throw MalformedCache("cache has no entries");

  // Entries must form a complete (n, m)-sorted grid.
  const index_t m_max = entries.back().m;
  const index_t n_max = entries.back().n;
  if (entries.size() != (n_max + 1) * (m_max + 1))
    throw MalformedCache("cache grid is incomplete");
  CountTable table(kind);
  table.rows_.resize(n_max + 1);
  table.prov_.resize(n_max + 1);
  index_t i = 0;
  for (index_t n = 0; n <= n_max; ++n) {
    for (index_t m = 0; m <= m_max; ++m, ++i) {
      if (entries[i].n != n || entries[i].m != m)
        throw MalformedCache("cache entries out of order or duplicated");
      table.rows_[n].push_back(std::move(entries[i].value));
      table.prov_[n].push_back(Provenance::LoadedFromCache);
    }
  }
  return table;
}

CountTable load_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open cache file: " + path);
  return load_cache(in);
}

}  // namespace bpa
