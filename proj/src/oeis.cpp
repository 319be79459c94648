#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "bpa/oeis.hpp"

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "bpa/errors.hpp"

namespace bpa {
namespace {

bool decimal_integer(const std::string& s) {
  index_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool blank(const std::string& line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match:
      return "match";
    case Verdict::Mismatch:
      return "mismatch";
    default:
      return "insufficient-overlap";
  }
}

ComparisonReport compare(const Sequence& local, const Sequence& remote) {
  ComparisonReport report;
  const long long lo = std::max(local.offset, remote.offset);
  const long long hi =
      std::min(local.offset + static_cast<long long>(local.terms.size()),
               remote.offset + static_cast<long long>(remote.terms.size()));
  if (hi <= lo) return report;  // InsufficientOverlap
  report.compared = static_cast<index_t>(hi - lo);
  report.verdict = Verdict::Match;
  for (long long i = lo; i < hi; ++i) {
    const Nat& a = local.terms[static_cast<index_t>(i - local.offset)];
    const Nat& b = remote.terms[static_cast<index_t>(i - remote.offset)];
    if (a != b) {
      report.first_mismatch = ComparisonReport::Mismatch{i, a, b};
      report.verdict = Verdict::Mismatch;
      break;
    }
  }
  return report;
}

Sequence parse_bfile(const std::string& text) {
  Sequence seq;
  std::istringstream in(text);
  std::string line;
  index_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line) || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string index_str, value_str, extra;
    if (!(fields >> index_str >> value_str) || (fields >> extra))
      throw ParseError("b-file line " + std::to_string(line_no) +
                       " is not \"<index> <value>\"");
    if (!decimal_integer(index_str) || !decimal_integer(value_str))
      throw ParseError("b-file line " + std::to_string(line_no) +
                       " has a non-numeric field");
    const long long index = std::stoll(index_str);
    if (seq.terms.empty())
      seq.offset = index;
    else if (index != seq.offset + static_cast<long long>(seq.terms.size()))
      throw ParseError("b-file line " + std::to_string(line_no) +
                       ": index " + index_str + " breaks the run from " +
                       std::to_string(seq.offset));
    seq.terms.emplace_back(value_str);
  }
  if (seq.terms.empty()) throw ParseError("b-file has no terms");
  return seq;
}

std::string render_bfile(const Sequence& seq) {
  std::ostringstream out;
  for (index_t i = 0; i < seq.terms.size(); ++i)
    out << seq.offset + static_cast<long long>(i) << " "
        << seq.terms[i].get_str() << "\n";
  return out.str();
}

namespace {

std::string fixture_directory(const FetchOptions& options) {
  if (!options.fixture_dir.empty()) return options.fixture_dir;
  if (const char* env = std::getenv("BPA_OEIS_FIXTURES")) return env;
  return "data/oeis";  // the in-repo fixtures, when run from a checkout
}

Sequence from_fixture(const std::string& id, const std::string& dir,
                      const std::string& bfile_name) {
  const std::string path = dir + "/" + bfile_name;
  std::ifstream in(path);
  if (!in)
    throw NetworkFailure("offline and no fixture for " + id + " at " + path);
  std::ostringstream text;
  text << in.rdbuf();
  Sequence seq = parse_bfile(text.str());
  seq.id = id;
  return seq;
}

}  // namespace

Sequence fetch_bfile(const std::string& id, const FetchOptions& options) {
  if (id.size() != 7 || id[0] != 'A' ||
      !decimal_integer(id.substr(1)))
    throw ParseError("not an OEIS sequence id: \"" + id + "\"");
  const std::string bfile_name = "b" + id.substr(1) + ".txt";

  if (options.offline)
    return from_fixture(id, fixture_directory(options), bfile_name);

  httplib::Client client(options.base_url);
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(10, 0);
  const std::string path = "/" + id + "/" + bfile_name;

  for (int attempt = 0;; ++attempt) {
    httplib::Result res = client.Get(path);
    if (res && res->status == 200) {
      Sequence seq = parse_bfile(res->body);
      seq.id = id;
      return seq;
    }
    if (res && res->status == 404)
      throw NotFound("no b-file for " + id + " at " + options.base_url);
    if (attempt == 0) {  // one retry after a transient failure
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
      continue;
    }
    if (res)
      throw NetworkFailure("fetching " + id + " gave HTTP status " +
                           std::to_string(res->status));
    throw NetworkFailure("could not reach " + options.base_url + " for " + id);
  }
}

}  // namespace bpa
