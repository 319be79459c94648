#include "bpa/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bpa/arrangements.hpp"
#include "bpa/counting.hpp"
#include "bpa/errors.hpp"
#include "bpa/identities.hpp"
#include "bpa/oeis.hpp"
#include "bpa/series.hpp"

namespace bpa::cli {
namespace {

void render_table_text(const CountTable& table, std::ostream& out) {
  const index_t cols = table.m_max() + 1;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"n\\m"};
  for (index_t m = 0; m < cols; ++m) header.push_back(std::to_string(m));
  cells.push_back(std::move(header));
  for (index_t n = 0; n <= table.n_max(); ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (index_t m = 0; m < cols; ++m) row.push_back(table.at(n, m).get_str());
    cells.push_back(std::move(row));
  }
  std::vector<index_t> width(cols + 1, 0);
  for (const auto& row : cells)
    for (index_t c = 0; c < row.size(); ++c)
      width[c] = std::max<index_t>(width[c], row[c].size());
  for (const auto& row : cells) {
    for (index_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << "\n";
  }
}

void render_table_csv(const CountTable& table, std::ostream& out) {
  out << "n\\m";
  for (index_t m = 0; m <= table.m_max(); ++m) out << "," << m;
  out << "\n";
  for (index_t n = 0; n <= table.n_max(); ++n) {
    out << n;
    for (index_t m = 0; m <= table.m_max(); ++m)
      out << "," << table.at(n, m).get_str();
    out << "\n";
  }
}

void render_table_json_lines(const CountTable& table, std::ostream& out) {
  for (index_t n = 0; n <= table.n_max(); ++n) {
    for (index_t m = 0; m <= table.m_max(); ++m) {
      nlohmann::ordered_json record;
      record["n"] = n;
      record["m"] = m;
      record["value"] = table.at(n, m).get_str();
      out << record.dump() << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact counting, enumeration and cross-verification of barred "
               "preferential arrangements"};
  app.require_subcommand(1);

  // Every subcommand binds its own variables; CLI11 applies default_val() to
  // the bound variable as soon as the option is declared, so sharing one
  // variable between subcommands would let the last declaration win.
  CLI::App* count_cmd =
      app.add_subcommand("count", "print one exact count as a decimal");
  index_t count_n = 0, count_m = 0;
  bool count_restricted = false;
  count_cmd->add_option("--n", count_n, "number of elements")->required();
  count_cmd->add_option("--m", count_m, "number of bars")->default_val(0);
  count_cmd->add_flag("--restricted", count_restricted,
                      "count restricted arrangements instead");

  CLI::App* table_cmd =
      app.add_subcommand("table", "print a grid of counts for n, m ranges");
  index_t table_n_max = 0, table_m_max = 0;
  bool table_restricted = false;
  std::string table_format = "text";
  table_cmd->add_option("--n-max", table_n_max, "largest n")->required();
  table_cmd->add_option("--m-max", table_m_max, "largest m")->required();
  table_cmd->add_flag("--restricted", table_restricted,
                      "tabulate restricted arrangements instead");
  table_cmd->add_option("--format", table_format, "text, csv or json-lines")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "csv", "json-lines"}));

  CLI::App* enumerate_cmd = app.add_subcommand(
      "enumerate", "print every arrangement, one canonical line each");
  index_t enum_n = 0, enum_m = 0;
  bool enum_restricted = false;
  enumerate_cmd->add_option("--n", enum_n, "number of elements")->required();
  enumerate_cmd->add_option("--m", enum_m, "number of bars")->default_val(0);
  enumerate_cmd->add_flag("--restricted", enum_restricted,
                          "enumerate restricted arrangements instead");
  index_t limit = 0;
  CLI::Option* limit_opt = enumerate_cmd->add_option(
      "--limit", limit, "stop after this many lines, marking the cut");
  bool force = false;
  enumerate_cmd->add_flag(
      "--force", force,
      "enumerate beyond n=" + std::to_string(kDefaultEnumerationLimit));

  CLI::App* series_cmd = app.add_subcommand(
      "series", "evaluate the convergent series for one count");
  index_t series_n = 0, series_m = 0;
  series_cmd->add_option("--n", series_n, "number of elements")->required();
  series_cmd->add_option("--m", series_m, "number of bars")->default_val(0);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check every identity over a grid");
  index_t verify_n_max = 8, verify_m_max = 5, jobs = 1;
  std::string verify_format = "text";
  verify_cmd->add_option("--n-max", verify_n_max, "largest n")->default_val(8);
  verify_cmd->add_option("--m-max", verify_m_max, "largest m")->default_val(5);
  verify_cmd->add_option("--format", verify_format, "text or json-lines")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json-lines"}));
  verify_cmd->add_option("--jobs", jobs, "parallel verifier threads")
      ->default_val(1);

  CLI::App* oeis_cmd = app.add_subcommand(
      "oeis-check", "compare computed values against a published sequence");
  std::string oeis_id = "A000670";
  index_t oeis_n_max = 12;
  bool offline = false;
  oeis_cmd->add_option("--id", oeis_id, "OEIS sequence id")
      ->default_val("A000670");
  oeis_cmd->add_flag("--offline", offline, "use local fixtures, no network");
  oeis_cmd->add_option("--n-max", oeis_n_max, "compare terms 0..n-max")
      ->default_val(12);

  CLI::App* cache_cmd =
      app.add_subcommand("cache", "save or load a checksummed count table");
  std::string save_path, load_path;
  index_t cache_n_max = 0, cache_m_max = 0;
  bool cache_restricted = false;
  CLI::Option* save_opt =
      cache_cmd->add_option("--save", save_path, "write a table to this file");
  CLI::Option* load_opt =
      cache_cmd->add_option("--load", load_path, "read and validate this file");
  cache_cmd->add_option("--n-max", cache_n_max, "largest n when saving")
      ->default_val(0);
  cache_cmd->add_option("--m-max", cache_m_max, "largest m when saving")
      ->default_val(0);
  cache_cmd->add_flag("--restricted", cache_restricted,
                      "save the restricted table instead");

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("bpa");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count_cmd->parsed()) {
      out << (count_restricted ? restricted_count(count_n, count_m)
                               : barred_count(count_n, count_m))
                 .get_str()
          << "\n";
      return 0;
    }

    if (table_cmd->parsed()) {
      const CountTable table = build_table(
          table_n_max, table_m_max,
          table_restricted ? TableKind::Restricted : TableKind::Barred);
      if (table_format == "csv")
        render_table_csv(table, out);
      else if (table_format == "json-lines")
        render_table_json_lines(table, out);
      else
        render_table_text(table, out);
      return 0;
    }

    if (enumerate_cmd->parsed()) {
      const bool has_limit = limit_opt->count() > 0;
      if (enum_n > kDefaultEnumerationLimit && !force && !has_limit) {
        err << "refusing to enumerate n=" << enum_n << " (more than "
            << kDefaultEnumerationLimit
            << " elements); pass --limit or --force\n";
        return 2;
      }
      index_t emitted = 0;
      bool truncated = false;
      auto visit = [&](const BarredArrangement& a) {
        if (has_limit && emitted == limit) {
          truncated = true;
          return false;
        }
        out << canonical_render(a) << "\n";
        ++emitted;
        return true;
      };
      if (enum_restricted)
        for_each_restricted(enum_n, enum_m, visit);
      else
        for_each_barred(enum_n, enum_m, visit);
      if (truncated) out << "# truncated\n";
      return 0;
    }

    if (series_cmd->parsed()) {
      const SeriesResult result = barred_series(series_n, series_m);
      out << "rounded " << result.rounded.get_str() << "\n"
          << "terms_used " << result.terms_used << "\n"
          << "partial_sum " << result.partial_sum.get_str() << "\n"
          << "tail_bound " << result.tail_bound.get_str() << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      const IdentityReport report = verify_all(verify_n_max, verify_m_max, jobs);
      out << (verify_format == "json-lines" ? render_json_lines(report)
                                            : render_text(report));
      return report.passed() ? 0 : 1;
    }

    if (oeis_cmd->parsed()) {
      Sequence local;
      local.id = oeis_id;
      local.offset = 0;
      for (index_t i = 0; i <= oeis_n_max; ++i)
        local.terms.push_back(fubini(i));
      FetchOptions options;
      options.offline = offline;
      const Sequence remote = fetch_bfile(oeis_id, options);
      const ComparisonReport report = compare(local, remote);
      out << "id " << oeis_id << "\n"
          << "compared " << report.compared << "\n"
          << "verdict " << verdict_name(report.verdict) << "\n";
      if (report.first_mismatch) {
        out << "first_mismatch index=" << report.first_mismatch->index
            << " local=" << report.first_mismatch->local.get_str()
            << " remote=" << report.first_mismatch->remote.get_str() << "\n";
      }
      return report.verdict == Verdict::Match ? 0 : 1;
    }

    if (cache_cmd->parsed()) {
      if ((save_opt->count() > 0) == (load_opt->count() > 0)) {
        err << "cache needs exactly one of --save or --load\n";
        return 2;
      }
      if (save_opt->count() > 0) {
        save_cache(build_table(cache_n_max, cache_m_max,
                               cache_restricted ? TableKind::Restricted
                                                : TableKind::Barred),
                   save_path);
        return 0;
      }
      const CountTable table = load_cache(load_path);
      out << "loaded " << table_kind_name(table.kind())
          << " table, n_max=" << table.n_max() << " m_max=" << table.m_max()
          << "\n";
      return 0;
    }
  } catch (const LimitExceeded& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 2;  // no subcommand matched; require_subcommand should prevent this
}

}  // namespace bpa::cli
