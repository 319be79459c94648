#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include <json.hpp>

#include "bpa/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = bpa::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  return lines;
}

std::string temp_path(const std::string& stem) {
  return "/tmp/" + stem + "_" + std::to_string(getpid()) + ".txt";
}

}  // namespace

TEST_CASE("count prints one decimal") {
  CHECK(run({"count", "--n", "2", "--m", "2"}) ==
        Outcome{0, "15\n", ""});
  CHECK(run({"count", "--n", "4", "--m", "5"}).out == "5340\n");
  CHECK(run({"count", "--n", "2", "--m", "2", "--restricted"}).out == "11\n");
  CHECK(run({"count", "--n", "3"}).out == "13\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"count", "--n", "-1"}).code == 2);
  CHECK(run({"count"}).code == 2);            // --n is required
  CHECK(run({}).code == 2);                   // a subcommand is required
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"table", "--n-max", "2", "--m-max", "2", "--format", "yaml"})
            .code == 2);
  CHECK(run({"cache", "--n-max", "1", "--m-max", "1"}).code == 2);
  const Outcome both = run({"cache", "--save", "/tmp/x", "--load", "/tmp/x"});
  CHECK(both.code == 2);
  CHECK_FALSE(both.err.empty());
}

TEST_CASE("--help is not an error") {
  const Outcome help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("count") != std::string::npos);
}

TEST_CASE("table formats carry identical values") {
  const Outcome csv =
      run({"table", "--n-max", "2", "--m-max", "2", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out ==
        "n\\m,0,1,2\n"
        "0,1,1,1\n"
        "1,1,2,3\n"
        "2,3,8,15\n");

  const Outcome jl =
      run({"table", "--n-max", "2", "--m-max", "2", "--format", "json-lines"});
  CHECK(jl.code == 0);
  std::istringstream lines(jl.out);
  std::string line;
  std::vector<std::string> values;
  while (std::getline(lines, line))
    values.push_back(nlohmann::json::parse(line).at("value").get<std::string>());
  CHECK(values == std::vector<std::string>{"1", "1", "1", "1", "2", "3", "3",
                                           "8", "15"});

  const Outcome text = run({"table", "--n-max", "2", "--m-max", "2"});
  CHECK(text.code == 0);
  CHECK(text.out.find("n\\m") != std::string::npos);
  CHECK(text.out.find("15") != std::string::npos);
}

TEST_CASE("table handles the restricted family too") {
  const Outcome csv = run({"table", "--n-max", "2", "--m-max", "2",
                           "--restricted", "--format", "csv"});
  CHECK(csv.out ==
        "n\\m,0,1,2\n"
        "0,1,1,1\n"
        "1,1,2,3\n"
        "2,3,6,11\n");
}

TEST_CASE("enumerate emits canonical lines that tally with count") {
  const Outcome lines = run({"enumerate", "--n", "2", "--m", "1"});
  CHECK(lines.code == 0);
  CHECK(lines.out ==
        "|12\n12|\n|1 2\n1|2\n1 2|\n|2 1\n2|1\n2 1|\n");
  const Outcome total = run({"count", "--n", "2", "--m", "1"});
  CHECK(std::to_string(count_lines(lines.out)) + "\n" == total.out);

  const Outcome restricted =
      run({"enumerate", "--n", "2", "--m", "1", "--restricted"});
  CHECK(restricted.out == "12|\n2|1\n|12\n|1 2\n|2 1\n1|2\n");
}

TEST_CASE("enumerate marks an explicit truncation") {
  const Outcome cut = run({"enumerate", "--n", "2", "--m", "1", "--limit", "3"});
  CHECK(cut.code == 0);
  CHECK(cut.out == "|12\n12|\n|1 2\n# truncated\n");

  const Outcome uncut =
      run({"enumerate", "--n", "2", "--m", "1", "--limit", "99"});
  CHECK(uncut.out.find("# truncated") == std::string::npos);
}

TEST_CASE("enumerate refuses large n unless told otherwise") {
  const Outcome refused = run({"enumerate", "--n", "9", "--m", "0"});
  CHECK(refused.code == 2);
  CHECK(refused.out.empty());
  CHECK(refused.err.find("--force") != std::string::npos);

  // a limited stream over big n is lazy, so this returns immediately
  const Outcome limited =
      run({"enumerate", "--n", "9", "--m", "0", "--limit", "2"});
  CHECK(limited.code == 0);
  CHECK(limited.out == "123456789\n1 23456789\n# truncated\n");
}

TEST_CASE("series reports the integer with its certificate") {
  const Outcome series = run({"series", "--n", "3", "--m", "0"});
  CHECK(series.code == 0);
  CHECK(series.out.find("rounded 13\n") != std::string::npos);
  CHECK(series.out.find("terms_used ") != std::string::npos);
  CHECK(series.out.find("partial_sum ") != std::string::npos);
  CHECK(series.out.find("tail_bound ") != std::string::npos);

  CHECK(run({"series", "--n", "2", "--m", "2"}).out.find("rounded 15\n") !=
        std::string::npos);
}

TEST_CASE("verify reports success on a small grid") {
  const Outcome text = run({"verify", "--n-max", "3", "--m-max", "2"});
  CHECK(text.code == 0);
  CHECK(text.out.find("PASS") != std::string::npos);

  const Outcome jl = run({"verify", "--n-max", "3", "--m-max", "2", "--format",
                          "json-lines"});
  CHECK(jl.code == 0);
  std::istringstream lines(jl.out);
  std::string line;
  while (std::getline(lines, line)) {
    const nlohmann::json record = nlohmann::json::parse(line);
    CHECK(record.at("verdict") == "equal");
  }

  const Outcome parallel =
      run({"verify", "--n-max", "3", "--m-max", "2", "--jobs", "4"});
  CHECK(parallel.out == text.out);
}

TEST_CASE("oeis-check runs hermetically against the bundled fixture") {
  setenv("BPA_OEIS_FIXTURES", BPA_TEST_FIXTURE_DIR, 1);
  const Outcome ok = run({"oeis-check", "--offline"});
  CHECK(ok.code == 0);
  CHECK(ok.out ==
        "id A000670\n"
        "compared 13\n"
        "verdict match\n");

  const Outcome missing = run({"oeis-check", "--offline", "--id", "A999999"});
  CHECK(missing.code == 1);
  CHECK_FALSE(missing.err.empty());
  unsetenv("BPA_OEIS_FIXTURES");
}

TEST_CASE("cache saves, loads and rejects tampering") {
  const std::string path = temp_path("bpa_cli_cache");
  const Outcome saved = run({"cache", "--save", path, "--n-max", "3",
                             "--m-max", "2", "--restricted"});
  CHECK(saved == Outcome{0, "", ""});

  const Outcome loaded = run({"cache", "--load", path});
  CHECK(loaded.code == 0);
  CHECK(loaded.out == "loaded restricted table, n_max=3 m_max=2\n");

  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  in.close();
  std::string text = buffer.str();
  text[text.find("v1")] = 'V';
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();

  const Outcome rejected = run({"cache", "--load", path});
  CHECK(rejected.code == 1);
  CHECK_FALSE(rejected.err.empty());
  std::remove(path.c_str());

  CHECK(run({"cache", "--load", path}).code == 1);  // gone entirely
}
