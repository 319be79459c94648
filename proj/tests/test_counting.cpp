#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "bpa/counting.hpp"
#include "bpa/errors.hpp"

using namespace bpa;

namespace {

const char* kFubini[] = {"1",       "1",       "3",         "13",
                         "75",      "541",     "4683",      "47293",
                         "545835",  "7087261", "102247563", "1622632573",
                         "28091567595"};

std::string saved_text(const CountTable& table) {
  std::ostringstream out;
  save_cache(table, out);
  return out.str();
}

}  // namespace

TEST_CASE("fubini matches the published values through n = 12") {
  for (index_t n = 0; n <= 12; ++n) {
    CHECK(fubini(n) == Nat(kFubini[n]));
    CHECK(fubini_recurrence(n) == Nat(kFubini[n]));
  }
}

TEST_CASE("barred counts at hand-checked points") {
  CHECK(barred_count(2, 1) == 8);
  CHECK(barred_count(2, 2) == 15);
  CHECK(barred_count(3, 1) == 44);
  CHECK(barred_count(3, 2) == 99);
  CHECK(barred_count(4, 5) == 5340);
}

TEST_CASE("barred counts, boundary rows") {
  for (index_t n = 0; n <= 10; ++n) CHECK(barred_count(n, 0) == fubini(n));
  for (index_t m = 0; m <= 10; ++m) {
    CHECK(barred_count(0, m) == 1);
    CHECK(barred_count(1, m) == m + 1);
  }
}

TEST_CASE("barred closed form and recurrence agree on a grid") {
  for (index_t n = 0; n <= 12; ++n)
    for (index_t m = 0; m <= 6; ++m)
      CHECK(barred_count(n, m) == barred_count_rec(n, m));
}

TEST_CASE("barred counts grow strictly in both directions") {
  // The lone flat step is 1 = 1 from (0,0) to (1,0); everywhere else both
  // directions are strict.
  for (index_t n = 0; n <= 20; ++n)
    for (index_t m = 0; m <= 8; ++m) {
      if (n >= 1) CHECK(barred_count(n, m) < barred_count(n, m + 1));
      if (n >= 1 || m >= 1)
        CHECK(barred_count(n, m) < barred_count(n + 1, m));
    }
}

TEST_CASE("restricted counts at hand-checked points") {
  CHECK(restricted_count(1, 1) == 2);
  CHECK(restricted_count(2, 1) == 6);
  CHECK(restricted_count(2, 2) == 11);
  CHECK(restricted_count(2, 3) == 18);
}

TEST_CASE("restricted counts, boundary rows") {
  for (index_t n = 0; n <= 10; ++n) CHECK(restricted_count(n, 0) == fubini(n));
  for (index_t m = 0; m <= 10; ++m) CHECK(restricted_count(0, m) == 1);
  for (index_t n = 1; n <= 20; ++n)
    CHECK(restricted_count(n, 1) == 2 * fubini(n));
}

TEST_CASE("restricted iteration and binomial sum agree on a grid") {
  for (index_t n = 0; n <= 10; ++n)
    for (index_t m = 0; m <= 6; ++m)
      CHECK(restricted_count(n, m) == restricted_count_sum(n, m));
}

TEST_CASE("tables hold cross-checked values") {
  CountTable barred = build_table(5, 3, TableKind::Barred);
  CHECK(barred.kind() == TableKind::Barred);
  CHECK(barred.n_max() == 5);
  CHECK(barred.m_max() == 3);
  CHECK(barred.at(2, 2) == 15);
  CHECK(barred.at(4, 0) == 75);
  CHECK(barred.provenance(4, 2) == Provenance::ClosedForm);
  CHECK_THROWS_AS(barred.at(6, 0), std::out_of_range);
  CHECK_THROWS_AS(barred.at(0, 4), std::out_of_range);

  CountTable restricted = build_table(4, 4, TableKind::Restricted);
  CHECK(restricted.at(2, 2) == 11);
  CHECK(restricted.at(2, 3) == 18);
}

TEST_CASE("value() grows the table on demand, extend() never shrinks") {
  CountTable table(TableKind::Barred);
  CHECK(table.empty());
  CHECK(table.value(2, 2) == 15);
  CHECK_FALSE(table.empty());
  table.extend(1, 1);  // smaller request: a no-op
  CHECK(table.n_max() == 2);
  CHECK(table.m_max() == 2);
  table.extend(4, 5);
  CHECK(table.at(4, 5) == 5340);
  CHECK(table == build_table(4, 5, TableKind::Barred));
}

TEST_CASE("tables of different kinds never compare equal") {
  CHECK_FALSE(build_table(1, 1, TableKind::Barred) ==
              build_table(1, 1, TableKind::Restricted));
}

TEST_CASE("cache save emits the pinned layout") {
  const std::string text = saved_text(build_table(1, 1, TableKind::Barred));
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "bpa-cache v1 barred");
  std::getline(in, line);
  CHECK(line == "0 0 1");
  std::getline(in, line);
  CHECK(line == "0 1 1");
  std::getline(in, line);
  CHECK(line == "1 0 1");
  std::getline(in, line);
  CHECK(line == "1 1 2");
  std::getline(in, line);
  REQUIRE(line.rfind("# sha256 ", 0) == 0);
  CHECK(line.size() == 9 + 64);
  CHECK(line.find_first_not_of("0123456789abcdef", 9) == std::string::npos);
  CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("cache round-trips through a stream, byte for byte") {
  const CountTable table = build_table(6, 4, TableKind::Restricted);
  const std::string text = saved_text(table);
  std::istringstream in(text);
  const CountTable loaded = load_cache(in);
  CHECK(loaded == table);
  CHECK(loaded.kind() == TableKind::Restricted);
  CHECK(loaded.provenance(3, 2) == Provenance::LoadedFromCache);
  CHECK(saved_text(loaded) == text);
}

TEST_CASE("cache round-trips through a file") {
  const std::string path =
      "/tmp/bpa_counting_cache_" + std::to_string(getpid()) + ".txt";
  const CountTable table = build_table(3, 2, TableKind::Barred);
  save_cache(table, path);
  CHECK(load_cache(path) == table);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_cache(path), IoFailure);
}

TEST_CASE("loader rejects tampering and truncation") {
  std::string text = saved_text(build_table(2, 2, TableKind::Barred));

  SUBCASE("flipped digit") {
    text.replace(text.find("2 2 15"), 6, "2 2 16");
    std::istringstream in(text);
    CHECK_THROWS_AS(load_cache(in), MalformedCache);
  }
  SUBCASE("missing checksum line") {
    text.resize(text.rfind("# sha256"));
    std::istringstream in(text);
    CHECK_THROWS_AS(load_cache(in), MalformedCache);
  }
  SUBCASE("trailing junk after the checksum") {
    text += "0 0 1\n";
    std::istringstream in(text);
    CHECK_THROWS_AS(load_cache(in), MalformedCache);
  }
  SUBCASE("empty input") {
    std::istringstream in("");
    CHECK_THROWS_AS(load_cache(in), MalformedCache);
  }
  SUBCASE("foreign header") {
    std::istringstream in("bpa-cache v2 barred\n0 0 1\n");
    CHECK_THROWS_AS(load_cache(in), MalformedCache);
  }
  SUBCASE("entry line with missing field") {
    std::istringstream in("bpa-cache v1 barred\n0 0\n");
    CHECK_THROWS_AS(load_cache(in), MalformedCache);
  }
  SUBCASE("entry line with a negative count") {
    std::istringstream in("bpa-cache v1 barred\n0 0 -1\n");
    CHECK_THROWS_AS(load_cache(in), MalformedCache);
  }
}

TEST_CASE("loader digests comment lines but does not parse them") {
  const std::string text =
      "bpa-cache v1 barred\n"
      "0 0 1\n"
      "0 1 1\n"
      "# a remark the loader must skip but digest\n"
      "1 0 1\n"
      "1 1 2\n"
      "# sha256 fee2eaa75d0fa8698363b858790028a158e41aac9a07b4bf8ec14a5f52d632f5\n";
  std::istringstream in(text);
  const CountTable loaded = load_cache(in);
  CHECK(loaded == build_table(1, 1, TableKind::Barred));
}

TEST_CASE("loader rejects a misordered grid even when the checksum holds") {
  const std::string text =
      "bpa-cache v1 barred\n"
      "0 1 1\n"
      "0 0 1\n"
      "1 0 1\n"
      "1 1 2\n"
      "# sha256 2e1b76ba4cf5bf25c8368847ebd358caa9b75fa434d30e49b7496c2b487c6a4b\n";
  std::istringstream in(text);
  CHECK_THROWS_AS(load_cache(in), MalformedCache);
}

TEST_CASE("loader rejects an incomplete grid even when the checksum holds") {
  const std::string text =
      "bpa-cache v1 barred\n"
      "0 0 1\n"
      "1 1 2\n"
      "# sha256 87248e58746dd34e6e548ecb90bbf21fab5216850a0a63eb8fb1153c07093e54\n";
  std::istringstream in(text);
  CHECK_THROWS_AS(load_cache(in), MalformedCache);
}
