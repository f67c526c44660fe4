#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "scimap/citation_matrix.hpp"
#include "scimap/csv_io.hpp"
#include "scimap/format.hpp"

using namespace scimap;

namespace {

CitationMatrix small_matrix() {
  // a cites b twice and itself once, b cites a five times, c cites a once.
  CitationMatrix m;
  m.add_journal("a");
  m.add_journal("b");
  m.add_journal("c");
  m.add_entry(0, 1, 2);
  m.add_entry(0, 0, 1);
  m.add_entry(1, 0, 5);
  m.add_entry(2, 0, 1);
  m.finalize();
  return m;
}

}  // namespace

TEST_SUITE("citation_matrix") {

TEST_CASE("rows are sorted and queryable") {
  auto m = small_matrix();
  CHECK(m.journal_count() == 3);
  CHECK(m.entry_count() == 4);
  auto row = m.row(0);
  REQUIRE(row.size() == 2);
  CHECK(row[0].cited == 0);  // sorted despite insertion order
  CHECK(row[1].cited == 1);
  CHECK(m.at(0, 1) == 2);
  CHECK(m.at(1, 2) == 0);
  CHECK(m.row_sum(0) == 3);
  CHECK(m.row_sum(2) == 1);
  CHECK(m.find("b") == VertexId{1});
  CHECK(!m.find("zz").has_value());
}

TEST_CASE("registration and entry validation") {
  CitationMatrix m;
  m.add_journal("a");
  CHECK_THROWS_AS(m.add_journal("a"), InputError);
  CHECK_THROWS_AS(m.add_journal(""), InputError);
  CHECK(m.intern_journal("a") == 0);
  CHECK(m.intern_journal("b") == 1);
  // Unregistered indices and duplicate keys are caller bugs, not input errors.
  CHECK_THROWS_AS(m.add_entry(0, 7, 1), std::logic_error);
  CHECK_THROWS_AS(m.add_entry(0, 1, 0), InputError);
  m.add_entry(0, 1, 3);
  m.add_entry(0, 1, 4);
  CHECK_THROWS_AS(m.finalize(), std::logic_error);
}

TEST_CASE("matrix_stats") {
  auto s = matrix_stats(small_matrix());
  CHECK(s.n == 3);
  CHECK(s.nonzero_count == 4);
  CHECK(s.density == doctest::Approx(4.0 / 9.0));
  CHECK(s.uncited_count == 1);     // c is never cited
  CHECK(s.non_citing_count == 0);  // everyone cites
  CHECK(s.self_citation_total == 1);
  CHECK(s.citing_totals == std::vector<std::int64_t>{3, 5, 1});
}

TEST_CASE("count threshold keeps journals in place") {
  auto t = apply_citation_threshold(small_matrix(), 2);
  CHECK(t.journal_count() == 3);
  CHECK(t.entry_count() == 2);
  CHECK(t.at(0, 1) == 2);
  CHECK(t.at(0, 0) == 0);
  CHECK(t.at(2, 0) == 0);
  CHECK(t.labels() == small_matrix().labels());
}

TEST_CASE("low-activity filter removes both dimensions") {
  auto f = filter_low_activity(small_matrix(), 3);
  // c (row sum 1) goes; its column disappears with it.
  REQUIRE(f.excluded.size() == 1);
  CHECK(f.excluded[0].label == "c");
  CHECK(f.excluded[0].index == 2);
  CHECK(f.matrix.journal_count() == 2);
  CHECK(f.matrix.at(0, 1) == 2);
  CHECK(f.matrix.at(1, 0) == 5);

  // Excluded list comes back sorted by label.
  CitationMatrix m;
  m.add_journal("zz");
  m.add_journal("aa");
  m.add_journal("mm");
  m.add_entry(2, 0, 100);
  m.finalize();
  auto g = filter_low_activity(m, 50);
  REQUIRE(g.excluded.size() == 2);
  CHECK(g.excluded[0].label == "aa");
  CHECK(g.excluded[1].label == "zz");
  CHECK(g.matrix.journal_count() == 1);
  CHECK(g.matrix.label(0) == "mm");
  CHECK(g.matrix.entry_count() == 0);  // the kept journal cited only removed ones
}

TEST_CASE("transpose") {
  auto m = small_matrix();
  auto t = transpose(m);
  CHECK(t.at(1, 0) == 2);
  CHECK(t.at(0, 1) == 5);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(0, 2) == 1);
  CHECK(transpose(t) == m);
}

TEST_CASE("csv parse and write round-trip") {
  const std::string text = "citing,cited,count\nb,a,5\na,b,2\na,a,1\nc,a,1\n";
  auto m = parse_citation_csv(text);
  CHECK(m.journal_count() == 3);
  CHECK(m.at(m.find("a").value(), m.find("b").value()) == 2);
  CHECK(parse_citation_csv(citation_csv(m)) == m);
}

TEST_CASE("csv errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_citation_csv(std::string("a,b\n")), doctest::Contains("line 1"),
                       InputError);
  CHECK_THROWS_WITH_AS(parse_citation_csv(std::string("a,b,2\nc,d,x\n")),
                       doctest::Contains("line 2"), InputError);
  CHECK_THROWS_WITH_AS(parse_citation_csv(std::string("a,b,0\n")), doctest::Contains("line 1"),
                       InputError);
  CHECK_THROWS_WITH_AS(parse_citation_csv(std::string("a,b,2\na,b,3\n")),
                       doctest::Contains("line 2"), InputError);
  // A header with no records is a valid (empty) matrix; later stages complain.
  CHECK(parse_citation_csv(std::string("citing,cited,count\n")).journal_count() == 0);
}

TEST_CASE("file reader handles plain csv") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "scimap_csv_test";
  fs::create_directories(dir);
  auto path = dir / "m.csv";
  {
    std::ofstream out(path);
    out << citation_csv(small_matrix());
  }
  CHECK(read_citation_file(path.string()) == small_matrix());
  CHECK_THROWS_AS(read_citation_file((dir / "missing.csv").string()), InputError);
  fs::remove_all(dir);
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.8) == "0.8");
  CHECK(format_number(0.95) == "0.95");
  CHECK(format_number(5.0) == "5");
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(0.1234567) == "0.123457");
}

}  // TEST_SUITE
