#include <doctest.h>

#include <sstream>
#include <vector>

#include "catalog.hpp"
#include "oafrac/construct.hpp"
#include "oafrac/errors.hpp"
#include "oafrac/ring.hpp"

using namespace oafrac;

TEST_SUITE("construct") {

TEST_CASE("text round trip preserves every catalog design") {
  for (const Fraction& f : oafrac::test::deterministic_catalog()) {
    std::ostringstream out;
    write_design(f, out);
    std::istringstream in(out.str());
    Fraction back = read_design(in);
    CHECK(back.parent() == f.parent());
    CHECK(back.runs() == f.runs());
  }
}

TEST_CASE("reader tolerates comments, blank lines and unsorted rows") {
  std::istringstream in(
      "# a comment\n"
      "\n"
      "2 2 3\n"
      "1 2\n"
      "# another comment\n"
      "0 0\n"
      "\n"
      "1 0\n");
  Fraction f = read_design(in);
  CHECK(f.run_count() == 3);
  CHECK(f.run_levels(0) == std::vector<int>{0, 0});
  CHECK(f.run_levels(2) == std::vector<int>{1, 2});
}

TEST_CASE("reader rejects malformed files with located messages") {
  auto read = [](const std::string& text) {
    std::istringstream in(text);
    return read_design(in);
  };
  CHECK_THROWS_WITH_AS(read(""), "design file has no header line",
                       InvalidDesignError);
  CHECK_THROWS_AS(read("abc\n"), InvalidDesignError);
  CHECK_THROWS_AS(read("2 2 2\n"), InvalidDesignError);           // no runs
  CHECK_THROWS_AS(read("2 2 2\n0\n"), InvalidDesignError);        // short row
  CHECK_THROWS_AS(read("2 2 2\n0 0 0\n"), InvalidDesignError);    // long row
  CHECK_THROWS_AS(read("2 2 2\n0 2\n"), InvalidDesignError);      // range
  CHECK_THROWS_AS(read("2 2 2\n0 x\n"), InvalidDesignError);      // garbage
  CHECK_THROWS_AS(read("2 2 2\n0 0\n0 0\n"), InvalidDesignError);  // dup
  CHECK_THROWS_AS(read_design_file("/nonexistent/file.oa"),
                  InvalidDesignError);
}

TEST_CASE("constructed solution sets match their defining systems") {
  Fraction f = regular_fraction(3, 3, LinearSystem{Ring::gf(3), {{1, 2, 2}}, {1}});
  CHECK(f.run_count() == 9);
  std::vector<int> member = {0, 0, 2};
  std::vector<int> outsider = {0, 0, 0};
  CHECK(f.contains(f.parent().index_of(member)));
  CHECK(!f.contains(f.parent().index_of(outsider)));
  CHECK_THROWS_AS(
      regular_fraction(4, 3, LinearSystem{Ring::zmod(4), {{1, 1, 1}}, {0}}),
      DomainError);
  CHECK_THROWS_AS(
      regular_fraction(3, 2, LinearSystem{Ring::gf(3), {{1, 2, 2}}, {1}}),
      DomainError);
  Fraction m = modular_fraction(4, 2, LinearSystem{Ring::zmod(4), {{2, 1}}, {1}});
  CHECK(m.run_count() == 4);
  for (long long r = 0; r < m.run_count(); ++r) {
    std::vector<int> run = m.run_levels(r);
    CHECK((2 * run[0] + run[1]) % 4 == 1);
  }
}

TEST_CASE("juxtaposition unions disjoint fractions and rejects overlap") {
  Fraction a = oafrac::test::oa9_fraction(0);
  Fraction b = oafrac::test::oa9_fraction(1);
  Fraction u = juxtapose(a, b);
  CHECK(u.run_count() == 18);
  for (const auto& run : a.runs()) CHECK(u.contains(run));
  for (const auto& run : b.runs()) CHECK(u.contains(run));
  CHECK_THROWS_AS(juxtapose(a, a), InvalidDesignError);
  Fraction other_parent = oafrac::test::full_fraction({3, 3});
  CHECK_THROWS_AS(juxtapose(a, other_parent), DomainError);
}

TEST_CASE("projections keep multiplicities and totals") {
  Fraction f = oafrac::test::pow4_fraction();
  Projection p = project(f, {1, 2, 3});
  CHECK(p.total() == 64);
  CHECK(p.counts.size() == 32);
  for (const auto& [levels, count] : p.counts) CHECK(count == 2);
  Projection q = project(f, {1, 2, 4});
  CHECK(q.counts.size() == 64);
  for (const auto& [levels, count] : q.counts) CHECK(count == 1);
  // projecting a full factorial multiplies by the dropped levels
  Projection r = project(oafrac::test::full_fraction({2, 3, 4}), {2});
  CHECK(r.counts.size() == 3);
  for (const auto& [levels, count] : r.counts) CHECK(count == 8);
  CHECK_THROWS_AS(project(f, {}), DomainError);
  CHECK_THROWS_AS(project(f, {1, 1}), DomainError);
  CHECK_THROWS_AS(project(f, {5}), DomainError);
}

}  // TEST_SUITE
