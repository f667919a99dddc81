#include <doctest.h>

#include <vector>

#include "catalog.hpp"
#include "oafrac/strength.hpp"
#include "oracles.hpp"

using namespace oafrac;

TEST_SUITE("strength") {

TEST_CASE("worked designs have their known strengths") {
  StrengthReport sec2 = strength_by_projection(oafrac::test::sec2_fraction());
  CHECK(sec2.t_max == 2);
  REQUIRE(sec2.index.has_value());
  CHECK(*sec2.index == 1);
  REQUIRE(sec2.witness.has_value());
  CHECK(sec2.witness->factors == std::vector<int>{1, 2, 3});

  StrengthReport pow4 = strength_by_projection(oafrac::test::pow4_fraction());
  CHECK(pow4.t_max == 2);
  REQUIRE(pow4.index.has_value());
  CHECK(*pow4.index == 4);
  REQUIRE(pow4.witness.has_value());
  CHECK(pow4.witness->factors == std::vector<int>{1, 2, 3});
  CHECK(pow4.witness->hits == 2);

  StrengthReport oa18 = strength_by_projection(oafrac::test::oa18_fraction());
  CHECK(oa18.t_max == 2);
  REQUIRE(oa18.index.has_value());
  CHECK(*oa18.index == 2);
}

TEST_CASE("full factorials have full strength and no witness") {
  for (const std::vector<int>& levels :
       {std::vector<int>{2, 2}, {2, 3}, {3, 3, 3}}) {
    Fraction f = oafrac::test::full_fraction(levels);
    StrengthReport r = strength_by_projection(f);
    CHECK(r.t_max == static_cast<int>(levels.size()));
    CHECK(!r.witness.has_value());
  }
  // symmetric full factorials have index 1 at full strength
  StrengthReport r =
      strength_by_projection(oafrac::test::full_fraction({3, 3, 3}));
  REQUIRE(r.index.has_value());
  CHECK(*r.index == 1);
}

TEST_CASE("both strength routes agree everywhere") {
  for (const Fraction& f : oafrac::test::deterministic_catalog())
    CHECK(cross_check_strength(f));
  for (const Fraction& f : oafrac::test::random_designs(60, 21))
    CHECK(cross_check_strength(f));
}

TEST_CASE("reported strength matches the definition") {
  for (const Fraction& f : oafrac::test::random_designs(60, 22)) {
    StrengthReport r = strength_by_projection(f);
    CHECK(r.t_max == oafrac::test::brute_strength(f));
  }
}

TEST_CASE("per-subset indices are the uniform counts") {
  Fraction f = oafrac::test::oa18_fraction();
  StrengthReport r = strength_by_projection(f);
  for (const auto& [factors, index] : r.index_by_subset) {
    long long prod = 1;
    for (int i : factors) prod *= f.parent().level_count(i);
    CHECK(index == 18 / prod);
    CHECK(static_cast<int>(factors.size()) <= r.t_max);
  }
  // every nonempty subset of size at most t_max is present
  CHECK(r.index_by_subset.size() == 6);
}

TEST_CASE("witnesses point at a genuinely non-uniform block") {
  for (const Fraction& f : oafrac::test::random_designs(40, 23)) {
    StrengthReport r = strength_by_projection(f);
    if (!r.witness) continue;
    const StrengthWitness& w = *r.witness;
    CHECK(static_cast<int>(w.factors.size()) == r.t_max + 1);
    // recount the hits directly
    long long hits = 0;
    for (long long ri = 0; ri < f.run_count(); ++ri) {
      std::vector<int> run = f.run_levels(ri);
      bool match = true;
      for (size_t i = 0; i < w.factors.size(); ++i)
        if (run[static_cast<size_t>(w.factors[i] - 1)] != w.block_levels[i])
          match = false;
      if (match) hits += 1;
    }
    CHECK(hits == w.hits);
    long long prod = 1;
    for (int i : w.factors) prod *= f.parent().level_count(i);
    // non-uniform: the hit count times the cell count differs from share
    CHECK(hits * prod != f.run_count());
  }
}

}  // TEST_SUITE
