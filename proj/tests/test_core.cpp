#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "catalog.hpp"
#include "oafrac/errors.hpp"
#include "oafrac/factorial.hpp"
#include "oafrac/guard.hpp"
#include "oafrac/partition.hpp"
#include "oafrac/rational.hpp"

using namespace oafrac;

TEST_SUITE("core") {

TEST_CASE("rationals reduce and print") {
  CHECK(to_string(make_rational(4, 8)) == "1/2");
  CHECK(to_string(make_rational(-3, 6)) == "-1/2");
  CHECK(to_string(make_rational(3, -6)) == "-1/2");
  CHECK(to_string(make_rational(5)) == "5");
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("reconstruction recovers exact multiples of 1/max_den") {
  for (long long q : {1LL, 2LL, 3LL, 81LL, 324LL}) {
    for (long long p = -5 * q; p <= 5 * q; ++p) {
      double x = static_cast<double>(p) / static_cast<double>(q);
      CHECK(reconstruct_rational(x, q, 1e-9) == make_rational(p, q));
    }
  }
  // a value far from any multiple of 1/4 must be refused, not rounded
  CHECK_THROWS_AS(reconstruct_rational(0.3, 4, 1e-9), NumericError);
  CHECK_THROWS_AS(reconstruct_rational(1e308, 4, 1e-9), NumericError);
}

TEST_CASE("full factorial cells enumerate in ascending mixed radix order") {
  FullFactorial f({2, 3, 4});
  CHECK(f.cell_count() == 24);
  CHECK(f.factor_count() == 3);
  CHECK(f.cell(0) == std::vector<int>{0, 0, 0});
  CHECK(f.cell(1) == std::vector<int>{0, 0, 1});
  CHECK(f.cell(4) == std::vector<int>{0, 1, 0});
  CHECK(f.cell(23) == std::vector<int>{1, 2, 3});
  for (long long c = 0; c < f.cell_count(); ++c)
    CHECK(f.index_of(f.cell(c)) == c);
  CHECK(!f.symmetric());
  CHECK(FullFactorial({3, 3}).symmetric());
  CHECK_THROWS_AS(FullFactorial({2, 1}), DomainError);
  CHECK_THROWS_AS(FullFactorial(std::vector<int>{}), DomainError);
}

TEST_CASE("subsets enumerate lexicographically") {
  auto subs = subsets_of_size(4, 2);
  std::vector<std::vector<int>> want = {{1, 2}, {1, 3}, {1, 4},
                                        {2, 3}, {2, 4}, {3, 4}};
  CHECK(subs == want);
  CHECK(subsets_of_size(5, 0) == std::vector<std::vector<int>>{{}});
  CHECK(subsets_of_size(5, 3).size() == 10);
}

TEST_CASE("fractions sort their runs and stay simple") {
  FullFactorial parent({2, 2});
  Fraction f = Fraction::from_rows(parent, {{1, 1}, {0, 0}});
  CHECK(f.run_count() == 2);
  CHECK(f.run_levels(0) == std::vector<int>{0, 0});
  CHECK(f.run_levels(1) == std::vector<int>{1, 1});
  std::vector<int> one_one = {1, 1};
  std::vector<int> zero_one = {0, 1};
  CHECK(f.contains(parent.index_of(one_one)));
  CHECK(!f.contains(parent.index_of(zero_one)));
  CHECK(!f.is_full());
  CHECK(oafrac::test::full_fraction({2, 2}).is_full());
  CHECK_THROWS_AS(Fraction::from_rows(parent, {{0, 0}, {0, 0}}),
                  InvalidDesignError);
  CHECK_THROWS_AS(Fraction::from_rows(parent, {{0, 2}}), DomainError);
}

TEST_CASE("blockings number their blocks by the levels' mixed radix rank") {
  FullFactorial f({2, 3, 2});
  Partition single = blocking_for(f, {2});
  for (long long c = 0; c < f.cell_count(); ++c)
    CHECK(single.block_of(c) == f.cell(c)[1]);
  Partition pair = blocking_for(f, {1, 3});
  for (long long c = 0; c < f.cell_count(); ++c)
    CHECK(pair.block_of(c) == f.cell(c)[0] * 2 + f.cell(c)[2]);
  CHECK(pair.block_count() == 4);
  for (int b = 0; b < pair.block_count(); ++b) CHECK(pair.block_size(b) == 3);
  CHECK_THROWS_AS(blocking_for(f, {}), DomainError);
  CHECK_THROWS_AS(blocking_for(f, {1, 1}), DomainError);
  CHECK_THROWS_AS(blocking_for(f, {4}), DomainError);
}

TEST_CASE("joining two blockings is blocking by the union") {
  FullFactorial f({2, 3, 2});
  auto subsets = {std::vector<int>{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}};
  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      std::vector<int> u;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                     std::back_inserter(u));
      CHECK(join(blocking_for(f, a), blocking_for(f, b)) ==
            blocking_for(f, u));
    }
  }
}

TEST_CASE("uniform measure is exact and additive over blocks") {
  FullFactorial f({2, 3});
  Partition p = blocking_for(f, {2});
  Rational total = make_rational(0);
  for (int b = 0; b < p.block_count(); ++b) {
    Rational m = pi(f, p.block_cells(b));
    CHECK(m == make_rational(1, 3));
    total += m;
  }
  CHECK(total == 1);
  CHECK_THROWS_AS(pi(f, {1, 1}), DomainError);
  CHECK_THROWS_AS(pi(f, {6}), DomainError);
}

TEST_CASE("independence of a cell set matches uniform projection counts") {
  // exhaustive over every nonempty cell subset of two tiny factorials
  for (const std::vector<int>& levels :
       {std::vector<int>{2, 2}, {2, 3}}) {
    FullFactorial f(levels);
    int k = f.factor_count();
    long long cells = f.cell_count();
    for (long long mask = 1; mask < (1LL << cells); ++mask) {
      std::vector<long long> picked;
      std::vector<std::vector<int>> rows;
      for (long long c = 0; c < cells; ++c) {
        if ((mask >> c) & 1) {
          picked.push_back(c);
          rows.push_back(f.cell(c));
        }
      }
      long long n = static_cast<long long>(picked.size());
      for (int t = 1; t <= k; ++t) {
        for (const auto& sub : subsets_of_size(k, t)) {
          long long prod = 1;
          for (int i : sub) prod *= f.level_count(i);
          std::map<std::vector<int>, long long> counts;
          for (const auto& row : rows) {
            std::vector<int> key;
            for (int i : sub) key.push_back(row[static_cast<size_t>(i - 1)]);
            counts[key] += 1;
          }
          bool uniform = n % prod == 0 &&
                         static_cast<long long>(counts.size()) == prod;
          if (uniform)
            for (const auto& [key, count] : counts)
              if (count != n / prod) uniform = false;
          IndependenceCheck ind =
              is_independent(f, picked, blocking_for(f, sub));
          CHECK(ind.independent == uniform);
          if (!ind.independent) {
            CHECK(ind.failing_block >= 0);
            CHECK(ind.failing_block <
                  blocking_for(f, sub).block_count());
          }
        }
      }
    }
  }
}

TEST_CASE("resource guard bounds factor and cell counts") {
  ResourceGuard tight{2, 1000};
  CHECK_THROWS_AS(tight.check(FullFactorial({2, 2, 2})), ResourceLimitError);
  ResourceGuard small{10, 5};
  CHECK_THROWS_AS(small.check(FullFactorial({2, 3})), ResourceLimitError);
  ResourceGuard{}.check(FullFactorial({3, 3, 3}));
}

TEST_CASE("library fixtures have the documented shapes") {
  CHECK(oafrac::test::sec2_fraction().run_count() == 9);
  CHECK(oafrac::test::pow4_fraction().run_count() == 64);
  CHECK(oafrac::test::oa18_fraction().run_count() == 18);
  CHECK(oafrac::test::random_designs(5, 7).size() == 5);
  // same seed, same designs
  auto first = oafrac::test::random_designs(5, 7);
  auto second = oafrac::test::random_designs(5, 7);
  for (int i = 0; i < 5; ++i) CHECK(first[i].runs() == second[i].runs());
}

}  // TEST_SUITE
