// Acceptance gate: one test case per shipping requirement, each printing a
// single pass/fail line through the test runner. Everything asserted here is
// exact unless a tolerance is part of the requirement itself.

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "cli.hpp"
#include "oafrac/construct.hpp"
#include "oafrac/effects.hpp"
#include "oafrac/ring.hpp"
#include "oafrac/strength.hpp"
#include "oafrac/verify.hpp"
#include "oafrac/wordlength.hpp"
#include "oracles.hpp"

using namespace oafrac;

namespace {

// The fixed design collection behind the identity, oracle and witness suites:
// the deterministic catalog plus 200 seeded random simple fractions with
// parents of at most 81 cells.
const std::vector<Fraction>& suite_designs() {
  static const std::vector<Fraction> designs = [] {
    std::vector<Fraction> all = oafrac::test::deterministic_catalog();
    auto random = oafrac::test::random_designs(200, 101, 81);
    all.insert(all.end(), random.begin(), random.end());
    return all;
  }();
  return designs;
}

std::vector<Rational> rationals(const std::vector<long long>& values) {
  std::vector<Rational> out;
  for (long long v : values) out.push_back(make_rational(v));
  return out;
}

std::string write_temp(const std::string& name, const Fraction& f) {
  auto path =
      std::filesystem::temp_directory_path() / ("oafrac_acc_" + name);
  write_design_file(f, path.string());
  return path.string();
}

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  int code = oafrac::cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

}  // namespace

TEST_CASE("acceptance.golden_3p3") {
  // generation reproduces the nine known cells
  std::string text;
  REQUIRE(run_cli({"gen", "regular", "--s", "3", "--k", "3", "--coeffs",
                   "1,2,2", "--rhs", "1", "-o", "-"},
                  &text) == 0);
  std::istringstream in(text);
  Fraction f = read_design(in);
  std::vector<std::vector<int>> want = {{0, 0, 2}, {0, 1, 1}, {0, 2, 0},
                                        {1, 0, 0}, {1, 1, 2}, {1, 2, 1},
                                        {2, 0, 1}, {2, 1, 0}, {2, 2, 2}};
  REQUIRE(oafrac::test::rows_of(f) == want);

  // strength and resolution
  CHECK(strength_by_projection(f).t_max == 2);
  CHECK(resolution_max(f) == 3);

  // pencil alias classes, compared as label sets, defining class included
  PencilClasses classes = pencil_alias_classes(f);
  std::set<std::set<std::string>> got;
  for (const auto& group : classes.classes) {
    std::set<std::string> labels;
    for (const Pencil& p : group) labels.insert(p.label());
    got.insert(labels);
  }
  std::set<std::set<std::string>> expect = {
      {"A", "BC", "ABC"},
      {"B", "AC^2", "ABC^2"},
      {"C", "AB^2", "AB^2C"},
      {"AB", "AC", "BC^2"}};
  CHECK(got == expect);
  REQUIRE(classes.defining.size() == 1);
  CHECK(classes.defining.front().label() == "AB^2C^2");
  // every pencil is accounted for: grouping had no leftover partial relation
  size_t classified = classes.defining.size();
  for (const auto& group : classes.classes) classified += group.size();
  CHECK(classified == 13);
}

TEST_CASE("acceptance.golden_4p4") {
  Fraction f = oafrac::test::pow4_fraction();
  REQUIRE(f.run_count() == 64);

  StrengthReport s = strength_by_projection(f);
  CHECK(s.t_max == 2);
  REQUIRE(s.witness.has_value());
  CHECK(s.witness->factors == std::vector<int>{1, 2, 3});

  CHECK(resolution_max(f) == 3);

  // character path within tolerance before reconstruction, then exact
  double residual = 1.0;
  GwlpVector g = gwlp_characters(f, 1e-9, &residual);
  CHECK(residual < 1e-9);
  CHECK(g.a == rationals({1, 0, 0, 1, 2}));
  CHECK(gwlp_krawtchouk(f).a == rationals({1, 0, 0, 1, 2}));

  // any three factors including the fourth project onto one full 4^3
  for (const std::vector<int>& factors :
       {std::vector<int>{1, 2, 4}, {1, 3, 4}, {2, 3, 4}}) {
    Projection p = project(f, factors);
    CHECK(p.counts.size() == 64);
    for (const auto& [levels, count] : p.counts) CHECK(count == 1);
  }
  // the {1,2,3} projection hits half the cells twice and the rest never
  Projection p = project(f, {1, 2, 3});
  CHECK(p.counts.size() == 32);
  for (const auto& [levels, count] : p.counts) CHECK(count == 2);
}

TEST_CASE("acceptance.golden_oa18") {
  Fraction a = oafrac::test::oa9_fraction(0);
  Fraction b = oafrac::test::oa9_fraction(1);
  Fraction f = juxtapose(a, b);
  REQUIRE(f.run_count() == 18);

  // each component's wordlength pattern through the dual-space path
  CHECK(regular_wlp(a).a == rationals({1, 0, 0, 2}));
  CHECK(regular_wlp(b).a == rationals({1, 0, 0, 2}));

  GwlpVector g = gwlp_characters(f);
  CHECK(g.a == std::vector<Rational>{make_rational(1), make_rational(0),
                                     make_rational(0), make_rational(1, 2)});
  CHECK(strength_by_projection(f).t_max == 2);
  CHECK(resolution_max(f) == 3);
}

TEST_CASE("acceptance.identity_suite") {
  int checked = 0;
  for (const Fraction& f : suite_designs()) {
    VerificationReport r = verify_identities(f);
    CHECK(r.identity_holds);
    CHECK(r.r_max == r.t_max + 1);
    CHECK(r.min_gwlp_index == r.t_max + 1);
    checked += 1;
  }
  CHECK(checked >= 200 + 90);
}

TEST_CASE("acceptance.oracle_equivalence") {
  for (const Fraction& f : suite_designs()) {
    CHECK(cross_check_strength(f));
    GwlpVector g = gwlp_characters(f);
    if (f.parent().symmetric()) CHECK(g == gwlp_krawtchouk(f));
    Rational total = make_rational(0);
    for (const Rational& v : g.a) total += v;
    CHECK(total == make_rational(f.parent().cell_count(), f.run_count()));
  }
}

TEST_CASE("acceptance.witness_suite") {
  int witnessed = 0;
  for (const Fraction& f : suite_designs()) {
    StrengthReport s = strength_by_projection(f);
    if (s.t_max == f.parent().factor_count()) continue;
    AliasWitness w = alias_witness(f);
    CHECK(static_cast<int>(w.I.size() + w.J.size()) == s.t_max + 1);
    CHECK(w.value != 0);
    CHECK(w.value == oafrac::test::witness_closed_form(f, w));
    witnessed += 1;
  }
  CHECK(witnessed > 200);
}

TEST_CASE("acceptance.structural_suite") {
  // every factorial with at most 4 factors, levels 2..6, at most 96 cells
  std::vector<std::vector<int>> shapes;
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> levels(static_cast<size_t>(k), 2);
    while (true) {
      long long cells = 1;
      bool sorted = true;
      for (size_t i = 0; i < levels.size(); ++i) {
        cells *= levels[i];
        if (i > 0 && levels[i] < levels[i - 1]) sorted = false;
      }
      if (sorted && cells <= 96) shapes.push_back(levels);
      size_t i = levels.size();
      while (i > 0 && levels[i - 1] == 6) levels[--i] = 2;
      if (i == 0) break;
      levels[i - 1] += 1;
    }
  }
  for (const auto& shape : shapes) {
    FullFactorial fact(shape);
    EffectLattice lattice(fact);
    int k = fact.factor_count();
    std::vector<std::vector<int>> subsets;
    for (int size = 0; size <= k; ++size)
      for (const auto& s : subsets_of_size(k, size)) subsets.push_back(s);
    int dim_total = 0;
    for (const auto& I : subsets) {
      int want = 1;
      for (int i : I) want *= fact.level_count(i) - 1;
      CHECK(lattice.space_for(I).dim() == want);
      dim_total += want;
    }
    CHECK(dim_total == fact.cell_count());
    for (size_t x = 0; x < subsets.size(); ++x)
      for (size_t y = x + 1; y < subsets.size(); ++y)
        CHECK(relate(lattice.space_for(subsets[x]),
                     lattice.space_for(subsets[y]))
                  .relation == SpaceRelation::Orthogonal);
  }

  // subsets whose union stays within the strength are never aliased
  std::vector<Fraction> fractions = {
      oafrac::test::sec2_fraction(), oafrac::test::pow4_fraction(),
      oafrac::test::oa18_fraction(),
      regular_fraction(2, 4, LinearSystem{Ring::gf(2), {{1, 1, 1, 1}}, {0}})};
  for (const Fraction& f : fractions) {
    int t_max = strength_by_projection(f).t_max;
    AliasAnalyzer analyzer(f);
    int k = f.parent().factor_count();
    std::vector<std::vector<int>> subsets;
    for (int size = 0; size <= k; ++size)
      for (const auto& s : subsets_of_size(k, size)) subsets.push_back(s);
    for (const auto& I : subsets) {
      for (const auto& J : subsets) {
        if (I == J) continue;
        std::vector<int> u;
        std::set_union(I.begin(), I.end(), J.begin(), J.end(),
                       std::back_inserter(u));
        if (static_cast<int>(u.size()) <= t_max)
          CHECK(analyzer.classify(I, J) == Aliasing::Unaliased);
      }
    }
  }
}

TEST_CASE("acceptance.cli_contract") {
  std::string sec2 = write_temp("sec2.oa", oafrac::test::sec2_fraction());
  std::string pow4 = write_temp("pow4.oa", oafrac::test::pow4_fraction());
  std::string oa18 = write_temp("oa18.oa", oafrac::test::oa18_fraction());
  CHECK(run_cli({"verify", sec2}) == 0);
  CHECK(run_cli({"verify", pow4}) == 0);
  CHECK(run_cli({"verify", oa18}) == 0);

  auto bad = std::filesystem::temp_directory_path() / "oafrac_acc_bad.oa";
  std::ofstream(bad) << "this is not a design\n";
  CHECK(run_cli({"verify", bad.string()}) == 2);

  auto dup = std::filesystem::temp_directory_path() / "oafrac_acc_dup.oa";
  std::ofstream(dup) << "2 2 2\n1 1\n1 1\n";
  std::ostringstream out, err;
  CHECK(oafrac::cli::run({"verify", dup.string()}, out, err) == 2);
  CHECK(err.str().find("non-simple") != std::string::npos);
}
