#include <doctest.h>

#include <vector>

#include "catalog.hpp"
#include "oafrac/errors.hpp"
#include "oafrac/strength.hpp"
#include "oafrac/verify.hpp"
#include "oracles.hpp"

using namespace oafrac;

TEST_SUITE("verify") {

TEST_CASE("witnesses certify the strength bound with a nonzero product") {
  std::vector<Fraction> designs = oafrac::test::deterministic_catalog();
  auto random = oafrac::test::random_designs(60, 41);
  designs.insert(designs.end(), random.begin(), random.end());
  for (const Fraction& f : designs) {
    StrengthReport s = strength_by_projection(f);
    if (!s.witness) {
      CHECK_THROWS_AS(alias_witness(f), DomainError);
      continue;
    }
    AliasWitness w = alias_witness(f);
    CHECK(static_cast<int>(w.I.size() + w.J.size()) == s.t_max + 1);
    CHECK(w.value != 0);
    CHECK(w.value == oafrac::test::witness_closed_form(f, w));
  }
}

TEST_CASE("deep witnesses project onto the interaction spaces and agree") {
  std::vector<Fraction> designs = {oafrac::test::sec2_fraction(),
                                   oafrac::test::oa18_fraction()};
  auto random = oafrac::test::random_designs(10, 42, 24);
  designs.insert(designs.end(), random.begin(), random.end());
  for (const Fraction& f : designs) {
    if (f.is_full()) continue;
    AliasWitness shallow = alias_witness(f, false);
    AliasWitness deep = alias_witness(f, true);
    CHECK(shallow == deep);
  }
}

TEST_CASE("the strength, resolution and wordlength identity always holds") {
  for (const Fraction& f : oafrac::test::deterministic_catalog()) {
    VerificationReport r = verify_identities(f);
    CHECK(r.identity_holds);
    CHECK(r.r_max == r.t_max + 1);
    CHECK(r.min_gwlp_index == r.t_max + 1);
  }
  for (const Fraction& f : oafrac::test::random_designs(60, 43)) {
    VerificationReport r = verify_identities(f);
    CHECK(r.identity_holds);
  }
}

TEST_CASE("full factorials verify with the degenerate values") {
  VerificationReport r =
      verify_identities(oafrac::test::full_fraction({3, 3}));
  CHECK(r.identity_holds);
  CHECK(r.t_max == 2);
  CHECK(r.r_max == 3);
  CHECK(r.min_gwlp_index == 3);
  CHECK(!r.witness.has_value());
}

TEST_CASE("verification reports carry consistent pieces") {
  Fraction f = oafrac::test::pow4_fraction();
  VerificationReport r = verify_identities(f);
  CHECK(r.t_max == r.strength.t_max);
  CHECK(r.gwlp.a.size() == 5);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->K == std::vector<int>{1, 2, 3});
  CHECK(r.witness->I == std::vector<int>{1});
  CHECK(r.witness->J == std::vector<int>{2, 3});
  CHECK(r.witness->value == 1);
  CHECK(min_positive_index(r.gwlp) == r.min_gwlp_index);
}

TEST_CASE("resource guards cut verification off early") {
  Fraction f = oafrac::test::sec2_fraction();
  ResourceGuard tiny{2, 4096};
  CHECK_THROWS_AS(verify_identities(f, tiny), ResourceLimitError);
}

}  // TEST_SUITE
