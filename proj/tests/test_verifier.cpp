#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mirabolic/verifier.hpp"

using namespace mirabolic;

namespace {

int failures(const std::vector<RelationReport>& v) {
  int bad = 0;
  for (const auto& r : v)
    if (!r.passed) ++bad;
  return bad;
}

const CalibrationRow& row_for(const CalibrationReport& rep,
                              WeightConvention c) {
  for (const auto& r : rep.rows)
    if (r.conv == c) return r;
  throw std::logic_error("convention missing from report");
}

}  // namespace

TEST_CASE("defining relations hold on both sides at (2,2,2)") {
  for (bool left : {true, false}) {
    const auto reports = verify_presentation(Context{2, 2, 2}, left);
    CHECK(!reports.empty());
    CHECK(failures(reports) == 0);
  }
}

TEST_CASE("defining relations hold at the adjacent-decoration scale") {
  const auto reports = verify_presentation(Context{3, 3, 3}, true);
  CHECK(reports.size() == 68);
  CHECK(failures(reports) == 0);
}

TEST_CASE("left and right actions commute as operators") {
  const auto reports = verify_bimodule(Context{2, 2, 2});
  CHECK(!reports.empty());
  CHECK(failures(reports) == 0);
}

TEST_CASE("calibration pins the weight convention") {
  WorkBudget budget{0, 0};
  const auto rep = calibrate_normalization(Context{2, 2, 2}, {2, 3}, budget);

  // frozen mismatch profile at (2,2,2), q in {2,3}
  CHECK(row_for(rep, WeightConvention::ge_lt).mismatches == 0);
  CHECK(row_for(rep, WeightConvention::lt_ge).mismatches == 0);
  CHECK(row_for(rep, WeightConvention::or_ordered).mismatches == 404);
  CHECK(row_for(rep, WeightConvention::and_ordered).mismatches == 428);
  CHECK(row_for(rep, WeightConvention::and_unordered).mismatches == 428);
  CHECK(row_for(rep, WeightConvention::ge_lt_dominance_flipped).mismatches ==
        132);
  for (const auto& r : rep.rows) {
    CHECK(r.checked == 828);
    CHECK(r.viable == (r.mismatches == 0));
  }

  REQUIRE(rep.viable.size() == 2);
  CHECK(rep.has_choice);
  CHECK(rep.ambiguous);
  CHECK(rep.chosen == WeightConvention::ge_lt);
  CHECK(rep.chosen_or_throw() == WeightConvention::ge_lt);
  // the strict form refuses to break the tie silently
  CHECK_THROWS_AS(rep.unique_choice_or_throw(), AmbiguousConvention);
}

TEST_CASE("the negative control is the only rejected convention at (2,1,1)") {
  WorkBudget budget{0, 0};
  const auto rep = calibrate_normalization(Context{2, 1, 1}, {2, 3}, budget);
  CHECK(row_for(rep, WeightConvention::ge_lt_dominance_flipped).mismatches ==
        9);
  CHECK(!row_for(rep, WeightConvention::ge_lt_dominance_flipped).viable);
  CHECK(row_for(rep, WeightConvention::ge_lt).viable);
  CHECK(row_for(rep, WeightConvention::or_ordered).viable);
  for (const auto& r : rep.rows) CHECK(r.checked == 84);
}

TEST_CASE("the standard grid calibrates to the pinned default") {
  WorkBudget budget{0, 0};
  CHECK(calibrated_convention(budget) == WeightConvention::ge_lt);
}

TEST_CASE("symbolic actions match convolution counts") {
  WorkBudget budget{0, 0};
  const auto rep = verify_oracle_agreement(Context{2, 2, 2}, 2,
                                           WeightConvention::ge_lt, budget);
  CHECK(rep.passed);
  CHECK(rep.parity_ok);
  CHECK(rep.checked == 414);
  CHECK(rep.first_divergence.empty());
}

TEST_CASE("a wrong convention is caught by the oracle") {
  WorkBudget budget{0, 0};
  const auto rep = verify_oracle_agreement(
      Context{2, 2, 2}, 2, WeightConvention::ge_lt_dominance_flipped, budget);
  CHECK(!rep.passed);
  CHECK(!rep.first_divergence.empty());
}

TEST_CASE("dimension identities") {
  WorkBudget budget{0, 0};
  const auto rep = verify_dimensions(Context{2, 2, 2}, {2, 3}, budget);
  CHECK(rep.passed);
  CHECK(rep.formula == 27);
  CHECK(rep.enumerated == 27);
  REQUIRE(rep.orbit_counts.size() == 2);
  for (const auto& [q, count] : rep.orbit_counts) CHECK(count == 27);

  const auto empty = verify_dimensions(Context{1, 2, 0}, {2}, budget);
  CHECK(empty.passed);
  CHECK(empty.formula == 1);
}

TEST_CASE("double centralizer dimensions on the smallest module") {
  const auto rep = centralizer_report(Context{1, 1, 1},
                                      {Rational(2), Rational(3)});
  CHECK(rep.within_hypothesis);
  CHECK(rep.passed);
  REQUIRE(rep.rows.size() == 2);
  for (const auto& row : rep.rows) {
    CHECK(row.left_algebra_dim == 2);
    CHECK(row.right_algebra_dim == 2);
    CHECK(row.left_commutant_dim == 2);
    CHECK(row.right_commutant_dim == 2);
  }
}

TEST_CASE("degenerate specializations are refused") {
  CHECK_THROWS_AS(centralizer_report(Context{1, 1, 1}, {Rational(1)}),
                  SampleDegenerate);
  CHECK_THROWS_AS(centralizer_report(Context{1, 1, 1}, {Rational(0)}),
                  SampleDegenerate);
  CHECK_THROWS_AS(centralizer_report(Context{1, 1, 1}, {Rational(-1)}),
                  SampleDegenerate);
}

TEST_CASE("centralizer flags contexts outside the hypothesis") {
  const auto rep = centralizer_report(Context{1, 2, 2},
                                      {Rational(2), Rational(3)});
  CHECK(!rep.within_hypothesis);
}
