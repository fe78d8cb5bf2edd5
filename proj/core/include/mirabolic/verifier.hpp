#pragma once

// Mechanized checks: presentation relations, bimodule commutation, oracle
// agreement, normalization calibration, dimension identities, and the
// double-centralizer dimension comparison.

#include "mirabolic/operator_matrix.hpp"
#include "mirabolic/oracle.hpp"

namespace mirabolic {

struct NoConsistentConvention : std::runtime_error {
  NoConsistentConvention(const std::string& what) : std::runtime_error(what) {}
};
struct AmbiguousConvention : std::runtime_error {
  AmbiguousConvention(const std::string& what) : std::runtime_error(what) {}
};
struct SampleDegenerate : std::runtime_error {
  SampleDegenerate(const std::string& what) : std::runtime_error(what) {}
};

struct RelationReport {
  std::string id;  // e.g. "serre_ee[i=1,j=2]"
  Context ctx;
  bool left_side = true;
  bool passed = false;
  std::string detail;  // first nonzero residual entry if failed
};

// every relation of the defining presentation, every index instance,
// realized on the module and compared as exact operator identities
std::vector<RelationReport> verify_presentation(Context ctx, bool left_side);

// left and right token actions commute pairwise
std::vector<RelationReport> verify_bimodule(Context ctx);

struct CalibrationRow {
  WeightConvention conv;
  Int mismatches = 0;  // failing (side, token, input, output) combinations
  Int checked = 0;
  bool viable = false;
};

struct CalibrationReport {
  Context ctx;
  std::vector<int> q_list;
  std::vector<CalibrationRow> rows;
  std::vector<WeightConvention> viable;
  bool has_choice = false;
  WeightConvention chosen = default_convention();
  bool ambiguous = false;

  // unique viable convention, or the documented default among several;
  // throws NoConsistentConvention when nothing survives
  WeightConvention chosen_or_throw() const;
  // strict form: ambiguity is an error too
  WeightConvention unique_choice_or_throw() const;
  std::string str() const;
};

CalibrationReport calibrate_normalization(Context ctx,
                                          const std::vector<int>& q_list,
                                          WorkBudget& budget);

// the convention viable across the standard small calibration grid
// ((1,1,1), (2,1,1), (2,2,2) at q in {2,3}); the documented default wins ties
WeightConvention calibrated_convention(WorkBudget& budget);

struct AgreementReport {
  Context ctx;
  int q = 0;
  WeightConvention conv = default_convention();
  bool passed = false;
  Int checked = 0;       // (side, token, input, output) combinations compared
  bool parity_ok = false;
  std::string first_divergence;
};

// symbolic generator actions, transferred to characteristic functions and
// specialized at v^2 = q, against the brute-force convolution
AgreementReport verify_oracle_agreement(Context ctx, int q,
                                        WeightConvention conv,
                                        WorkBudget& budget);

struct DimensionReport {
  Context ctx;
  bool passed = false;
  Int formula = 0;
  Int enumerated = 0;
  std::vector<std::pair<int, Int>> orbit_counts;  // per q
  std::string detail;
};

DimensionReport verify_dimensions(Context ctx, const std::vector<int>& q_list,
                                  WorkBudget& budget);

struct CentralizerReport {
  Context ctx;
  bool within_hypothesis = false;  // n >= m >= d
  struct SampleRow {
    Rational v;
    int left_algebra_dim = 0;
    int right_algebra_dim = 0;
    int left_commutant_dim = 0;   // commutant of the left algebra
    int right_commutant_dim = 0;  // commutant of the right algebra
  };
  std::vector<SampleRow> rows;
  bool passed = false;
  std::string detail;
};

// word-span saturation of both acting algebras at rational specializations,
// against exact commutant dimensions; throws SampleDegenerate when the
// stabilized dimensions disagree across samples
CentralizerReport centralizer_report(Context ctx,
                                     const std::vector<Rational>& v_samples);

// one acceptance criterion outcome
struct CriterionResult {
  std::string id;     // "C1".."C8"
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// the full pinned acceptance grid (the CLI's `verify --profile desk`)
std::vector<CriterionResult> run_acceptance_suite(WorkBudget& budget);

}  // namespace mirabolic
