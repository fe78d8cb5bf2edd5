#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mirabolic/json_io.hpp"

#include <random>

using namespace mirabolic;

namespace {

DecoratedMatrix make(int n, int m, std::vector<int> entries,
                     std::vector<std::pair<int, int>> delta = {}) {
  DecoratedMatrix x(n, m);
  x.a = std::move(entries);
  x.delta = std::move(delta);
  return x;
}

Laurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(1, 4), expo(-5, 5), coef(-7, 7);
  Laurent p;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) p += Laurent::monomial(expo(rng), coef(rng));
  return p;
}

ModuleElement random_element(std::mt19937& rng, Context ctx,
                             const std::vector<DecoratedMatrix>& basis) {
  std::uniform_int_distribution<int> nterms(0, 5);
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  ModuleElement x(ctx);
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) x.add(basis[pick(rng)], random_laurent(rng));
  return x;
}

}  // namespace

TEST_CASE("matrix labels round-trip") {
  const auto x = make(2, 2, {1, 0, 0, 1}, {{1, 1}});
  CHECK(parse_matrix(x.str(), 2, 2) == x);
  const auto y = make(3, 3, {0, 0, 2, 0, 1, 0, 0, 0, 0}, {{1, 3}, {2, 2}});
  CHECK(parse_matrix(y.str(), 3, 3) == y);
  const auto plain = make(1, 2, {1, 0});
  CHECK(parse_matrix("[[1,0]]", 1, 2) == plain);
}

TEST_CASE("malformed labels are rejected") {
  CHECK_THROWS(parse_matrix("[[1,0];[0,1]", 2, 2));       // unbalanced
  CHECK_THROWS(parse_matrix("[[1,0]]", 2, 2));            // wrong shape
  CHECK_THROWS(parse_matrix("[[1,x]]", 1, 2));            // non-numeric
  CHECK_THROWS(parse_matrix("[[0,1];[1,0]]{(1,1)}", 2, 2));  // zero decorated
  CHECK_THROWS(parse_matrix("[[1,1];[1,1]]{(1,1),(2,2)}", 2, 2));  // not
                                                                   // staircase
}

TEST_CASE("laurent strings round-trip") {
  std::mt19937 rng(90210);
  for (int trial = 0; trial < 200; ++trial) {
    const Laurent p = random_laurent(rng);
    CHECK(parse_laurent(p.str()) == p);
  }
  CHECK(parse_laurent("0") == Laurent::zero());
  CHECK(parse_laurent("1") == Laurent::one());
  CHECK(parse_laurent("v") == Laurent::monomial(1));
  CHECK(parse_laurent("-v^-2") == Laurent::monomial(-2, -1));
  CHECK(parse_laurent("3*v^4") == Laurent::monomial(4, 3));
  CHECK(parse_laurent("v^-1 + v^1") ==
        Laurent::monomial(-1) + Laurent::monomial(1));
}

TEST_CASE("element text form: unit coefficients print as bare labels") {
  const Context ctx{1, 1, 1};
  const auto e = ModuleElement::basis(ctx, make(1, 1, {1}));
  CHECK(e.str() == "[[1]]");
  CHECK(serialize_element(e, false) == "[[1]]");
  const auto s = e.scaled(Laurent::monomial(-2));
  CHECK(serialize_element(s, false) == "(v^-2)*[[1]]");
  CHECK(serialize_element(ModuleElement(ctx), false) == "0");
}

TEST_CASE("element text and json forms round-trip on random elements") {
  std::mt19937 rng(90211);
  const Context ctx{2, 2, 2};
  const auto basis = enumerate_decorated(2, 2, 2);
  for (int trial = 0; trial < 120; ++trial) {
    const auto x = random_element(rng, ctx, basis);
    CHECK(parse_element_text(serialize_element(x, false), ctx) == x);
    CHECK(parse_element_json(serialize_element(x, true)) == x);
  }
}

TEST_CASE("element parsing accepts handwritten forms") {
  const Context ctx{2, 2, 2};
  const auto x = parse_element_text(
      "(v + v^-1)*[[0,0];[0,2]] + [[0,1];[0,1]]{(1,2)}", ctx);
  CHECK(x.size() == 2);
  CHECK(x.coeff(make(2, 2, {0, 0, 0, 2})) ==
        Laurent::monomial(1) + Laurent::monomial(-1));
  CHECK(x.coeff(make(2, 2, {0, 1, 0, 1}, {{1, 2}})) == Laurent::one());
  CHECK(parse_element_text("0", ctx).is_zero());
  // wrong-degree term must be refused
  CHECK_THROWS(parse_element_text("[[1,0];[0,0]]", ctx));
}

TEST_CASE("json output is deterministic") {
  WorkBudget b1{0, 0}, b2{0, 0};
  const auto r1 = calibrate_normalization(Context{2, 1, 1}, {2, 3}, b1);
  const auto r2 = calibrate_normalization(Context{2, 1, 1}, {2, 3}, b2);
  CHECK(calibration_json(r1) == calibration_json(r2));
  CHECK(basis_json(Context{1, 1, 1}) == basis_json(Context{1, 1, 1}));
}

TEST_CASE("basis json lists the canonical order") {
  const auto s = basis_json(Context{1, 1, 1});
  CHECK(s.find("\"dimension\": 2") != std::string::npos);
  // two symbols: the undecorated one first, then the decorated one
  const auto first = s.find("\"delta\": []");
  REQUIRE(first != std::string::npos);
  const auto second = s.find("\"delta\": [", first + 1);
  REQUIRE(second != std::string::npos);
  CHECK(s.find("1,", second) != std::string::npos);
}

TEST_CASE("report serializers stay in sync with their payloads") {
  const auto reports = verify_presentation(Context{1, 1, 1}, true);
  const auto js = relation_reports_json("presentation", Context{1, 1, 1},
                                        reports);
  CHECK(js.find("\"l_idempotent\"") != std::string::npos);
  CHECK(js.find("\"passed\"") != std::string::npos);

  WorkBudget budget{0, 0};
  const auto agree = verify_oracle_agreement(Context{1, 1, 1}, 2,
                                             default_convention(), budget);
  const auto ajs = agreement_json(agree);
  CHECK(ajs.find("\"parity_coherent\": true") != std::string::npos);

  const auto dims = verify_dimensions(Context{1, 1, 1}, {2}, budget);
  CHECK(dimension_json(dims).find("\"formula\"") != std::string::npos);

  const auto cent = centralizer_report(Context{1, 1, 1}, {Rational(2)});
  CHECK(centralizer_json(cent).find("\"samples\"") != std::string::npos);
}
