#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mirabolic/decorated_matrix.hpp"

#include <algorithm>
#include <set>

using namespace mirabolic;

namespace {

DecoratedMatrix make(int n, int m, std::vector<int> entries,
                     std::vector<std::pair<int, int>> delta = {}) {
  DecoratedMatrix x(n, m);
  x.a = std::move(entries);
  x.delta = std::move(delta);
  return x;
}

}  // namespace

TEST_CASE("smallest basis enumerates exactly two symbols") {
  const auto all = enumerate_decorated(1, 1, 1);
  REQUIRE(all.size() == 2);
  CHECK(all[0] == make(1, 1, {1}));
  CHECK(all[1] == make(1, 1, {1}, {{1, 1}}));
}

TEST_CASE("enumeration count matches the closed formula on a grid") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int d = 0; d <= 3; ++d) {
        const auto all = enumerate_decorated(n, m, d);
        CHECK(Int(all.size()) == dimension_count(n, m, d));
        // no duplicates and everything well-formed
        std::set<DecoratedMatrix> uniq(all.begin(), all.end());
        CHECK(uniq.size() == all.size());
        for (const auto& x : all) {
          CHECK_NOTHROW(x.validate());
          CHECK(x.total() == d);
        }
      }
  CHECK(dimension_count(2, 2, 2) == 27);
}

TEST_CASE("degree zero leaves only the empty symbol") {
  const auto all = enumerate_decorated(2, 3, 0);
  REQUIRE(all.size() == 1);
  CHECK(all[0].delta.empty());
  CHECK(all[0].total() == 0);
}

TEST_CASE("validation rejects malformed decorations") {
  // decorated cell with a zero entry
  CHECK_THROWS(make(2, 2, {0, 1, 1, 0}, {{1, 1}}).validate());
  // rows must strictly increase
  CHECK_THROWS(make(2, 2, {1, 1, 1, 1}, {{1, 2}, {1, 1}}).validate());
  CHECK_THROWS(make(2, 2, {1, 1, 1, 1}, {{2, 2}, {2, 1}}).validate());
  // columns must strictly decrease along the list
  CHECK_THROWS(make(2, 2, {1, 1, 1, 1}, {{1, 1}, {2, 2}}).validate());
  CHECK_THROWS(make(2, 2, {1, 1, 1, 1}, {{1, 1}, {2, 1}}).validate());
  // out-of-range coordinates
  CHECK_THROWS(make(2, 2, {1, 1, 1, 1}, {{3, 1}}).validate());
  CHECK_THROWS(make(2, 2, {1, 1, 1, 1}, {{1, 0}}).validate());
  // a valid staircase passes
  CHECK_NOTHROW(make(2, 2, {0, 1, 1, 0}, {{1, 2}, {2, 1}}).validate());
  CHECK(make(2, 2, {0, 1, 1, 0}, {{1, 2}, {2, 1}}).is_valid());
  CHECK(!make(2, 2, {0, 1, 1, 0}, {{1, 1}}).is_valid());
}

TEST_CASE("marginals and transpose") {
  const auto x = make(2, 3, {1, 0, 2, 0, 3, 0}, {{1, 3}, {2, 2}});
  CHECK(x.total() == 6);
  CHECK(x.row_sums() == std::vector<int>{3, 3});
  CHECK(x.col_sums() == std::vector<int>{1, 3, 2});
  CHECK(x.decorated(1, 3));
  CHECK(!x.decorated(1, 1));

  const auto t = x.transposed();
  CHECK(t.n == 3);
  CHECK(t.m == 2);
  CHECK(t.at(3, 1) == 2);
  CHECK(t.at(2, 2) == 3);
  CHECK_NOTHROW(t.validate());
  CHECK(t.transposed() == x);
}

TEST_CASE("transpose keeps every enumerated symbol well-formed") {
  for (const auto& x : enumerate_decorated(3, 2, 3)) {
    const auto t = x.transposed();
    CHECK_NOTHROW(t.validate());
    CHECK(t.transposed() == x);
  }
}

TEST_CASE("string form") {
  const auto x = make(2, 2, {1, 0, 0, 1}, {{1, 1}});
  CHECK(x.str() == "[[1,0];[0,1]]{(1,1)}");
  CHECK(make(1, 1, {1}).str() == "[[1]]");
}

TEST_CASE("weight exponent under the pinned convention") {
  CHECK(default_convention() == WeightConvention::ge_lt);
  // frozen pair distinguishing the adjacent-decoration lowering move
  const auto z = make(3, 3, {0, 0, 2, 0, 1, 0, 0, 0, 0}, {{1, 3}, {2, 2}});
  const auto zp = make(3, 3, {0, 0, 1, 0, 1, 1, 0, 0, 0}, {{1, 3}, {2, 2}});
  CHECK(weight_exponent(z, WeightConvention::ge_lt) == -5);
  CHECK(weight_exponent(zp, WeightConvention::ge_lt) == -4);
  // the flipped control differs from the pinned reading here
  CHECK(weight_exponent(z, WeightConvention::ge_lt_dominance_flipped) == 1);
  // undecorated matrices carry no dominance part
  const auto plain = make(2, 2, {1, 0, 0, 1});
  CHECK(weight_exponent(plain, WeightConvention::ge_lt) ==
        weight_exponent(plain, WeightConvention::ge_lt_dominance_flipped));
}

TEST_CASE("convention catalogue is closed and named") {
  const auto all = all_weight_conventions();
  CHECK(all.size() == 6);
  std::set<std::string> names;
  for (auto c : all) names.insert(convention_name(c));
  CHECK(names.size() == all.size());
  CHECK(names.count("ge_lt") == 1);
  CHECK(names.count("ge_lt_dominance_flipped") == 1);
}

TEST_CASE("binomial helper") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("bad shapes are rejected") {
  CHECK_THROWS(enumerate_decorated(0, 1, 1));
  CHECK_THROWS(enumerate_decorated(1, 1, -1));
}
