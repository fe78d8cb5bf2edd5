#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mirabolic/gfq.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace mirabolic;

namespace {

std::vector<std::vector<int>> random_rows(std::mt19937& rng, int k, int d,
                                          int q) {
  std::uniform_int_distribution<int> coord(0, q - 1);
  std::vector<std::vector<int>> rows(k, std::vector<int>(d));
  for (auto& r : rows)
    for (auto& x : r) x = coord(rng);
  return rows;
}

}  // namespace

TEST_CASE("vector codes round-trip in base q") {
  for (int q : {2, 3, 5}) {
    REQUIRE(is_supported_prime(q));
    const int d = 3;
    for (int code = 0; code < q * q * q; ++code) {
      const auto x = vec_decode(code, d, q);
      CHECK(static_cast<int>(x.size()) == d);
      CHECK(vec_code(x, q) == code);
    }
  }
  CHECK(!is_supported_prime(4));
  CHECK(!is_supported_prime(7));
}

TEST_CASE("code arithmetic matches coordinate arithmetic") {
  std::mt19937 rng(77001);
  for (int q : {2, 3, 5}) {
    const int d = 3, codes = q * q * q;
    std::uniform_int_distribution<int> pick(0, codes - 1), sc(0, q - 1);
    for (int trial = 0; trial < 60; ++trial) {
      const int a = pick(rng), b = pick(rng), s = sc(rng);
      const auto xa = vec_decode(a, d, q), xb = vec_decode(b, d, q);
      std::vector<int> sum(d), diff(d), scl(d);
      for (int i = 0; i < d; ++i) {
        sum[i] = (xa[i] + xb[i]) % q;
        diff[i] = ((xa[i] - xb[i]) % q + q) % q;
        scl[i] = (xa[i] * s) % q;
      }
      CHECK(code_add(a, b, d, q) == vec_code(sum, q));
      CHECK(code_sub(a, b, d, q) == vec_code(diff, q));
      CHECK(code_scale(a, s, d, q) == vec_code(scl, q));
    }
  }
}

TEST_CASE("row reduction yields one canonical form per row space") {
  std::mt19937 rng(77002);
  for (int q : {2, 3}) {
    for (int trial = 0; trial < 80; ++trial) {
      auto rows = random_rows(rng, 3, 4, q);
      const auto canon = rref(rows, q);
      // pivot columns strictly increase, pivots are 1 with zeros above
      int last_pivot = -1;
      for (size_t r = 0; r < canon.size(); ++r) {
        int p = 0;
        while (p < 4 && canon[r][p] == 0) ++p;
        REQUIRE(p < 4);
        CHECK(p > last_pivot);
        last_pivot = p;
        CHECK(canon[r][p] == 1);
        for (size_t rr = 0; rr < canon.size(); ++rr)
          if (rr != r) CHECK(canon[rr][p] == 0);
      }
      // invariance under shuffling and row rescaling
      auto mixed = rows;
      std::shuffle(mixed.begin(), mixed.end(), rng);
      std::uniform_int_distribution<int> unit(1, q - 1);
      for (auto& r : mixed) {
        const int u = unit(rng);
        for (auto& x : r) x = (x * u) % q;
      }
      CHECK(rref(mixed, q) == canon);
    }
  }
}

TEST_CASE("subspace tables have the right sizes") {
  // F_2^2: zero, three lines, the plane
  CHECK(SubspaceTable(2, 2).size() == 5);
  // F_3^2: zero, four lines, the plane
  CHECK(SubspaceTable(2, 3).size() == 6);
  // F_2^3: 1 + 7 + 7 + 1
  CHECK(SubspaceTable(3, 2).size() == 16);
  // degenerate ambient space still works
  CHECK(SubspaceTable(0, 2).size() == 1);
}

TEST_CASE("table lattice operations agree with the modular law") {
  for (int q : {2, 3}) {
    SubspaceTable tab(3, q);
    for (int a = 0; a < tab.size(); ++a)
      for (int b = 0; b < tab.size(); ++b) {
        const int meet = tab.intersect(a, b);
        const int join = tab.sum(a, b);
        CHECK(tab.dim(meet) + tab.dim(join) == tab.dim(a) + tab.dim(b));
        CHECK(tab.contains(a, meet));
        CHECK(tab.contains(join, b));
        if (tab.contains(a, b)) CHECK(join == a);
      }
    CHECK(tab.dim(tab.zero_id()) == 0);
    CHECK(tab.dim(tab.full_id()) == 3);
  }
}

TEST_CASE("membership masks match the spanned sets") {
  SubspaceTable tab(2, 3);
  for (int id = 0; id < tab.size(); ++id) {
    const auto& s = tab[id];
    int members = 0;
    for (int code = 0; code < tab.codes(); ++code)
      if (tab.member(id, code)) ++members;
    // |S| = q^dim
    int expect = 1;
    for (int i = 0; i < s.dim; ++i) expect *= 3;
    CHECK(members == expect);
    // zero vector is everywhere
    CHECK(tab.member(id, 0));
  }
}

TEST_CASE("id_of_span finds the canonical subspace") {
  std::mt19937 rng(77003);
  SubspaceTable tab(3, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rows = random_rows(rng, 2, 3, 2);
    const int id = tab.id_of_span(rows);
    const auto sub = make_subspace(3, 2, rows);
    CHECK(tab[id] == sub);
    CHECK(tab.id_of_rref(sub.basis) == id);
  }
}

TEST_CASE("flag enumeration counts") {
  WorkBudget budget{0, 0};
  // two-step flags of F_q^2: the middle step is any subspace
  CHECK(enumerate_flags(2, 2, 2, budget).flags.size() == 5);
  CHECK(enumerate_flags(2, 3, 2, budget).flags.size() == 6);
  // one-step flags: only the full space
  CHECK(enumerate_flags(2, 2, 1, budget).flags.size() == 1);
  // d = 0: a single flag of zero spaces
  const auto degenerate = enumerate_flags(0, 2, 3, budget);
  REQUIRE(degenerate.flags.size() == 1);
  for (int step : degenerate.flags[0].steps)
    CHECK(degenerate.table->dim(step) == 0);
  // chains end at the full space and ascend
  const auto geo = enumerate_flags(2, 2, 3, budget);
  for (const auto& f : geo.flags) {
    REQUIRE(static_cast<int>(f.steps.size()) == 3);
    CHECK(f.steps.back() == geo.table->full_id());
    for (size_t i = 1; i < f.steps.size(); ++i)
      CHECK(geo.table->contains(f.steps[i], f.steps[i - 1]));
  }
}

TEST_CASE("scale guards") {
  CHECK_THROWS_AS(SubspaceTable(kMaxAmbientDim + 1, 2), ScaleExceeded);
  WorkBudget tiny{5, 0};
  CHECK_NOTHROW(tiny.charge(3));
  CHECK_THROWS_AS(tiny.charge(100), ScaleExceeded);
  WorkBudget unlimited{0, 0};
  CHECK_NOTHROW(unlimited.charge(Int("123456789123456789")));
  CHECK(default_work_limit() > 0);
}
