#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mirabolic/laurent.hpp"

#include <random>

using namespace mirabolic;

namespace {

Laurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 5), expo(-6, 6), coef(-9, 9);
  Laurent p;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) p += Laurent::monomial(expo(rng), coef(rng));
  return p;
}

}  // namespace

TEST_CASE("ring arithmetic keeps canonical form") {
  const Laurent v = Laurent::monomial(1);
  const Laurent vinv = Laurent::monomial(-1);
  const Laurent s = v + vinv;

  CHECK(s * s == Laurent::monomial(2) + Laurent::monomial(0, 2) +
                     Laurent::monomial(-2));
  CHECK((s - s).is_zero());
  CHECK(s.shifted(3) == Laurent::monomial(4) + Laurent::monomial(2));
  CHECK(s.scaled(0).is_zero());
  CHECK(-s == Laurent::monomial(1, -1) + Laurent::monomial(-1, -1));
  CHECK(Laurent::one().coeff(0) == 1);
  CHECK(Laurent::zero().is_zero());
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const Laurent a = random_laurent(rng);
    const Laurent b = random_laurent(rng);
    const Laurent c = random_laurent(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Laurent::zero());
  }
}

TEST_CASE("exact division recovers factors and rejects non-multiples") {
  std::mt19937 rng(20240812);
  const Laurent d = Laurent::monomial(1) - Laurent::monomial(-1);
  for (int trial = 0; trial < 100; ++trial) {
    const Laurent a = random_laurent(rng);
    if (a.is_zero()) continue;
    CHECK(exact_divide(a * d, d) == a);
  }
  CHECK_THROWS_AS(exact_divide(Laurent::one(), d), NotDivisible);
  CHECK(exact_divide(Laurent::zero(), d).is_zero());
}

TEST_CASE("quantum binomial values") {
  // one-row bracket: geometric sums in v^-2
  CHECK(gauss_bracket(1, 1) == Laurent::one());
  CHECK(gauss_bracket(2, 1) == Laurent::one() + Laurent::monomial(-2));
  CHECK(gauss_bracket(3, 2) == Laurent::one() + Laurent::monomial(-2) +
                                   Laurent::monomial(-4));
  // t > N collapses to zero
  CHECK(gauss_bracket(1, 2).is_zero());
  CHECK(gauss_bracket(0, 1).is_zero());
}

TEST_CASE("quantum binomial recurrences and symmetry") {
  for (int N = 2; N <= 7; ++N) {
    // first-column recurrence
    CHECK(gauss_bracket(N, 1) ==
          Laurent::one() + gauss_bracket(N - 1, 1).shifted(-2));
    for (int t = 2; t < N; ++t) {
      // Pascal recurrence in the variable v^-2
      CHECK(gauss_bracket(N, t) ==
            gauss_bracket(N - 1, t - 1) +
                gauss_bracket(N - 1, t).shifted(-2 * t));
      // symmetry
      CHECK(gauss_bracket(N, t) == gauss_bracket(N, N - t));
    }
  }
}

TEST_CASE("rational evaluation") {
  const Laurent p =
      Laurent::monomial(2) - Laurent::monomial(0, 3) + Laurent::monomial(-1);
  CHECK(p.eval(Rational(2)) == Rational(4) - 3 + Rational(1, 2));
  CHECK(p.eval(Rational(1, 2)) == Rational(1, 4) - 3 + 2);
  CHECK(Laurent::zero().eval(Rational(7)) == 0);
}

TEST_CASE("exponent parity predicates") {
  const Laurent even = Laurent::monomial(2) + Laurent::monomial(-4);
  const Laurent odd = Laurent::monomial(3) + Laurent::monomial(-1);
  CHECK(even.exponents_all_even());
  CHECK(even.exponents_all_parity(0));
  CHECK(!even.exponents_all_parity(1));
  CHECK(odd.exponents_all_parity(1));
  CHECK(!odd.exponents_all_even());
  CHECK(Laurent::zero().exponents_all_even());
  CHECK(Laurent::zero().exponents_all_parity(1));
}

TEST_CASE("specialization at v = sqrt(q)") {
  // v^2 at q: the rational part carries it all
  const SpecializedValue two = specialize_v2(Laurent::monomial(2), 2);
  CHECK(two.rational == 2);
  CHECK(two.surd == 0);
  // v itself: pure surd
  const SpecializedValue root = specialize_v2(Laurent::monomial(1), 2);
  CHECK(root.rational == 0);
  CHECK(root.surd == 1);
  // v^-1 = sqrt(q)/q
  const SpecializedValue rinv = specialize_v2(Laurent::monomial(-1), 3);
  CHECK(rinv.rational == 0);
  CHECK(rinv.surd == Rational(1, 3));
  // mixed polynomial
  const Laurent p = Laurent::monomial(1) + Laurent::monomial(-1) +
                    Laurent::monomial(0, 5);
  const SpecializedValue mix = specialize_v2(p, 2);
  CHECK(mix.rational == 5);
  CHECK(mix.surd == Rational(3, 2));
}

TEST_CASE("specialized value arithmetic") {
  const SpecializedValue a{Rational(1), Rational(2), 2};   // 1 + 2 sqrt2
  const SpecializedValue b{Rational(-3), Rational(1), 2};  // -3 + sqrt2
  const SpecializedValue sum = a + b;
  CHECK(sum.rational == -2);
  CHECK(sum.surd == 3);
  // (1 + 2 s)(-3 + s) = -3 + s - 6 s + 2 s^2 = (-3 + 2q) + (-5) s
  const SpecializedValue prod = a * b;
  CHECK(prod.rational == 1);
  CHECK(prod.surd == -5);
  CHECK(specialized_zero(2).is_zero());
  CHECK(specialized_int(7, 3).rational == 7);
}

TEST_CASE("specialization is multiplicative on random elements") {
  std::mt19937 rng(20240813);
  for (int trial = 0; trial < 100; ++trial) {
    const Laurent a = random_laurent(rng);
    const Laurent b = random_laurent(rng);
    for (long long q : {2, 3, 5}) {
      const SpecializedValue lhs = specialize_v2(a * b, q);
      const SpecializedValue rhs = specialize_v2(a, q) * specialize_v2(b, q);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("rational powers of q") {
  CHECK(rational_pow(2, 3) == 8);
  CHECK(rational_pow(3, 0) == 1);
  CHECK(rational_pow(5, -2) == Rational(1, 25));
}
