#include "mirabolic/laurent.hpp"

#include <cmath>
#include <sstream>

namespace mirabolic {

Rational Laurent::eval(const Rational& x) const {
  if (x == 0) throw std::invalid_argument("eval at 0 undefined for Laurent");
  Rational acc = 0;
  for (const auto& [e, c] : coeffs_) {
    Rational p = 1;
    Rational base = e >= 0 ? x : Rational(1) / x;
    for (int i = 0; i < std::abs(e); ++i) p *= base;
    acc += Rational(c) * p;
  }
  return acc;
}

std::string Laurent::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << "v^" << e;
    }
  }
  return os.str();
}

Laurent exact_divide(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw NotDivisible("division by zero polynomial");
  if (a.is_zero()) return Laurent::zero();
  // divide from the low end; remainder must vanish exactly
  Laurent rem = a;
  Laurent quot;
  const int blo = b.min_exp();
  const Int bc = b.coeff(blo);
  // in an exact division the quotient's top exponent is forced; a remainder
  // that climbs past it can never cancel (dividing 1 by v - v^-1 would
  // otherwise unfold into an infinite power series)
  const int qmax = a.max_exp() - b.max_exp();
  while (!rem.is_zero()) {
    const int rlo = rem.min_exp();
    const Int rc = rem.coeff(rlo);
    if (rc % bc != 0)
      throw NotDivisible("leading coefficient not divisible: " + a.str() +
                         " / " + b.str());
    if (rlo - blo > qmax)
      throw NotDivisible("nonterminating division: " + a.str() + " / " +
                         b.str());
    Laurent t = Laurent::monomial(rlo - blo, rc / bc);
    quot += t;
    rem -= t * b;
    if (!rem.is_zero() && rem.min_exp() <= rlo)
      throw NotDivisible("nonterminating division: " + a.str() + " / " +
                         b.str());
  }
  return quot;
}

Laurent gauss_bracket(int N, int t) {
  if (t < 1) throw std::invalid_argument("gauss_bracket: t must be >= 1");
  if (N < 0) throw std::invalid_argument("gauss_bracket: N must be >= 0");
  Laurent acc = Laurent::one();
  for (int i = 1; i <= t; ++i) {
    Laurent num = Laurent::monomial(-2 * (N - i + 1)) - Laurent::one();
    Laurent den = Laurent::monomial(-2 * i) - Laurent::one();
    acc = exact_divide(acc * num, den);
  }
  return acc;
}

SpecializedValue& SpecializedValue::operator+=(const SpecializedValue& o) {
  if (q != o.q) throw std::invalid_argument("mixed-q specialized values");
  rational += o.rational;
  surd += o.surd;
  return *this;
}

SpecializedValue operator*(const SpecializedValue& a,
                           const SpecializedValue& b) {
  if (a.q != b.q) throw std::invalid_argument("mixed-q specialized values");
  return SpecializedValue{a.rational * b.rational + a.surd * b.surd * a.q,
                          a.rational * b.surd + a.surd * b.rational, a.q};
}

std::string SpecializedValue::str() const {
  std::ostringstream os;
  os << rational.str();
  if (surd != 0) os << " + " << surd.str() << "*sqrt(" << q << ")";
  return os.str();
}

SpecializedValue specialized_zero(long long q) {
  return SpecializedValue{0, 0, q};
}

SpecializedValue specialized_int(const Int& n, long long q) {
  return SpecializedValue{Rational(n), 0, q};
}

Rational rational_pow(long long q, int k) {
  Int p = 1;
  for (int i = 0; i < std::abs(k); ++i) p *= q;
  return k >= 0 ? Rational(p) : Rational(1, p);
}

static long long exact_isqrt(long long q) {
  long long r = (long long)std::llround(std::sqrt((double)q));
  while (r * r > q) --r;
  while ((r + 1) * (r + 1) <= q) ++r;
  return r;
}

SpecializedValue specialize_v2(const Laurent& p, long long q) {
  if (q < 2) throw std::invalid_argument("specialize_v2: q must be >= 2");
  SpecializedValue val = specialized_zero(q);
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 == 0) {
      val.rational += Rational(c) * rational_pow(q, e / 2);
    } else {
      // v^e = q^((e-1)/2) * sqrt(q); C++ division truncates, fix parity
      int k = (e - (e % 2 + 2) % 2) / 2;
      val.surd += Rational(c) * rational_pow(q, k);
    }
  }
  const long long s = exact_isqrt(q);
  if (s * s == q && val.surd != 0) {
    val.rational += val.surd * s;
    val.surd = 0;
  }
  return val;
}

}  // namespace mirabolic
