#pragma once

// Exact arithmetic in Z[v, v^-1] plus the specialization v^2 = q used when
// comparing symbolic results with counts over a finite field.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace mirabolic {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct NotDivisible : std::runtime_error {
  NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

// Sparse Laurent polynomial, canonical form: no zero coefficients stored.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(const Int& c) {
    if (c != 0) coeffs_[0] = c;
  }
  static Laurent monomial(int exp, const Int& c = 1) {
    Laurent p;
    if (c != 0) p.coeffs_[exp] = c;
    return p;
  }
  static Laurent zero() { return Laurent(); }
  static Laurent one() { return Laurent(Int(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  Int coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Int(0) : it->second;
  }
  // empty polynomial has no degrees; callers must check is_zero() first
  int min_exp() const { return coeffs_.begin()->first; }
  int max_exp() const { return coeffs_.rbegin()->first; }
  const std::map<int, Int>& terms() const { return coeffs_; }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(const Laurent& a) {
    Laurent r;
    for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = -c;
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent scaled(const Int& c) const {
    Laurent r;
    if (c == 0) return r;
    for (const auto& [e, k] : coeffs_) r.coeffs_[e] = k * c;
    return r;
  }
  // multiply by v^k
  Laurent shifted(int k) const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
  }

  bool operator==(const Laurent& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Laurent& o) const { return coeffs_ != o.coeffs_; }
  bool operator<(const Laurent& o) const { return coeffs_ < o.coeffs_; }

  // true when every exponent has the given parity (vacuously true for 0)
  bool exponents_all_even() const {
    for (const auto& [e, c] : coeffs_)
      if (e % 2 != 0) return false;
    return true;
  }
  bool exponents_all_parity(int parity) const {
    for (const auto& [e, c] : coeffs_)
      if (((e % 2) + 2) % 2 != parity) return false;
    return true;
  }

  // exact evaluation at a nonzero rational point
  Rational eval(const Rational& x) const;

  std::string str() const;  // e.g. "v^-2 + 1", "0"

 private:
  void add_term(int e, const Int& c) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      if (c != 0) coeffs_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  std::map<int, Int> coeffs_;
};

// Quotient of an exact division; throws NotDivisible otherwise.
Laurent exact_divide(const Laurent& a, const Laurent& b);

// Product over i in [1,t] of (v^-2(N-i+1) - 1)/(v^-2i - 1); a polynomial in
// v^-2 (each partial product is one of the Gaussian binomials).  N >= 0,
// t >= 1; the value is zero when t > N.
Laurent gauss_bracket(int N, int t);

// Element of Q + Q*sqrt(q).  When q is a perfect square the surd part is
// folded into the rational part, so surd == 0 in that case.
struct SpecializedValue {
  Rational rational;
  Rational surd;
  long long q = 0;

  bool operator==(const SpecializedValue& o) const {
    return q == o.q && rational == o.rational && surd == o.surd;
  }
  bool is_zero() const { return rational == 0 && surd == 0; }
  SpecializedValue& operator+=(const SpecializedValue& o);
  friend SpecializedValue operator+(SpecializedValue a,
                                    const SpecializedValue& b) {
    return a += b;
  }
  friend SpecializedValue operator*(const SpecializedValue& a,
                                    const SpecializedValue& b);
  SpecializedValue scaled(const Rational& c) const {
    return SpecializedValue{rational * c, surd * c, q};
  }
  std::string str() const;
};

SpecializedValue specialized_zero(long long q);
SpecializedValue specialized_int(const Int& n, long long q);

// Exact value of p at v = sqrt(q); q >= 2.
SpecializedValue specialize_v2(const Laurent& p, long long q);

// q^k as an exact rational, k may be negative
Rational rational_pow(long long q, int k);

}  // namespace mirabolic
