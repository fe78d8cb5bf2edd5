#pragma once

// Finite Laurent-coefficient combinations of decorated matrices of one fixed
// shape (n, m) and degree d, kept in canonical (sorted, zero-free) form.

#include "mirabolic/decorated_matrix.hpp"
#include "mirabolic/laurent.hpp"

#include <map>
#include <stdexcept>

namespace mirabolic {

struct DimensionMismatch : std::runtime_error {
  DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct Context {
  int n = 0;
  int m = 0;
  int d = 0;
  bool operator==(const Context& o) const {
    return n == o.n && m == o.m && d == o.d;
  }
  std::string str() const {
    return "(" + std::to_string(n) + "," + std::to_string(m) + "," +
           std::to_string(d) + ")";
  }
};

class ModuleElement {
 public:
  ModuleElement() = default;
  explicit ModuleElement(Context ctx) : ctx_(ctx) {}

  static ModuleElement basis(Context ctx, const DecoratedMatrix& x) {
    ModuleElement e(ctx);
    e.add(x, Laurent::one());
    return e;
  }

  const Context& context() const { return ctx_; }
  const std::map<DecoratedMatrix, Laurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  Laurent coeff(const DecoratedMatrix& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? Laurent::zero() : it->second;
  }

  void add(const DecoratedMatrix& x, const Laurent& c);

  ModuleElement& operator+=(const ModuleElement& o);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) {
    return a += b;
  }
  ModuleElement& operator-=(const ModuleElement& o);
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) {
    return a -= b;
  }
  ModuleElement scaled(const Laurent& c) const;

  bool operator==(const ModuleElement& o) const {
    return ctx_ == o.ctx_ && terms_ == o.terms_;
  }

  std::string str() const;

 private:
  void check_key(const DecoratedMatrix& x) const;
  Context ctx_;
  std::map<DecoratedMatrix, Laurent> terms_;
};

enum class TokenKind { E, F, Hplus, Hminus, L };

struct GeneratorToken {
  TokenKind kind = TokenKind::L;
  int index = 0;  // E/F: 1..size-1, H: 1..size, L: unused

  static GeneratorToken e(int i) { return {TokenKind::E, i}; }
  static GeneratorToken f(int i) { return {TokenKind::F, i}; }
  static GeneratorToken h_plus(int a) { return {TokenKind::Hplus, a}; }
  static GeneratorToken h_minus(int a) { return {TokenKind::Hminus, a}; }
  static GeneratorToken l() { return {TokenKind::L, 0}; }

  // size = number of flag steps on the acting side
  void validate(int size) const;
  std::string str() const;
  bool operator==(const GeneratorToken& o) const {
    return kind == o.kind && index == o.index;
  }
};

// all generators of the algebra acting on a side with `size` flag steps
std::vector<GeneratorToken> all_tokens(int size);

}  // namespace mirabolic
