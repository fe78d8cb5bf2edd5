#include "mirabolic/module_element.hpp"

#include <sstream>

namespace mirabolic {

void ModuleElement::check_key(const DecoratedMatrix& x) const {
  if (x.n != ctx_.n || x.m != ctx_.m)
    throw DimensionMismatch("term shape " + x.str() + " vs context " +
                            ctx_.str());
  if (x.total() != ctx_.d)
    throw DimensionMismatch("term degree " + x.str() + " vs context " +
                            ctx_.str());
}

void ModuleElement::add(const DecoratedMatrix& x, const Laurent& c) {
  if (c.is_zero()) return;
  check_key(x);
  x.validate();
  auto it = terms_.find(x);
  if (it == terms_.end()) {
    terms_.emplace(x, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  if (!(ctx_ == o.ctx_)) throw DimensionMismatch("adding across contexts");
  for (const auto& [x, c] : o.terms_) add(x, c);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  if (!(ctx_ == o.ctx_)) throw DimensionMismatch("subtracting across contexts");
  for (const auto& [x, c] : o.terms_) add(x, -c);
  return *this;
}

ModuleElement ModuleElement::scaled(const Laurent& c) const {
  ModuleElement r(ctx_);
  if (c.is_zero()) return r;
  for (const auto& [x, k] : terms_) r.terms_.emplace(x, k * c);
  return r;
}

std::string ModuleElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c == Laurent::one())
      os << x.str();
    else
      os << "(" << c.str() << ")*" << x.str();
  }
  return os.str();
}

void GeneratorToken::validate(int size) const {
  switch (kind) {
    case TokenKind::E:
    case TokenKind::F:
      if (index < 1 || index >= size)
        throw std::invalid_argument("token index out of range: " + str());
      break;
    case TokenKind::Hplus:
    case TokenKind::Hminus:
      if (index < 1 || index > size)
        throw std::invalid_argument("token index out of range: " + str());
      break;
    case TokenKind::L:
      break;
  }
}

std::string GeneratorToken::str() const {
  switch (kind) {
    case TokenKind::E: return "E" + std::to_string(index);
    case TokenKind::F: return "F" + std::to_string(index);
    case TokenKind::Hplus: return "H+" + std::to_string(index);
    case TokenKind::Hminus: return "H-" + std::to_string(index);
    case TokenKind::L: return "L";
  }
  return "?";
}

std::vector<GeneratorToken> all_tokens(int size) {
  std::vector<GeneratorToken> t;
  for (int a = 1; a <= size; ++a) {
    t.push_back(GeneratorToken::h_plus(a));
    t.push_back(GeneratorToken::h_minus(a));
  }
  for (int i = 1; i < size; ++i) {
    t.push_back(GeneratorToken::e(i));
    t.push_back(GeneratorToken::f(i));
  }
  t.push_back(GeneratorToken::l());
  return t;
}

}  // namespace mirabolic
