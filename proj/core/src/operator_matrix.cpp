#include "mirabolic/operator_matrix.hpp"

namespace mirabolic {

BasisIndex BasisIndex::make(Context ctx) {
  BasisIndex b;
  b.ctx = ctx;
  b.keys = enumerate_decorated(ctx.n, ctx.m, ctx.d);
  for (int i = 0; i < static_cast<int>(b.keys.size()); ++i)
    b.pos[b.keys[static_cast<size_t>(i)]] = i;
  return b;
}

int BasisIndex::at(const DecoratedMatrix& x) const {
  auto it = pos.find(x);
  if (it == pos.end())
    throw DimensionMismatch("symbol outside the context basis: " + x.str());
  return it->second;
}

OperatorMatrix OperatorMatrix::identity(int dim) {
  OperatorMatrix r(dim);
  for (int i = 0; i < dim; ++i) r.add(i, i, Laurent::one());
  return r;
}

void OperatorMatrix::add(int row, int col, const Laurent& c) {
  if (c.is_zero()) return;
  auto& column = cols_[static_cast<size_t>(col)];
  auto [it, fresh] = column.try_emplace(row, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) column.erase(it);
  }
}

Laurent OperatorMatrix::at(int row, int col) const {
  const auto& column = cols_[static_cast<size_t>(col)];
  auto it = column.find(row);
  return it == column.end() ? Laurent::zero() : it->second;
}

bool OperatorMatrix::is_zero() const {
  for (const auto& column : cols_)
    if (!column.empty()) return false;
  return true;
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& o) {
  if (dim_ != o.dim_) throw DimensionMismatch("operator size mismatch");
  for (int c = 0; c < dim_; ++c)
    for (const auto& [r, v] : o.cols_[static_cast<size_t>(c)]) add(r, c, v);
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& o) {
  if (dim_ != o.dim_) throw DimensionMismatch("operator size mismatch");
  for (int c = 0; c < dim_; ++c)
    for (const auto& [r, v] : o.cols_[static_cast<size_t>(c)]) add(r, c, -v);
  return *this;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("operator size mismatch");
  OperatorMatrix r(a.dim_);
  for (int c = 0; c < b.dim_; ++c)
    for (const auto& [k, bv] : b.cols_[static_cast<size_t>(c)])
      for (const auto& [row, av] : a.cols_[static_cast<size_t>(k)])
        r.add(row, c, av * bv);
  return r;
}

OperatorMatrix OperatorMatrix::scaled(const Laurent& c) const {
  OperatorMatrix r(dim_);
  if (c.is_zero()) return r;
  for (int col = 0; col < dim_; ++col)
    for (const auto& [row, v] : cols_[static_cast<size_t>(col)])
      r.add(row, col, v * c);
  return r;
}

OperatorMatrix OperatorMatrix::divided(const Laurent& c) const {
  OperatorMatrix r(dim_);
  for (int col = 0; col < dim_; ++col)
    for (const auto& [row, v] : cols_[static_cast<size_t>(col)])
      r.add(row, col, exact_divide(v, c));
  return r;
}

std::optional<std::tuple<int, int, Laurent>> OperatorMatrix::first_nonzero()
    const {
  for (int col = 0; col < dim_; ++col)
    if (!cols_[static_cast<size_t>(col)].empty()) {
      const auto& [row, v] = *cols_[static_cast<size_t>(col)].begin();
      return std::make_tuple(row, col, v);
    }
  return std::nullopt;
}

OperatorMatrix token_matrix(const BasisIndex& basis, const GeneratorToken& t,
                            bool left_side) {
  OperatorMatrix r(basis.size());
  for (int j = 0; j < basis.size(); ++j) {
    const DecoratedMatrix& x = basis.keys[static_cast<size_t>(j)];
    const ModuleElement img = left_side
                                  ? act_left_basis(t, basis.ctx, x)
                                  : act_right_basis(basis.ctx, x, t);
    for (const auto& [key, c] : img.terms()) r.add(basis.at(key), j, c);
  }
  return r;
}

OperatorMatrix word_matrix(const BasisIndex& basis,
                           const std::vector<GeneratorToken>& word,
                           bool left_side) {
  OperatorMatrix r = OperatorMatrix::identity(basis.size());
  if (left_side) {
    for (const auto& t : word) r = r * token_matrix(basis, t, true);
  } else {
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      r = r * token_matrix(basis, *it, false);
  }
  return r;
}

}  // namespace mirabolic
