#pragma once

// Square matrices over the Laurent ring realizing generator words as
// operators on one context's basis, stored column-sparse.

#include "mirabolic/module_element.hpp"
#include "mirabolic/schur_action.hpp"

#include <optional>
#include <tuple>

namespace mirabolic {

// canonical ordering of the basis symbols of one context
struct BasisIndex {
  Context ctx;
  std::vector<DecoratedMatrix> keys;
  std::map<DecoratedMatrix, int> pos;

  static BasisIndex make(Context ctx);
  int size() const { return static_cast<int>(keys.size()); }
  int at(const DecoratedMatrix& x) const;
};

class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  explicit OperatorMatrix(int dim) : dim_(dim), cols_(static_cast<size_t>(dim)) {}
  static OperatorMatrix identity(int dim);

  int dim() const { return dim_; }
  void add(int row, int col, const Laurent& c);
  Laurent at(int row, int col) const;
  const std::map<int, Laurent>& column(int col) const {
    return cols_[static_cast<size_t>(col)];
  }
  bool is_zero() const;

  OperatorMatrix& operator+=(const OperatorMatrix& o);
  OperatorMatrix& operator-=(const OperatorMatrix& o);
  friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) {
    return a += b;
  }
  friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) {
    return a -= b;
  }
  friend OperatorMatrix operator*(const OperatorMatrix& a,
                                  const OperatorMatrix& b);
  OperatorMatrix scaled(const Laurent& c) const;
  // entrywise exact division (the relation checker's commutator route)
  OperatorMatrix divided(const Laurent& c) const;

  bool operator==(const OperatorMatrix& o) const {
    return dim_ == o.dim_ && cols_ == o.cols_;
  }
  bool operator!=(const OperatorMatrix& o) const { return !(*this == o); }

  std::optional<std::tuple<int, int, Laurent>> first_nonzero() const;

 private:
  int dim_ = 0;
  std::vector<std::map<int, Laurent>> cols_;  // per column: row -> coeff
};

// the operator of one token on the whole module, acting on the given side
OperatorMatrix token_matrix(const BasisIndex& basis, const GeneratorToken& t,
                            bool left_side);

// word realized as an operator: left words compose as written, right words
// compose in reverse (the right action is an anti-homomorphism)
OperatorMatrix word_matrix(const BasisIndex& basis,
                           const std::vector<GeneratorToken>& word,
                           bool left_side);

}  // namespace mirabolic
