#pragma once

// Matrices over N with a strictly monotone decoration set: rows of the
// decoration increase while its columns decrease, and every decorated cell
// must hold a positive entry.  These index the basis of the bimodule and of
// both convolution algebras; the decoration records where the extra vector
// of a (flag, flag, vector) triple sits.

#include "mirabolic/laurent.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace mirabolic {

struct MalformedDelta : std::runtime_error {
  MalformedDelta(const std::string& what) : std::runtime_error(what) {}
};

struct DecoratedMatrix {
  int n = 0;
  int m = 0;
  std::vector<int> a;                         // row-major, n*m entries
  std::vector<std::pair<int, int>> delta;     // 1-based, rows ascending

  DecoratedMatrix() = default;
  DecoratedMatrix(int n_, int m_) : n(n_), m(m_), a(n_ * m_, 0) {}

  int at(int i, int j) const { return a[(i - 1) * m + (j - 1)]; }
  int& at(int i, int j) { return a[(i - 1) * m + (j - 1)]; }

  int total() const;
  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;
  bool decorated(int i, int j) const;

  // throws MalformedDelta / std::invalid_argument if Def-violating
  void validate() const;
  bool is_valid() const;

  DecoratedMatrix transposed() const;

  auto key() const { return std::tie(n, m, a, delta); }
  bool operator==(const DecoratedMatrix& o) const { return key() == o.key(); }
  bool operator!=(const DecoratedMatrix& o) const { return key() != o.key(); }
  bool operator<(const DecoratedMatrix& o) const { return key() < o.key(); }

  std::string str() const;
};

// Which reading of the pair sum in the basis-weight exponent is in force.
// The subscripts name the condition on an ordered pair of cells
// ((i,j),(k,l)); dominance_flipped is a deliberately wrong variant kept as a
// negative control for the calibration machinery.
enum class WeightConvention {
  or_ordered,      // i<k or j<l
  and_ordered,     // i<k and j<l
  and_unordered,   // unordered pairs admitting an orientation with i<k, j<l
  ge_lt,           // i>=k and j<l
  lt_ge,           // i<k and j>=l
  ge_lt_dominance_flipped,
};

const char* convention_name(WeightConvention c);
std::vector<WeightConvention> all_weight_conventions();

// exponent w with [A]_D = v^w e_{A,D}; pinned default is ge_lt (see
// calibrate_normalization)
int weight_exponent(const DecoratedMatrix& x, WeightConvention c);
WeightConvention default_convention();

// all decorated matrices with entry sum d, ordered lexicographically by
// flattened matrix then by decoration list
std::vector<DecoratedMatrix> enumerate_decorated(int n, int m, int d);

// closed-form count of the same set
Int dimension_count(int n, int m, int d);

Int binomial(int n, int k);

}  // namespace mirabolic
