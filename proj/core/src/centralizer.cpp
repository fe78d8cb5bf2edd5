#include "mirabolic/verifier.hpp"

#include <sstream>

// Double-centralizer dimension comparison at rational specializations of v.
//
// Both acting algebras are spanned by words in their token matrices; the
// span saturates generation by generation.  Commutants are cut out inside
// the block-matrix space forced by the diagonal tokens: at any v outside
// {0, 1, -1} the diagonal eigenvalue tuple separates the marginal-sum
// classes, so a commuting matrix is supported on (x, y) pairs with equal
// row-sum vectors (left algebra) or equal column-sum vectors (right
// algebra).  The remaining tokens contribute linear constraints whose rank
// is computed exactly over the rationals.

namespace mirabolic {

namespace {

using Coords = std::vector<Rational>;

struct RatMat {
  int dim = 0;
  std::vector<std::map<int, Rational>> cols;  // per column: row -> value
  RatMat() = default;
  explicit RatMat(int d) : dim(d), cols(static_cast<size_t>(d)) {}
};

RatMat eval_matrix(const OperatorMatrix& m, const Rational& v0) {
  RatMat r(m.dim());
  for (int j = 0; j < m.dim(); ++j)
    for (const auto& [i, c] : m.column(j)) {
      Rational val = c.eval(v0);
      if (val != 0) r.cols[static_cast<size_t>(j)][i] = std::move(val);
    }
  return r;
}

// (a*b)[x][y] = sum_k a[x][k] b[k][y]
RatMat mul(const RatMat& a, const RatMat& b) {
  RatMat r(a.dim);
  for (int y = 0; y < b.dim; ++y)
    for (const auto& [k, bv] : b.cols[static_cast<size_t>(y)])
      for (const auto& [x, av] : a.cols[static_cast<size_t>(k)]) {
        Rational& slot = r.cols[static_cast<size_t>(y)][x];
        slot += av * bv;
        if (slot == 0) r.cols[static_cast<size_t>(y)].erase(x);
      }
  return r;
}

// basis positions grouped by a marginal-sum vector; the coordinates of the
// block-matrix space are the admitted (row, col) pairs
struct Blocks {
  int dim = 0;
  std::vector<int> group;
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> index;
  int width() const { return static_cast<int>(pairs.size()); }
};

Blocks make_blocks(const std::vector<DecoratedMatrix>& keys, bool by_rows) {
  Blocks b;
  b.dim = static_cast<int>(keys.size());
  std::map<std::vector<int>, int> gid;
  for (const auto& key : keys) {
    const auto k = by_rows ? key.row_sums() : key.col_sums();
    b.group.push_back(
        gid.try_emplace(k, static_cast<int>(gid.size())).first->second);
  }
  for (int x = 0; x < b.dim; ++x)
    for (int y = 0; y < b.dim; ++y)
      if (b.group[static_cast<size_t>(x)] == b.group[static_cast<size_t>(y)]) {
        b.index.emplace(std::make_pair(x, y), b.width());
        b.pairs.emplace_back(x, y);
      }
  return b;
}

Coords coords_of(const RatMat& m, const Blocks& blk) {
  Coords v(static_cast<size_t>(blk.width()), Rational(0));
  for (int y = 0; y < m.dim; ++y)
    for (const auto& [x, val] : m.cols[static_cast<size_t>(y)]) {
      auto it = blk.index.find({x, y});
      if (it == blk.index.end())
        throw std::logic_error("word matrix escapes its marginal blocks");
      v[static_cast<size_t>(it->second)] = val;
    }
  return v;
}

RatMat mat_of(const Coords& v, const Blocks& blk) {
  RatMat m(blk.dim);
  for (size_t u = 0; u < v.size(); ++u)
    if (v[u] != 0) {
      const auto& [x, y] = blk.pairs[u];
      m.cols[static_cast<size_t>(y)][x] = v[u];
    }
  return m;
}

// reduced row echelon accumulator over the block coordinates
struct Echelon {
  int width = 0;
  std::vector<Coords> rows;
  std::vector<int> pivots;

  explicit Echelon(int w) : width(w) {}
  int rank() const { return static_cast<int>(rows.size()); }

  bool insert(Coords vec) {
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rational f = vec[static_cast<size_t>(pivots[r])];
      if (f == 0) continue;
      const Coords& row = rows[r];
      for (int c = 0; c < width; ++c)
        if (row[static_cast<size_t>(c)] != 0)
          vec[static_cast<size_t>(c)] -= f * row[static_cast<size_t>(c)];
    }
    int p = -1;
    for (int c = 0; c < width; ++c)
      if (vec[static_cast<size_t>(c)] != 0) {
        p = c;
        break;
      }
    if (p < 0) return false;
    const Rational pv = vec[static_cast<size_t>(p)];
    for (int c = p; c < width; ++c)
      if (vec[static_cast<size_t>(c)] != 0) vec[static_cast<size_t>(c)] /= pv;
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rational f = rows[r][static_cast<size_t>(p)];
      if (f == 0) continue;
      for (int c = 0; c < width; ++c)
        if (vec[static_cast<size_t>(c)] != 0)
          rows[r][static_cast<size_t>(c)] -= f * vec[static_cast<size_t>(c)];
    }
    rows.push_back(std::move(vec));
    pivots.push_back(p);
    return true;
  }
};

int span_dim(const std::vector<RatMat>& gens, const Blocks& blk) {
  Echelon ech(blk.width());
  RatMat ident(blk.dim);
  for (int i = 0; i < blk.dim; ++i)
    ident.cols[static_cast<size_t>(i)][i] = 1;
  std::vector<Coords> frontier;
  if (ech.insert(coords_of(ident, blk))) frontier.push_back(ech.rows.back());
  while (!frontier.empty()) {
    std::vector<Coords> next;
    for (const auto& fc : frontier) {
      const RatMat b = mat_of(fc, blk);
      for (const auto& t : gens)
        if (ech.insert(coords_of(mul(b, t), blk)))
          next.push_back(ech.rows.back());
    }
    frontier = std::move(next);
  }
  return ech.rank();
}

int commutant_dim(const std::vector<RatMat>& constraint_tokens,
                  const Blocks& blk) {
  Echelon ech(blk.width());
  for (const auto& t : constraint_tokens) {
    std::vector<std::map<int, Rational>> rowv(static_cast<size_t>(t.dim));
    for (int k = 0; k < t.dim; ++k)
      for (const auto& [x, val] : t.cols[static_cast<size_t>(k)])
        rowv[static_cast<size_t>(x)][k] = val;
    for (int x = 0; x < t.dim; ++x)
      for (int y = 0; y < t.dim; ++y) {
        std::map<int, Rational> contrib;
        // entry (x, y) of M*t - t*M as a linear form in the block unknowns
        for (const auto& [k, tv] : t.cols[static_cast<size_t>(y)])
          if (blk.group[static_cast<size_t>(k)] ==
              blk.group[static_cast<size_t>(x)])
            contrib[blk.index.at({x, k})] += tv;
        for (const auto& [k, tv] : rowv[static_cast<size_t>(x)])
          if (blk.group[static_cast<size_t>(k)] ==
              blk.group[static_cast<size_t>(y)])
            contrib[blk.index.at({k, y})] -= tv;
        Coords vec(static_cast<size_t>(blk.width()), Rational(0));
        bool any = false;
        for (const auto& [u, val] : contrib)
          if (val != 0) {
            vec[static_cast<size_t>(u)] = val;
            any = true;
          }
        if (any) ech.insert(std::move(vec));
      }
  }
  return blk.width() - ech.rank();
}

bool is_diagonal_kind(const GeneratorToken& t) {
  return t.kind == TokenKind::Hplus || t.kind == TokenKind::Hminus;
}

}  // namespace

CentralizerReport centralizer_report(Context ctx,
                                     const std::vector<Rational>& v_samples) {
  if (v_samples.empty())
    throw std::invalid_argument("need at least one specialization of v");
  CentralizerReport rep;
  rep.ctx = ctx;
  rep.within_hypothesis = ctx.n >= ctx.m && ctx.m >= ctx.d;

  const BasisIndex basis = BasisIndex::make(ctx);
  // left words preserve column sums, right words preserve row sums
  const Blocks col_blocks = make_blocks(basis.keys, false);
  const Blocks row_blocks = make_blocks(basis.keys, true);

  std::vector<std::pair<GeneratorToken, OperatorMatrix>> left_tokens,
      right_tokens;
  for (const auto& t : all_tokens(ctx.n))
    left_tokens.emplace_back(t, token_matrix(basis, t, true));
  for (const auto& t : all_tokens(ctx.m))
    right_tokens.emplace_back(t, token_matrix(basis, t, false));

  bool ok = true;
  std::string mismatch;
  for (const auto& v0 : v_samples) {
    if (v0 == 0 || v0 == 1 || v0 == -1) {
      std::ostringstream os;
      os << "specialization v=" << v0
         << " does not separate the diagonal characters";
      throw SampleDegenerate(os.str());
    }
    std::vector<RatMat> lgen, rgen, lcon, rcon;
    for (const auto& [t, m] : left_tokens) {
      lgen.push_back(eval_matrix(m, v0));
      if (!is_diagonal_kind(t)) lcon.push_back(lgen.back());
    }
    for (const auto& [t, m] : right_tokens) {
      rgen.push_back(eval_matrix(m, v0));
      if (!is_diagonal_kind(t)) rcon.push_back(rgen.back());
    }
    CentralizerReport::SampleRow row;
    row.v = v0;
    row.left_algebra_dim = span_dim(lgen, col_blocks);
    row.right_algebra_dim = span_dim(rgen, row_blocks);
    row.left_commutant_dim = commutant_dim(lcon, row_blocks);
    row.right_commutant_dim = commutant_dim(rcon, col_blocks);
    if (row.left_algebra_dim != row.right_commutant_dim ||
        row.right_algebra_dim != row.left_commutant_dim) {
      ok = false;
      if (mismatch.empty()) {
        std::ostringstream os;
        os << "at v=" << v0 << ": left algebra " << row.left_algebra_dim
           << " vs right commutant " << row.right_commutant_dim
           << ", right algebra " << row.right_algebra_dim
           << " vs left commutant " << row.left_commutant_dim;
        mismatch = os.str();
      }
    }
    rep.rows.push_back(std::move(row));
  }

  for (size_t i = 1; i < rep.rows.size(); ++i) {
    const auto& a = rep.rows.front();
    const auto& b = rep.rows[i];
    if (a.left_algebra_dim != b.left_algebra_dim ||
        a.right_algebra_dim != b.right_algebra_dim ||
        a.left_commutant_dim != b.left_commutant_dim ||
        a.right_commutant_dim != b.right_commutant_dim) {
      std::ostringstream os;
      os << "dimensions vary across specializations (v=" << a.v << " vs v="
         << b.v << "); resample away from degenerate points";
      throw SampleDegenerate(os.str());
    }
  }

  rep.passed = ok;
  if (ok) {
    std::ostringstream os;
    const auto& row = rep.rows.front();
    os << "left algebra = right commutant = " << row.left_algebra_dim
       << " and right algebra = left commutant = " << row.right_algebra_dim
       << " at " << rep.rows.size() << " specializations";
    rep.detail = os.str();
  } else {
    rep.detail = mismatch;
  }
  return rep;
}

}  // namespace mirabolic
