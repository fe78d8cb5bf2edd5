#include "mirabolic/decorated_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mirabolic {

int DecoratedMatrix::total() const {
  return std::accumulate(a.begin(), a.end(), 0);
}

std::vector<int> DecoratedMatrix::row_sums() const {
  std::vector<int> r(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) r[i - 1] += at(i, j);
  return r;
}

std::vector<int> DecoratedMatrix::col_sums() const {
  std::vector<int> c(m, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) c[j - 1] += at(i, j);
  return c;
}

bool DecoratedMatrix::decorated(int i, int j) const {
  for (const auto& [di, dj] : delta)
    if (di == i && dj == j) return true;
  return false;
}

void DecoratedMatrix::validate() const {
  if (n < 1 || m < 1) throw std::invalid_argument("shape must be >= 1x1");
  if ((int)a.size() != n * m) throw std::invalid_argument("entry count");
  for (int x : a)
    if (x < 0) throw std::invalid_argument("negative entry");
  int pi = 0, pj = m + 1;
  for (const auto& [i, j] : delta) {
    if (i < 1 || i > n || j < 1 || j > m)
      throw MalformedDelta("decoration out of range in " + str());
    if (i <= pi || j >= pj)
      throw MalformedDelta("decoration not strictly monotone in " + str());
    if (at(i, j) <= 0)
      throw MalformedDelta("decorated cell holds zero in " + str());
    pi = i;
    pj = j;
  }
}

bool DecoratedMatrix::is_valid() const {
  try {
    validate();
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

DecoratedMatrix DecoratedMatrix::transposed() const {
  DecoratedMatrix t(m, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) t.at(j, i) = at(i, j);
  for (const auto& [i, j] : delta) t.delta.push_back({j, i});
  std::sort(t.delta.begin(), t.delta.end());
  return t;
}

std::string DecoratedMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 1; i <= n; ++i) {
    os << (i > 1 ? ";" : "") << "[";
    for (int j = 1; j <= m; ++j) os << (j > 1 ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  if (!delta.empty()) {
    os << "{";
    bool first = true;
    for (const auto& [i, j] : delta) {
      os << (first ? "" : ",") << "(" << i << "," << j << ")";
      first = false;
    }
    os << "}";
  }
  return os.str();
}

const char* convention_name(WeightConvention c) {
  switch (c) {
    case WeightConvention::or_ordered: return "or_ordered";
    case WeightConvention::and_ordered: return "and_ordered";
    case WeightConvention::and_unordered: return "and_unordered";
    case WeightConvention::ge_lt: return "ge_lt";
    case WeightConvention::lt_ge: return "lt_ge";
    case WeightConvention::ge_lt_dominance_flipped:
      return "ge_lt_dominance_flipped";
  }
  return "?";
}

std::vector<WeightConvention> all_weight_conventions() {
  return {WeightConvention::or_ordered,
          WeightConvention::and_ordered,
          WeightConvention::and_unordered,
          WeightConvention::ge_lt,
          WeightConvention::lt_ge,
          WeightConvention::ge_lt_dominance_flipped};
}

WeightConvention default_convention() { return WeightConvention::ge_lt; }

namespace {

struct Cell {
  int i, j, a;
};

std::vector<Cell> positive_cells(const DecoratedMatrix& x) {
  std::vector<Cell> cells;
  for (int i = 1; i <= x.n; ++i)
    for (int j = 1; j <= x.m; ++j)
      if (x.at(i, j) > 0) cells.push_back({i, j, x.at(i, j)});
  return cells;
}

long long pair_sum(const DecoratedMatrix& x, WeightConvention c) {
  const auto cells = positive_cells(x);
  long long s = 0;
  if (c == WeightConvention::and_unordered) {
    for (size_t p = 0; p < cells.size(); ++p)
      for (size_t r = p + 1; r < cells.size(); ++r) {
        const auto& P = cells[p];
        const auto& Q = cells[r];
        if ((P.i < Q.i && P.j < Q.j) || (Q.i < P.i && Q.j < P.j))
          s += (long long)P.a * Q.a;
      }
    return s;
  }
  for (const auto& P : cells)
    for (const auto& Q : cells) {
      bool hit = false;
      switch (c) {
        case WeightConvention::or_ordered:
          hit = P.i < Q.i || P.j < Q.j;
          break;
        case WeightConvention::and_ordered:
          hit = P.i < Q.i && P.j < Q.j;
          break;
        case WeightConvention::ge_lt:
        case WeightConvention::ge_lt_dominance_flipped:
          hit = P.i >= Q.i && P.j < Q.j;
          break;
        case WeightConvention::lt_ge:
          hit = P.i < Q.i && P.j >= Q.j;
          break;
        case WeightConvention::and_unordered:
          break;  // handled above
      }
      if (hit) s += (long long)P.a * Q.a;
    }
  return s;
}

long long dominance_sum(const DecoratedMatrix& x) {
  long long s = 0;
  for (int i = 1; i <= x.n; ++i)
    for (int j = 1; j <= x.m; ++j) {
      if (x.at(i, j) == 0) continue;
      for (const auto& [k, l] : x.delta)
        if (i <= k && j <= l) {
          s += x.at(i, j);
          break;
        }
    }
  return s;
}

}  // namespace

int weight_exponent(const DecoratedMatrix& x, WeightConvention c) {
  const long long pairs = pair_sum(x, c);
  const long long dom = dominance_sum(x);
  const long long sign =
      c == WeightConvention::ge_lt_dominance_flipped ? +1 : -1;
  return (int)(-pairs + sign * dom);
}

namespace {

void gen_deltas(const DecoratedMatrix& base, int min_i, int max_j,
                std::vector<std::pair<int, int>>& cur,
                std::vector<DecoratedMatrix>& out) {
  DecoratedMatrix x = base;
  x.delta = cur;
  out.push_back(std::move(x));
  for (int i = min_i; i <= base.n; ++i)
    for (int j = 1; j < max_j; ++j)
      if (base.at(i, j) > 0) {
        cur.push_back({i, j});
        gen_deltas(base, i + 1, j, cur, out);
        cur.pop_back();
      }
}

void gen_matrices(int n, int m, int d, int pos, DecoratedMatrix& work,
                  std::vector<DecoratedMatrix>& out) {
  const int cells = n * m;
  if (pos == cells) {
    if (d != 0) return;
    std::vector<std::pair<int, int>> cur;
    gen_deltas(work, 1, m + 1, cur, out);
    return;
  }
  for (int v = 0; v <= d; ++v) {
    work.a[pos] = v;
    gen_matrices(n, m, d - v, pos + 1, work, out);
  }
  work.a[pos] = 0;
}

}  // namespace

std::vector<DecoratedMatrix> enumerate_decorated(int n, int m, int d) {
  if (n < 1 || m < 1 || d < 0)
    throw std::invalid_argument("enumerate_decorated: bad shape");
  std::vector<DecoratedMatrix> out;
  DecoratedMatrix work(n, m);
  gen_matrices(n, m, d, 0, work, out);
  return out;
}

Int binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= (n - k + i);
    c /= i;  // exact at every step
  }
  return c;
}

Int dimension_count(int n, int m, int d) {
  Int total = 0;
  for (int l = 0; l <= std::min(m, d); ++l)
    total += binomial(m, l) * binomial(n, l) * binomial(n * m + d - 1 - l, d - l);
  return total;
}

}  // namespace mirabolic
