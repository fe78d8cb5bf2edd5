#include "mirabolic/gfq.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace mirabolic {

namespace {

int mod_inv(int a, int q) {
  for (int x = 1; x < q; ++x)
    if (a * x % q == 1) return x;
  throw std::invalid_argument("not invertible mod " + std::to_string(q));
}

int pow_int(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_field(int q) {
  if (!is_supported_prime(q))
    throw std::invalid_argument("unsupported field size q=" +
                                std::to_string(q) + " (expected 2, 3 or 5)");
}

void check_dim(int d) {
  if (d < 0) throw std::invalid_argument("negative ambient dimension");
  if (d > kMaxAmbientDim)
    throw ScaleExceeded("ambient dimension " + std::to_string(d) +
                        " exceeds the brute-force cap " +
                        std::to_string(kMaxAmbientDim));
}

}  // namespace

bool is_supported_prime(int q) { return q == 2 || q == 3 || q == 5; }

int vec_code(const std::vector<int>& x, int q) {
  int c = 0;
  for (size_t i = x.size(); i-- > 0;) c = c * q + (x[i] % q + q) % q;
  return c;
}

std::vector<int> vec_decode(int code, int d, int q) {
  std::vector<int> x(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    x[static_cast<size_t>(i)] = code % q;
    code /= q;
  }
  return x;
}

int code_add(int a, int b, int d, int q) {
  int r = 0, mul = 1;
  for (int i = 0; i < d; ++i) {
    r += (a % q + b % q) % q * mul;
    a /= q;
    b /= q;
    mul *= q;
  }
  return r;
}

int code_sub(int a, int b, int d, int q) {
  int r = 0, mul = 1;
  for (int i = 0; i < d; ++i) {
    r += (a % q - b % q + q) % q * mul;
    a /= q;
    b /= q;
    mul *= q;
  }
  return r;
}

int code_scale(int a, int s, int d, int q) {
  int r = 0, mul = 1;
  s = (s % q + q) % q;
  for (int i = 0; i < d; ++i) {
    r += a % q * s % q * mul;
    a /= q;
    mul *= q;
  }
  return r;
}

std::vector<std::vector<int>> rref(std::vector<std::vector<int>> rows, int q) {
  if (rows.empty()) return rows;
  const size_t d = rows[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < d && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] % q == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const int inv = mod_inv((rows[rank][col] % q + q) % q, q);
    for (size_t j = 0; j < d; ++j)
      rows[rank][j] = (rows[rank][j] % q + q) % q * inv % q;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const int f = (rows[r][col] % q + q) % q;
      if (f == 0) continue;
      for (size_t j = 0; j < d; ++j)
        rows[r][j] = ((rows[r][j] - f * rows[rank][j]) % q + q) % q;
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::string SubspaceRref::str() const {
  std::string s = "<";
  for (size_t r = 0; r < basis.size(); ++r) {
    if (r) s += ", ";
    s += "(";
    for (size_t j = 0; j < basis[r].size(); ++j) {
      if (j) s += " ";
      s += std::to_string(basis[r][j]);
    }
    s += ")";
  }
  return s + ">";
}

namespace {

MemberMask span_mask(const std::vector<std::vector<int>>& basis, int d,
                     int q) {
  MemberMask mask;
  std::vector<int> row_codes;
  row_codes.reserve(basis.size());
  for (const auto& r : basis) row_codes.push_back(vec_code(r, q));
  std::vector<int> coef(basis.size(), 0);
  while (true) {
    int code = 0;
    for (size_t i = 0; i < basis.size(); ++i)
      if (coef[i])
        code = code_add(code, code_scale(row_codes[i], coef[i], d, q), d, q);
    mask.set(static_cast<size_t>(code));
    size_t i = 0;
    while (i < coef.size() && coef[i] == q - 1) coef[i++] = 0;
    if (i == coef.size()) break;
    ++coef[i];
  }
  mask.set(0);  // empty basis spans the zero space
  return mask;
}

}  // namespace

SubspaceRref make_subspace(int d, int q,
                           const std::vector<std::vector<int>>& span_rows) {
  check_field(q);
  check_dim(d);
  for (const auto& r : span_rows)
    if (static_cast<int>(r.size()) != d)
      throw std::invalid_argument("row length does not match ambient dim");
  SubspaceRref s;
  s.d = d;
  s.q = q;
  s.basis = rref(span_rows, q);
  s.dim = static_cast<int>(s.basis.size());
  s.members = span_mask(s.basis, d, q);
  return s;
}

namespace {

void check_same_space(const SubspaceRref& a, const SubspaceRref& b) {
  if (a.d != b.d || a.q != b.q)
    throw std::invalid_argument("subspaces live in different ambient spaces");
}

}  // namespace

SubspaceRref subspace_intersect(const SubspaceRref& a, const SubspaceRref& b) {
  check_same_space(a, b);
  const MemberMask mask = a.members & b.members;
  std::vector<std::vector<int>> rows;
  for (size_t c = 0; c < kMaxVectorCodes; ++c)
    if (mask[c]) rows.push_back(vec_decode(static_cast<int>(c), a.d, a.q));
  return make_subspace(a.d, a.q, rows);
}

SubspaceRref subspace_sum(const SubspaceRref& a, const SubspaceRref& b) {
  check_same_space(a, b);
  std::vector<std::vector<int>> rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return make_subspace(a.d, a.q, rows);
}

bool subspace_contains(const SubspaceRref& outer, const SubspaceRref& inner) {
  check_same_space(outer, inner);
  return (inner.members & ~outer.members).none();
}

SubspaceTable::SubspaceTable(int d, int q) : d_(d), q_(q) {
  check_field(q);
  check_dim(d);
  codes_ = pow_int(q, d);
  // enumerate canonical RREF matrices: dimension, then pivot columns, then
  // the free entries (columns right of the pivot, not themselves pivots)
  for (int k = 0; k <= d; ++k) {
    std::vector<int> pivots(static_cast<size_t>(k));
    std::function<void()> finish = [&]() {
      std::vector<std::pair<int, int>> free_pos;  // (row, col)
      for (int r = 0; r < k; ++r)
        for (int c = pivots[static_cast<size_t>(r)] + 1; c < d; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
            free_pos.emplace_back(r, c);
      std::vector<int> fill(free_pos.size(), 0);
      while (true) {
        std::vector<std::vector<int>> rows(
            static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(d), 0));
        for (int r = 0; r < k; ++r)
          rows[static_cast<size_t>(r)][static_cast<size_t>(
              pivots[static_cast<size_t>(r)])] = 1;
        for (size_t t = 0; t < free_pos.size(); ++t)
          rows[static_cast<size_t>(free_pos[t].first)][static_cast<size_t>(
              free_pos[t].second)] = fill[t];
        SubspaceRref s;
        s.d = d;
        s.q = q;
        s.basis = rows;
        s.dim = k;
        s.members = span_mask(rows, d, q);
        std::vector<int> key;
        for (const auto& row : rows)
          key.insert(key.end(), row.begin(), row.end());
        index_[key] = static_cast<int>(subs_.size());
        subs_.push_back(std::move(s));
        size_t i = 0;
        while (i < fill.size() && fill[i] == q - 1) fill[i++] = 0;
        if (i == fill.size()) break;
        ++fill[i];
      }
    };
    std::function<void(int, int)> choose = [&](int pos, int start) {
      if (pos == k) {
        finish();
        return;
      }
      for (int c = start; c < d; ++c) {
        pivots[static_cast<size_t>(pos)] = c;
        choose(pos + 1, c + 1);
      }
    };
    if (k == 0)
      finish();
    else
      choose(0, 0);
  }
  zero_id_ = id_of_rref({});
  std::vector<std::vector<int>> full_rows;
  for (int r = 0; r < d; ++r) {
    std::vector<int> row(static_cast<size_t>(d), 0);
    row[static_cast<size_t>(r)] = 1;
    full_rows.push_back(row);
  }
  full_id_ = id_of_rref(full_rows);
}

int SubspaceTable::id_of_rref(const std::vector<std::vector<int>>& rows) const {
  std::vector<int> key;
  for (const auto& row : rows) key.insert(key.end(), row.begin(), row.end());
  auto it = index_.find(key);
  if (it == index_.end())
    throw std::logic_error("subspace not found in table (non-canonical rows?)");
  return it->second;
}

int SubspaceTable::id_of_span(const std::vector<std::vector<int>>& rows) const {
  return id_of_rref(rref(rows, q_));
}

int SubspaceTable::intersect(int a, int b) const {
  if (a > b) std::swap(a, b);
  const auto key = std::make_pair(a, b);
  auto it = meet_cache_.find(key);
  if (it != meet_cache_.end()) return it->second;
  const MemberMask mask =
      subs_[static_cast<size_t>(a)].members & subs_[static_cast<size_t>(b)].members;
  std::vector<std::vector<int>> rows;
  for (int c = 0; c < codes_; ++c)
    if (mask[static_cast<size_t>(c)]) rows.push_back(vec_decode(c, d_, q_));
  const int id = id_of_span(rows);
  meet_cache_[key] = id;
  return id;
}

int SubspaceTable::sum(int a, int b) const {
  if (a > b) std::swap(a, b);
  const auto key = std::make_pair(a, b);
  auto it = join_cache_.find(key);
  if (it != join_cache_.end()) return it->second;
  std::vector<std::vector<int>> rows = subs_[static_cast<size_t>(a)].basis;
  const auto& bb = subs_[static_cast<size_t>(b)].basis;
  rows.insert(rows.end(), bb.begin(), bb.end());
  const int id = id_of_span(rows);
  join_cache_[key] = id;
  return id;
}

bool SubspaceTable::contains(int outer, int inner) const {
  return (subs_[static_cast<size_t>(inner)].members &
          ~subs_[static_cast<size_t>(outer)].members)
      .none();
}

void WorkBudget::charge(const Int& amount) {
  used += amount;
  if (limit > 0 && used > limit)
    throw ScaleExceeded("work budget exceeded: needed " + used.str() +
                        " units, limit " + limit.str() +
                        " (raise --max-work)");
}

Int default_work_limit() {
  if (const char* env = std::getenv("MIRABOLIC_MAX_WORK")) {
    try {
      return Int(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("MIRABOLIC_MAX_WORK is not an integer");
    }
  }
  return Int(2000000000);
}

FlagGeometry enumerate_flags(int d, int q, int n, WorkBudget& budget,
                             std::shared_ptr<SubspaceTable> table) {
  if (n < 1) throw std::invalid_argument("flag length must be >= 1");
  check_field(q);
  check_dim(d);
  FlagGeometry g;
  g.n = n;
  g.d = d;
  g.q = q;
  g.table = table ? std::move(table) : std::make_shared<SubspaceTable>(d, q);
  const SubspaceTable& T = *g.table;
  budget.charge(Int(T.size()) * T.size() / 4);
  // per subspace, the ids contained in it (ascending), for chain building
  std::vector<std::vector<int>> below(static_cast<size_t>(T.size()));
  for (int outer = 0; outer < T.size(); ++outer)
    for (int inner = 0; inner < T.size(); ++inner)
      if (T.contains(outer, inner))
        below[static_cast<size_t>(outer)].push_back(inner);
  std::vector<int> chain(static_cast<size_t>(n));
  chain[static_cast<size_t>(n - 1)] = T.full_id();
  std::function<void(int)> rec = [&](int pos) {
    if (pos < 0) {
      budget.charge(1);
      g.flags.push_back(FlagRep{chain});
      return;
    }
    for (int id : below[static_cast<size_t>(chain[static_cast<size_t>(pos + 1)])]) {
      chain[static_cast<size_t>(pos)] = id;
      rec(pos - 1);
    }
  };
  rec(n - 2);
  return g;
}

}  // namespace mirabolic
