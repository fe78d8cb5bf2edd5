#include "mirabolic/schur_action.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mirabolic {

namespace {

// inclusive range sums; empty when lo > hi
int row_sum_range(const DecoratedMatrix& A, int r, int lo, int hi) {
  int s = 0;
  for (int j = std::max(lo, 1); j <= std::min(hi, A.m); ++j) s += A.at(r, j);
  return s;
}

int col_sum_range(const DecoratedMatrix& A, int c, int lo, int hi) {
  int s = 0;
  for (int i = std::max(lo, 1); i <= std::min(hi, A.n); ++i) s += A.at(i, c);
  return s;
}

// 1-based access into the decoration with the standard sentinels:
// rows extend monotonically (i_0 = 0, i_{k+1} = n+1) and columns
// anti-monotonically (j_0 = m+1, j_{k+1} = 0), for any out-of-range index.
struct DeltaView {
  const std::vector<std::pair<int, int>>& d;
  int n, m;

  int k() const { return static_cast<int>(d.size()); }
  int row(int t) const {
    if (t < 1) return 0;
    if (t > k()) return n + 1;
    return d[static_cast<size_t>(t - 1)].first;
  }
  int col(int t) const {
    if (t < 1) return m + 1;
    if (t > k()) return 0;
    return d[static_cast<size_t>(t - 1)].second;
  }
  // 1-based position of the pair whose row (resp. column) matches, else 0
  int pos_of_row(int r) const {
    for (int t = 1; t <= k(); ++t)
      if (row(t) == r) return t;
    return 0;
  }
  int pos_of_col(int c) const {
    for (int t = 1; t <= k(); ++t)
      if (col(t) == c) return t;
    return 0;
  }
};

using Delta = std::vector<std::pair<int, int>>;

Delta delta_replace(const Delta& d, int pos1, std::pair<int, int> cell) {
  Delta out = d;
  out[static_cast<size_t>(pos1 - 1)] = cell;
  return out;
}

Delta delta_erase(const Delta& d, int pos1) {
  Delta out = d;
  out.erase(out.begin() + (pos1 - 1));
  return out;
}

Delta delta_insert_after(const Delta& d, int pos1, std::pair<int, int> cell) {
  Delta out = d;
  out.insert(out.begin() + pos1, cell);
  return out;
}

Delta delta_insert_front(const Delta& d, std::pair<int, int> cell) {
  Delta out = d;
  out.insert(out.begin(), cell);
  return out;
}

DecoratedMatrix moved(const DecoratedMatrix& A, int r_up, int c_up, int r_dn,
                      int c_dn, Delta delta) {
  DecoratedMatrix B = A;
  B.at(r_up, c_up) += 1;
  B.at(r_dn, c_dn) -= 1;
  B.delta = std::move(delta);
  return B;
}

// Accumulates one output term.  Monotonicity failures are transcription bugs
// and throw; a decorated cell landing on a zero entry just means the term
// vanishes (the configuration does not exist), so it is dropped.
void emit(ModuleElement& out, DecoratedMatrix x, const Laurent& c) {
  int pi = 0;
  int pj = x.m + 1;
  for (auto [i, j] : x.delta) {
    if (i < 1 || i > x.n || j < 1 || j > x.m || i <= pi || j >= pj)
      throw MalformedDelta("action produced a non-staircase decoration on " +
                           x.str());
    pi = i;
    pj = j;
  }
  for (auto [i, j] : x.delta)
    if (x.at(i, j) <= 0) return;  // dropped: decorated cell must be positive
  out.add(x, c);
}

Laurent vpow(int e) { return Laurent::monomial(e); }

// ---------------------------------------------------------------- left L ---

void act_left_L(ModuleElement& out, const DecoratedMatrix& A,
                const Laurent& c) {
  const int m = A.m;
  const DeltaView dv{A.delta, A.n, A.m};
  if (dv.k() == 0) {
    const int s = row_sum_range(A, 1, 1, m);
    emit(out, A, c.shifted(-2 * s));
    for (int t = 1; t <= m; ++t) {
      if (A.at(1, t) <= 0) continue;
      DecoratedMatrix B = A;
      B.delta = {{1, t}};
      emit(out, B, c.shifted(-s - row_sum_range(A, 1, t + 1, m)));
    }
    return;
  }
  const int j1 = dv.col(1);
  if (dv.row(1) > 1) {
    // top row undecorated: the existing symbol survives, plus one decoration
    // may be planted on each positive top-row cell right of column j_1
    const Laurent pref = c.shifted(-2 * row_sum_range(A, 1, j1 + 1, m));
    emit(out, A, pref);
    for (int t = j1 + 1; t <= m; ++t) {
      if (A.at(1, t) <= 0) continue;
      DecoratedMatrix B = A;
      B.delta = delta_insert_front(A.delta, {1, t});
      emit(out, B, pref.shifted(row_sum_range(A, 1, j1 + 1, t)));
    }
    return;
  }
  // top row decorated at (1, j_1): the decoration may slide within the top
  // row (right of the next decoration's column) or disappear
  const int j2 = dv.col(2);
  Laurent pref = c.shifted(-2 * row_sum_range(A, 1, j1 + 1, m));
  pref -= pref.shifted(-2 * A.at(1, j1));  // (1 - v^{-2 a_{1,j1}}) factor
  for (int t = j2 + 1; t <= m; ++t) {
    if (A.at(1, t) <= 0) continue;
    DecoratedMatrix B = A;
    B.delta = delta_replace(A.delta, 1, {1, t});
    emit(out, B,
         pref.shifted(-row_sum_range(A, 1, 1, j1) + row_sum_range(A, 1, 1, t)));
  }
  DecoratedMatrix B = A;
  B.delta = delta_erase(A.delta, 1);
  emit(out, B, pref.shifted(-row_sum_range(A, 1, j2 + 1, j1)));
}

// -------------------------------------------------------------- left E/F ---

void act_left_E(ModuleElement& out, const DecoratedMatrix& A, int h,
                const Laurent& c) {
  const int m = A.m;
  const DeltaView dv{A.delta, A.n, A.m};
  const int lh = dv.pos_of_row(h);
  const int lh1 = dv.pos_of_row(h + 1);
  auto up = [&](int p, Delta d) {
    return moved(A, h, p, h + 1, p, std::move(d));
  };
  auto bump = [&](int p) { return gauss_bracket(A.at(h, p) + 1, 1); };

  if (lh == 0 && lh1 == 0) {
    for (int p = 1; p <= m; ++p) {
      if (A.at(h + 1, p) < 1) continue;
      emit(out, up(p, A.delta), (c * bump(p)).shifted(beta(A, h, p)));
    }
    return;
  }

  if (lh != 0 && lh1 == 0) {
    const int jl = dv.col(lh);
    const int jn = dv.col(lh + 1);
    for (int p = 1; p <= m; ++p) {
      if (A.at(h + 1, p) < 1) continue;
      if (p == jl)
        emit(out, up(p, A.delta),
             (c * gauss_bracket(A.at(h, p), 1)).shifted(beta(A, h, p) - 1));
      else if (jn < p && p < jl)
        emit(out, up(p, A.delta), (c * bump(p)).shifted(beta(A, h, p) - 1));
      else
        emit(out, up(p, A.delta), (c * bump(p)).shifted(beta(A, h, p)));
    }
    return;
  }

  if (lh == 0 && lh1 != 0) {
    const int l = lh1;
    const int jl = dv.col(l);
    const int jn = dv.col(l + 1);
    for (int p = 1; p <= m; ++p) {
      if (A.at(h + 1, p) < 1) continue;
      emit(out, up(p, A.delta), (c * bump(p)).shifted(beta(A, h, p)));
    }
    // the decoration at (h+1, j_l) may ride along with the moved unit...
    emit(out, up(jl, delta_replace(A.delta, l, {h, jl})),
         c.shifted(beta(A, h, jl) - row_sum_range(A, h + 1, jn + 1, jl) + 1));
    // ...or split: decoration to row h, a fresh one left behind in row h+1
    for (int t = jn + 1; t < jl; ++t)
      emit(out,
           up(jl, delta_insert_after(delta_replace(A.delta, l, {h, jl}), l,
                                     {h + 1, t})),
           c.shifted(beta(A, h, jl) - row_sum_range(A, h + 1, t + 1, jl) + 1));
    return;
  }

  // both rows decorated; staircase rows are strictly increasing so the two
  // positions must be adjacent
  const int l = lh;
  if (lh1 != lh + 1)
    throw MalformedDelta("rows h,h+1 decorated at non-adjacent positions");
  const int jl = dv.col(l);
  const int jn = dv.col(l + 1);
  const int jnn = dv.col(l + 2);
  for (int p = 1; p <= m; ++p) {
    if (A.at(h + 1, p) < 1) continue;
    if (p == jl)
      emit(out, up(p, A.delta),
           (c * gauss_bracket(A.at(h, p), 1)).shifted(beta(A, h, p) - 1));
    else if (jn < p && p < jl)
      emit(out, up(p, A.delta), (c * bump(p)).shifted(beta(A, h, p) - 1));
    else
      emit(out, up(p, A.delta), (c * bump(p)).shifted(beta(A, h, p)));
  }
  {
    // the row-(h+1) decoration dissolves while its column feeds the move
    const int p = jn;
    Laurent f = (c * bump(p))
                    .shifted(beta(A, h, p) -
                             row_sum_range(A, h + 1, jnn + 1, p) + 1);
    f -= f.shifted(-2);
    emit(out, up(p, delta_erase(A.delta, l + 1)), f);
    for (int t = jnn + 1; t < jn; ++t) {
      Laurent g =
          (c * bump(p))
              .shifted(beta(A, h, p) - row_sum_range(A, h + 1, t + 1, p) + 1);
      g -= g.shifted(-2);
      emit(out, up(p, delta_replace(A.delta, l + 1, {h + 1, t})), g);
    }
  }
}

void act_left_F(ModuleElement& out, const DecoratedMatrix& A, int h,
                const Laurent& c) {
  const int m = A.m;
  const DeltaView dv{A.delta, A.n, A.m};
  const int lh = dv.pos_of_row(h);
  const int lh1 = dv.pos_of_row(h + 1);
  auto down = [&](int p, Delta d) {
    return moved(A, h + 1, p, h, p, std::move(d));
  };
  auto bump = [&](int p) { return gauss_bracket(A.at(h + 1, p) + 1, 1); };

  if (lh == 0 && lh1 == 0) {
    for (int p = 1; p <= m; ++p) {
      if (A.at(h, p) < 1) continue;
      emit(out, down(p, A.delta), (c * bump(p)).shifted(beta_prime(A, h, p)));
    }
    return;
  }

  if (lh != 0 && lh1 == 0) {
    const int l = lh;
    const int jl = dv.col(l);
    const int jn = dv.col(l + 1);
    for (int p = 1; p <= m; ++p) {
      if (A.at(h, p) < 1) continue;
      if (jn < p && p <= jl)
        emit(out, down(p, A.delta),
             (c * bump(p)).shifted(beta_prime(A, h, p) - 1));
      else
        emit(out, down(p, A.delta),
             (c * bump(p)).shifted(beta_prime(A, h, p)));
    }
    // the decoration follows the moved unit down to row h+1...
    if (A.at(h, jl) >= 1)
      emit(out, down(jl, delta_replace(A.delta, l, {h + 1, jl})),
           c.shifted(row_sum_range(A, h + 1, 1, jn) -
                     row_sum_range(A, h, 1, jl - 1)));
    // ...or stays while a fresh decoration lands on the moved unit
    for (int t = jn + 1; t < jl; ++t) {
      if (A.at(h, t) < 1) continue;
      emit(out, down(t, delta_insert_after(A.delta, l, {h + 1, t})),
           c.shifted(row_sum_range(A, h + 1, 1, jn) -
                     row_sum_range(A, h, 1, t - 1)));
    }
    return;
  }

  if (lh == 0 && lh1 != 0) {
    const int jl = dv.col(lh1);
    for (int p = 1; p <= m; ++p) {
      if (A.at(h, p) < 1) continue;
      if (p == jl)
        emit(out, down(p, A.delta),
             (c * gauss_bracket(A.at(h + 1, p), 1))
                 .shifted(beta_prime(A, h, p)));
      else
        emit(out, down(p, A.delta),
             (c * bump(p)).shifted(beta_prime(A, h, p)));
    }
    return;
  }

  const int l = lh;
  if (lh1 != lh + 1)
    throw MalformedDelta("rows h,h+1 decorated at non-adjacent positions");
  const int jl = dv.col(l);
  const int jn = dv.col(l + 1);
  for (int p = 1; p <= m; ++p) {
    if (A.at(h, p) < 1) continue;
    if (p == jn)
      emit(out, down(p, A.delta),
           (c * gauss_bracket(A.at(h + 1, p), 1))
               .shifted(beta_prime(A, h, p)));
    else if (jn < p && p <= jl)
      emit(out, down(p, A.delta),
           (c * bump(p)).shifted(beta_prime(A, h, p) - 1));
    else
      emit(out, down(p, A.delta), (c * bump(p)).shifted(beta_prime(A, h, p)));
  }
  {
    // the two decorations merge onto the moved unit in row h+1...
    Laurent f = (c * gauss_bracket(A.at(h + 1, jn), 1))
                    .shifted(beta_prime(A, h, jn) -
                             row_sum_range(A, h, jn, jl - 1));
    f -= f.shifted(-2);
    if (A.at(h, jl) >= 1) {
      Delta d = delta_erase(A.delta, l);
      d = delta_replace(d, l, {h + 1, jl});
      emit(out, down(jl, d), f);
    }
    // ...or the row-h decoration stays and the row-(h+1) one re-seats
    for (int t = jn + 1; t < jl; ++t) {
      if (A.at(h, t) < 1) continue;
      Laurent g = (c * gauss_bracket(A.at(h + 1, jn), 1))
                      .shifted(beta_prime(A, h, jn) -
                               row_sum_range(A, h, jn, t - 1));
      g -= g.shifted(-2);
      emit(out, down(t, delta_replace(A.delta, l + 1, {h + 1, t})), g);
    }
  }
}

// --------------------------------------------------------------- right L ---

void act_right_L(ModuleElement& out, const DecoratedMatrix& A,
                 const Laurent& c) {
  const int n = A.n;
  const DeltaView dv{A.delta, A.n, A.m};
  const int k = dv.k();
  if (k == 0) {
    const int s = col_sum_range(A, 1, 1, n);
    emit(out, A, c.shifted(-2 * s));
    for (int t = 1; t <= n; ++t) {
      if (A.at(t, 1) <= 0) continue;
      DecoratedMatrix B = A;
      B.delta = {{t, 1}};
      emit(out, B, c.shifted(-s - col_sum_range(A, 1, t + 1, n)));
    }
    return;
  }
  const int ik = dv.row(k);
  if (dv.col(k) > 1) {
    const Laurent pref = c.shifted(-2 * col_sum_range(A, 1, ik + 1, n));
    emit(out, A, pref);
    for (int t = ik + 1; t <= n; ++t) {
      if (A.at(t, 1) <= 0) continue;
      DecoratedMatrix B = A;
      B.delta = delta_insert_after(A.delta, k, {t, 1});
      emit(out, B, pref.shifted(col_sum_range(A, 1, ik + 1, t)));
    }
    return;
  }
  const int ikm = dv.row(k - 1);
  Laurent pref = c.shifted(-2 * col_sum_range(A, 1, ik + 1, n));
  pref -= pref.shifted(-2 * A.at(ik, 1));
  for (int t = ikm + 1; t <= n; ++t) {
    if (A.at(t, 1) <= 0) continue;
    DecoratedMatrix B = A;
    B.delta = delta_replace(A.delta, k, {t, 1});
    emit(out, B,
         pref.shifted(-col_sum_range(A, 1, 1, ik) + col_sum_range(A, 1, 1, t)));
  }
  DecoratedMatrix B = A;
  B.delta = delta_erase(A.delta, k);
  emit(out, B, pref.shifted(-col_sum_range(A, 1, ikm + 1, ik)));
}

// ------------------------------------------------------------- right E/F ---

void act_right_E(ModuleElement& out, const DecoratedMatrix& A, int h,
                 const Laurent& c) {
  const int n = A.n;
  const DeltaView dv{A.delta, A.n, A.m};
  const int lh = dv.pos_of_col(h);
  const int lh1 = dv.pos_of_col(h + 1);
  auto right = [&](int p, Delta d) {
    return moved(A, p, h + 1, p, h, std::move(d));
  };
  auto bump = [&](int p) { return gauss_bracket(A.at(p, h + 1) + 1, 1); };

  if (lh == 0 && lh1 == 0) {
    for (int p = 1; p <= n; ++p) {
      if (A.at(p, h) < 1) continue;
      emit(out, right(p, A.delta), (c * bump(p)).shifted(xi(A, h, p)));
    }
    return;
  }

  if (lh != 0 && lh1 == 0) {
    const int l = lh;
    const int il = dv.row(l);
    const int ip = dv.row(l - 1);
    for (int p = 1; p <= n; ++p) {
      if (A.at(p, h) < 1) continue;
      if (ip < p && p <= il)
        emit(out, right(p, A.delta), (c * bump(p)).shifted(xi(A, h, p) - 1));
      else
        emit(out, right(p, A.delta), (c * bump(p)).shifted(xi(A, h, p)));
    }
    if (A.at(il, h) >= 1)
      emit(out, right(il, delta_replace(A.delta, l, {il, h + 1})),
           c.shifted(col_sum_range(A, h + 1, 1, ip) -
                     col_sum_range(A, h, 1, il - 1)));
    for (int s = ip + 1; s < il; ++s) {
      if (A.at(s, h) < 1) continue;
      emit(out,
           right(s, delta_insert_after(A.delta, l - 1, {s, h + 1})),
           c.shifted(col_sum_range(A, h + 1, 1, ip) -
                     col_sum_range(A, h, 1, s - 1)));
    }
    return;
  }

  if (lh == 0 && lh1 != 0) {
    const int il = dv.row(lh1);
    for (int p = 1; p <= n; ++p) {
      if (A.at(p, h) < 1) continue;
      if (p == il)
        emit(out, right(p, A.delta),
             (c * gauss_bracket(A.at(p, h + 1), 1)).shifted(xi(A, h, p)));
      else
        emit(out, right(p, A.delta), (c * bump(p)).shifted(xi(A, h, p)));
    }
    return;
  }

  // both columns decorated: column h sits at position l, column h+1 at l-1
  const int l = lh;
  if (lh1 != lh - 1)
    throw MalformedDelta("cols h,h+1 decorated at non-adjacent positions");
  const int il = dv.row(l);
  const int ip = dv.row(l - 1);
  for (int p = 1; p <= n; ++p) {
    if (A.at(p, h) < 1) continue;
    if (p == ip)
      emit(out, right(p, A.delta),
           (c * gauss_bracket(A.at(p, h + 1), 1)).shifted(xi(A, h, p)));
    else if (ip < p && p <= il)
      emit(out, right(p, A.delta), (c * bump(p)).shifted(xi(A, h, p) - 1));
    else
      emit(out, right(p, A.delta), (c * bump(p)).shifted(xi(A, h, p)));
  }
  {
    Laurent f = (c * gauss_bracket(A.at(ip, h + 1), 1))
                    .shifted(xi(A, h, ip) - col_sum_range(A, h, ip, il - 1));
    f -= f.shifted(-2);
    if (A.at(il, h) >= 1) {
      Delta d = delta_erase(A.delta, l - 1);
      d = delta_replace(d, l - 1, {il, h + 1});
      emit(out, right(il, d), f);
    }
    for (int s = ip + 1; s < il; ++s) {
      if (A.at(s, h) < 1) continue;
      Laurent g = (c * gauss_bracket(A.at(ip, h + 1), 1))
                      .shifted(xi(A, h, ip) - col_sum_range(A, h, ip, s - 1));
      g -= g.shifted(-2);
      emit(out, right(s, delta_replace(A.delta, l - 1, {s, h + 1})), g);
    }
  }
}

void act_right_F(ModuleElement& out, const DecoratedMatrix& A, int h,
                 const Laurent& c) {
  const int n = A.n;
  const DeltaView dv{A.delta, A.n, A.m};
  const int lh = dv.pos_of_col(h);
  const int lh1 = dv.pos_of_col(h + 1);
  auto left = [&](int p, Delta d) {
    return moved(A, p, h, p, h + 1, std::move(d));
  };
  auto bump = [&](int p) { return gauss_bracket(A.at(p, h) + 1, 1); };

  if (lh == 0 && lh1 == 0) {
    for (int p = 1; p <= n; ++p) {
      if (A.at(p, h + 1) < 1) continue;
      emit(out, left(p, A.delta), (c * bump(p)).shifted(xi_prime(A, h, p)));
    }
    return;
  }

  if (lh != 0 && lh1 == 0) {
    const int l = lh;
    const int il = dv.row(l);
    const int ip = dv.row(l - 1);
    for (int p = 1; p <= n; ++p) {
      if (A.at(p, h + 1) < 1) continue;
      if (p == il)
        emit(out, left(p, A.delta),
             (c * gauss_bracket(A.at(p, h), 1)).shifted(xi_prime(A, h, p) - 1));
      else if (ip < p && p < il)
        emit(out, left(p, A.delta),
             (c * bump(p)).shifted(xi_prime(A, h, p) - 1));
      else
        emit(out, left(p, A.delta), (c * bump(p)).shifted(xi_prime(A, h, p)));
    }
    return;
  }

  if (lh == 0 && lh1 != 0) {
    const int l = lh1;
    const int il = dv.row(l);
    const int ip = dv.row(l - 1);
    for (int p = 1; p <= n; ++p) {
      if (A.at(p, h + 1) < 1) continue;
      emit(out, left(p, A.delta), (c * bump(p)).shifted(xi_prime(A, h, p)));
    }
    emit(out, left(il, delta_replace(A.delta, l, {il, h})),
         c.shifted(xi_prime(A, h, il) -
                   col_sum_range(A, h + 1, ip + 1, il) + 1));
    for (int s = ip + 1; s < il; ++s)
      emit(out,
           left(il, delta_insert_after(delta_replace(A.delta, l, {il, h}),
                                       l - 1, {s, h + 1})),
           c.shifted(xi_prime(A, h, il) -
                     col_sum_range(A, h + 1, s + 1, il) + 1));
    return;
  }

  const int l = lh;
  if (lh1 != lh - 1)
    throw MalformedDelta("cols h,h+1 decorated at non-adjacent positions");
  const int il = dv.row(l);
  const int ip = dv.row(l - 1);
  const int ipp = dv.row(l - 2);
  for (int p = 1; p <= n; ++p) {
    if (A.at(p, h + 1) < 1) continue;
    if (p == il)
      emit(out, left(p, A.delta),
           (c * gauss_bracket(A.at(p, h), 1)).shifted(xi_prime(A, h, p) - 1));
    else if (ip < p && p < il)
      emit(out, left(p, A.delta),
           (c * bump(p)).shifted(xi_prime(A, h, p) - 1));
    else
      emit(out, left(p, A.delta), (c * bump(p)).shifted(xi_prime(A, h, p)));
  }
  {
    const int p = ip;
    Laurent f =
        (c * bump(p))
            .shifted(xi_prime(A, h, p) -
                     col_sum_range(A, h + 1, ipp + 1, p) + 1);
    f -= f.shifted(-2);
    emit(out, left(p, delta_erase(A.delta, l - 1)), f);
    for (int s = ipp + 1; s < ip; ++s) {
      Laurent g = (c * bump(p))
                      .shifted(xi_prime(A, h, p) -
                               col_sum_range(A, h + 1, s + 1, p) + 1);
      g -= g.shifted(-2);
      emit(out, left(p, delta_replace(A.delta, l - 1, {s, h + 1})), g);
    }
  }
}

void check_token(const GeneratorToken& t, int size) { t.validate(size); }

}  // namespace

const char* action_case_name(ActionCase c) {
  switch (c) {
    case ActionCase::diagonal: return "diagonal";
    case ActionCase::vector_plain: return "vector_plain";
    case ActionCase::vector_free: return "vector_free";
    case ActionCase::vector_pinned: return "vector_pinned";
    case ActionCase::move_free: return "move_free";
    case ActionCase::move_first: return "move_first";
    case ActionCase::move_second: return "move_second";
    case ActionCase::move_both: return "move_both";
  }
  return "?";
}

int beta(const DecoratedMatrix& A, int h, int p) {
  return row_sum_range(A, h, p, A.m) - row_sum_range(A, h + 1, p + 1, A.m);
}

int beta_prime(const DecoratedMatrix& A, int h, int p) {
  return row_sum_range(A, h + 1, 1, p) - row_sum_range(A, h, 1, p - 1);
}

int xi(const DecoratedMatrix& A, int h, int p) {
  return col_sum_range(A, h + 1, 1, p) - col_sum_range(A, h, 1, p - 1);
}

int xi_prime(const DecoratedMatrix& A, int h, int p) {
  return col_sum_range(A, h, p, A.n) - col_sum_range(A, h + 1, p + 1, A.n);
}

ActionCase left_case(const GeneratorToken& t, const DecoratedMatrix& x) {
  const DeltaView dv{x.delta, x.n, x.m};
  switch (t.kind) {
    case TokenKind::Hplus:
    case TokenKind::Hminus:
      return ActionCase::diagonal;
    case TokenKind::L:
      if (dv.k() == 0) return ActionCase::vector_plain;
      return dv.row(1) > 1 ? ActionCase::vector_free
                           : ActionCase::vector_pinned;
    case TokenKind::E:
    case TokenKind::F: {
      const bool a = dv.pos_of_row(t.index) != 0;
      const bool b = dv.pos_of_row(t.index + 1) != 0;
      if (a && b) return ActionCase::move_both;
      if (a) return ActionCase::move_first;
      if (b) return ActionCase::move_second;
      return ActionCase::move_free;
    }
  }
  throw std::logic_error("unreachable token kind");
}

ActionCase right_case(const GeneratorToken& t, const DecoratedMatrix& x) {
  const DeltaView dv{x.delta, x.n, x.m};
  switch (t.kind) {
    case TokenKind::Hplus:
    case TokenKind::Hminus:
      return ActionCase::diagonal;
    case TokenKind::L:
      if (dv.k() == 0) return ActionCase::vector_plain;
      return dv.col(dv.k()) > 1 ? ActionCase::vector_free
                                : ActionCase::vector_pinned;
    case TokenKind::E:
    case TokenKind::F: {
      const bool a = dv.pos_of_col(t.index) != 0;
      const bool b = dv.pos_of_col(t.index + 1) != 0;
      if (a && b) return ActionCase::move_both;
      if (a) return ActionCase::move_first;
      if (b) return ActionCase::move_second;
      return ActionCase::move_free;
    }
  }
  throw std::logic_error("unreachable token kind");
}

ModuleElement act_left_basis(const GeneratorToken& t, Context ctx,
                             const DecoratedMatrix& x) {
  check_token(t, ctx.n);
  x.validate();
  if (x.n != ctx.n || x.m != ctx.m || x.total() != ctx.d)
    throw DimensionMismatch("basis symbol does not live in " + ctx.str());
  ModuleElement out(ctx);
  const Laurent one = Laurent::one();
  switch (t.kind) {
    case TokenKind::Hplus:
      emit(out, x, vpow(-row_sum_range(x, t.index, 1, x.m)));
      break;
    case TokenKind::Hminus:
      emit(out, x, vpow(row_sum_range(x, t.index, 1, x.m)));
      break;
    case TokenKind::L:
      act_left_L(out, x, one);
      break;
    case TokenKind::E:
      act_left_E(out, x, t.index, one);
      break;
    case TokenKind::F:
      act_left_F(out, x, t.index, one);
      break;
  }
  return out;
}

ModuleElement act_left(const GeneratorToken& t, const ModuleElement& x) {
  ModuleElement out(x.context());
  for (const auto& [key, c] : x.terms()) {
    ModuleElement part = act_left_basis(t, x.context(), key);
    for (const auto& [k2, c2] : part.terms()) out.add(k2, c * c2);
  }
  return out;
}

ModuleElement act_right_basis(Context ctx, const DecoratedMatrix& x,
                              const GeneratorToken& t) {
  check_token(t, ctx.m);
  x.validate();
  if (x.n != ctx.n || x.m != ctx.m || x.total() != ctx.d)
    throw DimensionMismatch("basis symbol does not live in " + ctx.str());
  ModuleElement out(ctx);
  const Laurent one = Laurent::one();
  switch (t.kind) {
    case TokenKind::Hplus:
      emit(out, x, vpow(-col_sum_range(x, t.index, 1, x.n)));
      break;
    case TokenKind::Hminus:
      emit(out, x, vpow(col_sum_range(x, t.index, 1, x.n)));
      break;
    case TokenKind::L:
      act_right_L(out, x, one);
      break;
    case TokenKind::E:
      act_right_E(out, x, t.index, one);
      break;
    case TokenKind::F:
      act_right_F(out, x, t.index, one);
      break;
  }
  return out;
}

ModuleElement act_right(const ModuleElement& x, const GeneratorToken& t) {
  ModuleElement out(x.context());
  for (const auto& [key, c] : x.terms()) {
    ModuleElement part = act_right_basis(x.context(), key, t);
    for (const auto& [k2, c2] : part.terms()) out.add(k2, c * c2);
  }
  return out;
}

GeneratorToken mirror_token(const GeneratorToken& t) {
  switch (t.kind) {
    case TokenKind::E: return GeneratorToken::f(t.index);
    case TokenKind::F: return GeneratorToken::e(t.index);
    default: return t;
  }
}

ModuleElement act_right_by_transpose(const ModuleElement& x,
                                     const GeneratorToken& t,
                                     WeightConvention conv) {
  const Context ctx = x.context();
  check_token(t, ctx.m);
  const Context tctx{ctx.m, ctx.n, ctx.d};
  const GeneratorToken mt = mirror_token(t);
  ModuleElement out(ctx);
  for (const auto& [key, c] : x.terms()) {
    const DecoratedMatrix xt = key.transposed();
    ModuleElement y = act_left_basis(mt, tctx, xt);
    if (y.is_zero()) continue;
    // weight of the unique compatible generator matrix minus that of its
    // transpose (zero for the diagonal-type tokens)
    int phi = 0;
    if (t.kind == TokenKind::E || t.kind == TokenKind::F) {
      const std::vector<int> co = key.col_sums();
      DecoratedMatrix G;
      G.n = G.m = ctx.m;
      G.a.assign(static_cast<size_t>(ctx.m * ctx.m), 0);
      for (int j = 1; j <= ctx.m; ++j) G.at(j, j) = co[static_cast<size_t>(j - 1)];
      if (t.kind == TokenKind::E) {
        G.at(t.index, t.index) -= 1;
        G.at(t.index + 1, t.index) += 1;
      } else {
        G.at(t.index + 1, t.index + 1) -= 1;
        G.at(t.index, t.index + 1) += 1;
      }
      phi = weight_exponent(G.transposed(), conv) - weight_exponent(G, conv);
    }
    const int base =
        weight_exponent(key, conv) - weight_exponent(xt, conv) + phi;
    for (const auto& [z, cz] : y.terms()) {
      const DecoratedMatrix zt = z.transposed();
      const int e =
          base + weight_exponent(z, conv) - weight_exponent(zt, conv);
      out.add(zt, (c * cz).shifted(e));
    }
  }
  return out;
}

std::vector<std::string> printed_right_corrections() {
  return {
      "decorated-column move with only column h+1 decorated (F): the "
      "decoration-transfer exponent reads the upward column statistic "
      "xi'(i_l), not xi(i_l)",
      "adjacent decorated columns (E): the split-term exponent is anchored at "
      "the row index i_{l-1} of the column-(h+1) decoration, not at its "
      "column index",
      "adjacent decorated columns (F): the merge term at p = i_l uses "
      "xi'(p)-1, not xi(p)-1",
      "adjacent decorated columns (F): the re-seating sum uses xi'(i_{l-1}) "
      "with trailing +1, not xi(i_{l-1}) with trailing -1",
      "first-column vector terms: two summation ranges are typeset with "
      "stray bounds; they run over i_k < i <= t and i_{k-1} < i <= i_k",
  };
}

ModuleElement act_word(const std::vector<SidedToken>& word, ModuleElement x) {
  for (const auto& st : word)
    x = st.left ? act_left(st.token, x) : act_right(x, st.token);
  return x;
}

namespace {

// all ways to write `total` as an ordered sum of `parts` nonnegative ints
void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    fn(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(total - v, parts, cur, fn);
    cur.pop_back();
  }
}

DecoratedMatrix diag_matrix(const std::vector<int>& d) {
  DecoratedMatrix x;
  x.n = x.m = static_cast<int>(d.size());
  x.a.assign(d.size() * d.size(), 0);
  for (int i = 1; i <= x.n; ++i) x.at(i, i) = d[static_cast<size_t>(i - 1)];
  return x;
}

}  // namespace

ModuleElement generator_element(const GeneratorToken& t, int size, int d) {
  check_token(t, size);
  if (size < 1 || d < 0) throw std::invalid_argument("bad algebra shape");
  const Context ctx{size, size, d};
  ModuleElement out(ctx);
  std::vector<int> cur;
  auto add_diag_based = [&](const std::function<void(DecoratedMatrix)>& fn,
                            int total) {
    if (total < 0) return;
    compositions(total, size, cur,
                 [&](const std::vector<int>& comp) { fn(diag_matrix(comp)); });
  };
  switch (t.kind) {
    case TokenKind::E:
      add_diag_based(
          [&](DecoratedMatrix x) {
            x.at(t.index, t.index + 1) += 1;
            out.add(x, Laurent::one());
          },
          d - 1);
      break;
    case TokenKind::F:
      add_diag_based(
          [&](DecoratedMatrix x) {
            x.at(t.index + 1, t.index) += 1;
            out.add(x, Laurent::one());
          },
          d - 1);
      break;
    case TokenKind::Hplus:
      add_diag_based(
          [&](DecoratedMatrix x) {
            out.add(x, vpow(-x.at(t.index, t.index)));
          },
          d);
      break;
    case TokenKind::Hminus:
      add_diag_based(
          [&](DecoratedMatrix x) {
            out.add(x, vpow(x.at(t.index, t.index)));
          },
          d);
      break;
    case TokenKind::L:
      add_diag_based(
          [&](DecoratedMatrix x) {
            out.add(x, vpow(-2 * x.at(1, 1)));
            if (x.at(1, 1) > 0) {
              DecoratedMatrix y = x;
              y.delta = {{1, 1}};
              out.add(y, vpow(-x.at(1, 1)));
            }
          },
          d);
      break;
  }
  return out;
}

}  // namespace mirabolic
