#include "mirabolic/oracle.hpp"

#include <algorithm>

namespace mirabolic {

namespace {

// profile c_1 >= ... >= c_n describing the lower set {(i,j) : j <= c_i};
// W(c) = sum over i of V_i meet V'_{c_i}
int profile_span(const SubspaceTable& T, const FlagRep& f, const FlagRep& fp,
                 const std::vector<int>& c) {
  int acc = T.zero_id();
  const int n = static_cast<int>(f.steps.size());
  for (int i = 1; i <= n; ++i) {
    const int ci = c[static_cast<size_t>(i - 1)];
    if (ci == 0) continue;
    const int piece = T.intersect(f.steps[static_cast<size_t>(i - 1)],
                                  fp.steps[static_cast<size_t>(ci - 1)]);
    acc = T.sum(acc, piece);
  }
  return acc;
}

}  // namespace

DecoratedMatrix classify_triple(const SubspaceTable& T, const FlagRep& f,
                                const FlagRep& fp, int wcode) {
  const int n = static_cast<int>(f.steps.size());
  const int m = static_cast<int>(fp.steps.size());
  // r(i,j) = dim(V_i meet V'_j), with the zero space at index 0
  std::vector<std::vector<int>> r(static_cast<size_t>(n + 1),
                                  std::vector<int>(static_cast<size_t>(m + 1), 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      r[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          T.dim(T.intersect(f.steps[static_cast<size_t>(i - 1)],
                            fp.steps[static_cast<size_t>(j - 1)]));
  DecoratedMatrix x(n, m);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      x.at(i, j) = r[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                   r[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] -
                   r[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] +
                   r[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  // shrink the full lower set: repeatedly delete a maximal cell (a corner of
  // the profile) as long as w stays inside the spanned piece
  std::vector<int> c(static_cast<size_t>(n), m);
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int i = 1; i <= n; ++i) {
      const int ci = c[static_cast<size_t>(i - 1)];
      const int next = i < n ? c[static_cast<size_t>(i)] : 0;
      if (ci == 0 || ci == next) continue;  // not a corner
      std::vector<int> cc = c;
      cc[static_cast<size_t>(i - 1)] -= 1;
      if (T.member(profile_span(T, f, fp, cc), wcode)) {
        c = cc;
        shrunk = true;
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    const int ci = c[static_cast<size_t>(i - 1)];
    const int next = i < n ? c[static_cast<size_t>(i)] : 0;
    if (ci > next) x.delta.emplace_back(i, ci);
  }
  x.validate();  // positivity on corners is forced; anything else is a bug
  return x;
}

OrbitTable build_orbit_table(Context ctx, int q, WorkBudget& budget,
                             std::shared_ptr<SubspaceTable> table) {
  OrbitTable t;
  t.ctx = ctx;
  t.q = q;
  t.left = enumerate_flags(ctx.d, q, ctx.n, budget, std::move(table));
  t.right = enumerate_flags(ctx.d, q, ctx.m, budget, t.left.table);
  const int codes = t.left.table->codes();
  const size_t nx = t.left.flags.size();
  const size_t ny = t.right.flags.size();
  budget.charge(Int(nx) * Int(ny) * codes);
  t.cls.assign(nx * ny * static_cast<size_t>(codes), -1);
  const SubspaceTable& T = *t.left.table;
  for (size_t fx = 0; fx < nx; ++fx)
    for (size_t fy = 0; fy < ny; ++fy) {
      for (int w = 0; w < codes; ++w) {
        DecoratedMatrix key = classify_triple(T, t.left.flags[fx],
                                              t.right.flags[fy], w);
        auto [it, fresh] = t.id_of.try_emplace(
            std::move(key), static_cast<int>(t.keys.size()));
        if (fresh) {
          t.keys.push_back(it->first);
          t.sizes.push_back(0);
          t.reps.push_back({static_cast<int>(fx), static_cast<int>(fy), w});
        }
        t.sizes[static_cast<size_t>(it->second)] += 1;
        t.cls[(fx * ny + fy) * static_cast<size_t>(codes) +
              static_cast<size_t>(w)] = it->second;
      }
    }
  return t;
}

namespace {

void check_shape(const DecoratedMatrix& x, int n, int m, int d,
                 const char* what) {
  if (x.n != n || x.m != m || x.total() != d)
    throw DimensionMismatch(std::string(what) +
                            " has incompatible shape or degree");
  x.validate();
}

}  // namespace

Int oracle_convolution_constant(const DecoratedMatrix& x,
                                const DecoratedMatrix& y,
                                const DecoratedMatrix& z, int q,
                                WorkBudget& budget) {
  const int n = x.n, k = x.m, m = y.m, d = x.total();
  check_shape(y, k, m, d, "middle factor");
  check_shape(z, n, m, d, "target orbit");
  auto table = std::make_shared<SubspaceTable>(d, q);
  OrbitTable tz = build_orbit_table({n, m, d}, q, budget, table);
  auto itz = tz.id_of.find(z);
  if (itz == tz.id_of.end())
    throw std::logic_error("target orbit missing from classification");
  OrbitTable tx = build_orbit_table({n, k, d}, q, budget, table);
  OrbitTable ty = build_orbit_table({k, m, d}, q, budget, table);
  const auto xid = tx.id_of.find(x);
  const auto yid = ty.id_of.find(y);
  if (xid == tx.id_of.end() || yid == ty.id_of.end()) return 0;
  const OrbitTable::Rep rep = tz.reps[static_cast<size_t>(itz->second)];
  const int codes = table->codes();
  budget.charge(Int(tx.right.flags.size()) * codes);
  Int count = 0;
  for (size_t fm = 0; fm < tx.right.flags.size(); ++fm)
    for (int w = 0; w < codes; ++w) {
      if (tx.at(rep.fx, static_cast<int>(fm), w) != xid->second) continue;
      const int w2 = code_sub(rep.w, w, d, q);
      if (ty.at(static_cast<int>(fm), rep.fy, w2) == yid->second) count += 1;
    }
  return count;
}

std::map<std::pair<int, int>, Int> convolution_profile(const OrbitTable& alg,
                                                       const OrbitTable& mod,
                                                       int target_orbit,
                                                       bool left_side,
                                                       WorkBudget& budget) {
  if (alg.q != mod.q || alg.ctx.d != mod.ctx.d)
    throw DimensionMismatch("mixed q or degree in convolution");
  if (left_side) {
    if (alg.ctx.n != mod.ctx.n || alg.ctx.m != mod.ctx.n)
      throw DimensionMismatch("left algebra acts through n-step flags");
  } else {
    if (alg.ctx.n != mod.ctx.m || alg.ctx.m != mod.ctx.m)
      throw DimensionMismatch("right algebra acts through m-step flags");
  }
  const OrbitTable::Rep rep = mod.reps[static_cast<size_t>(target_orbit)];
  const int d = mod.ctx.d;
  const int q = mod.q;
  const int codes = mod.codes();
  const size_t middle =
      left_side ? mod.left.flags.size() : mod.right.flags.size();
  budget.charge(Int(middle) * codes);
  std::map<std::pair<int, int>, Int> out;
  for (size_t fm = 0; fm < middle; ++fm)
    for (int w = 0; w < codes; ++w) {
      const int w2 = code_sub(rep.w, w, d, q);
      int b, z;
      if (left_side) {
        b = alg.at(rep.fx, static_cast<int>(fm), w);
        z = mod.at(static_cast<int>(fm), rep.fy, w2);
      } else {
        b = alg.at(static_cast<int>(fm), rep.fy, w);
        z = mod.at(rep.fx, static_cast<int>(fm), w2);
      }
      out[{b, z}] += 1;
    }
  return out;
}

std::map<int, Laurent> generator_e_coefficients(const OrbitTable& alg,
                                                const GeneratorToken& t,
                                                WeightConvention conv) {
  if (alg.ctx.n != alg.ctx.m)
    throw DimensionMismatch("generator lives in a square-shape algebra");
  ModuleElement g = generator_element(t, alg.ctx.n, alg.ctx.d);
  std::map<int, Laurent> out;
  for (const auto& [key, c] : g.terms()) {
    auto it = alg.id_of.find(key);
    if (it == alg.id_of.end())
      throw std::logic_error("generator term missing from orbit table");
    out[it->second] = c.shifted(weight_exponent(key, conv));
  }
  return out;
}

std::map<DecoratedMatrix, SpecializedValue> oracle_generator_action(
    const OrbitTable& alg, const OrbitTable& mod, const GeneratorToken& t,
    const DecoratedMatrix& z, bool left_side, WeightConvention conv,
    WorkBudget& budget) {
  auto zid = mod.id_of.find(z);
  if (zid == mod.id_of.end())
    throw DimensionMismatch("input orbit missing from classification");
  const std::map<int, Laurent> gen = generator_e_coefficients(alg, t, conv);
  std::map<DecoratedMatrix, SpecializedValue> out;
  for (int zp = 0; zp < mod.orbit_count(); ++zp) {
    const auto profile = convolution_profile(alg, mod, zp, left_side, budget);
    SpecializedValue val = specialized_zero(mod.q);
    for (const auto& [bz, count] : profile) {
      if (bz.second != zid->second) continue;
      auto it = gen.find(bz.first);
      if (it == gen.end()) continue;
      val += specialize_v2(it->second, mod.q).scaled(Rational(count));
    }
    if (!val.is_zero()) out.emplace(mod.keys[static_cast<size_t>(zp)], val);
  }
  return out;
}

std::map<DecoratedMatrix, SpecializedValue> oracle_generator_action(
    const GeneratorToken& t, const DecoratedMatrix& z, int q, bool left_side,
    WeightConvention conv, WorkBudget& budget) {
  z.validate();
  const Context ctx{z.n, z.m, z.total()};
  auto table = std::make_shared<SubspaceTable>(ctx.d, q);
  OrbitTable mod = build_orbit_table(ctx, q, budget, table);
  const int side = left_side ? ctx.n : ctx.m;
  OrbitTable alg = build_orbit_table({side, side, ctx.d}, q, budget, table);
  return oracle_generator_action(alg, mod, t, z, left_side, conv, budget);
}

}  // namespace mirabolic
