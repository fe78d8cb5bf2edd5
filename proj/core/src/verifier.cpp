#include "mirabolic/verifier.hpp"

#include <chrono>
#include <sstream>

namespace mirabolic {

namespace {

std::string residual_detail(const OperatorMatrix& r, const BasisIndex& basis) {
  auto fn = r.first_nonzero();
  if (!fn) return "";
  auto [row, col, c] = *fn;
  std::ostringstream os;
  os << "residual (" << c.str() << ") at output " << basis.keys[row].str()
     << " from input " << basis.keys[col].str();
  return os.str();
}

// shared machinery for relation instances on one module side
struct RelationChecker {
  const BasisIndex& basis;
  Context ctx;
  bool left_side;
  std::vector<RelationReport>& out;
  std::map<std::string, OperatorMatrix> cache;

  const OperatorMatrix& tok(const GeneratorToken& t) {
    auto it = cache.find(t.str());
    if (it == cache.end())
      it = cache.emplace(t.str(), token_matrix(basis, t, left_side)).first;
    return it->second;
  }

  // right words multiply in reverse (anti-homomorphism)
  OperatorMatrix word(std::initializer_list<GeneratorToken> w) {
    OperatorMatrix acc = OperatorMatrix::identity(basis.size());
    if (left_side) {
      for (const auto& t : w) acc = acc * tok(t);
    } else {
      for (auto it = std::rbegin(w); it != std::rend(w); ++it)
        acc = acc * tok(*it);
    }
    return acc;
  }

  void check(const std::string& id, const OperatorMatrix& residual) {
    RelationReport r;
    r.id = id;
    r.ctx = ctx;
    r.left_side = left_side;
    r.passed = residual.is_zero();
    if (!r.passed) r.detail = residual_detail(residual, basis);
    out.push_back(std::move(r));
  }

  void fail(const std::string& id, const std::string& why) {
    out.push_back(RelationReport{id, ctx, left_side, false, why});
  }
};

std::string tag1(const char* name, int a) {
  std::ostringstream os;
  os << name << "[" << a << "]";
  return os.str();
}

std::string tag2(const char* name, int a, int b) {
  std::ostringstream os;
  os << name << "[" << a << "," << b << "]";
  return os.str();
}

}  // namespace

std::vector<RelationReport> verify_presentation(Context ctx, bool left_side) {
  const BasisIndex basis = BasisIndex::make(ctx);
  const int s = left_side ? ctx.n : ctx.m;
  std::vector<RelationReport> out;
  RelationChecker ck{basis, ctx, left_side, out, {}};

  const OperatorMatrix I = OperatorMatrix::identity(basis.size());
  const Laurent v = Laurent::monomial(1);
  const Laurent vinv = Laurent::monomial(-1);
  const Laurent comm_denom = v - vinv;
  const Laurent serre_coeff = v + vinv;
  // (v^2 - v^-2) / (v - v^-1), realized by exact division
  const Laurent loop_coeff =
      exact_divide(Laurent::monomial(2) - Laurent::monomial(-2), comm_denom);

  auto E = [](int i) { return GeneratorToken::e(i); };
  auto F = [](int i) { return GeneratorToken::f(i); };
  // The abstract diagonal generator of the presentation scales a basis
  // vector by v^{+marginal sum}; the geometric token spelled H+ scales by
  // v^{-marginal sum}.  So the presentation's H is realized by the H- token
  // and its inverse by H+.
  auto Ha = [](int a) { return GeneratorToken::h_minus(a); };
  auto HaInv = [](int a) { return GeneratorToken::h_plus(a); };
  const GeneratorToken L = GeneratorToken::l();

  // invertibility of the diagonal generators, both orders
  for (int a = 1; a <= s; ++a) {
    ck.check(tag1("h_inverse", a), ck.word({Ha(a), HaInv(a)}) - I);
    ck.check(tag1("h_inverse_rev", a), ck.word({HaInv(a), Ha(a)}) - I);
  }

  // all diagonal generators commute pairwise
  std::vector<GeneratorToken> hs;
  for (int a = 1; a <= s; ++a) {
    hs.push_back(Ha(a));
    hs.push_back(HaInv(a));
  }
  for (size_t i = 0; i < hs.size(); ++i)
    for (size_t j = i + 1; j < hs.size(); ++j)
      ck.check("h_commute[" + hs[i].str() + "," + hs[j].str() + "]",
               ck.word({hs[i], hs[j]}) - ck.word({hs[j], hs[i]}));

  // raising/lowering Serre relations and distant commutations
  for (int i = 1; i <= s - 1; ++i)
    for (int j = 1; j <= s - 1; ++j) {
      if (j == i) continue;
      if (i - j == 1 || j - i == 1) {
        ck.check(tag2("serre_e", i, j),
                 ck.word({E(i), E(i), E(j)}) + ck.word({E(j), E(i), E(i)}) -
                     ck.word({E(i), E(j), E(i)}).scaled(serre_coeff));
        ck.check(tag2("serre_f", i, j),
                 ck.word({F(i), F(i), F(j)}) + ck.word({F(j), F(i), F(i)}) -
                     ck.word({F(i), F(j), F(i)}).scaled(serre_coeff));
      } else if (i < j) {
        ck.check(tag2("e_commute", i, j),
                 ck.word({E(i), E(j)}) - ck.word({E(j), E(i)}));
        ck.check(tag2("f_commute", i, j),
                 ck.word({F(i), F(j)}) - ck.word({F(j), F(i)}));
      }
    }

  // diagonal/raising and diagonal/lowering exchange, both signs
  for (int a = 1; a <= s; ++a)
    for (int i = 1; i <= s - 1; ++i) {
      const int ex = (a == i ? 1 : 0) - (a == i + 1 ? 1 : 0);
      ck.check(tag2("h_e", a, i),
               ck.word({Ha(a), E(i)}) -
                   ck.word({E(i), Ha(a)}).scaled(Laurent::monomial(ex)));
      ck.check(tag2("h_e_inv", a, i),
               ck.word({HaInv(a), E(i)}) -
                   ck.word({E(i), HaInv(a)}).scaled(Laurent::monomial(-ex)));
      ck.check(tag2("h_f", a, i),
               ck.word({Ha(a), F(i)}) -
                   ck.word({F(i), Ha(a)}).scaled(Laurent::monomial(-ex)));
      ck.check(tag2("h_f_inv", a, i),
               ck.word({HaInv(a), F(i)}) -
                   ck.word({F(i), HaInv(a)}).scaled(Laurent::monomial(ex)));
    }

  // [E_i, F_j] = delta_ij (H_i H^-_{i+1} - H^-_i H_{i+1}) / (v - v^-1)
  for (int i = 1; i <= s - 1; ++i)
    for (int j = 1; j <= s - 1; ++j) {
      const std::string id = tag2("ef_commutator", i, j);
      OperatorMatrix lhs = ck.word({E(i), F(j)}) - ck.word({F(j), E(i)});
      if (i == j) {
        OperatorMatrix num =
            ck.word({Ha(i), HaInv(i + 1)}) - ck.word({HaInv(i), Ha(i + 1)});
        try {
          lhs -= num.divided(comm_denom);
        } catch (const NotDivisible& e) {
          ck.fail(id, std::string("diagonal difference not divisible: ") +
                          e.what());
          continue;
        }
      }
      ck.check(id, lhs);
    }

  // idempotent relations
  for (int a = 1; a <= s; ++a) {
    ck.check(tag1("h_l", a), ck.word({Ha(a), L}) - ck.word({L, Ha(a)}));
    ck.check(tag1("h_l_inv", a),
             ck.word({HaInv(a), L}) - ck.word({L, HaInv(a)}));
  }
  ck.check("l_idempotent", ck.word({L, L}) - ck.word({L}));
  for (int i = 1; i <= s - 1; ++i) {
    // The two absorption identities mirror each other under the
    // order-reversing raising/lowering swap: L comes first for E and last
    // for F.
    ck.check(tag1("l_e_l", i), ck.word({L, E(i)}) - ck.word({L, E(i), L}));
    ck.check(tag1("f_l", i), ck.word({F(i), L}) - ck.word({L, F(i), L}));
    ck.check(tag1("e_l_e", i),
             ck.word({E(i), L, E(i)}).scaled(loop_coeff) -
                 ck.word({E(i), E(i), L}).scaled(vinv) -
                 ck.word({L, E(i), E(i)}).scaled(v));
    ck.check(tag1("f_l_f", i),
             ck.word({F(i), L, F(i)}).scaled(loop_coeff) -
                 ck.word({F(i), F(i), L}).scaled(v) -
                 ck.word({L, F(i), F(i)}).scaled(vinv));
  }

  return out;
}

std::vector<RelationReport> verify_bimodule(Context ctx) {
  const BasisIndex basis = BasisIndex::make(ctx);
  std::vector<RelationReport> out;
  std::vector<std::pair<GeneratorToken, OperatorMatrix>> lefts, rights;
  for (const auto& t : all_tokens(ctx.n))
    lefts.emplace_back(t, token_matrix(basis, t, true));
  for (const auto& t : all_tokens(ctx.m))
    rights.emplace_back(t, token_matrix(basis, t, false));
  for (const auto& [lt, lm] : lefts)
    for (const auto& [rt, rm] : rights) {
      RelationReport r;
      r.id = "commute[" + lt.str() + "|" + rt.str() + "]";
      r.ctx = ctx;
      r.left_side = true;
      OperatorMatrix residual = lm * rm - rm * lm;
      r.passed = residual.is_zero();
      if (!r.passed) r.detail = residual_detail(residual, basis);
      out.push_back(std::move(r));
    }
  return out;
}

CalibrationReport calibrate_normalization(Context ctx,
                                          const std::vector<int>& q_list,
                                          WorkBudget& budget) {
  CalibrationReport rep;
  rep.ctx = ctx;
  rep.q_list = q_list;
  const auto convs = all_weight_conventions();
  std::map<WeightConvention, CalibrationRow> tally;
  for (auto c : convs) tally[c] = CalibrationRow{c, 0, 0, false};

  for (int q : q_list) {
    auto table = std::make_shared<SubspaceTable>(ctx.d, q);
    const OrbitTable mod = build_orbit_table(ctx, q, budget, table);
    const OrbitTable alg_left =
        build_orbit_table(Context{ctx.n, ctx.n, ctx.d}, q, budget, table);
    const OrbitTable alg_right =
        build_orbit_table(Context{ctx.m, ctx.m, ctx.d}, q, budget, table);
    for (bool left : {true, false}) {
      const OrbitTable& alg = left ? alg_left : alg_right;
      for (const auto& t : all_tokens(left ? ctx.n : ctx.m)) {
        for (const auto& z : mod.keys) {
          const ModuleElement y =
              left ? act_left_basis(t, ctx, z) : act_right_basis(ctx, z, t);
          for (auto conv : convs) {
            std::map<DecoratedMatrix, SpecializedValue> expected;
            for (const auto& [zp, c] : y.terms())
              expected.emplace(
                  zp, specialize_v2(c.shifted(weight_exponent(zp, conv) -
                                              weight_exponent(z, conv)),
                                    q));
            const auto got =
                oracle_generator_action(alg, mod, t, z, left, conv, budget);
            auto& row = tally[conv];
            for (const auto& [k, val] : expected) {
              ++row.checked;
              auto it = got.find(k);
              const SpecializedValue o =
                  it == got.end() ? specialized_zero(q) : it->second;
              if (!(val == o)) ++row.mismatches;
            }
            for (const auto& [k, val] : got) {
              if (expected.count(k)) continue;
              ++row.checked;
              if (!val.is_zero()) ++row.mismatches;
            }
          }
        }
      }
    }
  }

  for (auto c : convs) {
    auto row = tally[c];
    row.viable = row.mismatches == 0;
    if (row.viable) rep.viable.push_back(c);
    rep.rows.push_back(row);
  }
  rep.has_choice = !rep.viable.empty();
  rep.ambiguous = rep.viable.size() > 1;
  if (rep.has_choice) {
    rep.chosen = rep.viable.front();
    for (auto c : rep.viable)
      if (c == default_convention()) rep.chosen = c;
  }
  return rep;
}

WeightConvention CalibrationReport::chosen_or_throw() const {
  if (!has_choice)
    throw NoConsistentConvention(
        "no weight convention reproduces the convolution counts at " +
        ctx.str());
  return chosen;
}

WeightConvention CalibrationReport::unique_choice_or_throw() const {
  chosen_or_throw();
  if (ambiguous) {
    std::string names;
    for (auto c : viable)
      names += std::string(names.empty() ? "" : ", ") + convention_name(c);
    throw AmbiguousConvention("several conventions survive calibration at " +
                              ctx.str() + ": " + names);
  }
  return chosen;
}

std::string CalibrationReport::str() const {
  std::ostringstream os;
  os << "calibration at " << ctx.str() << ", q = {";
  for (size_t i = 0; i < q_list.size(); ++i)
    os << (i ? "," : "") << q_list[i];
  os << "}\n";
  for (const auto& row : rows)
    os << "  " << convention_name(row.conv) << ": " << row.mismatches.str()
       << "/" << row.checked.str() << " mismatches -> "
       << (row.viable ? "viable" : "rejected") << "\n";
  if (!has_choice)
    os << "  no consistent convention\n";
  else if (ambiguous)
    os << "  chosen: " << convention_name(chosen)
       << " (documented default among several viable)\n";
  else
    os << "  chosen: " << convention_name(chosen) << " (unique)\n";
  return os.str();
}

WeightConvention calibrated_convention(WorkBudget& budget) {
  const std::vector<Context> grid = {Context{1, 1, 1}, Context{2, 1, 1},
                                     Context{2, 2, 2}};
  std::vector<WeightConvention> alive = all_weight_conventions();
  for (const auto& ctx : grid) {
    const CalibrationReport rep = calibrate_normalization(ctx, {2, 3}, budget);
    std::vector<WeightConvention> keep;
    for (auto c : alive)
      for (auto s : rep.viable)
        if (c == s) keep.push_back(c);
    alive = keep;
  }
  if (alive.empty())
    throw NoConsistentConvention(
        "no weight convention survives the calibration grid");
  for (auto c : alive)
    if (c == default_convention()) return c;
  return alive.front();
}

AgreementReport verify_oracle_agreement(Context ctx, int q,
                                        WeightConvention conv,
                                        WorkBudget& budget) {
  AgreementReport rep;
  rep.ctx = ctx;
  rep.q = q;
  rep.conv = conv;
  rep.passed = true;
  rep.parity_ok = true;

  auto table = std::make_shared<SubspaceTable>(ctx.d, q);
  const OrbitTable mod = build_orbit_table(ctx, q, budget, table);
  const OrbitTable alg_left =
      build_orbit_table(Context{ctx.n, ctx.n, ctx.d}, q, budget, table);
  const OrbitTable alg_right =
      build_orbit_table(Context{ctx.m, ctx.m, ctx.d}, q, budget, table);

  const int orbits = mod.orbit_count();
  auto diverge = [&](bool left, const GeneratorToken& t, int z_id, int zp_id,
                     const SpecializedValue& want, const SpecializedValue& got) {
    rep.passed = false;
    if (!rep.first_divergence.empty()) return;
    std::ostringstream os;
    os << (left ? "left" : "right") << " " << t.str() << " on "
       << mod.keys[static_cast<size_t>(z_id)].str() << " at output "
       << mod.keys[static_cast<size_t>(zp_id)].str() << ": symbolic "
       << want.str() << " vs counted " << got.str();
    rep.first_divergence = os.str();
  };

  for (bool left : {true, false}) {
    const OrbitTable& alg = left ? alg_left : alg_right;
    const auto tokens = all_tokens(left ? ctx.n : ctx.m);
    const size_t nt = tokens.size();

    // generator expansions over characteristic functions, specialized
    std::vector<std::map<int, SpecializedValue>> gen(nt);
    for (size_t ti = 0; ti < nt; ++ti)
      for (const auto& [b, c] : generator_e_coefficients(alg, tokens[ti], conv)) {
        auto sv = specialize_v2(c, q);
        if (!sv.is_zero()) gen[ti][b] = sv;
      }

    // symbolic side, transferred to the e-basis and specialized
    std::vector<std::vector<std::map<int, SpecializedValue>>> expected(
        nt, std::vector<std::map<int, SpecializedValue>>(
                static_cast<size_t>(orbits)));
    for (int z_id = 0; z_id < orbits; ++z_id) {
      const auto& z = mod.keys[static_cast<size_t>(z_id)];
      for (size_t ti = 0; ti < nt; ++ti) {
        const ModuleElement y = left ? act_left_basis(tokens[ti], ctx, z)
                                     : act_right_basis(ctx, z, tokens[ti]);
        for (const auto& [zp, c] : y.terms()) {
          const Laurent sh = c.shifted(weight_exponent(zp, conv) -
                                       weight_exponent(z, conv));
          // each transferred coefficient must sit in a single parity class
          if (!sh.exponents_all_parity(0) && !sh.exponents_all_parity(1))
            rep.parity_ok = false;
          auto it = mod.id_of.find(zp);
          if (it == mod.id_of.end()) {
            diverge(left, tokens[ti], z_id, z_id, specialize_v2(sh, q),
                    specialized_zero(q));
            continue;
          }
          expected[ti][static_cast<size_t>(z_id)][it->second] =
              specialize_v2(sh, q);
        }
      }
    }

    // counted side: one profile per output orbit covers every (token, input)
    std::vector<std::vector<std::map<int, SpecializedValue>>> counted(
        nt, std::vector<std::map<int, SpecializedValue>>(
                static_cast<size_t>(orbits)));
    for (int zp_id = 0; zp_id < orbits; ++zp_id) {
      const auto profile = convolution_profile(alg, mod, zp_id, left, budget);
      for (const auto& [bz, count] : profile) {
        const Rational cnt(count);
        for (size_t ti = 0; ti < nt; ++ti) {
          auto it = gen[ti].find(bz.first);
          if (it == gen[ti].end()) continue;
          auto& slot = counted[ti][static_cast<size_t>(bz.second)]
                           .try_emplace(zp_id, specialized_zero(q))
                           .first->second;
          slot += it->second.scaled(cnt);
        }
      }
    }

    for (size_t ti = 0; ti < nt; ++ti)
      for (int z_id = 0; z_id < orbits; ++z_id) {
        const auto& em = expected[ti][static_cast<size_t>(z_id)];
        const auto& cm = counted[ti][static_cast<size_t>(z_id)];
        for (const auto& [zp_id, want] : em) {
          rep.checked += 1;
          auto it = cm.find(zp_id);
          const SpecializedValue got =
              it == cm.end() ? specialized_zero(q) : it->second;
          if (!(want == got)) diverge(left, tokens[ti], z_id, zp_id, want, got);
        }
        for (const auto& [zp_id, got] : cm) {
          if (em.count(zp_id)) continue;
          rep.checked += 1;
          if (!got.is_zero())
            diverge(left, tokens[ti], z_id, zp_id, specialized_zero(q), got);
        }
      }
  }
  return rep;
}

DimensionReport verify_dimensions(Context ctx, const std::vector<int>& q_list,
                                  WorkBudget& budget) {
  DimensionReport rep;
  rep.ctx = ctx;
  rep.formula = dimension_count(ctx.n, ctx.m, ctx.d);
  rep.enumerated = Int(enumerate_decorated(ctx.n, ctx.m, ctx.d).size());
  bool ok = rep.formula == rep.enumerated;
  if (!ok) rep.detail = "formula disagrees with direct enumeration";
  for (int q : q_list) {
    const OrbitTable t = build_orbit_table(ctx, q, budget);
    rep.orbit_counts.emplace_back(q, Int(t.orbit_count()));
    if (Int(t.orbit_count()) != rep.formula) {
      ok = false;
      if (rep.detail.empty())
        rep.detail = "orbit count at q=" + std::to_string(q) +
                     " disagrees with the formula";
    }
    Int total = 0;
    for (const auto& s : t.sizes) total += s;
    if (total != t.total_triples()) {
      ok = false;
      if (rep.detail.empty())
        rep.detail = "orbit sizes at q=" + std::to_string(q) +
                     " do not add up to the triple count";
    }
  }
  rep.passed = ok;
  return rep;
}

namespace {

// shared by the acceptance binary and `verify --profile desk`
void criterion_c1(CriterionResult& r) {
  Int bad = 0;
  int checked = 0;
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m)
      for (int d = 0; d <= 5; ++d) {
        ++checked;
        if (dimension_count(n, m, d) !=
            Int(enumerate_decorated(n, m, d).size()))
          ++bad;
      }
  bool spots = dimension_count(2, 2, 2) == 27;
  for (int d = 1; d <= 5; ++d) spots = spots && dimension_count(1, 1, d) == 2;
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m)
      spots = spots && dimension_count(n, m, 0) == 1;
  r.passed = bad == 0 && spots;
  std::ostringstream os;
  os << checked << " grid points";
  if (bad != 0) os << ", " << bad.str() << " formula/enumeration mismatches";
  if (!spots) os << ", spot values wrong";
  r.detail = os.str();
}

void criterion_c2(CriterionResult& r, WorkBudget& budget) {
  int checked = 0;
  std::string first;
  bool ok = true;
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int d = 0; d <= 3; ++d) {
        const auto rep = verify_dimensions(Context{n, m, d}, {2, 3}, budget);
        checked += 2;
        if (!rep.passed) {
          ok = false;
          if (first.empty()) first = rep.ctx.str() + ": " + rep.detail;
        }
      }
  r.passed = ok;
  std::ostringstream os;
  os << checked << " (context, q) combinations";
  if (!first.empty()) os << "; first failure " << first;
  r.detail = os.str();
}

void criterion_c3(CriterionResult& r) {
  const std::vector<Context> left_grid = {Context{1, 1, 1}, Context{2, 2, 2},
                                          Context{3, 2, 2}, Context{3, 3, 3}};
  const std::vector<Context> right_grid = {Context{1, 1, 1}, Context{2, 2, 2},
                                           Context{2, 3, 2}, Context{3, 3, 3}};
  int instances = 0;
  std::string first;
  bool ok = true;
  auto sweep = [&](const std::vector<Context>& grid, bool left) {
    for (const auto& ctx : grid)
      for (const auto& rep : verify_presentation(ctx, left)) {
        ++instances;
        if (!rep.passed) {
          ok = false;
          if (first.empty())
            first = std::string(left ? "left " : "right ") + rep.id + " at " +
                    ctx.str() + ": " + rep.detail;
        }
      }
  };
  sweep(left_grid, true);
  sweep(right_grid, false);
  r.passed = ok;
  std::ostringstream os;
  os << instances << " relation instances, zero residual required";
  if (!first.empty()) os << "; first failure " << first;
  r.detail = os.str();
}

void criterion_c4(CriterionResult& r) {
  const std::vector<Context> grid = {Context{2, 2, 2}, Context{3, 2, 2},
                                     Context{2, 3, 3}};
  int instances = 0;
  std::string first;
  bool ok = true;
  for (const auto& ctx : grid) {
    const auto basis = enumerate_decorated(ctx.n, ctx.m, ctx.d);
    for (const auto& x : basis)
      for (const auto& t : all_tokens(ctx.m)) {
        ++instances;
        const ModuleElement e = ModuleElement::basis(ctx, x);
        const ModuleElement direct = act_right(e, t);
        const ModuleElement via = act_right_by_transpose(e, t);
        if (!(direct == via)) {
          ok = false;
          if (first.empty())
            first = t.str() + " on " + x.str() + " at " + ctx.str();
        }
      }
  }
  r.passed = ok;
  std::ostringstream os;
  os << instances << " (element, token) pairs";
  const auto corr = printed_right_corrections();
  os << "; transcription corrections in the direct route: " << corr.size();
  for (const auto& c : corr) os << " | " << c;
  if (!first.empty()) os << "; first failure " << first;
  r.detail = os.str();
}

void criterion_c5(CriterionResult& r, WorkBudget& budget) {
  const WeightConvention conv = calibrated_convention(budget);
  Int checked = 0;
  std::string first;
  bool ok = true, parity = true;
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int d = 0; d <= 3; ++d)
        for (int q : {2, 3}) {
          const auto rep =
              verify_oracle_agreement(Context{n, m, d}, q, conv, budget);
          checked += rep.checked;
          parity = parity && rep.parity_ok;
          if (!rep.passed) {
            ok = false;
            if (first.empty())
              first = rep.ctx.str() + " q=" + std::to_string(q) + ": " +
                      rep.first_divergence;
          }
        }
  r.passed = ok && parity;
  std::ostringstream os;
  os << checked.str() << " comparisons under "
     << convention_name(conv) << "; parity "
     << (parity ? "coherent" : "violated");
  if (!first.empty()) os << "; first failure " << first;
  r.detail = os.str();
}

void criterion_c6(CriterionResult& r) {
  int instances = 0;
  std::string first;
  bool ok = true;
  for (const auto& ctx : {Context{2, 2, 2}, Context{3, 2, 2}})
    for (const auto& rep : verify_bimodule(ctx)) {
      ++instances;
      if (!rep.passed) {
        ok = false;
        if (first.empty()) first = rep.id + " at " + ctx.str();
      }
    }
  r.passed = ok;
  std::ostringstream os;
  os << instances << " token pairs commute exactly";
  if (!first.empty()) os << "; first failure " << first;
  r.detail = os.str();
}

void criterion_c7(CriterionResult& r) {
  const Context ctx{2, 2, 2};
  const std::vector<Rational> primary = {Rational(2), Rational(3),
                                         Rational(5) / 2};
  const std::vector<Rational> backup = {Rational(7), Rational(11) / 3,
                                        Rational(4)};
  CentralizerReport rep;
  try {
    rep = centralizer_report(ctx, primary);
  } catch (const SampleDegenerate&) {
    rep = centralizer_report(ctx, backup);
  }
  r.passed = rep.passed && rep.within_hypothesis;
  std::ostringstream os;
  if (!rep.rows.empty()) {
    const auto& row = rep.rows.front();
    os << rep.rows.size() << " specializations; dims (left alg, right comm, "
       << "right alg, left comm) = (" << row.left_algebra_dim << ", "
       << row.right_commutant_dim << ", " << row.right_algebra_dim << ", "
       << row.left_commutant_dim << ")";
  }
  if (!rep.detail.empty()) os << "; " << rep.detail;
  r.detail = os.str();
}

void criterion_c8(CriterionResult& r, WorkBudget& budget) {
  const auto rep = calibrate_normalization(Context{2, 1, 1}, {2}, budget);
  std::vector<std::string> rejected;
  for (const auto& row : rep.rows)
    if (!row.viable) rejected.push_back(convention_name(row.conv));
  r.passed = !rejected.empty() && rep.has_choice;
  std::ostringstream os;
  os << rejected.size() << " of " << rep.rows.size()
     << " candidate conventions rejected";
  if (!rejected.empty()) {
    os << " (";
    for (size_t i = 0; i < rejected.size(); ++i)
      os << (i ? ", " : "") << rejected[i];
    os << ")";
  }
  if (!rep.has_choice) os << "; no convention survived";
  r.detail = os.str();
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(WorkBudget& budget) {
  std::vector<CriterionResult> out;
  auto run = [&](const char* id, const char* title, auto&& body) {
    CriterionResult r;
    r.id = id;
    r.title = title;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(r);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
    out.push_back(std::move(r));
  };

  run("C1", "dimension formula equals direct enumeration",
      [&](CriterionResult& r) { criterion_c1(r); });
  run("C2", "orbit counts over GF(q) match the dimension formula",
      [&](CriterionResult& r) { criterion_c2(r, budget); });
  run("C3", "defining relations hold as exact operator identities",
      [&](CriterionResult& r) { criterion_c3(r); });
  run("C4", "direct right action equals the transpose-derived action",
      [&](CriterionResult& r) { criterion_c4(r); });
  run("C5", "symbolic actions match convolution counts at v^2 = q",
      [&](CriterionResult& r) { criterion_c5(r, budget); });
  run("C6", "left and right actions commute",
      [&](CriterionResult& r) { criterion_c6(r); });
  run("C7", "word spans and commutants have equal dimensions",
      [&](CriterionResult& r) { criterion_c7(r); });
  run("C8", "calibration rejects wrong conventions",
      [&](CriterionResult& r) { criterion_c8(r, budget); });
  return out;
}

}  // namespace mirabolic
