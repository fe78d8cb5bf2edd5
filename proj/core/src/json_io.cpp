#include "mirabolic/json_io.hpp"

#include <json.hpp>

#include <sstream>

namespace mirabolic {

using json = nlohmann::ordered_json;

namespace {

json context_json(Context ctx) {
  return json{{"n", ctx.n}, {"m", ctx.m}, {"d", ctx.d}};
}

Context context_from(const json& j) {
  return Context{j.at("n").get<int>(), j.at("m").get<int>(),
                 j.at("d").get<int>()};
}

json matrix_json(const DecoratedMatrix& x) {
  json rows = json::array();
  for (int i = 1; i <= x.n; ++i) {
    json row = json::array();
    for (int j = 1; j <= x.m; ++j) row.push_back(x.at(i, j));
    rows.push_back(std::move(row));
  }
  json delta = json::array();
  for (const auto& [i, j] : x.delta) delta.push_back(json::array({i, j}));
  return json{{"matrix", std::move(rows)}, {"delta", std::move(delta)}};
}

DecoratedMatrix matrix_from(const json& j) {
  const auto& rows = j.at("matrix");
  const int n = static_cast<int>(rows.size());
  const int m = n > 0 ? static_cast<int>(rows.at(0).size()) : 0;
  DecoratedMatrix x(n, m);
  for (int i = 1; i <= n; ++i)
    for (int c = 1; c <= m; ++c)
      x.at(i, c) = rows.at(static_cast<size_t>(i - 1))
                       .at(static_cast<size_t>(c - 1))
                       .get<int>();
  for (const auto& cell : j.at("delta"))
    x.delta.emplace_back(cell.at(0).get<int>(), cell.at(1).get<int>());
  x.validate();
  return x;
}

json laurent_json(const Laurent& c) {
  json o = json::object();
  for (const auto& [e, a] : c.terms()) o[std::to_string(e)] = a.str();
  return o;
}

Laurent laurent_from(const json& j) {
  Laurent c;
  for (const auto& [k, v] : j.items())
    c += Laurent::monomial(std::stoi(k), Int(v.get<std::string>()));
  return c;
}

json value_json(const SpecializedValue& v) {
  return json{{"rational", v.rational.str()}, {"surd", v.surd.str()}};
}

const char* skip_ws(const char* p) {
  while (*p == ' ' || *p == '\t') ++p;
  return p;
}

// one signed integer (cpp_int)
Int parse_int(const char*& p) {
  const char* s = p;
  if (*p == '-' || *p == '+') ++p;
  while (*p >= '0' && *p <= '9') ++p;
  if (p == s || (p - s == 1 && (*s == '-' || *s == '+')))
    throw std::invalid_argument(std::string("expected integer near '") + s +
                                "'");
  return Int(std::string(s, p));
}

int parse_small_int(const char*& p) {
  return static_cast<int>(parse_int(p));
}

}  // namespace

Laurent parse_laurent(const std::string& s) {
  // grammar: term (("+"|"-") term)*, term = [int "*"] "v^" int | int
  const char* p = skip_ws(s.c_str());
  Laurent out;
  bool negate = false;
  if (*p == '-') {
    negate = true;
    ++p;
    p = skip_ws(p);
  }
  while (true) {
    Int coeff = 1;
    int exp = 0;
    if (*p == 'v') {
      ++p;
    } else {
      coeff = parse_int(p);
      p = skip_ws(p);
      if (*p == '*') {
        p = skip_ws(p + 1);
        if (*p != 'v')
          throw std::invalid_argument("expected v after '*' in '" + s + "'");
        ++p;
      } else if (*p == 'v') {
        ++p;
      } else {
        out += Laurent::monomial(0, negate ? -coeff : coeff);
        goto next;
      }
    }
    if (*p == '^') {
      ++p;
      exp = parse_small_int(p);
    } else {
      exp = 1;
    }
    out += Laurent::monomial(exp, negate ? -coeff : coeff);
  next:
    p = skip_ws(p);
    if (*p == '\0') break;
    if (*p == '+')
      negate = false;
    else if (*p == '-')
      negate = true;
    else
      throw std::invalid_argument("unexpected character in '" + s + "'");
    p = skip_ws(p + 1);
  }
  return out;
}

DecoratedMatrix parse_matrix(const std::string& s, int n, int m) {
  const char* p = skip_ws(s.c_str());
  if (*p != '[')
    throw std::invalid_argument("matrix must start with '[': " + s);
  ++p;
  std::vector<std::vector<int>> rows;
  while (true) {
    if (*p != '[')
      throw std::invalid_argument("matrix row must start with '[': " + s);
    ++p;
    std::vector<int> row;
    if (*p != ']')
      while (true) {
        row.push_back(parse_small_int(p));
        if (*p == ',') {
          ++p;
          continue;
        }
        break;
      }
    if (*p != ']')
      throw std::invalid_argument("unterminated matrix row in: " + s);
    ++p;
    rows.push_back(std::move(row));
    if (*p == ';') {
      ++p;
      continue;
    }
    break;
  }
  if (*p != ']')
    throw std::invalid_argument("unterminated matrix in: " + s);
  ++p;
  if (n == 0) n = static_cast<int>(rows.size());
  if (m == 0 && !rows.empty()) m = static_cast<int>(rows.front().size());
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) +
                                " rows in: " + s);
  DecoratedMatrix x(n, m);
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i - 1)].size()) != m)
      throw std::invalid_argument("expected " + std::to_string(m) +
                                  " columns in: " + s);
    for (int j = 1; j <= m; ++j)
      x.at(i, j) =
          rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  }
  if (*p == '{') {
    ++p;
    while (*p != '}') {
      if (*p != '(')
        throw std::invalid_argument("expected '(' in decoration of: " + s);
      ++p;
      const int i = parse_small_int(p);
      if (*p != ',')
        throw std::invalid_argument("expected ',' in decoration of: " + s);
      ++p;
      const int j = parse_small_int(p);
      if (*p != ')')
        throw std::invalid_argument("expected ')' in decoration of: " + s);
      ++p;
      x.delta.emplace_back(i, j);
      if (*p == ',') ++p;
    }
    ++p;
  }
  p = skip_ws(p);
  if (*p != '\0')
    throw std::invalid_argument("trailing characters after matrix: " + s);
  x.validate();
  return x;
}

std::string serialize_element(const ModuleElement& x, bool as_json) {
  if (as_json) return element_json(x);
  return x.str();
}

ModuleElement parse_element_text(const std::string& s, Context ctx) {
  ModuleElement out(ctx);
  const std::string trimmed = [&] {
    size_t a = s.find_first_not_of(" \t\n");
    size_t b = s.find_last_not_of(" \t\n");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  }();
  if (trimmed.empty() || trimmed == "0") return out;
  size_t pos = 0;
  while (pos < trimmed.size()) {
    Laurent coeff = Laurent::one();
    if (trimmed[pos] == '(') {
      const size_t close = trimmed.find(')', pos);
      if (close == std::string::npos)
        throw std::invalid_argument("unterminated coefficient in: " + s);
      coeff = parse_laurent(trimmed.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      if (pos >= trimmed.size() || trimmed[pos] != '*')
        throw std::invalid_argument("expected '*' after coefficient in: " + s);
      ++pos;
    }
    size_t end = trimmed.find(' ', pos);
    if (end == std::string::npos) end = trimmed.size();
    out.add(parse_matrix(trimmed.substr(pos, end - pos), ctx.n, ctx.m), coeff);
    pos = end;
    if (pos < trimmed.size()) {
      if (trimmed.compare(pos, 3, " + ") != 0)
        throw std::invalid_argument("terms must be joined by ' + ' in: " + s);
      pos += 3;
    }
  }
  return out;
}

std::string element_json(const ModuleElement& x) {
  json terms = json::array();
  for (const auto& [k, c] : x.terms()) {
    json t = matrix_json(k);
    t["coeff"] = laurent_json(c);
    terms.push_back(std::move(t));
  }
  json o{{"context", context_json(x.context())}, {"terms", std::move(terms)}};
  return o.dump(2);
}

ModuleElement parse_element_json(const std::string& s) {
  const json o = json::parse(s);
  ModuleElement out(context_from(o.at("context")));
  for (const auto& t : o.at("terms"))
    out.add(matrix_from(t), laurent_from(t.at("coeff")));
  return out;
}

std::string basis_json(Context ctx) {
  const auto keys = enumerate_decorated(ctx.n, ctx.m, ctx.d);
  json elements = json::array();
  for (const auto& k : keys) elements.push_back(matrix_json(k));
  json o{{"context", context_json(ctx)},
         {"dimension", keys.size()},
         {"elements", std::move(elements)}};
  return o.dump(2);
}

std::string orbit_table_json(const OrbitTable& t) {
  json orbits = json::array();
  for (int i = 0; i < t.orbit_count(); ++i) {
    json entry = matrix_json(t.keys[static_cast<size_t>(i)]);
    entry["size"] = t.sizes[static_cast<size_t>(i)].str();
    const auto& rep = t.reps[static_cast<size_t>(i)];
    auto flag_json = [&](const FlagGeometry& g, int fid) {
      json steps = json::array();
      for (int sid : g.flags[static_cast<size_t>(fid)].steps)
        steps.push_back((*g.table)[sid].basis);
      return steps;
    };
    entry["representative"] =
        json{{"left_flag", flag_json(t.left, rep.fx)},
             {"right_flag", flag_json(t.right, rep.fy)},
             {"vector", vec_decode(rep.w, t.ctx.d, t.q)}};
    orbits.push_back(std::move(entry));
  }
  json o{{"context", context_json(t.ctx)},
         {"q", t.q},
         {"left_flag_count", t.left.flags.size()},
         {"right_flag_count", t.right.flags.size()},
         {"vector_count", t.codes()},
         {"orbit_count", t.orbit_count()},
         {"orbits", std::move(orbits)}};
  return o.dump(2);
}

std::string oracle_action_json(Context ctx, int q, const GeneratorToken& t,
                               bool left_side, const DecoratedMatrix& z,
                               const std::map<DecoratedMatrix,
                                              SpecializedValue>& values) {
  json terms = json::array();
  for (const auto& [k, v] : values) {
    json entry = matrix_json(k);
    entry["value"] = value_json(v);
    terms.push_back(std::move(entry));
  }
  json o{{"context", context_json(ctx)},
         {"q", q},
         {"token", t.str()},
         {"side", left_side ? "left" : "right"},
         {"input", matrix_json(z)},
         {"terms", std::move(terms)}};
  return o.dump(2);
}

std::string relation_reports_json(const std::string& kind, Context ctx,
                                  const std::vector<RelationReport>& v) {
  json reports = json::array();
  int failed = 0;
  for (const auto& r : v) {
    if (!r.passed) ++failed;
    reports.push_back(json{{"id", r.id},
                           {"side", r.left_side ? "left" : "right"},
                           {"passed", r.passed},
                           {"detail", r.detail}});
  }
  json o{{"kind", kind},
         {"context", context_json(ctx)},
         {"total", v.size()},
         {"failed", failed},
         {"passed", failed == 0},
         {"reports", std::move(reports)}};
  return o.dump(2);
}

std::string calibration_json(const CalibrationReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back(json{{"convention", convention_name(row.conv)},
                        {"checked", row.checked.str()},
                        {"mismatches", row.mismatches.str()},
                        {"viable", row.viable}});
  json viable = json::array();
  for (auto c : r.viable) viable.push_back(convention_name(c));
  json o{{"context", context_json(r.ctx)},
         {"q", r.q_list},
         {"rows", std::move(rows)},
         {"viable", std::move(viable)},
         {"has_choice", r.has_choice},
         {"ambiguous", r.ambiguous},
         {"chosen", r.has_choice ? json(convention_name(r.chosen)) : json()}};
  return o.dump(2);
}

std::string agreement_json(const AgreementReport& r) {
  json o{{"context", context_json(r.ctx)},
         {"q", r.q},
         {"convention", convention_name(r.conv)},
         {"passed", r.passed},
         {"checked", r.checked.str()},
         {"parity_coherent", r.parity_ok},
         {"first_divergence", r.first_divergence}};
  return o.dump(2);
}

std::string dimension_json(const DimensionReport& r) {
  json counts = json::array();
  for (const auto& [q, c] : r.orbit_counts)
    counts.push_back(json{{"q", q}, {"orbits", c.str()}});
  json o{{"context", context_json(r.ctx)},
         {"formula", r.formula.str()},
         {"enumerated", r.enumerated.str()},
         {"orbit_counts", std::move(counts)},
         {"passed", r.passed},
         {"detail", r.detail}};
  return o.dump(2);
}

std::string centralizer_json(const CentralizerReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back(json{{"v", row.v.str()},
                        {"left_algebra", row.left_algebra_dim},
                        {"right_algebra", row.right_algebra_dim},
                        {"left_commutant", row.left_commutant_dim},
                        {"right_commutant", row.right_commutant_dim}});
  json o{{"context", context_json(r.ctx)},
         {"within_hypothesis", r.within_hypothesis},
         {"samples", std::move(rows)},
         {"passed", r.passed},
         {"detail", r.detail}};
  return o.dump(2);
}

std::string criteria_json(const std::vector<CriterionResult>& v) {
  json rows = json::array();
  bool all = true;
  for (const auto& c : v) {
    all = all && c.passed;
    rows.push_back(json{{"id", c.id},
                        {"title", c.title},
                        {"passed", c.passed},
                        {"detail", c.detail}});
  }
  json o{{"profile", "desk"}, {"passed", all}, {"criteria", std::move(rows)}};
  return o.dump(2);
}

}  // namespace mirabolic
