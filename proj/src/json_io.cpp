#include "gfrob/json_io.hpp"

#include "gfrob/error.hpp"

namespace gfrob::json_io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing \"") + key + "\"");
  return *it;
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vector vector_from(const json& j) {
  Vector v;
  for (const auto& x : array(j, "vector")) v.push_back(rational_from(x));
  return v;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Matrix matrix_from(const json& j) {
  std::vector<Vector> rows;
  for (const auto& r : array(j, "matrix")) rows.push_back(vector_from(r));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw ParseError("matrix rows differ in length");
  if (rows.empty()) return Matrix();
  return Matrix::from_rows(rows);
}

json to_json(const FiniteGroup& G) { return {{"order", G.order()}, {"table", G.table()}}; }

FiniteGroup group_from(const json& j) {
  const int order = integer(field(j, "order"), "order");
  std::vector<std::vector<Elem>> table;
  for (const auto& row : array(field(j, "table"), "table")) {
    std::vector<Elem> r;
    for (const auto& x : array(row, "table row")) r.push_back(integer(x, "table entry"));
    table.push_back(r);
  }
  if (static_cast<int>(table.size()) != order) throw ParseError("table size differs from order");
  return FiniteGroup(table);
}

json to_json(const GradedModule& H) {
  json action = json::object();
  for (std::size_t g = 0; g < H.action.size(); ++g) action[std::to_string(g)] = to_json(H.action[g]);
  return {{"group", to_json(H.group)}, {"dim", H.dim()}, {"degrees", H.degrees}, {"action", action}};
}

GradedModule module_from(const json& j) {
  FiniteGroup G = group_from(field(j, "group"));
  const int dim = integer(field(j, "dim"), "dim");
  std::vector<Elem> degrees;
  for (const auto& d : array(field(j, "degrees"), "degrees")) degrees.push_back(integer(d, "degree"));
  if (static_cast<int>(degrees.size()) != dim) throw ParseError("degrees has the wrong length");
  const json& act = field(j, "action");
  if (!act.is_object()) throw ParseError("action must map element indices to matrices");
  std::vector<Matrix> action(G.order(), Matrix::identity(dim));
  std::vector<bool> given(G.order(), false);
  for (auto it = act.begin(); it != act.end(); ++it) {
    int g = -1;
    try {
      std::size_t used = 0;
      g = std::stoi(it.key(), &used);
      if (used != it.key().size()) g = -1;
    } catch (const std::exception&) {
    }
    if (g < 0 || g >= G.order()) throw ParseError("bad group element \"" + it.key() + "\" in action");
    action[g] = matrix_from(it.value());
    given[g] = true;
  }
  for (Elem g = 0; g < G.order(); ++g)
    if (!given[g] && g != G.identity()) throw ParseError("action is missing element " + std::to_string(g));
  return make_module(G, degrees, action);
}

json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", to_json(c)}});
  return {{"vars", p.vars()}, {"terms", terms}};
}

std::vector<std::string> poly_vars(const json& j) {
  std::vector<std::string> vars;
  for (const auto& v : array(field(j, "vars"), "vars")) {
    if (!v.is_string()) throw ParseError("variable names must be strings");
    vars.push_back(v.get<std::string>());
  }
  return vars;
}

MultiPoly poly_from(const json& j) {
  if (j.is_string()) return parse_poly(j.get<std::string>());
  const auto vars = poly_vars(j);
  std::vector<std::pair<MultiPoly::Exponent, Rational>> terms;
  for (const auto& t : array(field(j, "terms"), "terms")) {
    MultiPoly::Exponent e;
    for (const auto& x : array(field(t, "exp"), "exp")) {
      const int k = integer(x, "exponent");
      if (k < 0) throw ParseError("negative exponent");
      e.push_back(static_cast<unsigned>(k));
    }
    if (e.size() != vars.size()) throw ParseError("exponent length differs from vars");
    terms.emplace_back(e, rational_from(field(t, "coef")));
  }
  return MultiPoly::from_terms(vars, terms);
}

json to_json(const TensorElement& t) {
  json terms = json::array();
  for (const auto& [idx, c] : t.terms) terms.push_back({{"index", idx}, {"coef", to_json(c)}});
  return {{"n", t.n}, {"terms", terms}};
}

TensorElement tensor_from(const json& j) {
  TensorElement t;
  t.n = integer(field(j, "n"), "n");
  for (const auto& term : array(field(j, "terms"), "terms")) {
    Index idx;
    for (const auto& x : array(field(term, "index"), "index")) idx.push_back(integer(x, "index entry"));
    if (static_cast<int>(idx.size()) != t.n) throw ParseError("index length differs from n");
    t.add(idx, rational_from(field(term, "coef")));
  }
  return t;
}

json to_json(const StructureConstants& c) {
  json out = json::array();
  for (const auto& row : c) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    out.push_back(r);
  }
  return out;
}

StructureConstants structure_from(const json& j) {
  StructureConstants c;
  for (const auto& row : array(j, "mult")) {
    std::vector<Vector> r;
    for (const auto& v : array(row, "mult row")) r.push_back(vector_from(v));
    c.push_back(r);
  }
  return c;
}

json to_json(const GroupoidArrow& a) { return {{"source", a.source}, {"gpart", a.gpart}, {"perm", a.perm}}; }

json to_json(const Component& c) {
  return {{"representative", c.representative()},
          {"size", c.members.size()},
          {"n_C", c.n_C},
          {"m_C", c.m_C},
          {"g_degree", c.g_degree}};
}

json to_json(const GFrobeniusAlgebra& A) {
  return {{"module", to_json(A.module)}, {"metric", to_json(A.metric)}, {"mult", to_json(A.mult)}, {"unit", to_json(A.unit)}};
}

GFrobeniusAlgebra algebra_from(const json& j) {
  GradedModule H = module_from(field(j, "module"));
  Matrix eta = matrix_from(field(j, "metric"));
  StructureConstants c = structure_from(field(j, "mult"));
  Vector unit = vector_from(field(j, "unit"));
  const std::size_t d = H.dim();
  if (eta.rows() != d || eta.cols() != d) throw ParseError("metric must be dim x dim");
  if (unit.size() != d || c.size() != d) throw ParseError("mult and unit must match dim");
  for (const auto& row : c) {
    if (row.size() != d) throw ParseError("mult must be dim x dim x dim");
    for (const auto& v : row)
      if (v.size() != d) throw ParseError("mult must be dim x dim x dim");
  }
  return GFrobeniusAlgebra{std::move(H), std::move(eta), std::move(c), std::move(unit)};
}

FrobeniusManifold manifold_from(const json& j) {
  FrobeniusManifold F;
  const json& p = field(j, "potential");
  if (j.contains("coords")) {
    for (const auto& v : array(j["coords"], "coords")) {
      if (!v.is_string()) throw ParseError("coordinate names must be strings");
      F.coords.push_back(v.get<std::string>());
    }
  } else if (p.is_object()) {
    F.coords = poly_vars(p);
  } else {
    throw ParseError("missing \"coords\"");
  }
  F.metric = matrix_from(field(j, "metric"));
  F.potential = poly_from(p);
  if (F.metric.rows() != F.coords.size() || F.metric.cols() != F.coords.size())
    throw ParseError("metric size differs from the number of coordinates");
  return F;
}

json to_json(const FrobeniusManifold& F) {
  return {{"coords", F.coords}, {"metric", to_json(F.metric)}, {"potential", to_json(F.potential)}};
}

json to_json(const Report& r) {
  json out = json::array();
  for (const auto& c : r.checks)
    out.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"witness", c.witness}});
  return out;
}

}  // namespace gfrob::json_io
