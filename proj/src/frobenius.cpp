#include "gfrob/frobenius.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gfrob/error.hpp"

namespace gfrob {

namespace {

Vector unit_vector(std::size_t d, std::size_t k) {
  Vector e(d);
  e[k] = 1;
  return e;
}

std::string idx_str(std::initializer_list<std::size_t> ids) {
  std::string s = "(";
  bool first = true;
  for (auto i : ids) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + ")";
}

std::string vec_str(const Vector& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + to_string(v[k]);
  return s + "]";
}

Matrix inverse_or_throw(const Matrix& eta) {
  if (eta.rows() != eta.cols()) throw DegenerateMetric("metric is not square");
  auto g = inverse(eta);
  if (!g) throw DegenerateMetric("metric is singular");
  return *g;
}

}  // namespace

Vector multiply(const StructureConstants& c, const Vector& x, const Vector& y) {
  const std::size_t d = c.size();
  Vector out(d);
  for (std::size_t a = 0; a < d; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < d; ++b) {
      if (y[b] == 0) continue;
      const Rational s = x[a] * y[b];
      for (std::size_t l = 0; l < d; ++l)
        if (c[a][b][l] != 0) out[l] += s * c[a][b][l];
    }
  }
  return out;
}

Rational bilinear(const Matrix& eta, const Vector& x, const Vector& y) { return dot(x, eta * y); }

Matrix restrict_metric(const Matrix& eta, const std::vector<Vector>& basis) {
  Matrix B = Matrix::from_columns(basis, eta.rows());
  return B.transpose() * eta * B;
}

Report check_metric(const Metric& eta) {
  Report r;
  const GradedModule& H = eta.module;
  const FiniteGroup& G = H.group;
  const Matrix& m = eta.matrix;
  const std::size_t d = H.dim();
  if (m.rows() != d || m.cols() != d) {
    r.add("shape", false, "metric is not " + std::to_string(d) + "x" + std::to_string(d));
    return r;
  }
  r.add("symmetric", m.is_symmetric());

  std::string witness;
  for (Elem g = 0; g < G.order() && witness.empty(); ++g)
    if (!(H.rho(g).transpose() * m * H.rho(g) == m)) witness = "element " + std::to_string(g);
  r.add("g_invariant", witness.empty(), witness);

  witness.clear();
  for (std::size_t a = 0; a < d && witness.empty(); ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (m(a, b) != 0 && G.mul(H.degrees[a], H.degrees[b]) != G.identity()) {
        witness = "entry " + idx_str({a, b});
        break;
      }
  r.add("grading_preserving", witness.empty(), witness);

  witness.clear();
  for (Elem g = 0; g < G.order() && witness.empty(); ++g) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t k = 0; k < d; ++k) {
      if (H.degrees[k] == g) rows.push_back(k);
      if (H.degrees[k] == G.inv(g)) cols.push_back(k);
    }
    if (rows.size() != cols.size() || rank(submatrix(m, rows, cols)) != rows.size())
      witness = "degree " + std::to_string(g) + " block";
  }
  r.add("nondegenerate", witness.empty(), witness);

  auto ue = untwisted_basis(H);
  r.add("untwisted_nondegenerate", rank(restrict_metric(m, ue)) == ue.size());
  auto ug = invariants_basis(H);
  r.add("invariants_nondegenerate", rank(restrict_metric(m, ug)) == ug.size());
  return r;
}

std::vector<std::vector<std::vector<MultiPoly>>> third_derivatives(
    const MultiPoly& Y, const std::vector<std::string>& coords) {
  const std::size_t m = coords.size();
  std::vector<std::vector<std::vector<MultiPoly>>> D(
      m, std::vector<std::vector<MultiPoly>>(m, std::vector<MultiPoly>(m)));
  for (std::size_t a = 0; a < m; ++a) {
    MultiPoly ya = Y.diff(coords[a]);
    for (std::size_t b = a; b < m; ++b) {
      MultiPoly yab = ya.diff(coords[b]);
      for (std::size_t c = b; c < m; ++c) {
        MultiPoly yabc = yab.diff(coords[c]);
        for (auto [i, j, k] : {std::array<std::size_t, 3>{a, b, c}, {a, c, b}, {b, a, c},
                               {b, c, a}, {c, a, b}, {c, b, a}})
          D[i][j][k] = yabc;
      }
    }
  }
  return D;
}

WdvvResult wdvv_check(const MultiPoly& Y, const std::vector<std::string>& coords, const Matrix& eta) {
  const std::size_t m = coords.size();
  if (eta.rows() != m) throw DegenerateMetric("metric size does not match the coordinates");
  const Matrix g = inverse_or_throw(eta);
  const auto D = third_derivatives(Y, coords);

  // Z[a][b][l] = Σ_k Y_abk g^kl, the structure polynomials of ∘_Y
  std::vector<std::vector<std::vector<MultiPoly>>> Z(
      m, std::vector<std::vector<MultiPoly>>(m, std::vector<MultiPoly>(m)));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t l = 0; l < m; ++l)
        for (std::size_t k = 0; k < m; ++k)
          if (g(k, l) != 0 && !D[a][b][k].is_zero()) Z[a][b][l] += D[a][b][k] * g(k, l);

  // L[a][b][c][d] = η((∂a∘∂b)∘∂c, ∂d)
  auto L = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    MultiPoly s;
    for (std::size_t l = 0; l < m; ++l)
      if (!Z[a][b][l].is_zero() && !D[l][c][d].is_zero()) s += Z[a][b][l] * D[l][c][d];
    return s;
  };
  WdvvResult res;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t d = 0; d < m; ++d) {
          MultiPoly diff = L(a, b, c, d) - L(b, c, a, d);
          if (diff.is_zero()) continue;
          if (res.passed) res.first_residual = diff.trimmed();
          res.passed = false;
          res.violations.push_back({int(a), int(b), int(c), int(d)});
        }
  return res;
}

StructureConstants mult_from_potential(const MultiPoly& Y, const std::vector<std::string>& coords,
                                       const Matrix& eta,
                                       const std::map<std::string, Rational>& point) {
  const std::size_t m = coords.size();
  const Matrix g = inverse_or_throw(eta);
  const auto D = third_derivatives(Y, coords);
  std::map<std::string, Rational> at;
  for (const auto& c : coords) at[c] = 0;
  for (const auto& v : Y.vars()) at.emplace(v, 0);
  for (const auto& [k, v] : point) at[k] = v;
  StructureConstants c(m, std::vector<Vector>(m, Vector(m)));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t k = 0; k < m; ++k) {
        const Rational y = D[a][b][k].evaluate(at);
        if (y == 0) continue;
        for (std::size_t l = 0; l < m; ++l) c[a][b][l] += y * g(k, l);
      }
  return c;
}

std::optional<Vector> solve_unit(const StructureConstants& c) {
  const std::size_t m = c.size();
  // Σ_k u_k c[k][a][l] = δ_al for every a, l
  Matrix M(m * m, m);
  Vector rhs(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t l = 0; l < m; ++l) {
      for (std::size_t k = 0; k < m; ++k) M(a * m + l, k) = c[k][a][l];
      rhs[a * m + l] = a == l ? 1 : 0;
    }
  return solve(M, rhs);
}

Report check_frobenius(const FrobeniusAlgebra& A) {
  Report r;
  const std::size_t m = A.mult.size();
  r.add("symmetric_metric", A.metric.is_symmetric());
  r.add("nondegenerate", rank(A.metric) == m);
  std::string comm, assoc, inv, unit;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (comm.empty() && A.mult[a][b] != A.mult[b][a]) comm = idx_str({a, b});
      for (std::size_t c = 0; c < m; ++c) {
        Vector ec = unit_vector(m, c);
        if (assoc.empty() && multiply(A.mult, A.mult[a][b], ec) !=
                                 multiply(A.mult, unit_vector(m, a), A.mult[b][c]))
          assoc = idx_str({a, b, c});
        if (inv.empty() && bilinear(A.metric, A.mult[a][b], ec) !=
                               bilinear(A.metric, unit_vector(m, a), A.mult[b][c]))
          inv = idx_str({a, b, c});
      }
    }
  for (std::size_t a = 0; a < m && unit.empty(); ++a) {
    Vector ea = unit_vector(m, a);
    if (multiply(A.mult, A.unit, ea) != ea || multiply(A.mult, ea, A.unit) != ea)
      unit = idx_str({a});
  }
  r.add("commutativity", comm.empty(), comm);
  r.add("associativity", assoc.empty(), assoc);
  r.add("invariance", inv.empty(), inv);
  r.add("unit", unit.empty(), unit);
  return r;
}

GFrobeniusAlgebra gfa_from_cubic(const GradedModule& H, const Matrix& eta, const TensorElement& Y3,
                                 const Vector& unit) {
  const std::size_t d = H.dim();
  if (Y3.n != 3 && !Y3.is_zero()) throw DegreeMismatch("cubic form expected");
  if (eta.rows() != d || unit.size() != d) throw DegreeMismatch("sizes do not match the module");
  const Matrix g = inverse_or_throw(eta);
  StructureConstants c(d, std::vector<Vector>(d, Vector(d)));
  for (const auto& [idx, y] : Y3.terms)
    for (std::size_t l = 0; l < d; ++l)
      if (g(idx[2], l) != 0) c[idx[0]][idx[1]][l] += y * g(idx[2], l);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (bilinear(eta, multiply(c, unit, unit_vector(d, a)), unit_vector(d, b)) != eta(a, b))
        throw UnitFails("η(1·e_" + std::to_string(a) + ", e_" + std::to_string(b) +
                        ") != η(e_" + std::to_string(a) + ", e_" + std::to_string(b) + ")");
  return GFrobeniusAlgebra{H, eta, std::move(c), unit};
}

Report check_gfa(const GFrobeniusAlgebra& A) {
  Report r;
  const GradedModule& H = A.module;
  const FiniteGroup& G = H.group;
  const std::size_t d = H.dim();
  r.add("self_invariant", check_module(H).self_invariant);
  r.merge(check_metric({H, A.metric}), "metric.");

  std::string equi, grading, braided, inv, unit_inv, assoc, unit;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Vector ea = unit_vector(d, a), eb = unit_vector(d, b);
      const Vector& ab = A.mult[a][b];
      for (Elem g = 0; g < G.order() && equi.empty(); ++g)
        if (multiply(A.mult, H.rho(g) * ea, H.rho(g) * eb) != H.rho(g) * ab)
          equi = "element " + std::to_string(g) + " on " + idx_str({a, b});
      const Elem deg = G.mul(H.degrees[a], H.degrees[b]);
      for (std::size_t l = 0; l < d && grading.empty(); ++l)
        if (ab[l] != 0 && H.degrees[l] != deg) grading = idx_str({a, b});
      if (braided.empty() && ab != multiply(A.mult, H.rho(H.degrees[a]) * eb, ea))
        braided = idx_str({a, b});
      for (std::size_t c = 0; c < d; ++c) {
        const Vector ec = unit_vector(d, c);
        if (inv.empty() && bilinear(A.metric, ab, ec) != bilinear(A.metric, ea, A.mult[b][c]))
          inv = idx_str({a, b, c});
        if (assoc.empty() && multiply(A.mult, ab, ec) != multiply(A.mult, ea, A.mult[b][c]))
          assoc = idx_str({a, b, c});
      }
    }
  for (Elem g = 0; g < G.order() && unit_inv.empty(); ++g)
    if (H.rho(g) * A.unit != A.unit) unit_inv = "element " + std::to_string(g);
  for (std::size_t a = 0; a < d && unit.empty(); ++a) {
    const Vector ea = unit_vector(d, a);
    if (multiply(A.mult, A.unit, ea) != ea || multiply(A.mult, ea, A.unit) != ea)
      unit = idx_str({a});
  }
  for (std::size_t k = 0; k < d && unit.empty(); ++k)
    if (A.unit[k] != 0 && H.degrees[k] != G.identity()) unit = "unit is not untwisted";

  r.add("equivariance", equi.empty(), equi);
  r.add("grading", grading.empty(), grading);
  r.add("braided_commutativity", braided.empty(), braided);
  r.add("invariance", inv.empty(), inv);
  r.add("invariant_unit", unit_inv.empty(), unit_inv);
  r.add("associativity", assoc.empty(), assoc);
  r.add("unit", unit.empty(), unit);
  return r;
}

namespace {

SubFrobenius restrict_algebra(const GFrobeniusAlgebra& A, std::vector<Vector> basis) {
  const std::size_t d = A.module.dim(), k = basis.size();
  const Matrix B = Matrix::from_columns(basis, d);
  auto coords = [&](const Vector& v) {
    auto x = solve(B, v);
    if (!x) throw InvalidAction("subspace is not closed under the product: " + vec_str(v));
    return *x;
  };
  SubFrobenius s{basis, {restrict_metric(A.metric, basis), {}, coords(A.unit)}};
  s.algebra.mult.assign(k, std::vector<Vector>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      s.algebra.mult[i][j] = coords(multiply(A.mult, basis[i], basis[j]));
  return s;
}

}  // namespace

std::pair<SubFrobenius, SubFrobenius> subalgebras(const GFrobeniusAlgebra& A) {
  return {restrict_algebra(A, untwisted_basis(A.module)),
          restrict_algebra(A, invariants_basis(A.module))};
}

MultiPoly restrict_potential(const MultiPoly& Y, const std::vector<std::string>& coords,
                             const std::vector<Vector>& basis,
                             const std::vector<std::string>& new_coords) {
  if (basis.size() != new_coords.size()) throw BadIndex("one name per basis vector expected");
  std::map<std::string, MultiPoly> values;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    MultiPoly v;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (basis[j][k] != 0) v += MultiPoly::variable(new_coords[j]) * basis[j][k];
    values[coords[k]] = v;
  }
  for (const auto& var : Y.used_vars())
    if (!values.count(var)) throw UnknownVariable("'" + var + "' is not a coordinate");
  return Y.subst(values).with_vars(new_coords);
}

std::vector<std::string> subspace_coords(const std::vector<Vector>& basis,
                                         const std::vector<std::string>& coords,
                                         const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    int hit = -1, nonzero = 0;
    for (std::size_t k = 0; k < basis[j].size(); ++k)
      if (basis[j][k] != 0) {
        ++nonzero;
        if (basis[j][k] == 1) hit = static_cast<int>(k);
      }
    out.push_back(nonzero == 1 && hit >= 0 ? coords[hit] : prefix + std::to_string(j));
  }
  return out;
}

BraidedSeries potential_series(const GradedModule& H, const MultiPoly& Y,
                               const std::vector<std::string>& coords) {
  return series_from_poly(dual_module(H), Y, coords, std::max(Y.total_degree(), 0));
}

namespace {

void add_wdvv(Report& r, const std::string& name, const MultiPoly& Y,
              const std::vector<std::string>& coords, const Matrix& eta) {
  if (coords.empty()) {
    r.add(name, true);
    return;
  }
  try {
    auto w = wdvv_check(Y, coords, eta);
    std::string witness;
    if (!w.passed) {
      const auto& v = w.violations.front();
      witness = "(" + coords[v[0]] + "," + coords[v[1]] + "," + coords[v[2]] + "," + coords[v[3]] +
                "): " + w.first_residual.to_string();
    }
    r.add(name, w.passed, witness);
  } catch (const DegenerateMetric& e) {
    r.add(name, false, e.what());
  }
}

}  // namespace

Report check_pre_gfm(const GradedModule& H, const Matrix& eta, const std::vector<std::string>& coords,
                     const MultiPoly& Y) {
  Report r;
  if (coords.size() != H.dim()) throw BadIndex("one coordinate per basis vector expected");
  r.add("self_invariant", check_module(H).self_invariant);
  r.merge(check_metric({H, eta}), "metric.");

  const BraidedSeries S = potential_series(H, Y, coords);
  const FiniteGroup& G = H.group;
  std::string braided, degree;
  for (const auto& [k, x] : S.parts) {
    if (braided.empty() && !is_braided(S.module, x)) braided = "degree " + std::to_string(k);
    for (const auto& [idx, c] : x.terms)
      if (degree.empty() && g_degree(G, index_degree(S.module, idx)) != G.identity())
        degree = "degree " + std::to_string(k);
  }
  r.add("braided", braided.empty(), braided);
  r.add("g_degree_e", degree.empty(), degree);

  auto ue = untwisted_basis(H);
  auto ce = subspace_coords(ue, coords, "e");
  add_wdvv(r, "wdvv_untwisted", restrict_potential(Y, coords, ue, ce), ce, restrict_metric(eta, ue));
  auto ug = invariants_basis(H);
  auto cg = subspace_coords(ug, coords, "s");
  add_wdvv(r, "wdvv_invariants", restrict_potential(Y, coords, ug, cg), cg, restrict_metric(eta, ug));
  return r;
}

namespace {

MultiPoly zero_out(const MultiPoly& p, const std::vector<std::string>& vars) {
  std::map<std::string, MultiPoly> zeros;
  for (const auto& v : vars) zeros[v] = MultiPoly();
  return p.subst(zeros).with_vars(p.vars());
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool cross_block_zero(const Matrix& m, std::size_t k) {
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = k; c < m.cols(); ++c)
      if (m(r, c) != 0 || m(c, r) != 0) return false;
  return true;
}

Matrix block(const Matrix& m, std::size_t from, std::size_t to) {
  std::vector<std::size_t> idx;
  for (std::size_t k = from; k < to; ++k) idx.push_back(k);
  return submatrix(m, idx, idx);
}

}  // namespace

Z2Assembly assemble_z2(const FrobeniusManifold& Fe, const FrobeniusManifold& FG,
                       const Matrix& iota_e, const Matrix& iota_g,
                       std::optional<std::vector<Vector>> v_basis,
                       std::optional<std::vector<Vector>> g_basis) {
  const std::size_t de = Fe.coords.size(), dG = FG.coords.size(), di = iota_e.cols();
  if (iota_e.rows() != de || iota_g.rows() != dG || iota_g.cols() != di)
    throw BadIndex("embedding shapes do not match the manifolds");
  if (Fe.metric.rows() != de || FG.metric.rows() != dG)
    throw BadIndex("metric shapes do not match the coordinates");

  const auto Ie = iota_e.columns(), Ig = iota_g.columns();
  const auto V = v_basis ? *v_basis : nullspace(iota_e.transpose() * Fe.metric);
  const auto Gc = g_basis ? *g_basis : nullspace(iota_g.transpose() * FG.metric);
  auto P = Ie, Q = Ig;
  P.insert(P.end(), V.begin(), V.end());
  Q.insert(Q.end(), Gc.begin(), Gc.end());
  if (P.size() != de || rank(Matrix::from_columns(P, de)) != de)
    throw BlockDegreeViolation("H_i and H_v do not span H_e");
  if (Q.size() != dG || rank(Matrix::from_columns(Q, dG)) != dG)
    throw BlockDegreeViolation("H_i and H_g do not span H^G");

  const auto ni = subspace_coords(Ie, Fe.coords, "i");
  const auto nv = subspace_coords(V, Fe.coords, "v");
  auto ng = subspace_coords(Gc, FG.coords, "g");
  std::set<std::string> taken(ni.begin(), ni.end());
  taken.insert(nv.begin(), nv.end());
  for (std::size_t j = 0; j < ng.size(); ++j)
    if (taken.count(ng[j])) ng[j] = "g" + std::to_string(j);
  const auto names_e = concat(ni, nv), names_g = concat(ni, ng);
  const auto names = concat(names_e, ng);
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
    throw BadIndex("coordinate names collide");

  // metric
  const Matrix me = restrict_metric(Fe.metric, P), mg = restrict_metric(FG.metric, Q);
  if (!(block(me, 0, di) == block(mg, 0, di)))
    throw RestrictionMismatch("the two metrics restrict differently to H_i");
  if (!cross_block_zero(me, di)) throw BlockDegreeViolation("metric pairs H_i with H_v");
  if (!cross_block_zero(mg, di)) throw BlockDegreeViolation("metric pairs H_i with H_g");

  // potentials
  const MultiPoly ye = restrict_potential(Fe.potential, Fe.coords, P, names_e);
  const MultiPoly yg = restrict_potential(FG.potential, FG.coords, Q, names_g);
  const MultiPoly yi_e = zero_out(ye, nv).with_vars(ni), yi_g = zero_out(yg, ng).with_vars(ni);
  if (!(yi_e == yi_g))
    throw RestrictionMismatch("the two potentials restrict differently to H_i: difference " +
                              (yi_e - yi_g).to_string());

  Z2Assembly out;
  out.dim_i = di;
  out.dim_v = V.size();
  out.dim_g = Gc.size();
  out.coords = names;
  out.y_i = yi_e.with_vars(names);
  out.y_v = (ye - yi_e).with_vars(names);
  out.y_g = (yg - yi_g).with_vars(names);
  for (const auto& [e, c] : out.y_g.terms()) {
    unsigned gdeg = 0;
    for (std::size_t k = 0; k < names.size(); ++k)
      if (std::find(ng.begin(), ng.end(), out.y_g.vars()[k]) != ng.end()) gdeg += e[k];
    if (gdeg % 2) throw BlockDegreeViolation("term of odd degree in H_g: " + to_string(c));
  }
  out.potential = out.y_i + out.y_v + out.y_g;

  const std::size_t d = names.size();
  std::vector<Elem> degrees(d, 0);
  Matrix rho_g = Matrix::identity(d);
  for (std::size_t k = di; k < di + out.dim_v; ++k) rho_g(k, k) = -1;
  for (std::size_t k = di + out.dim_v; k < d; ++k) degrees[k] = 1;
  out.module = make_module(cyclic_group(2), degrees, {Matrix::identity(d), rho_g});

  out.metric = Matrix(d, d);
  for (std::size_t a = 0; a < de; ++a)
    for (std::size_t b = 0; b < de; ++b) out.metric(a, b) = me(a, b);
  for (std::size_t a = di; a < dG; ++a)
    for (std::size_t b = di; b < dG; ++b) out.metric(a + out.dim_v, b + out.dim_v) = mg(a, b);

  for (const auto& [k, x] : potential_series(out.module, out.potential, names).parts)
    if (!is_braided(dual_module(out.module), x))
      throw std::logic_error("assembled potential is not braided in degree " + std::to_string(k));
  out.report = check_pre_gfm(out.module, out.metric, names, out.potential);
  return out;
}

Z2Split z2_split(const MultiPoly& Y, const std::vector<std::string>& coords, std::size_t dim_i,
                 std::size_t dim_v, std::size_t dim_g) {
  if (coords.size() != dim_i + dim_v + dim_g) throw BadIndex("block sizes do not add up");
  std::map<std::string, int> kind;
  for (std::size_t k = 0; k < coords.size(); ++k)
    kind[coords[k]] = k < dim_i ? 0 : k < dim_i + dim_v ? 1 : 2;
  std::vector<std::pair<MultiPoly::Exponent, Rational>> parts[3];
  for (const auto& [e, c] : Y.terms()) {
    bool has_v = false, has_g = false;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      auto it = kind.find(Y.vars()[k]);
      if (it == kind.end()) throw UnknownVariable("'" + Y.vars()[k] + "' is not a coordinate");
      has_v = has_v || it->second == 1;
      has_g = has_g || it->second == 2;
    }
    if (has_v && has_g) throw BlockDegreeViolation("term mixes H_v and H_g coordinates");
    parts[has_v ? 1 : has_g ? 2 : 0].emplace_back(e, c);
  }
  Z2Split s;
  s.i = MultiPoly::from_terms(Y.vars(), parts[0]).with_vars(coords);
  s.v = MultiPoly::from_terms(Y.vars(), parts[1]).with_vars(coords);
  s.g = MultiPoly::from_terms(Y.vars(), parts[2]).with_vars(coords);
  return s;
}

}  // namespace gfrob
