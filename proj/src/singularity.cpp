#include "gfrob/singularity.hpp"

#include <stdexcept>

#include "gfrob/error.hpp"

namespace gfrob {

namespace {

std::string power_name(const std::string& var, int p) {
  if (p == 0) return "1";
  if (p == 1) return var;
  return var + "^" + std::to_string(p);
}

MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }

MultiPoly zero_odd(const MultiPoly& p, int m) {
  std::map<std::string, MultiPoly> zeros;
  for (int i = 1; i < m; i += 2) zeros["t" + std::to_string(i)] = MultiPoly();
  return p.subst(zeros);
}

}  // namespace

Matrix MilnorRing::metric() const {
  const std::size_t d = basis.size();
  Matrix m(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) m(a, b) = dot(mult[a][b], counit);
  return m;
}

FrobeniusAlgebra MilnorRing::algebra() const {
  Vector one(basis.size());
  one[0] = 1;
  return FrobeniusAlgebra{metric(), mult, one};
}

MilnorRing milnor_ring(char kind, int n) {
  MilnorRing r;
  r.kind = kind;
  r.n = n;
  if (kind == 'A') {
    if (n < 2) throw BadIndex("A_n needs n >= 2");
    for (int i = 0; i < n; ++i) r.basis.push_back(power_name("z", i));
    r.mult.assign(n, std::vector<Vector>(n, Vector(n)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a + b < n) r.mult[a][b][a + b] = 1;
    r.counit.assign(n, 0);
    r.counit[n - 1] = 1;
  } else if (kind == 'D') {
    if (n < 3) throw BadIndex("D_n needs n >= 3");
    const int y = n - 1, top = n - 2;
    for (int i = 0; i <= top; ++i) r.basis.push_back(power_name("x", i));
    r.basis.push_back("y");
    r.mult.assign(n, std::vector<Vector>(n, Vector(n)));
    for (int a = 0; a <= top; ++a)
      for (int b = 0; b <= top; ++b)
        if (a + b <= top) r.mult[a][b][a + b] = 1;  // x^{n-1} -> 0
    r.mult[0][y][y] = r.mult[y][0][y] = 1;           // x y -> 0
    r.mult[y][y][top] = -1;                          // y^2 -> -x^{n-2}
    r.counit.assign(n, 0);
    r.counit[top] = 1;
  } else {
    throw BadIndex(std::string("unknown singularity kind '") + kind + "'");
  }
  return r;
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& f, const std::string& v) {
  const auto& vars = f.vars();
  std::size_t p = 0;
  while (p < vars.size() && vars[p] != v) ++p;
  if (p == vars.size()) return {f};
  std::vector<std::vector<std::pair<MultiPoly::Exponent, Rational>>> parts;
  for (const auto& [e, c] : f.terms()) {
    if (parts.size() <= e[p]) parts.resize(e[p] + 1);
    auto rest = e;
    rest[p] = 0;
    parts[e[p]].emplace_back(rest, c);
  }
  std::vector<MultiPoly> out;
  for (const auto& terms : parts) out.push_back(MultiPoly::from_terms(vars, terms));
  if (out.empty()) out.emplace_back();
  return out;
}

MultiPoly reduce_monic(const MultiPoly& f, const std::string& v, const std::vector<MultiPoly>& lower) {
  const std::size_t m = lower.size();
  auto coeffs = coefficients_in(f, v);
  for (std::size_t K = coeffs.size(); K-- > m;) {
    if (coeffs[K].is_zero()) continue;
    const MultiPoly c = coeffs[K];
    coeffs[K] = MultiPoly();
    for (std::size_t j = 0; j < m; ++j)
      if (!lower[j].is_zero()) coeffs[K - m + j] -= c * lower[j];
  }
  MultiPoly out;
  const MultiPoly x = var(v);
  MultiPoly xk = 1;
  for (std::size_t k = 0; k < std::min(coeffs.size(), m); ++k) {
    if (!coeffs[k].is_zero()) out += coeffs[k] * xk;
    xk *= x;
  }
  return out;
}

std::vector<std::string> deformation_params(int m) {
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i) out.push_back("k" + std::to_string(i));
  return out;
}

MultiPoly unfolding(int m) {
  if (m < 1) throw BadIndex("A_m needs m >= 1");
  MultiPoly F = var("z").pow(m + 1) * Rational(1, m + 1);
  for (int i = 0; i < m; ++i) F += var("k" + std::to_string(i)) * var("z").pow(i);
  return F;
}

namespace {

// lower coefficients of F' = z^m + Σ_{i>=1} i k_i z^{i-1}
std::vector<MultiPoly> derivative_lower(const std::vector<MultiPoly>& k) {
  const std::size_t m = k.size();
  std::vector<MultiPoly> lower(m);
  for (std::size_t j = 0; j + 1 < m; ++j) lower[j] = k[j + 1] * Rational(static_cast<long>(j + 1));
  return lower;
}

std::vector<MultiPoly> param_polys(int m) {
  std::vector<MultiPoly> k;
  for (const auto& name : deformation_params(m)) k.push_back(var(name));
  return k;
}

MultiPoly top_coefficient(const MultiPoly& reduced, int m) {
  auto c = coefficients_in(reduced, "z");
  return static_cast<int>(c.size()) >= m ? c[m - 1] : MultiPoly();
}

}  // namespace

MultiPoly jacobi_reduce(int m, const MultiPoly& f) {
  if (m < 1) throw BadIndex("A_m needs m >= 1");
  return reduce_monic(f, "z", derivative_lower(param_polys(m)));
}

MultiPoly jacobi_multiply(int m, const MultiPoly& f, const MultiPoly& g) {
  return jacobi_reduce(m, f * g);
}

MultiPoly residue_pair(int m, const MultiPoly& f, const MultiPoly& g) {
  return top_coefficient(jacobi_multiply(m, f, g), m);
}

std::vector<std::string> flat_coords_A(int m) {
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i) out.push_back("t" + std::to_string(i));
  return out;
}

UnfoldingChart unfolding_chart(int m) {
  if (m < 1) throw BadIndex("A_m needs m >= 1");
  UnfoldingChart c;
  c.m = m;
  c.t = flat_coords_A(m);
  for (int i = 0; i < m; ++i) c.a.push_back("a" + std::to_string(i));

  // z = w S(u), u = 1/w, S = 1 + Σ_{j=1}^{m} t_{m-j} u^{j+1}; keep u-powers <= m+1
  const int top = m + 1;
  std::vector<MultiPoly> S(top + 1);
  S[0] = 1;
  for (int j = 1; j <= m; ++j) S[j + 1] = var(c.t[m - j]);
  std::vector<std::vector<MultiPoly>> pw(top + 1);
  pw[0].assign(top + 1, MultiPoly());
  pw[0][0] = 1;
  for (int p = 1; p <= top; ++p) {
    pw[p].assign(top + 1, MultiPoly());
    for (int r = 0; r <= top; ++r) {
      if (pw[p - 1][r].is_zero()) continue;
      for (int s = 0; r + s <= top; ++s)
        if (!S[s].is_zero()) pw[p][r + s] += pw[p - 1][r] * S[s];
    }
  }
  // Matching the coefficient of w^q in F(z(w)) = w^{m+1}/(m+1), q = m-1 .. 0.
  c.a_of_t.assign(m, MultiPoly());
  for (int q = m - 1; q >= 0; --q) {
    MultiPoly k = -(pw[top][top - q] * Rational(1, m + 1));
    for (int p = q + 1; p < m; ++p) k -= c.a_of_t[p] * pw[p][p - q];
    c.a_of_t[q] = k.with_vars(c.t);
  }

  // a_i = -t_i + h_i(t_{i+2}, ..), so the inverse is solved from the top down.
  c.t_of_a.assign(m, MultiPoly());
  std::map<std::string, MultiPoly> known;
  for (int i = m - 1; i >= 0; --i) {
    MultiPoly h = c.a_of_t[i] + var(c.t[i]);
    for (int j = 0; j <= i + 1 && j < m; ++j)
      if (h.degree_in(c.t[j]) > 0)
        throw std::logic_error("a_" + std::to_string(i) + " depends on t_" + std::to_string(j));
    c.t_of_a[i] = (h.subst(known) - var(c.a[i])).with_vars(c.a);
    known[c.t[i]] = c.t_of_a[i];
  }
  return c;
}

UnfoldingChart flat_coordinates(int n) {
  if (n < 2) throw BadIndex("flat_coordinates needs n >= 2");
  return unfolding_chart(2 * n - 3);
}

std::vector<MultiPoly> flat_vector_fields(const UnfoldingChart& chart) {
  std::vector<MultiPoly> out;
  for (const auto& ta : chart.t) {
    MultiPoly f;
    for (int i = 0; i < chart.m; ++i) f += chart.a_of_t[i].diff(ta) * var("z").pow(i);
    out.push_back(f);
  }
  return out;
}

Matrix metric_A(int m) {
  Matrix eta(m, m);
  for (int i = 0; i < m; ++i) eta(i, m - 1 - i) = 1;
  return eta;
}

MultiPoly potential_A(int m) {
  if (m < 2) throw BadIndex("A_m potentials need m >= 2");
  const UnfoldingChart chart = unfolding_chart(m);
  const auto dF = flat_vector_fields(chart);
  const auto lower = derivative_lower(chart.a_of_t);
  std::vector<std::vector<std::vector<MultiPoly>>> Y(
      m, std::vector<std::vector<MultiPoly>>(m, std::vector<MultiPoly>(m)));
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      const MultiPoly ab = reduce_monic(dF[a] * dF[b], "z", lower);
      for (int c = b; c < m; ++c) {
        const MultiPoly y = top_coefficient(reduce_monic(ab * dF[c], "z", lower), m).with_vars(chart.t);
        Y[a][b][c] = Y[a][c][b] = Y[b][a][c] = Y[b][c][a] = Y[c][a][b] = Y[c][b][a] = y;
      }
    }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          if (!(Y[a][b][c].diff(chart.t[d]) == Y[d][b][c].diff(chart.t[a])))
            throw IntegrabilityFailure("∂_" + chart.t[d] + " Y_" + std::to_string(a) +
                                       std::to_string(b) + std::to_string(c) + " is not symmetric");

  // Euler: Σ t_a t_b t_c Y_abc has each degree-d term of Φ times d(d-1)(d-2).
  MultiPoly W;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (!Y[a][b][c].is_zero()) W += var(chart.t[a]) * var(chart.t[b]) * var(chart.t[c]) * Y[a][b][c];
  W = W.with_vars(chart.t);
  std::vector<std::pair<MultiPoly::Exponent, Rational>> terms;
  for (const auto& [e, coef] : W.terms()) {
    long d = 0;
    for (unsigned x : e) d += x;
    terms.emplace_back(e, coef / Rational(d * (d - 1) * (d - 2)));
  }
  MultiPoly Phi = MultiPoly::from_terms(chart.t, terms);

  const auto D = third_derivatives(Phi, chart.t);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (!(D[a][b][c] == Y[a][b][c]))
          throw IntegrabilityFailure("integrated potential does not reproduce Y_" +
                                     std::to_string(a) + std::to_string(b) + std::to_string(c));
  return Phi;
}

std::vector<std::string> flat_coords_B(int m) {
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i) out.push_back("t" + std::to_string(2 * i));
  return out;
}

Matrix metric_B(int m) {
  Matrix eta(m, m);
  for (int i = 0; i < m; ++i) eta(i, m - 1 - i) = 1;
  return eta;
}

MultiPoly potential_B(int m) {
  if (m < 2) throw BadIndex("B_m needs m >= 2");
  return zero_odd(potential_A(2 * m - 1), 2 * m - 1).with_vars(flat_coords_B(m));
}

std::vector<std::string> flat_coords_D(int n) {
  auto out = flat_coords_B(n - 1);
  out.push_back("tstar");
  return out;
}

Matrix metric_D(int n) {
  Matrix eta(n, n);
  for (int i = 0; i < n - 1; ++i) eta(i, n - 2 - i) = 1;
  eta(n - 1, n - 1) = -1;
  return eta;
}

MultiPoly d_correction(int n) {
  if (n < 3) throw BadIndex("D_n needs n >= 3");
  const int m = 2 * n - 3;
  const UnfoldingChart chart = unfolding_chart(m);
  MultiPoly a0 = zero_odd(chart.a_of_t[0], m);
  return (a0 * var("tstar").pow(2) * Rational(-1, 2)).with_vars(flat_coords_D(n));
}

MultiPoly potential_D(int n) {
  if (n < 3) throw BadIndex("D_n needs n >= 3");
  const int m = 2 * n - 3;
  return (zero_odd(potential_A(m), m) + d_correction(n)).with_vars(flat_coords_D(n));
}

namespace {

// position of z^p (p <= 2n-4) or of y (p < 0) in the Z/2Z basis
int z2_pos(int n, int p) {
  if (p < 0) return 2 * n - 3;
  return p % 2 == 0 ? p / 2 : (n - 1) + (p - 1) / 2;
}

}  // namespace

std::vector<std::string> z2_basis_names(int n) {
  std::vector<std::string> out;
  for (int p = 0; p <= 2 * n - 4; p += 2) out.push_back(power_name("z", p));
  for (int p = 1; p <= 2 * n - 5; p += 2) out.push_back(power_name("z", p));
  out.push_back("y");
  return out;
}

GradedModule z2_milnor_module(int n) {
  if (n < 3) throw BadIndex("the Z/2Z algebra needs n >= 3");
  const std::size_t d = 2 * n - 2;
  std::vector<Elem> degrees(d, 0);
  degrees[d - 1] = 1;
  Matrix rho = Matrix::identity(d);
  for (int p = 1; p <= 2 * n - 5; p += 2) rho(z2_pos(n, p), z2_pos(n, p)) = -1;
  return make_module(cyclic_group(2), degrees, {Matrix::identity(d), rho});
}

GFrobeniusAlgebra z2_frobenius_algebra(int n) {
  GradedModule H = z2_milnor_module(n);
  const int d = 2 * n - 2, top = 2 * n - 4;
  StructureConstants c(d, std::vector<Vector>(d, Vector(d)));
  for (int p = 0; p <= top; ++p)
    for (int q = 0; q <= top; ++q)
      if (p + q <= top) c[z2_pos(n, p)][z2_pos(n, q)][z2_pos(n, p + q)] = 1;  // z^{2n-3} = 0
  const int y = z2_pos(n, -1), one = z2_pos(n, 0);
  c[one][y][y] = c[y][one][y] = 1;  // yz = 0
  c[y][y][z2_pos(n, top)] = -1;     // y^2 = -z^{2n-4}
  Matrix eta(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) eta(a, b) = c[a][b][z2_pos(n, top)];
  Vector unit(d);
  unit[one] = 1;
  return GFrobeniusAlgebra{std::move(H), std::move(eta), std::move(c), std::move(unit)};
}

Z2Manifold z2_frobenius_manifold(int n) {
  if (n < 3) throw BadIndex("the Z/2Z manifold needs n >= 3");
  const int m = 2 * n - 3;
  FrobeniusManifold Fe{flat_coords_A(m), metric_A(m), potential_A(m)};
  FrobeniusManifold FG{flat_coords_D(n), metric_D(n), potential_D(n)};
  Matrix iota_e(m, n - 1), iota_g(n, n - 1);
  for (int i = 0; i < n - 1; ++i) {
    iota_e(2 * i, i) = 1;
    iota_g(i, i) = 1;
  }
  Z2Assembly as = assemble_z2(Fe, FG, iota_e, iota_g);

  Report r;
  r.merge(as.report, "pre_gfm.");
  const GFrobeniusAlgebra alg = z2_frobenius_algebra(n);
  r.add("basis_order", as.coords.size() == alg.module.dim() && as.dim_g == 1 &&
                           as.module.degrees == alg.module.degrees &&
                           as.module.action == alg.module.action);
  r.add("metric_matches_algebra", as.metric == alg.metric);

  // 6 x the cubic form gives the third derivatives at the origin; each
  // ∂ -> -(basis vector) contributes a sign.
  TensorElement cubic = potential_series(as.module, as.potential, as.coords).part(3);
  TensorElement transported = Rational(-6) * cubic;
  GFrobeniusAlgebra t = alg;
  std::string witness;
  try {
    t = gfa_from_cubic(alg.module, alg.metric, transported, alg.unit);
  } catch (const Error& e) {
    witness = e.what();
  }
  r.add("cubic_matches_algebra", witness.empty() && t.mult == alg.mult, witness);

  const MultiPoly y3g = as.y_g.homogeneous_part(3);
  const MultiPoly expected = (var("t0") * var("tstar").pow(2) * Rational(1, 2)).with_vars(as.coords);
  r.add("y3_g", y3g == expected, y3g.to_string());

  auto u = solve_unit(mult_from_potential(as.potential, as.coords, as.metric));
  Vector minus_dt0(as.coords.size());
  minus_dt0[0] = -1;
  r.add("unit_is_minus_dt0", u && *u == minus_dt0);
  return Z2Manifold{std::move(as), std::move(t), std::move(r)};
}

}  // namespace gfrob
