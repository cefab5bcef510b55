#include "doctest.h"
#include "fixtures.hpp"
#include "gfrob/error.hpp"
#include "gfrob/reference.hpp"
#include "gfrob/singularity.hpp"

using namespace gfrob;
using namespace fixtures;

namespace {

// k[G] graded by g, conjugation action, e_g e_h = e_{gh}, η(e_a, e_b) = [ab = e]
GFrobeniusAlgebra group_algebra(const FiniteGroup& G) {
  const int d = G.order();
  std::vector<Matrix> action;
  for (Elem h = 0; h < d; ++h) {
    Matrix m(d, d);
    for (Elem g = 0; g < d; ++g) m(G.conj(h, g), g) = 1;
    action.push_back(m);
  }
  std::vector<Elem> degrees(d);
  for (Elem g = 0; g < d; ++g) degrees[g] = g;
  GradedModule H = make_module(G, degrees, action);
  StructureConstants c(d, std::vector<Vector>(d, Vector(d)));
  Matrix eta(d, d);
  for (Elem a = 0; a < d; ++a)
    for (Elem b = 0; b < d; ++b) {
      c[a][b][G.mul(a, b)] = 1;
      if (G.mul(a, b) == G.identity()) eta(a, b) = 1;
    }
  Vector unit(d);
  unit[G.identity()] = 1;
  return GFrobeniusAlgebra{H, eta, c, unit};
}

TensorElement cubic_of(const GFrobeniusAlgebra& A) {
  const int d = static_cast<int>(A.module.dim());
  TensorElement y;
  y.n = 3;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        Vector ec(d);
        ec[c] = 1;
        y.add({a, b, c}, bilinear(A.metric, A.mult[a][b], ec));
      }
  return y;
}

void check_all(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(c.name, " ", c.witness);
    CHECK(c.passed);
  }
}

MultiPoly t(const std::string& name) { return MultiPoly::variable(name); }

}  // namespace

TEST_CASE("metric checks") {
  check_all(check_metric(Metric{trivial_module(cyclic_group(1), 3), Matrix::identity(3)}));
  for (int n = 3; n <= 6; ++n) {
    const GFrobeniusAlgebra A = z2_frobenius_algebra(n);
    check_all(check_metric(Metric{A.module, A.metric}));
    Matrix bad = A.metric;
    bad(2 * n - 3, 2 * n - 3) = 0;
    const Report r = check_metric(Metric{A.module, bad});
    CHECK_FALSE(r.passed("nondegenerate"));
    CHECK(r.passed("symmetric"));
  }
  // pairing H_e with H_g breaks the grading
  const GradedModule H = z2_mixed_module();
  Matrix eta = Matrix::identity(4);
  eta(0, 2) = eta(2, 0) = 1;
  CHECK_FALSE(check_metric(Metric{H, eta}).passed("grading_preserving"));
  // not ρ-invariant
  Matrix eta2 = Matrix::identity(4);
  eta2(0, 1) = eta2(1, 0) = 1;
  CHECK_FALSE(check_metric(Metric{H, eta2}).passed("g_invariant"));
}

TEST_CASE("group algebras are G-Frobenius algebras") {
  for (const FiniteGroup& G : {cyclic_group(1), cyclic_group(2), cyclic_group(3), symmetric_group(3)}) {
    const GFrobeniusAlgebra A = group_algebra(G);
    check_all(check_gfa(A));
    auto [He, HG] = subalgebras(A);
    CHECK(He.basis.size() == 1);
    CHECK(HG.basis.size() == G.conjugacy_classes().size());
    CHECK(rank(HG.algebra.metric) == HG.basis.size());
    check_all(check_frobenius(HG.algebra));
    check_all(check_frobenius(He.algebra));
  }
}

TEST_CASE("G-Frobenius axioms catch broken data") {
  const GFrobeniusAlgebra A = z2_frobenius_algebra(4);
  GFrobeniusAlgebra b1 = A;
  b1.mult[5][5] = Vector{0, 0, 1, 0, 0, 0};  // y·y = +z^4
  CHECK_FALSE(check_gfa(b1).passed("invariance"));

  GFrobeniusAlgebra b2 = A;
  b2.unit = Vector{0, 1, 0, 0, 0, 0};
  CHECK_FALSE(check_gfa(b2).passed("unit"));

  GFrobeniusAlgebra b3 = A;  // z·y = y leaves the grading
  b3.mult[3][5] = b3.mult[5][3] = Vector{0, 0, 0, 0, 0, 1};
  CHECK_FALSE(check_gfa(b3).passed());

  // trivial G: both subalgebras are the algebra itself
  const MilnorRing R = milnor_ring('A', 3);
  const GFrobeniusAlgebra T{trivial_module(cyclic_group(1), 3), R.metric(), R.mult, Vector{1, 0, 0}};
  check_all(check_gfa(T));
  auto [He, HG] = subalgebras(T);
  CHECK(He.algebra.mult == R.mult);
  CHECK(HG.algebra.mult == R.mult);
  CHECK(HG.algebra.metric == R.metric());
}

TEST_CASE("algebras from cubic forms") {
  for (int n = 3; n <= 5; ++n) {
    const GFrobeniusAlgebra A = z2_frobenius_algebra(n);
    const TensorElement y = cubic_of(A);
    CHECK(is_braided(A.module, y));
    const GFrobeniusAlgebra B = gfa_from_cubic(A.module, A.metric, y, A.unit);
    CHECK(B.mult == A.mult);
    CHECK(cubic_of(B) == y);
  }
  const GFrobeniusAlgebra A = group_algebra(symmetric_group(3));
  CHECK(gfa_from_cubic(A.module, A.metric, cubic_of(A), A.unit).mult == A.mult);
  TensorElement zero;
  zero.n = 3;
  CHECK_THROWS_AS(gfa_from_cubic(A.module, A.metric, zero, A.unit), UnitFails);
  CHECK_THROWS_AS(gfa_from_cubic(A.module, Matrix(6, 6), cubic_of(A), A.unit), DegenerateMetric);
}

TEST_CASE("WDVV") {
  const auto c3 = flat_coords_A(3);
  const MultiPoly phi = reference_potential('A', 3);
  CHECK(wdvv_check(phi, c3, metric_A(3)).passed);
  CHECK_THROWS_AS(wdvv_check(phi, c3, Matrix(3, 3)), DegenerateMetric);

  // Σ a^n Y^n with a = 2
  MultiPoly scaled;
  for (unsigned d = 3; d <= 5; ++d) scaled += Rational(1 << d) * phi.homogeneous_part(d);
  CHECK(wdvv_check(scaled, c3, metric_A(3)).passed);

  // consistent relabeling t0 <-> t2, u for t1
  const MultiPoly relabeled = phi.rename({{"t0", "s2"}, {"t2", "s0"}, {"t1", "u"}});
  const std::vector<std::string> order{"s2", "u", "s0"};
  CHECK(wdvv_check(relabeled, order, metric_A(3)).passed);

  // cubic potential of an associative algebra, η its own ∂_0 contraction
  const MilnorRing R = milnor_ring('A', 4);
  MultiPoly cubic;
  const auto c4 = flat_coords_A(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        Vector ec(4);
        ec[c] = 1;
        cubic += rational(1, 6) * bilinear(R.metric(), R.mult[a][b], ec) * t(c4[a]) * t(c4[b]) * t(c4[c]);
      }
  CHECK(wdvv_check(cubic, c4, R.metric()).passed);

  MultiPoly bad = reference_potential('A', 5);
  bad += (rational(-1, 5) + rational(1, 6)) * t("t3").pow(4) * t("t4");
  const WdvvResult w = wdvv_check(bad, flat_coords_A(5), metric_A(5));
  CHECK_FALSE(w.passed);
  CHECK_FALSE(w.violations.empty());
  CHECK_FALSE(w.first_residual.is_zero());
}

TEST_CASE("multiplication from a potential") {
  const MultiPoly phi = reference_potential('A', 3);
  const StructureConstants c = mult_from_potential(phi, flat_coords_A(3), metric_A(3));
  // Jacobi ring: (-z)(-z) = z^2 = -(-z^2)
  CHECK(c[1][1] == Vector{0, 0, -1});
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(c[a][b] == c[b][a]);
  const StructureConstants at = mult_from_potential(phi, flat_coords_A(3), metric_A(3), {{"t2", 1}, {"t1", 2}});
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(at[a][b] == at[b][a]);

  const std::vector<std::tuple<char, int, std::vector<std::string>, Matrix>> cases{
      {'A', 3, flat_coords_A(3), metric_A(3)},
      {'A', 5, flat_coords_A(5), metric_A(5)},
      {'D', 3, flat_coords_D(3), metric_D(3)},
      {'D', 4, flat_coords_D(4), metric_D(4)}};
  for (const auto& [kind, n, coords, eta] : cases) {
    const MultiPoly p = reference_potential(kind, n);
    const auto u = solve_unit(mult_from_potential(p, coords, eta));
    REQUIRE(u);
    Vector want(coords.size());
    want[0] = -1;
    CHECK(*u == want);
    const auto D = third_derivatives(p, coords);
    for (std::size_t a = 0; a < coords.size(); ++a)
      for (std::size_t b = 0; b < coords.size(); ++b) CHECK(D[0][a][b] == MultiPoly(-eta(a, b)));
    // the unit is a unit at every point, not just the origin
    const StructureConstants far = mult_from_potential(p, coords, eta, {{coords.back(), 3}, {coords[1], -2}});
    for (std::size_t a = 0; a < coords.size(); ++a) {
      Vector ea(coords.size());
      ea[a] = 1;
      CHECK(multiply(far, want, ea) == ea);
    }
  }
}

TEST_CASE("pre-G-Frobenius manifolds") {
  // trivial G: one WDVV check
  const Report triv = check_pre_gfm(trivial_module(cyclic_group(1), 3), metric_A(3), flat_coords_A(3),
                                    reference_potential('A', 3));
  check_all(triv);

  const Z2Assembly as = z2_frobenius_manifold(3).assembly;
  check_all(check_pre_gfm(as.module, as.metric, as.coords, as.potential));
  const MultiPoly bad = as.potential + rational(1, 3) * t("t2").pow(2) * t("tstar").pow(2);
  const Report r = check_pre_gfm(as.module, as.metric, as.coords, bad);
  CHECK(r.passed("wdvv_untwisted"));
  CHECK_FALSE(r.passed("wdvv_invariants"));
}

TEST_CASE("Z/2Z assembly") {
  // same trivially graded manifold on both sides: nothing to add
  const FrobeniusManifold A3{flat_coords_A(3), metric_A(3), reference_potential('A', 3)};
  const Z2Assembly same = assemble_z2(A3, A3, Matrix::identity(3), Matrix::identity(3));
  CHECK(same.dim_v == 0);
  CHECK(same.dim_g == 0);
  CHECK(same.potential == A3.potential);
  CHECK(same.metric == A3.metric);
  check_all(same.report);

  // A_3 and D_3 over the B_2 subspace {t0, t2}
  const FrobeniusManifold D3{flat_coords_D(3), metric_D(3), reference_potential('D', 3)};
  Matrix ie(3, 2), ig(3, 2);
  ie(0, 0) = ie(2, 1) = 1;
  ig(0, 0) = ig(1, 1) = 1;
  const Z2Assembly as = assemble_z2(A3, D3, ie, ig);
  check_all(as.report);
  CHECK(as.coords == std::vector<std::string>{"t0", "t2", "t1", "tstar"});
  CHECK(as.potential == reference_potential('A', 3) + parse_poly("1/2*t0*tstar^2 - 1/4*t2^2*tstar^2"));
  CHECK(as.module.degrees == std::vector<Elem>{0, 0, 0, 1});
  CHECK(as.module.action[1] == diag({1, 1, -1, 1}));
  const Z2Split s = z2_split(as.potential, as.coords, as.dim_i, as.dim_v, as.dim_g);
  CHECK(s.i == as.y_i);
  CHECK(s.v == as.y_v);
  CHECK(s.g == as.y_g);
  CHECK(is_braided(as.module, potential_series(as.module, as.potential, as.coords).part(4)));

  // restrictions disagree on H_i
  FrobeniusManifold D3bad = D3;
  D3bad.potential += rational(1, 2) * t("t2").pow(4);
  CHECK_THROWS_AS(assemble_z2(A3, D3bad, ie, ig), RestrictionMismatch);
  // odd degree in the H_g coordinate
  FrobeniusManifold D3odd = D3;
  D3odd.potential += t("t0") * t("t2") * t("tstar");
  CHECK_THROWS_AS(assemble_z2(A3, D3odd, ie, ig), BlockDegreeViolation);
  // a term mixing H_v and H_g coordinates
  CHECK_THROWS_AS(z2_split(as.potential + t("t1") * t("tstar") * t("t0"), as.coords, 2, 1, 1),
                  BlockDegreeViolation);
}
