#include <random>

#include "doctest.h"
#include "gfrob/error.hpp"
#include "gfrob/reference.hpp"
#include "gfrob/singularity.hpp"

using namespace gfrob;

namespace {

MultiPoly z(int k) { return MultiPoly::variable("z").pow(k); }
MultiPoly k(int i) { return MultiPoly::variable("k" + std::to_string(i)); }

std::map<std::string, MultiPoly> zero_params(int m) {
  std::map<std::string, MultiPoly> out;
  for (const auto& p : deformation_params(m)) out[p] = MultiPoly();
  return out;
}

MultiPoly random_element(std::mt19937& rng, int m) {
  std::uniform_int_distribution<int> c(-3, 3), deg(0, m + 1), par(0, m - 1);
  MultiPoly f;
  for (int j = 0; j < 4; ++j) {
    MultiPoly term = z(deg(rng)) * rational(c(rng), 1 + (j % 2));
    if (j % 2) term *= k(par(rng));
    f += term;
  }
  return f;
}

std::map<std::string, MultiPoly> k_of_t(const UnfoldingChart& c) {
  std::map<std::string, MultiPoly> out;
  for (int i = 0; i < c.m; ++i) out["k" + std::to_string(i)] = c.a_of_t[i];
  return out;
}

MultiPoly t(const std::string& name) { return MultiPoly::variable(name); }

}  // namespace

TEST_CASE("Milnor rings") {
  const MilnorRing A3 = milnor_ring('A', 3);
  CHECK(A3.basis == std::vector<std::string>{"1", "z", "z^2"});
  CHECK(A3.counit == Vector{0, 0, 1});
  for (int n = 2; n <= 6; ++n) {
    const MilnorRing A = milnor_ring('A', n);
    CHECK(A.basis.size() == static_cast<std::size_t>(n));
    CHECK(A.mult[n - 1][1] == Vector(n));
    CHECK(check_frobenius(A.algebra()).passed());
  }
  const MilnorRing D4 = milnor_ring('D', 4);
  CHECK(D4.basis == std::vector<std::string>{"1", "x", "x^2", "y"});
  CHECK(D4.mult[3][3] == Vector{0, 0, -1, 0});
  CHECK(D4.mult[1][3] == Vector(4));
  CHECK(D4.mult[1][2] == Vector(4));
  CHECK(D4.counit == Vector{0, 0, 1, 0});
  for (int n = 3; n <= 7; ++n) {
    const MilnorRing D = milnor_ring('D', n);
    CHECK(D.basis.size() == static_cast<std::size_t>(n));
    CHECK(check_frobenius(D.algebra()).passed());
    CHECK(D.metric() == metric_D(n));
  }
  CHECK_THROWS_AS(milnor_ring('A', 1), BadIndex);
  CHECK_THROWS_AS(milnor_ring('D', 2), BadIndex);
  CHECK_THROWS_AS(milnor_ring('E', 6), BadIndex);
}

TEST_CASE("Jacobi ring of the unfolding") {
  CHECK(unfolding(2) == rational(1, 3) * z(3) + k(1) * z(1) + k(0));
  for (int m = 2; m <= 6; ++m)
    for (int a = 0; a < m + 2; ++a)
      for (int b = 0; b < m + 2; ++b) {
        const MultiPoly r = jacobi_multiply(m, z(a), z(b)).subst(zero_params(m));
        CHECK(r == (a + b <= m - 1 ? z(a + b) : MultiPoly()));
      }
  CHECK(jacobi_multiply(3, z(1), z(2)) == Rational(-2) * k(2) * z(1) - k(1));

  std::mt19937 rng(5);
  for (int m = 2; m <= 6; ++m)
    for (int trial = 0; trial < 15; ++trial) {
      const MultiPoly f = random_element(rng, m), g = random_element(rng, m), h = random_element(rng, m);
      const MultiPoly fg = jacobi_multiply(m, f, g);
      CHECK(jacobi_reduce(m, fg) == fg);
      CHECK(fg.degree_in("z") <= static_cast<unsigned>(m - 1));
      CHECK(fg == jacobi_multiply(m, g, f));
      CHECK(jacobi_multiply(m, fg, h) == jacobi_multiply(m, f, jacobi_multiply(m, g, h)));
      CHECK(jacobi_multiply(m, f, 1) == jacobi_reduce(m, f));
      CHECK(residue_pair(m, fg, h) == residue_pair(m, f, jacobi_multiply(m, g, h)));
    }
}

TEST_CASE("residue pairing at the origin is the counit pairing") {
  for (int m = 2; m <= 6; ++m) {
    const Matrix eta = milnor_ring('A', m).metric();
    CHECK(eta == metric_A(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) CHECK(residue_pair(m, z(i), z(j)).subst(zero_params(m)) == MultiPoly(eta(i, j)));
    CHECK(residue_pair(m, 1, 1).is_zero());
  }
}

TEST_CASE("flat coordinates") {
  const UnfoldingChart c3 = flat_coordinates(3);
  CHECK(c3.m == 3);
  const auto want3 = reference_chart(3);
  for (int i = 0; i < 3; ++i) CHECK(c3.a_of_t[i] == want3[i]);
  const UnfoldingChart c4 = flat_coordinates(4);
  CHECK(c4.m == 5);
  const auto want4 = reference_chart(4);
  const auto inv4 = reference_chart_inverse_4();
  for (int i = 0; i < 5; ++i) {
    CHECK(c4.a_of_t[i] == want4[i]);
    CHECK(c4.t_of_a[i] == inv4[i]);
  }

  for (int m = 2; m <= 7; ++m) {
    const UnfoldingChart c = unfolding_chart(m);
    std::map<std::string, MultiPoly> a_sub, t_sub;
    for (int i = 0; i < m; ++i) {
      a_sub[c.t[i]] = c.t_of_a[i];
      t_sub[c.a[i]] = c.a_of_t[i];
    }
    for (int i = 0; i < m; ++i) {
      CHECK(c.a_of_t[i].subst(a_sub) == t(c.a[i]));
      CHECK(c.t_of_a[i].subst(t_sub) == t(c.t[i]));
      CHECK(c.a_of_t[i].homogeneous_part(1) == -t(c.t[i]));
      const MultiPoly rest = c.a_of_t[i] + t(c.t[i]);
      for (int j = 0; j <= i + 1 && j < m; ++j) CHECK(rest.degree_in(c.t[j]) == 0);
    }
  }
  CHECK_THROWS_AS(flat_coordinates(1), BadIndex);
}

TEST_CASE("the residue metric is constant in flat coordinates") {
  for (int m = 2; m <= 5; ++m) {
    const UnfoldingChart c = unfolding_chart(m);
    const auto dF = flat_vector_fields(c);
    const auto sub = k_of_t(c);
    const Matrix eta = metric_A(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) CHECK(residue_pair(m, dF[i], dF[j]).subst(sub) == MultiPoly(eta(i, j)));
  }
}

TEST_CASE("A potentials") {
  CHECK(potential_A(3) == reference_potential('A', 3));
  const MultiPoly phi5 = potential_A(5);
  CHECK(phi5 == reference_potential('A', 5));
  CHECK(phi5.coefficient({{"t4", 7}}) == rational(-1, 210));
  for (int m = 2; m <= 7; ++m) {
    const MultiPoly phi = potential_A(m);
    CHECK(phi.total_degree() <= m + 2);
    for (unsigned d = 0; d < 3; ++d) CHECK(phi.homogeneous_part(d).is_zero());
    CHECK(wdvv_check(phi, flat_coords_A(m), metric_A(m)).passed);
  }
  // third derivatives against residues computed directly
  for (int m = 3; m <= 4; ++m) {
    const UnfoldingChart c = unfolding_chart(m);
    const auto dF = flat_vector_fields(c);
    const auto sub = k_of_t(c);
    const auto D = third_derivatives(potential_A(m), c.t);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int e = 0; e < m; ++e)
          CHECK(D[a][b][e] == residue_pair(m, jacobi_multiply(m, dF[a], dF[b]), dF[e]).subst(sub).with_vars(c.t));
  }
}

TEST_CASE("B and D potentials") {
  CHECK(potential_D(3) == reference_potential('D', 3));
  const MultiPoly phiD4 = potential_D(4);
  CHECK(phiD4 == reference_potential('D', 4));
  CHECK(phiD4.coefficient({{"tstar", 2}, {"t4", 3}}) == rational(1, 6));
  CHECK(flat_coords_D(4) == std::vector<std::string>{"t0", "t2", "t4", "tstar"});

  for (int n = 3; n <= 5; ++n) {
    const int m = 2 * n - 3;
    std::map<std::string, MultiPoly> odd;
    for (int i = 1; i < m; i += 2) odd["t" + std::to_string(i)] = MultiPoly();
    const MultiPoly phiB = potential_B(n - 1);
    CHECK(potential_D(n).subst("tstar", MultiPoly()) == phiB);
    CHECK(phiB == potential_A(m).subst(odd));
    CHECK(wdvv_check(potential_D(n), flat_coords_D(n), metric_D(n)).passed);
    CHECK(wdvv_check(phiB, flat_coords_B(n - 1), metric_B(n - 1)).passed);

    // ∂_0∂_a∂_b Φ_D = -η_ab, constant
    const auto coords = flat_coords_D(n);
    const Matrix eta = metric_D(n);
    const auto D = third_derivatives(potential_D(n), coords);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) CHECK(D[0][a][b] == MultiPoly(-eta(a, b)));

    // origin product under ∂_{t_2i} -> -x^i, ∂_tstar -> -y is the D_n Milnor ring
    const StructureConstants c = mult_from_potential(potential_D(n), coords, eta);
    const MilnorRing R = milnor_ring('D', n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int l = 0; l < n; ++l) CHECK(R.mult[a][b][l] == -c[a][b][l]);
  }
  CHECK_THROWS_AS(potential_D(2), BadIndex);
}

TEST_CASE("WDVV detects a perturbed potential") {
  MultiPoly bad = reference_potential('A', 5) + rational(1, 7) * t("t1") * t("t3").pow(3);
  const WdvvResult w = wdvv_check(bad, flat_coords_A(5), metric_A(5));
  CHECK_FALSE(w.passed);
  REQUIRE_FALSE(w.violations.empty());
  CHECK_FALSE(w.first_residual.is_zero());
}

TEST_CASE("Z/2Z Frobenius algebra") {
  const GFrobeniusAlgebra A3 = z2_frobenius_algebra(3);
  CHECK(A3.module.dim() == 4);
  CHECK(z2_basis_names(3) == std::vector<std::string>{"1", "z^2", "z", "y"});
  CHECK(A3.mult[3][3] == Vector{0, -1, 0, 0});
  for (int n = 3; n <= 6; ++n) {
    const GFrobeniusAlgebra A = z2_frobenius_algebra(n);
    CHECK(A.module.dim() == static_cast<std::size_t>(2 * n - 2));
    CHECK(A.metric(2 * n - 3, 2 * n - 3) == -1);
    const Report r = check_gfa(A);
    for (const auto& c : r.checks) {
      INFO(c.name, " ", c.witness);
      CHECK(c.passed);
    }
  }
  // y·y = +z^{2n-4} is no longer invariant: η(y·y, 1) = 1 but η(y, y) = -1
  GFrobeniusAlgebra bad = z2_frobenius_algebra(4);
  bad.mult[5][5] = Vector{0, 0, 1, 0, 0, 0};
  CHECK_FALSE(check_gfa(bad).passed("invariance"));
}

TEST_CASE("Z/2Z Frobenius manifold") {
  const Z2Manifold M3 = z2_frobenius_manifold(3);
  CHECK(M3.assembly.y_g == parse_poly("1/2*t0*tstar^2 - 1/4*t2^2*tstar^2"));
  CHECK(M3.assembly.coords == std::vector<std::string>{"t0", "t2", "t1", "tstar"});
  for (int n = 3; n <= 6; ++n) {
    const Z2Manifold M = z2_frobenius_manifold(n);
    for (const auto& c : M.report.checks) {
      INFO("n = ", n, " ", c.name, " ", c.witness);
      CHECK(c.passed);
    }
    CHECK(M.assembly.y_g.homogeneous_part(3) == parse_poly("1/2*t0*tstar^2"));
    CHECK(M.transported.mult == z2_frobenius_algebra(n).mult);
  }
}
