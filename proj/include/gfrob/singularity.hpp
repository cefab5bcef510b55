#pragma once

#include <string>
#include <vector>

#include "gfrob/frobenius.hpp"
#include "gfrob/poly.hpp"

namespace gfrob {

/// Milnor ring of A_n (basis 1, z, .., z^{n-1}) or D_n (basis 1, x, .., x^{n-2}, y).
struct MilnorRing {
  char kind = 'A';
  int n = 0;
  std::vector<std::string> basis;
  StructureConstants mult;
  Vector counit;

  /// η(f, g) = ε(fg)
  Matrix metric() const;
  FrobeniusAlgebra algebra() const;
};

/// Throws BadIndex unless n >= 2 (A) or n >= 3 (D).
MilnorRing milnor_ring(char kind, int n);

/// Coefficients of f as a polynomial in `var`: result[k] multiplies var^k.
std::vector<MultiPoly> coefficients_in(const MultiPoly& f, const std::string& var);

/// f modulo the monic var^m + Σ_j lower[j] var^j, m = lower.size().
MultiPoly reduce_monic(const MultiPoly& f, const std::string& var, const std::vector<MultiPoly>& lower);

/// The parameters k0 .. k{m-1} of F_{A_m} = z^{m+1}/(m+1) + Σ k_i z^i.
std::vector<std::string> deformation_params(int m);
MultiPoly unfolding(int m);
/// Reduction modulo F' = z^m + Σ i k_i z^{i-1}.
MultiPoly jacobi_reduce(int m, const MultiPoly& f);
MultiPoly jacobi_multiply(int m, const MultiPoly& f, const MultiPoly& g);
/// Σ_P res_P fg/F' dz: the z^{m-1} coefficient of the reduction of fg.
MultiPoly residue_pair(int m, const MultiPoly& f, const MultiPoly& g);

/// Flat coordinates of A_m: k_i = a_i(t) and the inverse t_i(a), with
/// variables t0.. and a0...
struct UnfoldingChart {
  int m = 0;
  std::vector<std::string> t, a;
  std::vector<MultiPoly> a_of_t;
  std::vector<MultiPoly> t_of_a;
};

UnfoldingChart unfolding_chart(int m);
/// The chart of A_{2n-3}, the indexing used for the Z/2Z examples.
UnfoldingChart flat_coordinates(int n);
/// ∂F/∂t_a = Σ_i ∂a_i/∂t_a z^i, for each flat coordinate.
std::vector<MultiPoly> flat_vector_fields(const UnfoldingChart& chart);

std::vector<std::string> flat_coords_A(int m);
/// η_ij = δ_{i+j, m-1}
Matrix metric_A(int m);
/// The A_m potential (m >= 2) with no terms of degree < 3. Throws IntegrabilityFailure
/// if the residue third derivatives are not those of a potential.
MultiPoly potential_A(int m);

/// t0, t2, .., t_{2m-2}
std::vector<std::string> flat_coords_B(int m);
Matrix metric_B(int m);
/// Φ_{A_{2m-1}} with the odd coordinates set to zero.
MultiPoly potential_B(int m);

/// t0, t2, .., t_{2n-4}, tstar
std::vector<std::string> flat_coords_D(int n);
/// δ on the even block, -1 on tstar
Matrix metric_D(int n);
/// -1/2 a_0(t) tstar^2 with the odd coordinates set to zero.
MultiPoly d_correction(int n);
/// Φ_{A_{2n-3}} + d_correction(n), odd coordinates zero.
MultiPoly potential_D(int n);

/// The Z/2Z-graded module on (1, z^2, .., z^{2n-4}, z, z^3, .., z^{2n-5}, y).
GradedModule z2_milnor_module(int n);
std::vector<std::string> z2_basis_names(int n);
/// C[z,y]/(z^{2n-3}, yz, y^2 + z^{2n-4}) with η(f, g) the z^{2n-4} coefficient of fg.
GFrobeniusAlgebra z2_frobenius_algebra(int n);

struct Z2Manifold {
  Z2Assembly assembly;
  GFrobeniusAlgebra transported;  // from 6 x the cubic part, ∂_{t_i} -> -z^i, ∂_tstar -> -y
  Report report;
};

/// Glues the A_{2n-3} and D_n manifolds along B_{n-1} and compares the
/// cubic part with z2_frobenius_algebra(n).
Z2Manifold z2_frobenius_manifold(int n);

}  // namespace gfrob
