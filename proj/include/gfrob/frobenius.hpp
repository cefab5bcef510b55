#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gfrob/braided.hpp"
#include "gfrob/module.hpp"
#include "gfrob/poly.hpp"
#include "gfrob/report.hpp"

namespace gfrob {

/// c[a][b] is e_a · e_b in the basis.
using StructureConstants = std::vector<std::vector<Vector>>;

Vector multiply(const StructureConstants& c, const Vector& x, const Vector& y);
/// η(x, y)
Rational bilinear(const Matrix& eta, const Vector& x, const Vector& y);
/// B^T η B for the columns B of `basis`.
Matrix restrict_metric(const Matrix& eta, const std::vector<Vector>& basis);

struct Metric {
  GradedModule module;
  Matrix matrix;
};

/// symmetric, g_invariant, grading_preserving, nondegenerate (blockwise
/// H_g x H_{g^{-1}}), untwisted_nondegenerate (η_e), invariants_nondegenerate (η^G).
Report check_metric(const Metric& eta);

struct WdvvResult {
  bool passed = true;
  std::vector<std::array<int, 4>> violations;  // (a, b, c, d), sorted
  MultiPoly first_residual;                    // left minus right at violations[0]
};

/// All ∂_a∂_b∂_c Y, indexed by positions in `coords`.
std::vector<std::vector<std::vector<MultiPoly>>> third_derivatives(
    const MultiPoly& Y, const std::vector<std::string>& coords);

/// Σ Y_abk g^kl Y_lcd = Σ Y_bck g^kl Y_lad for all a, b, c, d, as
/// polynomial identities. Throws DegenerateMetric if η is singular.
WdvvResult wdvv_check(const MultiPoly& Y, const std::vector<std::string>& coords, const Matrix& eta);

/// ∂_a ∘ ∂_b = Y_abk g^kl ∂_l evaluated at `point` (missing coordinates are 0).
StructureConstants mult_from_potential(const MultiPoly& Y, const std::vector<std::string>& coords,
                                       const Matrix& eta,
                                       const std::map<std::string, Rational>& point = {});

/// The u with u·x = x for every x, if there is one.
std::optional<Vector> solve_unit(const StructureConstants& c);

/// An ordinary (trivially graded) Frobenius algebra.
struct FrobeniusAlgebra {
  Matrix metric;
  StructureConstants mult;
  Vector unit;
};

/// symmetric_metric, nondegenerate, commutativity, associativity, invariance, unit.
Report check_frobenius(const FrobeniusAlgebra& A);

struct GFrobeniusAlgebra {
  GradedModule module;
  Matrix metric;
  StructureConstants mult;
  Vector unit;
};

/// v_1·v_2 defined by η(v_1·v_2, v_3) = Y3(v_1, v_2, v_3), Y3[abc] = Y3(e_a, e_b, e_c).
/// Throws DegenerateMetric, or UnitFails if η(unit·v, w) != η(v, w).
GFrobeniusAlgebra gfa_from_cubic(const GradedModule& H, const Matrix& eta, const TensorElement& Y3,
                                 const Vector& unit);

/// Per-axiom report: self_invariant, metric.*, equivariance, grading,
/// braided_commutativity, invariance, invariant_unit, associativity, unit.
Report check_gfa(const GFrobeniusAlgebra& A);

struct SubFrobenius {
  std::vector<Vector> basis;  // columns in the coordinates of the big algebra
  FrobeniusAlgebra algebra;
};

/// The Frobenius algebras on H_e and on H^G. Throws InvalidAction if a
/// subspace is not closed under the product.
std::pair<SubFrobenius, SubFrobenius> subalgebras(const GFrobeniusAlgebra& A);

/// Y(t = B s): substitutes t_k = Σ_j B[k][j] s_j.
MultiPoly restrict_potential(const MultiPoly& Y, const std::vector<std::string>& coords,
                             const std::vector<Vector>& basis,
                             const std::vector<std::string>& new_coords);

/// Names for the coordinates of a subspace: a unit-vector column keeps the
/// old name, anything else becomes prefix + position.
std::vector<std::string> subspace_coords(const std::vector<Vector>& basis,
                                         const std::vector<std::string>& coords,
                                         const std::string& prefix);

/// The potential as a series of forms on H*, one part per degree.
BraidedSeries potential_series(const GradedModule& H, const MultiPoly& Y,
                               const std::vector<std::string>& coords);

/// self_invariant, metric.*, braided, g_degree_e, wdvv_untwisted, wdvv_invariants.
/// `coords[k]` names the coordinate dual to basis vector k of H.
Report check_pre_gfm(const GradedModule& H, const Matrix& eta, const std::vector<std::string>& coords,
                     const MultiPoly& Y);

/// An ordinary Frobenius manifold given by flat coordinates, metric and potential.
struct FrobeniusManifold {
  std::vector<std::string> coords;
  Matrix metric;
  MultiPoly potential;
};

struct Z2Assembly {
  GradedModule module = trivial_module(cyclic_group(2), 0);  // basis (H_i, H_v, H_g)
  std::vector<std::string> coords;
  Matrix metric;
  MultiPoly potential;
  MultiPoly y_i, y_v, y_g;
  std::size_t dim_i = 0, dim_v = 0, dim_g = 0;
  Report report;  // check_pre_gfm of the result
};

/// Glues F_e (on H_e) and F^G (on H^G) along the common H_i given by the
/// columns of iota_e and iota_g. H_v and H_g default to the metric-orthogonal
/// complements. Throws RestrictionMismatch if the two restrictions to H_i
/// differ, BlockDegreeViolation if a metric cross block is nonzero or a
/// term of Y_g has odd degree in the H_g coordinates.
Z2Assembly assemble_z2(const FrobeniusManifold& Fe, const FrobeniusManifold& FG,
                       const Matrix& iota_e, const Matrix& iota_g,
                       std::optional<std::vector<Vector>> v_basis = std::nullopt,
                       std::optional<std::vector<Vector>> g_basis = std::nullopt);

struct Z2Split {
  MultiPoly i, v, g;
};

/// Terms only in H_i coordinates, terms with an H_v factor, terms with an
/// H_g factor. Throws BlockDegreeViolation on a term with both.
Z2Split z2_split(const MultiPoly& Y, const std::vector<std::string>& coords, std::size_t dim_i,
                 std::size_t dim_v, std::size_t dim_g);

}  // namespace gfrob
