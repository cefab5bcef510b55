#pragma once

#include <map>
#include <string>
#include <vector>

#include "gfrob/module.hpp"
#include "gfrob/poly.hpp"

namespace gfrob {

/// (1/|A_t|) Σ_{b ∈ A_t} b·v on each G^n-homogeneous part v of degree t.
TensorElement braidize(const GradedModule& H, const TensorElement& v);
/// (1/n!) Σ_σ σ·v, the braidization for a trivially graded module.
TensorElement symmetrize(const TensorElement& v);

/// Invariant under every generator b_i.
bool is_braided(const GradedModule& H, const TensorElement& v);
bool is_symmetric(const TensorElement& v);

struct BraidedBasisElement {
  GTuple component;  // canonical representative
  Elem g_degree = 0;
  TensorElement tensor;
};

/// Basis of (H^{⊗n})^{B_n}, component by component, from the exact joint
/// kernel of the b_i - 1.
std::vector<BraidedBasisElement> br_basis(const GradedModule& H, int n);

/// Truncated formal sum of braided tensors on `module`; parts[k] has degree k.
struct BraidedSeries {
  GradedModule module;
  int truncation = 0;
  std::map<int, TensorElement> parts;

  TensorElement part(int k) const;
};

/// B(μ(X ⊗ Y)) degree by degree, up to the common truncation.
/// Throws ModuleMismatch for different modules or truncations.
BraidedSeries circ_product(const BraidedSeries& X, const BraidedSeries& Y);

/// x(v) = Σ_I x[I] v[reverse(I)]: slot j of x meets slot n-1-j of v.
/// Throws DegreeMismatch for different tensor degrees.
Rational pair(const TensorElement& x, const TensorElement& v);

/// The n-linear form restricted to the span of `basis` (vectors of the
/// module the form eats), in the coordinates of that basis.
TensorElement restrict_form(const TensorElement& x, const std::vector<Vector>& basis);

/// Restrictions of a series of forms on H* to H_e and to H^G. Both land in
/// symmetric forms; the result lives on a trivially graded module over the
/// trivial group, in the coordinates of untwisted_basis / invariants_basis.
BraidedSeries restrict_untwisted(const BraidedSeries& X);
BraidedSeries restrict_invariants(const BraidedSeries& X);

/// Pulls a series on H* back along φ: K -> H to a series on K*.
/// Throws ModuleMismatch if X does not live on the dual of φ's target.
BraidedSeries pullback(const ModuleMorphism& phi, const BraidedSeries& X);

bool same_module(const GradedModule& a, const GradedModule& b);

/// Polynomial homogeneous of degree n in `coords` -> symmetric tensor with
/// x(v, .., v) = p(v): t^α goes to the average over the arrangements of α.
/// Throws DegreeMismatch for terms of another degree, UnknownVariable for
/// variables outside `coords`.
TensorElement form_from_poly(const MultiPoly& p, const std::vector<std::string>& coords, int n);
/// Inverse on symmetric tensors: the coefficient of t^α sums the tensor
/// entries over every arrangement of α.
MultiPoly poly_from_form(const TensorElement& x, const std::vector<std::string>& coords);
/// Homogeneous parts of p of degree <= truncation as a series on `module`.
BraidedSeries series_from_poly(const GradedModule& module, const MultiPoly& p,
                               const std::vector<std::string>& coords, int truncation);

}  // namespace gfrob
