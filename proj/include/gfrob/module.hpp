#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gfrob/group.hpp"
#include "gfrob/groupoid.hpp"
#include "gfrob/matrix.hpp"

namespace gfrob {

/// A finite-dimensional G-graded G-module presented in a homogeneous basis:
/// basis vector k has degree degrees[k], and action[γ] is ρ(γ).
struct GradedModule {
  FiniteGroup group;
  std::vector<Elem> degrees;
  std::vector<Matrix> action;

  std::size_t dim() const { return degrees.size(); }
  const Matrix& rho(Elem g) const { return action[g]; }
};

struct ModuleCheck {
  bool shapes = true;
  bool homomorphism = true;
  bool grading = true;
  bool self_invariant = true;
  std::vector<std::string> problems;

  bool valid() const { return shapes && homomorphism && grading; }
};

ModuleCheck check_module(const GradedModule& H);
/// Builds and validates; throws InvalidAction with the first problem found.
GradedModule make_module(FiniteGroup G, std::vector<Elem> degrees, std::vector<Matrix> action);
/// Every basis vector in degree e and the identity action.
GradedModule trivial_module(const FiniteGroup& G, std::size_t dim);

/// Degree m -> m^{-1}, ρ*(γ) = ρ(γ^{-1})^T on the dual basis.
GradedModule dual_module(const GradedModule& H);
GradedModule direct_sum(const GradedModule& A, const GradedModule& B);

using Index = std::vector<int>;

/// A sparse element of H^{⊗n} in the tensor basis of a GradedModule.
struct TensorElement {
  int n = 0;
  std::map<Index, Rational> terms;

  static TensorElement scalar(const Rational& c);
  static TensorElement basis(const Index& idx, const Rational& c = 1);

  void add(const Index& idx, const Rational& c);
  bool is_zero() const { return terms.empty(); }
  Rational coefficient(const Index& idx) const;

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Rational& s);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Rational& s, TensorElement a) { return a *= s; }
  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

/// Juxtaposition v ⊗ w.
TensorElement tensor_product(const TensorElement& v, const TensorElement& w);

/// G^n-degree of a basis tensor.
GTuple index_degree(const GradedModule& H, const Index& idx);
/// Splits a tensor into its G^n-homogeneous parts.
std::map<GTuple, TensorElement> homogeneous_parts(const GradedModule& H, const TensorElement& v);

/// b_i on adjacent slots i, i+1 (1-based): v ⊗ w -> (deg(v)·w) ⊗ v;
/// inverse: v ⊗ w -> w ⊗ (deg(w)^{-1}·v).
TensorElement braid_act(const GradedModule& H, int i, const TensorElement& v, bool inverse = false);
/// Applies ρ(gpart[j]) in slot j, then moves slot j to slot perm[j].
/// Throws DegreeMismatch unless every term has G^n-degree a.source.
TensorElement arrow_act(const GradedModule& H, const GroupoidArrow& a, const TensorElement& v);
/// Sparse columns of every ρ(γ), shared by repeated tensor actions.
struct SparseAction {
  explicit SparseAction(const GradedModule& H);
  // cols[γ][c] lists the nonzero (row, value) pairs of column c of ρ(γ)
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> cols;
};

/// out += c · (a acting on the basis tensor idx), without degree checks.
void add_arrow_act(const SparseAction& S, const GroupoidArrow& a, const Index& idx,
                   const Rational& c, TensorElement& out);

/// ρ(g) in every slot.
TensorElement diagonal_act(const GradedModule& H, Elem g, const TensorElement& v);
/// Applies the linear map m (target dim x source dim) in every slot.
TensorElement apply_each_slot(const Matrix& m, const TensorElement& v);

/// Basis of H^G, the joint fixed space of every ρ(γ).
std::vector<Vector> invariants_basis(const GradedModule& H);
/// Unit vectors of the degree-e basis elements.
std::vector<Vector> untwisted_basis(const GradedModule& H);

struct Z2Decomposition {
  std::vector<Vector> i;  // fixed by ρ(g) inside H_e
  std::vector<Vector> v;  // -1 eigenspace of ρ(g) inside H_e
  std::vector<Vector> g;  // H_g
};

/// Requires |G| = 2 (NotZ2) and a self-invariant module (InvalidAction).
Z2Decomposition z2_decompose(const GradedModule& H);

/// A certified morphism source -> target: grading-preserving and equivariant.
struct ModuleMorphism {
  GradedModule source;
  GradedModule target;
  Matrix matrix;  // target.dim() x source.dim()
};

/// Throws InvalidMorphism when shapes, grading or equivariance fail.
ModuleMorphism make_morphism(GradedModule source, GradedModule target, Matrix m);

/// The G-submodule spanned by homogeneous, jointly ρ-stable columns of
/// `basis`, together with its inclusion. Throws InvalidMorphism otherwise.
ModuleMorphism submodule_inclusion(const GradedModule& H, const std::vector<Vector>& basis);

}  // namespace gfrob
