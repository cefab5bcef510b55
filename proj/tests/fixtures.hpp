#pragma once

#include <random>
#include <vector>

#include "gfrob/group.hpp"
#include "gfrob/matrix.hpp"
#include "gfrob/module.hpp"

namespace fixtures {

using namespace gfrob;

inline Elem s3(const std::vector<int>& one_line) {
  const auto perms = symmetric_group_permutations(3);
  for (std::size_t k = 0; k < perms.size(); ++k)
    if (perms[k] == one_line) return static_cast<Elem>(k);
  return -1;
}

// Transpositions of {0,1,2} in one-line notation.
inline Elem s3_t01() { return s3({1, 0, 2}); }
inline Elem s3_t02() { return s3({2, 1, 0}); }
inline Elem s3_t12() { return s3({0, 2, 1}); }

inline Matrix diag(const std::vector<long>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

// The Z/2Z module on (1, z^2, .., z^{2n-4}, z, z^3, .., z^{2n-5}, y).
inline GradedModule z2_sample_module(int n) {
  FiniteGroup G = cyclic_group(2);
  std::vector<Elem> deg;
  std::vector<long> sign;
  for (int k = 0; k <= 2 * n - 4; k += 2) deg.push_back(0), sign.push_back(1);
  for (int k = 1; k <= 2 * n - 5; k += 2) deg.push_back(0), sign.push_back(-1);
  deg.push_back(1), sign.push_back(1);
  const std::size_t d = deg.size();
  return make_module(G, deg, {Matrix::identity(d), diag(sign)});
}

// Z/2Z: degree e sign rep, degree e trivial, degree g trivial, degree g sign.
inline GradedModule z2_mixed_module() {
  return make_module(cyclic_group(2), {0, 0, 1, 1},
                     {Matrix::identity(4), diag({-1, 1, 1, -1})});
}

// Z/3Z: rotation rep in degree e, trivial line in degree 1, trivial line in degree 2.
inline GradedModule z3_module() {
  FiniteGroup G = cyclic_group(3);
  Matrix r = Matrix::from_rows({{0, -1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  return make_module(G, {0, 0, 1, 2}, {Matrix::identity(4), r, r * r});
}

// S_3: transpositions permuted by conjugation, plus the sign rep in degree e.
inline GradedModule s3_module() {
  FiniteGroup G = symmetric_group(3);
  const std::vector<Elem> tr = {s3_t01(), s3_t02(), s3_t12()};
  std::vector<Matrix> action;
  const auto perms = symmetric_group_permutations(3);
  for (Elem g = 0; g < G.order(); ++g) {
    Matrix m(4, 4);
    for (int c = 0; c < 3; ++c) {
      Elem image = G.conj(g, tr[c]);
      for (int r = 0; r < 3; ++r)
        if (tr[r] == image) m(r, c) = 1;
    }
    // sign of the permutation by counting inversions
    int inv = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (perms[g][a] > perms[g][b]) ++inv;
    m(3, 3) = inv % 2 ? -1 : 1;
    action.push_back(m);
  }
  return make_module(G, {tr[0], tr[1], tr[2], G.identity()}, action);
}

// S_3: 2-dim standard rep in degree e, trivial line in degree e.
inline GradedModule s3_standard_module() {
  FiniteGroup G = symmetric_group(3);
  const auto perms = symmetric_group_permutations(3);
  std::vector<Matrix> action;
  for (Elem g = 0; g < G.order(); ++g) {
    // permutation matrix on e0, e1, e2 restricted to the basis (e0-e2, e1-e2)
    Matrix p(3, 3);
    for (int c = 0; c < 3; ++c) p(perms[g][c], c) = 1;
    Matrix m(3, 3);
    for (int c = 0; c < 2; ++c) {
      Vector v(3);
      v[c] = 1;
      v[2] = -1;
      Vector w = p * v;
      // w = a (e0-e2) + b (e1-e2)
      m(0, c) = w[0];
      m(1, c) = w[1];
    }
    m(2, 2) = 1;
    action.push_back(m);
  }
  return make_module(G, {0, 0, 0}, action);
}

inline std::vector<GradedModule> property_modules() {
  return {trivial_module(cyclic_group(1), 2), z2_sample_module(3), z2_mixed_module(), z3_module(),
          s3_module(), s3_standard_module()};
}

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  return rational(num(rng), den(rng));
}

inline TensorElement random_tensor(std::mt19937& rng, const GradedModule& H, int n, int terms = 4) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(H.dim()) - 1);
  TensorElement t;
  t.n = n;
  if (n == 0) return TensorElement::scalar(random_rational(rng));
  for (int k = 0; k < terms; ++k) {
    Index idx(n);
    for (auto& i : idx) i = pick(rng);
    t.add(idx, random_rational(rng));
  }
  return t;
}

// A random equivariant, grading-preserving map K -> H obtained by averaging.
inline Matrix random_morphism_matrix(std::mt19937& rng, const GradedModule& K, const GradedModule& H) {
  Matrix m(H.dim(), K.dim());
  for (std::size_t r = 0; r < H.dim(); ++r)
    for (std::size_t c = 0; c < K.dim(); ++c)
      if (H.degrees[r] == K.degrees[c]) m(r, c) = random_rational(rng);
  Matrix avg(H.dim(), K.dim());
  const FiniteGroup& G = H.group;
  for (Elem g = 0; g < G.order(); ++g) avg = avg + H.rho(g) * m * K.rho(G.inv(g));
  return Rational(1, G.order()) * avg;
}

}  // namespace fixtures
