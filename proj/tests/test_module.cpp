#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "gfrob/error.hpp"
#include "gfrob/module.hpp"

using namespace gfrob;
using namespace fixtures;

namespace {

std::vector<Index> all_indices(int dim, int n) {
  std::vector<Index> out;
  Index idx(n, 0);
  while (true) {
    out.push_back(idx);
    int j = n - 1;
    while (j >= 0 && idx[j] == dim - 1) idx[j--] = 0;
    if (j < 0) break;
    ++idx[j];
  }
  return out;
}

}  // namespace

TEST_CASE("module validation") {
  auto t = check_module(trivial_module(cyclic_group(1), 3));
  CHECK(t.valid());
  CHECK(t.self_invariant);

  for (int n = 3; n <= 6; ++n) {
    auto r = check_module(z2_sample_module(n));
    CHECK(r.valid());
    CHECK(r.self_invariant);
  }
  GradedModule bad = z2_sample_module(3);
  bad.action[1](3, 3) = -1;
  auto r = check_module(bad);
  CHECK(r.valid());
  CHECK_FALSE(r.self_invariant);

  // ρ(g) mixing degrees e and g
  Matrix swap = Matrix::from_rows({{0, 1}, {1, 0}});
  CHECK_THROWS_AS(make_module(cyclic_group(2), {0, 1}, {Matrix::identity(2), swap}), InvalidAction);
  // not a homomorphism
  CHECK_THROWS_AS(make_module(cyclic_group(2), {0, 0}, {Matrix::identity(2), diag({2, 1})}),
                  InvalidAction);
  CHECK(check_module(s3_module()).self_invariant);
  CHECK(check_module(z3_module()).valid());
}

TEST_CASE("dual modules") {
  auto H = z3_module();
  auto D = dual_module(H);
  CHECK(D.degrees == std::vector<Elem>{0, 0, 2, 1});
  auto DD = dual_module(D);
  CHECK(DD.degrees == H.degrees);
  CHECK(DD.action == H.action);
  CHECK(check_module(D).valid());
  CHECK(check_module(dual_module(s3_module())).valid());
  auto T = trivial_module(cyclic_group(1), 2);
  CHECK(dual_module(T).degrees == T.degrees);
}

TEST_CASE("braiding on tensors") {
  auto H = z2_sample_module(3);  // basis (1, z^2, z, y)
  auto out = braid_act(H, 1, TensorElement::basis({3, 2}));
  CHECK(out == TensorElement::basis({2, 3}, -1));
  // degree-e first factor: plain transposition
  CHECK(braid_act(H, 1, TensorElement::basis({2, 3})) == TensorElement::basis({3, 2}));
  CHECK_THROWS_AS(braid_act(H, 2, TensorElement::basis({2, 3})), IndexOutOfRange);

  std::mt19937 rng(3);
  for (const auto& M : property_modules())
    for (int n = 2; n <= 4; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        auto v = random_tensor(rng, M, n);
        for (int i = 1; i < n; ++i) {
          CHECK(braid_act(M, i, braid_act(M, i, v), true) == v);
          CHECK(braid_act(M, i, braid_act(M, i, v, true)) == v);
        }
      }
      for (const auto& idx : all_indices(static_cast<int>(M.dim()), n)) {
        auto e = TensorElement::basis(idx);
        auto b = [&](int i, const TensorElement& x) { return braid_act(M, i, x); };
        for (int i = 1; i + 1 < n; ++i) CHECK(b(i, b(i + 1, b(i, e))) == b(i + 1, b(i, b(i + 1, e))));
        if (n == 4) CHECK(b(1, b(3, e)) == b(3, b(1, e)));
        for (int i = 1; i < n; ++i) {
          GTuple expected = braid_gen_action(M.group, i, index_degree(M, idx));
          for (const auto& [j, c] : b(i, e).terms) CHECK(index_degree(M, j) == expected);
        }
      }
    }
}

TEST_CASE("arrow action") {
  auto H = z2_mixed_module();  // basis 0 is in the -1 eigenspace, degree e
  GroupoidArrow a{{0, 0}, {1, 0}, {0, 1}};
  CHECK(arrow_act(H, a, TensorElement::basis({0, 1})) == TensorElement::basis({0, 1}, -1));
  CHECK(arrow_act(H, identity_arrow(H.group, {0, 1}), TensorElement::basis({0, 2})) ==
        TensorElement::basis({0, 2}));
  CHECK_THROWS_AS(arrow_act(H, a, TensorElement::basis({0, 2})), DegreeMismatch);

  std::mt19937 rng(5);
  for (const auto& M : property_modules())
    for (int n = 2; n <= 3; ++n) {
      Groupoid gr(M.group, n);
      std::uniform_int_distribution<int> pick(0, static_cast<int>(M.dim()) - 1), gen(1, n - 1);
      for (int trial = 0; trial < 100; ++trial) {
        Index idx(n);
        for (auto& k : idx) k = pick(rng);
        auto v = TensorElement::basis(idx, random_rational(rng));
        GTuple t = index_degree(M, idx);
        int i = gen(rng), j = gen(rng);
        auto a1 = gen_arrow(M.group, i, t);
        auto a2 = gen_arrow(M.group, j, arrow_target(M.group, a1));
        CHECK(arrow_act(M, compose_arrows(M.group, a2, a1), v) ==
              braid_act(M, j, braid_act(M, i, v)));
        CHECK(arrow_act(M, gen_arrow_inverse(M.group, i, t), v) == braid_act(M, i, v, true));
        // every realized arrow acts like its braid word
        const auto& arrows = gr.arrows_from(t);
        const auto& a = arrows[trial % arrows.size()];
        TensorElement w = v;
        for (int s : gr.word_for(a)) w = braid_act(M, s > 0 ? s : -s, w, s < 0);
        CHECK(arrow_act(M, a, v) == w);
      }
    }
}

TEST_CASE("diagonal action") {
  auto H = z2_sample_module(3);
  CHECK(diagonal_act(H, 1, TensorElement::basis({2, 2})) == TensorElement::basis({2, 2}));
  CHECK(diagonal_act(H, 1, TensorElement::basis({2, 0})) == TensorElement::basis({2, 0}, -1));
  std::mt19937 rng(9);
  for (const auto& M : property_modules())
    for (int trial = 0; trial < 30; ++trial) {
      auto v = random_tensor(rng, M, 3);
      CHECK(diagonal_act(M, M.group.identity(), v) == v);
      for (Elem g = 0; g < M.group.order(); ++g)
        for (int i = 1; i <= 2; ++i)
          CHECK(diagonal_act(M, g, braid_act(M, i, v)) == braid_act(M, i, diagonal_act(M, g, v)));
    }
}

TEST_CASE("invariants and the Z/2Z decomposition") {
  auto T = trivial_module(cyclic_group(1), 3);
  CHECK(invariants_basis(T).size() == 3);
  CHECK(untwisted_basis(T).size() == 3);
  for (int n = 3; n <= 6; ++n) {
    auto H = z2_sample_module(n);
    auto inv = invariants_basis(H);
    CHECK(inv.size() == static_cast<std::size_t>(n));
    auto z = z2_decompose(H);
    CHECK(z.i.size() == static_cast<std::size_t>(n - 1));
    CHECK(z.v.size() == static_cast<std::size_t>(n - 2));
    CHECK(z.g.size() == 1);
    CHECK(z.i.size() + z.v.size() + z.g.size() == H.dim());
    // H_v is spanned by the odd powers, which sit right after the even ones
    for (std::size_t k = 0; k < z.v.size(); ++k) CHECK(z.v[k][n - 1 + k] == 1);
    // projectors onto the three pieces sum to the identity
    std::vector<Vector> all = z.i;
    all.insert(all.end(), z.v.begin(), z.v.end());
    all.insert(all.end(), z.g.begin(), z.g.end());
    CHECK(rank(Matrix::from_columns(all, H.dim())) == H.dim());
  }
  CHECK_THROWS_AS(z2_decompose(z3_module()), NotZ2);
}

TEST_CASE("module morphisms") {
  std::mt19937 rng(13);
  for (const auto& M : property_modules()) {
    auto K = direct_sum(M, M);
    Matrix m = random_morphism_matrix(rng, K, M);
    auto phi = make_morphism(K, M, m);
    CHECK(phi.matrix.rows() == M.dim());
  }
  auto H = z2_sample_module(3);
  Matrix not_graded(4, 4);
  not_graded(3, 0) = 1;
  CHECK_THROWS_AS(make_morphism(H, H, not_graded), InvalidMorphism);
  Matrix not_equivariant(4, 4);
  not_equivariant(2, 0) = 1;
  CHECK_THROWS_AS(make_morphism(H, H, not_equivariant), InvalidMorphism);

  auto z = z2_decompose(H);
  auto inc = submodule_inclusion(H, z.i);
  CHECK(inc.source.dim() == 2);
  CHECK_THROWS_AS(submodule_inclusion(H, {Vector{0, 0, 1, 1}}), InvalidMorphism);
}
