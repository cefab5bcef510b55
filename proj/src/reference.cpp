#include "gfrob/reference.hpp"

#include <functional>

#include "gfrob/error.hpp"
#include "gfrob/groupoid.hpp"
#include "gfrob/singularity.hpp"

namespace gfrob {

MultiPoly reference_potential(char kind, int n) {
  if (kind == 'A' && n == 3) return parse_poly("-1/2*t0^2*t2 - 1/2*t0*t1^2 - 1/4*t1^2*t2^2 - 1/60*t2^5");
  if (kind == 'A' && n == 5)
    return parse_poly(
        "-1/2*t0^2*t4 - t0*t1*t3 - 1/2*t0*t2^2 - 1/2*t1^2*t2 - 1/4*t1^2*t4^2 - t1*t2*t3*t4"
        " - 1/6*t1*t3^3 - 1/6*t2^3*t4 - 1/2*t2^2*t3^2 - 1/6*t2^2*t4^3 - 1/2*t2*t3^2*t4^2"
        " - 1/6*t3^4*t4 - 1/8*t3^2*t4^4 - 1/210*t4^7");
  if (kind == 'D' && n == 3)
    return parse_poly("-1/2*t0^2*t2 + 1/2*t0*tstar^2 - 1/4*t2^2*tstar^2 - 1/60*t2^5");
  if (kind == 'D' && n == 4)
    return parse_poly(
        "-1/2*t0^2*t4 - 1/2*t0*t2^2 + 1/2*t0*tstar^2 - 1/6*t2^3*t4 - 1/2*t2*t4*tstar^2"
        " - 1/6*t2^2*t4^3 + 1/6*tstar^2*t4^3 - 1/210*t4^7");
  throw BadIndex(std::string("no reference potential for ") + kind + std::to_string(n));
}

std::vector<MultiPoly> reference_chart(int n) {
  if (n == 3) return {parse_poly("-t0 + 1/2*t2^2"), parse_poly("-t1"), parse_poly("-t2")};
  if (n == 4)
    return {parse_poly("-t0 + 1/2*t3^2 + t2*t4 - 1/3*t4^3"), parse_poly("-t1 + 2*t3*t4"),
            parse_poly("-t2 + 3/2*t4^2"), parse_poly("-t3"), parse_poly("-t4")};
  throw BadIndex("no reference chart for n = " + std::to_string(n));
}

std::vector<MultiPoly> reference_chart_inverse_4() {
  return {parse_poly("-a0 + 1/2*a3^2 + a2*a4 - 7/6*a4^3"), parse_poly("-a1 + 2*a3*a4"),
          parse_poly("-a2 + 3/2*a4^2"), parse_poly("-a3"), parse_poly("-a4")};
}

namespace {

using Outcome = std::pair<bool, std::string>;

void attempt(Report& r, const std::string& name, const std::function<Outcome()>& fn) {
  try {
    auto [ok, witness] = fn();
    r.add(name, ok, witness);
  } catch (const std::exception& e) {
    r.add(name, false, e.what());
  }
}

Outcome first_failure(const Report& r) {
  for (const auto& c : r.checks)
    if (!c.passed) return {false, c.name + (c.witness.empty() ? "" : ": " + c.witness)};
  return {true, ""};
}

Outcome same_poly(const MultiPoly& got, const MultiPoly& want) {
  if (got == want) return {true, ""};
  return {false, "got " + got.to_string() + ", difference " + (got - want).to_string()};
}

// Column j: basis[j] with coordinate k sent to target slot index[k] (-1: must vanish).
std::optional<Matrix> transport(const std::vector<Vector>& basis, const std::vector<int>& index,
                                std::size_t target_dim) {
  Matrix P(target_dim, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t k = 0; k < basis[j].size(); ++k) {
      if (basis[j][k] == 0) continue;
      if (index[k] < 0) return std::nullopt;
      P(index[k], j) += basis[j][k];
    }
  return P;
}

// P is an isometric unital algebra map from A to B.
Outcome isomorphic_under(const FrobeniusAlgebra& A, const FrobeniusAlgebra& B, const Matrix& P) {
  const std::size_t d = A.unit.size();
  if (P.rows() != B.unit.size() || P.cols() != d || rank(P) != d) return {false, "not a bijection"};
  std::vector<Vector> img;
  for (std::size_t i = 0; i < d; ++i) img.push_back(P.column(i));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (P * A.mult[i][j] != multiply(B.mult, img[i], img[j]))
        return {false, "product of basis " + std::to_string(i) + "," + std::to_string(j)};
      if (A.metric(i, j) != bilinear(B.metric, img[i], img[j]))
        return {false, "metric at " + std::to_string(i) + "," + std::to_string(j)};
    }
  if (P * A.unit != B.unit) return {false, "unit"};
  return {true, ""};
}

MultiPoly series_sum(const BraidedSeries& s, const std::vector<std::string>& coords) {
  MultiPoly out;
  for (const auto& [k, x] : s.parts) out += poly_from_form(x, coords);
  return out;
}

}  // namespace

Report verify_paper() {
  Report r;

  attempt(r, "group.z2_order_abelian", [] {
    FiniteGroup G = cyclic_group(2);
    return Outcome{G.order() == 2 && G.is_abelian(), ""};
  });
  attempt(r, "poly.d0d0d2_phiA3", [] {
    Rational v = reference_potential('A', 3).diff("t0").diff("t0").diff("t2").constant_term();
    return Outcome{v == -1, v.get_str()};
  });

  attempt(r, "groupoid.gen_arrow_e_g", [] {
    FiniteGroup G = cyclic_group(2);
    GroupoidArrow a = gen_arrow(G, 1, {0, 1});
    return Outcome{a.gpart == std::vector<Elem>{0, 0} && a.perm == std::vector<int>{1, 0}, ""};
  });
  attempt(r, "groupoid.gen_arrow_g_e", [] {
    FiniteGroup G = cyclic_group(2);
    GroupoidArrow a = gen_arrow(G, 1, {1, 0});
    return Outcome{a.gpart == std::vector<Elem>{0, 1} && a.perm == std::vector<int>{1, 0}, ""};
  });
  auto components_ok = [](const std::function<bool(const Groupoid&, const Component&)>& pred) {
    for (const FiniteGroup& G : {cyclic_group(2), cyclic_group(3), symmetric_group(3)})
      for (int n = 1; n <= (G.order() == 6 ? 3 : 4); ++n) {
        const auto gpd = groupoid_for(G, n);
        for (const auto& c : gpd->components())
          if (!pred(*gpd, c)) return Outcome{false, "|G| = " + std::to_string(G.order()) + ", n = " + std::to_string(n)};
      }
    return Outcome{true, ""};
  };
  attempt(r, "groupoid.n_C_is_size_times_m_C", [&] {
    return components_ok([](const Groupoid&, const Component& c) { return c.n_C == c.members.size() * c.m_C; });
  });
  attempt(r, "groupoid.constant_g_degree", [&] {
    return components_ok([](const Groupoid& gpd, const Component& c) {
      for (const auto& t : c.members)
        if (g_degree(gpd.group(), t) != c.g_degree) return false;
      return true;
    });
  });

  attempt(r, "module.z2_sample_valid_self_invariant", [] {
    for (int n = 3; n <= 6; ++n) {
      ModuleCheck mc = check_module(z2_milnor_module(n));
      if (!mc.valid() || !mc.self_invariant) return Outcome{false, "n = " + std::to_string(n)};
    }
    return Outcome{true, ""};
  });
  attempt(r, "module.braid_commutes_with_diagonal", [] {
    const GradedModule H = z2_milnor_module(3);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
          TensorElement v = TensorElement::basis({a, b, c}, rational(a + 1, b + c + 1));
          for (int i = 1; i <= 2; ++i)
            if (braid_act(H, i, diagonal_act(H, 1, v)) != diagonal_act(H, 1, braid_act(H, i, v)))
              return Outcome{false, "b_" + std::to_string(i)};
        }
    return Outcome{true, ""};
  });
  attempt(r, "module.z2_invariants_and_h_v", [] {
    for (int n = 3; n <= 6; ++n) {
      const GradedModule H = z2_milnor_module(n);
      const auto inv = invariants_basis(H);
      const auto dec = z2_decompose(H);
      if (inv.size() != static_cast<std::size_t>(n) || dec.v.size() != static_cast<std::size_t>(n - 2))
        return Outcome{false, "n = " + std::to_string(n)};
    }
    return Outcome{true, ""};
  });

  attempt(r, "braided.identity_on_braided", [] {
    const GradedModule H = z2_milnor_module(3);
    for (int n = 1; n <= 3; ++n)
      for (const auto& b : br_basis(H, n))
        if (braidize(H, b.tensor) != b.tensor) return Outcome{false, "n = " + std::to_string(n)};
    return Outcome{true, ""};
  });
  attempt(r, "braided.z2_no_mixed_v_g", [] {
    const GradedModule Hd = dual_module(z2_milnor_module(3));
    auto slot_kind = [&](int k) {
      if (Hd.degrees[k] != 0) return 'g';
      return Hd.rho(1)(k, k) == -1 ? 'v' : 'i';
    };
    for (const auto& b : br_basis(Hd, 2))
      for (const auto& [idx, c] : b.tensor.terms) {
        const char s0 = slot_kind(idx[0]), s1 = slot_kind(idx[1]);
        if ((s0 == 'v' && s1 == 'g') || (s0 == 'g' && s1 == 'v')) return Outcome{false, "mixed term"};
      }
    return Outcome{true, ""};
  });
  attempt(r, "braided.z2_restrictions_are_A_and_D", [] {
    for (int n = 3; n <= 4; ++n) {
      const Z2Assembly as = z2_frobenius_manifold(n).assembly;
      const BraidedSeries Y = potential_series(as.module, as.potential, as.coords);
      const auto ue = untwisted_basis(as.module);
      const auto ug = invariants_basis(as.module);
      const MultiPoly ye = series_sum(restrict_untwisted(Y), subspace_coords(ue, as.coords, "s"));
      const MultiPoly yg = series_sum(restrict_invariants(Y), subspace_coords(ug, as.coords, "s"));
      if (!(ye == potential_A(2 * n - 3))) return Outcome{false, "H_e, n = " + std::to_string(n)};
      if (!(yg == potential_D(n))) return Outcome{false, "H^G, n = " + std::to_string(n)};
    }
    return Outcome{true, ""};
  });

  attempt(r, "frobenius.z2_metric_axioms", [] {
    for (int n = 3; n <= 6; ++n) {
      const GFrobeniusAlgebra A = z2_frobenius_algebra(n);
      auto o = first_failure(check_metric(Metric{A.module, A.metric}));
      if (!o.first) return Outcome{false, "n = " + std::to_string(n) + ": " + o.second};
    }
    return Outcome{true, ""};
  });
  attempt(r, "frobenius.wdvv_phiA3", [] {
    WdvvResult w = wdvv_check(reference_potential('A', 3), flat_coords_A(3), metric_A(3));
    return Outcome{w.passed, w.passed ? "" : w.first_residual.to_string()};
  });
  attempt(r, "frobenius.cubic_reconstructs_z2_algebra", [] {
    for (int n = 3; n <= 6; ++n)
      if (!z2_frobenius_manifold(n).report.passed("cubic_matches_algebra"))
        return Outcome{false, "n = " + std::to_string(n)};
    return Outcome{true, ""};
  });
  attempt(r, "frobenius.z2_algebra_axioms", [] {
    for (int n = 3; n <= 6; ++n) {
      auto o = first_failure(check_gfa(z2_frobenius_algebra(n)));
      if (!o.first) return Outcome{false, "n = " + std::to_string(n) + ": " + o.second};
    }
    return Outcome{true, ""};
  });
  auto z2_index = [](int n, bool to_d) {
    // z2 basis slot -> Milnor basis slot: z^{2i} -> x^i and y -> y for D, z^p -> z^p for A
    std::vector<int> idx(2 * n - 2, -1);
    for (int i = 0; i <= n - 2; ++i) idx[i] = to_d ? i : 2 * i;
    for (int i = 0; i < n - 2; ++i)
      if (!to_d) idx[n - 1 + i] = 2 * i + 1;
    if (to_d) idx[2 * n - 3] = n - 1;
    return idx;
  };
  attempt(r, "frobenius.invariants_are_D_n", [&] {
    for (int n = 3; n <= 6; ++n) {
      const auto sub = subalgebras(z2_frobenius_algebra(n)).second;
      const auto P = transport(sub.basis, z2_index(n, true), n);
      if (!P) return Outcome{false, "H^G leaves the span of 1, z^2, .., y"};
      auto o = isomorphic_under(sub.algebra, milnor_ring('D', n).algebra(), *P);
      if (!o.first) return Outcome{false, "n = " + std::to_string(n) + ": " + o.second};
    }
    return Outcome{true, ""};
  });
  attempt(r, "frobenius.untwisted_is_A_2n-3", [&] {
    for (int n = 3; n <= 6; ++n) {
      const auto sub = subalgebras(z2_frobenius_algebra(n)).first;
      auto idx = z2_index(n, false);
      const auto P = transport(sub.basis, idx, 2 * n - 3);
      if (!P) return Outcome{false, "H_e contains y"};
      auto o = isomorphic_under(sub.algebra, milnor_ring('A', 2 * n - 3).algebra(), *P);
      if (!o.first) return Outcome{false, "n = " + std::to_string(n) + ": " + o.second};
    }
    return Outcome{true, ""};
  });
  attempt(r, "frobenius.z2_manifold_n3_pre_gfm", [] {
    const Z2Assembly as = z2_frobenius_manifold(3).assembly;
    return first_failure(check_pre_gfm(as.module, as.metric, as.coords, as.potential));
  });
  attempt(r, "frobenius.assemble_n3_decomposition_unique", [] {
    const Z2Assembly as = z2_frobenius_manifold(3).assembly;
    const Z2Split s = z2_split(as.potential, as.coords, as.dim_i, as.dim_v, as.dim_g);
    return Outcome{s.i == as.y_i && s.v == as.y_v && s.g == as.y_g && as.y_i + as.y_v + as.y_g == as.potential, ""};
  });

  attempt(r, "singularity.milnor_A3", [] {
    const MilnorRing R = milnor_ring('A', 3);
    return Outcome{R.basis == std::vector<std::string>{"1", "z", "z^2"} && R.counit == Vector{0, 0, 1}, ""};
  });
  attempt(r, "singularity.milnor_D4", [] {
    const MilnorRing R = milnor_ring('D', 4);
    return Outcome{R.mult[3][3] == Vector{0, 0, -1, 0} && R.mult[1][3] == Vector(4), ""};
  });
  attempt(r, "singularity.flat_metric_constant", [] {
    for (int m = 3; m <= 5; ++m) {
      const UnfoldingChart c = unfolding_chart(m);
      const auto dF = flat_vector_fields(c);
      std::map<std::string, MultiPoly> k_of_t;
      for (int i = 0; i < m; ++i) k_of_t["k" + std::to_string(i)] = c.a_of_t[i];
      const Matrix eta = metric_A(m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          MultiPoly e = residue_pair(m, dF[i], dF[j]).subst(k_of_t);
          if (!(e == MultiPoly(eta(i, j))))
            return Outcome{false, "A_" + std::to_string(m) + " eta_" + std::to_string(i) + std::to_string(j) + " = " + e.to_string()};
        }
    }
    return Outcome{true, ""};
  });
  for (int n : {3, 4})
    attempt(r, "singularity.chart_n" + std::to_string(n), [n] {
      const UnfoldingChart c = flat_coordinates(n);
      const auto want = reference_chart(n);
      for (std::size_t i = 0; i < want.size(); ++i) {
        auto o = same_poly(c.a_of_t[i], want[i]);
        if (!o.first) return Outcome{false, "a" + std::to_string(i) + ": " + o.second};
      }
      if (n == 4) {
        const auto inv = reference_chart_inverse_4();
        for (std::size_t i = 0; i < inv.size(); ++i)
          if (!(c.t_of_a[i] == inv[i])) return Outcome{false, "t" + std::to_string(i) + "(a)"};
      }
      return Outcome{true, ""};
    });
  attempt(r, "singularity.phi_A3", [] { return same_poly(potential_A(3), reference_potential('A', 3)); });
  attempt(r, "singularity.phi_A5", [] { return same_poly(potential_A(5), reference_potential('A', 5)); });
  attempt(r, "singularity.degree_bound", [] {
    for (int m = 2; m <= 8; ++m)
      if (potential_A(m).total_degree() > m + 2) return Outcome{false, "A_" + std::to_string(m)};
    return Outcome{true, ""};
  });
  attempt(r, "singularity.phi_D3", [] { return same_poly(potential_D(3), reference_potential('D', 3)); });
  attempt(r, "singularity.phi_D4", [] {
    const MultiPoly p = potential_D(4);
    if (p.coefficient({{"tstar", 2}, {"t4", 3}}) != rational(1, 6)) return Outcome{false, "tstar^2*t4^3"};
    return same_poly(p, reference_potential('D', 4));
  });
  attempt(r, "singularity.z2_n3_dim_and_y_squared", [] {
    const GFrobeniusAlgebra A = z2_frobenius_algebra(3);
    return Outcome{A.module.dim() == 4 && A.mult[3][3] == Vector{0, -1, 0, 0}, ""};
  });
  attempt(r, "singularity.eta_y_y", [] {
    for (int n = 3; n <= 6; ++n) {
      const GFrobeniusAlgebra A = z2_frobenius_algebra(n);
      if (A.metric(2 * n - 3, 2 * n - 3) != -1) return Outcome{false, "n = " + std::to_string(n)};
    }
    return Outcome{true, ""};
  });
  attempt(r, "singularity.y_g_n3", [] {
    return same_poly(z2_frobenius_manifold(3).assembly.y_g, parse_poly("1/2*t0*tstar^2 - 1/4*t2^2*tstar^2"));
  });
  attempt(r, "singularity.cubic_y_g", [] {
    for (int n = 3; n <= 6; ++n)
      if (!z2_frobenius_manifold(n).report.passed("y3_g")) return Outcome{false, "n = " + std::to_string(n)};
    return Outcome{true, ""};
  });
  return r;
}

}  // namespace gfrob
