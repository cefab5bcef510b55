#include "gfrob/braided.hpp"

#include <algorithm>
#include <numeric>

#include "gfrob/error.hpp"

namespace gfrob {

TensorElement braidize(const GradedModule& H, const TensorElement& v) {
  if (v.n <= 1) return v;
  auto groupoid = groupoid_for(H.group, v.n);
  const SparseAction S(H);
  TensorElement out;
  out.n = v.n;
  for (const auto& [t, part] : homogeneous_parts(H, v)) {
    const auto& arrows = groupoid->arrows_from(t);
    TensorElement sum;
    sum.n = v.n;
    for (const auto& a : arrows)
      for (const auto& [idx, c] : part.terms) add_arrow_act(S, a, idx, c, sum);
    sum *= Rational(1, static_cast<unsigned long>(arrows.size()));
    out += sum;
  }
  return out;
}

TensorElement symmetrize(const TensorElement& v) {
  TensorElement out;
  out.n = v.n;
  if (v.n <= 1) return v;
  std::vector<int> perm(v.n);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    ++count;
    for (const auto& [idx, c] : v.terms) {
      Index next(v.n);
      for (int j = 0; j < v.n; ++j) next[perm[j]] = idx[j];
      out.add(next, c);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  out *= Rational(1, count);
  return out;
}

bool is_braided(const GradedModule& H, const TensorElement& v) {
  for (int i = 1; i < v.n; ++i)
    if (!(braid_act(H, i, v) == v)) return false;
  return true;
}

bool is_symmetric(const TensorElement& v) {
  for (const auto& [idx, c] : v.terms)
    for (int i = 0; i + 1 < v.n; ++i) {
      Index sw = idx;
      std::swap(sw[i], sw[i + 1]);
      if (v.coefficient(sw) != c) return false;
    }
  return true;
}

std::vector<BraidedBasisElement> br_basis(const GradedModule& H, int n) {
  if (n < 0) throw BadIndex("negative tensor degree");
  if (n == 0) return {{GTuple{}, H.group.identity(), TensorElement::scalar(1)}};
  auto groupoid = groupoid_for(H.group, n);
  const std::size_t d = H.dim();

  // Index tuples grouped by the component of their degree tuple.
  std::map<GTuple, GTuple> rep_of;
  std::map<GTuple, Elem> degree_of;
  for (const auto& c : groupoid->components()) {
    for (const auto& m : c.members) rep_of[m] = c.representative();
    degree_of[c.representative()] = c.g_degree;
  }
  std::map<GTuple, std::vector<Index>> by_component;
  if (d > 0) {
    Index idx(n, 0);
    while (true) {
      by_component[rep_of.at(index_degree(H, idx))].push_back(idx);
      int j = n - 1;
      while (j >= 0 && idx[j] == static_cast<int>(d) - 1) idx[j--] = 0;
      if (j < 0) break;
      ++idx[j];
    }
  }

  std::vector<BraidedBasisElement> out;
  for (const auto& [rep, indices] : by_component) {
    std::map<Index, std::size_t> pos;
    for (std::size_t k = 0; k < indices.size(); ++k) pos[indices[k]] = k;
    const std::size_t m = indices.size();
    Matrix M((n - 1) * m, m);
    for (std::size_t k = 0; k < m; ++k) {
      TensorElement e = TensorElement::basis(indices[k]);
      for (int i = 1; i < n; ++i) {
        const std::size_t row0 = (i - 1) * m;
        for (const auto& [idx, c] : braid_act(H, i, e).terms) M(row0 + pos.at(idx), k) += c;
        M(row0 + k, k) -= 1;
      }
    }
    for (const auto& v : nullspace(M)) {
      TensorElement t;
      t.n = n;
      for (std::size_t k = 0; k < m; ++k) t.add(indices[k], v[k]);
      out.push_back({rep, degree_of.at(rep), std::move(t)});
    }
  }
  return out;
}

TensorElement BraidedSeries::part(int k) const {
  auto it = parts.find(k);
  if (it != parts.end()) return it->second;
  TensorElement zero;
  zero.n = k;
  return zero;
}

bool same_module(const GradedModule& a, const GradedModule& b) {
  return a.group == b.group && a.degrees == b.degrees && a.action == b.action;
}

BraidedSeries circ_product(const BraidedSeries& X, const BraidedSeries& Y) {
  if (!same_module(X.module, Y.module)) throw ModuleMismatch("series live on different modules");
  if (X.truncation != Y.truncation) throw ModuleMismatch("series have different truncations");
  BraidedSeries out{X.module, X.truncation, {}};
  for (int k = 0; k <= X.truncation; ++k) {
    TensorElement sum;
    sum.n = k;
    for (int p = 0; p <= k; ++p) {
      auto a = X.parts.find(p);
      auto b = Y.parts.find(k - p);
      if (a == X.parts.end() || b == Y.parts.end()) continue;
      sum += tensor_product(a->second, b->second);
    }
    sum = braidize(X.module, sum);
    if (!sum.is_zero()) out.parts[k] = std::move(sum);
  }
  return out;
}

Rational pair(const TensorElement& x, const TensorElement& v) {
  if (x.n != v.n) throw DegreeMismatch("pairing tensors of degree " + std::to_string(x.n) +
                                       " and " + std::to_string(v.n));
  Rational sum = 0;
  for (const auto& [idx, c] : x.terms) {
    Index rev(idx.rbegin(), idx.rend());
    auto it = v.terms.find(rev);
    if (it != v.terms.end()) sum += c * it->second;
  }
  return sum;
}

TensorElement restrict_form(const TensorElement& x, const std::vector<Vector>& basis) {
  if (basis.empty()) {
    TensorElement out;
    out.n = x.n;
    if (x.n == 0) out = x;
    return out;
  }
  const Matrix B = Matrix::from_columns(basis, basis.front().size());
  return apply_each_slot(B.transpose(), x);
}

namespace {

BraidedSeries restrict_to(const BraidedSeries& X, const std::vector<Vector>& basis) {
  BraidedSeries out{trivial_module(cyclic_group(1), basis.size()), X.truncation, {}};
  for (const auto& [k, x] : X.parts) {
    TensorElement r = restrict_form(x, basis);
    if (!r.is_zero()) out.parts[k] = std::move(r);
  }
  return out;
}

}  // namespace

BraidedSeries restrict_untwisted(const BraidedSeries& X) {
  return restrict_to(X, untwisted_basis(dual_module(X.module)));
}

BraidedSeries restrict_invariants(const BraidedSeries& X) {
  return restrict_to(X, invariants_basis(dual_module(X.module)));
}

BraidedSeries pullback(const ModuleMorphism& phi, const BraidedSeries& X) {
  if (!same_module(X.module, dual_module(phi.target)))
    throw ModuleMismatch("series does not live on the dual of the morphism's target");
  BraidedSeries out{dual_module(phi.source), X.truncation, {}};
  const Matrix T = phi.matrix.transpose();
  for (const auto& [k, x] : X.parts) {
    TensorElement r = apply_each_slot(T, x);
    if (!r.is_zero()) out.parts[k] = std::move(r);
  }
  return out;
}

TensorElement form_from_poly(const MultiPoly& p, const std::vector<std::string>& coords, int n) {
  std::vector<int> slot(p.vars().size());
  for (std::size_t v = 0; v < p.vars().size(); ++v) {
    auto it = std::find(coords.begin(), coords.end(), p.vars()[v]);
    slot[v] = it == coords.end() ? -1 : static_cast<int>(it - coords.begin());
  }
  TensorElement out;
  out.n = n;
  for (const auto& [e, c] : p.terms()) {
    Index idx;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] > 0 && slot[v] < 0) throw UnknownVariable("'" + p.vars()[v] + "' is not a coordinate");
      idx.insert(idx.end(), e[v], slot[v]);
    }
    if (static_cast<int>(idx.size()) != n)
      throw DegreeMismatch("term of degree " + std::to_string(idx.size()) + " in a degree " +
                           std::to_string(n) + " form");
    std::sort(idx.begin(), idx.end());
    std::vector<Index> arrangements;
    do arrangements.push_back(idx);
    while (std::next_permutation(idx.begin(), idx.end()));
    const Rational share = c / Rational(static_cast<long>(arrangements.size()));
    for (const auto& a : arrangements) out.add(a, share);
  }
  return out;
}

MultiPoly poly_from_form(const TensorElement& x, const std::vector<std::string>& coords) {
  std::vector<std::pair<MultiPoly::Exponent, Rational>> terms;
  std::map<MultiPoly::Exponent, Rational> acc;
  for (const auto& [idx, c] : x.terms) {
    MultiPoly::Exponent e(coords.size(), 0);
    for (int k : idx) {
      if (k < 0 || static_cast<std::size_t>(k) >= coords.size())
        throw IndexOutOfRange("tensor index " + std::to_string(k) + " has no coordinate");
      ++e[k];
    }
    acc[e] += c;
  }
  for (auto& [e, c] : acc)
    if (c != 0) terms.emplace_back(e, c);
  return MultiPoly::from_terms(coords, terms);
}

BraidedSeries series_from_poly(const GradedModule& module, const MultiPoly& p,
                               const std::vector<std::string>& coords, int truncation) {
  BraidedSeries out{module, truncation, {}};
  for (int k = 0; k <= truncation; ++k) {
    MultiPoly h = p.homogeneous_part(k);
    if (h.is_zero()) continue;
    out.parts[k] = form_from_poly(h, coords, k);
  }
  return out;
}

}  // namespace gfrob
