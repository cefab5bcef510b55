#include "gfrob/module.hpp"

#include <string>

#include "gfrob/error.hpp"

namespace gfrob {

namespace {

bool square_of(const Matrix& m, std::size_t d) { return m.rows() == d && m.cols() == d; }

// Nonzero entries of column c as (row, value).
std::vector<std::pair<int, Rational>> sparse_column(const Matrix& m, int c) {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m(r, c) != 0) out.emplace_back(static_cast<int>(r), m(r, c));
  return out;
}

void check_index(const GradedModule& H, const Index& idx) {
  for (int k : idx)
    if (k < 0 || k >= static_cast<int>(H.dim()))
      throw IndexOutOfRange("basis index " + std::to_string(k) + " out of range");
}

}  // namespace

ModuleCheck check_module(const GradedModule& H) {
  ModuleCheck r;
  const FiniteGroup& G = H.group;
  const std::size_t d = H.dim();
  if (H.action.size() != static_cast<std::size_t>(G.order())) {
    r.shapes = false;
    r.problems.push_back("need one action matrix per group element");
  }
  for (std::size_t g = 0; g < H.action.size(); ++g)
    if (!square_of(H.action[g], d)) {
      r.shapes = false;
      r.problems.push_back("action matrix of element " + std::to_string(g) + " is not " +
                           std::to_string(d) + "x" + std::to_string(d));
    }
  for (Elem m : H.degrees)
    if (m < 0 || m >= G.order()) {
      r.shapes = false;
      r.problems.push_back("degree " + std::to_string(m) + " is not a group element");
    }
  if (!r.shapes) {
    r.homomorphism = r.grading = r.self_invariant = false;
    return r;
  }

  if (!(H.rho(G.identity()) == Matrix::identity(d))) {
    r.homomorphism = false;
    r.problems.push_back("rho(e) is not the identity");
  }
  for (Elem a = 0; a < G.order() && r.homomorphism; ++a)
    for (Elem b = 0; b < G.order(); ++b)
      if (!(H.rho(G.mul(a, b)) == H.rho(a) * H.rho(b))) {
        r.homomorphism = false;
        r.problems.push_back("rho(" + std::to_string(a) + "*" + std::to_string(b) +
                             ") != rho(" + std::to_string(a) + ")rho(" + std::to_string(b) +
                             ")");
        break;
      }

  for (Elem g = 0; g < G.order(); ++g)
    for (std::size_t row = 0; row < d; ++row)
      for (std::size_t c = 0; c < d; ++c)
        if (H.rho(g)(row, c) != 0 && H.degrees[row] != G.conj(g, H.degrees[c])) {
          if (r.grading)
            r.problems.push_back("rho(" + std::to_string(g) + ") maps basis vector " +
                                 std::to_string(c) + " out of degree " +
                                 std::to_string(G.conj(g, H.degrees[c])));
          r.grading = false;
        }

  for (std::size_t k = 0; k < d; ++k) {
    const Matrix& m = H.rho(H.degrees[k]);
    for (std::size_t row = 0; row < d; ++row)
      if (m(row, k) != (row == k ? 1 : 0)) {
        if (r.self_invariant)
          r.problems.push_back("basis vector " + std::to_string(k) +
                               " is moved by its own degree");
        r.self_invariant = false;
        break;
      }
  }
  return r;
}

GradedModule make_module(FiniteGroup G, std::vector<Elem> degrees, std::vector<Matrix> action) {
  GradedModule H{std::move(G), std::move(degrees), std::move(action)};
  ModuleCheck r = check_module(H);
  if (!r.valid()) throw InvalidAction(r.problems.front());
  return H;
}

GradedModule trivial_module(const FiniteGroup& G, std::size_t dim) {
  return GradedModule{G, std::vector<Elem>(dim, G.identity()),
                      std::vector<Matrix>(G.order(), Matrix::identity(dim))};
}

GradedModule dual_module(const GradedModule& H) {
  const FiniteGroup& G = H.group;
  GradedModule D{G, {}, {}};
  for (Elem m : H.degrees) D.degrees.push_back(G.inv(m));
  for (Elem g = 0; g < G.order(); ++g) D.action.push_back(H.rho(G.inv(g)).transpose());
  return D;
}

GradedModule direct_sum(const GradedModule& A, const GradedModule& B) {
  if (!(A.group == B.group)) throw ModuleMismatch("direct sum over different groups");
  const std::size_t a = A.dim(), b = B.dim();
  GradedModule S{A.group, A.degrees, {}};
  S.degrees.insert(S.degrees.end(), B.degrees.begin(), B.degrees.end());
  for (Elem g = 0; g < A.group.order(); ++g) {
    Matrix m(a + b, a + b);
    for (std::size_t r = 0; r < a; ++r)
      for (std::size_t c = 0; c < a; ++c) m(r, c) = A.rho(g)(r, c);
    for (std::size_t r = 0; r < b; ++r)
      for (std::size_t c = 0; c < b; ++c) m(a + r, a + c) = B.rho(g)(r, c);
    S.action.push_back(std::move(m));
  }
  return S;
}

TensorElement TensorElement::scalar(const Rational& c) {
  TensorElement t;
  t.add({}, c);
  return t;
}

TensorElement TensorElement::basis(const Index& idx, const Rational& c) {
  TensorElement t;
  t.n = static_cast<int>(idx.size());
  t.add(idx, c);
  return t;
}

void TensorElement::add(const Index& idx, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(idx, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

Rational TensorElement::coefficient(const Index& idx) const {
  auto it = terms.find(idx);
  return it == terms.end() ? Rational(0) : it->second;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (o.n != n && !o.is_zero() && !is_zero()) throw DegreeMismatch("adding tensors of different degree");
  if (is_zero()) n = o.n;
  for (const auto& [idx, c] : o.terms) add(idx, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  if (o.n != n && !o.is_zero() && !is_zero()) throw DegreeMismatch("subtracting tensors of different degree");
  if (is_zero()) n = o.n;
  for (const auto& [idx, c] : o.terms) add(idx, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [idx, c] : terms) c *= s;
  return *this;
}

TensorElement tensor_product(const TensorElement& v, const TensorElement& w) {
  TensorElement out;
  out.n = v.n + w.n;
  for (const auto& [a, x] : v.terms)
    for (const auto& [b, y] : w.terms) {
      Index idx = a;
      idx.insert(idx.end(), b.begin(), b.end());
      out.add(idx, x * y);
    }
  return out;
}

GTuple index_degree(const GradedModule& H, const Index& idx) {
  check_index(H, idx);
  GTuple t(idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) t[j] = H.degrees[idx[j]];
  return t;
}

std::map<GTuple, TensorElement> homogeneous_parts(const GradedModule& H, const TensorElement& v) {
  std::map<GTuple, TensorElement> parts;
  for (const auto& [idx, c] : v.terms) {
    auto& p = parts[index_degree(H, idx)];
    p.n = v.n;
    p.add(idx, c);
  }
  return parts;
}

TensorElement braid_act(const GradedModule& H, int i, const TensorElement& v, bool inverse) {
  if (i < 1 || i >= v.n)
    throw IndexOutOfRange("generator b_" + std::to_string(i) + " on a degree " +
                          std::to_string(v.n) + " tensor");
  const FiniteGroup& G = H.group;
  const std::size_t a = i - 1, b = i;
  TensorElement out;
  out.n = v.n;
  for (const auto& [idx, c] : v.terms) {
    check_index(H, idx);
    Index next = idx;
    if (!inverse) {
      next[b] = idx[a];
      for (const auto& [k, x] : sparse_column(H.rho(H.degrees[idx[a]]), idx[b])) {
        next[a] = k;
        out.add(next, c * x);
      }
    } else {
      next[a] = idx[b];
      for (const auto& [k, x] : sparse_column(H.rho(G.inv(H.degrees[idx[b]])), idx[a])) {
        next[b] = k;
        out.add(next, c * x);
      }
    }
  }
  return out;
}

SparseAction::SparseAction(const GradedModule& H) {
  for (Elem g = 0; g < H.group.order(); ++g) {
    cols.emplace_back();
    for (std::size_t c = 0; c < H.dim(); ++c)
      cols.back().push_back(sparse_column(H.rho(g), static_cast<int>(c)));
  }
}

void add_arrow_act(const SparseAction& S, const GroupoidArrow& a, const Index& idx,
                   const Rational& c, TensorElement& out) {
  const std::size_t n = idx.size();
  if (n == 0) {
    out.add(idx, c);
    return;
  }
  std::vector<const std::vector<std::pair<int, Rational>>*> cols(n);
  for (std::size_t j = 0; j < n; ++j) {
    cols[j] = &S.cols[a.gpart[j]][idx[j]];
    if (cols[j]->empty()) return;
  }
  // Cartesian product over slots, writing slot j to position perm[j].
  Index next(n);
  std::vector<std::size_t> pos(n, 0);
  Rational coef;
  while (true) {
    coef = c;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& [k, x] = (*cols[j])[pos[j]];
      next[a.perm[j]] = k;
      if (x != 1) coef *= x;
    }
    out.add(next, coef);
    std::size_t j = 0;
    while (j < n && ++pos[j] == cols[j]->size()) pos[j++] = 0;
    if (j == n) break;
  }
}

TensorElement arrow_act(const GradedModule& H, const GroupoidArrow& a, const TensorElement& v) {
  const std::size_t n = a.source.size();
  TensorElement out;
  out.n = static_cast<int>(n);
  if (v.is_zero()) return out;
  if (static_cast<std::size_t>(v.n) != n)
    throw DegreeMismatch("tensor degree " + std::to_string(v.n) + " != arrow length " +
                         std::to_string(n));
  for (const auto& [idx, c] : v.terms)
    if (index_degree(H, idx) != a.source)
      throw DegreeMismatch("tensor term outside the source degree of the arrow");
  const SparseAction S(H);
  for (const auto& [idx, c] : v.terms) add_arrow_act(S, a, idx, c, out);
  return out;
}

TensorElement apply_each_slot(const Matrix& m, const TensorElement& v) {
  TensorElement out;
  out.n = v.n;
  const std::size_t n = v.n;
  std::vector<std::vector<std::pair<int, Rational>>> cols(n);
  for (const auto& [idx, c] : v.terms) {
    bool empty = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (idx[j] < 0 || static_cast<std::size_t>(idx[j]) >= m.cols())
        throw IndexOutOfRange("basis index " + std::to_string(idx[j]) + " out of range");
      cols[j] = sparse_column(m, idx[j]);
      empty = empty || cols[j].empty();
    }
    if (empty) continue;
    if (n == 0) {
      out.add(idx, c);
      continue;
    }
    Index next(n);
    std::vector<std::size_t> pos(n, 0);
    while (true) {
      Rational coef = c;
      for (std::size_t j = 0; j < n; ++j) {
        next[j] = cols[j][pos[j]].first;
        coef *= cols[j][pos[j]].second;
      }
      out.add(next, coef);
      std::size_t j = 0;
      while (j < n && ++pos[j] == cols[j].size()) pos[j++] = 0;
      if (j == n) break;
    }
  }
  return out;
}

TensorElement diagonal_act(const GradedModule& H, Elem g, const TensorElement& v) {
  return apply_each_slot(H.rho(g), v);
}

std::vector<Vector> invariants_basis(const GradedModule& H) {
  const std::size_t d = H.dim();
  std::vector<Matrix> blocks;
  for (Elem g = 0; g < H.group.order(); ++g) blocks.push_back(H.rho(g) - Matrix::identity(d));
  return nullspace(vstack(blocks));
}

std::vector<Vector> untwisted_basis(const GradedModule& H) {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < H.dim(); ++k)
    if (H.degrees[k] == H.group.identity()) {
      Vector e(H.dim());
      e[k] = 1;
      out.push_back(std::move(e));
    }
  return out;
}

Z2Decomposition z2_decompose(const GradedModule& H) {
  const FiniteGroup& G = H.group;
  if (G.order() != 2) throw NotZ2("group has order " + std::to_string(G.order()));
  if (!check_module(H).self_invariant) throw InvalidAction("module is not self-invariant");
  const Elem g = G.identity() == 0 ? 1 : 0;
  const std::size_t d = H.dim();

  std::vector<std::size_t> untwisted;
  Z2Decomposition out;
  for (std::size_t k = 0; k < d; ++k) {
    if (H.degrees[k] == G.identity()) {
      untwisted.push_back(k);
    } else {
      Vector e(d);
      e[k] = 1;
      out.g.push_back(std::move(e));
    }
  }
  // ρ(g) preserves H_e, so its eigenspaces there are computed on the block.
  const Matrix block = submatrix(H.rho(g), untwisted, untwisted);
  const Matrix id = Matrix::identity(untwisted.size());
  auto embed = [&](const std::vector<Vector>& vs) {
    std::vector<Vector> res;
    for (const auto& v : vs) {
      Vector full(d);
      for (std::size_t j = 0; j < untwisted.size(); ++j) full[untwisted[j]] = v[j];
      res.push_back(std::move(full));
    }
    return res;
  };
  out.i = embed(nullspace(block - id));
  out.v = embed(nullspace(block + id));
  return out;
}

ModuleMorphism make_morphism(GradedModule source, GradedModule target, Matrix m) {
  if (!(source.group == target.group)) throw InvalidMorphism("modules over different groups");
  if (m.rows() != target.dim() || m.cols() != source.dim())
    throw InvalidMorphism("matrix shape does not match the modules");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0 && target.degrees[r] != source.degrees[c])
        throw InvalidMorphism("entry (" + std::to_string(r) + "," + std::to_string(c) +
                              ") changes the G-degree");
  for (Elem g = 0; g < source.group.order(); ++g)
    if (!(m * source.rho(g) == target.rho(g) * m))
      throw InvalidMorphism("not equivariant under element " + std::to_string(g));
  return ModuleMorphism{std::move(source), std::move(target), std::move(m)};
}

ModuleMorphism submodule_inclusion(const GradedModule& H, const std::vector<Vector>& basis) {
  const std::size_t d = H.dim();
  const Matrix B = Matrix::from_columns(basis, d);
  if (rank(B) != basis.size()) throw InvalidMorphism("basis vectors are linearly dependent");
  std::vector<Elem> degrees;
  for (const auto& v : basis) {
    int deg = -1;
    for (std::size_t k = 0; k < d; ++k)
      if (v[k] != 0) {
        if (deg >= 0 && deg != H.degrees[k])
          throw InvalidMorphism("basis vector is not G-homogeneous");
        deg = H.degrees[k];
      }
    if (deg < 0) throw InvalidMorphism("zero basis vector");
    degrees.push_back(deg);
  }
  std::vector<Matrix> action;
  for (Elem g = 0; g < H.group.order(); ++g) {
    std::vector<Vector> cols;
    for (const auto& v : basis) {
      auto x = solve(B, H.rho(g) * v);
      if (!x) throw InvalidMorphism("span is not stable under element " + std::to_string(g));
      cols.push_back(std::move(*x));
    }
    action.push_back(Matrix::from_columns(cols, basis.size()));
  }
  GradedModule sub{H.group, std::move(degrees), std::move(action)};
  return make_morphism(std::move(sub), H, B);
}

}  // namespace gfrob
