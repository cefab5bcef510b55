#pragma once

#include <cstddef>
#include <vector>

namespace gfrob {

/// Group element, given as an index into the multiplication table.
using Elem = int;

/// A finite group presented by its full multiplication table.
/// `mul(a, b)` is `table[a][b]`. Construction validates the group axioms
/// exhaustively, so every FiniteGroup value is a group.
class FiniteGroup {
 public:
  /// Throws NotAGroup if the table is not square, has out-of-range entries,
  /// or fails associativity, identity or inverses.
  explicit FiniteGroup(std::vector<std::vector<Elem>> table);

  int order() const { return static_cast<int>(table_.size()); }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[a][b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  /// g a g^{-1}
  Elem conj(Elem g, Elem a) const { return mul(mul(g, a), inverse_[g]); }
  bool is_abelian() const;

  const std::vector<std::vector<Elem>>& table() const { return table_; }

  /// Conjugacy classes, each sorted, ordered by smallest member; the class
  /// of the identity comes first.
  std::vector<std::vector<Elem>> conjugacy_classes() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_;
  }

 private:
  std::vector<std::vector<Elem>> table_;
  Elem identity_ = 0;
  std::vector<Elem> inverse_;
};

/// Z/nZ with element k meaning k mod n; cyclic_group(2) is (e, g).
FiniteGroup cyclic_group(int n);

/// S_n acting on {0..n-1}; elements ordered lexicographically by their
/// one-line notation, so element 0 is the identity. Composition is
/// (a*b)(x) = a(b(x)). Throws SizeLimit for n > 6.
FiniteGroup symmetric_group(int n);

/// One-line notation of each element of symmetric_group(n), in element order.
std::vector<std::vector<int>> symmetric_group_permutations(int n);

}  // namespace gfrob
