#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "gfrob/group.hpp"

namespace gfrob {

/// An object of the groupoid G^n: one group element per tensor slot.
using GTuple = std::vector<Elem>;

/// An element of G^n x| S_n attached to a source tuple.
///
/// Action convention: first conjugate slot j by gpart[j], then move the
/// entry in slot j to slot perm[j]. Slots are 0-based; generator indices in
/// the public API are 1-based (b_1 .. b_{n-1}) as usual for braid groups.
struct GroupoidArrow {
  GTuple source;
  std::vector<Elem> gpart;
  std::vector<int> perm;

  friend auto operator<=>(const GroupoidArrow&, const GroupoidArrow&) = default;
  friend bool operator==(const GroupoidArrow&, const GroupoidArrow&) = default;
};

/// b_i (or b_i^{-1}) acting on a tuple:
/// b_1(g1, g2, ...) = (g1 g2 g1^{-1}, g1, ...).
GTuple braid_gen_action(const FiniteGroup& G, int i, const GTuple& t, bool inverse = false);

GroupoidArrow identity_arrow(const FiniteGroup& G, const GTuple& t);
/// b_{i,t} = (e, .., t_i in slot i+1, .., e) x (i, i+1).
GroupoidArrow gen_arrow(const FiniteGroup& G, int i, const GTuple& t);
/// The arrow realizing b_i^{-1} on t.
GroupoidArrow gen_arrow_inverse(const FiniteGroup& G, int i, const GTuple& t);

GTuple arrow_target(const FiniteGroup& G, const GroupoidArrow& a);
/// a2 after a1. Throws SourceTargetMismatch unless target(a1) == source(a2).
GroupoidArrow compose_arrows(const FiniteGroup& G, const GroupoidArrow& a2,
                             const GroupoidArrow& a1);
GroupoidArrow inverse_arrow(const FiniteGroup& G, const GroupoidArrow& a);

/// Ordered product g1 g2 ... gn.
Elem g_degree(const FiniteGroup& G, const GTuple& t);
/// (g t1 g^{-1}, ..., g tn g^{-1})
GTuple conjugate_tuple(const FiniteGroup& G, Elem g, const GTuple& t);
/// (t_n^{-1}, ..., t_1^{-1})
GTuple reflect_tuple(const FiniteGroup& G, const GTuple& t);

/// Braid words as signed 1-based generator indices: +i is b_i, -i is b_i^{-1}.
/// Words are applied left to right.
using BraidWord = std::vector<int>;

struct Component {
  std::vector<GTuple> members;                      // sorted; members[0] is canonical
  std::vector<GroupoidArrow> arrows_from_basepoint;  // A_{members[0]}
  std::size_t n_C = 0;                              // |A_t| for any member t
  std::size_t m_C = 0;                              // |hom(t, t')| for any pair
  Elem g_degree = 0;

  const GTuple& representative() const { return members.front(); }
};

/// Enumeration guard: |G|^n * n! must not exceed this. Defaults to 10^6;
/// the GFROB_SIZE_LIMIT environment variable overrides it.
std::size_t enumeration_size_limit();

/// The B_n-groupoid on G^n. Arrow sets are enumerated lazily by closure of
/// generator arrows under composition and cached; the cache is safe for
/// concurrent use.
class Groupoid {
 public:
  /// Throws SizeLimit when |G|^n * n! exceeds enumeration_size_limit().
  Groupoid(FiniteGroup G, int n);

  const FiniteGroup& group() const { return group_; }
  int n() const { return n_; }

  /// A_t: every arrow with source t, in BFS discovery order (identity first).
  const std::vector<GroupoidArrow>& arrows_from(const GTuple& t) const;
  std::vector<GroupoidArrow> hom(const GTuple& from, const GTuple& to) const;
  /// A braid word realizing `a` (shortest in generator steps).
  BraidWord word_for(const GroupoidArrow& a) const;
  GroupoidArrow realize_word(const GTuple& source, const BraidWord& word) const;

  Component component(const GTuple& t) const;
  /// Every component of G^n, ordered by canonical representative.
  std::vector<Component> components() const;
  Component diagonal_action(Elem g, const Component& c) const;

  /// Sends b_{i,t} to b_{n-i, r(b_i t)} and extends anti-homomorphically.
  /// Computed from a realizing word; the result does not depend on it.
  GroupoidArrow reflect_arrow(const GroupoidArrow& a) const;
  /// The same reflection applied to an explicit word from `source`.
  GroupoidArrow reflect_word(const GTuple& source, const BraidWord& word) const;

 private:
  struct ArrowSet {
    std::vector<GroupoidArrow> arrows;
    std::vector<int> parent;  // index of predecessor in `arrows`, -1 for identity
    std::vector<int> step;    // signed generator taking parent to this arrow
    std::map<std::pair<std::vector<Elem>, std::vector<int>>, int> index;
  };

  const ArrowSet& arrow_set(const GTuple& t) const;
  void check_tuple(const GTuple& t) const;

  FiniteGroup group_;
  int n_;
  mutable std::shared_mutex mutex_;
  mutable std::map<GTuple, std::unique_ptr<ArrowSet>> cache_;
};

/// Shared groupoid instance per (group, n).
std::shared_ptr<const Groupoid> groupoid_for(const FiniteGroup& G, int n);

}  // namespace gfrob
