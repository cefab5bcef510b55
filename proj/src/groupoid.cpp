#include "gfrob/groupoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>

#include "gfrob/error.hpp"

namespace gfrob {

namespace {

void check_generator(int i, std::size_t n) {
  if (i < 1 || i >= static_cast<int>(n))
    throw IndexOutOfRange("generator b_" + std::to_string(i) + " needs 1 <= i <= " +
                          std::to_string(static_cast<long>(n) - 1));
}

}  // namespace

GTuple braid_gen_action(const FiniteGroup& G, int i, const GTuple& t, bool inverse) {
  check_generator(i, t.size());
  GTuple out = t;
  const std::size_t a = i - 1, b = i;
  if (!inverse) {
    out[a] = G.conj(t[a], t[b]);
    out[b] = t[a];
  } else {
    out[a] = t[b];
    out[b] = G.conj(G.inv(t[b]), t[a]);
  }
  return out;
}

GroupoidArrow identity_arrow(const FiniteGroup& G, const GTuple& t) {
  GroupoidArrow a{t, std::vector<Elem>(t.size(), G.identity()), std::vector<int>(t.size())};
  for (std::size_t j = 0; j < t.size(); ++j) a.perm[j] = static_cast<int>(j);
  return a;
}

GroupoidArrow gen_arrow(const FiniteGroup& G, int i, const GTuple& t) {
  check_generator(i, t.size());
  GroupoidArrow a = identity_arrow(G, t);
  a.gpart[i] = t[i - 1];
  std::swap(a.perm[i - 1], a.perm[i]);
  return a;
}

GroupoidArrow gen_arrow_inverse(const FiniteGroup& G, int i, const GTuple& t) {
  return inverse_arrow(G, gen_arrow(G, i, braid_gen_action(G, i, t, true)));
}

GTuple arrow_target(const FiniteGroup& G, const GroupoidArrow& a) {
  GTuple out(a.source.size());
  for (std::size_t j = 0; j < a.source.size(); ++j)
    out[a.perm[j]] = G.conj(a.gpart[j], a.source[j]);
  return out;
}

GroupoidArrow compose_arrows(const FiniteGroup& G, const GroupoidArrow& a2,
                             const GroupoidArrow& a1) {
  if (arrow_target(G, a1) != a2.source)
    throw SourceTargetMismatch("target of the first arrow is not the source of the second");
  const std::size_t n = a1.source.size();
  GroupoidArrow c{a1.source, std::vector<Elem>(n), std::vector<int>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    c.gpart[j] = G.mul(a2.gpart[a1.perm[j]], a1.gpart[j]);
    c.perm[j] = a2.perm[a1.perm[j]];
  }
  return c;
}

GroupoidArrow inverse_arrow(const FiniteGroup& G, const GroupoidArrow& a) {
  const std::size_t n = a.source.size();
  GroupoidArrow inv{arrow_target(G, a), std::vector<Elem>(n), std::vector<int>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    inv.gpart[a.perm[j]] = G.inv(a.gpart[j]);
    inv.perm[a.perm[j]] = static_cast<int>(j);
  }
  return inv;
}

Elem g_degree(const FiniteGroup& G, const GTuple& t) {
  Elem d = G.identity();
  for (Elem x : t) d = G.mul(d, x);
  return d;
}

GTuple conjugate_tuple(const FiniteGroup& G, Elem g, const GTuple& t) {
  GTuple out(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) out[j] = G.conj(g, t[j]);
  return out;
}

GTuple reflect_tuple(const FiniteGroup& G, const GTuple& t) {
  GTuple out(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) out[j] = G.inv(t[t.size() - 1 - j]);
  return out;
}

std::size_t enumeration_size_limit() {
  if (const char* env = std::getenv("GFROB_SIZE_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

Groupoid::Groupoid(FiniteGroup G, int n) : group_(std::move(G)), n_(n) {
  if (n < 0) throw BadIndex("tensor degree must be non-negative");
  const double limit = static_cast<double>(enumeration_size_limit());
  double size = 1;
  for (int k = 1; k <= n; ++k) size *= static_cast<double>(group_.order()) * k;
  if (size > limit)
    throw SizeLimit("|G|^n * n! = " + std::to_string(static_cast<long double>(size)) +
                    " exceeds the enumeration limit " +
                    std::to_string(enumeration_size_limit()));
}

void Groupoid::check_tuple(const GTuple& t) const {
  if (static_cast<int>(t.size()) != n_)
    throw IndexOutOfRange("tuple length " + std::to_string(t.size()) + " != n = " +
                          std::to_string(n_));
  for (Elem x : t)
    if (x < 0 || x >= group_.order())
      throw IndexOutOfRange("group element index " + std::to_string(x) + " out of range");
}

const Groupoid::ArrowSet& Groupoid::arrow_set(const GTuple& t) const {
  check_tuple(t);
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(t);
    if (it != cache_.end()) return *it->second;
  }
  auto set = std::make_unique<ArrowSet>();
  auto add = [&](GroupoidArrow a, int parent, int step) {
    auto key = std::make_pair(a.gpart, a.perm);
    if (set->index.count(key)) return;
    set->index.emplace(std::move(key), static_cast<int>(set->arrows.size()));
    set->arrows.push_back(std::move(a));
    set->parent.push_back(parent);
    set->step.push_back(step);
  };
  add(identity_arrow(group_, t), -1, 0);
  for (std::size_t k = 0; k < set->arrows.size(); ++k) {
    const GTuple tgt = arrow_target(group_, set->arrows[k]);
    for (int i = 1; i < n_; ++i) {
      add(compose_arrows(group_, gen_arrow(group_, i, tgt), set->arrows[k]),
          static_cast<int>(k), i);
      add(compose_arrows(group_, gen_arrow_inverse(group_, i, tgt), set->arrows[k]),
          static_cast<int>(k), -i);
    }
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = cache_.emplace(t, std::move(set));
  return *it->second;
}

const std::vector<GroupoidArrow>& Groupoid::arrows_from(const GTuple& t) const {
  return arrow_set(t).arrows;
}

std::vector<GroupoidArrow> Groupoid::hom(const GTuple& from, const GTuple& to) const {
  std::vector<GroupoidArrow> out;
  for (const auto& a : arrows_from(from))
    if (arrow_target(group_, a) == to) out.push_back(a);
  return out;
}

BraidWord Groupoid::word_for(const GroupoidArrow& a) const {
  const auto& set = arrow_set(a.source);
  auto it = set.index.find(std::make_pair(a.gpart, a.perm));
  if (it == set.index.end())
    throw SourceTargetMismatch("arrow is not realized by any braid from its source");
  BraidWord word;
  for (int k = it->second; set.parent[k] >= 0; k = set.parent[k]) word.push_back(set.step[k]);
  std::reverse(word.begin(), word.end());
  return word;
}

GroupoidArrow Groupoid::realize_word(const GTuple& source, const BraidWord& word) const {
  check_tuple(source);
  GroupoidArrow a = identity_arrow(group_, source);
  for (int s : word) {
    GTuple tgt = arrow_target(group_, a);
    int i = s > 0 ? s : -s;
    a = compose_arrows(group_, s > 0 ? gen_arrow(group_, i, tgt) : gen_arrow_inverse(group_, i, tgt),
                       a);
  }
  return a;
}

GroupoidArrow Groupoid::reflect_word(const GTuple& source, const BraidWord& word) const {
  const GTuple target = arrow_target(group_, realize_word(source, word));
  BraidWord reflected;
  reflected.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    reflected.push_back(*it > 0 ? n_ - *it : -(n_ + *it));
  return realize_word(reflect_tuple(group_, target), reflected);
}

GroupoidArrow Groupoid::reflect_arrow(const GroupoidArrow& a) const {
  return reflect_word(a.source, word_for(a));
}

Component Groupoid::component(const GTuple& t) const {
  std::map<GTuple, std::size_t> counts;
  for (const auto& a : arrows_from(t)) ++counts[arrow_target(group_, a)];

  Component c;
  for (const auto& [m, k] : counts) c.members.push_back(m);
  c.arrows_from_basepoint = arrows_from(c.representative());
  c.n_C = c.arrows_from_basepoint.size();
  c.g_degree = g_degree(group_, t);
  c.m_C = counts.at(t);
  // Every hom(t, t') is a torsor for hom(t, t), so n_C = |C| m_C; the
  // counts are compared rather than assumed.
  for (const auto& [m, k] : counts) {
    if (k != c.m_C) throw std::logic_error("hom-set sizes are not constant on a component");
    if (g_degree(group_, m) != c.g_degree)
      throw std::logic_error("G-degree is not constant on a component");
  }
  return c;
}

std::vector<Component> Groupoid::components() const {
  std::vector<Component> out;
  std::set<GTuple> seen;
  GTuple t(n_, 0);
  while (true) {
    if (!seen.count(t)) {
      Component c = component(t);
      seen.insert(c.members.begin(), c.members.end());
      out.push_back(std::move(c));
    }
    int j = n_ - 1;
    while (j >= 0 && t[j] == group_.order() - 1) t[j--] = 0;
    if (j < 0) break;
    ++t[j];
  }
  return out;
}

Component Groupoid::diagonal_action(Elem g, const Component& c) const {
  return component(conjugate_tuple(group_, g, c.representative()));
}

namespace {

std::mutex registry_mutex;
std::map<std::pair<std::vector<std::vector<Elem>>, int>, std::shared_ptr<const Groupoid>>
    registry;

}  // namespace

std::shared_ptr<const Groupoid> groupoid_for(const FiniteGroup& G, int n) {
  auto key = std::make_pair(G.table(), n);
  std::lock_guard lock(registry_mutex);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto g = std::make_shared<const Groupoid>(G, n);
  registry.emplace(std::move(key), g);
  return g;
}

}  // namespace gfrob
