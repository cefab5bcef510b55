#include "gfrob/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "gfrob/error.hpp"

namespace gfrob {

FiniteGroup::FiniteGroup(std::vector<std::vector<Elem>> table) : table_(std::move(table)) {
  const int n = static_cast<int>(table_.size());
  if (n == 0) throw NotAGroup("empty table");
  if (n > 720) throw SizeLimit("group order " + std::to_string(n) + " exceeds 720");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw NotAGroup("table is not square");
    for (Elem x : row)
      if (x < 0 || x >= n) throw NotAGroup("entry out of range: " + std::to_string(x));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw NotAGroup("associativity fails at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw NotAGroup("no two-sided identity");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0) throw NotAGroup("element " + std::to_string(a) + " has no inverse");
  }
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<Elem>> FiniteGroup::conjugacy_classes() const {
  std::vector<int> cls(order(), -1);
  std::vector<std::vector<Elem>> classes;
  auto visit = [&](Elem a) {
    if (cls[a] >= 0) return;
    std::vector<Elem> members;
    for (Elem g = 0; g < order(); ++g) {
      Elem c = conj(g, a);
      if (cls[c] < 0) {
        cls[c] = static_cast<int>(classes.size());
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  };
  visit(identity_);
  for (Elem a = 0; a < order(); ++a) visit(a);
  return classes;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw BadIndex("cyclic_group needs n >= 1");
  if (n > 720) throw SizeLimit("cyclic group order exceeds 720");
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

std::vector<std::vector<int>> symmetric_group_permutations(int n) {
  if (n < 1) throw BadIndex("symmetric_group needs n >= 1");
  if (n > 6) throw SizeLimit("symmetric_group(" + std::to_string(n) + ") exceeds order 720");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

FiniteGroup symmetric_group(int n) {
  auto perms = symmetric_group_permutations(n);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;
  const int m = static_cast<int>(perms.size());
  std::vector<std::vector<Elem>> t(m, std::vector<Elem>(m));
  std::vector<int> c(n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index.at(c);
    }
  return FiniteGroup(std::move(t));
}

}  // namespace gfrob
