#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "gfrob/error.hpp"
#include "gfrob/group.hpp"
#include "gfrob/matrix.hpp"
#include "gfrob/poly.hpp"
#include "gfrob/reference.hpp"

using namespace gfrob;

namespace {

// independent axiom check by brute force
bool is_group_table(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  for (int e = 0; e < n; ++e) {
    bool unit = true;
    for (int a = 0; a < n; ++a) unit = unit && t[e][a] == a && t[a][e] == a;
    if (!unit) continue;
    for (int a = 0; a < n; ++a) {
      bool has = false;
      for (int b = 0; b < n; ++b) has = has || (t[a][b] == e && t[b][a] == e);
      if (!has) return false;
    }
    return true;
  }
  return false;
}

MultiPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> exp(0, 3), coef(-5, 5), count(1, 5);
  MultiPoly p;
  for (int k = count(rng); k > 0; --k) {
    std::map<std::string, unsigned> m;
    for (const auto& v : vars) m[v] = exp(rng);
    p += MultiPoly::monomial(m, rational(coef(rng), 1 + exp(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  CHECK(rational(-2, 2) == -1);
  CHECK(rational(4, -6).get_den() == 3);
  CHECK(rational(4, -6).get_num() == -2);
  CHECK(parse_rational("6/4") == rational(3, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("2/-3"), ParseError);
  CHECK(to_string(rational(3, 1)) == "3/1");
  CHECK(to_string(rational(-1, 2)) == "-1/2");
}

TEST_CASE("group validation agrees with brute force on every small table") {
  for (int n = 1; n <= 3; ++n) {
    const int cells = n * n;
    int total = 1;
    for (int i = 0; i < cells; ++i) total *= n;
    int accepted = 0, groups = 0;
    for (int code = 0; code < total; ++code) {
      std::vector<std::vector<int>> t(n, std::vector<int>(n));
      for (int i = 0, c = code; i < cells; ++i, c /= n) t[i / n][i % n] = c % n;
      const bool truth = is_group_table(t);
      groups += truth;
      try {
        FiniteGroup G(t);
        ++accepted;
        CHECK(truth);
      } catch (const NotAGroup&) {
        CHECK_FALSE(truth);
      }
    }
    CHECK(accepted == groups);
  }
  CHECK_THROWS_AS(FiniteGroup(std::vector<std::vector<Elem>>{{0, 1}}), NotAGroup);
  CHECK_THROWS_AS(FiniteGroup(std::vector<std::vector<Elem>>{{0, 2}, {1, 0}}), NotAGroup);
  CHECK_THROWS_AS(symmetric_group(7), SizeLimit);
}

TEST_CASE("standard groups and conjugacy classes") {
  FiniteGroup one(std::vector<std::vector<Elem>>{{0}});
  CHECK(one.conjugacy_classes().size() == 1);
  CHECK(cyclic_group(1).order() == 1);

  FiniteGroup z2 = cyclic_group(2);
  CHECK(z2.order() == 2);
  CHECK(z2.identity() == 0);
  CHECK(z2.is_abelian());
  CHECK(z2.conjugacy_classes() == std::vector<std::vector<Elem>>{{0}, {1}});

  FiniteGroup s3 = symmetric_group(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  std::vector<std::size_t> sizes;
  for (const auto& c : s3.conjugacy_classes()) sizes.push_back(c.size());
  CHECK(sizes == std::vector<std::size_t>{1, 3, 2});
  // classes by brute-force orbits
  for (const auto& cls : s3.conjugacy_classes())
    for (Elem a : cls) {
      std::set<Elem> orbit;
      for (Elem g = 0; g < 6; ++g) orbit.insert(s3.conj(g, a));
      CHECK(std::vector<Elem>(orbit.begin(), orbit.end()) == cls);
    }
  // (a*b)(x) = a(b(x))
  const auto perms = symmetric_group_permutations(3);
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b)
      for (int x = 0; x < 3; ++x) CHECK(perms[s3.mul(a, b)][x] == perms[a][perms[b][x]]);
}

TEST_CASE("matrices") {
  Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == Matrix::identity(2));
  CHECK(rank(Matrix::from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK_FALSE(inverse(Matrix::from_rows({{1, 2}, {2, 4}})));
  auto ns = nullspace(Matrix::from_rows({{1, 2, 3}}));
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(is_zero(Matrix::from_rows({{1, 2, 3}}) * v));
  auto x = solve(m, Vector{5, 6});
  REQUIRE(x);
  CHECK(m * *x == Vector{5, 6});
}

TEST_CASE("polynomial basics") {
  const MultiPoly t0 = MultiPoly::variable("t0"), t2 = MultiPoly::variable("t2");
  CHECK((t0.pow(2) * t2).diff("t0") == Rational(2) * t0 * t2);
  CHECK(MultiPoly(rational(3, 7)).diff("t0").is_zero());
  const MultiPoly phi = reference_potential('A', 3);
  CHECK(phi.diff("t0").diff("t0").diff("t2") == MultiPoly(-1));
  CHECK(phi.total_degree() == 5);
  CHECK((t0 - t0).is_zero());
  CHECK((t0 * t2).subst("t2", t0 + 1) == t0.pow(2) + t0);
  CHECK_THROWS_AS(t0.evaluate({{"t2", 1}}), UnknownVariable);
  CHECK(parse_poly(phi.to_string()) == phi);
  CHECK(parse_poly("2*x^2*y - 1/3") == Rational(2) * MultiPoly::variable("x").pow(2) * MultiPoly::variable("y") - rational(1, 3));
  CHECK_THROWS_AS(parse_poly("x +"), ParseError);
  CHECK_THROWS_AS(parse_poly("x ^"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
}

TEST_CASE("polynomial ring laws on random inputs") {
  std::mt19937 rng(11);
  const std::vector<std::string> vars{"a", "b", "c"};
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly p = random_poly(rng, vars), q = random_poly(rng, {"a", "b"}), r = random_poly(rng, {"b", "c"});
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p.diff("a").diff("b") == p.diff("b").diff("a"));
    CHECK((p * q).diff("a") == p.diff("a") * q + p * q.diff("a"));
    const MultiPoly pq = p * q;
    for (const auto& [e, c] : pq.terms()) {
      CHECK(c != 0);
      CHECK(c.get_den() > 0);
      CHECK(gcd(c.get_num(), c.get_den()) == 1);
    }
  }
}
