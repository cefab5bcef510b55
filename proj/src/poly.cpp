#include "gfrob/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "gfrob/error.hpp"

namespace gfrob {

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponent{}, c);
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponent{1}, Rational(1));
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars,
                                const std::vector<std::pair<Exponent, Rational>>& terms) {
  std::vector<std::size_t> order(vars.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vars[a] < vars[b]; });
  MultiPoly p;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && vars[order[i]] == vars[order[i - 1]])
      throw UnknownVariable("duplicate variable '" + vars[order[i]] + "'");
    p.vars_.push_back(vars[order[i]]);
  }
  for (const auto& [e, c] : terms) {
    if (e.size() != vars.size())
      throw UnknownVariable("exponent vector length does not match variable count");
    Exponent sorted(e.size());
    for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = e[order[i]];
    p.add_term(sorted, c);
  }
  return p;
}

MultiPoly MultiPoly::monomial(const std::map<std::string, unsigned>& powers, const Rational& c) {
  MultiPoly p;
  Exponent e;
  for (const auto& [name, k] : powers) {
    p.vars_.push_back(name);
    e.push_back(k);
  }
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](unsigned k) { return k == 0; }));
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponent(vars_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  return d;
}

bool MultiPoly::has_var(const std::string& var) const {
  return std::binary_search(vars_.begin(), vars_.end(), var);
}

unsigned MultiPoly::degree_in(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return 0;
  auto i = static_cast<std::size_t>(it - vars_.begin());
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

std::vector<std::string> MultiPoly::used_vars() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (const auto& [e, c] : terms_)
      if (e[i] > 0) {
        out.push_back(vars_[i]);
        break;
      }
  return out;
}

Rational MultiPoly::coefficient(const std::map<std::string, unsigned>& powers) const {
  Exponent e(vars_.size(), 0);
  for (const auto& [name, k] : powers) {
    if (k == 0) continue;
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return 0;
    e[it - vars_.begin()] = k;
  }
  auto t = terms_.find(e);
  return t == terms_.end() ? Rational(0) : t->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::with_vars(std::vector<std::string> vars) const {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars == vars_) return *this;
  std::vector<int> where(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::lower_bound(vars.begin(), vars.end(), vars_[i]);
    if (it != vars.end() && *it == vars_[i]) where[i] = static_cast<int>(it - vars.begin());
  }
  MultiPoly p;
  p.vars_ = std::move(vars);
  for (const auto& [e, c] : terms_) {
    Exponent ne(p.vars_.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0) throw UnknownVariable("cannot drop variable '" + vars_[i] + "' in use");
      ne[where[i]] = e[i];
    }
    p.terms_.emplace(std::move(ne), c);
  }
  return p;
}

MultiPoly MultiPoly::trimmed() const { return with_vars(used_vars()); }

std::pair<MultiPoly, MultiPoly> align(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return {a, b};
  std::vector<std::string> u;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                 std::back_inserter(u));
  return {a.with_vars(u), b.with_vars(u)};
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  if (vars_ != o.vars_) {
    auto [a, b] = align(*this, o);
    *this = std::move(a);
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  auto [a, b] = align(x, y);
  MultiPoly p;
  p.vars_ = a.vars_;
  if (a.is_zero() || b.is_zero()) return p;
  const std::size_t n = p.vars_.size();
  MultiPoly::Exponent e(n);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(1), base = *this;
  result = result.with_vars(vars_);
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::diff(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  MultiPoly p;
  p.vars_ = vars_;
  if (it == vars_.end() || *it != var) return p;
  auto i = static_cast<std::size_t>(it - vars_.begin());
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent ne = e;
    --ne[i];
    p.add_term(ne, c * e[i]);
  }
  return p;
}

MultiPoly MultiPoly::subst(const std::string& var, const MultiPoly& value) const {
  return subst(std::map<std::string, MultiPoly>{{var, value}});
}

MultiPoly MultiPoly::subst(const std::map<std::string, MultiPoly>& values) const {
  // Variables kept as-is, plus those introduced by the substituted values.
  std::vector<int> slot(vars_.size(), -1);
  std::vector<const MultiPoly*> value_of;
  std::vector<std::string> keep;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it == values.end()) {
      keep.push_back(vars_[i]);
    } else {
      slot[i] = static_cast<int>(value_of.size());
      value_of.push_back(&it->second);
    }
  }
  if (value_of.empty()) return *this;

  MultiPoly kept_base;
  kept_base.vars_ = keep;
  MultiPoly result = kept_base;
  // Powers of each substituted value, computed on demand.
  std::vector<std::vector<MultiPoly>> powers(value_of.size());
  auto power = [&](int s, unsigned k) -> const MultiPoly& {
    auto& cache = powers[s];
    if (cache.empty()) cache.push_back(MultiPoly(1));
    while (cache.size() <= k) cache.push_back(cache.back() * *value_of[s]);
    return cache[k];
  };
  for (const auto& [e, c] : terms_) {
    Exponent ke;
    MultiPoly term;
    bool first = true;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (slot[i] < 0) {
        ke.push_back(e[i]);
      } else if (e[i] > 0) {
        term = first ? power(slot[i], e[i]) : term * power(slot[i], e[i]);
        first = false;
      }
    }
    MultiPoly mono = kept_base;
    mono.add_term(ke, c);
    result += first ? mono : mono * term;
  }
  return result;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<const Rational*> val(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it != point.end()) val[i] = &it->second;
  }
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!val[i]) throw UnknownVariable("no value for variable '" + vars_[i] + "'");
      Rational pw;
      mpq_class base = *val[i];
      mpz_pow_ui(pw.get_num_mpz_t(), base.get_num_mpz_t(), e[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), base.get_den_mpz_t(), e[i]);
      pw.canonicalize();
      t *= pw;
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::homogeneous_part(unsigned degree) const {
  MultiPoly p;
  p.vars_ = vars_;
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0u) == degree) p.terms_.emplace(e, c);
  return p;
}

MultiPoly MultiPoly::rename(const std::map<std::string, std::string>& names) const {
  std::vector<std::string> nv = vars_;
  for (auto& v : nv) {
    auto it = names.find(v);
    if (it != names.end()) v = it->second;
  }
  std::vector<std::pair<Exponent, Rational>> t(terms_.begin(), terms_.end());
  return from_terms(nv, t);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool any = false;
    bool unit = mag == 1;
    if (!unit) {
      os << mag.get_str();
      any = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      any = true;
    }
    if (!any) os << "1";
  }
  return os.str();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto [x, y] = align(a, b);
  return x.terms_ == y.terms_;
}

}  // namespace gfrob

namespace gfrob {

namespace {

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

MultiPoly parse_poly(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty polynomial");
  MultiPoly out;
  std::size_t i = 0;
  while (i < s.size()) {
    Rational sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-' at offset " + std::to_string(i) + " in '" + s + "'");
    }
    MultiPoly term = sign;
    for (;;) {
      if (i >= s.size()) throw ParseError("truncated polynomial '" + s + "'");
      std::size_t j = i;
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        term *= parse_rational(s.substr(i, j - i));
      } else if (name_char(s[i])) {
        while (j < s.size() && name_char(s[j])) ++j;
        MultiPoly v = MultiPoly::variable(s.substr(i, j - i));
        unsigned k = 1;
        if (j < s.size() && s[j] == '^') {
          std::size_t e = ++j;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
          if (e == j) throw ParseError("missing exponent in '" + s + "'");
          k = static_cast<unsigned>(std::stoul(s.substr(e, j - e)));
        }
        term *= v.pow(k);
      } else {
        throw ParseError("unexpected '" + std::string(1, s[i]) + "' in '" + s + "'");
      }
      i = j;
      if (i < s.size() && s[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    out += term;
  }
  return out;
}

}  // namespace gfrob
