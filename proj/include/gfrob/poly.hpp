#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gfrob/rational.hpp"

namespace gfrob {

/// Sparse multivariate polynomial over Q.
///
/// Variables are named and kept sorted lexicographically; every exponent
/// vector has one entry per variable. Binary operations align operands by
/// name, taking the union of their variable lists. Zero coefficients are
/// never stored.
class MultiPoly {
 public:
  using Exponent = std::vector<unsigned>;
  using Terms = std::map<Exponent, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT: constants convert implicitly
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT

  static MultiPoly variable(const std::string& name);
  /// `vars` need not be sorted; exponents are permuted accordingly.
  static MultiPoly from_terms(std::vector<std::string> vars,
                              const std::vector<std::pair<Exponent, Rational>>& terms);
  /// c * prod name^power
  static MultiPoly monomial(const std::map<std::string, unsigned>& powers,
                            const Rational& c = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  unsigned degree_in(const std::string& var) const;
  bool has_var(const std::string& var) const;
  /// Variables that actually occur with a positive exponent.
  std::vector<std::string> used_vars() const;

  /// Coefficient of the monomial prod name^power (names absent from the
  /// polynomial must carry power 0, otherwise the coefficient is 0).
  Rational coefficient(const std::map<std::string, unsigned>& powers) const;

  /// Same polynomial over a larger (or equal) variable list. Throws
  /// UnknownVariable if a variable in use would be dropped.
  MultiPoly with_vars(std::vector<std::string> vars) const;
  /// Drops variables that do not occur.
  MultiPoly trimmed() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  MultiPoly operator-() const;

  MultiPoly pow(unsigned k) const;

  /// Formal partial derivative; zero when `var` does not occur.
  MultiPoly diff(const std::string& var) const;
  /// Replaces `var` by `value`; unchanged when `var` does not occur.
  MultiPoly subst(const std::string& var, const MultiPoly& value) const;
  /// Simultaneous substitution.
  MultiPoly subst(const std::map<std::string, MultiPoly>& values) const;
  /// Throws UnknownVariable if an occurring variable has no value.
  Rational evaluate(const std::map<std::string, Rational>& point) const;

  MultiPoly homogeneous_part(unsigned degree) const;
  MultiPoly rename(const std::map<std::string, std::string>& names) const;

  /// Human-readable form, e.g. "-1/2*t0^2*t2 + t1". Terms in map order.
  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  std::vector<std::string> vars_;
  Terms terms_;

  void add_term(const Exponent& e, const Rational& c);
  friend std::pair<MultiPoly, MultiPoly> align(const MultiPoly& a, const MultiPoly& b);
};

std::pair<MultiPoly, MultiPoly> align(const MultiPoly& a, const MultiPoly& b);

/// Reads the to_string() format: signed terms of '*'-joined factors, each a
/// rational or name[^k]. Throws ParseError.
MultiPoly parse_poly(std::string_view text);

}  // namespace gfrob
