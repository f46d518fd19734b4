#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qgr/numeric.hpp"

namespace qgr {

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic, larger first.
struct GradedLexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

enum class TermOrder { Descending, Ascending };

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients over an ordered list of named variables. Zero coefficients
/// are never stored. Binary operations require identical variable lists.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Integer, GradedLexDescending>;

  explicit Polynomial(std::vector<std::string> variables = {});

  static Polynomial constant(std::vector<std::string> variables, const Integer& c);
  static Polynomial variable(std::vector<std::string> variables, std::size_t index);
  static Polynomial variable(std::vector<std::string> variables, std::string_view name);
  static Polynomial monomial(std::vector<std::string> variables, Exponents exps, const Integer& c = 1);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t variable_index(std::string_view name) const;  // throws ValidationError

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  Integer coefficient(const Exponents& e) const;
  Integer constant_term() const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;

  void add_term(const Exponents& e, const Integer& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Integer& c) const;
  Polynomial pow(unsigned k) const;

  Polynomial derivative(std::size_t var) const;
  // Replaces variable var by p (which must share the variable list).
  Polynomial substitute(std::size_t var, const Polynomial& p) const;
  Integer evaluate(const std::vector<Integer>& point) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  /// Terms joined by " + " / " - ", coefficient and monomial joined by "*",
  /// e.g. "2*q^2 + 1" (descending) or "1 + 2*y + x*y^2" (ascending).
  std::string to_string(TermOrder order = TermOrder::Descending) const;

  bool operator==(const Polynomial& o) const { return variables_ == o.variables_ && terms_ == o.terms_; }

 private:
  void require_same(const Polynomial& o) const;

  std::vector<std::string> variables_;
  Terms terms_;
};

/// Sums of signed terms like "3*x^2*y", "x y", "-z^2" over the given
/// variables. Juxtaposed single-letter variables ("xyz^2") are accepted when
/// every variable name is one character.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

/// Univariate polynomial in q from coefficients, lowest degree first.
Polynomial univariate(const std::vector<Integer>& coefficients, const std::string& var = "q");

/// Coefficients of a univariate polynomial, lowest degree first.
std::vector<Integer> coefficient_list(const Polynomial& p);

}  // namespace qgr
