#include "qgr/fpoly.hpp"

#include <array>

#include "qgr/error.hpp"

namespace qgr {

std::vector<std::string> fpoly_variables(const Quiver& q) {
  if (q.vertex_count() == 2) return {"x", "y"};
  std::vector<std::string> vars;
  for (const auto& v : q.vertices()) vars.push_back("x_" + v);
  return vars;
}

Polynomial fpoly_bruteforce(const CoefficientQuiver& g) {
  if (!g.is_unramified()) throw ValidationError("coefficient quiver is ramified");
  Polynomial f(fpoly_variables(g.base()));
  for (const auto& [type, count] : successor_closed_table(g)) {
    Exponents e;
    for (auto x : type.entries()) e.push_back(static_cast<std::uint32_t>(x));
    f.add_term(e, Integer(count));
  }
  return f;
}

namespace {

using Mat2 = std::array<std::array<Polynomial, 2>, 2>;

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 r = a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

void require_monomial(const Polynomial& x_delta) {
  if (!x_delta.is_monomial() || x_delta.terms().begin()->second != 1)
    throw ValidationError("x^delta must be a single monomial with coefficient 1");
}

}  // namespace

Polynomial companion_power_entry(const Polynomial& f_delta, const Polynomial& x_delta, std::size_t n) {
  require_monomial(x_delta);
  const auto& vars = f_delta.variables();
  const auto zero = Polynomial(vars);
  const auto one = Polynomial::constant(vars, 1);
  const Mat2 m{{{zero, one}, {-x_delta, f_delta}}};
  Mat2 power{{{one, zero}, {zero, one}}};
  for (std::size_t k = 0; k <= n; ++k) power = mul(power, m);
  return power[0][1];
}

std::vector<Polynomial> fdelta_sequence(const Polynomial& f_delta, const Polynomial& x_delta, std::size_t n) {
  require_monomial(x_delta);
  const auto& vars = f_delta.variables();
  std::vector<Polynomial> seq{Polynomial::constant(vars, 1)};
  if (n >= 1) seq.push_back(f_delta);
  for (std::size_t k = 2; k <= n; ++k) seq.push_back(f_delta * seq[k - 1] - x_delta * seq[k - 2]);

  for (std::size_t k = 0; k <= n; ++k)
    if (!(companion_power_entry(f_delta, x_delta, k) == seq[k]))
      throw InternalError("recursion and companion matrix disagree at n = " + std::to_string(k));
  return seq;
}

Polynomial kronecker_f_delta() { return parse_polynomial("1 + y + x*y", {"x", "y"}); }
Polynomial kronecker_x_delta() { return parse_polynomial("x*y", {"x", "y"}); }

std::string to_string(FpolyMethod m) { return m == FpolyMethod::Recursion ? "recursion" : "product"; }

FpolyMethod parse_fpoly_method(const std::string& text) {
  if (text == "recursion") return FpolyMethod::Recursion;
  if (text == "product" || text == "product-formula") return FpolyMethod::ProductFormula;
  throw ValidationError("unknown method '" + text + "' (expected recursion or product)");
}

Polynomial kronecker_preproj_fpoly(std::size_t n, FpolyMethod method) {
  const std::vector<std::string> vars{"x", "y"};
  const auto f0 = parse_polynomial("1 + y", vars);
  const auto xd = kronecker_x_delta();
  if (method == FpolyMethod::Recursion) {
    const auto fd = kronecker_f_delta();
    Polynomial prev = Polynomial::constant(vars, 1);
    Polynomial cur = f0;
    for (std::size_t k = 1; k <= n; ++k) {
      Polynomial next = fd * cur - xd * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  const auto seq = fdelta_sequence(kronecker_f_delta(), xd, n);
  if (n == 0) return seq[0] * f0;
  return seq[n] * f0 - xd * seq[n - 1];
}

}  // namespace qgr
