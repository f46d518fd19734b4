#include "qgr/singular_examples.hpp"

#include <omp.h>

#include "qgr/error.hpp"

namespace qgr {

std::vector<Polynomial> jacobian(const Polynomial& p) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < p.variables().size(); ++i) out.push_back(p.derivative(i));
  return out;
}

Polynomial solve_linear(const Polynomial& eq, std::size_t var) {
  if (eq.degree_in(var) != 1) throw ValidationError("equation is not linear in " + eq.variables().at(var));
  Polynomial rest(eq.variables());
  Integer c = 0;
  for (const auto& [e, coef] : eq.terms()) {
    if (e[var] == 0) {
      rest.add_term(e, coef);
      continue;
    }
    Exponents bare = e;
    bare[var] = 0;
    if (bare != Exponents(e.size(), 0))
      throw ValidationError("coefficient of " + eq.variables()[var] + " is not constant");
    c = coef;
  }
  if (c != 1 && c != -1) throw ValidationError("coefficient of " + eq.variables()[var] + " is not a unit");
  // c*var + rest = 0  =>  var = -rest / c
  return rest * Integer(-c);
}

Polynomial rename_variables(const Polynomial& p, std::vector<std::string> new_variables,
                            const std::vector<std::size_t>& mapping) {
  Polynomial out(std::move(new_variables));
  for (const auto& [e, c] : p.terms()) {
    Exponents ne(out.variables().size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (mapping.at(i) >= ne.size()) throw ValidationError("variable " + p.variables()[i] + " has no image");
      ne[mapping[i]] += e[i];
    }
    out.add_term(ne, c);
  }
  return out;
}

Kronecker3DeltaCell kronecker_3delta_cell() {
  const std::vector<std::string> w{"w13", "w15", "w26", "w46"};
  Kronecker3DeltaCell k;
  k.cell.variables = w;
  k.cell.equations = {parse_polynomial("w26 - w15 + w13*w46", w), parse_polynomial("w13*w26 + w15*w46", w)};
  k.w15_solution = solve_linear(k.cell.equations[0], 1);
  const auto reduced = k.cell.equations[1].substitute(1, k.w15_solution);
  // x = w26, y = w13, z = w46; w15 no longer occurs.
  k.hypersurface = rename_variables(reduced, {"x", "y", "z"}, {1, 3, 0, 2});
  return k;
}

namespace {

bool singular_at(const Polynomial& p, const std::vector<Polynomial>& jac, const std::vector<Integer>& pt) {
  if (p.evaluate(pt) != 0) return false;
  for (const auto& d : jac)
    if (d.evaluate(pt) != 0) return false;
  return true;
}

void require_three(const Polynomial& p) {
  if (p.variables().size() != 3) throw ValidationError("box scan expects a polynomial in three variables");
}

}  // namespace

std::vector<std::array<std::int64_t, 3>> singular_box_scan(const Polynomial& p, std::int64_t n) {
  require_three(p);
  const auto jac = jacobian(p);
  const auto width = static_cast<std::size_t>(2 * n + 1);
  std::vector<std::vector<std::array<std::int64_t, 3>>> slabs(width);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(width); ++i) {
    const std::int64_t a = i - n;
    for (std::int64_t b = -n; b <= n; ++b)
      for (std::int64_t c = -n; c <= n; ++c)
        if (singular_at(p, jac, {Integer(a), Integer(b), Integer(c)}))
          slabs[static_cast<std::size_t>(i)].push_back({a, b, c});
  }
  std::vector<std::array<std::int64_t, 3>> out;
  for (auto& s : slabs) out.insert(out.end(), s.begin(), s.end());
  return out;
}

namespace reference {

std::vector<std::array<std::int64_t, 3>> singular_box_scan(const Polynomial& p, std::int64_t n) {
  require_three(p);
  const auto jac = jacobian(p);
  std::vector<std::array<std::int64_t, 3>> out;
  for (std::int64_t a = -n; a <= n; ++a)
    for (std::int64_t b = -n; b <= n; ++b)
      for (std::int64_t c = -n; c <= n; ++c)
        if (singular_at(p, jac, {Integer(a), Integer(b), Integer(c)})) out.push_back({a, b, c});
  return out;
}

}  // namespace reference

bool kronecker_cell_coordinates(const FiniteSubrep& u, std::array<std::uint32_t, 4>& w) {
  const auto& f = u.parent().field();
  const auto& b0 = u.basis(0);  // rows: points 2, 4, 6
  const auto& b1 = u.basis(1);  // rows: points 1, 3, 5
  if (b0.rows() != 3 || b1.rows() != 3 || b0.cols() != 1 || b1.cols() != 2)
    throw ValidationError("not a point of Gr_(1,2) of the 3-delta string");
  if (f.is_zero(b0(2, 0))) return false;
  const auto s = f.inv(b0(2, 0));
  const auto alpha = f.mul(b0(0, 0), s);
  const auto beta = f.mul(b0(1, 0), s);
  // Rows 1, 2 of U_1 must be invertible; N = B S^-1 has identity there.
  const auto det = f.sub(f.mul(b1(1, 0), b1(2, 1)), f.mul(b1(1, 1), b1(2, 0)));
  if (f.is_zero(det)) return false;
  const auto di = f.inv(det);
  const auto s00 = f.mul(b1(2, 1), di), s01 = f.neg(f.mul(b1(1, 1), di));
  const auto s10 = f.neg(f.mul(b1(2, 0), di)), s11 = f.mul(b1(1, 0), di);
  const auto gamma = f.add(f.mul(b1(0, 0), s00), f.mul(b1(0, 1), s10));
  const auto eps = f.add(f.mul(b1(0, 0), s01), f.mul(b1(0, 1), s11));
  // U_0 = <b6 + alpha b2 + beta b4>, U_1 = <b3 + gamma b1, b5 + eps b1>; the
  // cell equations use w13 = gamma, w15 = -eps, w26 = -alpha, w46 = beta.
  w = {gamma, f.neg(eps), f.neg(alpha), beta};
  return true;
}

Quiver tildeA2_quiver() {
  return Quiver({"left", "middle", "right"},
                std::vector<ArrowSpec>{{"a", "left", "middle"}, {"b", "right", "middle"}, {"c", "right", "left"}});
}

CoefficientQuiver tildeA2_family_gamma() {
  // Point i sits at index i - 1.
  std::vector<Point> pts{{"1", 0}, {"2", 1}, {"3", 2}, {"4", 0}, {"5", 1}, {"6", 2}};
  const std::size_t a = 0, b = 1, c = 2;
  std::vector<Edge> edges{
      {a, 0, 1, {}},
      {b, 2, 1, {}},
      {c, 2, 0, EdgeWeight::parameter()},
      {c, 2, 3, {}},
      {c, 5, 3, EdgeWeight::parameter()},
      {a, 3, 4, {}},
      {b, 5, 4, {}},
  };
  return CoefficientQuiver(tildeA2_quiver(), std::move(pts), std::move(edges));
}

TildeA2Family tildeA2_family(const Rational& lambda) {
  auto gamma = tildeA2_family_gamma();
  auto bound = gamma.bind_parameter(lambda);
  auto rep = bound.to_data();
  const std::vector<std::string> vars{"D1", "D4", "D3", "D6"};
  const Integer num = boost::multiprecision::numerator(lambda);
  const Integer den = boost::multiprecision::denominator(lambda);
  Polynomial eq = parse_polynomial("D4*D3 - D1*D6", vars) * num + parse_polynomial("D1*D3", vars) * den;
  return {std::move(gamma), std::move(bound), std::move(rep), DimVector{1, 2, 1}, "P1 x P1", std::move(eq)};
}

std::array<std::uint32_t, 4> tildeA2_coordinates(const FiniteSubrep& u) {
  const auto& f = u.parent().field();
  const auto& l = u.basis(0);  // rows: points 1, 4
  const auto& r = u.basis(2);  // rows: points 3, 6
  if (l.rows() != 2 || l.cols() != 1 || r.rows() != 2 || r.cols() != 1)
    throw ValidationError("not a point of Gr_(1,2,1) of the family");
  return {l(0, 0), f.neg(l(1, 0)), r(0, 0), f.neg(r(1, 0))};
}

Quiver dtilde4_subspace_quiver() {
  return Quiver({"c", "p1", "p2", "p3", "p4"}, std::vector<ArrowSpec>{{"a1", "p1", "c"},
                                                                      {"a2", "p2", "c"},
                                                                      {"a3", "p3", "c"},
                                                                      {"a4", "p4", "c"}});
}

std::vector<NamedDimVector> dtilde4_tube_dimvecs() {
  return {{"S", DimVector{1, 1, 1, 0, 0}},
          {"T", DimVector{1, 0, 0, 1, 1}},
          {"P", DimVector{1, 0, 0, 1, 0}},
          {"P'", DimVector{2, 1, 1, 1, 0}}};
}

}  // namespace qgr
