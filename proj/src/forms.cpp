#include "qgr/forms.hpp"

#include "qgr/error.hpp"

namespace qgr {

std::int64_t euler_form(const Quiver& q, std::span<const std::int64_t> a,
                        std::span<const std::int64_t> b) {
  if (a.size() != q.vertex_count() || b.size() != q.vertex_count())
    throw ValidationError("dimension vector does not match the quiver's vertex set");
  std::int64_t v = 0;
  for (std::size_t i = 0; i < a.size(); ++i) v += a[i] * b[i];
  for (const auto& arr : q.arrows()) v -= a[arr.source] * b[arr.target];
  return v;
}

std::int64_t euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  return euler_form(q, std::span(a.entries()), std::span(b.entries()));
}

std::int64_t tits_form(const Quiver& q, const DimVector& a) { return euler_form(q, a, a); }

IntMatrix euler_matrix(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  IntMatrix e(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
  for (const auto& a : q.arrows()) e[a.source][a.target] -= 1;
  return e;
}

IntMatrix symmetric_gram(const Quiver& q) {
  auto e = euler_matrix(q);
  const std::size_t n = e.size();
  IntMatrix g(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = e[i][j] + e[j][i];
  return g;
}

IntMatrix path_count_matrix(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  IntMatrix p(n, std::vector<std::int64_t>(n, 0));
  const auto order = q.topological_order();
  // Sweep sources last-to-first: paths(i -> r) = [i == r] + sum over arrows i -> t of paths(t -> r).
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t i = *it;
    p[i][i] = 1;
    for (const auto& a : q.arrows()) {
      if (a.source != i) continue;
      for (std::size_t r = 0; r < n; ++r) p[i][r] += p[a.target][r];
    }
  }
  return p;
}

DimVector projective_dimvec(const Quiver& q, std::size_t p) {
  if (p >= q.vertex_count()) throw ValidationError("unknown vertex index");
  return DimVector(path_count_matrix(q)[p]);
}

DimVector projective_dimvec(const Quiver& q, std::string_view p) {
  return projective_dimvec(q, q.vertex_index(p));
}

std::vector<std::int64_t> coxeter_apply(const Quiver& q, std::span<const std::int64_t> a,
                                        Translate direction) {
  const std::size_t n = q.vertex_count();
  if (a.size() != n) throw ValidationError("dimension vector does not match the quiver's vertex set");
  const auto e = euler_matrix(q);
  const auto p = path_count_matrix(q);
  std::vector<std::int64_t> mid(n, 0), out(n, 0);
  if (direction == Translate::Inverse) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mid[i] += e[i][j] * a[j];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i] -= p[j][i] * mid[j];
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mid[i] += e[j][i] * a[j];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i] -= p[i][j] * mid[j];
  }
  return out;
}

std::optional<DimVector> coxeter_transform(const Quiver& q, const DimVector& a, Translate direction) {
  require_on(q, a);
  auto out = coxeter_apply(q, std::span(a.entries()), direction);
  for (auto x : out)
    if (x < 0) return std::nullopt;
  return DimVector(std::move(out));
}

}  // namespace qgr
