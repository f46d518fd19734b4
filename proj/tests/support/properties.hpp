#pragma once

// Property checks shared by the unit tests and the acceptance binary. Each
// returns a summary; `failures` lists human-readable counterexamples.

#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qgr/coefficient_quiver.hpp"
#include "qgr/forms.hpp"
#include "qgr/grassmannian.hpp"

namespace props {

struct Summary {
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// hom - ext = <dim x, dim y> on random pairs over Q and over F_3.
inline Summary euler_identity(std::size_t pairs_per_field, std::uint64_t seed) {
  Summary s;
  std::mt19937_64 rng(seed);
  auto run = [&](const auto& field) {
    for (std::size_t t = 0; t < pairs_per_field; ++t) {
      const auto q = oracle::random_acyclic_quiver(rng, 1 + t % 4, 5);
      const auto x = oracle::random_rep(rng, q, field, 3, 2);
      const auto y = oracle::random_rep(rng, q, field, 3, 2);
      const auto he = qgr::hom_ext(x, y);
      const auto lhs = static_cast<std::int64_t>(he.hom) - static_cast<std::int64_t>(he.ext);
      const auto rhs = qgr::euler_form(q, x.dims(), y.dims());
      ++s.cases;
      if (lhs != rhs)
        s.failures.push_back(field.name() + ": " + x.dims().to_string() + " vs " + y.dims().to_string());
    }
  };
  run(qgr::RationalField{});
  run(qgr::GaloisField(3));
  return s;
}

/// Every unramified string with at most max_points points over K(2) and
/// over A~2 (both walking directions, every start). Over these bases an
/// interior point must use two different arrows, so a string is fixed by
/// its start vertex, first step and length.
inline std::vector<qgr::CoefficientQuiver> small_strings(std::size_t max_points, const qgr::Quiver& tilde_a2) {
  std::vector<qgr::CoefficientQuiver> out;
  const auto k2 = qgr::kronecker_quiver();
  for (std::size_t v = 0; v < 2; ++v) out.emplace_back(k2, std::vector<qgr::Point>{{"1", v}}, std::vector<qgr::Edge>{});
  for (std::size_t n = 2; n <= max_points; ++n)
    for (std::size_t start = 0; start < 2; ++start)
      for (std::size_t first = 0; first < 2; ++first) {
        std::vector<qgr::Point> pts;
        std::vector<qgr::Edge> edges;
        for (std::size_t i = 0; i < n; ++i) pts.push_back({std::to_string(i + 1), (start + i) % 2});
        for (std::size_t i = 0; i + 1 < n; ++i) {
          const std::size_t label = (first + i) % 2;
          if (pts[i].vertex == 0)
            edges.push_back({label, i, i + 1, {}});
          else
            edges.push_back({label, i + 1, i, {}});
        }
        out.emplace_back(k2, std::move(pts), std::move(edges));
      }
  // A~2: cyclic vertex order left, middle, right with arrows a (left-middle),
  // b (middle-right), c (right-left) joining neighbours.
  for (std::size_t v = 0; v < 3; ++v)
    out.emplace_back(tilde_a2, std::vector<qgr::Point>{{"1", v}}, std::vector<qgr::Edge>{});
  for (std::size_t n = 2; n <= max_points; ++n)
    for (std::size_t start = 0; start < 3; ++start)
      for (int dir : {1, -1}) {
        std::vector<qgr::Point> pts;
        std::vector<qgr::Edge> edges;
        std::size_t v = start;
        for (std::size_t i = 0; i < n; ++i) {
          pts.push_back({std::to_string(i + 1), v});
          v = (v + 3 + static_cast<std::size_t>(dir == 1 ? 1 : 2)) % 3;
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
          const std::size_t u = pts[i].vertex, w = pts[i + 1].vertex;
          std::size_t label = 0;
          for (std::size_t j = 0; j < 3; ++j) {
            const auto& a = tilde_a2.arrow(j);
            if ((a.source == u && a.target == w) || (a.source == w && a.target == u)) label = j;
          }
          const auto& a = tilde_a2.arrow(label);
          if (a.source == u)
            edges.push_back({label, i, i + 1, {}});
          else
            edges.push_back({label, i + 1, i, {}});
        }
        out.emplace_back(tilde_a2, std::move(pts), std::move(edges));
      }
  return out;
}

/// For every string and type: the point count over the field sizes needed
/// for the degree bound plus one check value is a polynomial with
/// nonnegative coefficients whose value at 1 is the successor-closed count.
inline Summary string_polynomiality(std::size_t max_points, const qgr::Quiver& tilde_a2) {
  Summary s;
  for (const auto& g : small_strings(max_points, tilde_a2)) {
    const auto data = g.to_data();
    std::vector<std::int64_t> e(data.dims.size(), 0);
    while (true) {
      const qgr::DimVector ev(e);
      ++s.cases;
      auto rep2 = std::make_shared<const qgr::FiniteRep>(qgr::realize_over(data, qgr::GaloisField(2)));
      std::size_t tangent = 0;
      for (const auto& u : qgr::enumerate_subreps(rep2, ev)) tangent = std::max(tangent, qgr::tangent_dim_at(u));
      const auto ambient = static_cast<std::size_t>(qgr::ambient_dimension(data.dims, ev));
      const auto bound = std::min(tangent, ambient);
      const auto r = qgr::counting_polynomial(data, ev, qgr::default_samples(bound + 2), bound);
      const auto expected = qgr::successor_closed_count(g, ev);
      std::string where = "string of " + std::to_string(g.point_count()) + " points, dims " +
                          data.dims.to_string() + ", e = " + ev.to_string();
      if (!r.interpolation.is_polynomial()) {
        s.failures.push_back(where + ": " + r.interpolation.reason);
      } else {
        const auto& c = *r.interpolation.counting;
        if (c.evaluate(std::vector<qgr::Integer>{1}) != expected)
          s.failures.push_back(where + ": C(1) != successor-closed count");
        for (const auto& [exp, coef] : c.terms())
          if (coef < 0) s.failures.push_back(where + ": negative coefficient");
      }
      std::size_t i = 0;
      while (i < e.size() && ++e[i] > data.dims[i]) e[i++] = 0;
      if (i == e.size()) break;
    }
  }
  return s;
}

// Number of directed paths from a to b.
inline std::int64_t walk_paths(const qgr::Quiver& q, std::size_t a, std::size_t b) {
  if (a == b) return 1;
  std::int64_t n = 0;
  for (const auto& arr : q.arrows())
    if (arr.source == a) n += walk_paths(q, arr.target, b);
  return n;
}

/// dim P_v counts paths out of v, on random acyclic quivers.
inline Summary projective_paths(std::size_t quivers, std::uint64_t seed) {
  Summary s;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < quivers; ++t) {
    const auto q = oracle::random_acyclic_quiver(rng, 2 + t % 5, 9);
    ++s.cases;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      const auto p = qgr::projective_dimvec(q, v);
      for (std::size_t w = 0; w < q.vertex_count(); ++w)
        if (p[w] != walk_paths(q, v, w))
          s.failures.push_back("quiver " + std::to_string(t) + ": P_" + q.vertices()[v]);
    }
  }
  return s;
}

}  // namespace props
