#include "qgr/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qgr/error.hpp"
#include "qgr/field.hpp"
#include "qgr/forms.hpp"
#include "qgr/matrix.hpp"

namespace qgr {

std::string to_string(RepKind k) {
  switch (k) {
    case RepKind::Finite: return "finite";
    case RepKind::Tame: return "tame";
    case RepKind::Wild: return "wild";
  }
  return "?";
}

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::MultiKronecker: return "multi-kronecker";
    case WitnessKind::EmbeddedKronecker: return "embedded-kronecker";
    case WitnessKind::ExtendedDynkinPlus: return "extended-dynkin-plus";
  }
  return "?";
}

namespace {

enum class Definiteness { Positive, Semidefinite, Indefinite };

// Symmetric elimination with positive diagonal pivots. A negative diagonal
// entry, or a zero diagonal with a nonzero off-diagonal entry in the same row,
// certifies a vector of negative norm.
Definiteness definiteness(const IntMatrix& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = g[i][j];
  std::vector<bool> done(n, false);
  bool degenerate = false;
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (m[i][i] < 0) return Definiteness::Indefinite;
      if (m[i][i] > 0 && !pivot) pivot = i;
    }
    if (!pivot) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && m[i][j] != 0) return Definiteness::Indefinite;
      degenerate = true;
      break;
    }
    const std::size_t p = *pivot;
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m[i][p] == 0) continue;
      const Rational factor = m[i][p] / m[p][p];
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) m[i][j] -= factor * m[p][j];
    }
  }
  return degenerate ? Definiteness::Semidefinite : Definiteness::Positive;
}

// Radical of the Gram matrix as primitive integer vectors.
std::vector<std::vector<std::int64_t>> radical(const IntMatrix& g) {
  const RationalField f;
  const std::size_t n = g.size();
  Matrix<Rational> m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = g[i][j];
  const auto basis = nullspace(f, m);
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    Integer lcm = 1;
    for (std::size_t i = 0; i < n; ++i)
      lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(basis(i, k))));
    std::vector<Integer> v(n);
    Integer gcd = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational scaled = basis(i, k) * lcm;
      v[i] = boost::multiprecision::numerator(scaled);
      gcd = boost::multiprecision::gcd(gcd, v[i]);
    }
    std::vector<std::int64_t> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<std::int64_t>(v[i] / gcd);
    out.push_back(std::move(w));
  }
  return out;
}

RepType classify_connected(const Quiver& q) {
  const auto g = symmetric_gram(q);
  switch (definiteness(g)) {
    case Definiteness::Positive: return {RepKind::Finite, std::nullopt, 0};
    case Definiteness::Indefinite: return {RepKind::Wild, std::nullopt, 0};
    case Definiteness::Semidefinite: break;
  }
  auto rad = radical(g);
  if (rad.size() != 1) return {RepKind::Wild, std::nullopt, 0};
  auto v = rad.front();
  if (std::any_of(v.begin(), v.end(), [](auto x) { return x < 0; }))
    for (auto& x : v) x = -x;
  if (std::any_of(v.begin(), v.end(), [](auto x) { return x <= 0; }))
    throw InternalError("radical generator of a connected semidefinite form is not sincere");
  return {RepKind::Tame, DimVector(std::move(v)), 1};
}

std::vector<std::size_t> induced_arrows(const Quiver& q, const std::vector<std::size_t>& vs) {
  std::vector<bool> in(q.vertex_count(), false);
  for (auto v : vs) in[v] = true;
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (in[q.arrow(a).source] && in[q.arrow(a).target]) out.push_back(a);
  return out;
}

bool connected_and(const Quiver& q, const std::vector<std::size_t>& vs,
                   const std::vector<std::size_t>& as, RepKind want) {
  const Quiver sub = q.subquiver(vs, as);
  if (!sub.is_connected()) return false;
  return classify_connected(sub).kind == want;
}

// Calls visit on each k-subset of {0..n-1} in lexicographic order until it
// returns true.
template <class Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

RepType classify_representation_type(const Quiver& q) {
  RepType worst;
  for (const auto& comp : q.components()) {
    const auto sub = q.subquiver(comp, induced_arrows(q, comp));
    const auto t = classify_connected(sub);
    if (t.kind == RepKind::Wild) return {RepKind::Wild, std::nullopt, 0};
    if (t.kind == RepKind::Tame) {
      if (!worst.delta) {
        std::vector<std::int64_t> full(q.vertex_count(), 0);
        for (std::size_t i = 0; i < comp.size(); ++i) full[comp[i]] = (*t.delta)[i];
        worst.delta = DimVector(std::move(full));
      }
      worst.kind = RepKind::Tame;
      ++worst.tame_components;
    }
  }
  return worst;
}

DimVector delta_root(const Quiver& q) {
  auto t = classify_representation_type(q);
  if (t.kind != RepKind::Tame)
    throw ValidationError("quiver is " + to_string(t.kind) + ", not tame; it has no delta");
  return *t.delta;
}

std::int64_t defect(const Quiver& q, const DimVector& x_dim) {
  require_on(q, x_dim);
  return euler_form(q, delta_root(q), x_dim);
}

WildWitness minimal_wild_witness(const Quiver& q) {
  if (classify_representation_type(q).kind != RepKind::Wild)
    throw ValidationError("quiver is not wild");

  std::vector<std::size_t> vs, as;
  for (std::size_t k = 2; k <= q.vertex_count() && vs.empty(); ++k) {
    for_each_subset(q.vertex_count(), k, [&](const std::vector<std::size_t>& subset) {
      auto arrows = induced_arrows(q, subset);
      if (!connected_and(q, subset, arrows, RepKind::Wild)) return false;
      vs = subset;
      as = std::move(arrows);
      return true;
    });
  }
  if (vs.empty()) throw InternalError("wild quiver without a wild connected subquiver");

  for (std::size_t i = 0; i < as.size();) {
    auto fewer = as;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
    if (connected_and(q, vs, fewer, RepKind::Wild))
      as = std::move(fewer);
    else
      ++i;
  }

  WildWitness w;
  w.vertices = vs;
  w.arrows = as;
  if (vs.size() == 2) {
    w.kind = WitnessKind::MultiKronecker;
    w.kronecker_arrows = as;
    return w;
  }

  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t j = i + 1; j < as.size(); ++j) {
      const auto& a = q.arrow(as[i]);
      const auto& b = q.arrow(as[j]);
      const bool same_pair = (a.source == b.source && a.target == b.target) ||
                             (a.source == b.target && a.target == b.source);
      if (!same_pair) continue;
      w.kind = WitnessKind::EmbeddedKronecker;
      w.kronecker_arrows = {as[i], as[j]};
      return w;
    }

  w.kind = WitnessKind::ExtendedDynkinPlus;
  for (std::size_t i = 0; i < as.size(); ++i) {
    auto fewer = as;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
    const Quiver sub = q.subquiver(vs, fewer);
    if (!sub.is_connected()) continue;
    const auto t = classify_connected(sub);
    if (t.kind != RepKind::Tame) continue;
    w.tame_vertices = vs;
    w.tame_arrows = std::move(fewer);
    w.tame_delta = t.delta;
    w.extra_arrow = as[i];
    return w;
  }
  for (std::size_t vi = 0; vi < vs.size(); ++vi) {
    std::vector<std::size_t> incident;
    for (auto a : as)
      if (q.arrow(a).source == vs[vi] || q.arrow(a).target == vs[vi]) incident.push_back(a);
    if (incident.size() != 1) continue;
    auto rest_v = vs;
    rest_v.erase(rest_v.begin() + static_cast<std::ptrdiff_t>(vi));
    std::vector<std::size_t> rest_a;
    for (auto a : as)
      if (a != incident.front()) rest_a.push_back(a);
    const Quiver sub = q.subquiver(rest_v, rest_a);
    if (!sub.is_connected()) continue;
    const auto t = classify_connected(sub);
    if (t.kind != RepKind::Tame) continue;
    w.tame_vertices = std::move(rest_v);
    w.tame_arrows = std::move(rest_a);
    w.tame_delta = t.delta;
    w.extra_vertex = vs[vi];
    w.extra_arrow = incident.front();
    return w;
  }
  throw InternalError("minimal wild subquiver has no tame part of corank one");
}

namespace {

std::string join_names(const Quiver& q, const std::vector<std::size_t>& ids, bool arrows) {
  std::string s;
  for (auto i : ids) {
    if (!s.empty()) s += ' ';
    s += arrows ? q.arrow(i).name : q.vertices()[i];
  }
  return s;
}

}  // namespace

std::string WildWitness::describe(const Quiver& q) const {
  std::ostringstream os;
  os << to_string(kind) << ": vertices {" << join_names(q, vertices, false) << "} arrows {"
     << join_names(q, arrows, true) << "}";
  switch (kind) {
    case WitnessKind::MultiKronecker:
      os << "; " << kronecker_arrows.size() << " parallel arrows";
      break;
    case WitnessKind::EmbeddedKronecker:
      os << "; kronecker pair {" << join_names(q, kronecker_arrows, true) << "}";
      break;
    case WitnessKind::ExtendedDynkinPlus:
      os << "; tame part {" << join_names(q, tame_vertices, false) << "} delta "
         << tame_delta->to_string();
      if (extra_vertex) os << " plus vertex " << q.vertices()[*extra_vertex];
      os << " plus arrow " << q.arrow(*extra_arrow).name;
      break;
  }
  return os.str();
}

}  // namespace qgr
