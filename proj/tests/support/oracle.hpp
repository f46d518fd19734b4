#pragma once

// Naive reference computations used as test oracles. Nothing here calls the
// echelon machinery of the library.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qgr/coefficient_quiver.hpp"
#include "qgr/grassmannian.hpp"

namespace oracle {

using Vec = std::vector<std::uint32_t>;
using Space = std::set<Vec>;  // every vector of the subspace

inline std::vector<Vec> all_vectors(std::uint32_t p, std::size_t n) {
  std::vector<Vec> out;
  Vec v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline Space span(std::uint32_t p, std::size_t n, const std::vector<Vec>& gens) {
  Space s{Vec(n, 0)};
  for (const auto& g : gens) {
    Space next;
    for (const auto& v : s)
      for (std::uint32_t c = 0; c < p; ++c) {
        Vec w = v;
        for (std::size_t i = 0; i < n; ++i) w[i] = (w[i] + c * g[i]) % p;
        next.insert(w);
      }
    s = std::move(next);
  }
  return s;
}

/// Every k-dimensional subspace of F_p^n, found by spanning all k-tuples of
/// vectors and keeping those of size p^k.
inline std::vector<Space> subspaces(std::uint32_t p, std::size_t n, std::size_t k) {
  std::set<Space> found;
  const auto vecs = all_vectors(p, n);
  std::size_t target = 1;
  for (std::size_t i = 0; i < k; ++i) target *= p;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<Vec> gens;
    for (auto i : idx) gens.push_back(vecs[i]);
    auto s = span(p, n, gens);
    if (s.size() == target) found.insert(std::move(s));
    std::size_t i = 0;
    while (i < k && ++idx[i] == vecs.size()) idx[i++] = 0;
    if (i == k) break;
  }
  return {found.begin(), found.end()};
}

inline Vec apply(std::uint32_t p, const qgr::FiniteMatrix& m, const Vec& v) {
  Vec out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += std::uint64_t{m(i, j)} * v[j];
    out[i] = static_cast<std::uint32_t>(s % p);
  }
  return out;
}

/// Points of Gr_e(x) over a prime field: every tuple of subspaces tested for
/// closure under every arrow, vector by vector.
inline std::uint64_t grassmannian_count(const qgr::FiniteRep& x, const qgr::DimVector& e) {
  const auto p = x.field().order();
  const auto& q = x.quiver();
  std::vector<std::vector<Space>> choices;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    choices.push_back(subspaces(p, x.dim(v), static_cast<std::size_t>(e[v])));
  for (const auto& c : choices)
    if (c.empty()) return 0;
  std::vector<std::size_t> idx(choices.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < q.arrow_count() && ok; ++a) {
      const auto& arr = q.arrow(a);
      const auto& src = choices[arr.source][idx[arr.source]];
      const auto& dst = choices[arr.target][idx[arr.target]];
      for (const auto& v : src)
        if (!dst.count(apply(p, x.matrix(a), v))) {
          ok = false;
          break;
        }
    }
    count += ok;
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return count;
}

/// Successor-closed subsets by type, over all 2^n subsets.
inline std::map<qgr::DimVector, std::uint64_t> successor_closed_table(const qgr::CoefficientQuiver& g) {
  const auto n = g.point_count();
  std::map<qgr::DimVector, std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool closed = true;
    for (const auto& e : g.edges())
      if ((mask >> e.source & 1) && !(mask >> e.target & 1)) closed = false;
    if (!closed) continue;
    std::vector<std::int64_t> type(g.base().vertex_count(), 0);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) ++type[g.points()[i].vertex];
    ++out[qgr::DimVector(type)];
  }
  return out;
}

inline std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  // Count of k-tuples of independent vectors divided by |GL_k|.
  std::uint64_t num = 1, den = 1;
  std::uint64_t qn = 1, qk = 1;
  for (std::uint64_t i = 0; i < n; ++i) qn *= q;
  for (std::uint64_t i = 0; i < k; ++i) qk *= q;
  std::uint64_t qi = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= qn - qi;
    den *= qk - qi;
    qi *= q;
  }
  return num / den;
}

/// Random acyclic quiver: vertices v0..v(n-1), arrows only from lower to
/// higher index, parallel arrows allowed.
inline qgr::Quiver random_acyclic_quiver(std::mt19937_64& rng, std::size_t n, std::size_t max_arrows) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<qgr::ArrowSpec> arrows;
  if (n >= 2) {
    std::uniform_int_distribution<std::size_t> count(0, max_arrows), pick(0, n - 1);
    const auto m = count(rng);
    for (std::size_t k = 0; k < m; ++k) {
      auto a = pick(rng), b = pick(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      arrows.push_back({"a" + std::to_string(k), names[a], names[b]});
    }
  }
  return qgr::Quiver(names, arrows);
}

template <class F>
qgr::Representation<F> random_rep(std::mt19937_64& rng, const qgr::Quiver& q, const F& f, std::int64_t max_dim,
                                  int max_entry) {
  std::uniform_int_distribution<std::int64_t> dim(0, max_dim);
  std::uniform_int_distribution<int> entry(-max_entry, max_entry);
  std::vector<std::int64_t> d;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) d.push_back(dim(rng));
  const qgr::DimVector dims(d);
  std::vector<qgr::FieldMatrix<F>> ms;
  for (const auto& a : q.arrows()) {
    auto m = qgr::zero_matrix(f, static_cast<std::size_t>(d[a.target]), static_cast<std::size_t>(d[a.source]));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.from_rational(qgr::Rational(entry(rng)));
    ms.push_back(std::move(m));
  }
  return qgr::Representation<F>(q, f, dims, std::move(ms));
}

}  // namespace oracle
