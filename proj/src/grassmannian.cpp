#include "qgr/grassmannian.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <omp.h>

#include "qgr/error.hpp"
#include "qgr/forms.hpp"

namespace qgr {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  return __builtin_mul_overflow(a, b, &r) ? kSaturated : r;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  return __builtin_add_overflow(a, b, &r) ? kSaturated : r;
}

}  // namespace

std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) return 0;
  // Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<std::uint64_t> row{1};
  for (std::uint64_t m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> next(m + 1, 1);
    std::uint64_t qk = 1;
    for (std::uint64_t j = 1; j < m; ++j) {
      qk = sat_mul(qk, q);
      next[j] = sat_add(row[j - 1], sat_mul(qk, row[j]));
    }
    row = std::move(next);
  }
  return row[k];
}

std::uint64_t search_size(const DimVector& d, const DimVector& e, std::uint64_t q) {
  if (d.size() != e.size()) throw ValidationError("dimension vectors of different lengths");
  std::uint64_t s = 1;
  for (std::size_t v = 0; v < d.size(); ++v)
    s = sat_mul(s, gaussian_binomial(static_cast<std::uint64_t>(d[v]), static_cast<std::uint64_t>(e[v]), q));
  return s;
}

std::vector<FiniteMatrix> subspaces(const GaloisField& f, std::size_t n, std::size_t k) {
  std::vector<FiniteMatrix> out;
  if (k > n) return out;
  std::vector<std::size_t> piv(k);
  std::iota(piv.begin(), piv.end(), 0);
  while (true) {
    std::vector<bool> is_piv(n, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;  // (row, col)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = piv[j] + 1; i < n; ++i)
        if (!is_piv[i]) free.push_back({i, j});
    auto m = zero_matrix(f, n, k);
    for (std::size_t j = 0; j < k; ++j) m(piv[j], j) = f.one();
    std::vector<std::uint32_t> digit(free.size(), 0);
    while (true) {
      for (std::size_t t = 0; t < free.size(); ++t) m(free[t].first, free[t].second) = digit[t];
      out.push_back(m);
      std::size_t t = free.size();
      while (t > 0 && digit[t - 1] + 1 == f.order()) digit[--t] = 0;
      if (t == 0) break;
      ++digit[t - 1];
    }
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

namespace {

void append_key(const GaloisField& f, const FiniteMatrix& b, std::vector<std::uint32_t>& key) {
  const auto piv = echelon_pivots(f, b);
  std::vector<bool> is_piv(b.rows(), false);
  for (auto p : piv) {
    key.push_back(static_cast<std::uint32_t>(p));
    is_piv[p] = true;
  }
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t i = piv[j] + 1; i < b.rows(); ++i)
      if (!is_piv[i]) key.push_back(b(i, j));
}

std::vector<std::uint32_t> key_of(const GaloisField& f, const std::vector<FiniteMatrix>& bases) {
  std::vector<std::uint32_t> key;
  for (const auto& b : bases) append_key(f, b, key);
  return key;
}

void check_request(const FiniteRep& x, const DimVector& e, const EnumerationOptions& opts) {
  require_on(x.quiver(), e);
  const auto size = search_size(x.dims(), e, x.field().order());
  if (size > opts.budget) throw BudgetExceeded(size, opts.budget);
}

// Shared state of the depth-first kernels: per vertex and per dimension w of
// the forced part, the (e - w)-subspaces of the (d - w)-dimensional quotient.
class Kernel {
 public:
  Kernel(const FiniteRep& x, const DimVector& e) : x_(x), f_(x.field()), e_(e) {
    order_ = x.quiver().topological_order();
    incoming_.resize(x.quiver().vertex_count());
    for (std::size_t a = 0; a < x.quiver().arrow_count(); ++a)
      incoming_[x.quiver().arrow(a).target].push_back(a);
    catalog_.resize(x.quiver().vertex_count());
    for (std::size_t v = 0; v < catalog_.size(); ++v) {
      const auto ev = static_cast<std::size_t>(e[v]);
      for (std::size_t w = 0; w <= ev; ++w) catalog_[v].push_back(subspaces(f_, x.dim(v) - w, ev - w));
    }
  }

  std::size_t depth() const { return order_.size(); }
  std::size_t vertex_at(std::size_t level) const { return order_[level]; }

  // Echelon basis of the span of the incoming images at v.
  FiniteMatrix forced(std::size_t v, const std::vector<FiniteMatrix>& bases) const {
    FiniteMatrix span = zero_matrix(f_, x_.dim(v), 0);
    for (auto a : incoming_[v]) {
      const auto s = x_.quiver().arrow(a).source;
      span = hconcat(span, multiply(f_, x_.matrix(a), bases[s]), f_.zero());
    }
    return column_echelon(f_, span);
  }

  std::uint64_t candidate_count(std::size_t v, const std::vector<FiniteMatrix>& bases) const {
    const auto w = forced(v, bases).cols();
    if (w > static_cast<std::size_t>(e_[v])) return 0;
    return catalog_[v][w].size();
  }

  std::vector<FiniteMatrix> candidates(std::size_t v, const std::vector<FiniteMatrix>& bases) const {
    const auto wb = forced(v, bases);
    const auto w = wb.cols();
    if (w > static_cast<std::size_t>(e_[v])) return {};
    const auto& cat = catalog_[v][w];
    if (w == 0) return cat;
    const auto piv = echelon_pivots(f_, wb);
    std::vector<bool> is_piv(x_.dim(v), false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::size_t> free_rows;
    for (std::size_t r = 0; r < x_.dim(v); ++r)
      if (!is_piv[r]) free_rows.push_back(r);
    std::vector<FiniteMatrix> out;
    out.reserve(cat.size());
    for (const auto& sub : cat) {
      auto lifted = zero_matrix(f_, x_.dim(v), sub.cols());
      for (std::size_t i = 0; i < sub.rows(); ++i)
        for (std::size_t j = 0; j < sub.cols(); ++j) lifted(free_rows[i], j) = sub(i, j);
      out.push_back(column_echelon(f_, hconcat(wb, lifted, f_.zero())));
    }
    return out;
  }

  void collect(std::size_t level, std::vector<FiniteMatrix>& bases,
               std::vector<std::vector<FiniteMatrix>>& out) const {
    if (level == order_.size()) {
      out.push_back(bases);
      return;
    }
    const auto v = order_[level];
    for (auto& c : candidates(v, bases)) {
      bases[v] = std::move(c);
      collect(level + 1, bases, out);
    }
  }

  std::uint64_t count(std::size_t level, std::vector<FiniteMatrix>& bases) const {
    if (level == order_.size()) return 1;
    const auto v = order_[level];
    if (level + 1 == order_.size()) return candidate_count(v, bases);
    std::uint64_t total = 0;
    for (auto& c : candidates(v, bases)) {
      bases[v] = std::move(c);
      total += count(level + 1, bases);
    }
    return total;
  }

  std::vector<FiniteMatrix> empty_tuple() const {
    std::vector<FiniteMatrix> bases;
    for (std::size_t v = 0; v < x_.quiver().vertex_count(); ++v) bases.push_back(zero_matrix(f_, x_.dim(v), 0));
    return bases;
  }

 private:
  const FiniteRep& x_;
  const GaloisField& f_;
  DimVector e_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> incoming_;
  std::vector<std::vector<std::vector<FiniteMatrix>>> catalog_;
};

struct Frontier {
  std::vector<std::vector<FiniteMatrix>> items;
  std::size_t level = 0;
};

// Expands partial tuples breadth-first until there is enough work to share,
// stopping before the last level.
Frontier build_frontier(const Kernel& k) {
  Frontier fr{{k.empty_tuple()}, 0};
  const std::size_t want = 8 * static_cast<std::size_t>(omp_get_max_threads());
  while (fr.level + 1 < k.depth() && fr.items.size() < want && !fr.items.empty()) {
    const auto v = k.vertex_at(fr.level);
    std::vector<std::vector<FiniteMatrix>> next;
    for (auto& item : fr.items)
      for (auto& c : k.candidates(v, item)) {
        auto copy = item;
        copy[v] = std::move(c);
        next.push_back(std::move(copy));
      }
    fr.items = std::move(next);
    ++fr.level;
  }
  return fr;
}

std::vector<FiniteSubrep> to_sorted_subreps(const std::shared_ptr<const FiniteRep>& x,
                                            std::vector<std::vector<FiniteMatrix>> tuples) {
  std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> keyed;
  keyed.reserve(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) keyed.push_back({key_of(x->field(), tuples[i]), i});
  std::sort(keyed.begin(), keyed.end());
  std::vector<FiniteSubrep> out;
  out.reserve(tuples.size());
  for (const auto& [key, i] : keyed) out.emplace_back(x, std::move(tuples[i]), FiniteSubrep::Trusted{});
  return out;
}

}  // namespace

std::vector<std::uint32_t> enumeration_key(const FiniteSubrep& u) {
  return key_of(u.parent().field(), u.bases());
}

std::vector<FiniteSubrep> enumerate_subreps(std::shared_ptr<const FiniteRep> x, const DimVector& e,
                                            const EnumerationOptions& opts) {
  check_request(*x, e, opts);
  if (!e.fits_in(x->dims())) return {};
  const Kernel k(*x, e);
  const Frontier fr = build_frontier(k);
  std::vector<std::vector<std::vector<FiniteMatrix>>> parts(fr.items.size());
  const auto n = static_cast<std::int64_t>(fr.items.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    auto bases = fr.items[static_cast<std::size_t>(i)];
    k.collect(fr.level, bases, parts[static_cast<std::size_t>(i)]);
  }
  std::vector<std::vector<FiniteMatrix>> all;
  for (auto& p : parts)
    for (auto& t : p) all.push_back(std::move(t));
  return to_sorted_subreps(x, std::move(all));
}

std::uint64_t count_points(const FiniteRep& x, const DimVector& e, const EnumerationOptions& opts) {
  check_request(x, e, opts);
  if (!e.fits_in(x.dims())) return 0;
  const Kernel k(x, e);
  const Frontier fr = build_frontier(k);
  std::uint64_t total = 0;
  const auto n = static_cast<std::int64_t>(fr.items.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (std::int64_t i = 0; i < n; ++i) {
    auto bases = fr.items[static_cast<std::size_t>(i)];
    total += k.count(fr.level, bases);
  }
  return total;
}

std::uint64_t count_points(const RepresentationData& x, const DimVector& e, std::uint64_t q,
                           const EnumerationOptions& opts) {
  const GaloisField f(q);
  return count_points(realize_over(x, f), e, opts);
}

namespace reference {

std::vector<FiniteSubrep> enumerate_subreps(std::shared_ptr<const FiniteRep> x, const DimVector& e,
                                            const EnumerationOptions& opts) {
  check_request(*x, e, opts);
  std::vector<FiniteSubrep> out;
  if (!e.fits_in(x->dims())) return out;
  const auto nv = x->quiver().vertex_count();
  std::vector<std::vector<FiniteMatrix>> lists;
  for (std::size_t v = 0; v < nv; ++v)
    lists.push_back(subspaces(x->field(), x->dim(v), static_cast<std::size_t>(e[v])));
  std::vector<std::size_t> idx(nv, 0);
  while (true) {
    std::vector<FiniteMatrix> bases;
    for (std::size_t v = 0; v < nv; ++v) bases.push_back(lists[v][idx[v]]);
    FiniteSubrep u(x, std::move(bases), FiniteSubrep::Trusted{});
    if (u.is_compatible()) out.push_back(std::move(u));
    std::size_t v = nv;
    while (v > 0 && idx[v - 1] + 1 == lists[v - 1].size()) idx[--v] = 0;
    if (v == 0) break;
    ++idx[v - 1];
  }
  return out;
}

std::uint64_t count_points(const FiniteRep& x, const DimVector& e, const EnumerationOptions& opts) {
  check_request(x, e, opts);
  if (!e.fits_in(x.dims())) return 0;
  const Kernel k(x, e);
  auto bases = k.empty_tuple();
  return k.count(0, bases);
}

}  // namespace reference

std::vector<std::uint64_t> default_samples(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; out.size() < count; ++q) {
    if (!is_prime_power(q)) continue;
    if (!is_prime(q) && q > GaloisField::kMaxExtensionOrder) continue;
    out.push_back(q);
  }
  return out;
}

std::int64_t ambient_dimension(const DimVector& d, const DimVector& e) {
  if (d.size() != e.size()) throw ValidationError("dimension vectors of different lengths");
  std::int64_t s = 0;
  for (std::size_t v = 0; v < d.size(); ++v) s += e[v] * (d[v] - e[v]);
  return s;
}

Interpolation poincare_interpolate(const PointCountTable& t, const std::string& var) {
  const std::size_t need = t.dim_bound + 1;
  if (t.entries.size() < need)
    throw ValidationError("interpolation up to degree " + std::to_string(t.dim_bound) + " needs " +
                          std::to_string(need) + " samples, got " + std::to_string(t.entries.size()));
  std::vector<Rational> xs, ys;
  for (const auto& [q, c] : t.entries) {
    if (xs.size() == need) break;
    xs.emplace_back(q);
    ys.emplace_back(c);
  }
  // Newton divided differences, then expansion into monomial coefficients.
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < need; ++level)
    for (std::size_t i = need - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  std::vector<Rational> coeffs{dd[need - 1]};
  for (std::size_t i = need - 1; i-- > 0;) {
    // coeffs = coeffs * (q - xs[i]) + dd[i]
    std::vector<Rational> next(coeffs.size() + 1, Rational(0));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * xs[i];
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }

  Interpolation out;
  std::vector<Integer> ints;
  for (const auto& c : coeffs) {
    if (!is_integral(c)) {
      out.witness = static_cast<std::uint64_t>(boost::multiprecision::numerator(xs.back()));
      out.reason = "interpolant has non-integral coefficient " + to_string(c);
      return out;
    }
    ints.push_back(boost::multiprecision::numerator(c));
  }
  Polynomial p = univariate(ints, var);
  for (const auto& [q, c] : t.entries) {
    if (p.evaluate(std::vector<Integer>{Integer(q)}) != c) {
      out.witness = q;
      out.reason = "interpolant " + p.to_string() + " misses the count " + c.str() + " at q = " + std::to_string(q);
      return out;
    }
  }
  out.counting = std::move(p);
  return out;
}

Polynomial poincare_from_counting(const Polynomial& counting) {
  Polynomial p(counting.variables());
  for (const auto& [e, c] : counting.terms()) {
    Exponents d = e;
    for (auto& x : d) x *= 2;
    p.add_term(d, c);
  }
  return p;
}

bool duality_check(const Polynomial& p) {
  const auto coeffs = coefficient_list(p);
  for (const auto& c : coeffs)
    if (c < 0) throw ValidationError("polynomial " + p.to_string() + " has a negative coefficient");
  return std::equal(coeffs.begin(), coeffs.end(), coeffs.rbegin());
}

std::string to_string(Duality d) {
  switch (d) {
    case Duality::Pass: return "pass";
    case Duality::Fail: return "fail";
    case Duality::Inapplicable: return "inapplicable";
  }
  return "?";
}

bool good_reduction(const RepresentationData& x, std::uint64_t q) {
  const Integer p = GaloisField(q).characteristic();
  for (const auto& m : x.matrices)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const auto& v = m(i, j);
        if (v == 0) continue;
        if (boost::multiprecision::numerator(v) % p == 0 || boost::multiprecision::denominator(v) % p == 0)
          return false;
      }
  return true;
}

namespace {

std::vector<std::uint64_t> split_good(const RepresentationData& x, const std::vector<std::uint64_t>& qs,
                                      std::vector<std::uint64_t>& bad) {
  if (qs.empty()) throw ValidationError("no field sizes given");
  std::vector<std::uint64_t> good;
  for (auto q : qs) (good_reduction(x, q) ? good : bad).push_back(q);
  if (good.empty()) throw ValidationError("every requested field has bad reduction");
  return good;
}

std::size_t max_tangent_dim(const RepresentationData& x, const DimVector& e, std::uint64_t q,
                            const EnumerationOptions& opts) {
  auto rep = std::make_shared<const FiniteRep>(realize_over(x, GaloisField(q)));
  const auto pts = enumerate_subreps(rep, e, opts);
  std::size_t best = 0;
  for (const auto& u : pts) best = std::max(best, tangent_dim_at(u));
  return best;
}

}  // namespace

CountingResult counting_polynomial(const RepresentationData& x, const DimVector& e,
                                   const std::vector<std::uint64_t>& qs, std::optional<std::size_t> dim_bound,
                                   const EnumerationOptions& opts) {
  require_on(x.quiver, e);
  CountingResult r;
  for (auto q : split_good(x, qs, r.bad_orders)) r.table.entries[q] = count_points(x, e, q, opts);
  if (dim_bound) {
    r.table.dim_bound = *dim_bound;
  } else {
    const auto ambient = static_cast<std::size_t>(std::max<std::int64_t>(0, ambient_dimension(x.dims, e)));
    r.table.dim_bound = ambient;
    if (ambient + 1 > r.table.entries.size())
      r.table.dim_bound = std::min(ambient, max_tangent_dim(x, e, r.table.entries.begin()->first, opts));
  }
  r.interpolation = poincare_interpolate(r.table);
  return r;
}

SmoothnessReport smoothness_report(const RepresentationData& x, const DimVector& e,
                                   const std::vector<std::uint64_t>& qs, const EnumerationOptions& opts) {
  require_on(x.quiver, e);
  SmoothnessReport rep;
  const auto good = split_good(x, qs, rep.bad_orders);
  rep.e = e;
  if (!e.fits_in(x.dims)) throw ValidationError("type " + e.to_string() + " exceeds " + x.dims.to_string());
  rep.euler_value = euler_form(x.quiver, e, x.dims - e);
  std::size_t max_tangent = 0;
  for (auto q : good) {
    auto r = std::make_shared<const FiniteRep>(realize_over(x, GaloisField(q)));
    const auto pts = enumerate_subreps(r, e, opts);
    rep.counts[q] = pts.size();
    std::vector<PointProbe> probes(pts.size());
    const auto n = static_cast<std::int64_t>(pts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
      const auto& u = pts[static_cast<std::size_t>(i)];
      const auto he = hom_ext(u.as_representation(), u.quotient());
      probes[static_cast<std::size_t>(i)] = {q, enumeration_key(u), he.hom, he.ext};
    }
    for (auto& p : probes) {
      if (static_cast<std::int64_t>(p.hom) - static_cast<std::int64_t>(p.ext) != rep.euler_value)
        throw InternalError("hom - ext differs from the Euler form at a point");
      if (p.ext != 0) rep.scheme_smooth_everywhere = false;
      max_tangent = std::max(max_tangent, p.hom);
      rep.points.push_back(std::move(p));
    }
  }
  const auto ambient = static_cast<std::size_t>(std::max<std::int64_t>(0, ambient_dimension(x.dims, e)));
  rep.dim_bound = std::min(ambient, max_tangent);
  PointCountTable t;
  t.dim_bound = rep.dim_bound;
  for (const auto& [q, c] : rep.counts) t.entries[q] = c;
  if (t.entries.size() < t.dim_bound + 1) {
    rep.interpolation.reason = "too few field sizes for degree bound " + std::to_string(t.dim_bound);
    return rep;
  }
  rep.interpolation = poincare_interpolate(t);
  if (rep.interpolation.is_polynomial() && rep.interpolation.counting->constant_term() == 1)
    rep.variety_duality = duality_check(*rep.interpolation.counting) ? Duality::Pass : Duality::Fail;
  return rep;
}

}  // namespace qgr
