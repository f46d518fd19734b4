#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgr/field.hpp"
#include "qgr/polynomial.hpp"
#include "qgr/representation.hpp"

namespace qgr {

using FiniteRep = Representation<GaloisField>;
using FiniteSubrep = Subrep<GaloisField>;
using FiniteMatrix = FieldMatrix<GaloisField>;

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;
};

// Number of k-dimensional subspaces of F_q^n, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q);

/// Product over vertices of the Gaussian binomials [d_p, e_p]_q (saturating).
std::uint64_t search_size(const DimVector& d, const DimVector& e, std::uint64_t q);

/// All k-dimensional subspaces of F^n as reduced column echelon bases:
/// pivot sets in lexicographic order, then the free entries (column by
/// column, top to bottom) counted with the last one fastest.
std::vector<FiniteMatrix> subspaces(const GaloisField& f, std::size_t n, std::size_t k);

/// Lexicographic enumeration key of a point: per vertex in file order, the
/// pivot rows followed by the free entries of its echelon basis.
std::vector<std::uint32_t> enumeration_key(const FiniteSubrep& u);

/// Every subrepresentation of dimension e, in enumeration-key order.
///
/// Depth-first over the vertices in topological order; at each vertex only
/// superspaces of the image of the incoming arrows are listed. The frontier
/// of partial tuples is split across OpenMP threads and the result sorted.
/// Throws BudgetExceeded when search_size exceeds the budget.
std::vector<FiniteSubrep> enumerate_subreps(std::shared_ptr<const FiniteRep> x, const DimVector& e,
                                            const EnumerationOptions& opts = {});

/// Number of points of Gr_e(x) without materializing them.
std::uint64_t count_points(const FiniteRep& x, const DimVector& e, const EnumerationOptions& opts = {});

/// Reduces the rational data mod the field of order q first.
std::uint64_t count_points(const RepresentationData& x, const DimVector& e, std::uint64_t q,
                           const EnumerationOptions& opts = {});

namespace reference {

/// Serial oracle: every tuple of subspaces in enumeration order, filtered
/// for arrow compatibility.
std::vector<FiniteSubrep> enumerate_subreps(std::shared_ptr<const FiniteRep> x, const DimVector& e,
                                            const EnumerationOptions& opts = {});

// Serial depth-first count, same pruning as the parallel kernel.
std::uint64_t count_points(const FiniteRep& x, const DimVector& e, const EnumerationOptions& opts = {});

}  // namespace reference

/// The reduction mod the characteristic of q keeps every nonzero entry
/// nonzero and every denominator invertible. Otherwise the finite field sees
/// a different representation (e.g. a family parameter collapsing to 0).
bool good_reduction(const RepresentationData& x, std::uint64_t q);

/// Field orders 2, 3, 4, 5, 7, 8, 9, ... (prime powers in increasing order).
std::vector<std::uint64_t> default_samples(std::size_t count);

/// sum_p e_p (d_p - e_p), the dimension of the ambient product of Grassmannians.
std::int64_t ambient_dimension(const DimVector& d, const DimVector& e);

struct PointCountTable {
  std::map<std::uint64_t, Integer> entries;  // field order -> count
  std::size_t dim_bound = 0;
};

struct Interpolation {
  std::optional<Polynomial> counting;  // set iff polynomial
  std::optional<std::uint64_t> witness;
  std::string reason;

  bool is_polynomial() const { return counting.has_value(); }
};

/// Exact Lagrange interpolation through the dim_bound + 1 smallest samples,
/// then an integrality check and a check against every remaining sample.
/// Throws ValidationError with fewer than dim_bound + 1 samples.
Interpolation poincare_interpolate(const PointCountTable& t, const std::string& var = "q");

/// Cellular counting polynomial C(q) -> Poincare polynomial C(q^2): a cell of
/// dimension k contributes to cohomological degree 2k.
Polynomial poincare_from_counting(const Polynomial& counting);

/// Palindromic coefficient sequence. Throws ValidationError on a negative
/// coefficient.
bool duality_check(const Polynomial& p);

enum class Duality { Pass, Fail, Inapplicable };
std::string to_string(Duality d);

struct PointProbe {
  std::uint64_t q = 0;
  std::vector<std::uint32_t> key;
  std::size_t hom = 0;  // tangent space dimension
  std::size_t ext = 0;
};

struct SmoothnessReport {
  DimVector e;
  std::int64_t euler_value = 0;  // <e, d - e>
  std::vector<PointProbe> points;
  std::map<std::uint64_t, std::uint64_t> counts;
  std::size_t dim_bound = 0;
  Interpolation interpolation;
  // Ext(U, X/U) = 0 at every enumerated point over every sampled field.
  bool scheme_smooth_everywhere = true;
  Duality variety_duality = Duality::Inapplicable;
  std::vector<std::uint64_t> bad_orders;  // skipped, see good_reduction
};

/// Enumerates Gr_e(x) over each field order in qs and probes every point.
/// The interpolation degree bound is the smaller of the ambient dimension
/// and the largest tangent dimension seen; the latter bounds the degree when
/// the cells are defined over the integers, so every component has rational
/// points.
SmoothnessReport smoothness_report(const RepresentationData& x, const DimVector& e,
                                   const std::vector<std::uint64_t>& qs,
                                   const EnumerationOptions& opts = {});

/// Counts over qs and interpolates with the same degree bound rule. Both
/// skip orders of bad reduction and throw ValidationError if none is left.
struct CountingResult {
  PointCountTable table;
  Interpolation interpolation;
  std::vector<std::uint64_t> bad_orders;
};
CountingResult counting_polynomial(const RepresentationData& x, const DimVector& e,
                                   const std::vector<std::uint64_t>& qs,
                                   std::optional<std::size_t> dim_bound = std::nullopt,
                                   const EnumerationOptions& opts = {});

}  // namespace qgr
