#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qgr/numeric.hpp"
#include "qgr/quiver.hpp"
#include "qgr/representation.hpp"

namespace qgr {

/// Edge coefficient: a rational scalar, or the family parameter L times a
/// rational scalar.
struct EdgeWeight {
  Rational value = 1;
  bool parametric = false;

  static EdgeWeight parameter() { return {Rational(1), true}; }
  bool operator==(const EdgeWeight&) const = default;
  std::string to_string() const;  // "1", "-2/3", "L", "2*L"
};

struct Point {
  std::string id;
  std::size_t vertex;  // image in the base quiver
  bool operator==(const Point&) const = default;
};

struct Edge {
  std::size_t arrow;  // label: base arrow index
  std::size_t source;
  std::size_t target;
  EdgeWeight weight;
  bool operator==(const Edge&) const = default;
};

/// Coefficient quiver: points projecting to base vertices and weighted edges
/// projecting to base arrows. Each edge must lie over its label. Being
/// unramified, a tree or a string are checked properties, not invariants,
/// since parametric families may branch.
class CoefficientQuiver {
 public:
  CoefficientQuiver(Quiver base, std::vector<Point> points, std::vector<Edge> edges);

  const Quiver& base() const noexcept { return base_; }
  const std::vector<Point>& points() const noexcept { return points_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t point_count() const noexcept { return points_.size(); }
  std::size_t point_index(std::string_view id) const;  // throws ValidationError

  // Points over vertex v in point order; fiber_position(i) is i's index there.
  const std::vector<std::size_t>& fiber(std::size_t v) const { return fibers_.at(v); }
  std::size_t fiber_position(std::size_t point) const { return fiber_pos_.at(point); }
  DimVector fiber_sizes() const;

  // Neighbouring points, with the joining edge, sorted by point index.
  const std::vector<std::pair<std::size_t, std::size_t>>& adjacent(std::size_t point) const {
    return adjacency_.at(point);
  }

  // At most one edge with a given label starts and ends at each point.
  bool is_unramified() const;
  // Underlying graph connected and without cycles.
  bool is_tree() const;
  // A tree whose points have degree at most 2. The empty quiver counts.
  bool is_string() const;
  bool has_parameter() const;

  /// Substitutes value for L; edges whose weight becomes 0 are dropped.
  CoefficientQuiver bind_parameter(const Rational& value) const;

  /// Same points over the opposite base quiver with every edge reversed.
  CoefficientQuiver opposite() const;

  /// Rational matrices: entry (fiber position of target, fiber position of
  /// source) of the label's matrix is the weight. Throws if parametric.
  RepresentationData to_data() const;

  bool operator==(const CoefficientQuiver& o) const {
    return base_ == o.base_ && points_ == o.points_ && edges_ == o.edges_;
  }

 private:
  Quiver base_;
  std::vector<Point> points_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> fibers_;
  std::vector<std::size_t> fiber_pos_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_;
};

template <ExactField F>
Representation<F> realize(const CoefficientQuiver& g, const F& f) {
  return realize_over(g.to_data(), f);
}

struct TypedSubset {
  std::vector<std::size_t> members;  // sorted point indices
  DimVector type;
  bool operator==(const TypedSubset&) const = default;
};

// Throws ValidationError on an out-of-range point.
TypedSubset make_typed_subset(const CoefficientQuiver& g, std::vector<std::size_t> members);

bool is_successor_closed(const CoefficientQuiver& g, const TypedSubset& b);

/// Number of successor-closed subsets of type e. Dynamic programming over the
/// points in breadth-first order of the underlying graph, keyed by the type
/// so far and the membership of decided points that still have undecided
/// neighbours. Returns 0 when e exceeds the fibers.
std::uint64_t successor_closed_count(const CoefficientQuiver& g, const DimVector& e);

// Counts for every type with a nonzero count.
std::map<DimVector, std::uint64_t> successor_closed_table(const CoefficientQuiver& g);

// The subsets themselves, in lexicographic order of their member lists.
std::vector<TypedSubset> successor_closed_subsets(const CoefficientQuiver& g, const DimVector& e);

/// Two vertices "0" (source) and "1" (sink) joined by m arrows named a, b,
/// c, ... (m <= 26).
Quiver kronecker_quiver(std::size_t m = 2);

/// Zigzag with sources s1..sn over 0 and sinks t1..t(n+1) over 1, edges
/// si -a-> ti and si -b-> t(i+1).
CoefficientQuiver kronecker_preprojective(std::size_t n);

/// Points 1..2n with odd points over the sink and even points over the
/// source; edges 2i -a-> 2i-1 and 2i -b-> 2i+1. Dimension (n, n).
CoefficientQuiver kronecker_regular_string(std::size_t n);

/// String winding around a cyclic base whose vertices q_1..q_n are in file
/// order and whose arrow j joins q_j and q_(j+1) (arrow n joins q_n and q_1).
/// Points l..(r*n + k), point i over q_(((i-1) mod n) + 1), consecutive
/// points joined by the arrow between their vertices. Requires 1 <= k, l <= n
/// and l <= r*n + k.
CoefficientQuiver winding_string(const Quiver& cycle, std::size_t r, std::size_t k, std::size_t l);

enum class StringClass { Preprojective, Preinjective, Regular };
std::string to_string(StringClass c);

/// At each end of the string the base arrow at its vertex not used by the
/// string (both arrows for a one-point string) decides: all pointing
/// towards the ends -> preprojective, all away -> preinjective.
/// Throws ValidationError unless the base is a cycle and g an unramified
/// nonempty string.
StringClass string_regularity_class(const CoefficientQuiver& g);

/// "quiver: <path>", "point <id> @ <vertex>",
/// "edge <arrow>: <src> -> <dst> [weight <w>]" with w an integer, a/b or L.
CoefficientQuiver parse_coefficient_quiver(std::string_view text, const std::filesystem::path& base_dir);
CoefficientQuiver load_coefficient_quiver(const std::filesystem::path& path);

}  // namespace qgr
