#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qgr/coefficient_quiver.hpp"
#include "qgr/error.hpp"
#include "qgr/singular_examples.hpp"

using namespace qgr;

namespace {

// Random coefficient quiver over K(2): each new point is attached to an
// earlier point over the other vertex by a random arrow.
CoefficientQuiver random_kronecker_tree(std::mt19937_64& rng, std::size_t n) {
  std::vector<Point> pts;
  std::vector<Edge> edges;
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t v = static_cast<std::size_t>(coin(rng));
    pts.push_back({std::to_string(i), v});
    std::vector<std::size_t> partners;
    for (std::size_t j = 0; j < i; ++j)
      if (pts[j].vertex != v) partners.push_back(j);
    if (partners.empty()) continue;
    const auto j = partners[std::uniform_int_distribution<std::size_t>(0, partners.size() - 1)(rng)];
    const std::size_t arrow = static_cast<std::size_t>(coin(rng));
    if (v == 0)
      edges.push_back({arrow, i, j, {}});
    else
      edges.push_back({arrow, j, i, {}});
  }
  return CoefficientQuiver(kronecker_quiver(), std::move(pts), std::move(edges));
}

}  // namespace

TEST_CASE("successor closed subsets: boundary cases") {
  const auto p0 = kronecker_preprojective(1);
  CHECK(is_successor_closed(p0, make_typed_subset(p0, {})));
  CHECK(is_successor_closed(p0, make_typed_subset(p0, {0, 1, 2})));
  // s1, t1 misses the b-edge s1 -> t2.
  CHECK_FALSE(is_successor_closed(p0, make_typed_subset(p0, {0, 1})));
  CHECK_THROWS_AS(make_typed_subset(p0, {7}), ValidationError);
}

TEST_CASE("successor closed counts") {
  CHECK(successor_closed_count(kronecker_preprojective(0), DimVector{0, 1}) == 1);
  CHECK(successor_closed_count(kronecker_regular_string(3), DimVector{1, 2}) == 4);
  CHECK(successor_closed_count(kronecker_preprojective(1), DimVector{1, 1}) == 0);
  CHECK(successor_closed_count(kronecker_preprojective(1), DimVector{5, 0}) == 0);
}

TEST_CASE("dynamic programme agrees with exhaustive subsets") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 60; ++t) {
    const auto g = random_kronecker_tree(rng, 1 + t % 12);
    const auto table = successor_closed_table(g);
    CHECK(table == oracle::successor_closed_table(g));
    for (const auto& [e, n] : table) {
      CHECK(successor_closed_count(g, e) == n);
      const auto subs = successor_closed_subsets(g, e);
      CHECK(subs.size() == n);
      for (const auto& s : subs) {
        CHECK(s.type == e);
        CHECK(is_successor_closed(g, s));
      }
    }
  }
}

TEST_CASE("preprojective constructor shapes") {
  CHECK(kronecker_preprojective(0).fiber_sizes() == DimVector{0, 1});
  CHECK(kronecker_preprojective(1).fiber_sizes() == DimVector{1, 2});
  CHECK(kronecker_preprojective(3).fiber_sizes() == DimVector{3, 4});
  CHECK(kronecker_preprojective(3).is_string());
  CHECK(kronecker_preprojective(3).is_unramified());
}

TEST_CASE("realized strings have 0/1 matrices") {
  const auto x = realize(kronecker_preprojective(3), GaloisField(2));
  for (const auto& m : x.matrices()) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::size_t ones = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) ones += m(i, j);
      CHECK(ones <= 1);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::size_t ones = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) ones += m(i, j);
      CHECK(ones <= 1);
    }
  }
}

TEST_CASE("family at parameter 0 keeps one entry in the c matrix") {
  const auto fam = tildeA2_family(Rational(0));
  const auto& c = fam.rep.matrices[2];
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) nonzero += c(i, j) != 0;
  CHECK(nonzero == 1);
  CHECK(fam.gamma.has_parameter());
  CHECK_FALSE(fam.bound.has_parameter());
  CHECK_FALSE(fam.gamma.is_unramified());
  CHECK_THROWS_AS(fam.gamma.to_data(), ValidationError);
}

TEST_CASE("regularity class of strings") {
  CHECK(string_regularity_class(kronecker_preprojective(0)) == StringClass::Preprojective);
  CHECK(string_regularity_class(kronecker_preprojective(4)) == StringClass::Preprojective);
  CHECK(string_regularity_class(kronecker_preprojective(4).opposite()) == StringClass::Preinjective);
  CHECK(string_regularity_class(kronecker_regular_string(3)) == StringClass::Regular);
  CHECK_THROWS_AS(string_regularity_class(tildeA2_family_gamma()), ValidationError);
}

TEST_CASE("winding strings") {
  const auto q = load_quiver(QGR_DATA_DIR "/tildeA2.quiver");
  for (std::size_t r = 0; r <= 2; ++r)
    for (std::size_t k = 1; k <= 3; ++k)
      for (std::size_t l = 1; l <= 3; ++l) {
        if (l > r * 3 + k) {
          CHECK_THROWS_AS(winding_string(q, r, k, l), ValidationError);
          continue;
        }
        const auto g = winding_string(q, r, k, l);
        CHECK(g.point_count() == r * 3 + k - l + 1);
        CHECK(g.is_string());
        CHECK(g.is_unramified());
        CHECK(g.points().front().vertex == l - 1);
        CHECK(g.points().back().vertex == (k - 1) % 3);
        CHECK(g.fiber_sizes().total() == static_cast<std::int64_t>(g.point_count()));
      }
  // One full winding covers every vertex once more.
  const auto g = winding_string(q, 1, 3, 1);
  CHECK(g.fiber_sizes() == DimVector{2, 2, 2});
  CHECK_THROWS_AS(winding_string(load_quiver(QGR_DATA_DIR "/A3.quiver"), 1, 1, 1), ValidationError);
}

TEST_CASE("coefficient quiver file") {
  const auto g = load_coefficient_quiver(QGR_DATA_DIR "/kronecker_3delta.coeff");
  CHECK(g == kronecker_regular_string(3));
  const auto fam = load_coefficient_quiver(QGR_DATA_DIR "/tildeA2_family.coeff");
  CHECK(fam == tildeA2_family_gamma());
  CHECK_THROWS_AS(parse_coefficient_quiver("quiver: kronecker2.quiver\npoint p @ 0\npoint r @ 1\n"
                                           "edge a: r -> p\n",
                                           QGR_DATA_DIR),
                  ValidationError);
  CHECK_THROWS_AS(parse_coefficient_quiver("quiver: kronecker2.quiver\npoint p @ 0\npoint p @ 1\n", QGR_DATA_DIR),
                  ValidationError);
  const auto w = parse_coefficient_quiver(
      "quiver: kronecker2.quiver\npoint p @ 0\npoint r @ 1\nedge a: p -> r weight -2/3\n", QGR_DATA_DIR);
  CHECK(w.edges()[0].weight.value == Rational(-2, 3));
  CHECK(w.edges()[0].weight.to_string() == "-2/3");
}

TEST_CASE("binding drops zero edges") {
  const auto g = tildeA2_family_gamma();
  CHECK(g.bind_parameter(Rational(0)).edges().size() == 5);
  CHECK(g.bind_parameter(Rational(3)).edges().size() == 7);
  CHECK(g.bind_parameter(Rational(0)).is_string());
}
