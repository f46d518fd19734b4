#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qgr/coefficient_quiver.hpp"
#include "qgr/error.hpp"
#include "qgr/forms.hpp"
#include "qgr/representation.hpp"

using namespace qgr;

namespace {

const RationalField Q;

Representation<RationalField> simple(const Quiver& q, std::size_t v) {
  auto e = DimVector::unit(q.vertex_count(), v);
  std::vector<FieldMatrix<RationalField>> ms;
  for (const auto& a : q.arrows())
    ms.push_back(zero_matrix(Q, static_cast<std::size_t>(e[a.target]), static_cast<std::size_t>(e[a.source])));
  return Representation<RationalField>(q, Q, e, std::move(ms));
}

}  // namespace

TEST_CASE("kronecker hom and ext values") {
  const auto k = kronecker_quiver();
  const auto p0 = realize(kronecker_preprojective(1), Q);  // (1,2)
  const auto p1 = realize(kronecker_preprojective(0), Q);  // (0,1)
  CHECK(p0.dims() == DimVector{1, 2});
  CHECK(hom_dim(p1, p0) == 2);
  CHECK(ext_dim(p1, p0) == 0);
  const auto s0 = simple(k, 0), s1 = simple(k, 1);
  CHECK(hom_dim(s0, s1) == 0);
  CHECK(ext_dim(s0, s1) == 2);
  CHECK(ext_dim(s1, s0) == 0);
}

TEST_CASE("self extensions of the (1,1) band at parameter 0") {
  const auto k = kronecker_quiver();
  FieldMatrix<RationalField> one(1, 1, Rational(1)), zero(1, 1, Rational(0));
  const Representation<RationalField> x(k, Q, DimVector{1, 1}, {one, zero});
  CHECK(hom_dim(x, x) == 1);
  CHECK(ext_dim(x, x) == 1);
}

TEST_CASE("shape validation") {
  const auto k = kronecker_quiver();
  FieldMatrix<RationalField> wrong(2, 1, Rational(0));
  CHECK_THROWS_AS(Representation<RationalField>(k, Q, DimVector{1, 1}, {wrong, wrong}), ValidationError);
  CHECK_THROWS_AS(Representation<RationalField>(k, Q, DimVector{1, 1}, {}), ValidationError);
  const auto x = realize(kronecker_preprojective(1), Q);
  const auto other = Representation<RationalField>::zero(load_quiver(QGR_DATA_DIR "/A2.quiver"), Q);
  CHECK_THROWS_AS(hom_dim(x, other), ValidationError);
}

TEST_CASE("subrep of the (2,2) string: quotient and tangent space") {
  const auto x = std::make_shared<const Representation<RationalField>>(realize(kronecker_regular_string(2), Q));
  // Points 1,3 over the sink, 2,4 over the source. The unique (1,1) subrep
  // is spanned by b4 at the source and b3 at the sink.
  FieldMatrix<RationalField> u0(2, 1, Rational(0)), u1(2, 1, Rational(0));
  u0(1, 0) = 1;
  u1(1, 0) = 1;
  const Subrep<RationalField> u(x, {u0, u1});
  CHECK(u.dims() == DimVector{1, 1});
  const auto quot = quotient_by_subrep(u);
  CHECK(quot.dims() == DimVector{1, 1});
  CHECK(tangent_dim_at(u) == 1);
  // Hom - Ext = <e, d - e> = 0 here, so Ext(U, X/U) = 1 as well.
  CHECK(ext_dim(u.as_representation(), quot) == 1);
}

TEST_CASE("non closed subspaces are rejected") {
  const auto x = std::make_shared<const Representation<RationalField>>(realize(kronecker_regular_string(2), Q));
  FieldMatrix<RationalField> u0(2, 1, Rational(0)), u1(2, 1, Rational(0));
  u0(0, 0) = 1;  // b2 maps to b1 and b3
  u1(1, 0) = 1;
  CHECK_THROWS_AS(Subrep<RationalField>(x, {u0, u1}), ValidationError);
}

TEST_CASE("direct sums add hom dimensions") {
  std::mt19937_64 rng(5);
  const auto q = load_quiver(QGR_DATA_DIR "/tildeA2.quiver");
  for (int t = 0; t < 20; ++t) {
    const auto a = oracle::random_rep(rng, q, Q, 2, 2);
    const auto x = oracle::random_rep(rng, q, Q, 2, 2);
    const auto y = oracle::random_rep(rng, q, Q, 2, 2);
    CHECK(hom_dim(a, direct_sum(x, y)) == hom_dim(a, x) + hom_dim(a, y));
    CHECK(ext_dim(direct_sum(x, y), a) == ext_dim(x, a) + ext_dim(y, a));
  }
}

TEST_CASE("representation file") {
  const auto d = load_representation(QGR_DATA_DIR "/kronecker_regular.rep");
  CHECK(d.dims == DimVector{1, 1});
  CHECK(std::holds_alternative<RationalsSpec>(d.field));
  const auto x = realize_over(d, Q);
  CHECK(hom_dim(x, x) == 1);
  CHECK_THROWS_AS(parse_representation("quiver: nowhere.quiver\n", "."), ValidationError);
  const std::string text = "quiver: kronecker2.quiver\ndim 0: 1\ndim 1: 2\nmatrix a: 1; 0\nmatrix b: 0; 1\n";
  const auto p0 = realize_over(parse_representation(text, QGR_DATA_DIR), Q);
  CHECK(p0 == realize(kronecker_preprojective(1), Q));
  CHECK_THROWS_AS(parse_representation("quiver: kronecker2.quiver\ndim 0: 1\nmatrix a: 1 2\n", QGR_DATA_DIR),
                  ValidationError);
}

TEST_CASE("bad denominators are reported on reduction") {
  const std::string text = "quiver: kronecker2.quiver\ndim 0: 1\ndim 1: 1\nmatrix a: 1/3\n";
  const auto d = parse_representation(text, QGR_DATA_DIR);
  CHECK_THROWS_AS(realize_over(d, GaloisField(3)), ValidationError);
  CHECK_NOTHROW(realize_over(d, GaloisField(5)));
}
