#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qgr/classify.hpp"
#include "qgr/forms.hpp"

using namespace qgr;

namespace {

Quiver data(const char* name) { return load_quiver(std::string(QGR_DATA_DIR "/") + name + ".quiver"); }

// Number of directed paths from a to b, by depth-first walking.
std::int64_t walk_paths(const Quiver& q, std::size_t a, std::size_t b) {
  if (a == b) return 1;
  std::int64_t n = 0;
  for (const auto& arr : q.arrows())
    if (arr.source == a) n += walk_paths(q, arr.target, b);
  return n;
}

}  // namespace

TEST_CASE("euler form values") {
  const auto k2 = data("kronecker2");
  CHECK(euler_form(k2, DimVector{1, 0}, DimVector{0, 1}) == -2);
  CHECK(euler_form(k2, DimVector{0, 0}, DimVector{3, 5}) == 0);
  CHECK(euler_form(data("tildeA22"), DimVector{1, 1, 1, 1}, DimVector{1, 1, 1, 1}) == 0);
}

TEST_CASE("tits form values") {
  CHECK(tits_form(data("kronecker2"), DimVector{2, 3}) == 1);
  CHECK(tits_form(data("kronecker3"), DimVector{1, 1}) == -1);
  CHECK(tits_form(data("A2"), DimVector{1, 1}) == 1);
}

TEST_CASE("symmetric gram is E + E^T") {
  const auto q = data("tildeA22");
  const auto e = euler_matrix(q);
  const auto g = symmetric_gram(q);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(g[i][j] == e[i][j] + e[j][i]);
}

TEST_CASE("projective dimension vectors of A~{2,2}") {
  const auto q = data("tildeA22");
  CHECK(projective_dimvec(q, "q2") == DimVector{0, 0, 0, 1});
  CHECK(projective_dimvec(q, "s1") == DimVector{0, 1, 0, 1});
  CHECK(projective_dimvec(q, "q1") == DimVector{1, 1, 1, 2});
}

TEST_CASE("projective dimension vectors count paths on random quivers") {
  std::mt19937_64 rng(20261015);
  for (int t = 0; t < 10; ++t) {
    const auto q = oracle::random_acyclic_quiver(rng, 2 + t % 5, 8);
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      const auto p = projective_dimvec(q, v);
      for (std::size_t w = 0; w < q.vertex_count(); ++w) CHECK(p[w] == walk_paths(q, v, w));
    }
  }
}

TEST_CASE("coxeter transform: mesh-consistent values on A~{2,2}") {
  const auto q = data("tildeA22");
  const auto inv = [&](DimVector a) { return coxeter_transform(q, a, Translate::Inverse); };
  CHECK(inv({0, 0, 0, 1}) == DimVector{0, 1, 1, 1});
  CHECK(inv({1, 1, 1, 2}) == DimVector{1, 2, 2, 2});
  CHECK(inv({0, 1, 0, 1}) == DimVector{1, 1, 2, 2});
  CHECK(inv({0, 0, 1, 1}) == DimVector{1, 2, 1, 2});
}

TEST_CASE("coxeter transform: forward undoes inverse") {
  for (const char* name : {"tildeA22", "tildeA2", "kronecker2", "dtilde4", "A3"}) {
    const auto q = data(name);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> d(-4, 4);
    for (int t = 0; t < 20; ++t) {
      std::vector<std::int64_t> a(q.vertex_count());
      for (auto& x : a) x = d(rng);
      const auto b = coxeter_apply(q, a, Translate::Inverse);
      CHECK(coxeter_apply(q, b, Translate::Forward) == a);
    }
  }
}

TEST_CASE("coxeter transform fixes delta") {
  for (const char* name : {"tildeA22", "tildeA2", "kronecker2", "dtilde4"}) {
    const auto q = data(name);
    const auto d = delta_root(q);
    CHECK(coxeter_transform(q, d, Translate::Inverse) == d);
    CHECK(coxeter_transform(q, d, Translate::Forward) == d);
  }
}

TEST_CASE("coxeter transform preserves the euler form") {
  const auto q = data("tildeA22");
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> d(-3, 3);
  for (int t = 0; t < 30; ++t) {
    std::vector<std::int64_t> a(4), b(4);
    for (auto& x : a) x = d(rng);
    for (auto& x : b) x = d(rng);
    const auto ta = coxeter_apply(q, a, Translate::Inverse);
    const auto tb = coxeter_apply(q, b, Translate::Inverse);
    CHECK(euler_form(q, ta, tb) == euler_form(q, a, b));
  }
}

TEST_CASE("no translate for injectives and projectives") {
  const auto q = data("kronecker2");
  // P_1 = (0,1) is projective; (1,0) = I_0 is injective.
  CHECK_FALSE(coxeter_transform(q, DimVector{0, 1}, Translate::Forward).has_value());
  CHECK_FALSE(coxeter_transform(q, DimVector{1, 0}, Translate::Inverse).has_value());
}
