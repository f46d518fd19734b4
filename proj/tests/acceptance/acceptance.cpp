// Acceptance gate: one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "properties.hpp"
#include "qgr/classify.hpp"
#include "qgr/coefficient_quiver.hpp"
#include "qgr/forms.hpp"
#include "qgr/fpoly.hpp"
#include "qgr/grassmannian.hpp"
#include "qgr/singular_examples.hpp"

using namespace qgr;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0: no runtime limit
  std::function<Outcome()> body;
};

Polynomial P(const char* text, const std::vector<std::string>& vars) { return parse_polynomial(text, vars); }

const std::vector<std::string> kQ{"q"};
const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

Outcome family_table() {
  Outcome o;
  struct Row {
    int lambda;
    const char* poincare;
    Integer chi;
    bool duality;
  };
  for (const Row& row : {Row{0, "2*q^2 + 1", 3, false}, Row{1, "q^2 + 1", 2, true}, Row{2, "q^2 + 1", 2, true}}) {
    const auto fam = tildeA2_family(Rational(row.lambda));
    const auto r = counting_polynomial(fam.rep, fam.e, {2, 3, 5});
    const std::string tag = "lambda = " + std::to_string(row.lambda);
    if (!r.interpolation.is_polynomial()) {
      o.require(false, tag + ": " + r.interpolation.reason);
      continue;
    }
    const auto poincare = poincare_from_counting(*r.interpolation.counting);
    o.require(poincare == P(row.poincare, kQ), tag + ": got " + poincare.to_string());
    o.require(r.interpolation.counting->evaluate(std::vector<Integer>{1}) == row.chi, tag + ": chi");
    o.require(duality_check(poincare) == row.duality, tag + ": duality");
  }
  if (o.pass) o.detail = "P = 2q^2+1 (chi 3, duality fails) at lambda 0; q^2+1 (chi 2) at lambda 1, 2";
  return o;
}

Outcome kronecker_singularity() {
  Outcome o;
  const std::vector<std::string> w{"w13", "w15", "w26", "w46"};
  const auto k = kronecker_3delta_cell();
  o.require(k.cell.equations.size() == 2 && k.cell.equations[0] == P("w26 - w15 + w13*w46", w) &&
                k.cell.equations[1] == P("w13*w26 + w15*w46", w),
            "cell equations");
  o.require(k.hypersurface == P("x*y + x*z + y*z^2", kXYZ), "hypersurface " + k.hypersurface.to_string());
  o.require(jacobian(k.hypersurface) ==
                std::vector<Polynomial>{P("y + z", kXYZ), P("x + z^2", kXYZ), P("x + 2*y*z", kXYZ)},
            "jacobian");
  const auto pts = singular_box_scan(k.hypersurface, 5);
  o.require(pts == std::vector<std::array<std::int64_t, 3>>{{0, 0, 0}}, "singular locus in [-5,5]^3");
  if (o.pass) o.detail = "xy+xz+yz^2, jacobian (y+z, x+z^2, x+2yz), singular locus {0} in [-5,5]^3";
  return o;
}

Outcome fpoly_cross_check() {
  Outcome o;
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto rec = kronecker_preproj_fpoly(n, FpolyMethod::Recursion);
    const auto prod = kronecker_preproj_fpoly(n, FpolyMethod::ProductFormula);
    const auto brute = fpoly_bruteforce(kronecker_preprojective(n));
    o.require(rec == prod && rec == brute, "n = " + std::to_string(n));
  }
  if (o.pass) o.detail = "recursion = product = brute force for n = 0..8";
  return o;
}

Outcome tube_recursion() {
  Outcome o;
  const auto fd = kronecker_f_delta(), xd = kronecker_x_delta();
  o.require(fd == P("1 + y + x*y", kXY), "F_delta");
  const auto seq = fdelta_sequence(fd, xd, 6);
  for (std::size_t n = 0; n <= 6; ++n)
    o.require(seq[n] == companion_power_entry(fd, xd, n), "n = " + std::to_string(n));
  o.require(seq[2] == fpoly_bruteforce(kronecker_regular_string(2)), "F_2delta vs (2,2) string");
  if (o.pass) o.detail = "recursion = matrix power for n <= 6; F_2delta = brute force";
  return o;
}

Outcome singularity_probes() {
  Outcome o;
  const std::vector<std::uint64_t> qs{2, 3, 4, 5};
  {
    const auto rep = kronecker_regular_string(2).to_data();
    const auto r = smoothness_report(rep, DimVector{1, 1}, qs);
    for (const auto& [q, n] : r.counts) o.require(n == 1, "(2,2): count at q = " + std::to_string(q));
    std::size_t tangent = 0;
    for (const auto& p : r.points) tangent = std::max(tangent, p.hom);
    o.require(tangent == 1, "(2,2): tangent dimension");
    o.require(r.interpolation.is_polynomial() && *r.interpolation.counting == P("1", kQ), "(2,2): counting 1");
  }
  {
    const auto rep = kronecker_regular_string(3).to_data();
    const auto r = smoothness_report(rep, DimVector{1, 2}, {2, 3});
    bool any = false;
    for (const auto& p : r.points) any = any || p.ext > 0;
    o.require(any && !r.scheme_smooth_everywhere, "3delta: no point with ext > 0");
  }
  {
    const auto rep = kronecker_preprojective(1).to_data();
    const auto r = smoothness_report(rep, DimVector{0, 1}, qs);
    o.require(r.scheme_smooth_everywhere, "P0: ext > 0 somewhere");
    o.require(r.interpolation.is_polynomial() && *r.interpolation.counting == P("1 + q", kQ), "P0: counting 1 + q");
    o.require(r.interpolation.is_polynomial() &&
                  poincare_from_counting(*r.interpolation.counting) == P("1 + q^2", kQ),
              "P0: poincare 1 + q^2");
  }
  if (o.pass)
    o.detail = "(2,2): 1 point, tangent 1, C = 1; 3delta: ext > 0 found; P0: ext = 0, C = 1+q, P = 1+q^2";
  return o;
}

bool is_radical_generator(const Quiver& q, const DimVector& d) {
  const auto g = symmetric_gram(q);
  std::int64_t gcd = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] <= 0) return false;
    gcd = std::gcd(gcd, d[i]);
    std::int64_t row = 0;
    for (std::size_t j = 0; j < d.size(); ++j) row += g[i][j] * d[j];
    if (row != 0) return false;
  }
  return gcd == 1;
}

Outcome classification_fleet() {
  Outcome o;
  const std::string dir = QGR_DATA_DIR;
  for (const char* name : {"A2", "A3", "D4", "E6"}) {
    const auto t = classify_representation_type(load_quiver(dir + "/" + name + ".quiver"));
    o.require(t.kind == RepKind::Finite, std::string(name) + " not finite");
  }
  struct Tame {
    const char* name;
    DimVector delta;
  };
  for (const auto& [name, delta] :
       {Tame{"kronecker2", DimVector{1, 1}}, Tame{"tildeA22", DimVector{1, 1, 1, 1}},
        Tame{"tildeA2", DimVector{1, 1, 1}}, Tame{"dtilde4", DimVector{2, 1, 1, 1, 1}}}) {
    const auto q = load_quiver(dir + "/" + name + ".quiver");
    const auto t = classify_representation_type(q);
    o.require(t.kind == RepKind::Tame && t.delta && *t.delta == delta, std::string(name) + " delta");
    o.require(t.delta && is_radical_generator(q, *t.delta), std::string(name) + " delta not a radical generator");
  }
  for (const char* name : {"kronecker3", "tildeA2_plus_arrow"}) {
    const auto q = load_quiver(dir + "/" + name + ".quiver");
    o.require(classify_representation_type(q).kind == RepKind::Wild, std::string(name) + " not wild");
    const auto w = minimal_wild_witness(q);
    const auto sub = q.subquiver(w.vertices, w.arrows);
    o.require(classify_representation_type(sub).kind == RepKind::Wild, std::string(name) + " witness not wild");
  }
  if (o.pass) o.detail = "4 finite, 4 tame with radical-generator deltas, 2 wild with wild witnesses";
  return o;
}

Outcome property_suite() {
  Outcome o;
  const auto tilde_a2 = load_quiver(QGR_DATA_DIR "/tildeA2.quiver");
  const auto a = props::euler_identity(100, 2024);
  const auto b = props::string_polynomiality(8, tilde_a2);
  const auto c = props::projective_paths(10, 7);
  for (const auto* s : {&a, &b, &c})
    for (const auto& f : s->failures) o.require(false, f);
  o.require(a.cases >= 200, "too few Euler pairs");
  std::ostringstream d;
  d << a.cases << " Euler pairs, " << b.cases << " (string, type) cases, " << c.cases << " quivers";
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome ar_figure() {
  Outcome o;
  const auto q = load_quiver(QGR_DATA_DIR "/tildeA22.quiver");
  const auto a = coxeter_transform(q, DimVector{0, 1, 0, 1}, Translate::Inverse);
  const auto b = coxeter_transform(q, DimVector{0, 0, 1, 1}, Translate::Inverse);
  o.require(a && *a == DimVector{1, 2, 1, 2}, "tau^-1(0,1,0,1) = " + (a ? a->to_string() : std::string("none")) +
                                                  ", expected (1,2,1,2)");
  o.require(b && *b == DimVector{1, 1, 2, 2}, "tau^-1(0,0,1,1) = " + (b ? b->to_string() : std::string("none")) +
                                                  ", expected (1,1,2,2)");
  if (o.pass) o.detail = "tau^-1 matches";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "family table", 5.0, family_table},
      {2, "Kronecker 3delta singularity", 1.0, kronecker_singularity},
      {3, "F-polynomial cross-check", 10.0, fpoly_cross_check},
      {4, "homogeneous tube recursion", 0.0, tube_recursion},
      {5, "scheme-singularity probes", 5.0, singularity_probes},
      {6, "classification fleet", 1.0, classification_fleet},
      {7, "property suite", 60.0, property_suite},
      {8, "AR-translate figure data", 0.0, ar_figure},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) o.require(false, "over time limit");
    failed += !o.pass;
    char timing[64];
    if (c.limit_s > 0)
      std::snprintf(timing, sizeof timing, "%.3f s / %.0f s", secs, c.limit_s);
    else
      std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::printf("criterion %d %s: %s (%s) [%s]\n", c.id, c.name.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                timing);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
