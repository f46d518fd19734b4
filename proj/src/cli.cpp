#include "qgr/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "qgr/classify.hpp"
#include "qgr/coefficient_quiver.hpp"
#include "qgr/error.hpp"
#include "qgr/fpoly.hpp"
#include "qgr/grassmannian.hpp"
#include "qgr/singular_examples.hpp"

namespace qgr::cli {

std::string sha256_hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), md, &len) != 1)
    throw InternalError("sha256 failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

namespace {

namespace fs = std::filesystem;

// Arguments plus the contents of every file read, in reading order.
class Digest {
 public:
  void add(std::string_view tag, std::string_view bytes) {
    buf_.append(tag);
    buf_.push_back('\0');
    buf_.append(bytes);
    buf_.push_back('\0');
  }

  void add_file(const fs::path& p) {
    const auto text = text::read_file(p);
    add("file", text);
    // The quiver a representation or coefficient file points at.
    text::for_each_line(text, [&](int, std::string_view line) {
      if (!line.starts_with("quiver:")) return;
      const auto ref = p.parent_path() / std::string(text::trim(line.substr(7)));
      if (fs::is_regular_file(ref)) add("file", text::read_file(ref));
    });
  }

  std::string hex() const { return sha256_hex(buf_); }

 private:
  std::string buf_;
};

struct Flags {
  std::string input;
  std::string dim;
  std::optional<std::uint64_t> q;
  std::string qs;
  std::string lambda;
  std::uint64_t budget = kDefaultBudget;
  std::string field;
  std::string method = "recursion";
  std::optional<std::size_t> kronecker_preprojective;
  std::size_t n = 0;
  std::int64_t box = 5;
};

struct Input {
  std::optional<CoefficientQuiver> gamma;
  RepresentationData data;
};

bool is_fixture(const std::string& name, std::string_view canonical) {
  if (name == canonical) return true;
  std::string alt(canonical);
  std::replace(alt.begin(), alt.end(), '-', '_');
  return name == alt;
}

std::optional<Rational> lambda_of(const Flags& f) {
  if (f.lambda.empty()) return std::nullopt;
  return parse_rational(f.lambda);
}

Rational require_lambda(const Flags& f) {
  auto l = lambda_of(f);
  if (!l) throw ValidationError("the family parameter L needs --lambda");
  return *l;
}

Input resolve_input(const Flags& f, Digest& digest) {
  if (is_fixture(f.input, "kronecker-3delta")) {
    auto g = kronecker_regular_string(3);
    auto d = g.to_data();
    return {std::move(g), std::move(d)};
  }
  if (is_fixture(f.input, "tildeA2-family")) {
    auto fam = tildeA2_family(require_lambda(f));
    return {std::move(fam.bound), std::move(fam.rep)};
  }
  const fs::path p(f.input);
  if (!fs::is_regular_file(p)) throw ValidationError("no such file or fixture: " + f.input);
  digest.add_file(p);
  if (p.extension() == ".rep") return {std::nullopt, load_representation(p)};
  auto g = load_coefficient_quiver(p);
  if (g.has_parameter()) g = g.bind_parameter(require_lambda(f));
  auto d = g.to_data();
  return {std::move(g), std::move(d)};
}

const CoefficientQuiver& require_gamma(const Input& in) {
  if (!in.gamma) throw ValidationError("this subcommand needs a coefficient quiver");
  return *in.gamma;
}

DimVector require_dim(const Flags& f, const Quiver& q) {
  if (f.dim.empty()) throw ValidationError("missing --dim");
  auto e = parse_dimvec(f.dim);
  require_on(q, e);
  return e;
}

std::vector<std::uint64_t> parse_orders(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto t = text::trim(item);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        t.size() > 19)
      throw ValidationError("bad field order '" + std::string(t) + "'");
    const auto v = std::stoull(std::string(t));
    GaloisField probe(v);  // validates
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError("empty list of field orders");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> orders(const Flags& f, std::vector<std::uint64_t> fallback) {
  if (!f.field.empty()) {
    const auto spec = parse_field_spec(f.field);
    if (std::holds_alternative<RationalsSpec>(spec))
      throw ValidationError("point counting needs a finite field");
    return {std::get<PrimeFieldSpec>(spec).p};
  }
  if (f.q) return parse_orders(std::to_string(*f.q));
  if (!f.qs.empty()) return parse_orders(f.qs);
  if (fallback.empty()) throw ValidationError("missing --q or --qs");
  return fallback;
}

EnumerationOptions options(const Flags& f) { return {f.budget}; }

std::string asc(const Polynomial& p) { return p.to_string(TermOrder::Ascending); }

std::string bad_suffix(const std::vector<std::uint64_t>& bad) {
  if (bad.empty()) return "";
  std::string s = " | bad reduction at q =";
  for (auto q : bad) s += " " + std::to_string(q);
  return s;
}

std::string poincare_line(const Interpolation& ip) {
  if (!ip.is_polynomial()) {
    std::string s = "not polynomial";
    if (ip.witness) s += " at q = " + std::to_string(*ip.witness);
    return s + ": " + ip.reason;
  }
  const auto p = poincare_from_counting(*ip.counting);
  const auto chi = ip.counting->evaluate(std::vector<Integer>{1});
  return p.to_string() + " | duality: " + (duality_check(p) ? "pass" : "fail") +
         " | chi(1) = " + chi.str();
}

void cmd_classify(const Flags& f, Digest& d, std::ostream& out) {
  d.add_file(f.input);
  const auto q = load_quiver(f.input);
  const auto t = classify_representation_type(q);
  out << to_string(t.kind);
  if (t.delta) out << ", delta = " << t.delta->to_string();
  if (t.tame_components > 1) out << ", tame components = " << t.tame_components;
  out << '\n';
}

void cmd_witness(const Flags& f, Digest& d, std::ostream& out) {
  d.add_file(f.input);
  const auto q = load_quiver(f.input);
  out << minimal_wild_witness(q).describe(q) << '\n';
}

void cmd_euler(const Flags& f, Digest& d, std::ostream& out) {
  const auto in = resolve_input(f, d);
  const auto& g = require_gamma(in);
  if (!g.is_string()) throw ValidationError("successor-closed counts give Euler characteristics only for strings");
  if (!f.dim.empty()) {
    out << "chi = " << successor_closed_count(g, require_dim(f, g.base())) << '\n';
    return;
  }
  for (const auto& [e, n] : successor_closed_table(g)) out << e.to_string() << ": " << n << '\n';
}

void cmd_fpoly(const Flags& f, Digest& d, std::ostream& out) {
  if (f.kronecker_preprojective) {
    if (!f.input.empty()) throw ValidationError("give either a file or --kronecker-preprojective");
    out << asc(kronecker_preproj_fpoly(*f.kronecker_preprojective, parse_fpoly_method(f.method))) << '\n';
    return;
  }
  if (f.input.empty()) throw ValidationError("missing input file");
  out << asc(fpoly_bruteforce(require_gamma(resolve_input(f, d)))) << '\n';
}

void cmd_fdelta(const Flags& f, std::ostream& out) {
  const auto seq = fdelta_sequence(kronecker_f_delta(), kronecker_x_delta(), f.n);
  for (std::size_t k = 0; k < seq.size(); ++k) out << "F_" << k << "delta = " << asc(seq[k]) << '\n';
}

void cmd_count(const Flags& f, Digest& d, std::ostream& out) {
  const auto in = resolve_input(f, d);
  const auto e = require_dim(f, in.data.quiver);
  for (auto q : orders(f, {})) {
    out << "q = " << q << ": " << count_points(in.data, e, q, options(f));
    if (!good_reduction(in.data, q)) out << " (bad reduction)";
    out << '\n';
  }
}

void cmd_poincare(const Flags& f, Digest& d, std::ostream& out) {
  const auto in = resolve_input(f, d);
  const auto e = require_dim(f, in.data.quiver);
  const auto r = counting_polynomial(in.data, e, orders(f, default_samples(5)), std::nullopt, options(f));
  out << poincare_line(r.interpolation) << bad_suffix(r.bad_orders) << '\n';
}

void cmd_smooth(const Flags& f, Digest& d, std::ostream& out) {
  const auto in = resolve_input(f, d);
  const auto e = require_dim(f, in.data.quiver);
  const auto r = smoothness_report(in.data, e, orders(f, default_samples(5)), options(f));
  out << "e = " << r.e.to_string() << '\n';
  out << "<e, d - e> = " << r.euler_value << '\n';
  std::size_t max_tangent = 0;
  for (const auto& [q, n] : r.counts) {
    std::size_t tangent = 0, obstructed = 0;
    for (const auto& p : r.points) {
      if (p.q != q) continue;
      tangent = std::max(tangent, p.hom);
      obstructed += p.ext > 0;
    }
    max_tangent = std::max(max_tangent, tangent);
    out << "q = " << q << ": " << n << " points, max tangent dim " << tangent << ", ext > 0 at " << obstructed
        << '\n';
  }
  if (r.interpolation.is_polynomial()) {
    const auto& c = *r.interpolation.counting;
    out << "counting polynomial: " << c.to_string() << '\n';
    out << "poincare polynomial: " << poincare_from_counting(c).to_string() << '\n';
    out << "variety dimension: " << (c.is_zero() ? std::string("empty") : std::to_string(c.total_degree()))
        << '\n';
  } else {
    out << "counting polynomial: " << poincare_line(r.interpolation) << bad_suffix(r.bad_orders) << '\n';
  }
  out << "max tangent dimension: " << max_tangent << '\n';
  out << "ext(U, X/U) = 0 at every enumerated point: " << (r.scheme_smooth_everywhere ? "yes" : "no") << '\n';
  out << "duality: " << to_string(r.variety_duality) << '\n';
  if (!r.bad_orders.empty()) out << "skipped" << bad_suffix(r.bad_orders).substr(2) << '\n';
}

void examples_kronecker(const Flags& f, std::ostream& out) {
  const auto k = kronecker_3delta_cell();
  out << "cell variables:";
  for (const auto& v : k.cell.variables) out << ' ' << v;
  out << '\n';
  out << "E(a) = " << k.cell.equations[0].to_string() << '\n';
  out << "E(b) = " << k.cell.equations[1].to_string() << '\n';
  out << "w15 = " << k.w15_solution.to_string() << '\n';
  out << "hypersurface (x = w26, y = w13, z = w46): " << k.hypersurface.to_string() << '\n';
  out << "jacobian: (";
  const auto jac = jacobian(k.hypersurface);
  for (std::size_t i = 0; i < jac.size(); ++i) out << (i ? ", " : "") << jac[i].to_string();
  out << ")\n";
  out << "singular points in [-" << f.box << "," << f.box << "]^3:";
  for (const auto& p : singular_box_scan(k.hypersurface, f.box))
    out << " (" << p[0] << "," << p[1] << "," << p[2] << ")";
  out << '\n';
}

void examples_tildeA2(const Flags& f, std::ostream& out) {
  std::vector<Rational> lambdas{0, 1, 2};
  if (auto l = lambda_of(f)) lambdas = {*l};
  const auto qs = orders(f, {2, 3, 5});
  for (const auto& l : lambdas) {
    const auto fam = tildeA2_family(l);
    const auto r = counting_polynomial(fam.rep, fam.e, qs, std::nullopt, options(f));
    out << "lambda = " << to_string(l) << ": " << fam.equation.to_string() << " = 0 in " << fam.ambient << " | "
        << poincare_line(r.interpolation) << bad_suffix(r.bad_orders) << '\n';
  }
}

void cmd_examples(const Flags& f, std::ostream& out) {
  if (is_fixture(f.input, "kronecker-3delta"))
    examples_kronecker(f, out);
  else if (is_fixture(f.input, "tildeA2-family"))
    examples_tildeA2(f, out);
  else
    throw ValidationError("unknown fixture '" + f.input + "' (expected kronecker-3delta or tildeA2-family)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quiver Grassmannian invariants", "qgr"};
  app.require_subcommand(1);
  Flags f;

  auto add_budget = [&](CLI::App* c) { c->add_option("--budget", f.budget, "search size limit"); };
  auto add_counting = [&](CLI::App* c) {
    c->add_option("--dim", f.dim, "dimension vector, comma separated in vertex order");
    c->add_option("--lambda", f.lambda, "value of the family parameter L");
    add_budget(c);
  };

  auto* classify = app.add_subcommand("classify", "representation type of a quiver");
  classify->add_option("quiver", f.input)->required();
  auto* witness = app.add_subcommand("witness", "minimal wild subquiver");
  witness->add_option("quiver", f.input)->required();

  auto* euler = app.add_subcommand("euler", "successor-closed counts of a string");
  euler->add_option("input", f.input)->required();
  euler->add_option("--dim", f.dim, "dimension vector");
  euler->add_option("--lambda", f.lambda, "value of the family parameter L");

  auto* fpoly = app.add_subcommand("fpoly", "F-polynomial");
  fpoly->add_option("input", f.input);
  fpoly->add_option("--lambda", f.lambda, "value of the family parameter L");
  fpoly->add_option("--kronecker-preprojective", f.kronecker_preprojective, "index n of X_n");
  fpoly->add_option("--method", f.method, "recursion|product");

  auto* fdelta = app.add_subcommand("fdelta", "Kronecker homogeneous tube F_(k delta), k = 0..n");
  fdelta->add_option("n", f.n)->required();

  auto* count = app.add_subcommand("count", "points of Gr_e over finite fields");
  count->add_option("input", f.input)->required();
  add_counting(count);
  count->add_option("--q", f.q, "field order");
  count->add_option("--qs", f.qs, "comma separated field orders");
  count->add_option("--field", f.field, "Fp:<p>");

  auto* poincare = app.add_subcommand("poincare", "interpolated Poincare polynomial");
  poincare->add_option("input", f.input)->required();
  add_counting(poincare);
  poincare->add_option("--qs", f.qs, "comma separated field orders");

  auto* smooth = app.add_subcommand("smooth", "tangent and obstruction probes at every point");
  smooth->add_option("input", f.input)->required();
  add_counting(smooth);
  smooth->add_option("--qs", f.qs, "comma separated field orders");

  auto* examples = app.add_subcommand("examples", "built-in fixtures");
  examples->add_option("fixture", f.input)->required();
  examples->add_option("--lambda", f.lambda, "value of the family parameter L");
  examples->add_option("--qs", f.qs, "comma separated field orders");
  examples->add_option("--box", f.box, "half width of the singular-locus scan");
  add_budget(examples);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  Digest digest;
  for (const auto& a : args) digest.add("arg", a);
  std::ostringstream report;
  try {
    const auto* sub = app.get_subcommands().front();
    if (sub == classify) cmd_classify(f, digest, report);
    else if (sub == witness) cmd_witness(f, digest, report);
    else if (sub == euler) cmd_euler(f, digest, report);
    else if (sub == fpoly) cmd_fpoly(f, digest, report);
    else if (sub == fdelta) cmd_fdelta(f, report);
    else if (sub == count) cmd_count(f, digest, report);
    else if (sub == poincare) cmd_poincare(f, digest, report);
    else if (sub == smooth) cmd_smooth(f, digest, report);
    else cmd_examples(f, report);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return kExitInternal;
  }
  out << report.str() << "input digest: sha256:" << digest.hex() << '\n';
  return kExitOk;
}

}  // namespace qgr::cli
