#include "qgr/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "qgr/error.hpp"

namespace qgr {

bool GradedLexDescending::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return a > b;
}

Polynomial::Polynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Integer& c) {
  Polynomial p(std::move(variables));
  p.add_term(Exponents(p.variables_.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::size_t index) {
  Polynomial p(std::move(variables));
  if (index >= p.variables_.size()) throw ValidationError("variable index out of range");
  Exponents e(p.variables_.size(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::string_view name) {
  Polynomial p(std::move(variables));
  return variable(p.variables_, p.variable_index(name));
}

Polynomial Polynomial::monomial(std::vector<std::string> variables, Exponents exps, const Integer& c) {
  Polynomial p(std::move(variables));
  if (exps.size() != p.variables_.size()) throw ValidationError("exponent vector has the wrong length");
  p.add_term(exps, c);
  return p;
}

std::size_t Polynomial::variable_index(std::string_view name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) throw ValidationError("unknown variable '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - variables_.begin());
}

Integer Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer Polynomial::constant_term() const { return coefficient(Exponents(variables_.size(), 0)); }

std::uint32_t Polynomial::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

void Polynomial::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != variables_.size()) throw ValidationError("exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::require_same(const Polynomial& o) const {
  if (variables_ != o.variables_) throw ValidationError("polynomials use different variable lists");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same(o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same(o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator-() const { return *this * Integer(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same(o);
  Polynomial r(variables_);
  Exponents e(variables_.size());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator*(const Integer& c) const {
  Polynomial r(variables_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(variables_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= variables_.size()) throw ValidationError("variable index out of range");
  Polynomial r(variables_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    r.add_term(d, c * e[var]);
  }
  return r;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& p) const {
  require_same(p);
  if (var >= variables_.size()) throw ValidationError("variable index out of range");
  Polynomial r(variables_);
  std::vector<Polynomial> powers{constant(variables_, 1)};
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * p);
    Exponents rest = e;
    rest[var] = 0;
    r = r + monomial(variables_, rest, c) * powers[e[var]];
  }
  return r;
}

Integer Polynomial::evaluate(const std::vector<Integer>& point) const {
  if (point.size() != variables_.size()) throw ValidationError("evaluation point has the wrong length");
  Integer sum = 0;
  for (const auto& [e, c] : terms_) {
    Integer t = c;
    for (std::size_t i = 0; i < e.size(); ++i) t *= boost::multiprecision::pow(point[i], e[i]);
    sum += t;
  }
  return sum;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != variables_.size()) throw ValidationError("evaluation point has the wrong length");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

std::string Polynomial::to_string(TermOrder order) const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> list;
  for (const auto& t : terms_) list.push_back(&t);
  if (order == TermOrder::Ascending) std::reverse(list.begin(), list.end());
  std::string s;
  for (const auto* term : list) {
    const auto& [e, c] = *term;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += variables_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      s += mag.str();
    else if (mag == 1)
      s += mono;
    else
      s += mag.str() + "*" + mono;
  }
  return s;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {
    single_letters_ = std::all_of(vars.begin(), vars.end(), [](const auto& v) { return v.size() == 1; });
  }

  Polynomial parse() {
    Polynomial out(vars_);
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [e, c] = term();
      out.add_term(e, c * sign);
      first = false;
      skip();
    }
    return out;
  }

 private:
  std::pair<Exponents, Integer> term() {
    Exponents e(vars_.size(), 0);
    Integer c = 1;
    bool any = false;
    while (pos_ < s_.size()) {
      skip();
      if (pos_ == s_.size()) break;
      char ch = peek();
      if (ch == '*') {
        if (!any) fail("unexpected '*'");
        ++pos_;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= Integer(digits());
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        for (auto [idx, power] : factor()) e[idx] += power;
      } else {
        break;
      }
      any = true;
    }
    if (!any) fail("expected a term");
    return {e, c};
  }

  // One identifier, possibly several juxtaposed one-letter variables.
  std::vector<std::pair<std::size_t, std::uint32_t>> factor() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string word(s_.substr(start, pos_ - start));
    std::vector<std::pair<std::size_t, std::uint32_t>> out;
    auto it = std::find(vars_.begin(), vars_.end(), word);
    if (it != vars_.end()) {
      out.push_back({static_cast<std::size_t>(it - vars_.begin()), 1});
    } else if (single_letters_) {
      for (char ch : word) {
        auto jt = std::find(vars_.begin(), vars_.end(), std::string(1, ch));
        if (jt == vars_.end()) fail("unknown variable '" + word + "'");
        out.push_back({static_cast<std::size_t>(jt - vars_.begin()), 1});
      }
    } else {
      fail("unknown variable '" + word + "'");
    }
    skip();
    if (pos_ < s_.size() && peek() == '^') {
      ++pos_;
      skip();
      if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      out.back().second = static_cast<std::uint32_t>(std::stoul(digits()));
    }
    return out;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  char peek() const { return s_[pos_]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ValidationError("polynomial '" + std::string(s_) + "': " + msg);
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  bool single_letters_ = false;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  return PolyParser(text, variables).parse();
}

Polynomial univariate(const std::vector<Integer>& coefficients, const std::string& var) {
  Polynomial p({var});
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    p.add_term({static_cast<std::uint32_t>(k)}, coefficients[k]);
  return p;
}

std::vector<Integer> coefficient_list(const Polynomial& p) {
  if (p.variables().size() != 1) throw ValidationError("expected a univariate polynomial");
  std::vector<Integer> out(p.is_zero() ? 0 : p.degree_in(0) + 1, Integer(0));
  for (const auto& [e, c] : p.terms()) out[e[0]] = c;
  return out;
}

}  // namespace qgr
