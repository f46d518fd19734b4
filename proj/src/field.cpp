#include "qgr/field.hpp"

#include <tuple>
#include <utility>

#include "qgr/error.hpp"
#include "qgr/quiver.hpp"

namespace qgr {

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (a == 0) throw ValidationError("division by zero");
  return Rational(1) / a;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

}  // namespace

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  const std::uint64_t p = smallest_prime_factor(n);
  while (n % p == 0) n /= p;
  return n == 1;
}

namespace {

// Polynomials over F_p encoded as base-p digit vectors, lowest degree first.
std::vector<std::uint32_t> digits(std::uint32_t x, std::uint32_t p, unsigned k) {
  std::vector<std::uint32_t> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t x = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) x = x * p + *it;
  return x;
}

// Product of a and b modulo the monic polynomial x^k + sum modulus[i] x^i.
std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, const std::vector<std::uint32_t>& modulus,
                     std::uint32_t p, unsigned k) {
  auto da = digits(a, p, k), db = digits(b, p, k);
  std::vector<std::uint32_t> prod(2 * k, 0);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (unsigned deg = 2 * k - 1; deg >= k; --deg) {
    const std::uint32_t c = prod[deg];
    if (c == 0) continue;
    prod[deg] = 0;
    // x^deg = x^(deg-k) * x^k and x^k = -sum modulus[i] x^i
    for (unsigned i = 0; i < k; ++i) prod[deg - k + i] = (prod[deg - k + i] + (p - modulus[i]) * c) % p;
  }
  prod.resize(k);
  return undigits(prod, p);
}

}  // namespace

GaloisField::GaloisField(std::uint64_t order) {
  if (!is_prime_power(order)) throw ValidationError("field order " + std::to_string(order) + " is not a prime power");
  const std::uint64_t p = smallest_prime_factor(order);
  unsigned k = 0;
  for (std::uint64_t m = order; m > 1; m /= p) ++k;
  if (k == 1) {
    if (order > kMaxPrime) throw ValidationError("prime " + std::to_string(order) + " exceeds 2^31-1");
  } else if (order > kMaxExtensionOrder) {
    throw ValidationError("extension field of order " + std::to_string(order) + " exceeds 256");
  }
  p_ = static_cast<std::uint32_t>(p);
  k_ = k;
  q_ = static_cast<std::uint32_t>(order);
  if (k_ == 1) return;

  // First monic irreducible: the one whose multiplication has no zero divisors.
  std::vector<std::uint32_t> modulus;
  for (std::uint32_t code = 0; code < q_; ++code) {
    auto m = digits(code, p_, k_);
    bool ok = true;
    for (std::uint32_t a = 1; a < q_ && ok; ++a)
      for (std::uint32_t b = 1; b < q_ && ok; ++b)
        if (mulmod(a, b, m, p_, k_) == 0) ok = false;
    if (ok) {
      modulus = std::move(m);
      break;
    }
  }
  auto t = std::make_shared<Tables>();
  t->add.resize(std::size_t{q_} * q_);
  t->mul.resize(std::size_t{q_} * q_);
  t->neg.resize(q_);
  t->inv.resize(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    auto da = digits(a, p_, k_);
    std::vector<std::uint32_t> dn(k_);
    for (unsigned i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
    t->neg[a] = undigits(dn, p_);
    for (std::uint32_t b = 0; b < q_; ++b) {
      auto db = digits(b, p_, k_);
      std::vector<std::uint32_t> ds(k_);
      for (unsigned i = 0; i < k_; ++i) ds[i] = (da[i] + db[i]) % p_;
      t->add[a * q_ + b] = undigits(ds, p_);
      const auto m = mulmod(a, b, modulus, p_, k_);
      t->mul[a * q_ + b] = m;
      if (m == 1) t->inv[a] = b;
    }
  }
  tables_ = std::move(t);
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw ValidationError("division by zero in " + name());
  if (k_ > 1) return tables_->inv[a];
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t qt = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - qt * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - qt * s1};
  }
  s0 %= static_cast<std::int64_t>(p_);
  if (s0 < 0) s0 += p_;
  return static_cast<Elem>(s0);
}

GaloisField::Elem GaloisField::from_integer(const Integer& n) const {
  Integer r = n % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r.convert_to<std::uint64_t>());
}

GaloisField::Elem GaloisField::from_rational(const Rational& r) const {
  const Elem num = from_integer(boost::multiprecision::numerator(r));
  const Elem den = from_integer(boost::multiprecision::denominator(r));
  if (den == 0)
    throw ValidationError("entry " + to_string(r) + " is not defined over " + name());
  return mul(num, inv(den));
}

FieldSpec parse_field_spec(std::string_view textv) {
  auto t = text::trim(textv);
  if (t == "Q") return RationalsSpec{};
  if (t.starts_with("Fp:")) {
    auto rest = std::string(t.substr(3));
    std::uint64_t p = 0;
    std::size_t used = 0;
    try {
      p = std::stoull(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != rest.size()) throw ValidationError("bad field '" + std::string(t) + "'");
    if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
    if (p > GaloisField::kMaxPrime) throw ValidationError("prime exceeds 2^31-1");
    return PrimeFieldSpec{static_cast<std::uint32_t>(p)};
  }
  throw ValidationError("bad field '" + std::string(t) + "' (expected Q or Fp:<prime>)");
}

std::string to_string(const FieldSpec& f) {
  if (std::holds_alternative<RationalsSpec>(f)) return "Q";
  return "Fp:" + std::to_string(std::get<PrimeFieldSpec>(f).p);
}

}  // namespace qgr
