#pragma once

#include <concepts>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qgr/numeric.hpp"

namespace qgr {

// Arithmetic interface shared by the exact fields. Elements are plain values;
// all operations go through the field object.
template <class F>
concept ExactField = requires(const F& f, const typename F::Elem& a, const typename F::Elem& b,
                              const Rational& r) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.add(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.sub(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.neg(a) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.from_rational(r) } -> std::convertible_to<typename F::Elem>;
  { f.name() } -> std::convertible_to<std::string>;
};

class RationalField {
 public:
  using Elem = Rational;

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem from_rational(const Rational& r) const { return r; }
  std::string name() const { return "Q"; }
  std::string format(const Elem& a) const { return to_string(a); }

  bool operator==(const RationalField&) const = default;
};

/// Finite field with q = p^k elements.
///
/// Prime fields accept any prime p <= 2^31 - 1 and use modular arithmetic.
/// Extension fields are limited to q <= 256 and use lookup tables built from
/// the first monic irreducible polynomial of degree k in base-p coefficient
/// order (x^2 + x + 1 for F_4). Elements are the integers 0..q-1; an element
/// of an extension field encodes the coefficients of its polynomial residue
/// in base p, lowest degree first, so 0..p-1 is the prime subfield.
class GaloisField {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint64_t kMaxPrime = 2147483647ULL;
  static constexpr std::uint32_t kMaxExtensionOrder = 256;

  explicit GaloisField(std::uint64_t order);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  bool is_prime() const noexcept { return k_ == 1; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const {
    if (k_ == 1) {
      const std::uint64_t s = std::uint64_t{a} + b;
      return static_cast<Elem>(s >= p_ ? s - p_ : s);
    }
    return tables_->add[a * q_ + b];
  }
  Elem neg(Elem a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    return tables_->neg[a];
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (k_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
    return tables_->mul[a * q_ + b];
  }
  Elem inv(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }

  Elem from_integer(const Integer& n) const;
  /// Throws ValidationError when the denominator vanishes in this field.
  Elem from_rational(const Rational& r) const;

  std::string name() const { return "F" + std::to_string(q_); }
  std::string format(Elem a) const { return std::to_string(a); }

  bool operator==(const GaloisField& o) const { return q_ == o.q_; }

 private:
  struct Tables {
    std::vector<Elem> add, mul, neg, inv;
  };

  std::uint32_t p_ = 2;
  unsigned k_ = 1;
  std::uint32_t q_ = 2;
  std::shared_ptr<const Tables> tables_;
};

bool is_prime(std::uint64_t n);
bool is_prime_power(std::uint64_t n);

// Field selector as written in files and on the command line.
struct RationalsSpec {
  bool operator==(const RationalsSpec&) const = default;
};
struct PrimeFieldSpec {
  std::uint32_t p;
  bool operator==(const PrimeFieldSpec&) const = default;
};
using FieldSpec = std::variant<RationalsSpec, PrimeFieldSpec>;

/// "Q" or "Fp:<prime>".
FieldSpec parse_field_spec(std::string_view text);
std::string to_string(const FieldSpec& f);

}  // namespace qgr
