#pragma once

// Exact coefficient fields: arbitrary-precision rationals (GMP backed) and
// prime fields F_p. Both expose the same field-operations contract so that
// the polynomial layer can be instantiated over either.

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "congruence/error.hpp"

namespace congruence {

/// Canonical rational number: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const mpz_class& num, const mpz_class& den);
  explicit BigRational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

  /// Parses "a" or "a/b" with optional sign.
  static BigRational parse(std::string_view text);

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  BigRational inverse() const;

  BigRational operator-() const { return BigRational(mpq_class(-value_)); }
  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const;

 private:
  mpq_class value_;
};

/// Element of a prime field. The modulus lives in the owning PrimeField.
struct Fp {
  std::uint32_t v = 0;
  friend bool operator==(Fp, Fp) = default;
};

/// b with a*b = 1 mod p. Throws DomainError when a = 0 mod p.
std::int64_t modular_inverse(std::int64_t a, std::int64_t p);

bool is_prime(std::uint64_t n);

class RationalField {
 public:
  using Elem = BigRational;

  Elem zero() const { return Elem{}; }
  Elem one() const { return Elem{1}; }
  Elem from_int(long v) const { return Elem{v}; }
  Elem from_rational(const BigRational& q) const { return q; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return a.inverse(); }
  Elem div(const Elem& a, const Elem& b) const { return a * b.inverse(); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  std::uint64_t characteristic() const { return 0; }
  std::string to_string(const Elem& a) const { return a.to_string(); }
  std::string name() const { return "Q"; }

  void require_same(const RationalField&) const {}
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

class PrimeField {
 public:
  using Elem = Fp;

  static constexpr std::uint32_t kDefaultPrime = 32003;

  /// Throws DomainError unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t modulus() const { return p_; }

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  Elem from_int(long v) const;
  /// Reduces num/den mod p; throws DivisionByZero if p divides den.
  Elem from_rational(const BigRational& q) const;

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a.v + b.v;
    return {s >= p_ ? s - p_ : s};
  }
  Elem sub(Elem a, Elem b) const { return {a.v >= b.v ? a.v - b.v : a.v + p_ - b.v}; }
  Elem mul(Elem a, Elem b) const {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
  }
  Elem neg(Elem a) const { return {a.v == 0 ? 0 : p_ - a.v}; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a.v == 0; }
  bool equal(Elem a, Elem b) const { return a.v == b.v; }

  std::uint64_t characteristic() const { return p_; }
  /// Symmetric representative in (-p/2, p/2].
  std::string to_string(Elem a) const;
  std::string name() const { return "F_" + std::to_string(p_); }

  /// Throws RingMismatch when the moduli differ.
  void require_same(const PrimeField& other) const;
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

template <class F>
concept ExactField = requires(const F& f, const typename F::Elem& a, const typename F::Elem& b,
                              const BigRational& q) {
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.from_int(1L) } -> std::same_as<typename F::Elem>;
  { f.from_rational(q) } -> std::same_as<typename F::Elem>;
  { f.add(a, b) } -> std::same_as<typename F::Elem>;
  { f.sub(a, b) } -> std::same_as<typename F::Elem>;
  { f.mul(a, b) } -> std::same_as<typename F::Elem>;
  { f.div(a, b) } -> std::same_as<typename F::Elem>;
  { f.inv(a) } -> std::same_as<typename F::Elem>;
  { f.neg(a) } -> std::same_as<typename F::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.equal(a, b) } -> std::same_as<bool>;
  { f.characteristic() } -> std::same_as<std::uint64_t>;
  { f.to_string(a) } -> std::same_as<std::string>;
};

static_assert(ExactField<RationalField>);
static_assert(ExactField<PrimeField>);

}  // namespace congruence
