#include "congruence/exactfield.hpp"

#include <cctype>
#include <limits>

namespace congruence {

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational literal");
  auto valid_int = [](const std::string& part) {
    std::size_t i = (part.size() > 0 && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  return BigRational(mpz_class(num), mpz_class(den));
}

BigRational BigRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return BigRational(mpq_class(1 / value_));
}

BigRational& BigRational::operator+=(const BigRational& o) {
  value_ += o.value_;
  return *this;
}
BigRational& BigRational::operator-=(const BigRational& o) {
  value_ -= o.value_;
  return *this;
}
BigRational& BigRational::operator*=(const BigRational& o) {
  value_ *= o.value_;
  return *this;
}
BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

std::string BigRational::to_string() const { return value_.get_str(); }

std::int64_t modular_inverse(std::int64_t a, std::int64_t p) {
  if (p < 2) throw DomainError("modulus must be at least 2");
  std::int64_t r0 = ((a % p) + p) % p;
  if (r0 == 0) throw DomainError("no inverse: " + std::to_string(a) + " = 0 mod " + std::to_string(p));
  std::int64_t r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw DomainError("no inverse: gcd is not 1");
  return ((s0 % p) + p) % p;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw DomainError("prime field modulus must be a prime below 2^31, got " + std::to_string(p));
}

Fp PrimeField::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

Fp PrimeField::from_rational(const BigRational& q) const {
  mpz_class n = q.num() % p_;
  if (n < 0) n += p_;
  mpz_class d = q.den() % p_;
  Fp den{static_cast<std::uint32_t>(d.get_ui())};
  if (den.v == 0) throw DivisionByZero();
  return div(Fp{static_cast<std::uint32_t>(n.get_ui())}, den);
}

Fp PrimeField::inv(Fp a) const {
  if (a.v == 0) throw DivisionByZero();
  return {static_cast<std::uint32_t>(modular_inverse(a.v, p_))};
}

std::string PrimeField::to_string(Fp a) const {
  if (a.v > p_ / 2) return "-" + std::to_string(p_ - a.v);
  return std::to_string(a.v);
}

void PrimeField::require_same(const PrimeField& other) const {
  if (other.p_ != p_)
    throw RingMismatch("mixed moduli: F_" + std::to_string(p_) + " vs F_" + std::to_string(other.p_));
}

}  // namespace congruence
