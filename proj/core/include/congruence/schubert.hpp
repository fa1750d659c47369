#pragma once

// The Chow ring of the Grassmannian of lines in P^3 on the Schubert basis
// (s0, s1, s11, s2, s21, s22).

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace congruence {

enum class Schubert : int { S0 = 0, S1, S11, S2, S21, S22 };

inline constexpr std::array<int, 6> kSchubertCodim{0, 1, 2, 2, 3, 4};

/// order: lines through a general point; class: lines in a general plane.
struct Bidegree {
  std::int64_t order = 0;
  std::int64_t cls = 0;

  Bidegree() = default;
  /// Throws DomainError for negative entries.
  Bidegree(std::int64_t order, std::int64_t cls);

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  std::string to_string() const;  // "(a, b)"
};

class SchubertClass {
 public:
  SchubertClass() = default;
  explicit SchubertClass(std::array<std::int64_t, 6> coeffs) : c_(coeffs) {}
  static SchubertClass basis(Schubert s, std::int64_t coeff = 1);
  /// alpha*s2 + beta*s11.
  static SchubertClass of_bidegree(const Bidegree& b);

  std::int64_t operator[](Schubert s) const { return c_[static_cast<std::size_t>(s)]; }
  const std::array<std::int64_t, 6>& coeffs() const { return c_; }

  /// Only the s11 and s2 coefficients are nonzero, and both are >= 0.
  bool is_congruence_class() const;

  SchubertClass& operator+=(const SchubertClass& o);
  friend SchubertClass operator+(SchubertClass a, const SchubertClass& b) { return a += b; }
  friend SchubertClass operator*(std::int64_t k, SchubertClass a);
  friend bool operator==(const SchubertClass&, const SchubertClass&) = default;

  /// e.g. "s2 + s11", "3*s2 - s11", "0".
  std::string to_string() const;
  /// Accepts the to_string() format; throws ParseError.
  static SchubertClass parse(std::string_view text);

 private:
  std::array<std::int64_t, 6> c_{};
};

SchubertClass sch_mul(const SchubertClass& a, const SchubertClass& b);
SchubertClass operator*(const SchubertClass& a, const SchubertClass& b);

/// (coefficient of s2, coefficient of s11). Throws DomainError unless `a`
/// is a congruence class.
Bidegree bidegree_of(const SchubertClass& a);
inline SchubertClass class_of(const Bidegree& b) { return SchubertClass::of_bidegree(b); }

/// Swaps the s2 and s11 coefficients.
SchubertClass perp(const SchubertClass& a);

/// Coefficient of s22 in a*b.
std::int64_t intersection_count(const SchubertClass& a, const SchubertClass& b);

// Tautological bundle classes: c2(Q) = s2, c2(S) = s11, c1(S*) = c1(Q) = s1.
inline const SchubertClass kC2Quotient = SchubertClass::basis(Schubert::S2);
inline const SchubertClass kC2Sub = SchubertClass::basis(Schubert::S11);
inline const SchubertClass kC1Quotient = SchubertClass::basis(Schubert::S1);

struct ChernPair {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  friend bool operator==(const ChernPair&, const ChernPair&) = default;
};

/// c1, c2 of T_{P^n} as multiples of H, H^2: (n+1, C(n+1, 2)). n >= 1.
ChernPair chern_tangent_pn(int n);
/// c1, c2 of the tangent bundle of a degree-d hypersurface in P^n as
/// multiples of h, h^2: (n+1-d, C(n+1,2) - (n+1-d) d). n >= 2, d >= 1.
ChernPair chern_tangent_hypersurface(int n, int d);
/// deg((3h - c1(T_S)) h) for a degree-d surface in P^3: d(d-1). d >= 2.
std::int64_t polar_degree(int d);

}  // namespace congruence
