#pragma once

// Sparse multivariate polynomials, dense univariate polynomials and binary
// forms over an exact field, with the elimination toolkit built on them:
// Sylvester resultants, gcd, Yun squarefree decomposition, multiplicity
// profiles, polars and the plane Hessian.

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "congruence/exactfield.hpp"

namespace congruence {

// ---------------------------------------------------------------------------
// Monomials

struct Monomial {
  std::vector<std::uint32_t> e;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

  std::size_t size() const { return e.size(); }
  std::uint32_t degree() const;
  bool divides(const Monomial& other) const;
  bool is_one() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// Requires b | a.
Monomial operator/(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

/// Graded reverse lexicographic comparison: <0, 0, >0.
int grevlex_compare(const Monomial& a, const Monomial& b);
/// Lexicographic comparison with x_0 > x_1 > ...
int lex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

// ---------------------------------------------------------------------------
// Multivariate polynomials

template <ExactField F>
class PolyRing {
 public:
  PolyRing(F field, std::vector<std::string> names) : field_(std::move(field)), names_(std::move(names)) {}

  const F& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.names_ == b.names_;
  }

 private:
  F field_;
  std::vector<std::string> names_;
};

template <ExactField F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <ExactField F>
RingPtr<F> make_ring(F field, std::vector<std::string> names) {
  return std::make_shared<const PolyRing<F>>(std::move(field), std::move(names));
}

/// Variable names x0..x{n-1}.
std::vector<std::string> indexed_names(const std::string& stem, std::size_t n);

template <ExactField F>
class MultiPoly {
 public:
  using Elem = typename F::Elem;
  struct Term {
    Monomial mono;
    Elem coeff;
  };

  explicit MultiPoly(RingPtr<F> ring);

  static MultiPoly constant(RingPtr<F> ring, const Elem& c);
  static MultiPoly variable(RingPtr<F> ring, std::size_t index);
  static MultiPoly monomial(RingPtr<F> ring, Monomial m, const Elem& c);
  /// Combines like terms, drops zeros, sorts.
  static MultiPoly from_terms(RingPtr<F> ring, std::vector<Term> terms);

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  /// Terms in descending grevlex order; no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  /// Grevlex-leading term. Requires a nonzero polynomial.
  const Term& leading_term() const;
  Elem coefficient(const Monomial& m) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return a.times(b); }
  MultiPoly scale(const Elem& c) const;
  MultiPoly times(const MultiPoly& o) const;
  MultiPoly pow(unsigned k) const;

  MultiPoly derivative(std::size_t var) const;
  Elem evaluate(std::span<const Elem> point) const;
  /// Replaces variable i by images[i]; images live in a common target ring.
  MultiPoly substitute(std::span<const MultiPoly> images) const;
  /// Exact quotient this / d; throws DomainError when d does not divide.
  MultiPoly exact_divide(const MultiPoly& d) const;
  /// Homogeneous component of the given total degree.
  MultiPoly homogeneous_part(unsigned degree) const;

  /// Same polynomial viewed in another ring with the same field and the same
  /// number of variables, or with variables mapped by `var_map` (old -> new).
  MultiPoly rename_into(RingPtr<F> target, std::span<const std::size_t> var_map) const;

  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!(*a.ring_ == *b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) ||
          !a.field().equal(a.terms_[i].coeff, b.terms_[i].coeff))
        return false;
    return true;
  }

 private:
  void require_same_ring(const MultiPoly& o) const;

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

/// sum_i y_i df/dx_i. Throws DomainError for f = 0 or a length mismatch.
template <ExactField F>
MultiPoly<F> polar(const MultiPoly<F>& f, std::span<const typename F::Elem> y);

/// Determinant of the 3x3 matrix of second partials of a homogeneous ternary
/// form. Throws DomainError when deg f < 2 or f is not ternary.
template <ExactField F>
MultiPoly<F> hessian3(const MultiPoly<F>& f);

// ---------------------------------------------------------------------------
// Dense univariate polynomials

template <ExactField F>
class UnivariatePoly {
 public:
  using Elem = typename F::Elem;

  explicit UnivariatePoly(F field) : field_(std::move(field)) {}
  /// Coefficients from low to high degree.
  UnivariatePoly(F field, std::vector<Elem> coeffs);

  static UnivariatePoly monomial(F field, const Elem& c, std::size_t degree);

  const F& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem leading() const;
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

  UnivariatePoly monic() const;
  UnivariatePoly derivative() const;
  Elem evaluate(const Elem& x) const;

  UnivariatePoly& operator+=(const UnivariatePoly& o);
  UnivariatePoly& operator-=(const UnivariatePoly& o);
  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
  friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) { return a.times(b); }
  UnivariatePoly times(const UnivariatePoly& o) const;
  UnivariatePoly scale(const Elem& c) const;
  UnivariatePoly pow(unsigned k) const;

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& d) const;

  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
    return true;
  }

 private:
  void trim();

  F field_;
  std::vector<Elem> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <ExactField F>
UnivariatePoly<F> gcd(const UnivariatePoly<F>& a, const UnivariatePoly<F>& b);

template <ExactField F>
struct UnivariateSquarefree {
  typename F::Elem lead;
  /// (part, multiplicity) with monic pairwise coprime squarefree parts of
  /// positive degree, ordered by multiplicity.
  std::vector<std::pair<UnivariatePoly<F>, int>> parts;
};

/// Yun's algorithm. Throws DomainError for the zero polynomial or when the
/// characteristic does not exceed the degree.
template <ExactField F>
UnivariateSquarefree<F> squarefree_decomposition(const UnivariatePoly<F>& f);

/// Product of the distinct monic irreducible factors.
template <ExactField F>
UnivariatePoly<F> squarefree_part(const UnivariatePoly<F>& f);

/// Univariate view of a polynomial in a one-variable ring, and back.
template <ExactField F>
UnivariatePoly<F> to_univariate(const MultiPoly<F>& f);
template <ExactField F>
MultiPoly<F> from_univariate(const UnivariatePoly<F>& f, RingPtr<F> ring, std::size_t var = 0);

// ---------------------------------------------------------------------------
// Binary forms

/// Homogeneous form of declared degree m in (s, t), stored as coefficients
/// c_i of s^(m-i) t^i. The zero form keeps its declared degree.
template <ExactField F>
class BinaryForm {
 public:
  using Elem = typename F::Elem;

  BinaryForm(F field, int degree);
  BinaryForm(F field, std::vector<Elem> coeffs);

  const F& field() const { return field_; }
  int degree() const { return degree_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  const Elem& coeff(std::size_t i) const { return c_.at(i); }
  bool is_zero() const;
  /// Exponent of the largest power of t dividing the form (its order at (1:0)).
  int t_order() const;

  BinaryForm operator-() const;
  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator-=(const BinaryForm& o);
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) { return a.times(b); }
  BinaryForm times(const BinaryForm& o) const;
  BinaryForm scale(const Elem& c) const;

  BinaryForm derivative_s() const;
  BinaryForm derivative_t() const;
  Elem evaluate(const Elem& s, const Elem& t) const;

  /// f(s) = F(s, 1).
  UnivariatePoly<F> dehomogenize() const;
  /// t^m p(s/t); requires deg p <= m.
  static BinaryForm homogenize(const UnivariatePoly<F>& p, int degree);

  std::string to_string(const std::string& s = "s", const std::string& t = "t") const;

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree_ != b.degree_) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
    return true;
  }

 private:
  F field_;
  int degree_;
  std::vector<Elem> c_;
};

/// Determinant of the declared-degree Sylvester matrix. A zero value means a
/// common root over the closure or a joint collapse of both leading
/// coefficients. Throws DomainError when both forms are zero.
template <ExactField F>
typename F::Elem resultant_binary(const BinaryForm<F>& f, const BinaryForm<F>& g);

/// Sylvester resultant of binary forms whose coefficients are polynomials
/// (same coefficient convention as BinaryForm). Evaluated by fraction-free
/// Bareiss elimination with exact polynomial division.
template <ExactField F>
MultiPoly<F> resultant_symbolic(std::span<const MultiPoly<F>> f, std::span<const MultiPoly<F>> g);

/// Res(dF/ds, dF/dt), used only as a vanishing test.
template <ExactField F>
typename F::Elem discriminant(const BinaryForm<F>& f);

/// gcd with a monic dehomogenization; degree is the number of common roots
/// with multiplicity. gcd(0, 0) is an error.
template <ExactField F>
BinaryForm<F> gcd(const BinaryForm<F>& a, const BinaryForm<F>& b);

template <ExactField F>
struct BinarySquarefree {
  typename F::Elem lead;
  std::vector<std::pair<BinaryForm<F>, int>> parts;
};

/// F = lead * prod part_i^i, parts squarefree, pairwise coprime, grouped by
/// multiplicity. Throws DomainError for the zero form or small characteristic.
template <ExactField F>
BinarySquarefree<F> squarefree_decomposition(const BinaryForm<F>& f);

// ---------------------------------------------------------------------------
// Multiplicity profiles

/// Multiset of root multiplicities of a binary form over the algebraic closure:
/// counts[m] = number of distinct roots of multiplicity exactly m.
struct MultiplicityProfile {
  std::map<int, int> counts;
  int degree = 0;

  MultiplicityProfile() = default;
  MultiplicityProfile(std::initializer_list<std::pair<const int, int>> init);

  int count(int multiplicity) const;
  int distinct_roots() const;
  int max_multiplicity() const;
  int roots_with_multiplicity_at_least(int m) const;
  bool empty() const { return counts.empty(); }
  std::string to_string() const;

  friend bool operator==(const MultiplicityProfile& a, const MultiplicityProfile& b) {
    return a.counts == b.counts && a.degree == b.degree;
  }
};

/// Throws DomainError for the zero form.
template <ExactField F>
MultiplicityProfile multiplicity_profile(const BinaryForm<F>& f);

}  // namespace congruence
