#pragma once

// Chow forms of parametrized rational space curves, membership of lines in
// the Chow and Hurwitz hypersurfaces, and the line-contact classification of
// their singular loci.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "congruence/linegeom.hpp"
#include "congruence/polyring.hpp"
#include "congruence/random.hpp"

namespace congruence {

/// Image of P^1 -> P^3, (s:t) -> (phi0 : phi1 : phi2 : phi3).
template <ExactField F>
class RationalSpaceCurve {
 public:
  using Elem = typename F::Elem;

  /// Throws DomainError unless the forms share a degree d >= 1, have no
  /// common factor and the image is not a point.
  explicit RationalSpaceCurve(std::array<BinaryForm<F>, 4> phi);

  const F& field() const { return phi_[0].field(); }
  int degree() const { return phi_[0].degree(); }
  const std::array<BinaryForm<F>, 4>& components() const { return phi_; }
  const BinaryForm<F>& component(std::size_t i) const { return phi_.at(i); }

  std::array<Elem, 4> point(const Elem& s, const Elem& t) const;
  /// Whether all four forms lie in one hyperplane.
  bool is_planar() const;

  std::string to_string() const;

 private:
  std::array<BinaryForm<F>, 4> phi_;
};

/// (s^3, s^2 t, s t^2, t^3) and friends, built from monomial exponents of s.
template <ExactField F>
RationalSpaceCurve<F> monomial_curve(const F& field, int degree, std::array<int, 4> s_exponents);

/// Hypersurface V(f) of P^3.
template <ExactField F>
class SurfaceP3 {
 public:
  /// Throws DomainError unless f is a nonzero homogeneous form in 4 variables.
  explicit SurfaceP3(MultiPoly<F> f);

  const MultiPoly<F>& poly() const { return f_; }
  int degree() const { return f_.total_degree(); }

 private:
  MultiPoly<F> f_;
};

/// Restrictions of the two spanning planes of L to the curve parametrization.
template <ExactField F>
std::pair<BinaryForm<F>, BinaryForm<F>> curve_restrictions(const LineP3<F>& line, const RationalSpaceCurve<F>& c);

template <ExactField F>
bool meets_curve(const LineP3<F>& line, const RationalSpaceCurve<F>& c);

/// Parameter-side intersection scheme of L and C.
template <ExactField F>
MultiplicityProfile curve_line_profile(const LineP3<F>& line, const RationalSpaceCurve<F>& c);

enum class SecantClass { SmoothPointOfSec, SingularPointOfSec, NotInSec };
std::string to_string(SecantClass c);

/// Position of a line relative to Sec(C), read off its intersection profile.
SecantClass classify_secant_singularity(const MultiplicityProfile& profile);

/// Ring Q[q01, .., q23] (or F_p[...]) for Chow forms.
template <ExactField F>
RingPtr<F> dual_pluecker_ring(const F& field);

/// Rewrites q01*q23 -> q02*q13 - q03*q12 until no term is divisible by
/// q01*q23, then scales to the canonical representative: primitive with
/// integer coefficients over Q, monic over F_p, positive grevlex-leading
/// coefficient.
template <ExactField F>
MultiPoly<F> normalize_chow_form(const MultiPoly<F>& f);

/// Canonical Chow form of C by exact interpolation from seeded lines meeting
/// the curve. Throws DomainError when the interpolation space is not one
/// dimensional.
template <ExactField F>
MultiPoly<F> chow_form(const RationalSpaceCurve<F>& c, std::uint64_t seed = kDefaultSeed);

/// Chow form evaluated at the dual coordinates of a line.
template <ExactField F>
typename F::Elem evaluate_at_line(const MultiPoly<F>& chow, const LineP3<F>& line);

/// Profile of f restricted to L; nullopt when S contains L.
template <ExactField F>
std::optional<MultiplicityProfile> hurwitz_profile(const LineP3<F>& line, const SurfaceP3<F>& s);

enum class ContactClass : unsigned {
  NoContact = 1u << 0,
  Transversal = 1u << 1,
  SimpleTangent = 1u << 2,
  Bitangent = 1u << 3,
  Inflectional = 1u << 4,
  InflAtTwoPoints = 1u << 5,
  ContactOrderGe4 = 1u << 6,
  Contained = 1u << 7,
};
std::string to_string(ContactClass c);

struct ContactClassification {
  ContactClass primary = ContactClass::NoContact;
  unsigned flags = 0;
  MultiplicityProfile profile;

  bool has(ContactClass c) const { return (flags & static_cast<unsigned>(c)) != 0; }
  /// Flag names joined by '|', most specific last.
  std::string flags_string() const;
};

/// Throws DomainError("surface contains the line") for a contained line.
ContactClassification classify_hurwitz_singularity(const std::optional<MultiplicityProfile>& profile);

}  // namespace congruence
