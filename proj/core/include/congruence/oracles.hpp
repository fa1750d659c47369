#pragma once

// Brute-force counting oracles. Each one rebuilds an enumerative number from
// elimination (resultants, squarefree degrees, Groebner quotient dimensions)
// on seeded general-position data, without consulting the closed formulas.

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "congruence/chowforms.hpp"
#include "congruence/polyring.hpp"

namespace congruence {

/// Fresh random draws allowed per oracle before GenericityFailure.
inline constexpr int kOracleAttempts = 5;

struct OracleReport {
  std::string name;
  std::uint64_t seed = 0;
  std::int64_t count = 0;
  /// Total with multiplicity, when the oracle measures it separately.
  std::optional<std::int64_t> count_with_multiplicity;
  /// Whether `count` itself is taken with multiplicity (quotient dimensions)
  /// rather than as a number of distinct points.
  bool multiplicity_counted = false;
  int retries = 0;
  double elapsed_ms = 0.0;
  std::string field;
};

template <ExactField F>
OracleReport oracle_sec_order(const RationalSpaceCurve<F>& c, std::uint64_t seed);
template <ExactField F>
OracleReport oracle_sec_class(const RationalSpaceCurve<F>& c, std::uint64_t seed);
template <ExactField F>
OracleReport oracle_ch0_degree(const RationalSpaceCurve<F>& c, std::uint64_t seed);
template <ExactField F>
OracleReport oracle_ch1_degree(const SurfaceP3<F>& s, std::uint64_t seed);

/// f is a ternary form. Throws DomainError for singular curves.
template <ExactField F>
OracleReport oracle_plane_inflections(const MultiPoly<F>& f, std::uint64_t seed);
/// f is a smooth ternary quartic.
template <ExactField F>
OracleReport oracle_plane_bitangents(const MultiPoly<F>& f, std::uint64_t seed);

template <ExactField F>
OracleReport oracle_infl_through_point(const SurfaceP3<F>& s, std::uint64_t seed);
template <ExactField F>
OracleReport oracle_dual_surface_degree(const SurfaceP3<F>& s, std::uint64_t seed);

/// gamma: three binary forms of one degree parametrizing a plane curve.
template <ExactField F>
OracleReport oracle_dual_curve_degree(const std::array<BinaryForm<F>, 3>& gamma, std::uint64_t seed);

/// Throws DomainError when the plane curve V(f) has a singular point.
template <ExactField F>
void require_smooth_plane_curve(const MultiPoly<F>& f);

// ---------------------------------------------------------------------------
// Named objects

template <ExactField F>
RationalSpaceCurve<F> twisted_cubic(const F& field);
/// (s^4 : s^3 t : s t^3 : t^4)
template <ExactField F>
RationalSpaceCurve<F> rational_quartic(const F& field);
/// (s^5 : s^4 t : s t^4 : t^5)
template <ExactField F>
RationalSpaceCurve<F> rational_quintic(const F& field);
/// (s^2 : s t : t^2 : 0)
template <ExactField F>
RationalSpaceCurve<F> planar_conic(const F& field);

/// Ring over x0..x3 / x, y, z.
template <ExactField F>
RingPtr<F> surface_ring(const F& field);
template <ExactField F>
RingPtr<F> plane_ring(const F& field);

/// x0^d + x1^d + x2^d + x3^d
template <ExactField F>
SurfaceP3<F> fermat_surface(const F& field, int d);
/// Dense form with seeded coefficients in [-10^4, 10^4].
template <ExactField F>
SurfaceP3<F> random_surface(const F& field, int d, std::uint64_t seed);

template <ExactField F>
MultiPoly<F> fermat_plane_curve(const F& field, int d);
template <ExactField F>
MultiPoly<F> random_plane_curve(const F& field, int d, std::uint64_t seed);
/// x^3 y + y^3 z + z^3 x
template <ExactField F>
MultiPoly<F> klein_quartic(const F& field);

/// Plane parametrizations (s^2, st, t^2), (s^3, s t^2, t^3) and
/// ((s^2 - t^2) t, s (s^2 - t^2), t^3).
template <ExactField F>
std::array<BinaryForm<F>, 3> conic_parametrization(const F& field);
template <ExactField F>
std::array<BinaryForm<F>, 3> cuspidal_cubic_parametrization(const F& field);
template <ExactField F>
std::array<BinaryForm<F>, 3> nodal_cubic_parametrization(const F& field);

}  // namespace congruence
