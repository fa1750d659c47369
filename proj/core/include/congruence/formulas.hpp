#pragma once

// Closed-form enumerative formulas for curves and surfaces in P^3 and for
// plane curves. Every function validates the hypotheses under which its
// formula holds and throws DomainError otherwise.

#include <cstdint>
#include <vector>

#include "congruence/schubert.hpp"

namespace congruence {

/// Degree, geometric genus and ordinary singularities of a space curve.
struct CurveData {
  int degree = 1;
  int genus = 0;
  std::vector<int> singular_multiplicities;  // r_i >= 2
  bool planar = false;

  /// Throws DomainError when d < 1, g < 0 or some r_i < 2.
  void validate() const;
};

/// Plane curve with only cusps and simple nodes.
struct PlaneCurveSing {
  int degree = 1;
  int cusps = 0;
  int nodes = 0;
};

std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Secant congruence. Nonplanar: (C(d-1,2) - g - sum C(r_i,2), C(d,2));
/// planar: (0, 1).
Bidegree sec_bidegree(const CurveData& c);
/// Singular locus of the Chow hypersurface. Nonplanar: order gains s; planar: (s, 1).
Bidegree sing_ch0_bidegree(const CurveData& c);

/// d >= 4.
Bidegree bit_bidegree(int d);
Bidegree infl_bidegree(int d);

std::int64_t ch0_degree(int d);
std::int64_t ch1_degree(int d);

/// d(d-1) - 3 kappa - 2 delta; throws if nonpositive.
std::int64_t dual_curve_degree(const PlaneCurveSing& p);
/// C(d-1,2) - sum C(r_i,2); throws if negative.
std::int64_t plane_genus(int d, const std::vector<int>& multiplicities);

std::int64_t plane_bitangent_count(int d);  // d >= 4
std::int64_t plane_infl_count(int d);       // d >= 3

std::int64_t dual_surface_degree(int d);  // d(d-1)^2, d >= 2
std::int64_t infl_through_point(int d);   // d(d-1)(d-2), d >= 3
std::int64_t bit_through_point(int d);    // d(d-1)(d-2)(d-3)/2, d >= 4

/// Lines bitangent to two general surfaces of degrees d1, d2 >= 4.
std::int64_t bitangent_pair_count(int d1, int d2);
/// Closed-form version of the same number, for cross-checking.
std::int64_t bitangent_pair_count_closed_form(int d1, int d2);

/// Lines bitangent to a degree-d1 surface and secant to a smooth nonplanar
/// curve (d2 = c.degree, g = c.genus), via the Schubert product.
std::int64_t bit_sec_count(int d1, const CurveData& c);
/// The closed form of bit_sec_count for smooth curves.
std::int64_t bit_sec_count_closed_form(int d1, int d2, int g);

}  // namespace congruence
