#include <gtest/gtest.h>

#include "congruence/formulas.hpp"
#include "congruence/oracles.hpp"
#include "congruence/parse.hpp"

using namespace congruence;

namespace {

const PrimeField kFp;
constexpr std::uint64_t kSeed = 0x5EED;

CurveData rational(int d) { return CurveData{d, 0, {}, false}; }

}  // namespace

TEST(SecOrder, RationalNormalCurves) {
  EXPECT_EQ(oracle_sec_order(twisted_cubic(kFp), kSeed).count, sec_bidegree(rational(3)).order);
  EXPECT_EQ(oracle_sec_order(rational_quartic(kFp), kSeed).count, sec_bidegree(rational(4)).order);
  EXPECT_EQ(oracle_sec_order(rational_quintic(kFp), kSeed).count, sec_bidegree(rational(5)).order);
}

TEST(SecOrder, PlanarCurveHasOrderZero) {
  EXPECT_EQ(oracle_sec_order(planar_conic(kFp), kSeed).count, sec_bidegree(CurveData{2, 0, {}, true}).order);
}

TEST(SecClass, Examples) {
  EXPECT_EQ(oracle_sec_class(twisted_cubic(kFp), kSeed).count, sec_bidegree(rational(3)).cls);
  EXPECT_EQ(oracle_sec_class(rational_quartic(kFp), kSeed).count, sec_bidegree(rational(4)).cls);
  EXPECT_EQ(oracle_sec_class(planar_conic(kFp), kSeed).count, sec_bidegree(CurveData{2, 0, {}, true}).cls);
}

TEST(Ch0Degree, TwistedCubic) {
  EXPECT_EQ(oracle_ch0_degree(twisted_cubic(kFp), kSeed).count, ch0_degree(3));
  EXPECT_EQ(oracle_ch0_degree(rational_quartic(kFp), kSeed).count, ch0_degree(4));
}

TEST(Ch1Degree, Surfaces) {
  auto r = surface_ring(kFp);
  SurfaceP3<PrimeField> sphere(parse_polynomial("x0^2 + x1^2 + x2^2 + x3^2", r));
  EXPECT_EQ(oracle_ch1_degree(sphere, kSeed).count, ch1_degree(2));
  EXPECT_EQ(oracle_ch1_degree(random_surface(kFp, 3, 1), kSeed).count, ch1_degree(3));
  EXPECT_EQ(oracle_ch1_degree(random_surface(kFp, 4, 1), kSeed).count, ch1_degree(4));
}

TEST(PlaneInflections, Examples) {
  EXPECT_EQ(oracle_plane_inflections(fermat_plane_curve(kFp, 3), kSeed).count, plane_infl_count(3));
  EXPECT_EQ(oracle_plane_inflections(random_plane_curve(kFp, 4, 1), kSeed).count, plane_infl_count(4));
}

TEST(PlaneInflections, FermatQuarticHasHyperflexes) {
  auto rep = oracle_plane_inflections(fermat_plane_curve(kFp, 4), kSeed);
  EXPECT_EQ(rep.count, 12);
  ASSERT_TRUE(rep.count_with_multiplicity.has_value());
  EXPECT_EQ(*rep.count_with_multiplicity, plane_infl_count(4));
  EXPECT_FALSE(rep.multiplicity_counted);
}

TEST(PlaneInflections, SingularCurveRejected) {
  auto r = plane_ring(kFp);
  EXPECT_THROW(oracle_plane_inflections(parse_polynomial("y^2*z - x^3", r), kSeed), DomainError);
}

TEST(PlaneBitangents, Examples) {
  auto rep = oracle_plane_bitangents(random_plane_curve(kFp, 4, 1), kSeed);
  EXPECT_EQ(rep.count, plane_bitangent_count(4));
  EXPECT_TRUE(rep.multiplicity_counted);
  EXPECT_EQ(oracle_plane_bitangents(klein_quartic(kFp), kSeed).count, plane_bitangent_count(4));
}

TEST(PlaneBitangents, ProductOfConicsRejected) {
  auto r = plane_ring(kFp);
  auto f = parse_polynomial("(x^2 + y^2 - z^2)*(x^2 - 2*y^2 + 3*z^2)", r);
  EXPECT_THROW(oracle_plane_bitangents(f, kSeed), DomainError);
  EXPECT_THROW(oracle_plane_bitangents(fermat_plane_curve(kFp, 3), kSeed), DomainError);
}

TEST(PolarSystems, InflectionsThroughAPoint) {
  EXPECT_EQ(oracle_infl_through_point(random_surface(kFp, 3, 1), kSeed).count, infl_through_point(3));
  EXPECT_EQ(oracle_infl_through_point(random_surface(kFp, 4, 1), kSeed).count, infl_through_point(4));
  // d(d-1)(d-2) vanishes at d = 2
  auto r = surface_ring(kFp);
  SurfaceP3<PrimeField> quadric(parse_polynomial("x0^2 + x1^2 + x2^2 + x3^2", r));
  EXPECT_EQ(oracle_infl_through_point(quadric, kSeed).count, 0);
}

TEST(PolarSystems, DualSurfaceDegree) {
  auto r = surface_ring(kFp);
  SurfaceP3<PrimeField> quadric(parse_polynomial("x0^2 + x1^2 + x2^2 + x3^2", r));
  EXPECT_EQ(oracle_dual_surface_degree(quadric, kSeed).count, dual_surface_degree(2));
  EXPECT_EQ(oracle_dual_surface_degree(random_surface(kFp, 3, 1), kSeed).count, dual_surface_degree(3));
  EXPECT_EQ(oracle_dual_surface_degree(random_surface(kFp, 4, 1), kSeed).count, dual_surface_degree(4));
}

TEST(DualCurve, Parametrizations) {
  EXPECT_EQ(oracle_dual_curve_degree(conic_parametrization(kFp), kSeed).count, dual_curve_degree({2, 0, 0}));
  EXPECT_EQ(oracle_dual_curve_degree(cuspidal_cubic_parametrization(kFp), kSeed).count, dual_curve_degree({3, 1, 0}));
  EXPECT_EQ(oracle_dual_curve_degree(nodal_cubic_parametrization(kFp), kSeed).count, dual_curve_degree({3, 0, 1}));
}

TEST(DualCurve, NonReducedParametrizationRejected) {
  // (s^2 : t^2 : 0) covers a line twice
  auto f = [&](std::vector<long> c) {
    std::vector<Fp> e;
    for (long v : c) e.push_back(kFp.from_int(v));
    return BinaryForm<PrimeField>(kFp, e);
  };
  std::array<BinaryForm<PrimeField>, 3> doubled{f({1, 0, 0}), f({0, 0, 1}), f({1, 0, 1})};
  EXPECT_THROW(oracle_dual_curve_degree(doubled, kSeed), DomainError);
}

TEST(SeedStability, SameSeedSameReport) {
  auto a = oracle_sec_order(rational_quartic(kFp), 42);
  auto b = oracle_sec_order(rational_quartic(kFp), 42);
  EXPECT_EQ(a.count, b.count);
  EXPECT_EQ(a.retries, b.retries);
  EXPECT_EQ(a.seed, b.seed);
  EXPECT_EQ(a.name, b.name);
  EXPECT_EQ(a.field, b.field);
}

TEST(SeedStability, DifferentSeedsSameCount) {
  for (std::uint64_t seed : {1ull, 2ull, 99ull, 0xDEADBEEFull}) {
    EXPECT_EQ(oracle_sec_order(twisted_cubic(kFp), seed).count, 1);
    EXPECT_EQ(oracle_ch1_degree(random_surface(kFp, 3, 7), seed).count, 6);
    EXPECT_EQ(oracle_plane_inflections(random_plane_curve(kFp, 4, 3), seed).count, 24);
    EXPECT_EQ(oracle_dual_surface_degree(random_surface(kFp, 3, 7), seed).count, 12);
    EXPECT_EQ(oracle_dual_curve_degree(nodal_cubic_parametrization(kFp), seed).count, 4);
  }
}

TEST(Reports, CarryMetadata) {
  auto rep = oracle_sec_class(twisted_cubic(kFp), 17);
  EXPECT_EQ(rep.seed, 17u);
  EXPECT_EQ(rep.field, "F_32003");
  EXPECT_GE(rep.retries, 0);
  EXPECT_LT(rep.retries, kOracleAttempts);
  EXPECT_GE(rep.elapsed_ms, 0.0);
  EXPECT_FALSE(rep.name.empty());
}

TEST(Reports, RationalFieldAgrees) {
  RationalField q;
  EXPECT_EQ(oracle_sec_class(twisted_cubic(q), kSeed).count, 3);
  EXPECT_EQ(oracle_sec_order(twisted_cubic(q), kSeed).count, 1);
}

TEST(NamedObjects, SmoothnessChecks) {
  EXPECT_NO_THROW(require_smooth_plane_curve(klein_quartic(kFp)));
  EXPECT_NO_THROW(require_smooth_plane_curve(fermat_plane_curve(kFp, 5)));
  EXPECT_THROW(require_smooth_plane_curve(parse_polynomial("x*y*z", plane_ring(kFp))), DomainError);
  EXPECT_EQ(random_surface(kFp, 4, 3).degree(), 4);
  EXPECT_EQ(random_surface(kFp, 4, 3).poly(), random_surface(kFp, 4, 3).poly());
}
