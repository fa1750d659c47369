#include <gtest/gtest.h>

#include "congruence/linegeom.hpp"
#include "congruence/parse.hpp"

using namespace congruence;

namespace {

const RationalField kQ;
using Pt = ProjPoint3<RationalField>;
using Pl = ProjPlane3<RationalField>;
using Line = LineP3<RationalField>;

Pluecker<RationalField> vec(std::array<long, 6> v) {
  Pluecker<RationalField> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = BigRational(v[i]);
  return out;
}

Line span(std::array<long, 4> a, std::array<long, 4> b) {
  return join_points(Pt::from_ints(kQ, a), Pt::from_ints(kQ, b));
}

}  // namespace

TEST(Join, CoordinateLine) {
  EXPECT_EQ(span({1, 0, 0, 0}, {0, 1, 0, 0}).primal(), vec({1, 0, 0, 0, 0, 0}));
}

TEST(Join, HandMinors) {
  auto l = span({1, 2, 3, 4}, {0, 1, 1, 1});
  EXPECT_EQ(l.primal(), vec({1, 1, 1, -1, -2, -1}));
  EXPECT_EQ(l.dual(), vec({-1, 2, -1, 1, -1, 1}));
}

TEST(Join, CoincidentPointsRejected) {
  EXPECT_THROW(span({1, 0, 0, 0}, {1, 0, 0, 0}), DomainError);
  EXPECT_THROW(span({1, 2, 3, 4}, {2, 4, 6, 8}), DomainError);
  EXPECT_THROW(Pt::from_ints(kQ, {0, 0, 0, 0}), DomainError);
}

TEST(Meet, CoordinatePlanes) {
  auto l = meet_planes(Pl::from_ints(kQ, {0, 0, 1, 0}), Pl::from_ints(kQ, {0, 0, 0, 1}));
  EXPECT_TRUE(l.same_as(span({1, 0, 0, 0}, {0, 1, 0, 0})));
  EXPECT_EQ(l.dual(), vec({0, 0, 0, 0, 0, 1}));
}

TEST(Meet, EqualPlanesRejected) {
  auto h = Pl::from_ints(kQ, {1, 2, 3, 4});
  EXPECT_THROW(meet_planes(h, h), DomainError);
}

TEST(Meet, OrderDoesNotMatter) {
  auto h1 = Pl::from_ints(kQ, {1, -2, 0, 5}), h2 = Pl::from_ints(kQ, {3, 1, 1, 1});
  EXPECT_TRUE(meet_planes(h1, h2).same_as(meet_planes(h2, h1)));
}

TEST(Duality, Examples) {
  EXPECT_EQ(primal_to_dual(kQ, vec({1, 0, 0, 0, 0, 0})), vec({0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(primal_to_dual(kQ, vec({1, 1, 1, -1, -2, -1})), vec({-1, 2, -1, 1, -1, 1}));
  auto p = vec({1, 1, 1, -1, -2, -1});
  EXPECT_EQ(dual_to_primal(kQ, primal_to_dual(kQ, p)), p);
  EXPECT_EQ(primal_to_dual(kQ, primal_to_dual(kQ, p)), p);
}

TEST(Duality, RelationEnforced) {
  EXPECT_THROW(primal_to_dual(kQ, vec({1, 0, 0, 0, 0, 1})), DomainError);
  EXPECT_THROW(primal_to_dual(kQ, vec({0, 0, 0, 0, 0, 0})), DomainError);
  EXPECT_EQ(pluecker_relation(kQ, vec({1, 0, 0, 0, 0, 1})), BigRational(1));
}

TEST(Duality, JoinAndMeetAgree) {
  // the line through two points equals the meet of two planes containing both
  auto l = span({1, 2, 3, 4}, {0, 1, 1, 1});
  auto planes = l.spanning_planes();
  auto m = meet_planes(planes[0], planes[1]);
  EXPECT_TRUE(l.same_as(m));
  for (auto& x : l.spanning_points()) {
    EXPECT_TRUE(planes[0].contains(x));
    EXPECT_TRUE(planes[1].contains(x));
  }
}

TEST(Incidence, Examples) {
  auto l01 = span({1, 0, 0, 0}, {0, 1, 0, 0});
  EXPECT_TRUE(incident(l01, Pt::from_ints(kQ, {1, 0, 0, 0})));
  EXPECT_TRUE(incident(l01, Pt::from_ints(kQ, {3, -5, 0, 0})));
  EXPECT_FALSE(incident(l01, Pt::from_ints(kQ, {1, 0, 1, 0})));
  EXPECT_FALSE(lines_meet(l01, span({0, 0, 1, 0}, {0, 0, 0, 1})));
  EXPECT_TRUE(lines_meet(l01, span({0, 1, 0, 0}, {0, 0, 1, 0})));
  EXPECT_TRUE(incident(l01, Pl::from_ints(kQ, {0, 0, 1, 0})));
  EXPECT_FALSE(incident(l01, Pl::from_ints(kQ, {1, 0, 1, 0})));
}

TEST(RestrictToLine, Examples) {
  auto r = make_ring(kQ, indexed_names("x", 4));
  auto l = span({1, 0, 0, 0}, {0, 1, 0, 0});
  EXPECT_TRUE(restrict_to_line(parse_polynomial("x2", r), l).is_zero());
  EXPECT_EQ(restrict_to_line(parse_polynomial("x0^2 + x1^2 + x2^2 + x3^2", r), l),
            parse_binary_form("s^2 + t^2", kQ, 2));
  EXPECT_EQ(restrict_to_line(parse_polynomial("x0*x3 - x1^2", r), l), parse_binary_form("-t^2", kQ, 2));
}

TEST(RandomConfig, Deterministic) {
  PrimeField k;
  for (auto kind : {ConfigKind::Point, ConfigKind::Plane, ConfigKind::LineThroughPoint, ConfigKind::LineInPlane,
                    ConfigKind::Flag}) {
    auto a = random_config(k, 99, kind);
    auto b = random_config(k, 99, kind);
    ASSERT_EQ(a.index(), b.index());
    if (auto* p = std::get_if<ProjPoint3<PrimeField>>(&a)) {
      EXPECT_TRUE(p->same_as(std::get<0>(b)));
    }
    if (auto* h = std::get_if<ProjPlane3<PrimeField>>(&a)) {
      EXPECT_TRUE(h->same_as(std::get<1>(b)));
    }
    if (auto* l = std::get_if<LineP3<PrimeField>>(&a)) {
      EXPECT_EQ(l->primal(), std::get<2>(b).primal());
    }
    if (auto* f = std::get_if<Flag<PrimeField>>(&a)) {
      EXPECT_EQ(f->line.primal(), std::get<3>(b).line.primal());
    }
  }
}

TEST(RandomConfig, ConstructionsSatisfyIncidence) {
  PrimeField k;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Xoshiro256 rng(seed);
    auto v = random_point(k, rng);
    EXPECT_TRUE(incident(random_line_through(v, rng), v));
    auto h = random_plane(k, rng);
    EXPECT_TRUE(incident(random_line_in(h, rng), h));
    EXPECT_TRUE(h.contains(random_point_on(h, rng)));
    auto f = std::get<Flag<PrimeField>>(random_config(k, seed, ConfigKind::Flag));
    EXPECT_TRUE(incident(f.line, f.point));
    EXPECT_TRUE(incident(f.line, f.plane));
    EXPECT_TRUE(f.plane.contains(f.point));
  }
}

TEST(RandomConfig, RationalCoordinatesStayIntegral) {
  Xoshiro256 rng(4);
  for (int i = 0; i < 10; ++i) {
    auto l = random_line(kQ, rng);
    for (auto& c : l.primal()) EXPECT_TRUE(c.is_integer());
    auto v = random_point(kQ, rng);
    for (auto& c : v.x) {
      EXPECT_TRUE(c.is_integer());
      EXPECT_LE(abs(c.num()), kRandomCoordBound);
    }
  }
}
