#include <gtest/gtest.h>

#include <algorithm>

#include "congruence/parse.hpp"
#include "congruence/random.hpp"
#include "congruence/solver.hpp"

using namespace congruence;

namespace {

const RationalField kQ;
const PrimeField kFp;

RingPtr<RationalField> xy() { return make_ring(kQ, {"x", "y"}); }

template <ExactField F>
std::vector<MultiPoly<F>> polys(const RingPtr<F>& r, std::initializer_list<const char*> texts) {
  std::vector<MultiPoly<F>> out;
  for (auto* t : texts) out.push_back(parse_polynomial(t, r));
  return out;
}

template <ExactField F>
GroebnerBasis<F> gb(const std::vector<MultiPoly<F>>& gens, const MonomialOrder& order = MonomialOrder::grevlex()) {
  return buchberger<F>(std::span<const MultiPoly<F>>(gens), order);
}

MultiPoly<PrimeField> random_poly(const RingPtr<PrimeField>& r, int degree, Xoshiro256& rng) {
  MultiPoly<PrimeField> f(r);
  const auto n = r->nvars();
  for (int i = 0; i < 8; ++i) {
    Monomial m(n);
    int left = static_cast<int>(rng.uniform(0, degree));
    for (std::size_t v = 0; v < n; ++v) {
      int e = v + 1 == n ? left : static_cast<int>(rng.uniform(0, left));
      m.e[v] = e;
      left -= e;
    }
    f += MultiPoly<PrimeField>::monomial(r, m, kFp.from_int(rng.uniform(1, 32002)));
  }
  return f;
}

// dense affine conic a x^2 + b x y + c y^2 + d x + e y + f
MultiPoly<PrimeField> random_conic(const RingPtr<PrimeField>& r, Xoshiro256& rng) {
  auto x = MultiPoly<PrimeField>::variable(r, 0), y = MultiPoly<PrimeField>::variable(r, 1);
  auto one = MultiPoly<PrimeField>::constant(r, kFp.one());
  std::vector<MultiPoly<PrimeField>> mons{x * x, x * y, y * y, x, y, one};
  MultiPoly<PrimeField> f(r);
  for (auto& m : mons) f += m.scale(kFp.from_int(rng.uniform(1, 32002)));
  return f;
}

// Number of common affine roots of two conics over the closure, through the
// resultant in x: it has degree 4 and is squarefree for general input.
int resultant_root_count(const MultiPoly<PrimeField>& f, const MultiPoly<PrimeField>& g) {
  auto ry = make_ring(kFp, {"y"});
  auto coeffs_in_x = [&](const MultiPoly<PrimeField>& p) {
    std::vector<MultiPoly<PrimeField>> c(3, MultiPoly<PrimeField>(ry));
    for (auto& t : p.terms()) {
      Monomial m(1);
      m.e[0] = t.mono.e[1];
      c[2 - t.mono.e[0]] += MultiPoly<PrimeField>::monomial(ry, m, t.coeff);
    }
    return c;
  };
  auto cf = coeffs_in_x(f), cg = coeffs_in_x(g);
  auto res = to_univariate(resultant_symbolic<PrimeField>(cf, cg));
  if (squarefree_part(res).degree() != res.degree()) return -1;
  return res.degree();
}

}  // namespace

TEST(MonomialOrder, CompareHonoursSignificance) {
  Monomial a({1, 0}), b({0, 1});
  EXPECT_GT(MonomialOrder::lex().compare(a, b), 0);
  EXPECT_LT(MonomialOrder::lex({1, 0}).compare(a, b), 0);
  EXPECT_GT(MonomialOrder::grevlex().compare(Monomial({0, 2}), a), 0);
}

TEST(Buchberger, AlreadyABasis) {
  auto g = gb(polys(xy(), {"x", "y"}));
  EXPECT_EQ(g.generators(), polys(xy(), {"y", "x"}));
  EXPECT_TRUE(g.reduced());
}

TEST(Buchberger, HandSPolynomial) {
  auto r = xy();
  auto g = gb(polys(r, {"x^2 + y^2", "x*y"}));
  auto y3 = parse_polynomial("y^3", r);
  EXPECT_NE(std::find(g.generators().begin(), g.generators().end(), y3), g.generators().end());
  EXPECT_TRUE(normal_form(y3, g).is_zero());
  EXPECT_EQ(quotient_dimension(g), 4u);
}

TEST(Buchberger, SinglePolynomialIsMadeMonic) {
  auto r = xy();
  auto g = gb(polys(r, {"3*x^2 - 6*y"}));
  ASSERT_EQ(g.generators().size(), 1u);
  EXPECT_EQ(g.generators()[0], parse_polynomial("x^2 - 2*y", r));
}

TEST(Buchberger, UnitAndZeroIdeals) {
  auto r = xy();
  EXPECT_TRUE(gb(polys(r, {"x*y - 1", "x"})).is_unit_ideal());
  EXPECT_TRUE(gb(std::vector<MultiPoly<RationalField>>{MultiPoly<RationalField>(r)}).generators().empty());
  EXPECT_EQ(quotient_dimension(gb(polys(r, {"x*y - 1", "x"}))), 0u);
}

TEST(Buchberger, MixedRingsRejected) {
  std::vector<MultiPoly<RationalField>> gens{parse_polynomial("x", xy()),
                                             parse_polynomial("u", make_ring(kQ, {"u", "v"}))};
  EXPECT_THROW(gb(gens), RingMismatch);
}

TEST(Buchberger, SPolynomialsReduceToZero) {
  auto r = make_ring(kFp, {"x", "y", "z"});
  Xoshiro256 rng(404);
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
    std::vector<MultiPoly<PrimeField>> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_poly(r, 3, rng));
    auto g = gb(gens, order);
    const auto& G = g.generators();
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = i + 1; j < G.size(); ++j)
        EXPECT_TRUE(normal_form(s_polynomial(G[i], G[j], order), g).is_zero());
    for (auto& f : gens) EXPECT_TRUE(normal_form(f, g).is_zero());
  }
}

TEST(Buchberger, IndependentOfInputOrder) {
  auto r = make_ring(kFp, {"x", "y", "z"});
  Xoshiro256 rng(8);
  std::vector<MultiPoly<PrimeField>> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(random_poly(r, 2, rng));
  auto a = gb(gens);
  std::reverse(gens.begin(), gens.end());
  auto b = gb(gens);
  EXPECT_EQ(a.generators(), b.generators());
}

TEST(Buchberger, StatsCountCriteria) {
  auto r = make_ring(kFp, {"x", "y", "z"});
  auto gens = polys(r, {"x^2 - y", "y^2 - z", "z^2 - x"});
  BuchbergerStats stats;
  auto g = buchberger<PrimeField>(std::span<const MultiPoly<PrimeField>>(gens), MonomialOrder::grevlex(), &stats);
  EXPECT_GT(stats.pairs_considered, 0u);
  EXPECT_GE(stats.pairs_skipped_coprime, 1u);
  EXPECT_EQ(quotient_dimension(g), 8u);
}

TEST(NormalForm, Examples) {
  auto r = xy();
  auto xyb = gb(polys(r, {"x", "y"}));
  EXPECT_TRUE(normal_form(parse_polynomial("x^2", r), xyb).is_zero());
  auto xb = gb(polys(r, {"x"}));
  EXPECT_EQ(normal_form(parse_polynomial("x + y + 1", r), xb), parse_polynomial("y + 1", r));
}

TEST(NormalForm, AbsorbsIdealMembers) {
  auto r = make_ring(kFp, {"x", "y", "z"});
  Xoshiro256 rng(55);
  std::vector<MultiPoly<PrimeField>> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(random_poly(r, 2, rng));
  auto g = gb(gens);
  for (int i = 0; i < 10; ++i) {
    auto f = random_poly(r, 3, rng), h = random_poly(r, 4, rng);
    const auto& gi = g.generators()[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(g.generators().size()) - 1))];
    EXPECT_EQ(normal_form(f * gi + h, g), normal_form(h, g));
  }
}

TEST(QuotientDimension, Examples) {
  auto r = xy();
  EXPECT_EQ(quotient_dimension(gb(polys(r, {"x", "y"}))), 1u);
  EXPECT_EQ(quotient_dimension(gb(polys(r, {"x^2", "y^3"}))), 6u);
  EXPECT_EQ(quotient_dimension(gb(polys(r, {"x*y"}))), std::nullopt);
}

TEST(QuotientDimension, TwoRandomConicsMeetInFourPoints) {
  auto r = make_ring(kFp, {"x", "y"});
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Xoshiro256 rng(seed);
    auto f = random_conic(r, rng), g = random_conic(r, rng);
    std::vector<MultiPoly<PrimeField>> gens{f, g};
    EXPECT_EQ(quotient_dimension(gb(gens)), static_cast<std::uint64_t>(resultant_root_count(f, g)));
    EXPECT_EQ(quotient_dimension(gb(gens)), 4u);
  }
}

TEST(QuotientDimension, SameUnderLex) {
  auto r = make_ring(kFp, {"x", "y", "z"});
  auto gens = polys(r, {"x^2 - y - 1", "y^2 - z - 2", "z^2 - x - 3"});
  auto a = quotient_dimension(gb(gens));
  auto b = quotient_dimension(gb(gens, MonomialOrder::lex()));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a, b);
  EXPECT_EQ(*a, 8u);
}

TEST(Eliminant, LexBasisEndsInOneVariable) {
  auto r = make_ring(kFp, {"x", "y"});
  auto gens = polys(r, {"x^2 + y^2 - 5", "x*y - 2"});
  auto g = gb(gens, MonomialOrder::lex());
  auto e = univariate_eliminant(g, 1);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->degree_in(0), 0);
  EXPECT_EQ(e->degree_in(1), 4);
  // roots y = +-1, +-2
  auto uni = make_ring(kFp, {"y"});
  std::array<std::size_t, 2> to_y{0, 0};
  EXPECT_EQ(e->rename_into(uni, to_y), parse_polynomial("(y^2 - 1)*(y^2 - 4)", uni));
}
