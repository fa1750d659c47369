#include <gtest/gtest.h>

#include <array>
#include <vector>

#include "congruence/parse.hpp"
#include "congruence/polyring.hpp"
#include "congruence/random.hpp"

using namespace congruence;

namespace {

const RationalField kQ;

RingPtr<RationalField> xy() { return make_ring(kQ, {"x", "y"}); }
RingPtr<RationalField> xyz() { return make_ring(kQ, {"x", "y", "z"}); }
RingPtr<RationalField> x0123() { return make_ring(kQ, indexed_names("x", 4)); }

MultiPoly<RationalField> P(const RingPtr<RationalField>& r, const char* text) { return parse_polynomial(text, r); }

BinaryForm<RationalField> B(const char* text, int degree) { return parse_binary_form(text, kQ, degree); }

UnivariatePoly<RationalField> U(std::vector<long> coeffs) {
  std::vector<BigRational> c(coeffs.begin(), coeffs.end());
  return UnivariatePoly<RationalField>(kQ, std::move(c));
}

// prod (s - r_i t)
BinaryForm<RationalField> from_roots(const std::vector<BigRational>& roots) {
  BinaryForm<RationalField> f(kQ, std::vector<BigRational>{1});
  for (auto& r : roots) f = f * BinaryForm<RationalField>(kQ, std::vector<BigRational>{1, -r});
  return f;
}

}  // namespace

TEST(Monomial, Orders) {
  Monomial a({2, 0, 1}), b({1, 2, 0});
  EXPECT_GT(grevlex_compare(b, a), 0);  // x y^2 > x^2 z in grevlex
  EXPECT_GT(lex_compare(a, b), 0);
  EXPECT_EQ(grevlex_compare(a, a), 0);
  EXPECT_TRUE(Monomial({1, 0, 1}).divides(a));
  EXPECT_EQ(lcm(a, b), Monomial({2, 2, 1}));
  EXPECT_EQ(a * b, Monomial({3, 2, 1}));
  EXPECT_EQ((a * b) / b, a);
}

TEST(MultiPoly, Arithmetic) {
  auto r = xy();
  EXPECT_EQ(P(r, "(x+y)*(x-y)"), P(r, "x^2 - y^2"));
  EXPECT_TRUE((P(r, "x^3 + y") * MultiPoly<RationalField>(r)).is_zero());
  EXPECT_EQ(P(r, "(x+1)^3"), P(r, "x^3 + 3*x^2 + 3*x + 1"));
  EXPECT_EQ(P(r, "(x+1)^3").to_string(), "x^3 + 3*x^2 + 3*x + 1");
  EXPECT_EQ(P(r, "x - x").to_string(), "0");
  EXPECT_EQ(P(r, "3*x*y").scale(BigRational(1) / BigRational(3)), P(r, "x*y"));
}

TEST(MultiPoly, DegreeBookkeeping) {
  auto r = xy();
  auto f = P(r, "x^3*y + y^2 + 1");
  EXPECT_EQ(f.total_degree(), 4);
  EXPECT_EQ(f.degree_in(1), 2);
  EXPECT_FALSE(f.is_homogeneous());
  EXPECT_TRUE(P(r, "x^2 + x*y").is_homogeneous());
  EXPECT_EQ(MultiPoly<RationalField>(r).total_degree(), -1);
  EXPECT_EQ(f.homogeneous_part(4), P(r, "x^3*y"));
}

TEST(MultiPoly, RingMismatch) {
  auto a = P(xy(), "x");
  auto b = P(make_ring(kQ, {"u", "v"}), "u");
  EXPECT_THROW(a + b, RingMismatch);
}

TEST(MultiPoly, ExactDivide) {
  auto r = xy();
  EXPECT_EQ(P(r, "x^2 - y^2").exact_divide(P(r, "x + y")), P(r, "x - y"));
  EXPECT_THROW(P(r, "x^2 + y").exact_divide(P(r, "x + y")), DomainError);
}

TEST(MultiPoly, EvaluateAndSubstitute) {
  auto r = xy();
  auto f = P(r, "x^2*y - 3");
  std::array<BigRational, 2> pt{BigRational(2), BigRational(5)};
  EXPECT_EQ(f.evaluate(pt), BigRational(17));
  auto s = make_ring(kQ, {"t"});
  std::array<MultiPoly<RationalField>, 2> img{P(s, "t + 1"), P(s, "t")};
  EXPECT_EQ(f.substitute(img), P(s, "t^3 + 2*t^2 + t - 3"));
}

TEST(Derivative, Examples) {
  auto r = x0123();
  EXPECT_EQ(P(r, "x0^2*x1").derivative(0), P(r, "2*x0*x1"));
  EXPECT_TRUE(P(r, "7").derivative(2).is_zero());

  auto r3 = make_ring(PrimeField(3), {"x"});
  EXPECT_TRUE(parse_polynomial("x^3", r3).derivative(0).is_zero());
}

TEST(Polar, Examples) {
  auto r = x0123();
  std::array<BigRational, 4> e0{1, 0, 0, 0};
  EXPECT_EQ(polar(P(r, "x0^2 + x1^2"), std::span<const BigRational>(e0)), P(r, "2*x0"));

  std::array<BigRational, 4> ones{1, 1, 1, 1};
  EXPECT_EQ(polar(P(r, "x0^4 + x1^4 + x2^4 + x3^4"), std::span<const BigRational>(ones)),
            P(r, "4*(x0^3 + x1^3 + x2^3 + x3^3)"));
}

TEST(Polar, EulerDegreeDrop) {
  PrimeField k;
  auto r = make_ring(k, indexed_names("x", 4));
  Xoshiro256 rng(11);
  for (int d = 2; d <= 5; ++d) {
    MultiPoly<PrimeField> f(r);
    for (int i = 0; i < 12; ++i) {
      Monomial m(4);
      int left = d;
      for (std::size_t v = 0; v < 3; ++v) {
        int e = static_cast<int>(rng.uniform(0, left));
        m.e[v] = e;
        left -= e;
      }
      m.e[3] = left;
      f += MultiPoly<PrimeField>::monomial(r, m, k.from_int(rng.uniform(1, 1000)));
    }
    std::array<Fp, 4> y{};
    for (auto& c : y) c = k.from_int(rng.uniform(1, 1000));
    auto g = polar(f, std::span<const Fp>(y));
    EXPECT_EQ(g.total_degree(), d - 1);
    EXPECT_TRUE(g.is_homogeneous());
    // Euler: polar at the point itself is d * f(y)
    EXPECT_EQ(g.evaluate(y), k.mul(k.from_int(d), f.evaluate(y)));
  }
}

TEST(Hessian, Examples) {
  auto r = xyz();
  EXPECT_EQ(hessian3(P(r, "x^2 + y^2 + z^2")), P(r, "8"));
  EXPECT_EQ(hessian3(P(r, "x*y*z")), P(r, "2*x*y*z"));
  EXPECT_THROW(hessian3(P(r, "x + y")), DomainError);
  EXPECT_THROW(hessian3(P(x0123(), "x0^2")), DomainError);
}

TEST(Hessian, DegreeOfRandomQuartic) {
  PrimeField k;
  auto r = make_ring(k, {"x", "y", "z"});
  Xoshiro256 rng(5);
  MultiPoly<PrimeField> f(r);
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; a + b <= 4; ++b)
      f += MultiPoly<PrimeField>::monomial(r, Monomial({a, b, 4 - a - b}), k.from_int(rng.uniform(1, 30000)));
  EXPECT_EQ(hessian3(f).total_degree(), 6);
}

TEST(Univariate, DivmodAndGcd) {
  auto a = U({-1, 0, 1});  // x^2 - 1
  auto b = U({-1, 1});
  auto [q, rem] = a.divmod(b);
  EXPECT_EQ(q, U({1, 1}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(gcd(a, b), U({-1, 1}));
  EXPECT_EQ(gcd(U({2, 4}), UnivariatePoly<RationalField>(kQ)), U({1, 2}).monic());
  EXPECT_THROW(a.divmod(UnivariatePoly<RationalField>(kQ)), DivisionByZero);
}

TEST(Univariate, RandomCoprimeHaveTrivialGcd) {
  Xoshiro256 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<BigRational> fc, gc;
    for (int i = 0; i <= 4; ++i) fc.emplace_back(rng.uniform(-50, 50));
    for (int i = 0; i <= 3; ++i) gc.emplace_back(rng.uniform(-50, 50));
    fc.back() = 1;
    gc.back() = 1;
    BinaryForm<RationalField> F(kQ, std::vector<BigRational>(fc.rbegin(), fc.rend()));
    BinaryForm<RationalField> G(kQ, std::vector<BigRational>(gc.rbegin(), gc.rend()));
    auto g = gcd(UnivariatePoly<RationalField>(kQ, fc), UnivariatePoly<RationalField>(kQ, gc));
    // a nonzero resultant certifies coprimality
    EXPECT_EQ(g.degree() == 0, !resultant_binary(F, G).is_zero());
  }
}

TEST(Univariate, SquarefreeDecomposition) {
  auto f = U({-1, 1}).pow(2) * U({2, 1});
  auto sf = squarefree_decomposition(f);
  ASSERT_EQ(sf.parts.size(), 2u);
  EXPECT_EQ(sf.parts[0].first, U({2, 1}));
  EXPECT_EQ(sf.parts[0].second, 1);
  EXPECT_EQ(sf.parts[1].first, U({-1, 1}));
  EXPECT_EQ(sf.parts[1].second, 2);

  auto g = U({3, 0, 2});
  auto sg = squarefree_decomposition(g);
  ASSERT_EQ(sg.parts.size(), 1u);
  EXPECT_EQ(sg.parts[0].first, g.monic());
  EXPECT_EQ(sg.lead, BigRational(2));
  EXPECT_EQ(squarefree_part(f), U({-1, 1}) * U({2, 1}));
}

TEST(Univariate, SmallCharacteristicRefused) {
  PrimeField f3(3);
  UnivariatePoly<PrimeField> f(f3, {f3.one(), f3.zero(), f3.zero(), f3.one()});
  EXPECT_THROW(squarefree_decomposition(f), DomainError);
}

TEST(BinaryForm, Restrictions) {
  EXPECT_EQ(B("s^2 + t^2", 2).coeffs(), (std::vector<BigRational>{1, 0, 1}));
  EXPECT_EQ(B("-t^2", 2).t_order(), 2);
  EXPECT_EQ(B("s^2*t^3", 5).t_order(), 3);
  EXPECT_EQ(B("s*t", 2).derivative_s(), B("t", 1));
  EXPECT_EQ(B("s^3 - 2*s*t^2", 3).evaluate(BigRational(1), BigRational(2)), BigRational(-7));
  EXPECT_EQ(BinaryForm<RationalField>::homogenize(U({1, 0, 1}), 3), B("s^2*t + t^3", 3));
}

TEST(Resultant, LinearForms) {
  auto r = make_ring(kQ, {"a1", "a0", "b1", "b0"});
  std::array<MultiPoly<RationalField>, 2> f{P(r, "a1"), P(r, "a0")};
  std::array<MultiPoly<RationalField>, 2> g{P(r, "b1"), P(r, "b0")};
  EXPECT_EQ(resultant_symbolic<RationalField>(f, g), P(r, "a1*b0 - a0*b1"));
}

TEST(Resultant, CommonRoot) {
  EXPECT_TRUE(resultant_binary(B("s^2", 2), B("s*t", 2)).is_zero());
  EXPECT_FALSE(resultant_binary(B("s^2 + t^2", 2), B("s*t", 2)).is_zero());
  EXPECT_THROW(resultant_binary(BinaryForm<RationalField>(kQ, 2), BinaryForm<RationalField>(kQ, 3)), DomainError);
}

TEST(Resultant, ProductOfRootDifferences) {
  Xoshiro256 rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<BigRational> r1, r2;
    for (int i = 0; i < 3; ++i) r1.push_back(BigRational(rng.uniform(-9, 9)) / BigRational(rng.uniform(1, 5)));
    for (int i = 0; i < 4; ++i) r2.push_back(BigRational(rng.uniform(-9, 9)) / BigRational(rng.uniform(1, 5)));
    BigRational expect(1);
    for (auto& a : r1)
      for (auto& b : r2) expect *= a - b;
    EXPECT_EQ(resultant_binary(from_roots(r1), from_roots(r2)), expect);
  }
}

TEST(Resultant, SymbolicCubicsMatchNumericEvaluation) {
  auto r = make_ring(kQ, {"a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3"});
  std::vector<MultiPoly<RationalField>> f, g;
  for (std::size_t i = 0; i < 4; ++i) f.push_back(MultiPoly<RationalField>::variable(r, i));
  for (std::size_t i = 4; i < 8; ++i) g.push_back(MultiPoly<RationalField>::variable(r, i));
  auto res = resultant_symbolic<RationalField>(f, g);
  EXPECT_EQ(res.total_degree(), 6);
  EXPECT_TRUE(res.is_homogeneous());
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(res.degree_in(i), 3);

  Xoshiro256 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<BigRational> pt;
    for (int i = 0; i < 8; ++i) pt.emplace_back(rng.uniform(-20, 20));
    BinaryForm<RationalField> F(kQ, std::vector<BigRational>(pt.begin(), pt.begin() + 4));
    BinaryForm<RationalField> G(kQ, std::vector<BigRational>(pt.begin() + 4, pt.end()));
    EXPECT_EQ(res.evaluate(pt), resultant_binary(F, G));
  }
}

TEST(Resultant, Properties) {
  auto f = B("s^3 - 2*s*t^2 + 5*t^3", 3);
  auto g = B("3*s^2 + s*t - t^2", 2);
  // Res(f, g) = (-1)^(mn) Res(g, f)
  EXPECT_EQ(resultant_binary(f, g), resultant_binary(g, f));
  auto g2 = B("s^2 - 4*t^2", 2);
  EXPECT_EQ(resultant_binary(f, g * g2), resultant_binary(f, g) * resultant_binary(f, g2));
  EXPECT_FALSE(discriminant(f).is_zero());
  EXPECT_TRUE(discriminant(B("(s - t)^2*(s + t)", 3)).is_zero());
}

TEST(BinaryGcd, CommonFactor) {
  EXPECT_EQ(gcd(B("s^2*t", 3), B("s*t^2", 3)), B("s*t", 2));
  EXPECT_EQ(gcd(B("t^2", 2), B("t^3", 3)), B("t^2", 2));
  EXPECT_EQ(gcd(B("s", 1), B("t", 1)).degree(), 0);
  EXPECT_THROW(gcd(BinaryForm<RationalField>(kQ, 1), BinaryForm<RationalField>(kQ, 2)), DomainError);
}

TEST(BinarySquarefree, MixedMultiplicities) {
  auto sf = squarefree_decomposition(B("s^2*t^3", 5));
  ASSERT_EQ(sf.parts.size(), 2u);
  EXPECT_EQ(sf.parts[0].first, B("s", 1));
  EXPECT_EQ(sf.parts[0].second, 2);
  EXPECT_EQ(sf.parts[1].first, B("t", 1));
  EXPECT_EQ(sf.parts[1].second, 3);
}

TEST(Profile, Examples) {
  EXPECT_EQ(multiplicity_profile(B("s^2 + t^2", 2)), (MultiplicityProfile{{1, 2}}));
  EXPECT_EQ(multiplicity_profile(B("-t^2", 2)), (MultiplicityProfile{{2, 1}}));
  auto p = multiplicity_profile(B("s*t*(s - t)^2", 4));
  EXPECT_EQ(p, (MultiplicityProfile{{1, 2}, {2, 1}}));
  EXPECT_EQ(p.degree, 4);
  EXPECT_EQ(p.distinct_roots(), 3);
  EXPECT_EQ(p.max_multiplicity(), 2);
  EXPECT_EQ(p.roots_with_multiplicity_at_least(2), 1);
  EXPECT_THROW(multiplicity_profile(BinaryForm<RationalField>(kQ, 3)), DomainError);
}

TEST(Profile, DegreesSumUp) {
  Xoshiro256 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<BigRational> roots;
    for (int i = 0; i < 6; ++i) roots.emplace_back(rng.uniform(-2, 2));
    auto p = multiplicity_profile(from_roots(roots));
    int total = 0;
    for (auto [m, n] : p.counts) total += m * n;
    EXPECT_EQ(total, 6);
  }
}
