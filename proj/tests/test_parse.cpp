#include <gtest/gtest.h>

#include "congruence/chowforms.hpp"
#include "congruence/oracles.hpp"
#include "congruence/parse.hpp"

using namespace congruence;

namespace {

const RationalField kQ;

RingPtr<RationalField> xyz() { return make_ring(kQ, {"x", "y", "z"}); }

}  // namespace

TEST(ParsePolynomial, Grammar) {
  auto r = xyz();
  auto f = parse_polynomial("-x^2*y + 3/4*z - (x - y)^2", r);
  EXPECT_EQ(f, parse_polynomial("-(x^2 - 2*x*y + y^2) - x^2*y + 3/4*z", r));
  EXPECT_EQ(parse_polynomial("  x  +\ty ", r), parse_polynomial("y+x", r));
  EXPECT_EQ(parse_polynomial("+2", r).to_string(), "2");
}

TEST(ParsePolynomial, Errors) {
  auto r = xyz();
  for (const char* bad : {"", "x +", "2x", "x y", "(x + y", "x^", "w", "x^-1", "x ** 2", "1/0", "x)"})
    EXPECT_THROW(parse_polynomial(bad, r), ParseError) << bad;
}

TEST(ParsePolynomial, ErrorNamesPosition) {
  try {
    parse_polynomial("x + w", xyz());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("position 4"), std::string::npos);
  }
}

TEST(ParsePolynomial, PrimeField) {
  PrimeField f7(7);
  auto r = make_ring(f7, {"x"});
  EXPECT_EQ(parse_polynomial("1/2*x + 8", r), parse_polynomial("4*x + 1", r));
  EXPECT_THROW(parse_polynomial("1/7*x", r), ParseError);
}

TEST(RoundTrip, PrintedPolynomialsReparse) {
  auto r = xyz();
  for (const char* text : {"x^3 - 1/2*y*z + 7", "-(x + y + z)^4", "x*y*z - 2*x^2*z", "0", "-3/5"}) {
    auto f = parse_polynomial(text, r);
    EXPECT_EQ(parse_polynomial(f.to_string(), r), f) << text;
  }
  auto chow = chow_form(twisted_cubic(kQ));
  EXPECT_EQ(parse_polynomial(chow.to_string(), chow.ring()), chow);
  PrimeField k;
  auto g = random_plane_curve(k, 4, 9);
  EXPECT_EQ(parse_polynomial(g.to_string(), g.ring()), g);
}

TEST(ParseScalars, Lists) {
  auto v = parse_scalar_list("1, -2/4 ,3", kQ);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[1], BigRational(-1) / BigRational(2));
  EXPECT_THROW(parse_scalar_list("1,,2", kQ), ParseError);
  EXPECT_THROW(parse_scalar("1/0", kQ), ParseError);
}

TEST(ParseLine, PlueckerVector) {
  auto l = parse_line("1,1,1,-1,-2,-1", kQ);
  EXPECT_EQ(l.dual_to_string(), "-1,2,-1,1,-1,1");
  EXPECT_EQ(parse_line(l.to_string(), kQ).primal(), l.primal());
  EXPECT_THROW(parse_line("1,0,0,0,0", kQ), ParseError);
  EXPECT_THROW(parse_line("1,0,0,0,0,1", kQ), DomainError);
}

TEST(ParseBinaryForm, Degree) {
  auto f = parse_binary_form("s^2*t - 3*t^3", kQ, 3);
  EXPECT_EQ(f.coeffs(), (std::vector<BigRational>{0, 1, 0, -3}));
  EXPECT_THROW(parse_binary_form("s^2 + t", kQ, 2), DomainError);
  EXPECT_THROW(parse_binary_form("x", kQ, 1), ParseError);
}
