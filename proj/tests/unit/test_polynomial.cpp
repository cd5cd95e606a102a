#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace toric;

namespace {

const VarNames kXY = indexed_names("x", 3);

CommPoly P(const std::string& s) { return parse_comm_poly(s, kXY); }

}  // namespace

TEST(CommPoly, ParsePrintRoundTrip) {
  for (const char* s : {"0", "1", "-1/2", "x1", "3*x1^2 - 1/2*x2", "x1*x2*x3 + x3^4 - 7",
                        "-x1 + x2"}) {
    CommPoly p = P(s);
    EXPECT_EQ(P(to_string(p, kXY)), p) << s;
  }
  EXPECT_EQ(to_string(P("x2 + 3*x1^2 - x2 - 1/2*x2"), kXY), "3*x1^2 - 1/2*x2");
  EXPECT_EQ(to_string(P("(x1 + 1)^2"), kXY), "x1^2 + 2*x1 + 1");
  EXPECT_EQ(ideal_to_string({}, kXY), "(0)");
}

TEST(CommPoly, ParseErrors) {
  EXPECT_THROW(P("x1 +"), ParseError);
  EXPECT_THROW(P("x4"), ParseError);
  EXPECT_THROW(P("x1^-1"), ParseError);
  EXPECT_THROW(P("1/0"), ParseError);
  EXPECT_THROW(P("(x1"), ParseError);
}

TEST(CommPoly, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(toric::testing::seed());
  std::uniform_int_distribution<int> e(0, 3), c(-4, 4);
  auto rnd = [&] {
    CommPoly p(3);
    for (int t = 0; t < 4; ++t) p.add_term({e(rng), e(rng), e(rng)}, c(rng));
    return p;
  };
  for (int t = 0; t < 50; ++t) {
    CommPoly a = rnd(), b = rnd(), d = rnd();
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_EQ(a - a, CommPoly(3));
    std::vector<Rational> pt{Rational(1, 2), Rational(-2), Rational(3)};
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
    EXPECT_EQ(a.pow(2), a * a);
  }
}

TEST(CommPoly, DegRevLexOrder) {
  // Higher total degree first; ties broken by the smaller last exponent.
  EXPECT_GT(degrevlex_compare({2, 0, 0}, {0, 0, 1}), 0);
  EXPECT_GT(degrevlex_compare({1, 1, 0}, {1, 0, 1}), 0);
  EXPECT_GT(degrevlex_compare({0, 2, 0}, {1, 0, 1}), 0);
  EXPECT_EQ(degrevlex_compare({1, 2, 3}, {1, 2, 3}), 0);
  EXPECT_EQ(P("x3^2 + x1*x2 + x1^2").monic(), P("x1^2 + x1*x2 + x3^2"));
  EXPECT_EQ(P("2*x1 - 4").monic(), P("x1 - 2"));
}

TEST(CommPoly, DividesAndSubstitute) {
  CommPoly q;
  EXPECT_TRUE(divides(P("x1 - x2"), P("x1^2 - x2^2"), &q));
  EXPECT_EQ(q, P("x1 + x2"));
  EXPECT_FALSE(divides(P("x1 - x2"), P("x1^2 + x2^2")));
  CommPoly s = P("x1*x2 + x3").substitute({P("x2"), P("x1 + 1"), P("2")}, 3);
  EXPECT_EQ(s, P("x1*x2 + x2 + 2"));
  EXPECT_EQ(P("5").total_degree(), 0);
  EXPECT_EQ(CommPoly(3).total_degree(), -1);
  EXPECT_TRUE(P("7").is_constant());
}
