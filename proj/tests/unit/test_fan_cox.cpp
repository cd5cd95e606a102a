#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace toric;
using namespace toric::testing;

TEST(FanStructure, MaximalConesAndFaces) {
  Fan f = make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{1, 2}, {2}, {2, 3}, {3, 1}});
  EXPECT_EQ(f.maximal_cones().size(), 3u);
  EXPECT_TRUE(f.is_cone({1}));
  EXPECT_TRUE(f.is_cone({}));
  EXPECT_FALSE(f.is_maximal({1}));
  EXPECT_TRUE(f.is_maximal({0, 2}));
  EXPECT_EQ(f.all_cones().size(), 7u);
  EXPECT_THROW(make_fan(1, {{1}}, {{2}}), InvalidFan);
  // A ray outside every listed cone becomes a maximal cone of its own.
  Fan g = make_fan(2, {{1, 0}, {0, 1}, {-1, 0}}, {{1, 2}});
  EXPECT_TRUE(g.is_maximal({2}));
}

TEST(FanValidation, ReportsEachFailureKind) {
  auto kind = [](const Fan& f) { return validate_smooth_fan(f).kind; };
  EXPECT_FALSE(kind(p2_fan()).has_value());
  EXPECT_EQ(kind(make_fan(2, {{0, 0}, {0, 1}}, {{1}, {2}})), FanErrorKind::ZeroRay);
  EXPECT_EQ(kind(make_fan(1, {{2}, {-1}}, {{1}, {2}})), FanErrorKind::NonPrimitiveRay);
  EXPECT_EQ(kind(make_fan(1, {{1}, {1}, {-1}}, {{1}, {2}, {3}})), FanErrorKind::DuplicateRay);
  EXPECT_EQ(kind(make_fan(2, {{1, 0}, {1, 2}, {-1, -1}}, {{1, 2}, {2, 3}, {1, 3}})),
            FanErrorKind::NonSmoothCone);
  EXPECT_EQ(kind(make_fan(2, {{1, 0}, {0, 1}, {-1, 0}}, {{1, 2, 3}})), FanErrorKind::NonSimplicialCone);
  EXPECT_EQ(kind(make_fan(2, {{1, 0}, {-1, 0}}, {{1}, {2}})), FanErrorKind::RaysDoNotSpan);
  ValidationReport r = validate_smooth_fan(make_fan(2, {{1, 0}, {0, 1}, {2, 1}}, {{1, 2}, {2, 3}}));
  EXPECT_EQ(r.kind, FanErrorKind::NonSmoothCone);
  ASSERT_TRUE(r.cone.has_value());
  EXPECT_THROW(grading_data(make_fan(1, {{2}, {-1}}, {{1}, {2}})), InvalidFan);
}

TEST(Grading, FixtureClassGroupsAndDegrees) {
  GradingData p1 = grading_data(p1_fan());
  EXPECT_EQ(p1.class_group().describe(), "Z");
  EXPECT_EQ(p1.ray_degree(0), iv({1}));
  EXPECT_EQ(p1.ray_degree(1), iv({1}));
  EXPECT_EQ(p1.e_bar(), iv({2}));

  GradingData p2 = grading_data(p2_fan());
  EXPECT_EQ(p2.class_group().describe(), "Z");
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(p2.ray_degree(i), iv({1}));

  GradingData pp = grading_data(p1xp1_fan());
  EXPECT_EQ(pp.class_group().describe(), "Z^2");
  EXPECT_EQ(pp.dual_basis()[0], iv({1, 1, 0, 0}));
  EXPECT_EQ(pp.dual_basis()[1], iv({0, 0, 1, 1}));

  GradingData f1 = grading_data(f1_fan());
  EXPECT_EQ(f1.dual_basis()[0], iv({1, 0, 1, 1}));
  EXPECT_EQ(f1.dual_basis()[1], iv({0, 1, 0, 1}));
  EXPECT_EQ(f1.ray_degree(3), iv({1, 1}));
}

TEST(Grading, ExactSequence) {
  for (const auto& [name, fan] : fixture_fans()) {
    GradingData g = grading_data(fan);
    const std::size_t n = g.ambient_rank();
    // deg o iota = 0 and each u_j kills the image of iota.
    for (std::size_t k = 0; k < n; ++k) {
      IntVector p(n, 0);
      p[k] = 1;
      IntVector ip = g.iota_apply(p);
      EXPECT_EQ(g.degree(ip), g.class_group().zero()) << name;
      for (const auto& u : g.dual_basis()) {
        Integer s = 0;
        for (std::size_t i = 0; i < ip.size(); ++i) s += u[i] * ip[i];
        EXPECT_EQ(s, 0) << name;
      }
    }
    // pairing(j, deg a) = <u_j, a>.
    IntVector a(g.num_rays());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<long>(2 * i) - 3;
    for (std::size_t j = 0; j < g.dual_basis().size(); ++j) {
      Integer s = 0;
      for (std::size_t i = 0; i < a.size(); ++i) s += g.dual_basis()[j][i] * a[i];
      EXPECT_EQ(g.pairing(j, g.degree(a)), s) << name;
    }
  }
}

TEST(CoxData, IrrelevantIdeal) {
  auto names = indexed_names("x", 4);
  auto render = [&](const Fan& f) {
    std::vector<CommPoly> gens;
    for (const auto& e : irrelevant_ideal(f).generators) gens.push_back(CommPoly::monomial(e));
    return ideal_to_string(gens, names);
  };
  EXPECT_EQ(render(p1_fan()), "(x1, x2)");
  EXPECT_EQ(render(p2_fan()), "(x1, x2, x3)");
  EXPECT_EQ(render(p1xp1_fan()), "(x1*x3, x1*x4, x2*x3, x2*x4)");
  EXPECT_EQ(render(f1_fan()), "(x1*x2, x1*x4, x2*x3, x3*x4)");
  EXPECT_EQ(sigma_hat_monomial(p2_fan(), {0, 1}), (Exponents{0, 0, 1}));
  EXPECT_EQ(sigma_hat_monomial(p2_fan(), {}), (Exponents{1, 1, 1}));
  EXPECT_THROW(sigma_hat_monomial(p1xp1_fan(), {0, 1}), UnknownCone);
}

TEST(CoxData, DegreeComponentBasisMatchesEnumeration) {
  for (const auto& [name, fan] : fixture_fans()) {
    GradingData g = grading_data(fan);
    const std::size_t d = g.num_rays();
    const int cap = 3;
    for (const auto& cls : class_box(g.class_coordinates(), -1, 3)) {
      std::vector<Exponents> expect;
      Exponents a(d, 0);
      while (true) {
        if (g.degree(a) == cls) expect.push_back(a);
        std::size_t i = 0;
        while (i < d && a[i] == cap) a[i++] = 0;
        if (i == d) break;
        ++a[i];
      }
      std::sort(expect.begin(), expect.end());
      auto got = degree_component_basis(g, cls, cap);
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, expect) << name << " " << to_string(cls);
    }
  }
}

TEST(Euler, ActsByDegree) {
  for (const auto& [name, fan] : fixture_fans()) {
    GradingData g = grading_data(fan);
    const std::size_t d = g.num_rays();
    std::vector<bool> mask(d, false);
    for (std::size_t j = 0; j < g.dual_basis().size(); ++j) {
      WeylElement th = euler_operator(g, g.dual_values(j));
      EXPECT_EQ(th, theta_to_weyl(euler_theta(g, g.dual_values(j))));
      std::vector<int> e(d);
      for (std::size_t i = 0; i < d; ++i) e[i] = static_cast<int>(i % 3);
      LaurentPoly m = LaurentPoly::monomial(mask, e);
      IntVector a(e.begin(), e.end());
      LaurentPoly expect = LaurentPoly::monomial(mask, e, Rational(g.pairing(j, g.degree(a))));
      if (g.pairing(j, g.degree(a)) == 0) expect = LaurentPoly(mask);
      EXPECT_EQ(act(th, m), expect) << name;
    }
  }
}
