#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fhaar/assembly.hpp"
#include "fhaar/experiments.hpp"
#include "fhaar/problem.hpp"
#include "fhaar/problem_config.hpp"

using namespace fhaar;

namespace {

ProblemSpec simple(BoundarySpec bc) {
  ProblemSpec s;
  s.name = "t";
  s.orders = {1.5, 0.5, 1.5, 0.5};
  s.sing1 = {1.0, 1.0};
  s.sing2 = {1.0, 1.0};
  s.f1 = RightHandSide::from_expression("y");
  s.f2 = RightHandSide::from_expression("z");
  s.boundary = bc;
  return s;
}

bool mentions(const ValidationReport& r, const std::string& needle) {
  for (const auto& e : r.errors) {
    if (e.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST(Validate, FourPointDenominatorIsFiveSixths) {
  const auto spec = *find_experiment("5.3");
  const auto rep = validate(spec);
  EXPECT_TRUE(rep.ok());
  ASSERT_TRUE(rep.denominator.has_value());
  EXPECT_NEAR(*rep.denominator, 5.0 / 6.0, 1e-15);
}

TEST(Validate, CaseIZeroDenominatorRejected) {
  // (1 - a/b)(1 - c/d) = 1 with a = c = 0; μ3μ4η1η2 = 1 makes the product term 1 too.
  CaseIBoundary bc;
  bc.mu3 = bc.mu4 = bc.eta1 = bc.eta2 = 1.0;
  bc.nu1 = 0.4;
  bc.nu2 = 0.6;
  const auto rep = validate(simple(bc));
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(mentions(rep, "denominator"));
}

TEST(Validate, CaseIINearZeroDenominatorRejected) {
  CaseIIBoundary bc;
  bc.ratio_ba = 0.5;
  bc.ratio_dc = 0.5;
  bc.mu3 = bc.mu4 = bc.eta1 = bc.eta2 = 1.0;
  bc.nu1 = 1.0;
  bc.nu2 = 1.0;  // (1/2)(1/2) - (1/2)(1/2)
  EXPECT_FALSE(validate(simple(bc)).ok());
}

TEST(Validate, OrderRanges) {
  auto s = simple(PureIvpBoundary{});
  s.orders.alpha1 = 2.5;
  auto rep = validate(s);
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(mentions(rep, "alpha1"));

  s = simple(PureIvpBoundary{});
  s.orders.beta2 = 0.0;
  EXPECT_FALSE(validate(s).ok());

  s = simple(PureIvpBoundary{});
  s.orders.alpha1 = 1.0;  // open at 1
  EXPECT_FALSE(validate(s).ok());

  s = simple(PureIvpBoundary{});
  s.orders = FractionalOrders::classical();
  EXPECT_TRUE(validate(s).ok());
}

TEST(Validate, ListsEveryViolation) {
  auto s = simple(PureIvpBoundary{});
  s.orders.alpha1 = 3.0;
  s.orders.beta2 = 1.5;
  s.sing1.k = -1.0;
  s.sing2.gamma_exp = 0.0;
  const auto rep = validate(s);
  EXPECT_GE(rep.errors.size(), 4u);
  try {
    require_valid(s);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.problems().size(), rep.errors.size());
  }
}

TEST(Validate, NuOutsideUnitIntervalRejected) {
  CaseIIBoundary bc;
  bc.nu1 = 1.5;
  const auto rep = validate(simple(bc));
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(mentions(rep, "nu1"));
}

TEST(Validate, CaseIRejectsZeroB) {
  CaseIBoundary bc;
  bc.b = 0.0;
  bc.a = 1.0;
  EXPECT_FALSE(validate(simple(bc)).ok());
}

TEST(Validate, NegativeNonlocalParametersRejected) {
  CaseIBoundary bc;
  bc.mu3 = -1.0;
  EXPECT_FALSE(validate(simple(bc)).ok());
}

TEST(Validate, MissingRightHandSide) {
  auto s = simple(PureIvpBoundary{});
  s.f2 = {};
  EXPECT_FALSE(validate(s).ok());
}

TEST(Experiments, FiveBuiltinsAllValid) {
  const auto all = builtin_experiments();
  ASSERT_EQ(all.size(), 5u);
  const char* names[] = {"5.1", "5.2", "5.3", "5.4", "5.5"};
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(all[i].name, names[i]);
    EXPECT_TRUE(validate(all[i]).ok()) << all[i].name;
  }
  for (const auto& s : reconstructed_experiments()) EXPECT_TRUE(validate(s).ok()) << s.name;
}

TEST(Experiments, StatedData) {
  const auto e1 = *find_experiment("5.1");
  EXPECT_EQ(e1.f1(0.3, 1.0, 1.0), 2.0);
  EXPECT_EQ(e1.sing1.k, 1.0);
  EXPECT_EQ(e1.sing2.k, 3.0);
  const auto& ivp = std::get<PureIvpBoundary>(e1.boundary);
  EXPECT_EQ(ivp.y0, 1.0);
  EXPECT_EQ(ivp.yp0, 0.0);

  const auto e2 = *find_experiment("5.2");
  const auto& nd = std::get<NeumannDirichletBoundary>(e2.boundary);
  EXPECT_NEAR(nd.y1, -0.3862943611198906, 1e-15);
  EXPECT_NEAR(nd.z1, 1.0 + 2.0 * std::log(2.0), 1e-15);
  EXPECT_EQ(e2.sing1.k, 5.0);

  const auto e3 = *find_experiment("5.3");
  EXPECT_EQ(e3.sing1.k, 0.5);
  const auto& c2 = std::get<CaseIIBoundary>(e3.boundary);
  EXPECT_EQ(c2.nu1, 0.5);
  EXPECT_NEAR(c2.nu2, 1.0 / 3.0, 1e-16);

  const auto e4 = *find_experiment("5.4");
  EXPECT_EQ(e4.f2(0.5, 1.0, 2.0), -2.5);
  EXPECT_EQ(std::get<NeumannDirichletBoundary>(e4.boundary).z1, 2.0);

  const auto e5 = *find_experiment("5.5");
  EXPECT_EQ(std::get<NeumannDirichletBoundary>(e5.boundary).z1, 1.0);
  EXPECT_EQ(e5.sing2.k, 2.0);

  EXPECT_FALSE(find_experiment("5.9").has_value());
}

TEST(Experiments, ReconstructedFormsHaveTheClaimedClassicalSolutions) {
  // 5.2r: y = 1 - 2 ln(1+x^2) satisfies y'' + 5 y'/x = f1(y, z) with z = 1 + 2 ln(1+x^2).
  const auto s = *find_experiment("5.2r");
  for (double x : {0.1, 0.4, 0.8}) {
    const double L = std::log(1 + x * x);
    const double y = 1 - 2 * L, z = 1 + 2 * L;
    const double yp = -4 * x / (1 + x * x), ypp = -4 * (1 - x * x) / std::pow(1 + x * x, 2);
    EXPECT_NEAR(ypp + 5 * yp / x, s.f1(x, y, z), 1e-12);
    EXPECT_NEAR(-ypp + 3 * -yp / x, s.f2(x, y, z), 1e-12);
  }
  // 5.3r: y = x - 33/35 x^2, z = 8/35 x^2 with k = 1/2.
  const auto t = *find_experiment("5.3r");
  for (double x : {0.1, 0.4, 0.8}) {
    const double y = x - 33.0 / 35 * x * x, z = 8.0 / 35 * x * x;
    EXPECT_NEAR(-66.0 / 35 + 0.5 / x * (1 - 66.0 / 35 * x), t.f1(x, y, z), 1e-12);
    EXPECT_NEAR(16.0 / 35 + 0.5 / x * (16.0 / 35 * x), t.f2(x, y, z), 1e-12);
  }
  // and that solution meets the four-point conditions
  EXPECT_NEAR(1 - 33.0 / 35, 8.0 / 35 * 0.25, 1e-15);
  EXPECT_NEAR(8.0 / 35, 1.0 / 3 - 33.0 / 35 / 9, 1e-15);
}

TEST(Experiments, ExpressionFormsAgreeWithNativeFunctions) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> X(0.01, 0.99), V(0.1, 2.0);
  auto all = builtin_experiments();
  for (auto& s : reconstructed_experiments()) all.push_back(s);
  for (const auto& s : all) {
    ASSERT_FALSE(s.f1.expression.empty());
    const auto e1 = RightHandSide::from_expression(s.f1.expression);
    const auto e2 = RightHandSide::from_expression(s.f2.expression);
    for (int i = 0; i < 50; ++i) {
      const double x = X(rng), y = V(rng), z = V(rng);
      ASSERT_NEAR(e1(x, y, z), s.f1(x, y, z), 1e-12 * std::max(1.0, std::abs(s.f1(x, y, z)))) << s.name;
      ASSERT_NEAR(e2(x, y, z), s.f2(x, y, z), 1e-12 * std::max(1.0, std::abs(s.f2(x, y, z)))) << s.name;
    }
  }
}

TEST(BoundaryFields, SetAndList) {
  BoundarySpec b = CaseIBoundary{};
  EXPECT_TRUE(set_boundary_field(b, "nu1", 0.25));
  EXPECT_EQ(std::get<CaseIBoundary>(b).nu1, 0.25);
  EXPECT_FALSE(set_boundary_field(b, "y1", 1.0));
  EXPECT_EQ(boundary_fields(b).size(), 12u);
  EXPECT_EQ(mode_name(b), "CaseI");
  EXPECT_TRUE(boundary_for_mode("PureIVP").has_value());
  EXPECT_FALSE(boundary_for_mode("Robin").has_value());
}

TEST(ProblemConfig, RoundTripThroughJson) {
  for (const auto& s : builtin_experiments()) {
    const auto doc = problem_to_json(s);
    const auto back = problem_from_json(doc);
    EXPECT_EQ(back.name, s.name);
    EXPECT_EQ(back.orders, s.orders);
    EXPECT_EQ(back.sing1, s.sing1);
    EXPECT_EQ(back.sing2, s.sing2);
    EXPECT_EQ(back.boundary, s.boundary);
    EXPECT_EQ(back.f1.expression, s.f1.expression);
    EXPECT_NEAR(back.f1(0.3, 0.7, 0.9), s.f1(0.3, 0.7, 0.9), 1e-12);
  }
}

TEST(ProblemConfig, UnknownAndMissingFieldsRejected) {
  auto doc = problem_to_json(*find_experiment("5.4"));
  auto extra = doc;
  extra["colour"] = "blue";
  EXPECT_THROW(problem_from_json(extra), ConfigError);
  auto nested = doc;
  nested["orders"]["delta"] = 1.0;
  EXPECT_THROW(problem_from_json(nested), ConfigError);
  auto param = doc;
  param["boundary"]["parameters"]["nu1"] = 0.5;  // not a NeumannDirichlet field
  EXPECT_THROW(problem_from_json(param), ConfigError);
  auto missing = doc;
  missing.erase("f2");
  EXPECT_THROW(problem_from_json(missing), ConfigError);
  auto badmode = doc;
  badmode["boundary"]["mode"] = "Robin";
  EXPECT_THROW(problem_from_json(badmode), ConfigError);
  auto badexpr = doc;
  badexpr["f1"] = "y +* z";
  EXPECT_THROW(problem_from_json(badexpr), ConfigError);
  auto badtype = doc;
  badtype["orders"]["alpha1"] = "1.5";
  EXPECT_THROW(problem_from_json(badtype), ConfigError);
}

TEST(ProblemConfig, MissingFileAndBadJson) {
  EXPECT_THROW(load_problem_config("/nonexistent/missing.toml"), ConfigError);
  EXPECT_THROW(parse_problem_config("{not json"), ConfigError);
  EXPECT_THROW(parse_problem_config("[1, 2]"), ConfigError);
}
