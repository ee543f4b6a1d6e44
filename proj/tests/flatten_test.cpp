#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support/random_curves.hpp"
#include "wg/flatten.hpp"
#include "wg/invariant.hpp"

namespace wg {
namespace {

// Unit-speed stadium: vertical sides of length 2 joined by unit half circles.
SampledCurve stadium(std::size_t n) {
  const double side = 2.0, len = 2 * side + kTwoPi;
  const double speed = len / kTwoPi;
  std::vector<Point2> pts(n), vel(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = len * static_cast<double>(i) / static_cast<double>(n);
    Point2 p, v;
    if (s < side) {
      p = {1, -1 + s};
      v = {0, 1};
    } else if (s < side + kPi) {
      const double a = s - side;
      p = {std::cos(a), 1 + std::sin(a)};
      v = {-std::sin(a), std::cos(a)};
    } else if (s < 2 * side + kPi) {
      p = {-1, 1 - (s - side - kPi)};
      v = {0, -1};
    } else {
      const double a = kPi + (s - 2 * side - kPi);
      p = {std::cos(a), -1 + std::sin(a)};
      v = {-std::sin(a), std::cos(a)};
    }
    pts[i] = p;
    vel[i] = speed * v;
  }
  return SampledCurve::make(pts, vel);
}

TEST(Direction, RejectsZeroAndNormalizes) {
  EXPECT_THROW(Direction(0, 0), CurveError);
  const Direction d(3, 4);
  EXPECT_NEAR(d.ux(), 0.6, 1e-15);
  EXPECT_NEAR(d.uy(), 0.8, 1e-15);
  EXPECT_NEAR(dot(d.along(), d.across()), 0.0, 1e-15);
}

TEST(TurnCode, CircleIsLL) {
  const auto code = extract_turn_code(make_gamma(GammaK{1}, 64), Direction(1, 0));
  EXPECT_EQ(code.word().str(), "LL");
  ASSERT_EQ(code.turns.size(), 2u);
  // f(t) = -sin t vanishes at t = 0 and t = pi; x = cos t there.
  EXPECT_NEAR(code.turns[0].t, 0.0, 1e-12);
  EXPECT_NEAR(code.turns[0].x, 1.0, 1e-12);
  EXPECT_NEAR(code.turns[1].t, kPi, 1e-12);
  EXPECT_NEAR(code.turns[1].x, -1.0, 1e-12);
  EXPECT_EQ(code_turning_number(code), 1);
}

TEST(TurnCode, ClockwiseCircleIsRR) {
  const auto code = extract_turn_code(make_gamma(GammaK{-1}, 64), Direction::from_angle(0.3));
  EXPECT_EQ(code.word().str(), "RR");
}

TEST(TurnCode, FigureEightHasTwoOfEach) {
  const auto code = extract_turn_code(make_gamma(GammaK{0}, 256), Direction::from_angle(0.1));
  const auto w = code.word();
  EXPECT_EQ(w.size(), 4u);
  EXPECT_EQ(w.count(Letter::L), 2u);
  EXPECT_EQ(w.count(Letter::R), 2u);
  EXPECT_EQ(code_turning_number(code), 0);
}

TEST(TurnCode, TurnParametersIncreaseAndAlternateHeading) {
  const auto code = extract_turn_code(make_gamma(GammaK{3}, 256), Direction::from_angle(0.7));
  ASSERT_EQ(code.turns.size(), 6u);
  for (std::size_t k = 0; k + 1 < code.turns.size(); ++k)
    EXPECT_LT(code.turns[k].t, code.turns[k + 1].t);
  for (std::size_t k = 0; k < code.turns.size(); ++k)
    EXPECT_EQ(code.heading_before(k), -code.heading_before((k + 1) % code.turns.size()));
}

TEST(TurnCode, MatchesTurningNumberOnRandomCurves) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto c = test::random_valid_curve(rng, 512);
    Direction l;
    try {
      l = choose_generic_direction(c, 256, 1);
    } catch (const CurveError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NoGenericDirection);
      continue;
    }
    const auto code = extract_turn_code(c, l);
    EXPECT_GE(code.turns.size(), 2u);
    EXPECT_EQ(code.turns.size() % 2, 0u);
    EXPECT_EQ(code_turning_number(code), turning_number(c));
  }
}

TEST(Genericity, StraightSidesAreDegenerate) {
  const auto s = stadium(128);
  const Direction vertical_sides(1, 0);
  const auto g = check_direction(s, vertical_sides);
  EXPECT_FALSE(g.generic);
  EXPECT_TRUE(g.sample.has_value());
  try {
    extract_turn_code(s, vertical_sides);
    FAIL();
  } catch (const CurveError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateTangency);
  }
  const auto l = choose_generic_direction(s, 64, 5);
  EXPECT_TRUE(check_direction(s, l).generic);
  EXPECT_EQ(extract_turn_code(s, l).word().str(), "LL");
}

TEST(Genericity, CloseTangenciesRejectedBySeparation) {
  const auto c = make_gamma(GammaK{0}, 64);
  // Turns of the figure-eight along x sit 16 samples apart.
  EXPECT_TRUE(check_direction(c, Direction::from_angle(0.01), 8.0).generic);
  EXPECT_FALSE(check_direction(c, Direction::from_angle(0.01), 20.0).generic);
}

TEST(Genericity, SeedDeterminesDirection) {
  const auto c = make_gamma(GammaK{2}, 128);
  const auto a = choose_generic_direction(c, 16, 42);
  const auto b = choose_generic_direction(c, 16, 42);
  EXPECT_EQ(a.ux(), b.ux());
  EXPECT_EQ(a.uy(), b.uy());
  EXPECT_GE(a.angle(), 0.0);
  EXPECT_LT(a.angle(), kPi);
  EXPECT_THROW(choose_generic_direction(c, 0, 42), CurveError);
}

TEST(Genericity, ExhaustedTrialsReportNoDirection) {
  // With separation above N every direction fails.
  try {
    choose_generic_direction(make_gamma(GammaK{1}, 16), 8, 1, 100.0);
    FAIL();
  } catch (const CurveError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoGenericDirection);
  }
}

TEST(CodeTurningNumber, Examples) {
  TurnCode code;
  for (char c : std::string("LLLLLRRR")) code.turns.push_back({static_cast<Letter>(c), 0, 0});
  EXPECT_EQ(code_turning_number(code), 1);
  code.turns.pop_back();
  try {
    code_turning_number(code);
    FAIL();
  } catch (const CurveError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InternalInconsistency);
  }
}

}  // namespace
}  // namespace wg
