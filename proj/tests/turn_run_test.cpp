#include <gtest/gtest.h>

#include "wg/homotopy.hpp"
#include "wg/invariant.hpp"
#include "wg/turn_run.hpp"

namespace wg {
namespace {

TurnRunCurve from_word(const char* w, std::size_t n = 256) {
  return realize_code(code_from_word(CyclicWord::parse(w)), n);
}

TEST(TurnRun, RealizedWordsHaveMatchingTurningNumbers) {
  for (const char* w : {"LL", "RR", "LR", "RL", "LLLL", "RRRRRR", "LRLL", "LLLLLRRR"}) {
    const auto c = from_word(w);
    EXPECT_EQ(c.word().str(), w);
    const auto s = c.sample(256);
    EXPECT_EQ(turning_number(s), CyclicWord::parse(w).turning_number()) << w;
  }
}

TEST(TurnRun, CodeIsReextracted) {
  for (const char* w : {"LL", "LRLL", "LLLLLRRR", "RLRRLL"}) {
    const auto c = from_word(w, 512);
    const auto code = extract_turn_code(c.sample(512), c.direction, 8.0);
    EXPECT_EQ(code.word().str(), w);
    for (std::size_t k = 0; k < c.size(); ++k) {
      EXPECT_NEAR(code.turns[k].t, c.caps[k].mid_param(), 2 * kTwoPi / 512) << w;
      EXPECT_NEAR(code.turns[k].x, c.tangency(k), 1e-3) << w;
    }
  }
}

TEST(TurnRun, EvaluateMatchesFiniteDifferences) {
  const auto c = from_word("LLLLLRRR");
  for (double t = 0.05; t < kTwoPi; t += 0.37) {
    const double h = 1e-6;
    const auto [p, v] = c.evaluate(t);
    const Point2 fd = (1.0 / (2 * h)) * (c.evaluate(t + h).first - c.evaluate(t - h).first);
    EXPECT_NEAR(v.x, fd.x, 1e-5 * (1 + norm(v))) << t;
    EXPECT_NEAR(v.y, fd.y, 1e-5 * (1 + norm(v))) << t;
    EXPECT_GT(norm(v), 0.0);
    const auto [q, w] = c.evaluate(t + kTwoPi);
    EXPECT_NEAR(norm(q - p), 0.0, 1e-9);
  }
}

TEST(TurnRun, ValidateRejectsBrokenStructure) {
  auto c = from_word("LRLL");
  auto flat = c;
  flat.caps[1].y_out = flat.caps[1].y_in;
  EXPECT_THROW(flat.validate(), CurveError);
  auto backwards = c;
  std::swap(backwards.caps[2].t0, backwards.caps[2].t1);
  EXPECT_THROW(backwards.validate(), CurveError);
  auto odd = c;
  odd.caps.pop_back();
  EXPECT_THROW(odd.validate(), CurveError);
  auto heading = c;
  heading.first_heading = 0;
  EXPECT_THROW(heading.validate(), CurveError);
}

TEST(TurnRun, WithoutPairDropsTwoLetters) {
  const auto c = from_word("LRLL");
  const auto d = c.without_pair(0);
  EXPECT_EQ(d.word().str(), "LL");
  EXPECT_NO_THROW(d.validate());
  const auto wrap = from_word("RLLL").without_pair(3);
  EXPECT_EQ(wrap.word().str(), "LL");
  EXPECT_THROW(from_word("LR").without_pair(0), CurveError);
}

TEST(TurnRun, LerpEndpointsAndStructureCheck) {
  const auto a = from_word("LLLL");
  auto b = a;
  for (auto& cap : b.caps) cap.x *= 2.0;
  const auto mid = lerp(a, b, 0.5);
  for (std::size_t k = 0; k < a.size(); ++k)
    EXPECT_DOUBLE_EQ(mid.caps[k].x, 1.5 * a.caps[k].x);
  EXPECT_EQ(lerp(a, b, 0.0).caps[1].x, a.caps[1].x);
  EXPECT_EQ(lerp(a, b, 1.0).caps[1].x, b.caps[1].x);
  EXPECT_NO_THROW(mid.sample(256));
  EXPECT_THROW(lerp(a, from_word("LL"), 0.5), CurveError);
}

TEST(RealizeCode, RejectsBadCodes) {
  auto code = code_from_word(CyclicWord::parse("LRLL"));
  EXPECT_THROW(realize_code(code, 256, {1.0}), CurveError);
  auto same = code;
  same.turns[1].x = same.turns[0].x;
  EXPECT_THROW(realize_code(same, 256), CurveError);
  code.turns.pop_back();
  EXPECT_THROW(realize_code(code, 256), CurveError);
}

}  // namespace
}  // namespace wg
