#include <gtest/gtest.h>

#include <string>

#include "support/oracles.hpp"
#include "wg/rewrite.hpp"

namespace wg {
namespace {

CyclicWord W(const char* s) { return CyclicWord::parse(s); }

TEST(CyclicWord, ParseAndCounts) {
  const auto w = W("LLRl");
  EXPECT_EQ(w.str(), "LLRL");
  EXPECT_EQ(w.count(Letter::L), 3u);
  EXPECT_EQ(w.turning_number(), 1);
  EXPECT_EQ(W("RRRRRR").turning_number(), -3);
}

TEST(CyclicWord, RejectsBadInput) {
  EXPECT_THROW(W(""), CurveError);
  EXPECT_THROW(W("L"), CurveError);
  EXPECT_THROW(W("LLR"), CurveError);
  try {
    W("LXRR");
    FAIL();
  } catch (const CurveError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
    EXPECT_EQ(e.index(), 1u);
  }
}

TEST(FindCancellable, Examples) {
  EXPECT_EQ(find_cancellable(W("LRLL")), (IndexPair{0, 1}));
  EXPECT_EQ(find_cancellable(W("LLRR")), (IndexPair{1, 2}));
  EXPECT_EQ(find_cancellable(W("RLLL")), (IndexPair{0, 1}));
  // Only the wrap-around pair.
  EXPECT_EQ(find_cancellable(W("RLLR")), (IndexPair{0, 1}));
  EXPECT_EQ(find_cancellable(W("LLLR")), (IndexPair{2, 3}));
  EXPECT_FALSE(find_cancellable(W("LLLL")));
  EXPECT_FALSE(find_cancellable(W("LR")));
  EXPECT_FALSE(find_cancellable(W("RL")));
}

TEST(CancelStep, Examples) {
  EXPECT_EQ(cancel_step(W("LRLL"), {0, 1}).str(), "LL");
  EXPECT_EQ(cancel_step(W("LRRL"), {0, 1}).str(), "RL");
  EXPECT_EQ(cancel_step(W("LLRR"), {1, 2}).str(), "LR");
  // Wrap-around pair keeps the middle letters in order.
  EXPECT_EQ(cancel_step(W("RLLL"), {3, 0}).str(), "LL");
}

TEST(CancelStep, RejectsInvalidPairs) {
  EXPECT_THROW(cancel_step(W("LRLL"), {2, 3}), CurveError);  // same letter
  EXPECT_THROW(cancel_step(W("LRLL"), {0, 2}), CurveError);  // not adjacent
  EXPECT_THROW(cancel_step(W("LRLL"), {4, 0}), CurveError);  // out of range
  EXPECT_THROW(cancel_step(W("LR"), {0, 1}), CurveError);    // terminal
}

TEST(Reduce, Examples) {
  const auto r = reduce(W("LRLL"));
  EXPECT_EQ(r.terminal_word.str(), "LL");
  EXPECT_EQ(to_string(r.index), "gamma(1)");
  EXPECT_TRUE(r.trace.note.empty());

  const auto balanced = reduce(W("LLRR"));
  EXPECT_EQ(balanced.terminal_word.str(), "LR");
  EXPECT_EQ(to_string(balanced.index), "gamma(0)");
  EXPECT_EQ(balanced.trace.note, "gamma0-or-primed");

  EXPECT_EQ(to_string(reduce(W("LLLLLRRR")).index), "gamma(1)");
  EXPECT_EQ(to_string(reduce(W("RRRR")).index), "gamma(-2)");
}

TEST(Reduce, TraceShape) {
  const auto r = reduce(W("LLLLLRRR"));
  ASSERT_EQ(r.trace.steps.size(), 6u);
  std::string current = "LLLLLRRR";
  for (std::size_t k = 0; k < r.trace.steps.size(); k += 2) {
    const auto& pull = r.trace.steps[k];
    const auto& cancel = r.trace.steps[k + 1];
    EXPECT_EQ(pull.kind, TraceEvent::Kind::PullEnds);
    EXPECT_EQ(cancel.kind, TraceEvent::Kind::Cancel);
    EXPECT_EQ(pull.before, current);
    EXPECT_EQ(pull.after, current);
    EXPECT_EQ(cancel.before, current);
    EXPECT_EQ(pull.positions, cancel.positions);
    EXPECT_EQ(cancel.after.size() + 2, current.size());
    current = cancel.after;
  }
  EXPECT_EQ(current, "LL");
  EXPECT_STREQ(to_string(TraceEvent::Kind::PullEnds), "pull-ends");
  EXPECT_STREQ(to_string(TraceEvent::Kind::Cancel), "cancel");
}

TEST(Reduce, CancelCountIsHalfTheLengthDrop) {
  // For balanced words this is one less than min(L, R).
  const auto r = reduce(W("LRLR"));
  EXPECT_EQ(r.trace.cancel_count(), 1u);
  EXPECT_EQ(r.terminal_word.size(), 2u);
  EXPECT_EQ(reduce(W("LLLLLRRR")).trace.cancel_count(), 3u);
  EXPECT_EQ(reduce(W("LLLL")).trace.cancel_count(), 0u);
  EXPECT_TRUE(reduce(W("LLLL")).trace.steps.empty());
}

TEST(Reduce, AgreesWithEveryCancellationOrder) {
  for (std::size_t len = 2; len <= 10; len += 2) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::string s;
      for (std::size_t i = 0; i < len; ++i) s.push_back((bits >> i) & 1 ? 'R' : 'L');
      const auto terminals = test::all_terminal_words(s);
      ASSERT_EQ(terminals.size(), 1u) << s;
      const auto r = reduce(CyclicWord::parse(s));
      EXPECT_EQ(*terminals.begin(), test::least_rotation(r.terminal_word.str())) << s;
      EXPECT_EQ(r.trace.cancel_count(), (len - r.terminal_word.size()) / 2) << s;
      EXPECT_EQ(index_turning_number(r.index), CyclicWord::parse(s).turning_number()) << s;
    }
  }
}

}  // namespace
}  // namespace wg
