#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wg/curve.hpp"

namespace wg {

/// Rotation sense of a U-turn: L is counterclockwise, R clockwise.
enum class Letter : char { L = 'L', R = 'R' };

constexpr Letter opposite(Letter a) { return a == Letter::L ? Letter::R : Letter::L; }
constexpr int sign_of(Letter a) { return a == Letter::L ? 1 : -1; }

/// Cyclic word over {L, R} of even length >= 2.
class CyclicWord {
 public:
  explicit CyclicWord(std::vector<Letter> letters);
  static CyclicWord parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t count(Letter a) const;
  /// (count L - count R) / 2.
  int turning_number() const;
  std::string str() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  std::vector<Letter> letters_;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

/// First cyclically adjacent pair (i, i+1 mod n) of opposite letters in
/// scan order i = 0..n-1. Nothing for constant words and for the length-2
/// word LR/RL, which cannot be cancelled.
std::optional<IndexPair> find_cancellable(const CyclicWord& word);

/// Removes a cancellable pair; the remaining letters keep their order.
CyclicWord cancel_step(const CyclicWord& word, IndexPair pair);

struct TraceEvent {
  enum class Kind { PullEnds, Cancel };
  Kind kind = Kind::Cancel;
  IndexPair positions{};
  std::string before;
  std::string after;
};

const char* to_string(TraceEvent::Kind kind);

struct ReductionTrace {
  std::vector<TraceEvent> steps;
  CanonicalIndex terminal = GammaK{0};
  /// "gamma0-or-primed" when the terminal word is LR/RL.
  std::string note;

  std::size_t cancel_count() const;
};

struct Reduction {
  CanonicalIndex index;
  ReductionTrace trace;
  CyclicWord terminal_word;
};

/// Cancels the leftmost cancellable pair until none remains.
Reduction reduce(const CyclicWord& word);

}  // namespace wg
