#include "wg/rewrite.hpp"

#include <algorithm>

namespace wg {

CyclicWord::CyclicWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.size() < 2 || letters_.size() % 2 != 0)
    throw CurveError(ErrorKind::InvalidArgument,
                     "a turn word needs even length >= 2, got " +
                         std::to_string(letters_.size()));
}

CyclicWord CyclicWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == 'L' || c == 'l')
      letters.push_back(Letter::L);
    else if (c == 'R' || c == 'r')
      letters.push_back(Letter::R);
    else
      throw CurveError(ErrorKind::InvalidArgument,
                       std::string("unexpected letter '") + c + "' in turn word", i);
  }
  return CyclicWord(std::move(letters));
}

std::size_t CyclicWord::count(Letter a) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), a));
}

int CyclicWord::turning_number() const {
  return (static_cast<int>(count(Letter::L)) - static_cast<int>(count(Letter::R))) / 2;
}

std::string CyclicWord::str() const {
  std::string s;
  for (Letter a : letters_) s.push_back(static_cast<char>(a));
  return s;
}

std::optional<IndexPair> find_cancellable(const CyclicWord& word) {
  const std::size_t n = word.size();
  if (n <= 2) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (word[i] != word[j]) return IndexPair{i, j};
  }
  return std::nullopt;
}

CyclicWord cancel_step(const CyclicWord& word, IndexPair pair) {
  const std::size_t n = word.size();
  const auto [i, j] = pair;
  if (n <= 2 || i >= n || j != (i + 1) % n || word[i] == word[j])
    throw CurveError(ErrorKind::InvalidArgument,
                     "pair (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not cancellable in " + word.str());
  std::vector<Letter> out;
  out.reserve(n - 2);
  for (std::size_t k = 0; k < n; ++k)
    if (k != i && k != j) out.push_back(word[k]);
  return CyclicWord(std::move(out));
}

const char* to_string(TraceEvent::Kind kind) {
  return kind == TraceEvent::Kind::PullEnds ? "pull-ends" : "cancel";
}

std::size_t ReductionTrace::cancel_count() const {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const auto& e) {
    return e.kind == TraceEvent::Kind::Cancel;
  }));
}

Reduction reduce(const CyclicWord& word) {
  ReductionTrace trace;
  CyclicWord current = word;
  while (auto pair = find_cancellable(current)) {
    const std::string before = current.str();
    trace.steps.push_back({TraceEvent::Kind::PullEnds, *pair, before, before});
    current = cancel_step(current, *pair);
    trace.steps.push_back({TraceEvent::Kind::Cancel, *pair, before, current.str()});
  }
  if (current.size() == 2 && current[0] != current[1]) {
    trace.terminal = GammaK{0};
    trace.note = "gamma0-or-primed";
  } else {
    trace.terminal = GammaK{current.turning_number()};
  }
  return {trace.terminal, std::move(trace), std::move(current)};
}

}  // namespace wg
