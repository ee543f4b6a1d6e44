#include "support/oracles.hpp"

#include <cmath>
#include <map>

namespace wg::test {

double curvature_turning_number(const std::function<Point2(double)>& position, std::size_t steps) {
  const double h = kTwoPi / static_cast<double>(steps);
  const double d = 1e-4;
  double total = 0.0;
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = h * (static_cast<double>(i) + 0.5);
    const Point2 pm = position(t - d), p0 = position(t), pp = position(t + d);
    const Point2 v = (pp - pm) * (1.0 / (2 * d));
    const Point2 a = (pp - 2.0 * p0 + pm) * (1.0 / (d * d));
    total += (v.x * a.y - v.y * a.x) / (v.x * v.x + v.y * v.y) * h;
  }
  return total / kTwoPi;
}

double curvature_turning_number(const dsl::CurveExpr& e, std::size_t steps) {
  return curvature_turning_number(
      [&](double t) { return Point2{dsl::evaluate(e.x, t), dsl::evaluate(e.y, t)}; }, steps);
}

std::string least_rotation(const std::string& word) {
  std::string best = word;
  for (std::size_t k = 1; k < word.size(); ++k) {
    std::string r = word.substr(k) + word.substr(0, k);
    if (r < best) best = r;
  }
  return best;
}

namespace {

void explore(const std::string& word, std::map<std::string, std::set<std::string>>& memo,
             std::set<std::string>& out) {
  const std::string key = least_rotation(word);
  if (auto it = memo.find(key); it != memo.end()) {
    out.insert(it->second.begin(), it->second.end());
    return;
  }
  std::set<std::string> found;
  const std::size_t m = key.size();
  bool any = false;
  if (m > 2) {
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = (i + 1) % m;
      if (key[i] == key[j]) continue;
      any = true;
      std::string next;
      for (std::size_t k = 0; k < m; ++k)
        if (k != i && k != j) next += key[k];
      explore(next, memo, found);
    }
  }
  if (!any) found.insert(key);
  memo[key] = found;
  out.insert(found.begin(), found.end());
}

}  // namespace

std::set<std::string> all_terminal_words(const std::string& word) {
  static std::map<std::string, std::set<std::string>> memo;
  std::set<std::string> out;
  explore(word, memo, out);
  return out;
}

double brute_diameter(const std::vector<Point2>& pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, norm(pts[i] - pts[j]));
  return best;
}

double central_difference(const dsl::ExprPtr& e, double t, double h) {
  return (dsl::evaluate(e, t + h) - dsl::evaluate(e, t - h)) / (2 * h);
}

}  // namespace wg::test
