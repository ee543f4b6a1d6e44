#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "wg/curve.hpp"
#include "wg/dsl.hpp"
#include "wg/rewrite.hpp"

namespace wg::test {

/// Turning number as (1/2pi) * integral of curvature * speed, with x', y',
/// x'', y'' from central differences of the position functions. Shares no
/// code with the angle-lift implementation.
double curvature_turning_number(const std::function<Point2(double)>& position, std::size_t steps);
double curvature_turning_number(const dsl::CurveExpr& e, std::size_t steps);

/// Every terminal word reachable by any order of cancellations of
/// cyclically adjacent opposite letters, length-2 words being terminal.
/// Words are returned in their lexicographically least rotation.
std::set<std::string> all_terminal_words(const std::string& word);

/// Least rotation of a cyclic word.
std::string least_rotation(const std::string& word);

/// O(N^2) largest pairwise distance.
double brute_diameter(const std::vector<Point2>& pts);

/// Central difference derivative of an expression.
double central_difference(const dsl::ExprPtr& e, double t, double h);

}  // namespace wg::test
