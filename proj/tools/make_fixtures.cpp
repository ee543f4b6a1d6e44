// Writes the fixture curves used by the tests and the README examples.
#include <cmath>
#include <complex>
#include <iostream>
#include <string>
#include <vector>

#include "wg/curve.hpp"
#include "wg/invariant.hpp"
#include "wg/io.hpp"

namespace {

using wg::Point2;
using cplx = std::complex<double>;

// z(t) = e^{it} + 0.9 e^{2it} + 0.15 e^{-it}: two inner loops, r = 2.
wg::SampledCurve alpha_r2(std::size_t n) {
  std::vector<Point2> pts(n), vel(n);
  const cplx i{0, 1};
  for (std::size_t k = 0; k < n; ++k) {
    const double t = wg::kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    const cplx z = std::exp(i * t) + 0.9 * std::exp(2.0 * i * t) + 0.15 * std::exp(-i * t);
    const cplx v = i * std::exp(i * t) + 1.8 * i * std::exp(2.0 * i * t) -
                   0.15 * i * std::exp(-i * t);
    pts[k] = {z.real(), z.imag()};
    vel[k] = {v.real(), v.imag()};
  }
  return wg::SampledCurve::make(std::move(pts), std::move(vel));
}

// Tangent angle rises by 5*pi over the first 5/8 of the period, then falls by
// 3*pi, so every generic direction sees five L turns and three R turns. The
// speed 1 + a cos(theta) + b sin(theta) is solved for closure.
wg::SampledCurve five_l_three_r(std::size_t n) {
  auto theta = [](double u) {
    return u < 0.625 ? 8.0 * wg::kPi * u : 5.0 * wg::kPi - 8.0 * wg::kPi * (u - 0.625);
  };
  const std::size_t fine = 64 * n;
  auto integral = [&](auto weight) {
    cplx acc = 0;
    for (std::size_t k = 0; k < fine; ++k) {
      const double u = (static_cast<double>(k) + 0.5) / static_cast<double>(fine);
      acc += weight(theta(u)) * std::polar(1.0, theta(u));
    }
    return acc / static_cast<double>(fine);
  };
  const cplx c0 = integral([](double) { return 1.0; });
  const cplx ca = integral([](double th) { return std::cos(th); });
  const cplx cb = integral([](double th) { return std::sin(th); });
  // Solve c0 + a ca + b cb = 0 as a real 2x2 system.
  const double det = ca.real() * cb.imag() - cb.real() * ca.imag();
  const double a = (-c0.real() * cb.imag() + cb.real() * c0.imag()) / det;
  const double b = (-ca.real() * c0.imag() + c0.real() * ca.imag()) / det;
  auto speed = [&](double th) { return 1.0 + a * std::cos(th) + b * std::sin(th); };

  std::vector<Point2> pts(n), vel(n);
  cplx z = 0;
  const std::size_t sub = fine / n;
  for (std::size_t k = 0; k < n; ++k) {
    const double u0 = static_cast<double>(k) / static_cast<double>(n);
    const double th = theta(u0);
    pts[k] = {z.real(), z.imag()};
    const cplx v = speed(th) * std::polar(1.0, th) / wg::kTwoPi;
    vel[k] = {v.real(), v.imag()};
    for (std::size_t s = 0; s < sub; ++s) {
      const double u = u0 + (static_cast<double>(s) + 0.5) / static_cast<double>(fine);
      z += speed(theta(u)) * std::polar(1.0, theta(u)) / static_cast<double>(fine);
    }
  }
  return wg::SampledCurve::make(std::move(pts), std::move(vel));
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "fixtures";
  try {
    const auto a = alpha_r2(512);
    const auto b = five_l_three_r(512);
    wg::io::write_file_atomic(dir + "/alpha_r2.json", wg::io::curve_to_json(a).dump() + "\n");
    wg::io::write_file_atomic(dir + "/alpha_5l3r.json", wg::io::curve_to_json(b).dump() + "\n");
    std::cout << "alpha_r2: r = " << wg::turning_number(a) << "\n"
              << "alpha_5l3r: r = " << wg::turning_number(b) << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
