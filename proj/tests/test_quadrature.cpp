#include <doctest.h>

#include <vector>

#include "shearlift/quadrature.hpp"

using namespace shearlift;

namespace {
const QuadratureConfig kCfg{};
}

TEST_CASE("polynomials and entire integrands") {
  const Complex z{0.7, 0.4};
  const Complex cubic = integrate_path([](Complex w) { return w * w; }, z, kCfg);
  CHECK(std::abs(cubic - z * z * z / 3.0) < 1e-13);

  // Degree 13 is exact for the 7-point Gauss / 15-point Kronrod pair.
  const Complex deg13 = integrate_path(
      [](Complex w) {
        Complex acc{1.0, 0.0};
        for (int i = 0; i < 13; ++i) acc *= w;
        return acc;
      },
      z, kCfg);
  Complex z14{1.0, 0.0};
  for (int i = 0; i < 14; ++i) z14 *= z;
  CHECK(std::abs(deg13 - z14 / 14.0) < 1e-13);

  const Complex expo = integrate_path([](Complex w) { return std::exp(w); }, z, kCfg);
  CHECK(std::abs(expo - (std::exp(z) - 1.0)) < 1e-12);
}

TEST_CASE("rational integrand with boundary pole") {
  const Complex z{0.7, 0.2};
  const Complex got =
      integrate_path([](Complex w) { return 1.0 / (1.0 - w); }, z, kCfg);
  CHECK(std::abs(got + std::log(1.0 - z)) < 1e-11);
}

TEST_CASE("path strategies agree") {
  const Complex z{-0.4, 0.55};
  auto f = [](Complex w) { return 1.0 / (1.0 + w * w * w); };
  QuadratureConfig two = kCfg;
  two.path_strategy = PathStrategy::two_segment;
  const Complex a = integrate_path(f, z, kCfg);
  const Complex b = integrate_path(f, z, two);
  CHECK(std::abs(a - b) < 1e-10);
}

TEST_CASE("singular path guard") {
  const std::vector<Complex> poles{Complex{0.5, 0.0}};
  CHECK_THROWS_AS(integrate_path([](Complex w) { return 1.0 / (w - 0.5); },
                                 Complex{0.9, 0.0}, kCfg, poles),
                  SingularPath);
  // A path that stays away from the pole is fine.
  CHECK_NOTHROW(integrate_path([](Complex w) { return 1.0 / (w - 0.5); },
                               Complex{0.0, 0.9}, kCfg, poles));
}

TEST_CASE("depth exhaustion raises") {
  QuadratureConfig tight = kCfg;
  tight.abs_tol = 1e-16;
  tight.rel_tol = 1e-16;
  tight.max_depth = 3;
  CHECK_THROWS_AS(integrate_path([](Complex w) { return std::exp(50.0 * w) * std::sin(40.0 * w.real()); },
                                 Complex{0.9, 0.3}, tight),
                  QuadratureFailure);
}

TEST_CASE("config validation") {
  QuadratureConfig bad = kCfg;
  bad.abs_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  QuadratureConfig bad2 = kCfg;
  bad2.max_depth = 0;
  CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
}
