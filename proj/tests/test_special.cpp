#include <doctest.h>

#include "shearlift/special.hpp"

using namespace shearlift;

TEST_CASE("hypergeometric series against elementary identities") {
  const Complex z{0.3, 0.2};
  // 2F1(1, 1; 2; z) = -log(1-z)/z
  const Complex lhs = hyp2f1({Complex{1.0, 0.0}, Complex{1.0, 0.0}, Complex{2.0, 0.0}, z});
  CHECK(std::abs(lhs + std::log(1.0 - z) / z) < 1e-13);

  // 2F1(1, 1/2; 3/2; z^2) = atanh(z)/z
  const Complex lhs2 =
      hyp2f1({Complex{1.0, 0.0}, Complex{0.5, 0.0}, Complex{1.5, 0.0}, z * z});
  CHECK(std::abs(lhs2 - atanh_c(z) / z) < 1e-13);
}

TEST_CASE("hypergeometric rejects bad parameters") {
  CHECK_THROWS_AS(
      hyp2f1({Complex{1.0, 0.0}, Complex{1.0, 0.0}, Complex{-2.0, 0.0}, Complex{0.1, 0.0}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      hyp2f1({Complex{1.0, 0.0}, Complex{1.0, 0.0}, Complex{2.0, 0.0}, Complex{1.2, 0.0}}),
      std::invalid_argument);
}

TEST_CASE("pochhammer") {
  CHECK(std::abs(pochhammer(Complex{2.0, 0.0}, 3) - Complex{24.0, 0.0}) < 1e-14);
  CHECK(std::abs(pochhammer(Complex{0.5, 0.0}, 2) - Complex{0.75, 0.0}) < 1e-14);
  CHECK(std::abs(pochhammer(Complex{1.5, -0.5}, 0) - Complex{1.0, 0.0}) < 1e-14);
}

TEST_CASE("principal branches and their cuts") {
  const Complex z{0.4, 0.3};
  CHECK(std::abs(log_c(z) - std::log(z)) < 1e-15);
  CHECK(std::abs(atanh_c(Complex{0.5, 0.0}) - Complex{std::atanh(0.5), 0.0}) < 1e-14);
  CHECK(std::abs(atan_c(Complex{0.5, 0.0}) - Complex{std::atan(0.5), 0.0}) < 1e-14);

  CHECK_THROWS_AS(log_c(Complex{-0.5, 0.0}), BranchCutHit);
  CHECK_THROWS_AS(atanh_c(Complex{1.2, 0.0}), BranchCutHit);
  CHECK_THROWS_AS(atanh_c(Complex{-1.0, 0.0}), BranchCutHit);
  CHECK_THROWS_AS(atan_c(Complex{0.0, 1.5}), BranchCutHit);

  // Just off the cut is fine.
  CHECK_NOTHROW(atanh_c(Complex{1.2, 1e-10}));
  CHECK_NOTHROW(log_c(Complex{-0.5, 1e-10}));
}

TEST_CASE("sigma quadruple") {
  CHECK_THROWS_AS(sigma_values(2.0, Complex{0.1, 0.1}), EndpointParameter);
  CHECK_THROWS_AS(sigma_values(-2.0, Complex{0.1, 0.1}), EndpointParameter);

  // sigma3 sigma4 = -i (4 - c^2)^{3/2} for c inside (-2, 2).
  for (const double c : {-1.5, -0.3, 0.0, 0.8, 1.9}) {
    const SigmaValues s = sigma_values(c, Complex{0.2, 0.4});
    const double mag = std::pow(4.0 - c * c, 1.5);
    CHECK(std::abs(s.sigma3 * s.sigma4 - Complex{0.0, -mag}) < 1e-12 * (1.0 + mag));
  }
}
