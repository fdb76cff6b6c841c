#include <doctest.h>

#include <cmath>
#include <numbers>

#include "shearlift/shear.hpp"

using namespace shearlift;

namespace {

constexpr double kPi = std::numbers::pi;
const QuadratureConfig kCfg{};

Complex pow_i(Complex z, int n) {
  Complex r{1.0, 0.0};
  for (int k = 0; k < n; ++k) r *= z;
  return r;
}

}  // namespace

TEST_CASE("context roots and resonance detection") {
  const PartialFractionContext off{4, kPi / 3.0};
  REQUIRE(off.roots_unity.size() == 4);
  REQUIRE(off.roots_neg.size() == 4);
  CHECK(std::abs(off.roots_unity[0] - Complex{1.0, 0.0}) < 1e-14);
  CHECK(std::abs(off.roots_unity[1] - Complex{0.0, 1.0}) < 1e-14);
  CHECK(std::abs(off.roots_neg[0] - std::polar(1.0, kPi / 4.0)) < 1e-14);
  CHECK_FALSE(off.m_index.has_value());
  CHECK_FALSE(off.s_index.has_value());
  CHECK(off.c() == doctest::Approx(-2.0 * std::cos(kPi / 3.0)));

  const PartialFractionContext res{4, kPi / 2.0};
  REQUIRE(res.m_index.has_value());
  CHECK(*res.m_index == 1);  // e^{i pi/2} = i = second root of unity
  CHECK_FALSE(res.s_index.has_value());

  const PartialFractionContext neg_res{2, kPi / 2.0};
  CHECK_FALSE(neg_res.m_index.has_value());
  REQUIRE(neg_res.s_index.has_value());
  CHECK(*neg_res.s_index == 0);  // e^{i pi/2} = first root of -1 for n = 2

  CHECK_THROWS_AS(PartialFractionContext(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(PartialFractionContext(3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(PartialFractionContext(3, kPi), std::invalid_argument);
}

TEST_CASE("double-pole integral matches quadrature") {
  const PartialFractionContext ctx{3, 1.1};
  const Complex eta = std::polar(1.0, 1.1);
  const DiskPoint p{Complex{0.5, 0.3}};
  const Complex closed = integral_I_eta(ctx, eta, p);
  const Complex numeric = integrate_path(
      [&](Complex zeta) {
        return 1.0 / ((zeta - eta) * (zeta - eta) * (1.0 - pow_i(zeta, 3)));
      },
      p.z, kCfg);
  CHECK(std::abs(closed - numeric) < 1e-10);

  // Same machinery with the conjugate pole (the other integral in h).
  const Complex closed2 = integral_I_eta(ctx, std::conj(eta), p);
  const Complex numeric2 = integrate_path(
      [&](Complex zeta) {
        return 1.0 /
               ((zeta - std::conj(eta)) * (zeta - std::conj(eta)) * (1.0 - pow_i(zeta, 3)));
      },
      p.z, kCfg);
  CHECK(std::abs(closed2 - numeric2) < 1e-10);
}

TEST_CASE("double pole on a denominator root is rejected") {
  const PartialFractionContext ctx{3, 1.1};
  CHECK_THROWS_AS(integral_I_eta(ctx, Complex{1.0, 0.0}, DiskPoint{Complex{0.3, 0.1}}),
                  PoleCollision);
}

TEST_CASE("resonant cubic integral matches quadrature") {
  const PartialFractionContext ctx{4, kPi / 2.0};
  REQUIRE(ctx.m_index.has_value());
  const int m = *ctx.m_index;
  const Complex zm = ctx.roots_unity[static_cast<std::size_t>(m)];
  const DiskPoint p{Complex{0.4, 0.2}};
  const Complex closed = integral_I_3m(ctx, m, p);
  const Complex numeric = integrate_path(
      [&](Complex zeta) {
        return 1.0 / ((zeta - zm) * (zeta - zm) * (1.0 - pow_i(zeta, 4)));
      },
      p.z, kCfg);
  CHECK(std::abs(closed - numeric) < 1e-10);
}

TEST_CASE("family dispatcher covers generic, resonant and fallback bands") {
  const PartialFractionContext ctx{4, kPi / 2.0};
  const Complex z{0.3, 0.4};

  const auto generic =
      integral_I_root_family(ctx.roots_unity, 4, std::polar(1.0, 0.9), z);
  REQUIRE(generic.has_value());

  const auto resonant = integral_I_root_family(ctx.roots_unity, 4, Complex{0.0, 1.0}, z);
  REQUIRE(resonant.has_value());
  CHECK(std::abs(*resonant - integral_I_3m(ctx, 1, DiskPoint{z})) < 1e-13);

  const auto near = integral_I_root_family(ctx.roots_unity, 4,
                                           std::polar(1.0, kPi / 2.0 + 1e-9), z);
  CHECK_FALSE(near.has_value());
}

TEST_CASE("assembled h matches quadrature off resonance") {
  const PartialFractionContext ctx{3, std::acos(-0.3)};  // c = 0.6
  const ShearSpec spec{ConformalFamily{Fc{ctx.c()}}, Dilatation{Power{3}}};
  const HarmonicShear numeric = shear_numeric(spec, kCfg);
  for (const Complex z : {Complex{0.5, 0.3}, Complex{-0.6, 0.1}, Complex{0.05, -0.7}}) {
    const DiskPoint p{z};
    CHECK(std::abs(assemble_h_gamma(ctx, p) - numeric.h(p)) < 1e-9);
  }
}

TEST_CASE("assembled h matches quadrature at a resonance") {
  const PartialFractionContext ctx{3, 2.0 * kPi / 3.0};  // c = 1, pole on a cube root
  REQUIRE(ctx.m_index.has_value());
  const ShearSpec spec{ConformalFamily{Fc{1.0}}, Dilatation{Power{3}}};
  const HarmonicShear numeric = shear_numeric(spec, kCfg);
  for (const Complex z : {Complex{0.4, -0.25}, Complex{-0.3, 0.55}}) {
    const DiskPoint p{z};
    CHECK(std::abs(assemble_h_gamma(ctx, p) - numeric.h(p)) < 1e-9);
  }
}

TEST_CASE("near-resonance falls back to quadrature silently") {
  const double gamma = 2.0 * kPi / 3.0 + 1e-8;
  const PartialFractionContext ctx{3, gamma};
  CHECK_FALSE(ctx.m_index.has_value());
  const ShearSpec spec{ConformalFamily{Fc{ctx.c()}}, Dilatation{Power{3}}};
  const HarmonicShear numeric = shear_numeric(spec, kCfg);
  const DiskPoint p{Complex{0.45, 0.2}};
  CHECK(std::abs(assemble_h_gamma(ctx, p) - numeric.h(p)) < 1e-8);
}
