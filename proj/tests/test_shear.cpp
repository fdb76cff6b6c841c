#include <doctest.h>

#include "shearlift/shear.hpp"
#include "shearlift/verify.hpp"

using namespace shearlift;

namespace {
const QuadratureConfig kCfg{};
}

TEST_CASE("spec pairing rules") {
  CHECK_NOTHROW(ShearSpec(ConformalFamily{Fc{1.0}}, Dilatation{MobiusProduct{0.5}}));
  CHECK_NOTHROW(ShearSpec(ConformalFamily{Fc{1.0}}, Dilatation{Power{3}}));
  CHECK_NOTHROW(ShearSpec(ConformalFamily{Fn{3}}, Dilatation{Power{3}}));
  CHECK_THROWS_AS(ShearSpec(ConformalFamily{Fn{3}}, Dilatation{Power{2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ShearSpec(ConformalFamily{Fn{3}}, Dilatation{MobiusProduct{0.0}}),
                  std::invalid_argument);

  CHECK(ShearSpec(ConformalFamily{Fc{2.0}}, Dilatation{MobiusProduct{1.0}}).is_degenerate());
  CHECK_FALSE(
      ShearSpec(ConformalFamily{Fc{2.0}}, Dilatation{MobiusProduct{0.0}}).is_degenerate());
}

TEST_CASE("shear normalization at the origin") {
  const ShearSpec spec{ConformalFamily{Fc{0.7}}, Dilatation{MobiusProduct{-0.3}}};
  const HarmonicShear shear = shear_closed(spec);
  const DiskPoint origin{Complex{0.0, 0.0}};
  CHECK(std::abs(shear.h(origin)) < 1e-12);
  CHECK(std::abs(shear.g(origin)) < 1e-12);

  const double d = 1e-6;
  const Complex hp = (shear.h(DiskPoint{Complex{d, 0.0}}) - shear.h(DiskPoint{Complex{-d, 0.0}})) / (2.0 * d);
  const Complex gp = (shear.g(DiskPoint{Complex{d, 0.0}}) - shear.g(DiskPoint{Complex{-d, 0.0}})) / (2.0 * d);
  CHECK(std::abs(hp - 1.0) < 1e-8);
  CHECK(std::abs(gp) < 1e-8);
}

TEST_CASE("closed sigma forms match quadrature") {
  const auto points = seeded_disk_samples(50, 0.9, 7);
  for (const double c : {-1.5, 0.7}) {
    for (const double a : {-0.5, 0.5}) {
      const ShearSpec spec{ConformalFamily{Fc{c}}, Dilatation{MobiusProduct{a}}};
      const HarmonicShear numeric = shear_numeric(spec, kCfg);
      double worst = 0.0;
      for (const DiskPoint& p : points) {
        worst = std::max(worst, std::abs(closed_h_ca(c, a, p) - numeric.h(p)));
        worst = std::max(worst, std::abs(closed_g_ca(c, a, p) - numeric.g(p)));
      }
      CHECK(worst < 1e-9);
    }
  }
}

TEST_CASE("analytic parts differ by the conformal map") {
  // g = h - F follows from g' = omega h' and the normalization; for the
  // sigma forms it exercises the independent g polynomial.
  const auto points = seeded_disk_samples(25, 0.9, 11);
  const double c = -0.8, a = 0.6;
  const ConformalFamily family{Fc{c}};
  for (const DiskPoint& p : points) {
    CHECK(std::abs(closed_g_ca(c, a, p) - (closed_h_ca(c, a, p) - eval_F(family, p))) <
          1e-11);
  }
}

TEST_CASE("boundary-case shears") {
  const auto points = seeded_disk_samples(200, 0.9, 13);
  for (const double c : {-2.0, 2.0}) {
    for (const double a : {-1.0, 0.0, 1.0}) {
      const ConformalFamily family{Fc{c}};
      for (const DiskPoint& p : points) {
        const Complex h = special_h(c, a, p.z);
        const Complex g = special_g(c, a, p.z);
        CHECK(std::abs(h - g - eval_F(family, p)) < 1e-10);
        const auto uv = closed_f_special(c, a, p);
        CHECK(std::abs(Complex{uv.u, uv.v} - (h + std::conj(g))) < 1e-10);
      }
    }
  }
}

TEST_CASE("degenerate pair evaluates but is flagged") {
  const DiskPoint half{Complex{0.5, 0.0}};
  const auto uv = closed_f_special(2.0, 1.0, half);
  CHECK(uv.degenerate);
  // Pointwise the map is NOT constant: the collapse happens only in the
  // boundary limit.  At z = 1/2 the value is 1/3.
  CHECK(uv.u == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(uv.v == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(closed_f_special(2.0, 0.0, half).degenerate);
}

TEST_CASE("epicycloid shears match quadrature") {
  const auto points = seeded_disk_samples(40, 0.9, 17);
  for (const int n : {2, 3}) {
    const ShearSpec spec{ConformalFamily{Fn{n}}, Dilatation{Power{n}}};
    const HarmonicShear numeric = shear_numeric(spec, kCfg);
    double worst = 0.0;
    for (const DiskPoint& p : points) {
      worst = std::max(worst, std::abs(closed_h_n(n, p) - numeric.h(p)));
      worst = std::max(worst, std::abs(closed_g_n(n, p) - numeric.g(p)));
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("numeric shear path strategies agree") {
  const ShearSpec spec{ConformalFamily{Fc{1.2}}, Dilatation{MobiusProduct{0.4}}};
  QuadratureConfig two = kCfg;
  two.path_strategy = PathStrategy::two_segment;
  const HarmonicShear radial = shear_numeric(spec, kCfg);
  const HarmonicShear arc = shear_numeric(spec, two);
  const DiskPoint p{Complex{-0.35, 0.6}};
  CHECK(std::abs(radial.h(p) - arc.h(p)) < 1e-9);
  CHECK(std::abs(radial.g(p) - arc.g(p)) < 1e-9);
}

TEST_CASE("closed factory dispatches per spec") {
  CHECK(shear_closed({ConformalFamily{Fc{1.0}}, Dilatation{MobiusProduct{0.0}}}).provenance ==
        ShearProvenance::closed_form);
  CHECK(shear_closed({ConformalFamily{Fn{5}}, Dilatation{Power{5}}}).provenance ==
        ShearProvenance::closed_form);
  CHECK_THROWS_AS(shear_closed({ConformalFamily{Fc{2.0}}, Dilatation{Power{2}}}),
                  EndpointParameter);
}
