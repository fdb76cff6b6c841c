#include "shearlift/lift.hpp"

#include <cmath>
#include <memory>

namespace shearlift {

namespace {

Complex pow_int(Complex z, int n) {
  Complex out{1.0, 0.0};
  for (int i = 0; i < n; ++i) out *= z;
  return out;
}

}  // namespace

MinimalGraphPoint lift_numeric(const HarmonicShear& shear, const DiskPoint& p,
                               const QuadratureConfig& cfg) {
  cfg.validate();
  const auto q = sqrt_dilatation(shear.spec.dilatation);
  if (!q) {
    throw NotASquare(
        "lift_numeric: the dilatation has no analytic square root on the disk "
        "(lifting requires an even power z^{2m} or the a = 0 Mobius product)");
  }
  const Complex hv = shear.h(p);
  const Complex gv = shear.g(p);
  const ShearSpec& spec = shear.spec;
  const auto poles = shear_integrand_poles(spec);
  const Complex w = integrate_path(
      [&spec, &q](Complex zeta) {
        const DiskPoint inner{zeta, 0.9999999};
        return (*q)(zeta)*eval_F_prime(spec.family, inner) /
               (1.0 - eval_omega(spec.dilatation, inner));
      },
      p.z, cfg, poles);
  return MinimalGraphPoint{(hv + gv).real(), (hv - gv).imag(), 2.0 * w.imag()};
}

double x3_closed_fc(double c, const DiskPoint& p) {
  if (!(std::abs(c) < 2.0)) {
    throw EndpointParameter("x3_closed_fc: requires c strictly inside (-2, 2)");
  }
  const Complex z = p.z;
  const double c2m4 = c * c - 4.0;
  const Complex s1 =
      std::pow(Complex{c - 2.0, 0.0}, 1.5) * std::pow(Complex{c + 2.0, 0.0}, 1.5);
  const Complex w = (2.0 / c2m4 + c * z / c2m4) / (z * z + c * z + 1.0) - 2.0 / c2m4 +
                    2.0 * c * atanh_c(c * c2m4 / s1) / s1 -
                    2.0 * c * atanh_c(c2m4 * (c + 2.0 * z) / s1) / s1;
  return 2.0 * w.imag();
}

MinimalGraphPoint x3_closed_case(double c, const DiskPoint& p) {
  const Complex z = p.z;
  if (c == -2.0) {
    const Complex d = z - 1.0;
    if (std::abs(d) < 1e-12) throw PoleAtBoundary("x3_closed_case: z = 1 with c = -2");
    const Complex d3 = d * d * d;
    return MinimalGraphPoint{
        (-(z * z - z + 2.0 / 3.0) / d3 - 2.0 / 3.0).real(),
        (z / (d * d)).imag(),
        2.0 * (1.0 / 6.0 - (3.0 * z - 1.0) / (6.0 * d3)).imag(),
    };
  }
  if (c == 0.0) {
    const Complex w = z * z + 1.0;
    return MinimalGraphPoint{
        atan_c(z).real(),
        (z / w).imag(),
        2.0 * (0.5 - 0.5 / w).imag(),
    };
  }
  if (c == 2.0) {
    const Complex d = z + 1.0;
    if (std::abs(d) < 1e-12) throw PoleAtBoundary("x3_closed_case: z = -1 with c = +2");
    const Complex d3 = d * d * d;
    return MinimalGraphPoint{
        (2.0 / 3.0 - (z * z + z + 2.0 / 3.0) / d3).real(),
        (z / (d * d)).imag(),
        2.0 * (1.0 / 6.0 - (z / 2.0 + 1.0 / 6.0) / d3).imag(),
    };
  }
  throw std::invalid_argument("x3_closed_case: c must be one of -2, 0, +2");
}

double x3_closed_fn(int m, const DiskPoint& p) {
  if (m < 1) throw std::invalid_argument("x3_closed_fn: requires m >= 1");
  const Complex z = p.z;
  const Complex zm = pow_int(z, m);
  const double inv_m = 1.0 / m;
  const Complex cm{1.0 + inv_m, 0.0};
  const Complex one{1.0, 0.0};
  const Complex bm{inv_m, 0.0};
  const Complex A = z * hyp2f1({one, bm, cm, zm});
  const Complex B = z * hyp2f1({one, bm, cm, -zm});
  const Complex w = (A - B) / 2.0 - (atanh_c(zm) - zm) / (2.0 * m * m);
  return 2.0 * w.imag();
}

double assemble_x3_gamma(const PartialFractionContext& ctx, const DiskPoint& p) {
  const Complex eta = ctx.eta;
  const Complex etab = std::conj(eta);
  const auto I2 = integral_I_root_family(ctx.roots_unity, ctx.n, etab, p.z);
  const auto I3 = integral_I_root_family(ctx.roots_unity, ctx.n, eta, p.z);
  const auto I4 = integral_I_root_family(ctx.roots_neg, ctx.n, etab, p.z);
  const auto I5 = integral_I_root_family(ctx.roots_neg, ctx.n, eta, p.z);
  Complex w;
  if (!I2 || !I3 || !I4 || !I5) {
    const double c = ctx.c();
    const ConformalFamily family{Fc{c}};
    const int n = ctx.n;
    QuadratureConfig cfg;
    w = integrate_path(
        [&family, n](Complex zeta) {
          const DiskPoint inner{zeta, 0.9999999};
          return pow_int(zeta, n) * eval_F_prime(family, inner) /
                 (1.0 - pow_int(zeta, 2 * n));
        },
        p.z, cfg);
  } else {
    const Complex i{0.0, 1.0};
    w = -i / (2.0 * std::sin(ctx.gamma)) *
        (etab * (*I2 - *I4) - eta * (*I3 - *I5)) / 2.0;
  }
  return 2.0 * w.imag();
}

std::function<MinimalGraphPoint(Complex)> graph_evaluator(const ShearSpec& spec,
                                                          const QuadratureConfig& cfg) {
  if (!sqrt_dilatation(spec.dilatation)) {
    throw NotASquare(
        "graph_evaluator: the dilatation has no analytic square root on the disk");
  }
  constexpr double kLooseBound = 0.9999999;
  if (spec.family.is_fn()) {
    const int n = spec.family.fn().n;
    const int m = n / 2;
    return [n, m](Complex z) {
      const DiskPoint p{z, kLooseBound};
      const Complex hv = closed_h_n(n, p);
      const Complex gv = closed_g_n(n, p);
      return MinimalGraphPoint{(hv + gv).real(), (hv - gv).imag(), x3_closed_fn(m, p)};
    };
  }
  const double c = spec.family.fc().c;
  if (spec.dilatation.is_mobius()) {
    if (c == -2.0 || c == 0.0 || c == 2.0) {
      return [c](Complex z) { return x3_closed_case(c, DiskPoint{z, kLooseBound}); };
    }
    return [c](Complex z) {
      const DiskPoint p{z, kLooseBound};
      const Complex hv = closed_h_ca(c, 0.0, p);
      const Complex gv = closed_g_ca(c, 0.0, p);
      return MinimalGraphPoint{(hv + gv).real(), (hv - gv).imag(), x3_closed_fc(c, p)};
    };
  }
  if (std::abs(c) < 2.0) {
    const double gamma = std::acos(-c / 2.0);
    const int full = spec.dilatation.power().n;
    auto ctx_full = std::make_shared<PartialFractionContext>(full, gamma);
    auto ctx_half = std::make_shared<PartialFractionContext>(full / 2, gamma);
    const ConformalFamily family = spec.family;
    return [ctx_full, ctx_half, family](Complex z) {
      const DiskPoint p{z, kLooseBound};
      const Complex hv = assemble_h_gamma(*ctx_full, p);
      const Complex gv = hv - eval_F(family, p);
      return MinimalGraphPoint{(hv + gv).real(), (hv - gv).imag(),
                               assemble_x3_gamma(*ctx_half, p)};
    };
  }
  // c = +-2 with an even power has no closed gamma machinery; lift by
  // quadrature on the numeric shear.
  auto shear = std::make_shared<HarmonicShear>(shear_numeric(spec, cfg));
  return [shear, cfg](Complex z) {
    return lift_numeric(*shear, DiskPoint{z, kLooseBound}, cfg);
  };
}

}  // namespace shearlift
