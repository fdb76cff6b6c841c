#include "shearlift/shear.hpp"

#include <cmath>
#include <memory>
#include <numbers>

namespace shearlift {

namespace {

constexpr double kResonanceEps = 1e-12;
constexpr double kNearResonanceEps = 1e-6;
constexpr double kPoleCollisionEps = 1e-9;

Complex pow_int(Complex z, int n) {
  Complex out{1.0, 0.0};
  for (int i = 0; i < n; ++i) out *= z;
  return out;
}

}  // namespace

std::vector<Complex> shear_integrand_poles(const ShearSpec& spec) {
  std::vector<Complex> poles;
  if (spec.family.is_fc()) {
    const double c = spec.family.fc().c;
    const double gamma = std::acos(std::clamp(-c / 2.0, -1.0, 1.0));
    poles.push_back(std::polar(1.0, gamma));
    poles.push_back(std::polar(1.0, -gamma));
  }
  if (spec.dilatation.is_mobius()) {
    poles.push_back(Complex{1.0, 0.0});   // 1 - omega_a vanishes at z^2 = 1
    poles.push_back(Complex{-1.0, 0.0});
  } else {
    const int n = spec.dilatation.power().n;
    for (int k = 0; k < n; ++k) {
      poles.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / n));
    }
  }
  return poles;
}

namespace {

Complex h_prime(const ShearSpec& spec, Complex zeta) {
  const DiskPoint p{zeta, 0.9999999};
  return eval_F_prime(spec.family, p) / (1.0 - eval_omega(spec.dilatation, p));
}

/// Common logarithmic partial-fraction sum over a root family
/// (roots of 1 - sign*zeta^n), excluding an optional resonant index.
Complex partial_fraction_sum(std::span<const Complex> roots, int n, Complex eta,
                             Complex z, std::optional<int> skip) {
  Complex total{0.0, 0.0};
  for (int k = 0; k < static_cast<int>(roots.size()); ++k) {
    if (skip && *skip == k) continue;
    const Complex rk = roots[k];
    const Complex d = eta - rk;
    const Complex term = (1.0 / d) * (1.0 / (eta - z) - 1.0 / eta) -
                         (1.0 / (d * d)) * (std::log(1.0 - z / eta) - std::log(1.0 - z / rk));
    total += rk * term;
  }
  return -total / static_cast<double>(n);
}

std::optional<int> matching_root(std::span<const Complex> roots, Complex pole, double eps) {
  for (int k = 0; k < static_cast<int>(roots.size()); ++k) {
    if (std::abs(roots[k] - pole) < eps) return k;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Complex> integral_I_root_family(std::span<const Complex> roots, int n,
                                              Complex pole, Complex z) {
  const auto resonant = matching_root(roots, pole, kResonanceEps);
  if (!resonant) {
    if (matching_root(roots, pole, kNearResonanceEps)) return std::nullopt;
    return partial_fraction_sum(roots, n, pole, z, std::nullopt);
  }
  const Complex rm = roots[*resonant];
  Complex out = partial_fraction_sum(roots, n, rm, z, resonant);
  out += rm / (2.0 * n) * (1.0 / ((z - rm) * (z - rm)) - 1.0 / (rm * rm));
  return out;
}

ShearSpec::ShearSpec(ConformalFamily f, Dilatation d)
    : family(std::move(f)), dilatation(std::move(d)) {
  if (family.is_fn()) {
    if (!dilatation.is_power() || dilatation.power().n != family.fn().n) {
      throw std::invalid_argument(
          "ShearSpec: the epicycloid family F_n is only sheared with its own power z^n");
    }
  }
}

bool ShearSpec::is_degenerate() const {
  return family.is_fc() && dilatation.is_mobius() && family.fc().c == 2.0 &&
         dilatation.mobius().a == 1.0;
}

HarmonicShear shear_numeric(const ShearSpec& spec, const QuadratureConfig& cfg) {
  cfg.validate();
  const auto poles = shear_integrand_poles(spec);
  auto h = [spec, cfg, poles](const DiskPoint& p) {
    return integrate_path([&spec](Complex zeta) { return h_prime(spec, zeta); }, p.z, cfg,
                          poles);
  };
  auto g = [spec, cfg, poles](const DiskPoint& p) {
    return integrate_path(
        [&spec](Complex zeta) {
          const DiskPoint q{zeta, 0.9999999};
          return eval_omega(spec.dilatation, q) * h_prime(spec, zeta);
        },
        p.z, cfg, poles);
  };
  return HarmonicShear{std::move(h), std::move(g), spec, ShearProvenance::quadrature};
}

Complex closed_h_ca(double c, double a, const DiskPoint& p) {
  const SigmaValues s = sigma_values(c, p.z);
  const Complex s1 = s.sigma1, s2 = s.sigma2, s34 = s.sigma3 * s.sigma4;
  const Complex z = p.z, z2 = z * z;
  const double c2 = c * c, c3 = c2 * c, c4 = c3 * c;
  const Complex pnum =
      16.0 * s2 + 16.0 * s1 - 4.0 * c2 * s2 + 16.0 * z2 * s2 - 4.0 * c2 * s1 +
      16.0 * z2 * s1 + 2.0 * z * s34 - 4.0 * c2 * z2 * s2 + 2.0 * a * c3 * s1 -
      4.0 * c3 * z * s1 - 8.0 * a * c * s2 + 16.0 * c * z * s2 - 4.0 * c2 * z2 * s1 +
      2.0 * a * c3 * s2 - 4.0 * c3 * z * s2 - 8.0 * a * c * s1 + 16.0 * c * z * s1 +
      2.0 * a * c3 * z2 * s1 - 8.0 * a * c * z2 * s2 - 8.0 * a * c2 * z * s2 +
      2.0 * a * c4 * z * s2 + 2.0 * a * c3 * z2 * s2 - 8.0 * a * c * z2 * s1 -
      8.0 * a * c2 * z * s1 + 2.0 * a * c4 * z * s1 + 2.0 * a * z2 * s34 -
      c * z2 * s34 - c2 * z * s34 + a * c * z * s34;
  const Complex q = (c2 - 4.0) * s34 * (1.0 + c * z + z2);
  return -pnum / q;
}

Complex closed_g_ca(double c, double a, const DiskPoint& p) {
  const SigmaValues s = sigma_values(c, p.z);
  const Complex s1 = s.sigma1, s2 = s.sigma2, s34 = s.sigma3 * s.sigma4;
  const Complex z = p.z, z2 = z * z;
  const double c2 = c * c, c3 = c2 * c, c4 = c3 * c;
  const Complex rnum =
      16.0 * s2 + 16.0 * s1 - 4.0 * c2 * s2 + 16.0 * z2 * s2 - 4.0 * c2 * s1 +
      16.0 * z2 * s1 - 2.0 * z * s34 - 4.0 * c2 * z2 * s2 + 2.0 * a * c3 * s1 -
      4.0 * c3 * z * s1 - 8.0 * a * c * s2 + 16.0 * c * z * s2 - 4.0 * c2 * z2 * s1 +
      2.0 * a * c3 * s2 - 4.0 * c3 * z * s2 - 8.0 * a * c * s1 + 16.0 * c * z * s1 +
      2.0 * a * c3 * z2 * s1 - 8.0 * a * c * z2 * s2 - 8.0 * a * c2 * z * s2 +
      2.0 * a * c4 * z * s2 + 2.0 * a * c3 * z2 * s2 - 8.0 * a * c * z2 * s1 -
      8.0 * a * c2 * z * s1 + 2.0 * a * c4 * z * s1 + 2.0 * a * z2 * s34 -
      c * z2 * s34 + a * c * z * s34;
  const Complex q = (c2 - 4.0) * s34 * (1.0 + c * z + z2);
  return -rnum / q;
}

Complex special_h(double c, double a, Complex z) {
  if (c == -2.0) {
    const Complex d = z - 1.0;
    return -(6.0 * z + 3.0 * a * z * z - a * z * z * z - 6.0 * z * z + 2.0 * z * z * z) /
           (6.0 * d * d * d);
  }
  const Complex w = 1.0 + z;
  return (1.0 - a) / 3.0 * (1.0 - 1.0 / (w * w * w)) + a / 2.0 * (1.0 - 1.0 / (w * w));
}

Complex special_g(double c, double a, Complex z) {
  if (c == -2.0) {
    const Complex d = z - 1.0;
    return -(3.0 * a * z * z - a * z * z * z + 2.0 * z * z * z) / (6.0 * d * d * d);
  }
  const Complex w = 1.0 + z;
  return special_h(c, a, z) - z / (w * w);
}

SpecialShearValue closed_f_special(double c, double a, const DiskPoint& p) {
  if (c != -2.0 && c != 2.0) {
    throw std::invalid_argument("closed_f_special: requires c = -2 or c = +2");
  }
  if (std::abs(a) > 1.0) {
    throw std::invalid_argument("closed_f_special: requires a in [-1, 1]");
  }
  const Complex z = p.z;
  double u, v;
  if (c == -2.0) {
    const Complex d = z - 1.0;
    u = (a / 3.0 - (z * z + (a - 1.0) * z - a / 3.0 + 2.0 / 3.0) / (d * d * d) - 2.0 / 3.0)
            .real();
    const Complex ratio = (1.0 + z) / (1.0 - z);
    v = (ratio * ratio - 1.0).imag() / 4.0;
  } else {
    const Complex d = z + 1.0;
    u = (a / 3.0 - (z * z + (a + 1.0) * z + a / 3.0 + 2.0 / 3.0) / (d * d * d) + 2.0 / 3.0)
            .real();
    v = (z / (d * d)).imag();
  }
  return SpecialShearValue{u, v, c == 2.0 && a == 1.0};
}

Complex closed_h_n(int n, const DiskPoint& p) {
  if (n < 2) throw std::invalid_argument("closed_h_n: requires n >= 2");
  const Complex zn = pow_int(p.z, n);
  const double inv_n = 1.0 / n;
  const Complex series = p.z * hyp2f1({Complex{1.0, 0.0}, Complex{inv_n, 0.0},
                                       Complex{1.0 + inv_n, 0.0}, zn});
  // Re(1 - z^n) > 0 on the disk, so the principal log is continuous and
  // vanishes at 0 (keeping h_n(0) = 0 with no added constant).
  return series + std::log(1.0 - zn) / static_cast<double>(n * n);
}

Complex closed_g_n(int n, const DiskPoint& p) {
  const Complex zn = pow_int(p.z, n);
  return closed_h_n(n, p) - p.z + zn / static_cast<double>(n * n);
}

PartialFractionContext::PartialFractionContext(int n_, double gamma_) : n(n_), gamma(gamma_) {
  if (n < 1) throw std::invalid_argument("PartialFractionContext: requires n >= 1");
  if (!(gamma > 0.0) || !(gamma < std::numbers::pi)) {
    throw std::invalid_argument("PartialFractionContext: requires gamma in (0, pi)");
  }
  roots_unity.reserve(n);
  roots_neg.reserve(n);
  for (int k = 0; k < n; ++k) {
    roots_unity.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / n));
    roots_neg.push_back(std::polar(1.0, (2.0 * k + 1.0) * std::numbers::pi / n));
  }
  eta = std::polar(1.0, gamma);
  rho = eta;
  m_index = matching_root(roots_unity, eta, kResonanceEps);
  s_index = matching_root(roots_neg, rho, kResonanceEps);
}

Complex integral_I_eta(const PartialFractionContext& ctx, Complex pole, const DiskPoint& p) {
  if (matching_root(ctx.roots_unity, pole, kPoleCollisionEps)) {
    throw PoleCollision("integral_I_eta: pole coincides with a root of unity");
  }
  return partial_fraction_sum(ctx.roots_unity, ctx.n, pole, p.z, std::nullopt);
}

Complex integral_I_3m(const PartialFractionContext& ctx, int m, const DiskPoint& p) {
  if (m < 0 || m >= ctx.n) {
    throw std::invalid_argument("integral_I_3m: index m must satisfy 0 <= m < n");
  }
  const Complex rm = ctx.roots_unity[m];
  Complex out = partial_fraction_sum(ctx.roots_unity, ctx.n, rm, p.z, m);
  const Complex d = p.z - rm;
  out += rm / (2.0 * ctx.n) * (1.0 / (d * d) - 1.0 / (rm * rm));
  return out;
}

Complex assemble_h_gamma(const PartialFractionContext& ctx, const DiskPoint& p) {
  const Complex eta = ctx.eta;
  const Complex etab = std::conj(eta);
  const auto I3 = integral_I_root_family(ctx.roots_unity, ctx.n, eta, p.z);
  const auto I2 = integral_I_root_family(ctx.roots_unity, ctx.n, etab, p.z);
  if (!I2 || !I3) {
    // Near (but not at) a resonance the expansion cancels like 1/(gamma -
    // 2 pi m/n)^2; integrate h' directly instead.
    const double c = ctx.c();
    const ConformalFamily family{Fc{c}};
    const int n = ctx.n;
    QuadratureConfig cfg;
    return integrate_path(
        [&family, n](Complex zeta) {
          const DiskPoint q{zeta, 0.9999999};
          return eval_F_prime(family, q) / (1.0 - pow_int(zeta, n));
        },
        p.z, cfg);
  }
  const Complex i{0.0, 1.0};
  return -i / (2.0 * std::sin(ctx.gamma)) * (etab * (*I2) - eta * (*I3));
}

HarmonicShear shear_closed(const ShearSpec& spec) {
  if (spec.family.is_fn()) {
    const int n = spec.family.fn().n;
    auto h = [n](const DiskPoint& p) { return closed_h_n(n, p); };
    auto g = [n](const DiskPoint& p) { return closed_g_n(n, p); };
    return HarmonicShear{std::move(h), std::move(g), spec, ShearProvenance::closed_form};
  }
  const double c = spec.family.fc().c;
  if (spec.dilatation.is_mobius()) {
    const double a = spec.dilatation.mobius().a;
    if (std::abs(c) == 2.0) {
      auto h = [c, a](const DiskPoint& p) { return special_h(c, a, p.z); };
      auto g = [c, a](const DiskPoint& p) { return special_g(c, a, p.z); };
      return HarmonicShear{std::move(h), std::move(g), spec, ShearProvenance::closed_form};
    }
    auto h = [c, a](const DiskPoint& p) { return closed_h_ca(c, a, p); };
    auto g = [c, a](const DiskPoint& p) { return closed_g_ca(c, a, p); };
    return HarmonicShear{std::move(h), std::move(g), spec, ShearProvenance::closed_form};
  }
  if (std::abs(c) == 2.0) {
    throw EndpointParameter(
        "shear_closed: the gamma machinery requires c strictly inside (-2, 2)");
  }
  const double gamma = std::acos(-c / 2.0);
  const int n = spec.dilatation.power().n;
  auto ctx = std::make_shared<PartialFractionContext>(n, gamma);
  const ConformalFamily family = spec.family;
  auto h = [ctx](const DiskPoint& p) { return assemble_h_gamma(*ctx, p); };
  auto g = [ctx, family](const DiskPoint& p) {
    return assemble_h_gamma(*ctx, p) - eval_F(family, p);
  };
  return HarmonicShear{std::move(h), std::move(g), spec, ShearProvenance::closed_form};
}

}  // namespace shearlift
