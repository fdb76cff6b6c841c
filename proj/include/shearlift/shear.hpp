#pragma once

#include <functional>
#include <vector>

#include "shearlift/families.hpp"
#include "shearlift/quadrature.hpp"
#include "shearlift/special.hpp"
#include "shearlift/types.hpp"

namespace shearlift {

/// One shear problem: a conformal family plus a dilatation.  Only the
/// treated pairings are admitted: (Fc, MobiusProduct), (Fc, Power), and
/// (Fn n, Power n) — the epicycloid family is always sheared with its own
/// power.
struct ShearSpec {
  ConformalFamily family;
  Dilatation dilatation;

  ShearSpec(ConformalFamily f, Dilatation d);

  bool is_degenerate() const;  // (c, a) = (2, 1): image collapses
};

enum class ShearProvenance { closed_form, quadrature };

/// f = h + conj(g), normalized h(0) = g(0) = 0, h'(0) = 1, g'(0) = 0.
struct HarmonicShear {
  std::function<Complex(const DiskPoint&)> h;
  std::function<Complex(const DiskPoint&)> g;
  ShearSpec spec;
  ShearProvenance provenance;

  Complex f(const DiskPoint& p) const { return h(p) + std::conj(g(p)); }
};

/// h(z) = int_0^z F'/(1-omega), g(z) = int_0^z omega F'/(1-omega) by
/// adaptive contour quadrature along the configured path.  All integrand
/// poles lie on |z| = 1, so straight paths inside the disk are safe; the
/// path guard still checks them.
HarmonicShear shear_numeric(const ShearSpec& spec, const QuadratureConfig& cfg);

/// Closed forms for the shear of F_c with the Mobius-product dilatation,
/// valid for c strictly inside (-2, 2); rational-sigma expressions.
Complex closed_h_ca(double c, double a, const DiskPoint& p);
Complex closed_g_ca(double c, double a, const DiskPoint& p);

/// Planar image (u, v) of the boundary-case shears c = -2 and c = +2.
/// The pair (c, a) = (2, 1) is degenerate: the disk image collapses onto
/// the point 1/2; the evaluation stays well-defined and `degenerate` is
/// flagged on the result instead of raising.
struct SpecialShearValue {
  double u;
  double v;
  bool degenerate;
};
SpecialShearValue closed_f_special(double c, double a, const DiskPoint& p);

/// Analytic parts h, g of the c = +-2 shears (used to cross-check the
/// (u, v) forms and by the slit-tip and collapse checks).
Complex special_h(double c, double a, Complex z);
Complex special_g(double c, double a, Complex z);

/// Closed forms for the shear of F_n with dilatation z^n:
/// h_n = z 2F1(1, 1/n; 1+1/n; z^n) + log(1 - z^n)/n^2 and
/// g_n = h_n - z + z^n/n^2, both vanishing at 0 on the principal branch
/// (Re(1 - z^n) > 0 on the disk, so the log never crosses its cut).
Complex closed_h_n(int n, const DiskPoint& p);
Complex closed_g_n(int n, const DiskPoint& p);

/// Partial-fraction machinery for the shear of F_c with dilatation z^n,
/// written with c = -2 cos(gamma), gamma in (0, pi).  roots_unity are the
/// zeros z_k = e^{2 pi i k/n} of 1 - zeta^n; roots_neg the zeros
/// w_l = e^{(2l+1) pi i/n} of 1 + zeta^n.  m_index/s_index record which
/// root (if any) coincides with e^{+i gamma} in each family.
struct PartialFractionContext {
  int n;
  double gamma;
  std::vector<Complex> roots_unity;
  std::vector<Complex> roots_neg;
  Complex eta;  // e^{+i gamma}
  Complex rho;  // e^{+i gamma} (same point; pole of the 1 + zeta^n family)
  std::optional<int> m_index;  // eta == roots_unity[m_index]
  std::optional<int> s_index;  // rho == roots_neg[s_index]

  PartialFractionContext(int n, double gamma);

  double c() const { return -2.0 * std::cos(gamma); }
};

/// I(eta) = int_0^z dzeta/((zeta-eta)^2 (1 - zeta^n)) in closed
/// logarithmic form.  The pole must not coincide with a root of unity
/// (PoleCollision); use integral_I_3m for the resonant case.
Complex integral_I_eta(const PartialFractionContext& ctx, Complex pole, const DiskPoint& p);

/// Resonant integral with pole at the m-th root of unity itself:
/// int_0^z dzeta/((zeta-z_m)^2 (1 - zeta^n)); the double pole merges into
/// a cubic one, adding (z_m/2n)[1/(z-z_m)^2 - 1/z_m^2] to the remaining sum.
Complex integral_I_3m(const PartialFractionContext& ctx, int m, const DiskPoint& p);

/// I(pole) over an arbitrary root family (zeros of 1 -+ zeta^n; both
/// families share the residue structure).  Dispatches to the resonant
/// cubic form when the pole coincides with a family root to within 1e-12;
/// returns an empty optional in the near-resonance band (1e-12, 1e-6)
/// where the generic expansion cancels catastrophically and the caller
/// must fall back to quadrature.
std::optional<Complex> integral_I_root_family(std::span<const Complex> roots, int n,
                                              Complex pole, Complex z);

/// Unit-circle poles of F'/(1 - omega) for a spec (used as path guards).
std::vector<Complex> shear_integrand_poles(const ShearSpec& spec);

/// h for the shear of F_c (c = -2 cos gamma) with dilatation z^n:
/// h = -i/(2 sin gamma) (e^{-i gamma} I2 - e^{i gamma} I3) where I2, I3
/// carry poles e^{-i gamma}, e^{+i gamma} over the 1 - zeta^n family.
/// gamma within 1e-12 of a resonance 2 pi m/n dispatches to the resonant
/// integrals; within (1e-12, 1e-6) the expansion cancels catastrophically
/// and the value falls back to quadrature.
Complex assemble_h_gamma(const PartialFractionContext& ctx, const DiskPoint& p);

/// Factory: the best closed-form shear for the configuration (sigma forms, special
/// c = +-2 forms, hypergeometric forms, or the gamma machinery).
HarmonicShear shear_closed(const ShearSpec& spec);

}  // namespace shearlift
