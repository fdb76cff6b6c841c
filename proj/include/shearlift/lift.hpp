#pragma once

#include "shearlift/shear.hpp"

namespace shearlift {

/// A point of the minimal graph over the sheared image:
/// x1 = Re(h + g), x2 = Im(h - g), x3 = 2 Im int_0^z q(zeta) h'(zeta) dzeta,
/// where q is the analytic square root of the dilatation.
struct MinimalGraphPoint {
  double x1;
  double x2;
  double x3;
};

/// Lift by quadrature: heights from the shear's own h, g evaluators, x3
/// by contour integration of q h'.  Throws NotASquare when the dilatation
/// admits no analytic square root (odd power, or Mobius product with
/// a != 0) — only even powers z^{2m} and the a = 0 product lift.
MinimalGraphPoint lift_numeric(const HarmonicShear& shear, const DiskPoint& p,
                               const QuadratureConfig& cfg);

/// Closed-form x3 for the shear of F_c with dilatation z^2 (the a = 0
/// Mobius product), valid for c strictly inside (-2, 2); EndpointParameter
/// at the boundary parameters, which have their own case forms.
double x3_closed_fc(double c, const DiskPoint& p);

/// Full closed-form graph point for the three landmark parameters of the
/// z^2 dilatation: c = -2, c = 0, and c = +2.  Any other c is rejected
/// with std::invalid_argument; evaluation at the boundary pole (z = 1 for
/// c = -2, z = -1 for c = +2) raises PoleAtBoundary.
MinimalGraphPoint x3_closed_case(double c, const DiskPoint& p);

/// Closed-form x3 for the epicycloid shear with even index n = 2m
/// (dilatation z^{2m}, square root z^m), via the hypergeometric
/// antiderivatives of 1/(1 -+ z^m) and atanh(z^m).
double x3_closed_fn(int m, const DiskPoint& p);

/// Closed-form x3 for the shear of F_c with dilatation z^{2n}: the same
/// partial-fraction machinery as the planar shear, run over both root
/// families (1 - zeta^n and 1 + zeta^n).  ctx.n is the HALF power n.
/// Resonances in either family dispatch to the cubic-corrected integrals;
/// the near-resonance band falls back to quadrature.
double assemble_x3_gamma(const PartialFractionContext& ctx, const DiskPoint& p);

/// The best whole-graph evaluator z -> (x1, x2, x3) for a liftable spec:
/// closed forms where they exist (landmark cases, sigma/hypergeometric
/// forms, gamma machinery), quadrature lifting otherwise.  NotASquare for
/// unliftable dilatations.
std::function<MinimalGraphPoint(Complex)> graph_evaluator(const ShearSpec& spec,
                                                          const QuadratureConfig& cfg);

}  // namespace shearlift
