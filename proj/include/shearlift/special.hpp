#pragma once

#include "shearlift/types.hpp"

namespace shearlift {

struct Hyp2F1Params {
  Complex a;
  Complex b;
  Complex c;
  Complex z;
};

/// sigma helpers for the closed-form shears of F_c: sigma3 = (c-2)^{3/2},
/// sigma4 = (c+2)^{3/2} (principal powers, non-real for c in (-2,2)),
/// sigma1 = atanh((c^2-4)(c+2z)/(sigma3 sigma4)),
/// sigma2 = atanh((4c-c^3)/(sigma3 sigma4)).
struct SigmaValues {
  Complex sigma1;
  Complex sigma2;
  Complex sigma3;
  Complex sigma4;
};

/// Gauss series sum_{k>=0} (a)_k (b)_k / ((c)_k k!) z^k for |z| < 1.
/// Stops when the geometric tail bound |term|*|z|/(1-|z|) falls below
/// 1e-14 relative to the accumulated sum; throws NoConvergence after 1e5
/// terms.  Deterministic fixed-order forward accumulation.
Complex hyp2f1(const Hyp2F1Params& p);

/// Rising factorial (x)_k = x(x+1)...(x+k-1).
Complex pochhammer(Complex x, int k);

/// Principal-branch complex log/atan/atanh.  Each throws BranchCutHit when
/// the argument lies within 1e-14 of the function's real branch cut
/// (log: (-inf, 0]; atanh: (-inf,-1] and [1,inf); atan: the imaginary rays
/// |Im| >= 1 on the axis).
Complex log_c(Complex z);
Complex atan_c(Complex z);
Complex atanh_c(Complex z);

/// The sigma quadruple; c must lie strictly inside (-2, 2), otherwise
/// EndpointParameter (the c = +-2 shears have their own closed forms).
SigmaValues sigma_values(double c, Complex z);

}  // namespace shearlift
