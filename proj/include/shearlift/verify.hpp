#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "shearlift/grid.hpp"
#include "shearlift/lift.hpp"

namespace shearlift {

/// One verification outcome.  Invariant: passed == (max_residual <= tolerance).
struct CheckResult {
  std::string name;
  double max_residual;
  int samples;
  double tolerance;
  bool passed;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;

  bool all_passed() const;
};

/// Reference parameterizations the lifted graphs are matched against.
/// Enneper (isothermal form): (Re(w + w^3/3), Im(w^3/3 - w), Im(w^2)).
/// Helicoid: (Re(w - 1/w), Im(w + 1/w), 2 Im log w), defined off the ray
/// (-inf, 0] where the principal log jumps.
enum class CanonicalSurface { enneper, helicoid };

MinimalGraphPoint canonical_eval(CanonicalSurface surface, Complex w);

/// Normalization steps: a Mobius substitution acting on the surface
/// parameter, and affine/axis operations acting on the ambient point.
/// Axis indices are 0-based.
struct MobiusStep {
  Complex a, b, c, d;  // w -> (a w + b)/(c w + d)
};
struct ScaleStep {
  double factor;
};
struct TranslateStep {
  double dx1, dx2, dx3;
};
struct SwapStep {
  int axis_i, axis_j;
};
struct ReflectStep {
  int axis;
};
using PipelineStep = std::variant<MobiusStep, ScaleStep, TranslateStep, SwapStep, ReflectStep>;

struct PipelineState {
  Complex w;
  MinimalGraphPoint x;
};

/// An ordered, invertible list of normalization steps; apply runs them in
/// order, inverse() reverses and inverts each step, and
/// apply(inverse().apply(s)) replays to the input within 1e-12.
struct NormalizationPipeline {
  std::vector<PipelineStep> steps;

  PipelineState apply(PipelineState state) const;
  NormalizationPipeline inverse() const;
};

/// The pinned pipeline carrying the landmark graph (F_c with dilatation
/// z^2) at c onto its canonical surface; PipelineMismatch for any c other
/// than -2, 0, +2.
NormalizationPipeline case_pipeline(double case_id);
CanonicalSurface case_target(double case_id);

/// Deterministic pseudo-random disk samples (fixed algorithm, fixed seed
/// => identical samples on every platform).
std::vector<DiskPoint> seeded_disk_samples(int count, double r_max, std::uint64_t seed);

/// min J = min |h'|^2 - |g'|^2 over the grid via finite-difference
/// derivatives of the analytic parts; records -min J as the residual, so
/// passing means J stays strictly positive.
CheckResult check_local_univalence(const HarmonicShear& shear, const DiskGrid& grid);

/// Heuristic convexity-in-the-horizontal-direction scan: the image of
/// |z| = r as a polygon must cross every sampled horizontal line at most
/// twice.
CheckResult check_chd(const HarmonicShear& shear, double r, int n_lines);

/// The same scan on a deliberately non-convex curve must report more than
/// two crossings, validating the detector.
CheckResult check_chd_negative_control();

/// Slit-tip estimate from near-boundary samples around the slit axis,
/// compared against -(2-a)/6 (c = -2) or (a+2)/6 (c = +2); the tolerance
/// scales with the boundary gap 1 - r.  DegenerateShear for (2, 1).
CheckResult check_slit_tip(double c, double a, double r = 0.999);

/// The degenerate (2, 1) shear: near-boundary samples must cluster at the
/// point 1/2 (small diameter and small offset).
CheckResult check_degenerate_collapse();

/// Boundary speed of F_n on |z| = 1: exactly n-1 local minima, at angles
/// 2 pi k/(n-1), each of depth 1 - 1/n.  Three entries: count, positions,
/// values.
std::vector<CheckResult> check_epicycloid_boundary(int n);

/// Discrete-curvature sign changes along the sheared epicycloid image at
/// r = 0.99: exactly 2(n+2), one pair per concave arc.
CheckResult check_concave_arcs(int n);

/// Runs a landmark graph through its normalization pipeline and measures
/// the euclidean distance to the canonical surface at the mapped
/// parameter; PipelineMismatch for unknown case ids.
CheckResult identify_surface(double case_id, const NormalizationPipeline& pipeline,
                             std::span<const DiskPoint> samples);

/// Finite-difference minimality certificate on a polar grid over
/// |z| <= r_max: scaled 5-point Laplacian residuals of the coordinate
/// functions, and the isothermal ratios |E-G|/(E+G) and |F|/(E+G) from
/// 4th-order first derivatives.
struct MinimalityCertificate {
  CheckResult laplacian;
  CheckResult isothermal;
};
MinimalityCertificate check_minimality(const std::function<MinimalGraphPoint(Complex)>& surface,
                                       int n_radii = 16, int n_angles = 48,
                                       double r_max = 0.8, double step = 1e-3);

/// Every check that applies to the configuration (univalence + convexity, or the
/// collapse certificate for the degenerate pair; slit tips at c = +-2;
/// epicycloid boundary geometry for F_n; minimality when the dilatation
/// lifts), merged deterministically by check name.
VerificationReport run_verify_suite(const ShearSpec& spec, std::uint64_t seed);

/// Deterministic JSON rendering (fixed key order, no timestamps):
/// identical spec + seed give byte-identical documents.
std::string report_to_json(const VerificationReport& report, const ShearSpec& spec,
                           std::uint64_t seed);

}  // namespace shearlift
