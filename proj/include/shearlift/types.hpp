#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace shearlift {

using Complex = std::complex<double>;

inline constexpr double kDefaultRMax = 0.999;

/// Base class for all recoverable numeric/domain failures raised by the
/// library.  Construction-time parameter violations throw
/// std::invalid_argument instead; Error subclasses signal conditions that
/// can occur on valid inputs (branch cuts, resonances, quadrature limits).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A denominator fell below the floating-point floor (only reachable as
/// |z| approaches a boundary singularity).
class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

/// A power series failed to meet its tolerance within the term budget.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// An argument lies on (or within tolerance of) a principal branch cut.
class BranchCutHit : public Error {
 public:
  using Error::Error;
};

/// The sigma-based closed forms are invalid at c = ±2.
class EndpointParameter : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature exhausted its subdivision depth.
class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

/// An integration path passes within eps of an integrand pole.
class SingularPath : public Error {
 public:
  using Error::Error;
};

/// A requested simple pole coincides with a root of the denominator family
/// (use the resonant formula instead).
class PoleCollision : public Error {
 public:
  using Error::Error;
};

/// The (c, a) = (2, 1) shear collapses the disk image; operations that
/// require a nondegenerate image refuse it.
class DegenerateShear : public Error {
 public:
  using Error::Error;
};

/// The dilatation has no analytic square root, so no minimal-graph lift.
class NotASquare : public Error {
 public:
  using Error::Error;
};

/// A closed-form case evaluator was called at its boundary pole.
class PoleAtBoundary : public Error {
 public:
  using Error::Error;
};

/// A normalization pipeline was requested for an unknown case.
class PipelineMismatch : public Error {
 public:
  using Error::Error;
};

/// An evaluation point lies outside an evaluator's domain.
class DomainViolation : public Error {
 public:
  using Error::Error;
};

/// A file could not be written or read.
class IoFailure : public Error {
 public:
  using Error::Error;
};

/// A point of the open unit disk, clamped by construction to |z| <= r_max.
struct DiskPoint {
  Complex z;

  explicit DiskPoint(Complex value, double r_max = kDefaultRMax) : z(value) {
    if (!(r_max > 0.0) || !(r_max < 1.0)) {
      throw std::invalid_argument("DiskPoint: r_max must lie in (0, 1)");
    }
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw std::invalid_argument("DiskPoint: components must be finite");
    }
    if (std::abs(value) > r_max) {
      throw std::invalid_argument("DiskPoint: |z| exceeds r_max");
    }
  }
};

/// Settings for the adaptive contour quadrature.
enum class PathStrategy { radial, two_segment };

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 28;
  PathStrategy path_strategy = PathStrategy::radial;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
      throw std::invalid_argument("QuadratureConfig: tolerances must be positive");
    }
    if (max_depth < 1) {
      throw std::invalid_argument("QuadratureConfig: max_depth must be >= 1");
    }
  }
};

}  // namespace shearlift
