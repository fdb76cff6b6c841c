#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "shearlift/types.hpp"

namespace shearlift {

/// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (Kronrod extension of
/// the 7-point Gauss rule; even nodes of the 15-point set are the Gauss
/// abscissae).
namespace gk {

inline constexpr std::array<double, 15> nodes = {
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
};

inline constexpr std::array<double, 15> kronrod_weights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
};

inline constexpr std::array<double, 7> gauss_weights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
};

}  // namespace gk

/// One G7/K15 evaluation of f along the straight segment [a, b] in the
/// complex plane.  Returns the K15 estimate; err receives |K15 - G7|.
template <typename F>
Complex gauss_kronrod_segment(F&& f, Complex a, Complex b, double& err) {
  const Complex mid = 0.5 * (a + b);
  const Complex half = 0.5 * (b - a);
  Complex k15{0.0, 0.0};
  Complex g7{0.0, 0.0};
  for (int i = 0; i < 15; ++i) {
    const Complex v = f(mid + gk::nodes[i] * half);
    k15 += gk::kronrod_weights[i] * v;
    if (i % 2 == 1) {
      g7 += gk::gauss_weights[i / 2] * v;
    }
  }
  k15 *= half;
  g7 *= half;
  err = std::abs(k15 - g7);
  return k15;
}

/// Adaptive quadrature of f along the straight segment [a, b]: worklist of
/// subsegments, always splitting the one with the largest error estimate,
/// until sum(err) <= max(abs_tol, rel_tol * |integral|).  Subdivision depth
/// is limited by cfg.max_depth per branch; exceeding it raises
/// QuadratureFailure.
template <typename F>
Complex integrate_segment(F&& f, Complex a, Complex b, const QuadratureConfig& cfg) {
  cfg.validate();
  struct Piece {
    Complex a, b, value;
    double err;
    int depth;
  };
  std::vector<Piece> pieces;
  double err0 = 0.0;
  const Complex v0 = gauss_kronrod_segment(f, a, b, err0);
  pieces.push_back({a, b, v0, err0, 0});

  for (;;) {
    Complex total{0.0, 0.0};
    double err_sum = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      total += pieces[i].value;
      err_sum += pieces[i].err;
      if (pieces[i].err > pieces[worst].err) worst = i;
    }
    if (err_sum <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
      return total;
    }
    Piece p = pieces[worst];
    if (p.depth >= cfg.max_depth) {
      throw QuadratureFailure("integrate_segment: subdivision depth exhausted");
    }
    const Complex mid = 0.5 * (p.a + p.b);
    double el = 0.0, er = 0.0;
    const Complex vl = gauss_kronrod_segment(f, p.a, mid, el);
    const Complex vr = gauss_kronrod_segment(f, mid, p.b, er);
    pieces[worst] = {p.a, mid, vl, el, p.depth + 1};
    pieces.push_back({mid, p.b, vr, er, p.depth + 1});
  }
}

/// Shortest distance from point p to the segment [a, b].
inline double distance_to_segment(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

inline constexpr double kPoleGuardEps = 1e-9;

/// Integral of f from 0 to z along the configured path (radial [0, z], or
/// [0, |z|] then the circular-chord segment [|z|, z]).  Known integrand
/// poles are checked against every segment; a pass within kPoleGuardEps
/// raises SingularPath.
template <typename F>
Complex integrate_path(F&& f, Complex z, const QuadratureConfig& cfg,
                       std::span<const Complex> poles = {}) {
  std::vector<std::pair<Complex, Complex>> segments;
  const Complex origin{0.0, 0.0};
  if (cfg.path_strategy == PathStrategy::radial || z == origin) {
    segments.emplace_back(origin, z);
  } else {
    const Complex elbow{std::abs(z), 0.0};
    segments.emplace_back(origin, elbow);
    segments.emplace_back(elbow, z);
  }
  for (const auto& [a, b] : segments) {
    for (const Complex pole : poles) {
      if (distance_to_segment(pole, a, b) < kPoleGuardEps) {
        throw SingularPath("integrate_path: path passes within eps of a pole");
      }
    }
  }
  Complex total{0.0, 0.0};
  for (const auto& [a, b] : segments) {
    if (a == b) continue;
    total += integrate_segment(f, a, b, cfg);
  }
  return total;
}

}  // namespace shearlift
