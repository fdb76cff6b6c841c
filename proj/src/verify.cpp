#include "shearlift/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <json.hpp>

#include "shearlift/serialize.hpp"

namespace shearlift {

namespace {

constexpr double kLooseBound = 0.9999999;

CheckResult make_result(std::string name, double residual, int samples, double tol) {
  const bool passed = residual <= tol;
  return CheckResult{std::move(name), residual, samples, tol, passed};
}

double& coord(MinimalGraphPoint& x, int k) {
  switch (k) {
    case 0: return x.x1;
    case 1: return x.x2;
    default: return x.x3;
  }
}

double coord(const MinimalGraphPoint& x, int k) {
  switch (k) {
    case 0: return x.x1;
    case 1: return x.x2;
    default: return x.x3;
  }
}

/// Worst crossing count of the closed polygon against n_lines horizontal
/// lines placed at cell centers of the polygon's vertical extent (so no
/// line passes exactly through a vertex in practice).
int max_line_crossings(const std::vector<Complex>& polygon, int n_lines) {
  double vmin = std::numeric_limits<double>::infinity();
  double vmax = -vmin;
  for (const Complex& p : polygon) {
    vmin = std::min(vmin, p.imag());
    vmax = std::max(vmax, p.imag());
  }
  const std::size_t n = polygon.size();
  int worst = 0;
  for (int j = 0; j < n_lines; ++j) {
    const double y = vmin + (j + 0.5) * (vmax - vmin) / n_lines;
    int crossings = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = polygon[i].imag() - y;
      const double b = polygon[(i + 1) % n].imag() - y;
      if ((a > 0.0) != (b > 0.0)) ++crossings;
    }
    worst = std::max(worst, crossings);
  }
  return worst;
}

std::vector<Complex> image_polygon(const HarmonicShear& shear, double r, int n_vertices) {
  std::vector<Complex> polygon;
  polygon.reserve(n_vertices);
  for (int k = 0; k < n_vertices; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n_vertices;
    polygon.push_back(shear.f(DiskPoint{std::polar(r, theta), kLooseBound}));
  }
  return polygon;
}

double boundary_speed(int n, double theta) {
  return std::abs(1.0 - std::polar(1.0 / n, (n - 1) * theta));
}

double wrapped_distance(double theta, double target) {
  double d = std::fmod(std::abs(theta - target), 2.0 * std::numbers::pi);
  return std::min(d, 2.0 * std::numbers::pi - d);
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::ranges::all_of(checks, [](const CheckResult& c) { return c.passed; });
}

MinimalGraphPoint canonical_eval(CanonicalSurface surface, Complex w) {
  if (surface == CanonicalSurface::enneper) {
    const Complex w3 = w * w * w;
    return MinimalGraphPoint{(w + w3 / 3.0).real(), (w3 / 3.0 - w).imag(), (w * w).imag()};
  }
  if (std::abs(w.imag()) < 1e-15 && w.real() <= 0.0) {
    throw DomainViolation(
        "canonical_eval: the helicoid parameterization is undefined on the ray "
        "(-inf, 0] where the principal log jumps");
  }
  return MinimalGraphPoint{(w - 1.0 / w).real(), (w + 1.0 / w).imag(),
                           2.0 * std::log(w).imag()};
}

PipelineState NormalizationPipeline::apply(PipelineState state) const {
  for (const PipelineStep& step : steps) {
    std::visit(
        [&state](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, MobiusStep>) {
            const Complex den = s.c * state.w + s.d;
            if (std::abs(den) < 1e-300) {
              throw DegenerateDenominator("NormalizationPipeline: Mobius pole hit");
            }
            state.w = (s.a * state.w + s.b) / den;
          } else if constexpr (std::is_same_v<T, ScaleStep>) {
            state.x.x1 *= s.factor;
            state.x.x2 *= s.factor;
            state.x.x3 *= s.factor;
          } else if constexpr (std::is_same_v<T, TranslateStep>) {
            state.x.x1 += s.dx1;
            state.x.x2 += s.dx2;
            state.x.x3 += s.dx3;
          } else if constexpr (std::is_same_v<T, SwapStep>) {
            std::swap(coord(state.x, s.axis_i), coord(state.x, s.axis_j));
          } else {
            coord(state.x, s.axis) = -coord(state.x, s.axis);
          }
        },
        step);
  }
  return state;
}

NormalizationPipeline NormalizationPipeline::inverse() const {
  NormalizationPipeline out;
  out.steps.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    std::visit(
        [&out](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, MobiusStep>) {
            out.steps.push_back(MobiusStep{s.d, -s.b, -s.c, s.a});
          } else if constexpr (std::is_same_v<T, ScaleStep>) {
            if (s.factor == 0.0) {
              throw std::invalid_argument("NormalizationPipeline: scale 0 not invertible");
            }
            out.steps.push_back(ScaleStep{1.0 / s.factor});
          } else if constexpr (std::is_same_v<T, TranslateStep>) {
            out.steps.push_back(TranslateStep{-s.dx1, -s.dx2, -s.dx3});
          } else {
            out.steps.push_back(s);
          }
        },
        *it);
  }
  return out;
}

NormalizationPipeline case_pipeline(double case_id) {
  const Complex i{0.0, 1.0};
  if (case_id == -2.0) {
    return NormalizationPipeline{{
        MobiusStep{1.0, 1.0, -1.0, 1.0},     // w = (1+z)/(1-z)
        SwapStep{1, 2},
        TranslateStep{1.0 / 3.0, 0.0, 0.0},
        ScaleStep{4.0},
    }};
  }
  if (case_id == 0.0) {
    return NormalizationPipeline{{
        MobiusStep{1.0, i, -1.0, i},         // w = (i+z)/(i-z)
        ScaleStep{4.0},
        SwapStep{1, 2},
        SwapStep{0, 2},
        ReflectStep{1},
        ReflectStep{2},
    }};
  }
  if (case_id == 2.0) {
    return NormalizationPipeline{{
        MobiusStep{-1.0, 1.0, 1.0, 1.0},     // w = (1-z)/(1+z)
        TranslateStep{-1.0 / 3.0, 0.0, 0.0},
        ScaleStep{-4.0},
        ReflectStep{2},
        SwapStep{1, 2},
    }};
  }
  throw PipelineMismatch("case_pipeline: no pipeline for this parameter");
}

CanonicalSurface case_target(double case_id) {
  if (case_id == -2.0 || case_id == 2.0) return CanonicalSurface::enneper;
  if (case_id == 0.0) return CanonicalSurface::helicoid;
  throw PipelineMismatch("case_target: no canonical surface for this parameter");
}

std::vector<DiskPoint> seeded_disk_samples(int count, double r_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform01 = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<DiskPoint> samples;
  samples.reserve(count);
  for (int k = 0; k < count; ++k) {
    const double r = r_max * std::sqrt(uniform01());
    const double theta = 2.0 * std::numbers::pi * uniform01();
    samples.emplace_back(std::polar(r, theta), kLooseBound);
  }
  return samples;
}

CheckResult check_local_univalence(const HarmonicShear& shear, const DiskGrid& grid) {
  const auto nodes = make_grid(grid);
  const double d = 1e-5;
  double min_j = std::numeric_limits<double>::infinity();
  for (const DiskPoint& node : nodes) {
    const Complex z = node.z;
    const Complex hp =
        (shear.h(DiskPoint{z + d, kLooseBound}) - shear.h(DiskPoint{z - d, kLooseBound})) /
        (2.0 * d);
    const Complex gp =
        (shear.g(DiskPoint{z + d, kLooseBound}) - shear.g(DiskPoint{z - d, kLooseBound})) /
        (2.0 * d);
    min_j = std::min(min_j, std::norm(hp) - std::norm(gp));
  }
  return make_result("local_univalence", -min_j, static_cast<int>(nodes.size()), -1e-12);
}

CheckResult check_chd(const HarmonicShear& shear, double r, int n_lines) {
  if (!(r > 0.0) || !(r < 1.0)) {
    throw std::invalid_argument("check_chd: requires r in (0, 1)");
  }
  constexpr int kVertices = 2048;
  const int worst = max_line_crossings(image_polygon(shear, r, kVertices), n_lines);
  return make_result("chd", static_cast<double>(worst - 2), kVertices, 0.0);
}

CheckResult check_chd_negative_control() {
  constexpr int kVertices = 2048;
  std::vector<Complex> polygon;
  polygon.reserve(kVertices);
  for (int k = 0; k < kVertices; ++k) {
    const Complex z = std::polar(0.99, 2.0 * std::numbers::pi * k / kVertices);
    polygon.push_back(z + 0.5 * std::conj(z * z * z));
  }
  const int worst = max_line_crossings(polygon, 64);
  // The detector must see MORE than two crossings somewhere on this curve.
  return make_result("chd_negative_control", static_cast<double>(4 - worst), kVertices, 0.0);
}

CheckResult check_slit_tip(double c, double a, double r) {
  if (c != -2.0 && c != 2.0) {
    throw std::invalid_argument("check_slit_tip: requires c = -2 or c = +2");
  }
  if (std::abs(a) > 1.0) {
    throw std::invalid_argument("check_slit_tip: requires a in [-1, 1]");
  }
  if (c == 2.0 && a == 1.0) {
    throw DegenerateShear("check_slit_tip: the (2, 1) image has no slit (it collapses)");
  }
  if (!(r > 0.0) || !(r < 1.0)) {
    throw std::invalid_argument("check_slit_tip: requires r in (0, 1)");
  }
  constexpr int kSamples = 201;
  const double theta0 = c == -2.0 ? std::numbers::pi : 0.0;
  const double half_width = 1.0 - r;
  double extreme = c == -2.0 ? -std::numeric_limits<double>::infinity()
                             : std::numeric_limits<double>::infinity();
  for (int k = 0; k < kSamples; ++k) {
    const double theta = theta0 + half_width * (-1.0 + 2.0 * k / (kSamples - 1));
    const Complex z = std::polar(r, theta);
    const double u = (special_h(c, a, z) + std::conj(special_g(c, a, z))).real();
    extreme = c == -2.0 ? std::max(extreme, u) : std::min(extreme, u);
  }
  const double tip = c == -2.0 ? -(2.0 - a) / 6.0 : (a + 2.0) / 6.0;
  return make_result("slit_tip", std::abs(extreme - tip), kSamples, 50.0 * (1.0 - r));
}

CheckResult check_degenerate_collapse() {
  constexpr int kSamples = 200;
  constexpr double kR = 0.999;
  std::vector<Complex> values;
  values.reserve(kSamples);
  for (int k = 0; k < kSamples; ++k) {
    const double theta =
        0.7 * std::numbers::pi * (-1.0 + 2.0 * k / (kSamples - 1.0));
    const auto value = closed_f_special(2.0, 1.0, DiskPoint{std::polar(kR, theta), kLooseBound});
    values.emplace_back(value.u, value.v);
  }
  double diameter = 0.0;
  double offset = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    offset = std::max(offset, std::abs(values[i] - Complex{0.5, 0.0}));
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      diameter = std::max(diameter, std::abs(values[i] - values[j]));
    }
  }
  return make_result("degenerate_collapse", std::max(diameter, offset), kSamples, 1e-2);
}

std::vector<CheckResult> check_epicycloid_boundary(int n) {
  if (n < 2) throw std::invalid_argument("check_epicycloid_boundary: requires n >= 2");
  constexpr int kSamples = 8192;
  std::vector<double> s(kSamples);
  for (int k = 0; k < kSamples; ++k) {
    s[k] = boundary_speed(n, 2.0 * std::numbers::pi * k / kSamples);
  }
  std::vector<double> minima_theta;
  std::vector<double> minima_value;
  for (int k = 0; k < kSamples; ++k) {
    const double prev = s[(k + kSamples - 1) % kSamples];
    const double next = s[(k + 1) % kSamples];
    if (s[k] < prev && s[k] < next) {
      double lo = 2.0 * std::numbers::pi * (k - 1) / kSamples;
      double hi = 2.0 * std::numbers::pi * (k + 1) / kSamples;
      while (hi - lo > 1e-13) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (boundary_speed(n, m1) < boundary_speed(n, m2)) {
          hi = m2;
        } else {
          lo = m1;
        }
      }
      const double theta = 0.5 * (lo + hi);
      minima_theta.push_back(theta);
      minima_value.push_back(boundary_speed(n, theta));
    }
  }
  const int expected = n - 1;
  const bool count_ok = static_cast<int>(minima_theta.size()) == expected;
  double position_err = count_ok ? 0.0 : 1e300;
  double value_err = count_ok ? 0.0 : 1e300;
  if (count_ok) {
    for (std::size_t i = 0; i < minima_theta.size(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (int k = 0; k < expected; ++k) {
        best = std::min(best,
                        wrapped_distance(minima_theta[i], 2.0 * std::numbers::pi * k / expected));
      }
      position_err = std::max(position_err, best);
      value_err = std::max(value_err, std::abs(minima_value[i] - (1.0 - 1.0 / n)));
    }
  }
  return {
      make_result("epicycloid_count",
                  std::abs(static_cast<double>(minima_theta.size()) - expected), kSamples,
                  0.0),
      make_result("epicycloid_positions", position_err, kSamples, 1e-6),
      make_result("epicycloid_values", value_err, kSamples, 1e-9),
  };
}

CheckResult check_concave_arcs(int n) {
  if (n < 2) throw std::invalid_argument("check_concave_arcs: requires n >= 2");
  constexpr int kVertices = 4096;
  constexpr double kR = 0.99;
  std::vector<Complex> polygon;
  polygon.reserve(kVertices);
  for (int k = 0; k < kVertices; ++k) {
    const DiskPoint p{std::polar(kR, 2.0 * std::numbers::pi * k / kVertices), kLooseBound};
    polygon.push_back(closed_h_n(n, p) + std::conj(closed_g_n(n, p)));
  }
  // Sign changes of the discrete curvature (cross product of consecutive
  // edges): one +- pair per concave arc, 2(n+2) in total.
  int changes = 0;
  int last_sign = 0;
  int first_sign = 0;
  for (int k = 0; k < kVertices; ++k) {
    const Complex e1 = polygon[(k + 1) % kVertices] - polygon[k];
    const Complex e2 = polygon[(k + 2) % kVertices] - polygon[(k + 1) % kVertices];
    const double cross = e1.real() * e2.imag() - e1.imag() * e2.real();
    const int sign = cross > 0.0 ? 1 : (cross < 0.0 ? -1 : 0);
    if (sign == 0) continue;
    if (last_sign != 0 && sign != last_sign) ++changes;
    if (first_sign == 0) first_sign = sign;
    last_sign = sign;
  }
  if (first_sign != 0 && last_sign != first_sign) ++changes;
  const int expected = 2 * (n + 2);
  return make_result("concave_arcs", std::abs(static_cast<double>(changes - expected)),
                     kVertices, 0.0);
}

CheckResult identify_surface(double case_id, const NormalizationPipeline& pipeline,
                             std::span<const DiskPoint> samples) {
  const CanonicalSurface target = case_target(case_id);
  double worst = 0.0;
  for (const DiskPoint& p : samples) {
    const MinimalGraphPoint x = x3_closed_case(case_id, p);
    const PipelineState out = pipeline.apply(PipelineState{p.z, x});
    const MinimalGraphPoint ref = canonical_eval(target, out.w);
    const double dx1 = out.x.x1 - ref.x1;
    const double dx2 = out.x.x2 - ref.x2;
    const double dx3 = out.x.x3 - ref.x3;
    worst = std::max(worst, std::sqrt(dx1 * dx1 + dx2 * dx2 + dx3 * dx3));
  }
  const int id = static_cast<int>(case_id);
  return make_result("identify_c_" + std::to_string(id), worst,
                     static_cast<int>(samples.size()), 1e-8);
}

MinimalityCertificate check_minimality(
    const std::function<MinimalGraphPoint(Complex)>& surface, int n_radii, int n_angles,
    double r_max, double step) {
  if (n_radii < 1 || n_angles < 1) {
    throw std::invalid_argument("check_minimality: grid dimensions must be positive");
  }
  if (!(step > 0.0) || !(r_max > 0.0) || !(r_max + 2.0 * step < 1.0)) {
    throw std::invalid_argument("check_minimality: stencil must stay inside the disk");
  }
  const double h2 = step * step;
  const double eps = std::numeric_limits<double>::epsilon();
  const Complex ih{0.0, step};
  double lap_worst = 0.0;
  double iso_worst = 0.0;
  for (int i = 0; i < n_radii; ++i) {
    const double r = r_max * (i + 1) / n_radii;
    for (int j = 0; j < n_angles; ++j) {
      const double theta = 2.0 * std::numbers::pi * (j + 0.5) / n_angles;
      const Complex z = std::polar(r, theta);
      const MinimalGraphPoint C = surface(z);
      const MinimalGraphPoint E = surface(z + step);
      const MinimalGraphPoint W = surface(z - step);
      const MinimalGraphPoint N = surface(z + ih);
      const MinimalGraphPoint S = surface(z - ih);
      const MinimalGraphPoint E2 = surface(z + 2.0 * step);
      const MinimalGraphPoint W2 = surface(z - 2.0 * step);
      const MinimalGraphPoint N2 = surface(z + 2.0 * ih);
      const MinimalGraphPoint S2 = surface(z - 2.0 * ih);

      double lap_max = 0.0;
      double scale = 0.0;
      double stencil_max = 0.0;
      double xu[3], xv[3];
      for (int k = 0; k < 3; ++k) {
        const double ck = coord(C, k), ek = coord(E, k), wk = coord(W, k);
        const double nk = coord(N, k), sk = coord(S, k);
        lap_max = std::max(lap_max, std::abs((ek + wk + nk + sk - 4.0 * ck) / h2));
        scale += (std::abs(ek + wk - 2.0 * ck) + std::abs(nk + sk - 2.0 * ck)) / h2;
        for (double v : {ck, ek, wk, nk, sk}) stencil_max = std::max(stencil_max, std::abs(v));
        xu[k] = (-coord(E2, k) + 8.0 * ek - 8.0 * wk + coord(W2, k)) / (12.0 * step);
        xv[k] = (-coord(N2, k) + 8.0 * nk - 8.0 * sk + coord(S2, k)) / (12.0 * step);
      }
      const double noise_floor = 1e6 * eps * std::max(1.0, stencil_max) / h2;
      lap_worst = std::max(lap_worst, lap_max / (scale + noise_floor));

      const double ee = xu[0] * xu[0] + xu[1] * xu[1] + xu[2] * xu[2];
      const double gg = xv[0] * xv[0] + xv[1] * xv[1] + xv[2] * xv[2];
      const double ff = xu[0] * xv[0] + xu[1] * xv[1] + xu[2] * xv[2];
      iso_worst = std::max(iso_worst, std::max(std::abs(ee - gg), std::abs(ff)) / (ee + gg));
    }
  }
  const int samples = n_radii * n_angles;
  return MinimalityCertificate{
      make_result("minimal_laplacian", lap_worst, samples, 1e-4),
      make_result("minimal_isothermal", iso_worst, samples, 1e-4),
  };
}

VerificationReport run_verify_suite(const ShearSpec& spec, std::uint64_t /*seed*/) {
  VerificationReport report;
  const QuadratureConfig cfg;
  HarmonicShear shear = [&] {
    try {
      return shear_closed(spec);
    } catch (const EndpointParameter&) {
      return shear_numeric(spec, cfg);
    }
  }();
  if (spec.is_degenerate()) {
    report.checks.push_back(check_degenerate_collapse());
    report.warnings.push_back(
        "the (c, a) = (2, 1) shear collapses the disk image onto the point 1/2; "
        "univalence and convexity scans are replaced by the collapse certificate");
  } else {
    report.checks.push_back(check_local_univalence(shear, DiskGrid{64, 64, 0.95}));
    report.checks.push_back(check_chd(shear, 0.99, 64));
  }
  if (spec.family.is_fc() && spec.dilatation.is_mobius() &&
      std::abs(spec.family.fc().c) == 2.0 && !spec.is_degenerate()) {
    report.checks.push_back(check_slit_tip(spec.family.fc().c, spec.dilatation.mobius().a));
  }
  if (spec.family.is_fn()) {
    for (auto& entry : check_epicycloid_boundary(spec.family.fn().n)) {
      report.checks.push_back(std::move(entry));
    }
    report.checks.push_back(check_concave_arcs(spec.family.fn().n));
  }
  if (sqrt_dilatation(spec.dilatation)) {
    const auto cert = check_minimality(graph_evaluator(spec, cfg));
    report.checks.push_back(cert.laplacian);
    report.checks.push_back(cert.isothermal);
  }
  std::ranges::sort(report.checks,
                    [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return report;
}

std::string report_to_json(const VerificationReport& report, const ShearSpec& spec,
                           std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["spec"] = spec_to_json(spec);
  j["seed"] = seed;
  j["all_passed"] = report.all_passed();
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"max_residual", c.max_residual},
                      {"samples", c.samples},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed}});
  }
  j["warnings"] = report.warnings;
  return j.dump(2) + "\n";
}

}  // namespace shearlift
