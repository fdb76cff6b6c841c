#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "shearlift/verify.hpp"

using namespace shearlift;

namespace {
const QuadratureConfig kCfg{};
}

TEST_CASE("canonical surface pins") {
  // Both surfaces are real-symmetric, so a real parameter pins the first
  // coordinate and zeroes the other two.
  const auto e = canonical_eval(CanonicalSurface::enneper, Complex{0.5, 0.0});
  CHECK(e.x1 == doctest::Approx(0.5 + 0.125 / 3.0).epsilon(1e-14));
  CHECK(e.x2 == doctest::Approx(0.0));
  CHECK(e.x3 == doctest::Approx(0.0));

  const auto h = canonical_eval(CanonicalSurface::helicoid, Complex{0.5, 0.0});
  CHECK(h.x1 == doctest::Approx(-1.5).epsilon(1e-14));
  CHECK(h.x2 == doctest::Approx(0.0));
  CHECK(h.x3 == doctest::Approx(0.0));

  CHECK_THROWS_AS(canonical_eval(CanonicalSurface::helicoid, Complex{0.0, 0.0}),
                  DomainViolation);
  CHECK_THROWS_AS(canonical_eval(CanonicalSurface::helicoid, Complex{-0.5, 0.0}),
                  DomainViolation);
}

TEST_CASE("pipelines replay to the identity") {
  for (const double case_id : {-2.0, 0.0, 2.0}) {
    const NormalizationPipeline pipeline = case_pipeline(case_id);
    const PipelineState s{Complex{0.3, 0.2}, {1.0, -2.0, 0.5}};
    const PipelineState back = pipeline.apply(pipeline.inverse().apply(s));
    CHECK(std::abs(back.w - s.w) < 1e-12);
    CHECK(std::abs(back.x.x1 - s.x.x1) < 1e-12);
    CHECK(std::abs(back.x.x2 - s.x.x2) < 1e-12);
    CHECK(std::abs(back.x.x3 - s.x.x3) < 1e-12);
  }
  CHECK_THROWS_AS(case_pipeline(1.0), PipelineMismatch);
}

TEST_CASE("half-plane substitution of the middle case") {
  // z = i/2 on the disk lands at w = 3 on the right half-plane.
  const PipelineState out =
      case_pipeline(0.0).apply({Complex{0.0, 0.5}, {0.0, 0.0, 0.0}});
  CHECK(std::abs(out.w - Complex{3.0, 0.0}) < 1e-12);
}

TEST_CASE("seeded samples are deterministic and inside the radius") {
  const auto a = seeded_disk_samples(64, 0.85, 123);
  const auto b = seeded_disk_samples(64, 0.85, 123);
  REQUIRE(a.size() == 64);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].z == b[i].z);
    CHECK(std::abs(a[i].z) <= 0.85);
  }
  CHECK(seeded_disk_samples(4, 0.85, 124)[0].z != a[0].z);
}

TEST_CASE("surface identification hits all three canonical targets") {
  const auto samples = seeded_disk_samples(200, 0.9, 42);
  for (const double case_id : {-2.0, 0.0, 2.0}) {
    const CheckResult r = identify_surface(case_id, case_pipeline(case_id), samples);
    CHECK(r.passed);
    CHECK(r.max_residual <= 1e-8);
    CHECK(r.samples == 200);
  }
}

TEST_CASE("local univalence certificate") {
  const ShearSpec spec{ConformalFamily{Fc{1.0}}, Dilatation{MobiusProduct{0.5}}};
  const CheckResult r = check_local_univalence(shear_closed(spec), DiskGrid{24, 32, 0.9});
  CHECK(r.passed);
  CHECK(r.max_residual < 0.0);  // -min J: J stayed positive
}

TEST_CASE("horizontal convexity scan and its control") {
  const ShearSpec spec{ConformalFamily{Fc{0.0}}, Dilatation{MobiusProduct{0.0}}};
  CHECK(check_chd(shear_closed(spec), 0.99, 64).passed);
  CHECK(check_chd_negative_control().passed);
}

TEST_CASE("slit tips sit at their pinned abscissae") {
  struct Row {
    double c, a, tip;
  };
  for (const Row row : {Row{-2.0, 0.0, -1.0 / 3.0}, Row{-2.0, 1.0, -1.0 / 6.0},
                        Row{2.0, -1.0, 1.0 / 6.0}}) {
    const CheckResult r = check_slit_tip(row.c, row.a);
    CHECK(r.passed);
    CHECK(r.max_residual <= 5e-2);
  }
  CHECK_THROWS_AS(check_slit_tip(2.0, 1.0), DegenerateShear);
}

TEST_CASE("slit-tip error shrinks with the boundary gap") {
  const double coarse = check_slit_tip(-2.0, 0.0, 0.999).max_residual;
  const double fine = check_slit_tip(-2.0, 0.0, 0.9995).max_residual;
  CHECK(fine / coarse > 0.25);
  CHECK(fine / coarse < 0.75);
}

TEST_CASE("degenerate pair collapses to the half point") {
  const CheckResult r = check_degenerate_collapse();
  CHECK(r.passed);
  CHECK(r.max_residual <= 1e-2);
}

TEST_CASE("epicycloid boundary speed minima") {
  for (const int n : {2, 4, 8}) {
    const auto results = check_epicycloid_boundary(n);
    REQUIRE(results.size() == 3);
    for (const CheckResult& r : results) CHECK(r.passed);
    CHECK(results[0].max_residual == 0.0);   // exactly n - 1 minima
    CHECK(results[2].max_residual <= 1e-9);  // each equals 1 - 1/n
  }
}

TEST_CASE("concave arc count of the sheared epicycloid") {
  const CheckResult r = check_concave_arcs(3);
  CHECK(r.passed);
  CHECK(r.max_residual == 0.0);  // |sign changes - 2(n+2)| exactly zero
}

TEST_CASE("finite-difference minimality certificate") {
  const ShearSpec spec{ConformalFamily{Fc{0.0}}, Dilatation{MobiusProduct{0.0}}};
  const MinimalityCertificate cert = check_minimality(graph_evaluator(spec, kCfg));
  CHECK(cert.laplacian.passed);
  CHECK(cert.laplacian.max_residual <= 1e-4);
  CHECK(cert.isothermal.passed);
  CHECK(cert.isothermal.max_residual <= 1e-4);
}

TEST_CASE("suite for the degenerate pair warns and passes") {
  const ShearSpec spec{ConformalFamily{Fc{2.0}}, Dilatation{MobiusProduct{1.0}}};
  const VerificationReport report = run_verify_suite(spec, 42);
  CHECK(report.all_passed());
  CHECK_FALSE(report.warnings.empty());
  CHECK(std::is_sorted(report.checks.begin(), report.checks.end(),
                       [](const CheckResult& x, const CheckResult& y) {
                         return x.name < y.name;
                       }));
}

TEST_CASE("reports are byte-stable") {
  const ShearSpec spec{ConformalFamily{Fn{3}}, Dilatation{Power{3}}};
  const VerificationReport report = run_verify_suite(spec, 7);
  const std::string once = report_to_json(report, spec, 7);
  const std::string twice = report_to_json(run_verify_suite(spec, 7), spec, 7);
  CHECK(once == twice);
  CHECK(once.back() == '\n');
}
