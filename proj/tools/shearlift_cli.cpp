// Command-line surface for the shear/lift library: planar shear images,
// minimal-graph meshes, verification reports, and canonical-surface
// identification.
#include <array>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "shearlift/mesh.hpp"
#include "shearlift/serialize.hpp"
#include "shearlift/verify.hpp"

namespace {

using namespace shearlift;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CommonOptions {
  std::string family = "fc";
  double c = 0.0;
  double a = 0.0;
  std::optional<int> n;
  std::string grid = "16x64";
  std::optional<double> rmax;
  double tol = 1e-10;
  std::string format = "obj";
  std::string out;
  std::uint64_t seed = 42;
  int threads = 0;
};

ShearSpec build_spec(const CommonOptions& opt, bool a_given) {
  if (opt.family == "fn") {
    if (!opt.n) {
      throw CLI::ValidationError("--family fn requires --n");
    }
    return ShearSpec{ConformalFamily{Fn{*opt.n}}, Dilatation{Power{*opt.n}}};
  }
  if (opt.family != "fc") {
    throw CLI::ValidationError("--family must be fc or fn");
  }
  if (opt.n) {
    if (a_given) {
      throw CLI::ValidationError("--a and --n are mutually exclusive for --family fc");
    }
    return ShearSpec{ConformalFamily{Fc{opt.c}}, Dilatation{Power{*opt.n}}};
  }
  return ShearSpec{ConformalFamily{Fc{opt.c}}, Dilatation{MobiusProduct{opt.a}}};
}

std::pair<int, int> parse_grid(const std::string& text) {
  const auto sep = text.find('x');
  if (sep == std::string::npos) {
    throw CLI::ValidationError("--grid must look like CxR, e.g. 16x64");
  }
  try {
    const int circles = std::stoi(text.substr(0, sep));
    const int rays = std::stoi(text.substr(sep + 1));
    return {circles, rays};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--grid must look like CxR, e.g. 16x64");
  }
}

void write_text(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open " + path);
  out << body;
  out.flush();
  if (!out) throw IoFailure("write failed on " + path);
}

std::string fmt(double x) {
  std::array<char, 32> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

int run_shear(const CommonOptions& opt, bool a_given) {
  const ShearSpec spec = build_spec(opt, a_given);
  const QuadratureConfig cfg{opt.tol, opt.tol, 28, PathStrategy::radial};
  HarmonicShear shear = [&] {
    try {
      return shear_closed(spec);
    } catch (const EndpointParameter&) {
      return shear_numeric(spec, cfg);
    }
  }();
  const auto [circles, rays] = parse_grid(opt.grid);
  const double rmax = opt.rmax.value_or(0.999);
  const DiskGrid grid{circles, rays, rmax, false};
  constexpr int kCurveSamples = 256;

  // One polyline per grid circle (closed) and per grid ray, sampled densely.
  std::string body = "polyline,vertex,u,v\n";
  int polyline = 0;
  for (int i = 0; i < grid.n_circles; ++i) {
    const double r = grid.r_max * (i + 1) / grid.n_circles;
    for (int k = 0; k <= kCurveSamples; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / kCurveSamples;
      const Complex w = shear.f(DiskPoint{std::polar(r, theta), 0.9999999});
      body += std::to_string(polyline) + "," + std::to_string(k) + "," + fmt(w.real()) +
              "," + fmt(w.imag()) + "\n";
    }
    ++polyline;
  }
  for (int j = 0; j < grid.n_rays; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / grid.n_rays;
    for (int k = 1; k <= kCurveSamples; ++k) {
      const double r = grid.r_max * k / kCurveSamples;
      const Complex w = shear.f(DiskPoint{std::polar(r, theta), 0.9999999});
      body += std::to_string(polyline) + "," + std::to_string(k - 1) + "," +
              fmt(w.real()) + "," + fmt(w.imag()) + "\n";
    }
    ++polyline;
  }
  write_text(opt.out, body);
  return kExitOk;
}

int run_lift(const CommonOptions& opt, bool a_given) {
  const ShearSpec spec = build_spec(opt, a_given);
  const QuadratureConfig cfg{opt.tol, opt.tol, 28, PathStrategy::radial};
  const auto [circles, rays] = parse_grid(opt.grid);
  const double rmax = opt.rmax.value_or(0.95);
  const DiskGrid grid{circles, rays, rmax, true};
  const SurfaceMesh mesh = sample_surface(spec, grid, cfg, opt.threads);
  MeshFormat format;
  if (opt.format == "obj") {
    format = MeshFormat::obj;
  } else if (opt.format == "csv") {
    format = MeshFormat::csv;
  } else if (opt.format == "json") {
    format = MeshFormat::json;
  } else {
    throw CLI::ValidationError("--format must be obj, csv, or json");
  }
  if (opt.out.empty()) {
    throw CLI::ValidationError("lift requires --out");
  }
  export_mesh(mesh, format, opt.out);
  return kExitOk;
}

int run_verify(const CommonOptions& opt, bool a_given) {
  const ShearSpec spec = build_spec(opt, a_given);
  const VerificationReport report = run_verify_suite(spec, opt.seed);
  write_text(opt.out, report_to_json(report, spec, opt.seed));
  return report.all_passed() ? kExitOk : kExitCheckFailure;
}

int run_identify(const CommonOptions& opt) {
  VerificationReport report;
  const auto samples = seeded_disk_samples(500, 0.9, opt.seed);
  for (const double case_id : {-2.0, 0.0, 2.0}) {
    report.checks.push_back(identify_surface(case_id, case_pipeline(case_id), samples));
  }
  nlohmann::ordered_json j;
  j["seed"] = opt.seed;
  j["all_passed"] = report.all_passed();
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"max_residual", c.max_residual},
                      {"samples", c.samples},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed}});
  }
  write_text(opt.out, j.dump(2) + "\n");
  return report.all_passed() ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic shears of conformal disk maps and their minimal-graph lifts"};
  app.require_subcommand(1);

  CommonOptions opt;
  auto add_common = [&opt](CLI::App* cmd, bool with_format) {
    cmd->add_option("--family", opt.family, "Conformal family: fc or fn")
        ->check(CLI::IsMember({"fc", "fn"}));
    cmd->add_option("--c", opt.c, "Parameter c of F_c, in [-2, 2]");
    auto* a_opt = cmd->add_option("--a", opt.a, "Mobius-product dilatation parameter, in [-1, 1]");
    cmd->add_option("--n", opt.n,
                    "Family index for fn (dilatation z^n), or power dilatation for fc");
    cmd->add_option("--grid", opt.grid, "Sampling grid CxR (circles x rays)");
    cmd->add_option("--rmax", opt.rmax, "Outermost sampling radius, in (0, 1)");
    cmd->add_option("--tol", opt.tol, "Quadrature tolerance");
    if (with_format) {
      cmd->add_option("--format", opt.format, "Mesh format: obj, csv, or json")
          ->check(CLI::IsMember({"obj", "csv", "json"}));
    }
    cmd->add_option("--out", opt.out, "Output path (default: stdout for text outputs)");
    cmd->add_option("--seed", opt.seed, "Seed for sample generation");
    cmd->add_option("--threads", opt.threads, "Worker threads (0 = machine parallelism)");
    return a_opt;
  };

  auto* shear_cmd = app.add_subcommand("shear", "Emit the planar image of the sheared disk");
  auto* shear_a = add_common(shear_cmd, false);
  auto* lift_cmd = app.add_subcommand("lift", "Emit the minimal-graph mesh over the shear");
  auto* lift_a = add_common(lift_cmd, true);
  auto* verify_cmd = app.add_subcommand("verify", "Run the geometry checks, emit a JSON report");
  auto* verify_a = add_common(verify_cmd, false);
  auto* identify_cmd =
      app.add_subcommand("identify", "Match the landmark lifts to canonical surfaces");
  identify_cmd->add_option("--out", opt.out, "Output path (default: stdout)");
  identify_cmd->add_option("--seed", opt.seed, "Seed for sample generation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (shear_cmd->parsed()) return run_shear(opt, shear_a->count() > 0);
    if (lift_cmd->parsed()) return run_lift(opt, lift_a->count() > 0);
    if (verify_cmd->parsed()) return run_verify(opt, verify_a->count() > 0);
    return run_identify(opt);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const NotASquare& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}
