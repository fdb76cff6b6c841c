#include "shearlift/mesh.hpp"

#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <numbers>
#include <set>
#include <thread>
#include <utility>

#include <json.hpp>

#include "shearlift/serialize.hpp"

namespace shearlift {

namespace {

std::string fmt_double(double x) {
  std::array<char, 32> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

void write_or_throw(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("export_mesh: cannot open " + path.string());
  out << body;
  out.flush();
  if (!out) throw IoFailure("export_mesh: write failed on " + path.string());
}

}  // namespace

nlohmann::ordered_json spec_to_json(const ShearSpec& spec) {
  nlohmann::ordered_json family;
  if (spec.family.is_fc()) {
    family = {{"kind", "fc"}, {"c", spec.family.fc().c}};
  } else {
    family = {{"kind", "fn"}, {"n", spec.family.fn().n}};
  }
  nlohmann::ordered_json dil;
  if (spec.dilatation.is_mobius()) {
    dil = {{"kind", "mobius"}, {"a", spec.dilatation.mobius().a}};
  } else {
    dil = {{"kind", "power"}, {"n", spec.dilatation.power().n}};
  }
  return {{"family", family}, {"dilatation", dil}};
}

ShearSpec spec_from_json(const nlohmann::json& j) {
  const auto& jf = j.at("family");
  const auto& jd = j.at("dilatation");
  auto family = jf.at("kind") == "fc"
                    ? ConformalFamily{Fc{jf.at("c").get<double>()}}
                    : ConformalFamily{Fn{jf.at("n").get<int>()}};
  auto dil = jd.at("kind") == "mobius"
                 ? Dilatation{MobiusProduct{jd.at("a").get<double>()}}
                 : Dilatation{Power{jd.at("n").get<int>()}};
  return ShearSpec{std::move(family), std::move(dil)};
}

std::vector<DiskPoint> make_grid(const DiskGrid& grid) {
  std::vector<DiskPoint> nodes;
  nodes.reserve(static_cast<std::size_t>(grid.n_circles) * grid.n_rays + 1);
  for (int i = 0; i < grid.n_circles; ++i) {
    const double r = grid.r_max * (i + 1) / grid.n_circles;
    for (int j = 0; j < grid.n_rays; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / grid.n_rays;
      nodes.emplace_back(std::polar(r, theta), 0.9999999);
    }
  }
  if (grid.include_center) nodes.emplace_back(Complex{0.0, 0.0}, 0.9999999);
  return nodes;
}

SurfaceMesh sample_surface(const ShearSpec& spec, const DiskGrid& grid,
                           const QuadratureConfig& cfg, int n_threads) {
  HarmonicShear shear = [&] {
    try {
      return shear_closed(spec);
    } catch (const EndpointParameter&) {
      return shear_numeric(spec, cfg);
    }
  }();
  if (!sqrt_dilatation(spec.dilatation)) {
    throw NotASquare(
        "sample_surface: the dilatation has no analytic square root on the disk "
        "(lifting requires an even power z^{2m} or the a = 0 Mobius product)");
  }
  const auto nodes = make_grid(grid);
  std::vector<MinimalGraphPoint> vertices(nodes.size());
  std::vector<Complex> params(nodes.size());

  unsigned workers = n_threads > 0 ? static_cast<unsigned>(n_threads)
                                   : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(nodes.size()));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error_message;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= nodes.size() || failed.load()) break;
      try {
        params[i] = nodes[i].z;
        vertices[i] = lift_numeric(shear, nodes[i], cfg);
      } catch (const std::exception& e) {
        std::scoped_lock lock(error_mutex);
        failed.store(true);
        if (error_message.empty()) {
          error_message = "node " + std::to_string(i) + ": " + e.what();
        }
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  if (failed.load()) throw QuadratureFailure("sample_surface: " + error_message);

  std::vector<std::vector<int>> faces;
  const int R = grid.n_rays;
  for (int i = 0; i + 1 < grid.n_circles; ++i) {
    for (int j = 0; j < R; ++j) {
      const int jn = (j + 1) % R;
      faces.push_back({i * R + j, (i + 1) * R + j, (i + 1) * R + jn, i * R + jn});
    }
  }
  if (grid.include_center) {
    const int center = grid.n_circles * R;
    for (int j = 0; j < R; ++j) {
      faces.push_back({center, j, (j + 1) % R});
    }
  }
  return SurfaceMesh{shear.spec, grid, shear.provenance, std::move(params),
                     std::move(vertices), std::move(faces)};
}

int euler_characteristic(const SurfaceMesh& mesh) {
  std::set<std::pair<int, int>> edges;
  for (const auto& face : mesh.faces) {
    for (std::size_t k = 0; k < face.size(); ++k) {
      const int a = face[k];
      const int b = face[(k + 1) % face.size()];
      edges.emplace(std::min(a, b), std::max(a, b));
    }
  }
  return static_cast<int>(mesh.vertices.size()) - static_cast<int>(edges.size()) +
         static_cast<int>(mesh.faces.size());
}

void export_mesh(const SurfaceMesh& mesh, MeshFormat format,
                 const std::filesystem::path& path) {
  std::string body;
  switch (format) {
    case MeshFormat::obj: {
      for (const auto& v : mesh.vertices) {
        body += "v " + fmt_double(v.x1) + " " + fmt_double(v.x2) + " " +
                fmt_double(v.x3) + "\n";
      }
      for (const auto& face : mesh.faces) {
        body += "f";
        for (int idx : face) body += " " + std::to_string(idx + 1);
        body += "\n";
      }
      break;
    }
    case MeshFormat::csv: {
      body = "x1,x2,x3,re_z,im_z\n";
      for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        const auto& v = mesh.vertices[i];
        body += fmt_double(v.x1) + "," + fmt_double(v.x2) + "," + fmt_double(v.x3) +
                "," + fmt_double(mesh.params[i].real()) + "," +
                fmt_double(mesh.params[i].imag()) + "\n";
      }
      break;
    }
    case MeshFormat::json: {
      nlohmann::ordered_json j;
      j["spec"] = spec_to_json(mesh.spec);
      j["grid"] = {{"n_circles", mesh.grid.n_circles},
                   {"n_rays", mesh.grid.n_rays},
                   {"r_max", mesh.grid.r_max},
                   {"include_center", mesh.grid.include_center}};
      j["provenance"] =
          mesh.provenance == ShearProvenance::closed_form ? "closed_form" : "quadrature";
      auto& params = j["params"] = nlohmann::ordered_json::array();
      for (const auto& z : mesh.params) params.push_back({z.real(), z.imag()});
      auto& verts = j["vertices"] = nlohmann::ordered_json::array();
      for (const auto& v : mesh.vertices) verts.push_back({v.x1, v.x2, v.x3});
      j["faces"] = mesh.faces;
      body = j.dump(2);
      body += "\n";
      break;
    }
  }
  write_or_throw(path, body);
}

SurfaceMesh import_mesh_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("import_mesh_json: cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoFailure("import_mesh_json: parse error in " + path.string() + ": " + e.what());
  }
  const auto& jg = j.at("grid");
  SurfaceMesh mesh{
      spec_from_json(j.at("spec")),
      DiskGrid{jg.at("n_circles").get<int>(), jg.at("n_rays").get<int>(),
               jg.at("r_max").get<double>(), jg.at("include_center").get<bool>()},
      j.at("provenance") == "closed_form" ? ShearProvenance::closed_form
                                          : ShearProvenance::quadrature,
      {},
      {},
      {}};
  for (const auto& pz : j.at("params")) {
    mesh.params.emplace_back(pz.at(0).get<double>(), pz.at(1).get<double>());
  }
  for (const auto& v : j.at("vertices")) {
    mesh.vertices.push_back(
        {v.at(0).get<double>(), v.at(1).get<double>(), v.at(2).get<double>()});
  }
  for (const auto& f : j.at("faces")) {
    mesh.faces.push_back(f.get<std::vector<int>>());
  }
  return mesh;
}

}  // namespace shearlift
