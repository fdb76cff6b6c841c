#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "shearlift/grid.hpp"
#include "shearlift/lift.hpp"

namespace shearlift {

/// Triangulated/quadrangulated graph sample over a disk grid.  Vertices
/// follow the grid's ring-major order (center last); params records the
/// disk parameter z of each vertex; faces are 0-based vertex index loops
/// (quads between consecutive rings plus a triangle fan around the
/// center when the grid includes it).
struct SurfaceMesh {
  ShearSpec spec;
  DiskGrid grid;
  ShearProvenance provenance;
  std::vector<Complex> params;
  std::vector<MinimalGraphPoint> vertices;
  std::vector<std::vector<int>> faces;
};

/// Lift every grid node of the configuration (closed-form shear when one applies,
/// quadrature otherwise; x3 always by contour quadrature).  Work is
/// distributed over a pool of n_threads workers (0 = hardware concurrency)
/// with each vertex written to its own slot, so the result is identical
/// regardless of the thread count.  NotASquare when the dilatation does
/// not lift; QuadratureFailure names the failing node.
SurfaceMesh sample_surface(const ShearSpec& spec, const DiskGrid& grid,
                           const QuadratureConfig& cfg, int n_threads = 0);

enum class MeshFormat { obj, csv, json };

/// V - E + F with edges counted once; a disk sample with center closes to 1.
int euler_characteristic(const SurfaceMesh& mesh);

/// Serialize: OBJ (v/f lines, 1-based indices), CSV (x1,x2,x3,re_z,im_z
/// per vertex), or JSON (full mesh, shortest round-trip doubles, fixed key
/// order, no timestamps — byte-identical across repeated runs).  Throws
/// IoFailure when the file cannot be written.
void export_mesh(const SurfaceMesh& mesh, MeshFormat format,
                 const std::filesystem::path& path);

/// Rebuild a mesh from its JSON export; export/import/export is
/// byte-identical.
SurfaceMesh import_mesh_json(const std::filesystem::path& path);

}  // namespace shearlift
