#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lamina/mesh.hpp"

// On-disk interchange. Meshes travel as JSON:
//
//   {
//     "dim": 2 | 3,
//     "num_layers": L,
//     "vertices_per_layer": N,
//     "layers": [[x, y(, z)], ...],   L*N entries, layer-major
//     "faces": [[i, j(, k)], ...]     0-based column indices
//   }
//
// Geometry snapshots go out as legacy ASCII VTK unstructured grids, readable
// by ParaView and meshio.

namespace lamina {

// Peeks at the "dim" field so callers can dispatch on dimension.
int mesh_json_dim(const std::string& path);

template <int D>
FoliatedMesh<D> read_mesh_json(const std::string& path);

template <int D>
void write_mesh_json(const FoliatedMesh<D>& mesh, std::span<const Vec<D>> positions,
                     const std::string& path);

template <int D>
void write_mesh_json(const FoliatedMesh<D>& mesh, const std::string& path) {
    write_mesh_json<D>(mesh, std::span<const Vec<D>>(mesh.rest_positions), path);
}

// Named per-vertex attachments for VTK point data.
template <int D>
struct VtkPointData {
    std::vector<std::pair<std::string, std::span<const Vec<D>>>> vectors;
    std::vector<std::pair<std::string, std::span<const double>>> scalars;
};

template <int D>
void write_vtk(const FoliatedMesh<D>& mesh, std::span<const Vec<D>> positions,
               const std::string& path, const VtkPointData<D>& point_data = {});

}  // namespace lamina
