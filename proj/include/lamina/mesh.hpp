#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "lamina/linalg.hpp"

// Layered volume meshes: a stack of identically connected layers joined by
// transverse edges, with the space between consecutive layers filled by
// simplices (tetrahedra in 3D, triangles in 2D). Vertices are indexed
// layer-major: global id = layer * verts_per_layer + column.

namespace lamina {

template <int D>
using Positions = std::vector<Vec<D>>;

// A simplex cell: D+1 global vertex ids.
template <int D>
using Cell = std::array<int, D + 1>;

// A layer face: triangle (3D) or polyline segment (2D) over column indices.
template <int D>
using Face = std::array<int, D>;

template <int D>
struct FoliatedMesh {
    int num_layers = 0;
    int verts_per_layer = 0;
    Positions<D> rest_positions;       // layer-major, num_layers * verts_per_layer
    std::vector<Face<D>> faces;        // shared by all layers
    std::vector<Cell<D>> cells;        // conforming simplex decomposition
    std::vector<int> cell_prism;       // prism id = gap * faces.size() + face index
    std::vector<std::pair<int, int>> layer_edges;  // unique in-layer edges, column pairs

    int num_vertices() const { return num_layers * verts_per_layer; }
    int vertex_id(int layer, int column) const { return layer * verts_per_layer + column; }
    int layer_of(int vid) const { return vid / verts_per_layer; }
    int column_of(int vid) const { return vid % verts_per_layer; }
    int middle_layer() const { return (num_layers - 1) / 2; }
    int cells_per_prism() const { return D; }  // 3 tets per prism in 3D, 2 tris in 2D

    // Discrete transversal vector S at (layer, column); the top layer copies
    // the vector below it.
    Vec<D> transverse_vector(std::span<const Vec<D>> pos, int layer, int column) const {
        int lo = (layer == num_layers - 1) ? layer - 1 : layer;
        return pos[vertex_id(lo + 1, column)] - pos[vertex_id(lo, column)];
    }
};

// Orthonormal layer frame at a cell barycenter. Columns of C: the layer
// tangent(s) followed by the unit transversal direction.
template <int D>
struct LayerFrame {
    Mat<D> C;
    Vec<D> tangent(int i) const { return C.col(i); }
    Vec<D> transversal() const { return C.col(D - 1); }
};

// Builds the mesh from per-layer vertex arrays plus the shared connectivity.
// Prisms are split along quad diagonals chosen by column-index order, which
// makes neighbouring prisms agree on shared faces. Throws MeshError on
// mismatched layers, degenerate faces, or inverted cells.
template <int D>
FoliatedMesh<D> build_foliated_mesh(const std::vector<Positions<D>>& layers,
                                    const std::vector<Face<D>>& faces);

// One frame per cell, evaluated at the cell barycenter of the given vertex
// positions: tangents from the generating prism's bottom face, transversal
// from the prism's averaged transverse edges. Throws MeshError when the
// transversal direction falls into the layer tangent plane.
template <int D>
std::vector<LayerFrame<D>> compute_frames(const FoliatedMesh<D>& mesh,
                                          std::span<const Vec<D>> positions);

template <int D>
std::vector<LayerFrame<D>> compute_frames(const FoliatedMesh<D>& mesh) {
    return compute_frames(mesh, std::span<const Vec<D>>(mesh.rest_positions));
}

// Edge-weighted graph over one layer's vertices; weights are Euclidean edge
// lengths at the given positions.
struct LayerGraph {
    int num_vertices = 0;
    std::vector<int> adj_offsets;    // CSR offsets, size num_vertices + 1
    std::vector<int> adj_columns;    // neighbour column index
    std::vector<double> adj_weights;
};

template <int D>
LayerGraph layer_graph(const FoliatedMesh<D>& mesh, std::span<const Vec<D>> positions,
                       int layer);

// Shortest-path distances from `source_column` to every vertex of the layer.
// Unreachable vertices get +infinity.
std::vector<double> dijkstra(const LayerGraph& graph, int source_column);

// Sum of transverse edge lengths along column k between two layers.
template <int D>
double transverse_chain_length(const FoliatedMesh<D>& mesh, std::span<const Vec<D>> positions,
                               int column, int layer_a, int layer_b);

// Signed simplex volume (area in 2D) at the given positions.
template <int D>
double cell_signed_volume(const Cell<D>& cell, std::span<const Vec<D>> positions);

template <int D>
double total_volume(const FoliatedMesh<D>& mesh, std::span<const Vec<D>> positions);

// Per-vertex lumped volume: 1/(D+1) of the total volume of incident cells.
template <int D>
std::vector<double> lumped_vertex_volumes(const FoliatedMesh<D>& mesh,
                                          std::span<const Vec<D>> positions);

}  // namespace lamina
