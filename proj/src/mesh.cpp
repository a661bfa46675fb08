#include "lamina/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "lamina/errors.hpp"

namespace lamina {

namespace {

constexpr double kMinTransversalAngle = 1e-3;  // radians

// Parity of the permutation taking the face's listed order to ascending
// column order. Cell listings are swapped on odd parity so that a face wound
// consistently with the transversal direction yields positive cells.
template <int D>
bool sorted_is_even(const Face<D>& face, Face<D>& sorted) {
    sorted = face;
    int swaps = 0;
    for (int i = 0; i < D; ++i)
        for (int j = i + 1; j < D; ++j)
            if (sorted[j] < sorted[i]) {
                std::swap(sorted[i], sorted[j]);
                ++swaps;
            }
    return swaps % 2 == 0;
}

// The D cells of one prism, diagonals fixed by ascending column order,
// vertex listings fixed by the face winding.
template <int D>
void prism_cells(const Face<D>& face, int gap, int verts_per_layer,
                 std::array<Cell<D>, D>& out) {
    Face<D> s;
    bool even = sorted_is_even<D>(face, s);
    auto bot = [&](int c) { return gap * verts_per_layer + c; };
    auto top = [&](int c) { return (gap + 1) * verts_per_layer + c; };
    if constexpr (D == 3) {
        out[0] = {bot(s[0]), bot(s[1]), bot(s[2]), top(s[0])};
        out[1] = {bot(s[1]), bot(s[2]), top(s[0]), top(s[1])};
        out[2] = {bot(s[2]), top(s[0]), top(s[1]), top(s[2])};
    } else {
        out[0] = {bot(s[0]), bot(s[1]), top(s[0])};
        out[1] = {bot(s[1]), top(s[1]), top(s[0])};
    }
    if (!even)
        for (auto& cell : out) std::swap(cell[0], cell[1]);
}

}  // namespace

template <int D>
double cell_signed_volume(const Cell<D>& cell, std::span<const Vec<D>> pos) {
    if constexpr (D == 3) {
        Vec<3> e1 = pos[cell[1]] - pos[cell[0]];
        Vec<3> e2 = pos[cell[2]] - pos[cell[0]];
        Vec<3> e3 = pos[cell[3]] - pos[cell[0]];
        return dot(cross(e1, e2), e3) / 6.0;
    } else {
        Vec<2> e1 = pos[cell[1]] - pos[cell[0]];
        Vec<2> e2 = pos[cell[2]] - pos[cell[0]];
        return cross2(e1, e2) / 2.0;
    }
}

template <int D>
FoliatedMesh<D> build_foliated_mesh(const std::vector<Positions<D>>& layers,
                                    const std::vector<Face<D>>& faces) {
    if (layers.size() < 2) throw MeshError("need at least 2 layers");
    const int L = static_cast<int>(layers.size());
    const int N = static_cast<int>(layers[0].size());
    if (N < D) throw MeshError("need at least " + std::to_string(D) + " vertices per layer");
    for (int nu = 0; nu < L; ++nu)
        if (static_cast<int>(layers[nu].size()) != N) {
            std::ostringstream msg;
            msg << "layer " << nu << " has " << layers[nu].size() << " vertices, expected " << N;
            throw MeshError(msg.str());
        }
    if (faces.empty()) throw MeshError("no faces");
    for (size_t f = 0; f < faces.size(); ++f) {
        std::set<int> uniq;
        for (int c : faces[f]) {
            if (c < 0 || c >= N)
                throw MeshError("face " + std::to_string(f) + " references vertex " +
                                std::to_string(c) + " out of range");
            uniq.insert(c);
        }
        if (static_cast<int>(uniq.size()) != D)
            throw MeshError("degenerate face " + std::to_string(f));
    }

    FoliatedMesh<D> mesh;
    mesh.num_layers = L;
    mesh.verts_per_layer = N;
    mesh.faces = faces;
    mesh.rest_positions.reserve(static_cast<size_t>(L) * N);
    for (const auto& layer : layers)
        mesh.rest_positions.insert(mesh.rest_positions.end(), layer.begin(), layer.end());

    mesh.cells.reserve(static_cast<size_t>(L - 1) * faces.size() * D);
    mesh.cell_prism.reserve(mesh.cells.capacity());
    std::span<const Vec<D>> pos(mesh.rest_positions);
    std::vector<int> bad_prisms;
    for (int gap = 0; gap < L - 1; ++gap) {
        for (size_t f = 0; f < faces.size(); ++f) {
            int prism = gap * static_cast<int>(faces.size()) + static_cast<int>(f);
            std::array<Cell<D>, D> split;
            prism_cells<D>(faces[f], gap, N, split);
            bool ok = true;
            for (const auto& cell : split)
                if (cell_signed_volume<D>(cell, pos) <= 0.0) ok = false;
            if (!ok) {
                bad_prisms.push_back(prism);
                continue;
            }
            for (const auto& cell : split) {
                mesh.cells.push_back(cell);
                mesh.cell_prism.push_back(prism);
            }
        }
    }
    if (!bad_prisms.empty()) {
        std::ostringstream msg;
        msg << "inverted cells in " << bad_prisms.size() << " prism(s): ";
        for (size_t i = 0; i < bad_prisms.size() && i < 8; ++i) {
            int p = bad_prisms[i];
            msg << "(gap " << p / static_cast<int>(faces.size()) << ", face "
                << p % static_cast<int>(faces.size()) << ") ";
        }
        if (bad_prisms.size() > 8) msg << "...";
        msg << "- check face winding against the layer stacking direction";
        throw MeshError(msg.str());
    }

    // transversal field must not vanish anywhere
    for (int nu = 0; nu < L - 1; ++nu)
        for (int k = 0; k < N; ++k)
            if (norm2(pos[mesh.vertex_id(nu + 1, k)] - pos[mesh.vertex_id(nu, k)]) == 0.0)
                throw MeshError("zero-length transverse edge at layer " + std::to_string(nu) +
                                ", column " + std::to_string(k));

    std::set<std::pair<int, int>> edges;
    for (const auto& face : faces)
        for (int i = 0; i < D; ++i) {
            int a = face[i], b = face[(i + 1) % D];
            if constexpr (D == 2) {
                if (i == 1) break;  // a segment is a single edge
            }
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    mesh.layer_edges.assign(edges.begin(), edges.end());
    return mesh;
}

template <int D>
std::vector<LayerFrame<D>> compute_frames(const FoliatedMesh<D>& mesh,
                                          std::span<const Vec<D>> pos) {
    const int nfaces = static_cast<int>(mesh.faces.size());
    std::vector<LayerFrame<D>> frames(mesh.cells.size());
    const double min_det = std::sin(kMinTransversalAngle);
    for (size_t ci = 0; ci < mesh.cells.size(); ++ci) {
        int prism = mesh.cell_prism[ci];
        int gap = prism / nfaces;
        const Face<D>& face = mesh.faces[prism % nfaces];
        Vec<D> s{};
        for (int c : face) s += mesh.transverse_vector(pos, gap, c);
        Vec<D> n = normalized(s);
        Mat<D> C;
        if constexpr (D == 3) {
            Vec<3> e1 = pos[mesh.vertex_id(gap, face[1])] - pos[mesh.vertex_id(gap, face[0])];
            Vec<3> e2 = pos[mesh.vertex_id(gap, face[2])] - pos[mesh.vertex_id(gap, face[0])];
            Vec<3> t1 = normalized(e1);
            Vec<3> t2 = e2 - dot(e2, t1) * t1;
            double n2 = norm(t2);
            if (norm(e1) == 0.0 || n2 == 0.0)
                throw MeshError("degenerate layer face for cell " + std::to_string(ci));
            t2 *= 1.0 / n2;
            C.set_col(0, t1);
            C.set_col(1, t2);
            C.set_col(2, n);
        } else {
            Vec<2> e = pos[mesh.vertex_id(gap, face[1])] - pos[mesh.vertex_id(gap, face[0])];
            if (norm(e) == 0.0)
                throw MeshError("degenerate layer segment for cell " + std::to_string(ci));
            C.set_col(0, normalized(e));
            C.set_col(1, n);
        }
        if (std::abs(det(C)) < min_det)
            throw MeshError("transversality violation at cell " + std::to_string(ci));
        frames[ci].C = C;
    }
    return frames;
}

template <int D>
LayerGraph layer_graph(const FoliatedMesh<D>& mesh, std::span<const Vec<D>> pos, int layer) {
    if (layer < 0 || layer >= mesh.num_layers) throw MeshError("layer index out of range");
    const int N = mesh.verts_per_layer;
    LayerGraph g;
    g.num_vertices = N;
    std::vector<int> degree(N, 0);
    for (const auto& [a, b] : mesh.layer_edges) {
        ++degree[a];
        ++degree[b];
    }
    g.adj_offsets.assign(N + 1, 0);
    for (int i = 0; i < N; ++i) g.adj_offsets[i + 1] = g.adj_offsets[i] + degree[i];
    g.adj_columns.resize(g.adj_offsets[N]);
    g.adj_weights.resize(g.adj_offsets[N]);
    std::vector<int> fill(g.adj_offsets.begin(), g.adj_offsets.end() - 1);
    for (const auto& [a, b] : mesh.layer_edges) {
        double w = norm(pos[mesh.vertex_id(layer, a)] - pos[mesh.vertex_id(layer, b)]);
        g.adj_columns[fill[a]] = b;
        g.adj_weights[fill[a]++] = w;
        g.adj_columns[fill[b]] = a;
        g.adj_weights[fill[b]++] = w;
    }
    return g;
}

std::vector<double> dijkstra(const LayerGraph& graph, int source_column) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(graph.num_vertices, inf);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[source_column] = 0.0;
    heap.push({0.0, source_column});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        for (int e = graph.adj_offsets[u]; e < graph.adj_offsets[u + 1]; ++e) {
            int v = graph.adj_columns[e];
            double nd = d + graph.adj_weights[e];
            if (nd < dist[v]) {
                dist[v] = nd;
                heap.push({nd, v});
            }
        }
    }
    return dist;
}

template <int D>
double transverse_chain_length(const FoliatedMesh<D>& mesh, std::span<const Vec<D>> pos,
                               int column, int layer_a, int layer_b) {
    int lo = std::min(layer_a, layer_b), hi = std::max(layer_a, layer_b);
    double len = 0.0;
    for (int nu = lo; nu < hi; ++nu)
        len += norm(pos[mesh.vertex_id(nu + 1, column)] - pos[mesh.vertex_id(nu, column)]);
    return len;
}

template <int D>
double total_volume(const FoliatedMesh<D>& mesh, std::span<const Vec<D>> pos) {
    double v = 0.0;
    for (const auto& cell : mesh.cells) v += cell_signed_volume<D>(cell, pos);
    return v;
}

template <int D>
std::vector<double> lumped_vertex_volumes(const FoliatedMesh<D>& mesh,
                                          std::span<const Vec<D>> pos) {
    std::vector<double> w(mesh.num_vertices(), 0.0);
    for (const auto& cell : mesh.cells) {
        double share = cell_signed_volume<D>(cell, pos) / (D + 1);
        for (int v : cell) w[v] += share;
    }
    return w;
}

template double cell_signed_volume<2>(const Cell<2>&, std::span<const Vec<2>>);
template double cell_signed_volume<3>(const Cell<3>&, std::span<const Vec<3>>);
template FoliatedMesh<2> build_foliated_mesh<2>(const std::vector<Positions<2>>&,
                                                const std::vector<Face<2>>&);
template FoliatedMesh<3> build_foliated_mesh<3>(const std::vector<Positions<3>>&,
                                                const std::vector<Face<3>>&);
template std::vector<LayerFrame<2>> compute_frames<2>(const FoliatedMesh<2>&,
                                                      std::span<const Vec<2>>);
template std::vector<LayerFrame<3>> compute_frames<3>(const FoliatedMesh<3>&,
                                                      std::span<const Vec<3>>);
template LayerGraph layer_graph<2>(const FoliatedMesh<2>&, std::span<const Vec<2>>, int);
template LayerGraph layer_graph<3>(const FoliatedMesh<3>&, std::span<const Vec<3>>, int);
template double transverse_chain_length<2>(const FoliatedMesh<2>&, std::span<const Vec<2>>, int,
                                           int, int);
template double transverse_chain_length<3>(const FoliatedMesh<3>&, std::span<const Vec<3>>, int,
                                           int, int);
template double total_volume<2>(const FoliatedMesh<2>&, std::span<const Vec<2>>);
template double total_volume<3>(const FoliatedMesh<3>&, std::span<const Vec<3>>);
template std::vector<double> lumped_vertex_volumes<2>(const FoliatedMesh<2>&,
                                                      std::span<const Vec<2>>);
template std::vector<double> lumped_vertex_volumes<3>(const FoliatedMesh<3>&,
                                                      std::span<const Vec<3>>);

}  // namespace lamina
