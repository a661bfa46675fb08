#include "lamina/mesh_io.hpp"

#include <fstream>
#include <iomanip>

#include "json.hpp"
#include "lamina/errors.hpp"

namespace lamina {

namespace {

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError(path + ": " + e.what());
    }
    return j;
}

}  // namespace

int mesh_json_dim(const std::string& path) {
    nlohmann::json j = load_json(path);
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw IoError(path + ": missing integer field \"dim\"");
    int dim = j["dim"].get<int>();
    if (dim != 2 && dim != 3) throw IoError(path + ": dim must be 2 or 3");
    return dim;
}

template <int D>
FoliatedMesh<D> read_mesh_json(const std::string& path) {
    nlohmann::json j = load_json(path);
    for (const char* key : {"dim", "num_layers", "vertices_per_layer", "layers", "faces"})
        if (!j.contains(key)) throw IoError(path + ": missing field \"" + key + "\"");
    if (j["dim"].get<int>() != D)
        throw IoError(path + ": dim " + j["dim"].dump() + " does not match expected " +
                      std::to_string(D));
    const int L = j["num_layers"].get<int>();
    const int N = j["vertices_per_layer"].get<int>();
    const auto& jverts = j["layers"];
    const auto& jfaces = j["faces"];
    if (!jverts.is_array() || static_cast<int>(jverts.size()) != L * N)
        throw IoError(path + ": \"layers\" must hold num_layers * vertices_per_layer entries");

    std::vector<Positions<D>> layers(L);
    for (int nu = 0; nu < L; ++nu) {
        layers[nu].resize(N);
        for (int k = 0; k < N; ++k) {
            const auto& row = jverts[nu * N + k];
            if (!row.is_array() || static_cast<int>(row.size()) != D)
                throw IoError(path + ": vertex " + std::to_string(nu * N + k) + " needs " +
                              std::to_string(D) + " coordinates");
            for (int a = 0; a < D; ++a) layers[nu][k][a] = row[a].get<double>();
        }
    }
    std::vector<Face<D>> faces(jfaces.size());
    for (size_t f = 0; f < jfaces.size(); ++f) {
        const auto& row = jfaces[f];
        if (!row.is_array() || static_cast<int>(row.size()) != D)
            throw IoError(path + ": face " + std::to_string(f) + " needs " + std::to_string(D) +
                          " vertex indices");
        for (int a = 0; a < D; ++a) faces[f][a] = row[a].get<int>();
    }
    return build_foliated_mesh<D>(layers, faces);
}

template <int D>
void write_mesh_json(const FoliatedMesh<D>& mesh, std::span<const Vec<D>> positions,
                     const std::string& path) {
    nlohmann::json j;
    j["dim"] = D;
    j["num_layers"] = mesh.num_layers;
    j["vertices_per_layer"] = mesh.verts_per_layer;
    auto verts = nlohmann::json::array();
    for (const auto& p : positions) {
        auto row = nlohmann::json::array();
        for (int a = 0; a < D; ++a) row.push_back(p[a]);
        verts.push_back(std::move(row));
    }
    j["layers"] = std::move(verts);
    auto faces = nlohmann::json::array();
    for (const auto& f : mesh.faces) {
        auto row = nlohmann::json::array();
        for (int a = 0; a < D; ++a) row.push_back(f[a]);
        faces.push_back(std::move(row));
    }
    j["faces"] = std::move(faces);
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << j.dump(2) << "\n";
}

template <int D>
void write_vtk(const FoliatedMesh<D>& mesh, std::span<const Vec<D>> positions,
               const std::string& path, const VtkPointData<D>& point_data) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << std::setprecision(17);
    out << "# vtk DataFile Version 3.0\n";
    out << "layered mesh\n";
    out << "ASCII\n";
    out << "DATASET UNSTRUCTURED_GRID\n";
    out << "POINTS " << positions.size() << " double\n";
    for (const auto& p : positions) {
        out << p[0] << " " << p[1] << " " << (D == 3 ? p[D - 1] : 0.0) << "\n";
    }
    const int n = static_cast<int>(mesh.cells.size());
    out << "CELLS " << n << " " << n * (D + 2) << "\n";
    for (const auto& cell : mesh.cells) {
        out << D + 1;
        for (int v : cell) out << " " << v;
        out << "\n";
    }
    out << "CELL_TYPES " << n << "\n";
    const int vtk_type = (D == 3) ? 10 : 5;  // tetrahedron : triangle
    for (int i = 0; i < n; ++i) out << vtk_type << "\n";

    if (!point_data.vectors.empty() || !point_data.scalars.empty()) {
        out << "POINT_DATA " << positions.size() << "\n";
        for (const auto& [name, vals] : point_data.vectors) {
            if (vals.size() != positions.size())
                throw IoError("point vector field \"" + name + "\" has wrong size");
            out << "VECTORS " << name << " double\n";
            for (const auto& v : vals)
                out << v[0] << " " << v[1] << " " << (D == 3 ? v[D - 1] : 0.0) << "\n";
        }
        for (const auto& [name, vals] : point_data.scalars) {
            if (vals.size() != positions.size())
                throw IoError("point scalar field \"" + name + "\" has wrong size");
            out << "SCALARS " << name << " double 1\n";
            out << "LOOKUP_TABLE default\n";
            for (double s : vals) out << s << "\n";
        }
    }
}

template FoliatedMesh<2> read_mesh_json<2>(const std::string&);
template FoliatedMesh<3> read_mesh_json<3>(const std::string&);
template void write_mesh_json<2>(const FoliatedMesh<2>&, std::span<const Vec<2>>,
                                 const std::string&);
template void write_mesh_json<3>(const FoliatedMesh<3>&, std::span<const Vec<3>>,
                                 const std::string&);
template void write_vtk<2>(const FoliatedMesh<2>&, std::span<const Vec<2>>, const std::string&,
                           const VtkPointData<2>&);
template void write_vtk<3>(const FoliatedMesh<3>&, std::span<const Vec<3>>, const std::string&,
                           const VtkPointData<3>&);

}  // namespace lamina
