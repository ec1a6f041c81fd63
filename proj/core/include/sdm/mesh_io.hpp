#pragma once

#include <string>

#include "sdm/mesh.hpp"

namespace sdm {

enum class MeshFormat { Obj, PlyAscii, PlyBinary };

// Format chosen by extension: .obj, .ply (binary little-endian by default).
// OBJ polygons are fan-triangulated; PLY face labels load from the uchar
// `label` property (0 unknown, 1 structure, 2 furniture).
TriMesh load_mesh(const std::string& path);

void save_mesh(const TriMesh& mesh, const std::string& path);
void save_mesh(const TriMesh& mesh, const std::string& path, MeshFormat format);

}  // namespace sdm
