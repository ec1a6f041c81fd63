#include "sdm/mesh_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace sdm {

namespace {

namespace fs = std::filesystem;

std::string lower_ext(const std::string& path) {
  std::string ext = fs::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext;
}

// ---------------------------------------------------------------- OBJ ----

void triangulate_polygon(TriMesh& mesh, const std::vector<int>& poly,
                         const std::vector<std::array<double, 2>>& uv_pool,
                         const std::vector<int>& poly_uv) {
  for (size_t k = 1; k + 1 < poly.size(); ++k) {
    mesh.faces.push_back({poly[0], poly[k], poly[k + 1]});
    if (!poly_uv.empty()) {
      auto pick = [&](int idx) -> Vec2 {
        if (idx < 0 || idx >= static_cast<int>(uv_pool.size())) return Vec2::Zero();
        return Vec2(uv_pool[idx][0], uv_pool[idx][1]);
      };
      mesh.face_uvs.push_back({pick(poly_uv[0]), pick(poly_uv[k]), pick(poly_uv[k + 1])});
    }
  }
}

std::string find_mtl_atlas(const fs::path& mtl_path) {
  std::ifstream in(mtl_path);
  if (!in) return {};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "map_Kd") {
      std::string name;
      ss >> name;
      return (mtl_path.parent_path() / name).string();
    }
  }
  return {};
}

TriMesh load_obj(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("obj: cannot open " + path);
  TriMesh mesh;
  std::vector<std::array<double, 2>> uvs;
  bool any_uv_face = false;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag == "v") {
      double x, y, z;
      if (!(ss >> x >> y >> z)) {
        throw ParseError("obj: bad vertex at line " + std::to_string(line_no));
      }
      mesh.vertices.emplace_back(x, y, z);
    } else if (tag == "vt") {
      double u, v = 0;
      if (!(ss >> u)) throw ParseError("obj: bad texcoord at line " + std::to_string(line_no));
      ss >> v;
      uvs.push_back({u, v});
    } else if (tag == "f") {
      std::vector<int> poly;
      std::vector<int> poly_uv;
      std::string vert;
      while (ss >> vert) {
        int vi = 0, ti = -1;
        size_t s1 = vert.find('/');
        try {
          vi = std::stoi(vert.substr(0, s1));
          if (s1 != std::string::npos) {
            size_t s2 = vert.find('/', s1 + 1);
            std::string t = vert.substr(s1 + 1, s2 == std::string::npos ? s2 : s2 - s1 - 1);
            if (!t.empty()) ti = std::stoi(t);
          }
        } catch (const std::exception&) {
          throw ParseError("obj: bad face token '" + vert + "' at line " + std::to_string(line_no));
        }
        // Negative OBJ indices are relative to the end of the list so far.
        int nv = static_cast<int>(mesh.vertices.size());
        int idx = vi > 0 ? vi - 1 : nv + vi;
        if (idx < 0 || idx >= nv) {
          throw ValidationError("obj: face index " + std::to_string(vi) + " out of range at line " +
                                std::to_string(line_no));
        }
        poly.push_back(idx);
        if (ti > 0) {
          poly_uv.push_back(ti - 1);
          any_uv_face = true;
        } else if (ti == 0 || ti < -1) {
          poly_uv.push_back(static_cast<int>(uvs.size()) + ti);
        }
      }
      if (poly.size() < 3) throw ParseError("obj: face with <3 vertices at line " + std::to_string(line_no));
      if (poly_uv.size() != poly.size()) poly_uv.clear();
      triangulate_polygon(mesh, poly, uvs, poly_uv);
    } else if (tag == "mtllib") {
      std::string name;
      ss >> name;
      std::string atlas = find_mtl_atlas(fs::path(path).parent_path() / name);
      if (!atlas.empty()) mesh.atlas_path = atlas;
    }
  }
  if (!any_uv_face) mesh.face_uvs.clear();
  if (!mesh.face_uvs.empty()) mesh.face_uvs.resize(mesh.faces.size(), {Vec2::Zero(), Vec2::Zero(), Vec2::Zero()});
  mesh.validate();
  return mesh;
}

void save_obj(const TriMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("obj: cannot write " + path);
  char buf[128];
  if (!mesh.atlas_path.empty()) {
    fs::path mtl = fs::path(path);
    mtl.replace_extension(".mtl");
    out << "mtllib " << mtl.filename().string() << "\n";
    std::ofstream mout(mtl);
    if (!mout) throw IoError("obj: cannot write " + mtl.string());
    mout << "newmtl atlas\nKd 1 1 1\nmap_Kd " << fs::path(mesh.atlas_path).filename().string()
         << "\n";
  }
  for (const Vec3& v : mesh.vertices) {
    std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g\n", v.x(), v.y(), v.z());
    out << buf;
  }
  if (mesh.has_uvs()) {
    for (const auto& tri_uv : mesh.face_uvs) {
      for (const Vec2& uv : tri_uv) {
        std::snprintf(buf, sizeof(buf), "vt %.17g %.17g\n", uv.x(), uv.y());
        out << buf;
      }
    }
    if (!mesh.atlas_path.empty()) out << "usemtl atlas\n";
    for (size_t f = 0; f < mesh.faces.size(); ++f) {
      const auto& t = mesh.faces[f];
      size_t uv0 = f * 3 + 1;
      out << "f " << t[0] + 1 << "/" << uv0 << " " << t[1] + 1 << "/" << uv0 + 1 << " "
          << t[2] + 1 << "/" << uv0 + 2 << "\n";
    }
  } else {
    for (const auto& t : mesh.faces) {
      out << "f " << t[0] + 1 << " " << t[1] + 1 << " " << t[2] + 1 << "\n";
    }
  }
  if (!out) throw IoError("obj: write failed for " + path);
}

// ---------------------------------------------------------------- PLY ----

enum class PlyType { I8, U8, I16, U16, I32, U32, F32, F64 };

size_t ply_type_size(PlyType t) {
  switch (t) {
    case PlyType::I8:
    case PlyType::U8: return 1;
    case PlyType::I16:
    case PlyType::U16: return 2;
    case PlyType::I32:
    case PlyType::U32:
    case PlyType::F32: return 4;
    case PlyType::F64: return 8;
  }
  return 0;
}

PlyType parse_ply_type(const std::string& s) {
  if (s == "char" || s == "int8") return PlyType::I8;
  if (s == "uchar" || s == "uint8") return PlyType::U8;
  if (s == "short" || s == "int16") return PlyType::I16;
  if (s == "ushort" || s == "uint16") return PlyType::U16;
  if (s == "int" || s == "int32") return PlyType::I32;
  if (s == "uint" || s == "uint32") return PlyType::U32;
  if (s == "float" || s == "float32") return PlyType::F32;
  if (s == "double" || s == "float64") return PlyType::F64;
  throw ParseError("ply: unknown type " + s);
}

struct PlyProperty {
  std::string name;
  bool is_list = false;
  PlyType count_type = PlyType::U8;
  PlyType value_type = PlyType::F32;
};

struct PlyElement {
  std::string name;
  size_t count = 0;
  std::vector<PlyProperty> properties;
};

class PlyReader {
 public:
  PlyReader(std::istream& in, bool binary) : in_(in), binary_(binary) {}

  double read_scalar(PlyType t) {
    if (binary_) {
      unsigned char raw[8];
      in_.read(reinterpret_cast<char*>(raw), ply_type_size(t));
      if (!in_) throw ParseError("ply: truncated binary data");
      switch (t) {
        case PlyType::I8: return static_cast<double>(static_cast<signed char>(raw[0]));
        case PlyType::U8: return raw[0];
        case PlyType::I16: { std::int16_t v; std::memcpy(&v, raw, 2); return v; }
        case PlyType::U16: { std::uint16_t v; std::memcpy(&v, raw, 2); return v; }
        case PlyType::I32: { std::int32_t v; std::memcpy(&v, raw, 4); return v; }
        case PlyType::U32: { std::uint32_t v; std::memcpy(&v, raw, 4); return v; }
        case PlyType::F32: { float v; std::memcpy(&v, raw, 4); return v; }
        case PlyType::F64: { double v; std::memcpy(&v, raw, 8); return v; }
      }
      return 0;
    }
    double v;
    if (!(in_ >> v)) throw ParseError("ply: truncated ascii data");
    return v;
  }

 private:
  std::istream& in_;
  bool binary_;
};

TriMesh load_ply(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("ply: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("ply: empty file " + path);
  if (line.size() && line.back() == '\r') line.pop_back();
  if (line != "ply") throw ParseError("ply: missing magic in " + path);

  bool binary = false;
  std::vector<PlyElement> elements;
  while (std::getline(in, line)) {
    if (line.size() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "comment" || tag == "obj_info" || tag.empty()) continue;
    if (tag == "format") {
      std::string fmt;
      ss >> fmt;
      if (fmt == "ascii") {
        binary = false;
      } else if (fmt == "binary_little_endian") {
        binary = true;
      } else {
        throw ParseError("ply: unsupported format " + fmt);
      }
    } else if (tag == "element") {
      PlyElement el;
      ss >> el.name >> el.count;
      elements.push_back(el);
    } else if (tag == "property") {
      if (elements.empty()) throw ParseError("ply: property before element");
      PlyProperty prop;
      std::string t;
      ss >> t;
      if (t == "list") {
        prop.is_list = true;
        std::string ct, vt;
        ss >> ct >> vt >> prop.name;
        prop.count_type = parse_ply_type(ct);
        prop.value_type = parse_ply_type(vt);
      } else {
        prop.value_type = parse_ply_type(t);
        ss >> prop.name;
      }
      elements.back().properties.push_back(prop);
    } else if (tag == "end_header") {
      break;
    } else {
      throw ParseError("ply: unexpected header line '" + line + "'");
    }
  }

  TriMesh mesh;
  PlyReader reader(in, binary);
  for (const PlyElement& el : elements) {
    if (el.name == "vertex") {
      mesh.vertices.reserve(el.count);
      for (size_t i = 0; i < el.count; ++i) {
        Vec3 v = Vec3::Zero();
        for (const PlyProperty& p : el.properties) {
          if (p.is_list) {
            size_t n = static_cast<size_t>(reader.read_scalar(p.count_type));
            for (size_t k = 0; k < n; ++k) reader.read_scalar(p.value_type);
            continue;
          }
          double value = reader.read_scalar(p.value_type);
          if (p.name == "x") v.x() = value;
          else if (p.name == "y") v.y() = value;
          else if (p.name == "z") v.z() = value;
        }
        mesh.vertices.push_back(v);
      }
    } else if (el.name == "face") {
      bool has_label = false, has_uv = false;
      for (const PlyProperty& p : el.properties) {
        if (p.name == "label") has_label = true;
        if (p.name == "texcoord") has_uv = true;
      }
      for (size_t i = 0; i < el.count; ++i) {
        std::vector<int> poly;
        FaceLabel label = FaceLabel::Unknown;
        std::vector<double> uv;
        for (const PlyProperty& p : el.properties) {
          if (p.is_list) {
            size_t n = static_cast<size_t>(reader.read_scalar(p.count_type));
            if (p.name == "vertex_indices" || p.name == "vertex_index") {
              poly.resize(n);
              for (size_t k = 0; k < n; ++k) {
                poly[k] = static_cast<int>(reader.read_scalar(p.value_type));
              }
            } else if (p.name == "texcoord") {
              uv.resize(n);
              for (size_t k = 0; k < n; ++k) uv[k] = reader.read_scalar(p.value_type);
            } else {
              for (size_t k = 0; k < n; ++k) reader.read_scalar(p.value_type);
            }
          } else {
            double value = reader.read_scalar(p.value_type);
            if (p.name == "label") {
              int raw = static_cast<int>(value);
              if (raw < 0 || raw > 2) throw ParseError("ply: label out of range");
              label = static_cast<FaceLabel>(raw);
            }
          }
        }
        if (poly.size() < 3) throw ParseError("ply: face with <3 vertices");
        size_t before = mesh.faces.size();
        for (size_t k = 1; k + 1 < poly.size(); ++k) {
          mesh.faces.push_back({poly[0], poly[k], poly[k + 1]});
        }
        size_t added = mesh.faces.size() - before;
        if (has_label) mesh.face_labels.insert(mesh.face_labels.end(), added, label);
        if (has_uv && uv.size() == poly.size() * 2) {
          for (size_t k = 1; k + 1 < poly.size(); ++k) {
            mesh.face_uvs.push_back({Vec2(uv[0], uv[1]), Vec2(uv[2 * k], uv[2 * k + 1]),
                                     Vec2(uv[2 * k + 2], uv[2 * k + 3])});
          }
        } else if (has_uv) {
          mesh.face_uvs.insert(mesh.face_uvs.end(), added,
                               {Vec2::Zero(), Vec2::Zero(), Vec2::Zero()});
        }
      }
    } else {
      // Unknown element: consume its data.
      for (size_t i = 0; i < el.count; ++i) {
        for (const PlyProperty& p : el.properties) {
          if (p.is_list) {
            size_t n = static_cast<size_t>(reader.read_scalar(p.count_type));
            for (size_t k = 0; k < n; ++k) reader.read_scalar(p.value_type);
          } else {
            reader.read_scalar(p.value_type);
          }
        }
      }
    }
  }
  mesh.validate();
  return mesh;
}

template <typename T>
void write_le(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

void save_ply(const TriMesh& mesh, const std::string& path, bool binary) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("ply: cannot write " + path);
  const bool labels = mesh.has_labels();
  const bool uvs = mesh.has_uvs();
  out << "ply\nformat " << (binary ? "binary_little_endian" : "ascii") << " 1.0\n";
  out << "element vertex " << mesh.vertices.size() << "\n";
  out << "property double x\nproperty double y\nproperty double z\n";
  out << "element face " << mesh.faces.size() << "\n";
  out << "property list uchar int vertex_indices\n";
  if (labels) out << "property uchar label\n";
  if (uvs) out << "property list uchar double texcoord\n";
  out << "end_header\n";

  char buf[160];
  if (binary) {
    for (const Vec3& v : mesh.vertices) {
      write_le(out, v.x());
      write_le(out, v.y());
      write_le(out, v.z());
    }
    for (size_t f = 0; f < mesh.faces.size(); ++f) {
      write_le<std::uint8_t>(out, 3);
      for (int idx : mesh.faces[f]) write_le<std::int32_t>(out, idx);
      if (labels) write_le<std::uint8_t>(out, static_cast<std::uint8_t>(mesh.face_labels[f]));
      if (uvs) {
        write_le<std::uint8_t>(out, 6);
        for (const Vec2& uv : mesh.face_uvs[f]) {
          write_le(out, uv.x());
          write_le(out, uv.y());
        }
      }
    }
  } else {
    for (const Vec3& v : mesh.vertices) {
      std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", v.x(), v.y(), v.z());
      out << buf;
    }
    for (size_t f = 0; f < mesh.faces.size(); ++f) {
      const auto& t = mesh.faces[f];
      out << "3 " << t[0] << " " << t[1] << " " << t[2];
      if (labels) out << " " << static_cast<int>(mesh.face_labels[f]);
      if (uvs) {
        out << " 6";
        for (const Vec2& uv : mesh.face_uvs[f]) {
          std::snprintf(buf, sizeof(buf), " %.17g %.17g", uv.x(), uv.y());
          out << buf;
        }
      }
      out << "\n";
    }
  }
  if (!out) throw IoError("ply: write failed for " + path);
}

}  // namespace

TriMesh load_mesh(const std::string& path) {
  std::string ext = lower_ext(path);
  if (ext == ".obj") return load_obj(path);
  if (ext == ".ply") return load_ply(path);
  throw ParseError("mesh: unsupported extension '" + ext + "' for " + path);
}

void save_mesh(const TriMesh& mesh, const std::string& path, MeshFormat format) {
  mesh.validate();
  switch (format) {
    case MeshFormat::Obj: save_obj(mesh, path); return;
    case MeshFormat::PlyAscii: save_ply(mesh, path, false); return;
    case MeshFormat::PlyBinary: save_ply(mesh, path, true); return;
  }
}

void save_mesh(const TriMesh& mesh, const std::string& path) {
  std::string ext = lower_ext(path);
  if (ext == ".obj") {
    save_mesh(mesh, path, MeshFormat::Obj);
  } else if (ext == ".ply") {
    save_mesh(mesh, path, MeshFormat::PlyBinary);
  } else {
    throw ParseError("mesh: unsupported extension '" + ext + "' for " + path);
  }
}

}  // namespace sdm
