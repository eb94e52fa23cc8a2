#include "tongue/geom/ply.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "tongue/error.hpp"

namespace tongue::geom {

namespace {

constexpr const char* kCoordFmt = "%.17g";

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), kCoordFmt, v);
  return buf;
}

struct PlyHeader {
  PlyFormat format = PlyFormat::kAscii;
  long vertex_count = 0;
  long face_count = 0;
  bool has_normals = false;
  // per-vertex scalar properties in declaration order; "x","y","z","nx","ny","nz" recognized
  std::vector<std::string> vertex_props;
  std::vector<bool> vertex_prop_is_double;  // double vs float storage (binary)
  long header_end = 0;                      // byte offset just past end_header newline
};

PlyHeader parse_header(std::istream& in, const std::string& path) {
  PlyHeader h;
  std::string line;
  if (!std::getline(in, line)) fail("ply: empty file: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "ply") fail("ply: malformed header (missing magic) in " + path);

  enum class Section { kNone, kVertex, kFace } section = Section::kNone;
  bool saw_format = false, saw_end = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "comment" || tok == "obj_info" || tok.empty()) continue;
    if (tok == "format") {
      std::string fmt, version;
      ls >> fmt >> version;
      if (fmt == "ascii")
        h.format = PlyFormat::kAscii;
      else if (fmt == "binary_little_endian")
        h.format = PlyFormat::kBinaryLittleEndian;
      else
        fail("ply: unsupported format '" + fmt + "' in " + path);
      saw_format = true;
    } else if (tok == "element") {
      std::string name;
      long count = -1;
      ls >> name >> count;
      if (count < 0) fail("ply: malformed element line in " + path);
      if (name == "vertex") {
        h.vertex_count = count;
        section = Section::kVertex;
      } else if (name == "face") {
        h.face_count = count;
        section = Section::kFace;
      } else {
        fail("ply: unsupported element '" + name + "' in " + path);
      }
    } else if (tok == "property") {
      std::string type;
      ls >> type;
      if (type == "list") {
        if (section != Section::kFace) fail("ply: list property outside face element in " + path);
        // count type + index type + name, e.g. "list uchar int vertex_indices"
      } else if (section == Section::kVertex) {
        std::string name;
        ls >> name;
        if (type != "float" && type != "float32" && type != "double" && type != "float64")
          fail("ply: unsupported vertex property type '" + type + "' in " + path);
        h.vertex_props.push_back(name);
        h.vertex_prop_is_double.push_back(type == "double" || type == "float64");
        if (name == "nx") h.has_normals = true;
      }
    } else if (tok == "end_header") {
      saw_end = true;
      break;
    } else {
      fail("ply: malformed header line '" + line + "' in " + path);
    }
  }
  if (!saw_format || !saw_end) fail("ply: malformed header in " + path);
  if (h.vertex_count > 0 && h.vertex_props.size() < 3)
    fail("ply: vertex element lacks x y z properties in " + path);
  h.header_end = in.tellg();
  return h;
}

void write_header(std::ostream& out, PlyFormat format, long nv, bool normals, long nf) {
  out << "ply\n";
  out << "format " << (format == PlyFormat::kAscii ? "ascii" : "binary_little_endian") << " 1.0\n";
  out << "element vertex " << nv << "\n";
  out << "property double x\nproperty double y\nproperty double z\n";
  if (normals) out << "property double nx\nproperty double ny\nproperty double nz\n";
  if (nf >= 0) {
    out << "element face " << nf << "\n";
    out << "property list uchar int vertex_indices\n";
  }
  out << "end_header\n";
}

void write_vertices(std::ostream& out, PlyFormat format, const std::vector<Vec3>& pts,
                    const std::vector<Vec3>& normals) {
  const bool with_n = !normals.empty();
  if (format == PlyFormat::kAscii) {
    for (size_t i = 0; i < pts.size(); ++i) {
      out << format_double(pts[i].x()) << ' ' << format_double(pts[i].y()) << ' '
          << format_double(pts[i].z());
      if (with_n)
        out << ' ' << format_double(normals[i].x()) << ' ' << format_double(normals[i].y()) << ' '
            << format_double(normals[i].z());
      out << '\n';
    }
  } else {
    for (size_t i = 0; i < pts.size(); ++i) {
      double row[6] = {pts[i].x(), pts[i].y(), pts[i].z(), 0, 0, 0};
      int n = 3;
      if (with_n) {
        row[3] = normals[i].x();
        row[4] = normals[i].y();
        row[5] = normals[i].z();
        n = 6;
      }
      out.write(reinterpret_cast<const char*>(row), n * sizeof(double));
    }
  }
}

double read_binary_scalar(std::istream& in, bool is_double, const std::string& path) {
  if (is_double) {
    double v;
    in.read(reinterpret_cast<char*>(&v), sizeof(v));
    if (!in) fail("ply: truncated binary vertex data in " + path);
    return v;
  }
  float v;
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  if (!in) fail("ply: truncated binary vertex data in " + path);
  return v;
}

void read_vertices(std::istream& in, const PlyHeader& h, const std::string& path,
                   std::vector<Vec3>& pts, std::vector<Vec3>& normals) {
  pts.resize(h.vertex_count);
  if (h.has_normals) normals.resize(h.vertex_count);
  const auto& props = h.vertex_props;
  for (long i = 0; i < h.vertex_count; ++i) {
    Vec3 p = Vec3::Zero(), nrm = Vec3::Zero();
    if (h.format == PlyFormat::kAscii) {
      std::string line;
      do {
        if (!std::getline(in, line)) fail("ply: truncated vertex data in " + path);
      } while (line.empty());
      std::istringstream ls(line);
      for (const auto& name : props) {
        double v;
        if (!(ls >> v)) fail("ply: malformed vertex line in " + path);
        if (name == "x") p.x() = v;
        else if (name == "y") p.y() = v;
        else if (name == "z") p.z() = v;
        else if (name == "nx") nrm.x() = v;
        else if (name == "ny") nrm.y() = v;
        else if (name == "nz") nrm.z() = v;
      }
    } else {
      for (size_t k = 0; k < props.size(); ++k) {
        const double v = read_binary_scalar(in, h.vertex_prop_is_double[k], path);
        const auto& name = props[k];
        if (name == "x") p.x() = v;
        else if (name == "y") p.y() = v;
        else if (name == "z") p.z() = v;
        else if (name == "nx") nrm.x() = v;
        else if (name == "ny") nrm.y() = v;
        else if (name == "nz") nrm.z() = v;
      }
    }
    pts[i] = p;
    if (h.has_normals) normals[i] = nrm;
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("ply: cannot open file: " + path);
  return in;
}

}  // namespace

void write_ply(const std::string& path, const PointCloud& cloud, PlyFormat format) {
  cloud.validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("ply: cannot open file for writing: " + path);
  write_header(out, format, cloud.size(), cloud.has_normals(), -1);
  write_vertices(out, format, cloud.points, cloud.normals);
  if (!out) fail("ply: write failed: " + path);
}

void write_ply(const std::string& path, const TriMesh& mesh, PlyFormat format) {
  mesh.validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("ply: cannot open file for writing: " + path);
  write_header(out, format, mesh.vertex_count(), false, mesh.face_count());
  write_vertices(out, format, mesh.vertices, {});
  if (format == PlyFormat::kAscii) {
    for (const auto& f : mesh.faces) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
  } else {
    for (const auto& f : mesh.faces) {
      const std::uint8_t n = 3;
      out.write(reinterpret_cast<const char*>(&n), 1);
      std::int32_t idx[3] = {f[0], f[1], f[2]};
      out.write(reinterpret_cast<const char*>(idx), sizeof(idx));
    }
  }
  if (!out) fail("ply: write failed: " + path);
}

PointCloud read_ply_cloud(const std::string& path) {
  auto in = open_input(path);
  const PlyHeader h = parse_header(in, path);
  PointCloud cloud;
  read_vertices(in, h, path, cloud.points, cloud.normals);
  cloud.validate();
  return cloud;
}

TriMesh read_ply_mesh(const std::string& path) {
  auto in = open_input(path);
  const PlyHeader h = parse_header(in, path);
  TriMesh mesh;
  std::vector<Vec3> normals;
  read_vertices(in, h, path, mesh.vertices, normals);
  mesh.faces.resize(h.face_count);
  for (long i = 0; i < h.face_count; ++i) {
    long count = 0;
    std::array<int, 3> f{};
    if (h.format == PlyFormat::kAscii) {
      std::string line;
      do {
        if (!std::getline(in, line)) fail("ply: truncated face data in " + path);
      } while (line.empty());
      std::istringstream ls(line);
      if (!(ls >> count)) fail("ply: malformed face line in " + path);
      if (count != 3) fail("ply: only triangle faces are supported in " + path);
      if (!(ls >> f[0] >> f[1] >> f[2])) fail("ply: malformed face line in " + path);
    } else {
      std::uint8_t n = 0;
      in.read(reinterpret_cast<char*>(&n), 1);
      if (!in) fail("ply: truncated face data in " + path);
      if (n != 3) fail("ply: only triangle faces are supported in " + path);
      std::int32_t idx[3];
      in.read(reinterpret_cast<char*>(idx), sizeof(idx));
      if (!in) fail("ply: truncated face data in " + path);
      f = {idx[0], idx[1], idx[2]};
    }
    for (int v : f) {
      if (v < 0 || v >= h.vertex_count) fail("ply: face index out of range in " + path);
    }
    mesh.faces[i] = f;
  }
  mesh.validate();
  return mesh;
}

}  // namespace tongue::geom
