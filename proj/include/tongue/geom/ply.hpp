#pragma once

#include <string>

#include "tongue/geom/geometry.hpp"

namespace tongue::geom {

enum class PlyFormat { kAscii, kBinaryLittleEndian };

/// PLY writers. Ascii coordinates are written with 17 significant digits so
/// that a write/read round trip reproduces every double exactly.
void write_ply(const std::string& path, const PointCloud& cloud,
               PlyFormat format = PlyFormat::kAscii);
void write_ply(const std::string& path, const TriMesh& mesh,
               PlyFormat format = PlyFormat::kAscii);

/// Readers accept both ascii and binary_little_endian files produced by the
/// writers above (and the common x/y/z[/nx/ny/nz] layout from other tools).
PointCloud read_ply_cloud(const std::string& path);
TriMesh read_ply_mesh(const std::string& path);

}  // namespace tongue::geom
