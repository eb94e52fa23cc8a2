#include "tongue/geom/geometry.hpp"

#include <cmath>

#include "tongue/error.hpp"

namespace tongue::geom {

void PointCloud::validate() const {
  for (const auto& p : points) {
    if (!p.allFinite()) fail("PointCloud: non-finite coordinate");
  }
  if (!normals.empty()) {
    if (normals.size() != points.size())
      fail("PointCloud: normal count does not match point count");
    for (const auto& n : normals) {
      if (!n.allFinite()) fail("PointCloud: non-finite normal");
      const double len = n.norm();
      // Degenerate neighborhoods are flagged with an exact zero normal.
      if (len != 0.0 && std::abs(len - 1.0) > 1e-6)
        fail("PointCloud: normal is not unit length");
    }
  }
}

void TriMesh::validate() const {
  const int n = vertex_count();
  for (const auto& v : vertices) {
    if (!v.allFinite()) fail("TriMesh: non-finite vertex");
  }
  for (const auto& f : faces) {
    for (int idx : f) {
      if (idx < 0 || idx >= n) fail("TriMesh: face index out of range");
    }
  }
  if (!landmark_indices.empty()) {
    if (landmark_indices.size() != 12) fail("TriMesh: expected exactly 12 landmarks");
    for (int idx : landmark_indices) {
      if (idx < 0 || idx >= n) fail("TriMesh: landmark index out of range");
    }
  }
}

Vec3 centroid(const std::vector<Vec3>& pts) {
  require(!pts.empty(), "centroid: empty point set");
  Vec3 c = Vec3::Zero();
  for (const auto& p : pts) c += p;
  return c / static_cast<double>(pts.size());
}

BoundingSphere bounding_sphere(const std::vector<Vec3>& pts) {
  const Vec3 c = centroid(pts);
  double r2 = 0.0;
  for (const auto& p : pts) r2 = std::max(r2, (p - c).squaredNorm());
  return {c, std::sqrt(r2)};
}

}  // namespace tongue::geom
