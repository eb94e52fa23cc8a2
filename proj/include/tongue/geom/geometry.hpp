#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

namespace tongue::geom {

using Vec3 = Eigen::Vector3d;

/// Unordered set of 3D points with optional unit normals. Model units are
/// centimeters throughout the project.
struct PointCloud {
  std::vector<Vec3> points;
  std::vector<Vec3> normals;  // empty, or one unit vector per point

  int size() const { return static_cast<int>(points.size()); }
  bool has_normals() const { return !normals.empty(); }

  /// Throws tongue::Error if coordinates are non-finite or the normals are
  /// present but mis-sized / not unit length (tolerance 1e-6).
  void validate() const;
};

/// Fixed-topology triangle surface. May be non-watertight. When landmark
/// indices are present there are exactly twelve of them.
struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<int> landmark_indices;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int face_count() const { return static_cast<int>(faces.size()); }

  void validate() const;
};

Vec3 centroid(const std::vector<Vec3>& pts);

/// Center + radius of a sphere containing every point (centroid-based, not
/// minimal; adequate for camera placement checks).
struct BoundingSphere {
  Vec3 center;
  double radius;
};
BoundingSphere bounding_sphere(const std::vector<Vec3>& pts);

}  // namespace tongue::geom
