#pragma once

#include <utility>
#include <vector>

#include "tongue/geom/geometry.hpp"

namespace tongue::geom {

/// Result of a nearest-neighbor query: index into the indexed point set and
/// the squared Euclidean distance.
struct NnResult {
  int index;
  double squared_distance;
};

/// Immutable balanced kd-tree over a point set. Queries return exactly the
/// exhaustive-search result; ties in distance are broken by the smallest
/// point index. Safe for concurrent queries after construction.
class SpatialIndex {
 public:
  explicit SpatialIndex(const std::vector<Vec3>& points);

  NnResult nearest(const Vec3& q) const;

  /// k nearest neighbors, sorted by (squared distance, index) ascending.
  /// k is clamped to the point count.
  std::vector<NnResult> knearest(const Vec3& q, int k) const;

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<Vec3>& points() const { return points_; }

 private:
  struct KdNode {
    // Leaf: [begin, end) range into order_. Split: axis + threshold + children.
    int begin = 0, end = 0;
    int left = -1, right = -1;
    int axis = -1;
    double split = 0.0;
  };

  int build(int begin, int end, int depth);
  void search(int node_idx, const Vec3& q, NnResult& best) const;
  template <typename Heap>
  void search_k(int node_idx, const Vec3& q, int k, Heap& heap) const;

  std::vector<Vec3> points_;
  std::vector<int> order_;  // permutation of point indices, partitioned by the tree
  std::vector<KdNode> nodes_;
  int root_ = -1;
};

inline SpatialIndex build_index(const PointCloud& cloud) { return SpatialIndex(cloud.points); }

}  // namespace tongue::geom
