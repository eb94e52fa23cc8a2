#include "tongue/geom/kdtree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include "tongue/error.hpp"

namespace tongue::geom {

namespace {
constexpr int kLeafSize = 8;

// Candidate ordering that makes the smallest-index tie break explicit.
inline bool better(double d2, int idx, double best_d2, int best_idx) {
  return d2 < best_d2 || (d2 == best_d2 && idx < best_idx);
}
}  // namespace

SpatialIndex::SpatialIndex(const std::vector<Vec3>& points) : points_(points) {
  require(!points_.empty(), "SpatialIndex: empty cloud");
  for (const auto& p : points_) {
    if (!p.allFinite()) fail("SpatialIndex: non-finite coordinate");
  }
  order_.resize(points_.size());
  std::iota(order_.begin(), order_.end(), 0);
  nodes_.reserve(2 * points_.size() / kLeafSize + 4);
  root_ = build(0, static_cast<int>(points_.size()), 0);
}

int SpatialIndex::build(int begin, int end, int depth) {
  KdNode node;
  node.begin = begin;
  node.end = end;
  if (end - begin <= kLeafSize) {
    nodes_.push_back(node);
    return static_cast<int>(nodes_.size()) - 1;
  }
  // Split on the widest axis for balance regardless of input distribution.
  Vec3 lo = points_[order_[begin]], hi = lo;
  for (int i = begin + 1; i < end; ++i) {
    lo = lo.cwiseMin(points_[order_[i]]);
    hi = hi.cwiseMax(points_[order_[i]]);
  }
  int axis = 0;
  (hi - lo).maxCoeff(&axis);
  const int mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                   [&](int a, int b) {
                     const double va = points_[a][axis], vb = points_[b][axis];
                     return va < vb || (va == vb && a < b);
                   });
  node.axis = axis;
  node.split = points_[order_[mid]][axis];
  const int self = static_cast<int>(nodes_.size());
  nodes_.push_back(node);
  const int left = build(begin, mid, depth + 1);
  const int right = build(mid, end, depth + 1);
  nodes_[self].left = left;
  nodes_[self].right = right;
  return self;
}

void SpatialIndex::search(int node_idx, const Vec3& q, NnResult& best) const {
  const KdNode& node = nodes_[node_idx];
  if (node.axis < 0) {
    for (int i = node.begin; i < node.end; ++i) {
      const int idx = order_[i];
      const double d2 = (points_[idx] - q).squaredNorm();
      if (better(d2, idx, best.squared_distance, best.index)) best = {idx, d2};
    }
    return;
  }
  const double delta = q[node.axis] - node.split;
  const int near = delta < 0 ? node.left : node.right;
  const int far = delta < 0 ? node.right : node.left;
  search(near, q, best);
  // Non-strict comparison: an equal-distance point with a smaller index may
  // live on the far side.
  if (delta * delta <= best.squared_distance) search(far, q, best);
}

NnResult SpatialIndex::nearest(const Vec3& q) const {
  NnResult best{std::numeric_limits<int>::max(), std::numeric_limits<double>::infinity()};
  search(root_, q, best);
  return best;
}

namespace {
struct HeapEntry {
  double d2;
  int idx;
  bool operator<(const HeapEntry& o) const {
    return d2 < o.d2 || (d2 == o.d2 && idx < o.idx);
  }
};
}  // namespace

template <typename Heap>
void SpatialIndex::search_k(int node_idx, const Vec3& q, int k, Heap& heap) const {
  const KdNode& node = nodes_[node_idx];
  if (node.axis < 0) {
    for (int i = node.begin; i < node.end; ++i) {
      const int idx = order_[i];
      const double d2 = (points_[idx] - q).squaredNorm();
      HeapEntry e{d2, idx};
      if (static_cast<int>(heap.size()) < k) {
        heap.push(e);
      } else if (e < heap.top()) {
        heap.pop();
        heap.push(e);
      }
    }
    return;
  }
  const double delta = q[node.axis] - node.split;
  const int near = delta < 0 ? node.left : node.right;
  const int far = delta < 0 ? node.right : node.left;
  search_k(near, q, k, heap);
  if (static_cast<int>(heap.size()) < k || delta * delta <= heap.top().d2) {
    search_k(far, q, k, heap);
  }
}

std::vector<NnResult> SpatialIndex::knearest(const Vec3& q, int k) const {
  require(k >= 1, "SpatialIndex::knearest: k must be positive");
  k = std::min(k, size());
  std::priority_queue<HeapEntry> heap;  // max-heap on (d2, idx)
  search_k(root_, q, k, heap);
  std::vector<NnResult> result(heap.size());
  for (int i = static_cast<int>(heap.size()) - 1; i >= 0; --i) {
    result[i] = {heap.top().idx, heap.top().d2};
    heap.pop();
  }
  return result;
}

template void SpatialIndex::search_k<std::priority_queue<HeapEntry>>(
    int, const Vec3&, int, std::priority_queue<HeapEntry>&) const;

}  // namespace tongue::geom
