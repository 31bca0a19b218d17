#pragma once

#include <algorithm>
#include <vector>

#include "ltnc/core.hpp"

namespace ltnc {

/// Euclidean distance wrapped by an affine map alpha*d + beta with
/// alpha > 0, beta >= 0. The wrapper models the family of distance
/// functions the CVM invariance axioms quantify over; identity by default.
struct DistanceOracle {
  double alpha = 1.0;
  double beta = 0.0;

  template <typename A, typename B>
  double operator()(const Eigen::MatrixBase<A>& x,
                    const Eigen::MatrixBase<B>& y) const {
    return alpha * (x - y).norm() + beta;
  }
};

/// Symmetric N x N matrix of oracle distances. The diagonal carries the
/// affine offset applied to the zero base distance (beta); callers that
/// need raw geometry use the identity oracle.
Matrix pairwise_distances(const Eigen::Ref<const Matrix>& data,
                          const DistanceOracle& oracle = {});

/// Affine map e -> (e - offset) / range fitted to the off-diagonal
/// extremes of a distance matrix. Values pushed through the map may be
/// negative; clamped() floors them at zero.
struct CanonicalMap {
  double offset = 0.0;
  double range = 1.0;
  bool degenerate = false;  // all off-diagonals equal: everything maps to 1

  double operator()(double e) const {
    return degenerate ? 1.0 : (e - offset) / range;
  }
  double clamped(double e) const { return std::max(0.0, (*this)(e)); }
};

struct CanonicalResult {
  Matrix distances;  // off-diagonals in [0,1], diagonal forced to 0
  CanonicalMap map;
};

/// Min-max normalization of the off-diagonal entries. Affine rewraps of
/// the input distances cancel, which is how scale and shift invariance is
/// obtained for the CVMs built on top.
CanonicalResult canonicalize(const Eigen::Ref<const Matrix>& distances);

/// Neighbor ranks per row: ranks(i,j) in 1..N-1 is the position of j in
/// the distance ordering around i (ties by ascending point index);
/// ranks(i,i) = 0. order[i] lists the other points by ascending rank.
struct RankTable {
  Eigen::MatrixXi ranks;
  std::vector<std::vector<int>> order;

  /// The k nearest neighbors of i (ranks 1..k).
  std::vector<int> knn(int i, int k) const {
    return {order[i].begin(), order[i].begin() + k};
  }
};

RankTable rank_table(const Eigen::Ref<const Matrix>& distances);

struct Centroids {
  Matrix class_means;     // k x dims
  RowVector global_mean;  // 1 x dims
};

/// Arithmetic mean per class and over all points.
Centroids class_centroids(const LabeledDataset& data);

}  // namespace ltnc
