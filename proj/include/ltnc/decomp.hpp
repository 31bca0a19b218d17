#pragma once

#include <vector>

#include "ltnc/core.hpp"

namespace ltnc {

struct PcaModel {
  RowVector mean;
  Matrix components;        // dims x r, orthonormal columns
  Vector eigenvalues;       // length r, nonincreasing, floored at 0
  Vector explained_ratio;   // eigenvalue / total variance
};

/// Centers the data and eigendecomposes its covariance, returning the top
/// `rank` components in descending eigenvalue order. Component signs are
/// canonicalized (largest-magnitude coordinate positive).
PcaModel pca_fit(const Eigen::Ref<const Matrix>& data, Index rank);

/// Projects centered data onto components first..last (1-indexed,
/// inclusive).
Matrix pca_project(const PcaModel& model, const Eigen::Ref<const Matrix>& data,
                   Index first, Index last);

struct Merge {
  int left = 0;   // node ids: leaves 0..N-1, internal N..2N-2
  int right = 0;  // left < right
  double height = 0.0;
  int size = 0;   // points in the merged cluster
};

/// Binary merge tree over N leaves with nondecreasing heights.
struct Dendrogram {
  int n_leaves = 0;
  std::vector<Merge> merges;  // length N-1
};

/// Agglomerative clustering under Ward's criterion via the Lance-Williams
/// update on squared Euclidean distances:
///   d2(u+v, w) = ((n_u+n_w) d2(u,w) + (n_v+n_w) d2(v,w) - n_w d2(u,v))
///                / (n_u+n_v+n_w)
/// Merge heights are sqrt(d2). Ties break on the smallest (left, right)
/// node-id pair. Naive nearest-pair search, O(N^3).
Dendrogram ward_dendrogram(const Eigen::Ref<const Matrix>& data);

struct CutLevel {
  LabelVector labels;  // contiguous, first-occurrence order
  int k = 0;
  double threshold = 0.0;
  bool usable = false;  // k >= 2
};

/// Thresholds the merge heights into `levels` equal ranges and returns the
/// flat partition under each threshold, finest first. By default the
/// ranges span [h_min, h_max] of the realized merge heights; with
/// from_zero they span [0, h_max]. Levels that collapse to a single
/// cluster are flagged unusable.
std::vector<CutLevel> cut_levels(const Dendrogram& dendrogram, int levels = 20,
                                 bool from_zero = false);

}  // namespace ltnc
