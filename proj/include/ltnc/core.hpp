#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "ltnc/types.hpp"

namespace ltnc {

/// A point matrix with one class label per row. Instances are immutable
/// after construction and safe to share across threads.
struct LabeledDataset {
  Matrix points;       // N x dims
  LabelVector labels;  // length N, contiguous 0..k-1 once validated
  int k = 0;

  Index n() const { return points.rows(); }
  Index dims() const { return points.cols(); }
};

/// Original data and its embedding over the same points and labels.
struct EvalPair {
  LabeledDataset original;
  LabeledDataset embedding;
};

/// CVM selection plus the knobs shared by every CVM call. mc_count is
/// only consumed by ch_btwn (its permutation-null size).
struct CvmConfig {
  std::string cvm_id = "dsc";  // dsc | ch_btwn | silhouette
  int mc_count = 200;
  std::uint64_t seed = 42;
};

/// Maps label values to 0..k-1 in first-occurrence order. Idempotent:
/// remapping an already-contiguous vector returns it unchanged.
std::pair<LabelVector, int> remap_labels(const LabelVector& labels);

/// Builds a dataset with finite coordinates and contiguous labels.
LabeledDataset make_dataset(Matrix points, LabelVector labels);

/// Checks the pairing invariants (same N, identical labels, finite
/// coordinates, k >= 2, no empty class) and returns the pair with labels
/// remapped consistently on both sides. Inputs are never mutated.
EvalPair validate_pair(const LabeledDataset& original,
                       const LabeledDataset& embedding);

/// Rows of `data` whose label is class_a or class_b, in original row
/// order, relabelled to {0, 1}.
LabeledDataset restrict_to_classes(const LabeledDataset& data, int class_a,
                                   int class_b);

}  // namespace ltnc
