#pragma once

#include <vector>

#include "ltnc/ltnc.hpp"

namespace ltnc {

/// Neighborhood sizes and Gaussian-kernel widths for the rank-based and
/// density-based competitors. Every k must satisfy k < (2N - 1) / 3 so the
/// trustworthiness normalizer stays positive.
struct NeighborConfig {
  std::vector<int> k_list = {5, 10, 15, 20, 25};
  std::vector<double> sigma_list = {0.01, 0.1, 1.0};
};

struct TrustContResult {
  double trustworthiness = 1.0;
  double continuity = 1.0;
  std::vector<double> per_k_trust;
  std::vector<double> per_k_cont;
};

/// Rank-based neighborhood preservation. Per k:
///   T(k) = 1 - 2 / (N k (2N - 3k - 1)) * sum_i sum_{j in U_k(i)} (rank_X(i,j) - k)
/// where U_k(i) holds the k nearest neighbors of i in the embedding that
/// are not among its k nearest in the original space; continuity swaps the
/// roles of the two spaces. Per-k values are clamped to [0,1] and averaged
/// over k_list.
TrustContResult trust_cont(const EvalPair& pair,
                           const NeighborConfig& config = {});

struct MrreResult {
  double mrre_false = 1.0;
  double mrre_missing = 1.0;
  std::vector<double> per_k_false;
  std::vector<double> per_k_missing;
};

/// Mean relative rank errors, reported as 1 - normalized error so higher
/// is better. The false variant sums |rank_X - rank_Z| / rank_Z over the
/// embedding-space kNN, the missing variant |rank_X - rank_Z| / rank_X
/// over the original-space kNN, both normalized by
/// C = N * sum_{t=1..k} (N - 2t + 1) / t.
MrreResult mrre(const EvalPair& pair, const NeighborConfig& config = {});

struct KlResult {
  double kl = 0.0;
  double quality = 1.0;
  std::vector<double> per_sigma;
};

/// Density-preservation divergence. Per sigma, point densities are
/// phi_i = sum_{j != i} exp(-d(i,j)^2 / sigma) on min-max normalized
/// distances per space; kl_sigma is the Kullback-Leibler divergence of the
/// normalized original densities from the embedded ones. kl averages over
/// sigma_list; quality = 1 / (1 + kl).
KlResult kl_density(const EvalPair& pair, const NeighborConfig& config = {});

/// The configured CVM applied to the embedding alone, all classes at
/// once. This is the conventional label-based evaluation that ignores the
/// original space entirely, kept as a baseline.
CvmResult label_baseline(const LabeledDataset& embedding,
                         const CvmConfig& config);

}  // namespace ltnc
