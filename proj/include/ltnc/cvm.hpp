#pragma once

#include <map>
#include <string>
#include <vector>

#include "ltnc/metricspace.hpp"

namespace ltnc {

/// A clustering-validation score in [0,1]; higher means the class labels
/// match the cluster structure better. Diagnostics expose the raw
/// intermediate values behind the final score.
struct CvmResult {
  double score = 0.0;
  std::string cvm_id;
  std::map<std::string, double> diagnostics;
};

/// Distance consistency: the fraction f_own of points whose nearest class
/// centroid (under the oracle distance) is their own, mapped to
/// clamp(2*f_own - 1, 0, 1). Ties count as correctly assigned. Chance
/// labelings land near 0, perfectly separated classes at 1.
CvmResult dsc(const LabeledDataset& data, const DistanceOracle& oracle = {});

/// Between-class Calinski-Harabasz variant on canonicalized distances.
///
/// Pairwise distances are min-max canonicalized, squared, and split into
/// within-class and between-class dispersion through the standard centroid
/// identities (sum of squared point-to-centroid distances per class equals
/// the normalized within-class pairwise sum). comp is the mean squared
/// canonical distance to the own-class centroid, sep the size-weighted
/// mean squared canonical distance from class centroids to the global
/// centroid, both floored at zero. raw = sep / (sep + comp + 1e-12) is
/// normalized against a permutation null: mc_count label shuffles with
/// class sizes preserved, RNG seeded from config.seed and the permutation
/// index only. score = clamp((raw - mu) / (1 - mu), 0, 1) where mu is the
/// null mean; zero when mu >= 1 - 1e-9.
CvmResult ch_btwn(const LabeledDataset& data, const DistanceOracle& oracle,
                  const CvmConfig& config);

/// Classic mean silhouette (b - a) / max(a, b) over oracle distances,
/// mapped to [0,1] via (s + 1) / 2. Requires every class to have at least
/// two members; coincident points are scored s = 0. Kept as the reference
/// CVM that fails shift invariance.
CvmResult silhouette_cvm(const LabeledDataset& data,
                         const DistanceOracle& oracle = {});

/// Dispatch on config.cvm_id.
CvmResult evaluate_cvm(const CvmConfig& config, const LabeledDataset& data,
                       const DistanceOracle& oracle = {});

struct AxiomWitness {
  int trial = -1;
  Index n = 0;
  Index dims = 0;
  double separation = 0.0;
  double alpha = 1.0;
  double beta = 0.0;
  double score_base = 0.0;
  double score_transformed = 0.0;
  double delta = 0.0;
};

struct AxiomCheck {
  std::string axiom;  // scale | shift | range | hyperparameter
  bool passed = false;
  double max_delta = 0.0;
  AxiomWitness witness;  // the worst case observed (always populated)
  std::string note;
};

struct AxiomReport {
  std::string cvm_id;
  int trials = 0;
  std::vector<AxiomCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Empirical check of the CVM requirements.
///
/// Scale and shift run per trial on random two-class Gaussian datasets
/// (N in [20,200], dims in [2,50], randomized separation) with random
/// alpha in [0.1,10] and beta in [0.1,100]; the transformed score must
/// stay within a per-CVM tolerance of the base score (0 for dsc, 0.02 for
/// ch_btwn at matched seeds, 1e-9 slack for silhouette). The range check
/// scores a far-separated best case (expected >= 0.9) and a chance-level
/// blob (expected <= 0.1) on fixed-size instances large enough for the
/// sampling noise to stay below the thresholds. Hyperparameter stability
/// applies to ch_btwn only: scores at mc in {100, 1000, 10000} must agree
/// pairwise within 0.05. Failures are reported with witnesses, not thrown.
AxiomReport check_axioms(const CvmConfig& cvm, int trials,
                         std::uint64_t seed);

/// Two Gaussian classes at the given center separation; the generator
/// behind the axiom harness, exposed for tests.
LabeledDataset gaussian_two_class(Index n, Index dims, double separation,
                                  std::uint64_t seed);

}  // namespace ltnc
