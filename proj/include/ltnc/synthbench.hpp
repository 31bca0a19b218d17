#pragma once

#include <string>
#include <vector>

#include "ltnc/rankmeasures.hpp"

namespace ltnc {

struct ExperimentStep {
  double parameter = 0.0;
  EvalPair pair;
};

/// A parameterized sequence of (data, embedding) variants, ordered by
/// increasing distortion. Deterministic given (parameters, seed); the
/// fixed side is bitwise constant across steps.
struct ExperimentSchedule {
  std::string experiment_id;   // A | B1 | B2 | C | D | E | F
  std::string parameter_name;
  std::uint64_t seed = 42;
  std::vector<ExperimentStep> steps;
};

struct DiscsAndBalls {
  LabeledDataset hd;  // six 100-D hyperballs, radius 5, centers 10 from origin
  LabeledDataset ld;  // six 2-D discs, radius 1.5, centers 4 from origin
};

/// Six clusters 60 degrees apart on a fixed coordinate plane; point
/// offsets are sampled uniformly inside the ball/disc and are shared with
/// the schedules below so that step 0 reproduces this base geometry.
DiscsAndBalls gen_discs_and_balls(int n_per_cluster, std::uint64_t seed);

/// Overlapping-discs schedules with the hyperball data fixed. B1 rotates
/// three disjoint adjacent disc pairs toward each other, the pair angle
/// running from 60 down to 0 degrees over 25 steps; B2 moves all six disc
/// centers radially from distance 4 down to 0 over 25 steps.
ExperimentSchedule schedule_b(const std::string& variant, int n_per_cluster,
                              std::uint64_t seed);

/// Mirror of B2 with the discs fixed: 25 variants of the hyperball data
/// whose centers move from distance 4 down to the origin.
ExperimentSchedule schedule_e(int n_per_cluster, std::uint64_t seed);

/// Randomization schedules over a base pair, 21 steps with selection
/// probability 0, 0.05, ..., 1. target "embedding": selected embedding
/// points are resampled uniformly inside the base embedding's bounding box
/// (experiment A). target "original": the selected original-space rows are
/// permuted among themselves, labels fixed (experiment D).
ExperimentSchedule schedule_randomize(const std::string& target,
                                      const EvalPair& base,
                                      std::uint64_t seed);

/// PCA schedules. C: data fixed, embeddings are projections onto the top
/// m components for m = 10..1. F: embedding fixed at the top-2 projection,
/// data variants are projections onto components i..i+19 for i = 1..10.
ExperimentSchedule schedule_pca(const std::string& variant,
                                const LabeledDataset& data);

/// Built-in data for experiments that normally take a user dataset: six
/// Gaussian classes (sigma 0.5) in 200 dimensions whose centers sit 10
/// from the origin on a fixed coordinate plane, 60 degrees apart.
LabeledDataset gaussian_mixture_fallback(int n_per_cluster,
                                         std::uint64_t seed);

/// Base pair for the randomization schedules when no embedding is given:
/// the fallback mixture paired with its top-2 PCA projection.
EvalPair fallback_pair(int n_per_cluster, std::uint64_t seed);

struct SensitivityCurve {
  std::string experiment_id;
  std::string parameter_name;
  std::vector<std::string> columns;
  std::vector<double> parameters;           // one per step
  std::vector<std::vector<double>> values;  // [step][column]
};

/// Measure identifiers accepted by run_experiment and the CLI:
/// label_tnc[dsc], label_tnc[ch_btwn], trust_cont, mrre, kl,
/// baseline[dsc], baseline[ch_btwn].
bool is_known_measure(const std::string& id);

/// Evaluates every requested measure at every step. cvm_base supplies the
/// seed and mc_count for the CVM-backed measures; errors are annotated
/// with the step index.
SensitivityCurve run_experiment(const ExperimentSchedule& schedule,
                                const std::vector<std::string>& measures,
                                const CvmConfig& cvm_base,
                                const NeighborConfig& neighbors = {});

}  // namespace ltnc
