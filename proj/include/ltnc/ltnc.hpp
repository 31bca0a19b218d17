#pragma once

#include <string>

#include "ltnc/cvm.hpp"

namespace ltnc {

/// Class-pairwise CVM scores for one space: symmetric k x k with zero
/// diagonal, off-diagonals in [0,1].
struct ClmMatrix {
  Matrix values;
  std::string space_tag;  // "original" | "embedding"
};

enum class Quadrant { A, B, C, D };

std::string quadrant_name(Quadrant q);

struct Interpretation {
  Quadrant quadrant = Quadrant::A;
  std::string guideline;
};

/// Quadrant thresholds: scores >= hi count as high, scores < lo as low;
/// values in between are called moderate in the guideline text.
struct InterpretThresholds {
  double hi = 0.9;
  double lo = 0.7;
};

/// Full distortion breakdown for one (pair, CVM) evaluation. m_fg and
/// m_mg have disjoint support and m_fg - m_mg equals clm_x - clm_z
/// elementwise; the matrices are the per-pair drill-down.
struct DistortionReport {
  std::string cvm_id;
  ClmMatrix clm_x;
  ClmMatrix clm_z;
  Matrix m_star;
  Matrix m_fg;
  Matrix m_mg;
  double label_t = 1.0;
  double label_c = 1.0;
  Quadrant quadrant = Quadrant::A;
  std::string guideline;
};

/// Applies the configured CVM to every unordered class pair restricted to
/// those two classes. For ch_btwn the per-pair RNG seed derives from
/// (config.seed, min(i,j), max(i,j)) only, so the same pair reuses
/// identical permutations in the original and embedded spaces.
ClmMatrix clm_matrix(const LabeledDataset& data, const CvmConfig& config,
                     const DistanceOracle& oracle = {},
                     const std::string& space_tag = "original");

/// Label-Trustworthiness and Label-Continuity: the positive and negative
/// parts of clm_x - clm_z averaged over the strictly-upper triangle and
/// subtracted from 1.
DistortionReport label_tnc(const EvalPair& pair, const CvmConfig& config,
                           const InterpretThresholds& thresholds = {});

/// Quadrant A: both scores high. B: high label_t, low label_c (the
/// embedding separates classes more than the data does). C: low label_t,
/// high label_c (the embedding merges classes the data separates).
/// D: both low, flagged as unlikely given the tradeoff between the two
/// distortion directions.
Interpretation interpret(double label_t, double label_c, double hi = 0.9,
                         double lo = 0.7);

}  // namespace ltnc
