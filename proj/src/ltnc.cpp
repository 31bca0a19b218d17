#include "ltnc/ltnc.hpp"

#include "ltnc/random.hpp"

namespace ltnc {

std::string quadrant_name(Quadrant q) {
  switch (q) {
    case Quadrant::A: return "A";
    case Quadrant::B: return "B";
    case Quadrant::C: return "C";
    case Quadrant::D: return "D";
  }
  return "?";
}

ClmMatrix clm_matrix(const LabeledDataset& data, const CvmConfig& config,
                     const DistanceOracle& oracle,
                     const std::string& space_tag) {
  if (data.k < 2)
    raise(ErrorCode::DegenerateLabels, "clm_matrix requires k >= 2 classes");

  ClmMatrix clm;
  clm.space_tag = space_tag;
  clm.values = Matrix::Zero(data.k, data.k);

  for (int i = 0; i < data.k; ++i) {
    for (int j = i + 1; j < data.k; ++j) {
      const LabeledDataset restricted = restrict_to_classes(data, i, j);
      CvmConfig pair_config = config;
      pair_config.seed = mix_seed(config.seed, static_cast<std::uint64_t>(i),
                                  static_cast<std::uint64_t>(j));
      try {
        const double score =
            evaluate_cvm(pair_config, restricted, oracle).score;
        clm.values(i, j) = score;
        clm.values(j, i) = score;
      } catch (const Error& e) {
        raise(e.code(), std::string(e.what()) + " (class pair " +
                            std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  return clm;
}

DistortionReport label_tnc(const EvalPair& pair, const CvmConfig& config,
                           const InterpretThresholds& thresholds) {
  DistortionReport report;
  report.cvm_id = config.cvm_id;
  report.clm_x = clm_matrix(pair.original, config, DistanceOracle{}, "original");
  report.clm_z =
      clm_matrix(pair.embedding, config, DistanceOracle{}, "embedding");

  report.m_star = report.clm_x.values - report.clm_z.values;
  report.m_fg = report.m_star.cwiseMax(0.0);
  report.m_mg = (-report.m_star).cwiseMax(0.0);

  const int k = pair.original.k;
  const double pairs = static_cast<double>(k) * (k - 1) / 2.0;
  double fg_sum = 0.0;
  double mg_sum = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      fg_sum += report.m_fg(i, j);
      mg_sum += report.m_mg(i, j);
    }
  report.label_t = 1.0 - fg_sum / pairs;
  report.label_c = 1.0 - mg_sum / pairs;

  const Interpretation interp = interpret(report.label_t, report.label_c,
                                          thresholds.hi, thresholds.lo);
  report.quadrant = interp.quadrant;
  report.guideline = interp.guideline;
  return report;
}

Interpretation interpret(double label_t, double label_c, double hi,
                         double lo) {
  if (!(0.0 <= lo && lo <= hi && hi <= 1.0))
    raise(ErrorCode::BadRange, "interpret requires 0 <= lo <= hi <= 1");

  auto level = [&](double v) {
    return v >= hi ? "high" : (v < lo ? "low" : "moderate");
  };

  Interpretation out;
  const bool t_high = label_t >= hi;
  const bool c_high = label_c >= hi;
  if (t_high && c_high) {
    out.quadrant = Quadrant::A;
    out.guideline =
        "Quadrant A: the embedding reflects how well classes are clustered "
        "in the original data; read its cluster-label structure at face "
        "value.";
  } else if (t_high && !c_high) {
    out.quadrant = Quadrant::B;
    out.guideline =
        std::string("Quadrant B: class separation in the embedding is "
                    "exaggerated (") +
        level(label_c) +
        " Label-C); the original data is less cleanly clustered than the "
        "embedding suggests.";
  } else if (!t_high && c_high) {
    out.quadrant = Quadrant::C;
    out.guideline =
        std::string("Quadrant C: the embedding merges classes that the "
                    "original data separates (") +
        level(label_t) +
        " Label-T); the original data is clustered better than the "
        "embedding suggests.";
  } else {
    out.quadrant = Quadrant::D;
    out.guideline =
        "Quadrant D: both scores are low, which is unlikely given the "
        "tradeoff between the two distortion directions; inspect the inputs.";
  }
  return out;
}

}  // namespace ltnc
