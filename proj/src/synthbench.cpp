#include "ltnc/synthbench.hpp"

#include <algorithm>
#include <cmath>

#include "ltnc/decomp.hpp"
#include "ltnc/random.hpp"

namespace ltnc {

namespace {

constexpr int kClusters = 6;
constexpr int kBallDims = 100;
constexpr double kBallRadius = 5.0;
constexpr double kBallCenterDistance = 10.0;
constexpr int kDiscDims = 2;
constexpr double kDiscRadius = 1.5;
constexpr double kDiscCenterDistance = 4.0;
constexpr double kPi = 3.14159265358979323846264338327950288;

/// n points uniform inside a ball: random direction times radius * u^(1/dims).
Matrix uniform_ball(Index n, Index dims, double radius, SplitMix64& rng) {
  Matrix points(n, dims);
  for (Index i = 0; i < n; ++i) {
    RowVector direction(dims);
    for (Index d = 0; d < dims; ++d) direction[d] = rng.next_gaussian();
    const double norm = direction.norm();
    direction /= norm > 0.0 ? norm : 1.0;
    const double r =
        radius * std::pow(rng.next_double(), 1.0 / static_cast<double>(dims));
    points.row(i) = r * direction;
  }
  return points;
}

struct ClusterOffsets {
  std::vector<Matrix> hd;  // per cluster, n x 100
  std::vector<Matrix> ld;  // per cluster, n x 2
};

/// Within-cluster point offsets shared by the base geometry and every
/// schedule step, so moving a cluster moves a frozen point cloud.
ClusterOffsets disc_ball_offsets(int n_per_cluster, std::uint64_t seed) {
  ClusterOffsets offsets;
  SplitMix64 rng_hd(mix_seed(seed, 10));
  for (int c = 0; c < kClusters; ++c)
    offsets.hd.push_back(
        uniform_ball(n_per_cluster, kBallDims, kBallRadius, rng_hd));
  SplitMix64 rng_ld(mix_seed(seed, 11));
  for (int c = 0; c < kClusters; ++c)
    offsets.ld.push_back(
        uniform_ball(n_per_cluster, kDiscDims, kDiscRadius, rng_ld));
  return offsets;
}

/// Centers on a circle of the given radius in coordinates (0, 1) at the
/// given angles (degrees), zero elsewhere.
Matrix circle_centers(const std::vector<double>& angles_deg, double radius,
                      Index dims) {
  Matrix centers = Matrix::Zero(static_cast<Index>(angles_deg.size()), dims);
  for (Index c = 0; c < centers.rows(); ++c) {
    const double a = angles_deg[static_cast<std::size_t>(c)] * kPi / 180.0;
    centers(c, 0) = radius * std::cos(a);
    centers(c, 1) = radius * std::sin(a);
  }
  return centers;
}

std::vector<double> base_angles() { return {0, 60, 120, 180, 240, 300}; }

LabeledDataset assemble(const Matrix& centers,
                        const std::vector<Matrix>& offsets) {
  const Index n_per = offsets.front().rows();
  const Index dims = centers.cols();
  Matrix points(n_per * kClusters, dims);
  LabelVector labels(n_per * kClusters);
  for (int c = 0; c < kClusters; ++c) {
    const Index base = c * n_per;
    points.middleRows(base, n_per) =
        offsets[static_cast<std::size_t>(c)].rowwise() +
        centers.row(c);
    labels.segment(base, n_per).setConstant(c);
  }
  return LabeledDataset{std::move(points), std::move(labels), kClusters};
}

}  // namespace

DiscsAndBalls gen_discs_and_balls(int n_per_cluster, std::uint64_t seed) {
  if (n_per_cluster < 2)
    raise(ErrorCode::InvalidK, "n_per_cluster must be >= 2");
  const ClusterOffsets offsets = disc_ball_offsets(n_per_cluster, seed);
  DiscsAndBalls out;
  out.hd = assemble(
      circle_centers(base_angles(), kBallCenterDistance, kBallDims),
      offsets.hd);
  out.ld = assemble(
      circle_centers(base_angles(), kDiscCenterDistance, kDiscDims),
      offsets.ld);
  return out;
}

ExperimentSchedule schedule_b(const std::string& variant, int n_per_cluster,
                              std::uint64_t seed) {
  if (variant != "B1" && variant != "B2")
    raise(ErrorCode::InvalidK, "schedule_b variant must be B1 or B2");
  if (n_per_cluster < 2)
    raise(ErrorCode::InvalidK, "n_per_cluster must be >= 2");

  const ClusterOffsets offsets = disc_ball_offsets(n_per_cluster, seed);
  const LabeledDataset hd = assemble(
      circle_centers(base_angles(), kBallCenterDistance, kBallDims),
      offsets.hd);

  ExperimentSchedule schedule;
  schedule.experiment_id = variant;
  schedule.parameter_name =
      variant == "B1" ? "pair_angle_deg" : "center_distance";
  schedule.seed = seed;

  constexpr int kSteps = 25;
  for (int t = 0; t < kSteps; ++t) {
    ExperimentStep step;
    Matrix centers;
    if (variant == "B1") {
      // three disjoint adjacent pairs rotate toward their bisectors until
      // the within-pair angle reaches 0
      const double angle = 60.0 * static_cast<double>(kSteps - 1 - t) /
                           static_cast<double>(kSteps - 1);
      std::vector<double> angles(kClusters);
      for (int p = 0; p < 3; ++p) {
        const double bisector = 30.0 + 120.0 * p;
        angles[static_cast<std::size_t>(2 * p)] = bisector - angle / 2.0;
        angles[static_cast<std::size_t>(2 * p + 1)] = bisector + angle / 2.0;
      }
      centers = circle_centers(angles, kDiscCenterDistance, kDiscDims);
      step.parameter = angle;
    } else {
      const double distance = kDiscCenterDistance *
                              static_cast<double>(kSteps - 1 - t) /
                              static_cast<double>(kSteps - 1);
      centers = circle_centers(base_angles(), distance, kDiscDims);
      step.parameter = distance;
    }
    step.pair = EvalPair{hd, assemble(centers, offsets.ld)};
    schedule.steps.push_back(std::move(step));
  }
  return schedule;
}

ExperimentSchedule schedule_e(int n_per_cluster, std::uint64_t seed) {
  if (n_per_cluster < 2)
    raise(ErrorCode::InvalidK, "n_per_cluster must be >= 2");

  const ClusterOffsets offsets = disc_ball_offsets(n_per_cluster, seed);
  const LabeledDataset ld = assemble(
      circle_centers(base_angles(), kDiscCenterDistance, kDiscDims),
      offsets.ld);

  ExperimentSchedule schedule;
  schedule.experiment_id = "E";
  schedule.parameter_name = "center_distance";
  schedule.seed = seed;

  constexpr int kSteps = 25;
  for (int t = 0; t < kSteps; ++t) {
    const double distance = kDiscCenterDistance *
                            static_cast<double>(kSteps - 1 - t) /
                            static_cast<double>(kSteps - 1);
    ExperimentStep step;
    step.parameter = distance;
    step.pair = EvalPair{
        assemble(circle_centers(base_angles(), distance, kBallDims),
                 offsets.hd),
        ld};
    schedule.steps.push_back(std::move(step));
  }
  return schedule;
}

ExperimentSchedule schedule_randomize(const std::string& target,
                                      const EvalPair& base,
                                      std::uint64_t seed) {
  if (target != "embedding" && target != "original")
    raise(ErrorCode::InvalidK,
          "schedule_randomize target must be embedding or original");
  const EvalPair valid = validate_pair(base.original, base.embedding);
  const bool randomize_embedding = target == "embedding";

  ExperimentSchedule schedule;
  schedule.experiment_id = randomize_embedding ? "A" : "D";
  schedule.parameter_name = "replacement_probability";
  schedule.seed = seed;

  const Matrix& source = randomize_embedding ? valid.embedding.points
                                             : valid.original.points;
  const RowVector box_lo = source.colwise().minCoeff();
  const RowVector box_hi = source.colwise().maxCoeff();
  const Index n = source.rows();
  const Index dims = source.cols();

  for (int i = 0; i <= 20; ++i) {
    const double p = static_cast<double>(i) / 20.0;
    SplitMix64 rng(mix_seed(seed, 20, static_cast<std::uint64_t>(i)));
    Matrix variant = source;
    if (randomize_embedding) {
      // resample selected rows uniformly inside the base bounding box
      for (Index row = 0; row < n; ++row) {
        if (rng.next_double() >= p) continue;
        for (Index d = 0; d < dims; ++d)
          variant(row, d) = rng.next_in(box_lo[d], box_hi[d]);
      }
    } else {
      // permute selected rows among themselves; the point cloud is preserved
      std::vector<Index> selected;
      for (Index row = 0; row < n; ++row)
        if (rng.next_double() < p) selected.push_back(row);
      std::vector<Index> permuted = selected;
      shuffle(permuted, rng);
      for (std::size_t m = 0; m < selected.size(); ++m)
        variant.row(selected[m]) = source.row(permuted[m]);
    }

    ExperimentStep step;
    step.parameter = p;
    if (randomize_embedding)
      step.pair = EvalPair{
          valid.original,
          LabeledDataset{std::move(variant), valid.embedding.labels,
                         valid.embedding.k}};
    else
      step.pair = EvalPair{
          LabeledDataset{std::move(variant), valid.original.labels,
                         valid.original.k},
          valid.embedding};
    schedule.steps.push_back(std::move(step));
  }
  return schedule;
}

ExperimentSchedule schedule_pca(const std::string& variant,
                                const LabeledDataset& data) {
  if (variant != "C" && variant != "F")
    raise(ErrorCode::InvalidK, "schedule_pca variant must be C or F");
  const Index needed = variant == "C" ? 10 : 29;
  if (data.dims() < needed || data.n() - 1 < needed)
    raise(ErrorCode::InsufficientDims,
          "experiment " + variant + " needs dims >= " +
              std::to_string(needed) + " and N > dims");

  const PcaModel model = pca_fit(data.points, needed);

  ExperimentSchedule schedule;
  schedule.experiment_id = variant;
  schedule.seed = 0;

  if (variant == "C") {
    schedule.parameter_name = "components";
    for (int m = 10; m >= 1; --m) {
      ExperimentStep step;
      step.parameter = m;
      step.pair = EvalPair{
          data, LabeledDataset{pca_project(model, data.points, 1, m),
                               data.labels, data.k}};
      schedule.steps.push_back(std::move(step));
    }
  } else {
    schedule.parameter_name = "start_component";
    const LabeledDataset ld{pca_project(model, data.points, 1, 2),
                            data.labels, data.k};
    for (int i = 1; i <= 10; ++i) {
      ExperimentStep step;
      step.parameter = i;
      step.pair = EvalPair{
          LabeledDataset{pca_project(model, data.points, i, i + 19),
                         data.labels, data.k},
          ld};
      schedule.steps.push_back(std::move(step));
    }
  }
  return schedule;
}

LabeledDataset gaussian_mixture_fallback(int n_per_cluster,
                                         std::uint64_t seed) {
  if (n_per_cluster < 2)
    raise(ErrorCode::InvalidK, "n_per_cluster must be >= 2");
  constexpr Index kDims = 200;
  constexpr double kSigma = 0.5;
  const Matrix centers = circle_centers(base_angles(), 10.0, kDims);

  SplitMix64 rng(mix_seed(seed, 30));
  Matrix points(static_cast<Index>(n_per_cluster) * kClusters, kDims);
  LabelVector labels(points.rows());
  for (int c = 0; c < kClusters; ++c) {
    for (Index i = 0; i < n_per_cluster; ++i) {
      const Index row = static_cast<Index>(c) * n_per_cluster + i;
      for (Index d = 0; d < kDims; ++d)
        points(row, d) = centers(c, d) + kSigma * rng.next_gaussian();
      labels[row] = c;
    }
  }
  return LabeledDataset{std::move(points), std::move(labels), kClusters};
}

EvalPair fallback_pair(int n_per_cluster, std::uint64_t seed) {
  LabeledDataset data = gaussian_mixture_fallback(n_per_cluster, seed);
  const PcaModel model = pca_fit(data.points, 2);
  LabeledDataset embedding{pca_project(model, data.points, 1, 2), data.labels,
                           data.k};
  return EvalPair{std::move(data), std::move(embedding)};
}

namespace {

std::vector<std::string> measure_columns(const std::string& id) {
  if (id == "label_tnc[dsc]") return {"label_t[dsc]", "label_c[dsc]"};
  if (id == "label_tnc[ch_btwn]")
    return {"label_t[ch_btwn]", "label_c[ch_btwn]"};
  if (id == "trust_cont") return {"trustworthiness", "continuity"};
  if (id == "mrre") return {"mrre_false", "mrre_missing"};
  if (id == "kl") return {"kl", "kl_quality"};
  if (id == "baseline[dsc]") return {"baseline[dsc]"};
  if (id == "baseline[ch_btwn]") return {"baseline[ch_btwn]"};
  return {};
}

}  // namespace

bool is_known_measure(const std::string& id) {
  return !measure_columns(id).empty();
}

SensitivityCurve run_experiment(const ExperimentSchedule& schedule,
                                const std::vector<std::string>& measures,
                                const CvmConfig& cvm_base,
                                const NeighborConfig& neighbors) {
  SensitivityCurve curve;
  curve.experiment_id = schedule.experiment_id;
  curve.parameter_name = schedule.parameter_name;
  for (const auto& id : measures) {
    if (!is_known_measure(id))
      raise(ErrorCode::InvalidK, "unknown measure: " + id);
    for (auto& column : measure_columns(id)) curve.columns.push_back(column);
  }

  for (std::size_t s = 0; s < schedule.steps.size(); ++s) {
    const ExperimentStep& step = schedule.steps[s];
    std::vector<double> row;
    try {
      for (const auto& id : measures) {
        if (id == "label_tnc[dsc]" || id == "label_tnc[ch_btwn]") {
          CvmConfig config = cvm_base;
          config.cvm_id = id == "label_tnc[dsc]" ? "dsc" : "ch_btwn";
          const DistortionReport report = label_tnc(step.pair, config);
          row.push_back(report.label_t);
          row.push_back(report.label_c);
        } else if (id == "trust_cont") {
          const TrustContResult tc = trust_cont(step.pair, neighbors);
          row.push_back(tc.trustworthiness);
          row.push_back(tc.continuity);
        } else if (id == "mrre") {
          const MrreResult mr = mrre(step.pair, neighbors);
          row.push_back(mr.mrre_false);
          row.push_back(mr.mrre_missing);
        } else if (id == "kl") {
          const KlResult kl = kl_density(step.pair, neighbors);
          row.push_back(kl.kl);
          row.push_back(kl.quality);
        } else {
          CvmConfig config = cvm_base;
          config.cvm_id = id == "baseline[dsc]" ? "dsc" : "ch_btwn";
          row.push_back(label_baseline(step.pair.embedding, config).score);
        }
      }
    } catch (const Error& e) {
      raise(e.code(),
            std::string(e.what()) + " (step " + std::to_string(s) + ")");
    }
    curve.parameters.push_back(step.parameter);
    curve.values.push_back(std::move(row));
  }
  return curve;
}

}  // namespace ltnc
