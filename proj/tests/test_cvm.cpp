#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ltnc/cvm.hpp"
#include "ltnc/parallel.hpp"
#include "test_support.hpp"

using namespace ltnc;

namespace {

LabeledDataset dataset_1d(std::initializer_list<double> coords,
                          std::initializer_list<int> labels) {
  Matrix points(static_cast<Index>(coords.size()), 1);
  Index i = 0;
  for (double c : coords) points(i++, 0) = c;
  LabelVector l(static_cast<Index>(labels.size()));
  i = 0;
  for (int v : labels) l[i++] = v;
  return make_dataset(std::move(points), std::move(l));
}

/// Uniform samples inside a 3-D ball.
LabeledDataset two_balls(Index n_per_class, double center_distance,
                         double radius, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Matrix points(2 * n_per_class, 3);
  LabelVector labels(2 * n_per_class);
  for (Index i = 0; i < 2 * n_per_class; ++i) {
    const int c = i < n_per_class ? 0 : 1;
    RowVector dir(3);
    for (Index d = 0; d < 3; ++d) dir[d] = rng.next_gaussian();
    dir /= dir.norm();
    const double r = radius * std::pow(rng.next_double(), 1.0 / 3.0);
    points.row(i) = r * dir;
    points(i, 0) += c == 0 ? 0.0 : center_distance;
    labels[i] = c;
  }
  return make_dataset(std::move(points), std::move(labels));
}

}  // namespace

TEST_CASE("dsc scores perfectly separated classes at 1") {
  const LabeledDataset data = dataset_1d({0, 1, 10, 11}, {0, 0, 1, 1});
  const CvmResult r = dsc(data);
  CHECK(r.score == 1.0);
  CHECK(r.diagnostics.at("f_own") == 1.0);
}

TEST_CASE("dsc scores the half-misassigned instance at 0") {
  // centroids 5 and 6; points 10 and 1 sit nearer the foreign centroid
  const LabeledDataset data = dataset_1d({0, 10, 1, 11}, {0, 0, 1, 1});
  const CvmResult r = dsc(data);
  CHECK(r.diagnostics.at("f_own") == 0.5);
  CHECK(r.score == 0.0);
}

TEST_CASE("dsc on fully overlapping clouds is near 0") {
  SplitMix64 rng(404);
  const Index n = 1000;
  Matrix points(n, 4);
  LabelVector labels(n);
  for (Index i = 0; i < n; ++i) {
    for (Index d = 0; d < 4; ++d) points(i, d) = rng.next_gaussian();
    labels[i] = static_cast<int>(rng.next_below(2));
  }
  if ((labels.array() == 0).count() < 2) labels[0] = 0;
  const CvmResult r = dsc(make_dataset(points, labels));
  CHECK(r.score <= 0.1);
}

TEST_CASE("dsc ignores coordinate scaling and affine distance wrappers") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const LabeledDataset data = gaussian_two_class(
        40 + static_cast<Index>(rng.next_below(60)), 6,
        rng.next_in(0.0, 10.0), rng.next_u64());
    const double base = dsc(data).score;

    const double alpha = rng.next_in(0.1, 10.0);
    const double beta = rng.next_in(0.1, 100.0);
    CHECK(dsc(data, DistanceOracle{alpha, beta}).score == base);

    LabeledDataset scaled = data;
    scaled.points *= rng.next_in(0.1, 10.0);
    CHECK(dsc(scaled).score == base);
  }
}

TEST_CASE("ch_btwn is near 0 for chance labelings on one blob") {
  const LabeledDataset data = gaussian_two_class(200, 5, 0.0, 920);
  const CvmConfig config{"ch_btwn", 200, 42};
  const CvmResult r = ch_btwn(data, DistanceOracle{}, config);
  CHECK(r.score <= 0.1);

  // cross-check the null mean with an independent larger run
  const CvmConfig big{"ch_btwn", 2000, 43};
  const CvmResult r2 = ch_btwn(data, DistanceOracle{}, big);
  CHECK(r2.score <= 0.1);
  CHECK(std::abs(r.diagnostics.at("null_mean") -
                 r2.diagnostics.at("null_mean")) < 0.02);
}

TEST_CASE("ch_btwn scores far-separated balls above 0.9") {
  const LabeledDataset data = two_balls(100, 100.0, 1.0, 7);
  const CvmConfig config{"ch_btwn", 200, 42};
  const CvmResult r = ch_btwn(data, DistanceOracle{}, config);
  CHECK(r.score >= 0.9);
}

TEST_CASE("ch_btwn scores null-drawn labelings at chance level") {
  const LabeledDataset base = two_balls(50, 3.0, 1.0, 21);
  const CvmConfig config{"ch_btwn", 300, 42};
  double total = 0.0;
  for (int draw = 0; draw < 8; ++draw) {
    LabeledDataset shuffled = base;
    std::vector<int> labels(shuffled.labels.data(),
                            shuffled.labels.data() + shuffled.labels.size());
    SplitMix64 rng(1000 + static_cast<std::uint64_t>(draw));
    shuffle(labels, rng);
    for (Index i = 0; i < shuffled.labels.size(); ++i)
      shuffled.labels[i] = labels[static_cast<std::size_t>(i)];
    const double score = ch_btwn(shuffled, DistanceOracle{}, config).score;
    CHECK(score <= 0.25);
    total += score;
  }
  CHECK(total / 8.0 <= 0.1);
}

TEST_CASE("ch_btwn is bitwise deterministic across thread counts") {
  const LabeledDataset data = gaussian_two_class(120, 8, 2.0, 77);
  const CvmConfig config{"ch_btwn", 500, 9};
  set_max_threads(1);
  const double s1 = ch_btwn(data, DistanceOracle{}, config).score;
  set_max_threads(8);
  const double s8 = ch_btwn(data, DistanceOracle{}, config).score;
  set_max_threads(1);
  CHECK(s1 == s8);
}

TEST_CASE("ch_btwn affine invariance holds to rounding error at equal seeds") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const LabeledDataset data =
        gaussian_two_class(80, 10, rng.next_in(0.5, 8.0), rng.next_u64());
    const CvmConfig config{"ch_btwn", 100, 5};
    const double base = ch_btwn(data, DistanceOracle{}, config).score;
    const double wrapped =
        ch_btwn(data, DistanceOracle{rng.next_in(0.1, 10.0),
                                     rng.next_in(0.1, 100.0)},
                config)
            .score;
    CHECK(std::abs(base - wrapped) < 1e-9);
  }
}

TEST_CASE("silhouette on far-separated tight classes is near 1") {
  const LabeledDataset data = gaussian_two_class(100, 4, 60.0, 10);
  CHECK(silhouette_cvm(data).score >= 0.95);
}

TEST_CASE("silhouette on coincident points is exactly 0.5") {
  Matrix points = Matrix::Zero(6, 2);
  LabelVector labels(6);
  labels << 0, 0, 0, 1, 1, 1;
  const CvmResult r = silhouette_cvm(LabeledDataset{points, labels, 2});
  CHECK(r.score == 0.5);
  CHECK(r.diagnostics.at("mean_silhouette") == 0.0);
}

TEST_CASE("silhouette is not shift invariant") {
  const LabeledDataset data = gaussian_two_class(60, 4, 8.0, 3);
  const double base = silhouette_cvm(data).score;
  const double shifted = silhouette_cvm(data, DistanceOracle{1.0, 80.0}).score;
  CHECK(std::abs(base - shifted) > 0.05);
}

TEST_CASE("silhouette rejects singleton classes") {
  const LabeledDataset data = dataset_1d({0, 1, 9}, {0, 0, 1});
  CHECK(ltest::code_of([&] { silhouette_cvm(data); }) ==
        ErrorCode::ClassTooSmall);
}

TEST_CASE("cvm scores stay in [0,1] on varied inputs") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const EvalPair pair = ltest::random_pair(seed);
    for (const char* id : {"dsc", "ch_btwn", "silhouette"}) {
      const CvmConfig config{id, 50, seed};
      try {
        const double score =
            evaluate_cvm(config, pair.original, DistanceOracle{}).score;
        CHECK(score >= 0.0);
        CHECK(score <= 1.0);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ClassTooSmall);
      }
    }
  }
}

TEST_CASE("relabeling class indices leaves CVM scores unchanged") {
  SplitMix64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    LabeledDataset data =
        ltest::random_mixture(60, 5, 3, rng.next_in(0.0, 6.0), rng.next_u64());
    LabeledDataset relabeled = data;
    for (Index i = 0; i < data.labels.size(); ++i)
      relabeled.labels[i] = (data.labels[i] + 1) % 3;  // cyclic permutation

    CHECK(dsc(data).score == dsc(relabeled).score);
    CHECK(silhouette_cvm(data).score == silhouette_cvm(relabeled).score);
    const CvmConfig config{"ch_btwn", 100, 17};
    CHECK(ch_btwn(data, DistanceOracle{}, config).score ==
          doctest::Approx(ch_btwn(relabeled, DistanceOracle{}, config).score)
              .epsilon(1e-12));
  }
}

TEST_CASE("axiom harness: dsc passes everything with zero deltas") {
  const AxiomReport report = check_axioms(CvmConfig{"dsc", 200, 42}, 30, 42);
  CHECK(report.all_passed());
  for (const auto& check : report.checks) {
    if (check.axiom == "scale" || check.axiom == "shift")
      CHECK(check.max_delta == 0.0);
  }
}

TEST_CASE("axiom harness: ch_btwn stays within tolerance at mc 1000") {
  const AxiomReport report =
      check_axioms(CvmConfig{"ch_btwn", 1000, 42}, 10, 42);
  for (const auto& check : report.checks) {
    if (check.axiom == "scale" || check.axiom == "shift") {
      CHECK(check.passed);
      CHECK(check.max_delta <= 0.02);
    }
    if (check.axiom == "hyperparameter") CHECK(check.passed);
  }
}

TEST_CASE("axiom harness: silhouette fails shift invariance with a witness") {
  const AxiomReport report =
      check_axioms(CvmConfig{"silhouette", 200, 42}, 30, 42);
  bool saw_shift = false;
  for (const auto& check : report.checks) {
    if (check.axiom == "shift") {
      saw_shift = true;
      CHECK_FALSE(check.passed);
      CHECK(check.max_delta > 0.05);
      CHECK(check.witness.beta > 0.0);
      CHECK(check.witness.trial >= 0);
    }
    if (check.axiom == "scale") CHECK(check.passed);
  }
  CHECK(saw_shift);
}
