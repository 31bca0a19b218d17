#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "ltnc/metricspace.hpp"
#include "ltnc/parallel.hpp"
#include "test_support.hpp"

using namespace ltnc;

TEST_CASE("pairwise distances apply the affine wrapper") {
  Matrix points(2, 1);
  points << 0, 3;

  const Matrix plain = pairwise_distances(points);
  CHECK(plain(0, 1) == 3.0);
  CHECK(plain(1, 0) == 3.0);
  CHECK(plain(0, 0) == 0.0);

  const Matrix wrapped = pairwise_distances(points, DistanceOracle{2.0, 1.0});
  CHECK(wrapped(0, 1) == 7.0);
  CHECK(wrapped(0, 0) == 1.0);  // diagonal carries the offset
}

TEST_CASE("pairwise distances on a 3-4-5 right triangle") {
  Matrix points(3, 2);
  points << 0, 0, 3, 0, 0, 4;
  const Matrix d = pairwise_distances(points);
  CHECK(d(0, 1) == doctest::Approx(3.0));
  CHECK(d(0, 2) == doctest::Approx(4.0));
  CHECK(d(1, 2) == doctest::Approx(5.0));
}

TEST_CASE("canonicalize maps off-diagonal extremes to 0 and 1") {
  Matrix points(3, 2);
  points << 0, 0, 3, 0, 0, 4;
  const CanonicalResult canon = canonicalize(pairwise_distances(points));
  CHECK(canon.distances(0, 1) == 0.0);
  CHECK(canon.distances(0, 2) == 0.5);
  CHECK(canon.distances(1, 2) == 1.0);
  CHECK(canon.distances(0, 0) == 0.0);
}

TEST_CASE("canonicalize degenerate rule: equal off-diagonals map to 1") {
  Matrix d = Matrix::Constant(3, 3, 7.0);
  d.diagonal().setZero();
  const CanonicalResult canon = canonicalize(d);
  CHECK(canon.distances(0, 1) == 1.0);
  CHECK(canon.distances(1, 2) == 1.0);
  CHECK(canon.distances(1, 1) == 0.0);
}

TEST_CASE("canonicalize cancels an exactly representable affine wrap") {
  Matrix points(3, 2);
  points << 0, 0, 3, 0, 0, 4;
  const Matrix base = canonicalize(pairwise_distances(points)).distances;
  const Matrix wrapped =
      canonicalize(pairwise_distances(points, DistanceOracle{2.0, 1.0}))
          .distances;
  CHECK(base == wrapped);  // bitwise: 2d+1 on {3,4,5} is exact arithmetic
}

TEST_CASE("canonicalize cancels power-of-two scalings bitwise") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const LabeledDataset data =
        ltest::random_mixture(40, 6, 2, 3.0, rng.next_u64());
    const Matrix base = canonicalize(pairwise_distances(data.points)).distances;
    for (double alpha : {0.25, 2.0, 1024.0}) {
      const Matrix scaled =
          canonicalize(
              pairwise_distances(data.points, DistanceOracle{alpha, 0.0}))
              .distances;
      CHECK(base == scaled);
    }
  }
}

TEST_CASE("canonicalize cancels arbitrary affine wraps to rounding error") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const LabeledDataset data =
        ltest::random_mixture(50, 5, 2, 4.0, rng.next_u64());
    const double alpha = rng.next_in(0.1, 10.0);
    const double beta = rng.next_in(0.1, 100.0);
    const Matrix base = canonicalize(pairwise_distances(data.points)).distances;
    const Matrix wrapped =
        canonicalize(
            pairwise_distances(data.points, DistanceOracle{alpha, beta}))
            .distances;
    CHECK((base - wrapped).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("rank table on 1-D points {0, 1, 3}") {
  Matrix points(3, 1);
  points << 0, 1, 3;
  const RankTable table = rank_table(pairwise_distances(points));
  CHECK(table.ranks(0, 1) == 1);
  CHECK(table.ranks(0, 2) == 2);
  CHECK(table.ranks(0, 0) == 0);
  CHECK(table.ranks(2, 1) == 1);
  CHECK(table.ranks(2, 0) == 2);
  CHECK(table.knn(0, 1) == std::vector<int>{1});
}

TEST_CASE("rank ties break by ascending point index") {
  // points 2 and 5 are equidistant from point 0
  Matrix points(6, 1);
  points << 0, 10, 4, 20, 30, -4;
  const RankTable table = rank_table(pairwise_distances(points));
  CHECK(table.ranks(0, 2) < table.ranks(0, 5));
}

TEST_CASE("rank table is deterministic") {
  const LabeledDataset data = ltest::random_mixture(60, 4, 2, 2.0, 99);
  const Matrix d = pairwise_distances(data.points);
  const RankTable a = rank_table(d);
  const RankTable b = rank_table(d);
  CHECK(a.ranks == b.ranks);
}

TEST_CASE("per-row ranks form the multiset 1..N-1") {
  const LabeledDataset data = ltest::random_mixture(40, 3, 2, 1.0, 5);
  const RankTable table = rank_table(pairwise_distances(data.points));
  for (Index i = 0; i < 40; ++i) {
    std::vector<int> ranks;
    for (Index j = 0; j < 40; ++j)
      if (j != i) ranks.push_back(table.ranks(i, j));
    std::sort(ranks.begin(), ranks.end());
    for (int r = 0; r < 39; ++r) CHECK(ranks[static_cast<std::size_t>(r)] == r + 1);
  }
}

TEST_CASE("rank table is invariant under affine distance wraps") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const LabeledDataset data =
        ltest::random_mixture(45, 7, 3, 5.0, rng.next_u64());
    const double alpha = rng.next_in(0.1, 10.0);
    const double beta = rng.next_in(0.1, 100.0);
    const RankTable base = rank_table(pairwise_distances(data.points));
    const RankTable wrapped = rank_table(
        pairwise_distances(data.points, DistanceOracle{alpha, beta}));
    CHECK(base.ranks == wrapped.ranks);
  }
}

TEST_CASE("class centroids") {
  Matrix points(2, 1);
  points << 0, 2;
  LabelVector labels(2);
  labels << 0, 0;
  SUBCASE("mean of a two-point class") {
    LabeledDataset data{points, labels, 1};
    CHECK(class_centroids(data).class_means(0, 0) == 1.0);
  }
  SUBCASE("singleton class sits at its point") {
    Matrix p(3, 1);
    p << 5, 0, 2;
    LabelVector l(3);
    l << 0, 1, 1;
    LabeledDataset data{p, l, 2};
    const Centroids c = class_centroids(data);
    CHECK(c.class_means(0, 0) == 5.0);
    CHECK(c.class_means(1, 0) == 1.0);
  }
  SUBCASE("global centroid of two balanced classes") {
    Matrix p(4, 1);
    p << 0, 2, 4, 6;
    LabelVector l(4);
    l << 0, 0, 1, 1;
    LabeledDataset data{p, l, 2};
    CHECK(class_centroids(data).global_mean(0) == 3.0);
  }
}

TEST_CASE("pairwise distances are identical across thread counts") {
  const LabeledDataset data = ltest::random_mixture(80, 10, 2, 3.0, 31);
  set_max_threads(1);
  const Matrix d1 = pairwise_distances(data.points);
  set_max_threads(8);
  const Matrix d8 = pairwise_distances(data.points);
  set_max_threads(1);
  CHECK(d1 == d8);
}

TEST_CASE("pairwise distances scale roughly quadratically in N") {
  set_max_threads(1);
  // dims chosen high enough that the kernel stays compute-bound at both
  // sizes, keeping the ratio near the asymptotic 4x
  const LabeledDataset small = ltest::random_mixture(600, 100, 2, 1.0, 77);
  const LabeledDataset large = ltest::random_mixture(1200, 100, 2, 1.0, 78);

  auto time_of = [](const Matrix& points) {
    double best = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep < 5; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      volatile double sink = pairwise_distances(points).sum();
      (void)sink;
      best = std::min(
          best, std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count());
    }
    return best;
  };

  const double t_small = time_of(small.points);
  const double t_large = time_of(large.points);
  CHECK(t_large / t_small <= 4.5);
}
