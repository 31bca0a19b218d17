#include "ltnc/metricspace.hpp"

#include <limits>
#include <numeric>

#include "ltnc/parallel.hpp"

namespace ltnc {

Matrix pairwise_distances(const Eigen::Ref<const Matrix>& data,
                          const DistanceOracle& oracle) {
  const Index n = data.rows();
  if (n < 2) raise(ErrorCode::SizeMismatch, "pairwise distances need N >= 2");
  if (!data.allFinite())
    raise(ErrorCode::NonFinite, "pairwise distances on non-finite input");

  // points as columns: contiguous access per point in column-major storage
  const Matrix transposed = data.transpose();
  Matrix d(n, n);
  parallel_for(n, [&](Index i) {
    d(i, i) = oracle.beta;  // base distance 0, affine offset applied
    for (Index j = i + 1; j < n; ++j)
      d(i, j) = oracle(transposed.col(i), transposed.col(j));
  });
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) d(j, i) = d(i, j);
  return d;
}

CanonicalResult canonicalize(const Eigen::Ref<const Matrix>& distances) {
  const Index n = distances.rows();
  if (n < 2) raise(ErrorCode::SizeMismatch, "canonicalize needs N >= 2");

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      lo = std::min(lo, distances(i, j));
      hi = std::max(hi, distances(i, j));
    }

  CanonicalMap map;
  map.offset = lo;
  map.range = hi - lo;
  map.degenerate = !(hi > lo);

  Matrix canonical(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      canonical(i, j) = i == j ? 0.0 : map(distances(i, j));
  return {std::move(canonical), map};
}

RankTable rank_table(const Eigen::Ref<const Matrix>& distances) {
  const Index n = distances.rows();
  RankTable table;
  table.ranks = Eigen::MatrixXi::Zero(n, n);
  table.order.assign(static_cast<std::size_t>(n), {});

  parallel_for(n, [&](Index i) {
    auto& order = table.order[static_cast<std::size_t>(i)];
    order.resize(static_cast<std::size_t>(n - 1));
    int at = 0;
    for (Index j = 0; j < n; ++j)
      if (j != i) order[static_cast<std::size_t>(at++)] = static_cast<int>(j);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const double da = distances(i, a);
      const double db = distances(i, b);
      return da < db || (da == db && a < b);
    });
    for (std::size_t r = 0; r < order.size(); ++r)
      table.ranks(i, order[r]) = static_cast<int>(r) + 1;
  });
  return table;
}

Centroids class_centroids(const LabeledDataset& data) {
  const Index n = data.n();
  const Index dims = data.dims();
  Centroids c;
  c.class_means = Matrix::Zero(data.k, dims);
  Vector counts = Vector::Zero(data.k);
  for (Index i = 0; i < n; ++i) counts[data.labels[i]] += 1.0;
  for (int g = 0; g < data.k; ++g)
    if (counts[g] == 0.0)
      raise(ErrorCode::DegenerateLabels,
            "class " + std::to_string(g) + " is empty");
  // accumulate per column so the big matrix is read sequentially
  for (Index d = 0; d < dims; ++d)
    for (Index i = 0; i < n; ++i)
      c.class_means(data.labels[i], d) += data.points(i, d);
  for (int g = 0; g < data.k; ++g) c.class_means.row(g) /= counts[g];
  c.global_mean = data.points.colwise().mean();
  return c;
}

}  // namespace ltnc
