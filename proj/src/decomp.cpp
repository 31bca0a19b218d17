#include "ltnc/decomp.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace ltnc {

PcaModel pca_fit(const Eigen::Ref<const Matrix>& data, Index rank) {
  const Index n = data.rows();
  const Index dims = data.cols();
  if (n < 2) raise(ErrorCode::SizeMismatch, "pca_fit needs N >= 2");
  if (rank < 1 || rank > std::min(n - 1, dims))
    raise(ErrorCode::RankTooLarge,
          "rank " + std::to_string(rank) + " exceeds min(N-1, dims) = " +
              std::to_string(std::min(n - 1, dims)));
  if (!data.allFinite())
    raise(ErrorCode::NonFinite, "pca_fit on non-finite input");

  PcaModel model;
  model.mean = data.colwise().mean();
  const Matrix centered = data.rowwise() - model.mean;
  const Matrix covariance =
      (centered.transpose() * centered) / static_cast<double>(n - 1);

  Eigen::SelfAdjointEigenSolver<Matrix> solver(covariance);
  if (solver.info() != Eigen::Success)
    raise(ErrorCode::NoConvergence, "eigendecomposition did not converge");

  const double total_variance = std::max(covariance.trace(), 0.0);
  model.components.resize(dims, rank);
  model.eigenvalues.resize(rank);
  model.explained_ratio.resize(rank);
  for (Index r = 0; r < rank; ++r) {
    // eigenvalues come out ascending; take them from the top
    const Index source = dims - 1 - r;
    model.eigenvalues[r] = std::max(solver.eigenvalues()[source], 0.0);
    Vector component = solver.eigenvectors().col(source);
    // sign convention: largest-magnitude coordinate positive
    Index argmax = 0;
    component.cwiseAbs().maxCoeff(&argmax);
    if (component[argmax] < 0.0) component = -component;
    model.components.col(r) = component;
    model.explained_ratio[r] =
        total_variance > 0.0 ? model.eigenvalues[r] / total_variance : 0.0;
  }
  return model;
}

Matrix pca_project(const PcaModel& model, const Eigen::Ref<const Matrix>& data,
                   Index first, Index last) {
  const Index rank = model.components.cols();
  if (first < 1 || last < first || last > rank)
    raise(ErrorCode::BadRange,
          "component range [" + std::to_string(first) + ".." +
              std::to_string(last) + "] invalid for rank " +
              std::to_string(rank));
  if (data.cols() != model.components.rows())
    raise(ErrorCode::SizeMismatch, "data dims differ from the fitted model");
  return (data.rowwise() - model.mean) *
         model.components.middleCols(first - 1, last - first + 1);
}

Dendrogram ward_dendrogram(const Eigen::Ref<const Matrix>& data) {
  const Index n = data.rows();
  if (n < 2) raise(ErrorCode::SizeMismatch, "ward_dendrogram needs N >= 2");
  if (!data.allFinite())
    raise(ErrorCode::NonFinite, "ward_dendrogram on non-finite input");

  // squared Euclidean dissimilarities, updated in place
  Matrix d2(n, n);
  for (Index i = 0; i < n; ++i) {
    d2(i, i) = 0.0;
    for (Index j = i + 1; j < n; ++j) {
      const double v = (data.row(i) - data.row(j)).squaredNorm();
      d2(i, j) = v;
      d2(j, i) = v;
    }
  }

  std::vector<int> node(static_cast<std::size_t>(n));    // slot -> node id
  std::vector<double> size(static_cast<std::size_t>(n), 1.0);
  std::vector<bool> active(static_cast<std::size_t>(n), true);
  std::iota(node.begin(), node.end(), 0);

  Dendrogram tree;
  tree.n_leaves = static_cast<int>(n);
  tree.merges.reserve(static_cast<std::size_t>(n - 1));

  for (Index step = 0; step < n - 1; ++step) {
    Index best_a = -1;
    Index best_b = -1;
    double best = std::numeric_limits<double>::infinity();
    int best_left = 0;
    int best_right = 0;
    for (Index a = 0; a < n; ++a) {
      if (!active[static_cast<std::size_t>(a)]) continue;
      for (Index b = a + 1; b < n; ++b) {
        if (!active[static_cast<std::size_t>(b)]) continue;
        const double v = d2(a, b);
        int left = node[static_cast<std::size_t>(a)];
        int right = node[static_cast<std::size_t>(b)];
        if (left > right) std::swap(left, right);
        if (v < best ||
            (v == best &&
             (left < best_left || (left == best_left && right < best_right)))) {
          best = v;
          best_a = a;
          best_b = b;
          best_left = left;
          best_right = right;
        }
      }
    }

    const double na = size[static_cast<std::size_t>(best_a)];
    const double nb = size[static_cast<std::size_t>(best_b)];
    // Lance-Williams update for Ward's criterion; the merged cluster
    // reuses slot best_a
    for (Index w = 0; w < n; ++w) {
      if (!active[static_cast<std::size_t>(w)] || w == best_a || w == best_b)
        continue;
      const double nw = size[static_cast<std::size_t>(w)];
      const double updated =
          ((na + nw) * d2(best_a, w) + (nb + nw) * d2(best_b, w) -
           nw * d2(best_a, best_b)) /
          (na + nb + nw);
      d2(best_a, w) = updated;
      d2(w, best_a) = updated;
    }

    Merge merge;
    merge.left = best_left;
    merge.right = best_right;
    merge.height = std::sqrt(best);
    merge.size = static_cast<int>(na + nb);
    tree.merges.push_back(merge);

    node[static_cast<std::size_t>(best_a)] =
        tree.n_leaves + static_cast<int>(step);
    size[static_cast<std::size_t>(best_a)] = na + nb;
    active[static_cast<std::size_t>(best_b)] = false;
  }
  return tree;
}

namespace {

/// Flat partition from the merge prefix with height <= threshold.
LabelVector partition_at(const Dendrogram& tree, double threshold, int* k_out) {
  const int n = tree.n_leaves;
  std::vector<int> parent(static_cast<std::size_t>(2 * n - 1));
  std::iota(parent.begin(), parent.end(), 0);

  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };

  for (std::size_t m = 0; m < tree.merges.size(); ++m) {
    if (tree.merges[m].height > threshold) break;  // heights nondecreasing
    const int id = tree.n_leaves + static_cast<int>(m);
    parent[static_cast<std::size_t>(find(tree.merges[m].left))] = id;
    parent[static_cast<std::size_t>(find(tree.merges[m].right))] = id;
  }

  LabelVector roots(n);
  for (int i = 0; i < n; ++i) roots[i] = find(i);
  auto [labels, k] = remap_labels(roots);
  *k_out = k;
  return labels;
}

}  // namespace

std::vector<CutLevel> cut_levels(const Dendrogram& tree, int levels,
                                 bool from_zero) {
  if (levels < 1) raise(ErrorCode::InvalidK, "cut_levels needs levels >= 1");
  if (tree.merges.empty())
    raise(ErrorCode::SizeMismatch, "cut_levels needs a non-trivial dendrogram");

  const double h_max = tree.merges.back().height;
  const double h_min = from_zero ? 0.0 : tree.merges.front().height;

  std::vector<CutLevel> out;
  out.reserve(static_cast<std::size_t>(levels));
  for (int level = 1; level <= levels; ++level) {
    CutLevel cut;
    // the top level must reach h_max exactly so every merge is applied
    cut.threshold =
        level == levels
            ? h_max
            : h_min + static_cast<double>(level) * (h_max - h_min) / levels;
    cut.labels = partition_at(tree, cut.threshold, &cut.k);
    cut.usable = cut.k >= 2;
    out.push_back(std::move(cut));
  }
  return out;
}

}  // namespace ltnc
