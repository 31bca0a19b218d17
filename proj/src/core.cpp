#include "ltnc/core.hpp"

#include <unordered_map>

namespace ltnc {

std::pair<LabelVector, int> remap_labels(const LabelVector& labels) {
  std::unordered_map<int, int> seen;
  seen.reserve(static_cast<std::size_t>(labels.size()));
  LabelVector remapped(labels.size());
  int next = 0;
  for (Index i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = seen.emplace(labels[i], next);
    if (inserted) ++next;
    remapped[i] = it->second;
  }
  return {remapped, next};
}

LabeledDataset make_dataset(Matrix points, LabelVector labels) {
  if (points.rows() != labels.size())
    raise(ErrorCode::SizeMismatch,
          "points and labels disagree on N: " + std::to_string(points.rows()) +
              " vs " + std::to_string(labels.size()));
  if (points.rows() < 1 || points.cols() < 1)
    raise(ErrorCode::SizeMismatch, "dataset must have N >= 1 and dims >= 1");
  if (!points.allFinite())
    raise(ErrorCode::NonFinite, "dataset contains non-finite coordinates");
  auto [remapped, k] = remap_labels(labels);
  return LabeledDataset{std::move(points), std::move(remapped), k};
}

EvalPair validate_pair(const LabeledDataset& original,
                       const LabeledDataset& embedding) {
  if (original.points.rows() != embedding.points.rows())
    raise(ErrorCode::SizeMismatch,
          "original and embedding disagree on N: " +
              std::to_string(original.points.rows()) + " vs " +
              std::to_string(embedding.points.rows()));
  if (original.labels.size() != original.points.rows() ||
      embedding.labels.size() != embedding.points.rows())
    raise(ErrorCode::SizeMismatch, "labels length differs from N");
  if (original.labels != embedding.labels)
    raise(ErrorCode::LabelMismatch,
          "original and embedding labels differ elementwise");
  if (original.points.rows() < 2)
    raise(ErrorCode::SizeMismatch, "evaluation requires N >= 2");
  if (original.points.cols() < 1 || embedding.points.cols() < 1)
    raise(ErrorCode::SizeMismatch, "evaluation requires dims >= 1");
  if (!original.points.allFinite() || !embedding.points.allFinite())
    raise(ErrorCode::NonFinite, "coordinates contain non-finite values");

  auto [labels, k] = remap_labels(original.labels);
  if (k < 2)
    raise(ErrorCode::DegenerateLabels,
          "evaluation requires k >= 2 classes, got " + std::to_string(k));
  // Remapping assigns every index in 0..k-1 to at least one row, so no
  // class can be empty here.
  EvalPair pair;
  pair.original = LabeledDataset{original.points, labels, k};
  pair.embedding = LabeledDataset{embedding.points, labels, k};
  return pair;
}

LabeledDataset restrict_to_classes(const LabeledDataset& data, int class_a,
                                   int class_b) {
  std::vector<Index> rows;
  for (Index i = 0; i < data.labels.size(); ++i)
    if (data.labels[i] == class_a || data.labels[i] == class_b)
      rows.push_back(i);

  const Index count = static_cast<Index>(rows.size());
  Matrix points(count, data.points.cols());
  LabelVector labels(count);
  // gather column by column: sequential reads in column-major storage
  for (Index d = 0; d < data.points.cols(); ++d)
    for (Index r = 0; r < count; ++r)
      points(r, d) = data.points(rows[static_cast<std::size_t>(r)], d);
  for (Index r = 0; r < count; ++r)
    labels[r] = data.labels[rows[static_cast<std::size_t>(r)]] == class_a ? 0 : 1;
  return LabeledDataset{std::move(points), std::move(labels), 2};
}

}  // namespace ltnc
