#include "ltnc/rankmeasures.hpp"

#include <cmath>

#include "ltnc/parallel.hpp"

namespace ltnc {

namespace {

void require_k_list(const NeighborConfig& config, Index n) {
  if (config.k_list.empty())
    raise(ErrorCode::InvalidK, "k_list must not be empty");
  for (int k : config.k_list) {
    if (k < 1) raise(ErrorCode::InvalidK, "k must be >= 1");
    if (3 * k >= 2 * n - 1)
      raise(ErrorCode::InvalidK,
            "k = " + std::to_string(k) + " too large for N = " +
                std::to_string(n) + " (requires k < (2N-1)/3)");
  }
}

}  // namespace

TrustContResult trust_cont(const EvalPair& pair, const NeighborConfig& config) {
  const Index n = pair.original.n();
  require_k_list(config, n);

  const RankTable rx = rank_table(pairwise_distances(pair.original.points));
  const RankTable rz = rank_table(pairwise_distances(pair.embedding.points));

  TrustContResult result;
  for (int k : config.k_list) {
    std::vector<double> t_terms(static_cast<std::size_t>(n), 0.0);
    std::vector<double> c_terms(static_cast<std::size_t>(n), 0.0);
    parallel_for(n, [&](Index i) {
      double t_sum = 0.0;
      double c_sum = 0.0;
      const auto& zi = rz.order[static_cast<std::size_t>(i)];
      const auto& xi = rx.order[static_cast<std::size_t>(i)];
      for (int r = 0; r < k; ++r) {
        const int jz = zi[static_cast<std::size_t>(r)];
        if (rx.ranks(i, jz) > k) t_sum += rx.ranks(i, jz) - k;
        const int jx = xi[static_cast<std::size_t>(r)];
        if (rz.ranks(i, jx) > k) c_sum += rz.ranks(i, jx) - k;
      }
      t_terms[static_cast<std::size_t>(i)] = t_sum;
      c_terms[static_cast<std::size_t>(i)] = c_sum;
    });
    double t_total = 0.0;
    double c_total = 0.0;
    for (Index i = 0; i < n; ++i) {
      t_total += t_terms[static_cast<std::size_t>(i)];
      c_total += c_terms[static_cast<std::size_t>(i)];
    }
    const double norm =
        2.0 / (static_cast<double>(n) * k * (2.0 * n - 3.0 * k - 1.0));
    result.per_k_trust.push_back(clamp01(1.0 - norm * t_total));
    result.per_k_cont.push_back(clamp01(1.0 - norm * c_total));
  }

  result.trustworthiness = 0.0;
  result.continuity = 0.0;
  for (std::size_t i = 0; i < result.per_k_trust.size(); ++i) {
    result.trustworthiness += result.per_k_trust[i];
    result.continuity += result.per_k_cont[i];
  }
  result.trustworthiness /= static_cast<double>(result.per_k_trust.size());
  result.continuity /= static_cast<double>(result.per_k_cont.size());
  return result;
}

MrreResult mrre(const EvalPair& pair, const NeighborConfig& config) {
  const Index n = pair.original.n();
  require_k_list(config, n);

  const RankTable rx = rank_table(pairwise_distances(pair.original.points));
  const RankTable rz = rank_table(pairwise_distances(pair.embedding.points));

  MrreResult result;
  for (int k : config.k_list) {
    double normalizer = 0.0;
    for (int t = 1; t <= k; ++t)
      normalizer += (static_cast<double>(n) - 2.0 * t + 1.0) / t;
    normalizer *= static_cast<double>(n);
    if (normalizer <= 0.0)
      raise(ErrorCode::InvalidK,
            "mrre normalizer not positive for k = " + std::to_string(k));

    std::vector<double> f_terms(static_cast<std::size_t>(n), 0.0);
    std::vector<double> m_terms(static_cast<std::size_t>(n), 0.0);
    parallel_for(n, [&](Index i) {
      double f_sum = 0.0;
      double m_sum = 0.0;
      const auto& zi = rz.order[static_cast<std::size_t>(i)];
      const auto& xi = rx.order[static_cast<std::size_t>(i)];
      for (int r = 0; r < k; ++r) {
        const int jz = zi[static_cast<std::size_t>(r)];
        f_sum += std::abs(static_cast<double>(rx.ranks(i, jz)) -
                          rz.ranks(i, jz)) /
                 rz.ranks(i, jz);
        const int jx = xi[static_cast<std::size_t>(r)];
        m_sum += std::abs(static_cast<double>(rx.ranks(i, jx)) -
                          rz.ranks(i, jx)) /
                 rx.ranks(i, jx);
      }
      f_terms[static_cast<std::size_t>(i)] = f_sum;
      m_terms[static_cast<std::size_t>(i)] = m_sum;
    });
    double f_total = 0.0;
    double m_total = 0.0;
    for (Index i = 0; i < n; ++i) {
      f_total += f_terms[static_cast<std::size_t>(i)];
      m_total += m_terms[static_cast<std::size_t>(i)];
    }
    result.per_k_false.push_back(clamp01(1.0 - f_total / normalizer));
    result.per_k_missing.push_back(clamp01(1.0 - m_total / normalizer));
  }

  result.mrre_false = 0.0;
  result.mrre_missing = 0.0;
  for (std::size_t i = 0; i < result.per_k_false.size(); ++i) {
    result.mrre_false += result.per_k_false[i];
    result.mrre_missing += result.per_k_missing[i];
  }
  result.mrre_false /= static_cast<double>(result.per_k_false.size());
  result.mrre_missing /= static_cast<double>(result.per_k_missing.size());
  return result;
}

KlResult kl_density(const EvalPair& pair, const NeighborConfig& config) {
  if (config.sigma_list.empty())
    raise(ErrorCode::InvalidK, "sigma_list must not be empty");
  for (double s : config.sigma_list)
    if (!(s > 0.0)) raise(ErrorCode::InvalidK, "sigmas must be > 0");

  const Index n = pair.original.n();
  const Matrix ex =
      canonicalize(pairwise_distances(pair.original.points)).distances;
  const Matrix ez =
      canonicalize(pairwise_distances(pair.embedding.points)).distances;

  KlResult result;
  for (double sigma : config.sigma_list) {
    Vector phi_x = Vector::Zero(n);
    Vector phi_z = Vector::Zero(n);
    for (Index i = 0; i < n; ++i) {
      double sx = 0.0;
      double sz = 0.0;
      for (Index j = 0; j < n; ++j) {
        if (j == i) continue;
        sx += std::exp(-(ex(i, j) * ex(i, j)) / sigma);
        sz += std::exp(-(ez(i, j) * ez(i, j)) / sigma);
      }
      phi_x[i] = sx;
      phi_z[i] = sz;
    }
    const double total_x = phi_x.sum();
    const double total_z = phi_z.sum();
    double kl = 0.0;
    for (Index i = 0; i < n; ++i) {
      const double px = phi_x[i] / total_x;
      const double pz = phi_z[i] / total_z;
      kl += px * std::log(px / pz);
    }
    result.per_sigma.push_back(kl);
  }

  result.kl = 0.0;
  for (double v : result.per_sigma) result.kl += v;
  result.kl /= static_cast<double>(result.per_sigma.size());
  result.quality = 1.0 / (1.0 + result.kl);
  return result;
}

CvmResult label_baseline(const LabeledDataset& embedding,
                         const CvmConfig& config) {
  return evaluate_cvm(config, embedding, DistanceOracle{});
}

}  // namespace ltnc
