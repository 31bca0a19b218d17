#pragma once

// Independent brute-force reference implementations of the rank- and
// density-based measures. Plain double loops over std::vector, sharing no
// code with the library paths they cross-check.

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "ltnc/types.hpp"

namespace oracle {

using ltnc::Index;
using ltnc::Matrix;

using Dist = std::vector<std::vector<double>>;

inline Dist distances(const Matrix& points) {
  const int n = static_cast<int>(points.rows());
  Dist d(static_cast<std::size_t>(n),
         std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double sum = 0.0;
      for (int c = 0; c < points.cols(); ++c) {
        const double diff = points(i, c) - points(j, c);
        sum += diff * diff;
      }
      d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          std::sqrt(sum);
    }
  return d;
}

/// ranks[i][j]: position of j in the distance ordering around i, ties by
/// ascending index; 0 on the diagonal.
inline std::vector<std::vector<int>> ranks(const Dist& d) {
  const int n = static_cast<int>(d.size());
  std::vector<std::vector<int>> out(
      static_cast<std::size_t>(n),
      std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    std::vector<int> idx;
    for (int j = 0; j < n; ++j)
      if (j != i) idx.push_back(j);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      const double da =
          d[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
      const double db =
          d[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)];
      return da < db || (da == db && a < b);
    });
    for (int r = 0; r < n - 1; ++r)
      out[static_cast<std::size_t>(i)]
         [static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])] = r + 1;
  }
  return out;
}

inline std::pair<double, double> trust_cont_at_k(const Matrix& x,
                                                 const Matrix& z, int k) {
  const int n = static_cast<int>(x.rows());
  const auto rx = ranks(distances(x));
  const auto rz = ranks(distances(z));
  double t_sum = 0.0;
  double c_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const int in_x =
          rx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const int in_z =
          rz[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (in_z <= k && in_x > k) t_sum += in_x - k;
      if (in_x <= k && in_z > k) c_sum += in_z - k;
    }
  }
  const double norm =
      2.0 / (static_cast<double>(n) * k * (2.0 * n - 3.0 * k - 1.0));
  auto clamp = [](double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); };
  return {clamp(1.0 - norm * t_sum), clamp(1.0 - norm * c_sum)};
}

inline std::pair<double, double> mrre_at_k(const Matrix& x, const Matrix& z,
                                           int k) {
  const int n = static_cast<int>(x.rows());
  const auto rx = ranks(distances(x));
  const auto rz = ranks(distances(z));
  double f_sum = 0.0;
  double m_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double in_x =
          rx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const double in_z =
          rz[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (in_z <= k) f_sum += std::abs(in_x - in_z) / in_z;
      if (in_x <= k) m_sum += std::abs(in_x - in_z) / in_x;
    }
  }
  double c = 0.0;
  for (int t = 1; t <= k; ++t)
    c += (static_cast<double>(n) - 2.0 * t + 1.0) / t;
  c *= n;
  auto clamp = [](double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); };
  return {clamp(1.0 - f_sum / c), clamp(1.0 - m_sum / c)};
}

inline double kl_at_sigma(const Matrix& x, const Matrix& z, double sigma) {
  const int n = static_cast<int>(x.rows());
  auto normalized = [&](const Matrix& points) {
    Dist d = distances(points);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        lo = std::min(
            lo, d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        hi = std::max(
            hi, d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto& cell =
            d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (i == j)
          cell = 0.0;
        else if (hi > lo)
          cell = (cell - lo) / (hi - lo);
        else
          cell = 1.0;
      }
    return d;
  };
  const Dist dx = normalized(x);
  const Dist dz = normalized(z);

  std::vector<double> px(static_cast<std::size_t>(n), 0.0);
  std::vector<double> pz(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double ex =
          dx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const double ez =
          dz[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      px[static_cast<std::size_t>(i)] += std::exp(-(ex * ex) / sigma);
      pz[static_cast<std::size_t>(i)] += std::exp(-(ez * ez) / sigma);
    }
  double sx = 0.0;
  double sz = 0.0;
  for (int i = 0; i < n; ++i) {
    sx += px[static_cast<std::size_t>(i)];
    sz += pz[static_cast<std::size_t>(i)];
  }
  double kl = 0.0;
  for (int i = 0; i < n; ++i)
    kl += (px[static_cast<std::size_t>(i)] / sx) *
          std::log((px[static_cast<std::size_t>(i)] / sx) /
                   (pz[static_cast<std::size_t>(i)] / sz));
  return kl;
}

}  // namespace oracle
