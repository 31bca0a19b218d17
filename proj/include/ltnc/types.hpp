#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ltnc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;
using LabelVector = Eigen::VectorXi;
using Index = Eigen::Index;

/// Error categories raised by the library. The CLI maps file/content
/// problems to exit code 2 and precondition violations to exit code 3.
enum class ErrorCode {
  SizeMismatch,
  LabelMismatch,
  DegenerateLabels,
  NonFinite,
  ClassTooSmall,
  InvalidK,
  RankTooLarge,
  NoConvergence,
  BadRange,
  InsufficientDims,
  Io,
  Parse,
  RaggedRows,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline double clamp01(double v) {
  return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

}  // namespace ltnc
