#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ltnc/synthbench.hpp"

namespace ltnc {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

/// Headerless CSV of finite decimals, equal column counts per row; with
/// header = true the first line is skipped. Row order is preserved.
Matrix read_matrix_csv(const std::string& path, bool header = false);
void write_matrix_csv(const Eigen::Ref<const Matrix>& matrix,
                      const std::string& path);

/// One integer per nonempty line. Contiguity remapping is left to
/// validate_pair.
LabelVector read_labels(const std::string& path);
void write_labels(const LabelVector& labels, const std::string& path);

struct LtncBlock {
  double label_t = 1.0;
  double label_c = 1.0;
  std::string quadrant;
  std::string guideline;
  Matrix clm_matrix_x;  // serialized row-major, k*k entries
  Matrix clm_matrix_z;
  Matrix m_fg;
  Matrix m_mg;
};

/// The eval report. Serialization is canonical: fixed key order, shortest
/// round-trip decimals, so identical documents produce identical bytes.
/// The competitors block reserves null slots (steadiness, cohesiveness,
/// ca_trust, ca_cont, dtm) for merging third-party values into comparison
/// tables. The timing block is optional because wall times vary from run
/// to run and the default output is byte-reproducible.
struct ReportDocument {
  std::string schema_version = "1";

  // metadata
  std::string data_path;
  std::string embedding_path;
  std::string labels_path;
  std::string tool_version;
  Index n = 0;
  Index dim_original = 0;
  Index dim_embedding = 0;
  int k = 0;
  std::uint64_t seed = 42;
  int mc_count = 200;
  std::vector<std::string> cvms;
  std::vector<int> k_list;
  std::vector<double> sigma_list;
  double hi = 0.9;
  double lo = 0.7;

  std::vector<std::pair<std::string, LtncBlock>> ltnc;  // per CVM, in order

  // competitors
  double trustworthiness = 1.0;
  double continuity = 1.0;
  double mrre_false = 1.0;
  double mrre_missing = 1.0;
  double kl = 0.0;
  double kl_quality = 1.0;
  std::vector<std::pair<std::string, double>> baseline;  // per CVM

  std::optional<std::map<std::string, double>> timing;
};

void write_report(const ReportDocument& report, const std::string& path);
ReportDocument read_report(const std::string& path);

/// Curve CSV: header "step_index,parameter,<measure columns in request
/// order>", one row per step. The JSON variant carries the same table.
void write_curve_csv(const SensitivityCurve& curve, const std::string& path);
void write_curve_json(const SensitivityCurve& curve, const std::string& path);
SensitivityCurve read_curve_json(const std::string& path);

}  // namespace ltnc
