#include "ltnc/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string_view>

#include <json.hpp>

namespace ltnc {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
  std::array<char, 32> buffer;
  auto [ptr, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double parse_cell(std::string_view cell, std::size_t line, std::size_t column,
                  const std::string& path) {
  const std::string_view t = trim(cell);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    raise(ErrorCode::Parse, path + ": cannot parse '" + std::string(t) +
                                "' at line " + std::to_string(line) +
                                ", column " + std::to_string(column));
  if (!std::isfinite(value))
    raise(ErrorCode::NonFinite, path + ": non-finite value at line " +
                                    std::to_string(line) + ", column " +
                                    std::to_string(column));
  return value;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::Io, "cannot open for writing: " + path);
  return out;
}

}  // namespace

Matrix read_matrix_csv(const std::string& path, bool header) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::Io, "cannot open: " + path);

  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_number = 0;
  bool skipped_header = !header;
  Index columns = -1;

  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    if (!skipped_header) {
      skipped_header = true;
      continue;
    }
    std::vector<double> row;
    std::string_view rest = line;
    std::size_t column = 1;
    for (;;) {
      const std::size_t comma = rest.find(',');
      const std::string_view cell =
          comma == std::string_view::npos ? rest : rest.substr(0, comma);
      row.push_back(parse_cell(cell, line_number, column, path));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
      ++column;
    }
    if (columns < 0) columns = static_cast<Index>(row.size());
    if (static_cast<Index>(row.size()) != columns)
      raise(ErrorCode::RaggedRows,
            path + ": row at line " + std::to_string(line_number) + " has " +
                std::to_string(row.size()) + " columns, expected " +
                std::to_string(columns));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) raise(ErrorCode::Parse, path + ": no data rows");

  Matrix matrix(static_cast<Index>(rows.size()), columns);
  for (Index i = 0; i < matrix.rows(); ++i)
    for (Index j = 0; j < columns; ++j)
      matrix(i, j) = rows[static_cast<std::size_t>(i)]
                         [static_cast<std::size_t>(j)];
  return matrix;
}

void write_matrix_csv(const Eigen::Ref<const Matrix>& matrix,
                      const std::string& path) {
  std::ofstream out = open_out(path);
  for (Index i = 0; i < matrix.rows(); ++i) {
    for (Index j = 0; j < matrix.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_double(matrix(i, j));
    }
    out << '\n';
  }
  if (!out) raise(ErrorCode::Io, "write failed: " + path);
}

LabelVector read_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::Io, "cannot open: " + path);

  std::vector<int> values;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view t = trim(line);
    if (t.empty()) continue;
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
      raise(ErrorCode::Parse, path + ": cannot parse label '" +
                                  std::string(t) + "' at line " +
                                  std::to_string(line_number));
    values.push_back(value);
  }
  if (values.empty()) raise(ErrorCode::Parse, path + ": no labels");

  LabelVector labels(static_cast<Index>(values.size()));
  for (Index i = 0; i < labels.size(); ++i)
    labels[i] = values[static_cast<std::size_t>(i)];
  return labels;
}

void write_labels(const LabelVector& labels, const std::string& path) {
  std::ofstream out = open_out(path);
  for (Index i = 0; i < labels.size(); ++i) out << labels[i] << '\n';
  if (!out) raise(ErrorCode::Io, "write failed: " + path);
}

namespace {

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json flat = ordered_json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) flat.push_back(m(i, j));
  return flat;
}

Matrix matrix_from_json(const ordered_json& flat, Index k) {
  Matrix m(k, k);
  Index at = 0;
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j)
      m(i, j) = flat.at(static_cast<std::size_t>(at++)).get<double>();
  return m;
}

}  // namespace

void write_report(const ReportDocument& report, const std::string& path) {
  ordered_json j;
  j["schema_version"] = report.schema_version;

  ordered_json metadata;
  metadata["data"] = report.data_path;
  metadata["embedding"] = report.embedding_path;
  metadata["labels"] = report.labels_path;
  metadata["tool_version"] = report.tool_version;
  metadata["n"] = report.n;
  metadata["dim_original"] = report.dim_original;
  metadata["dim_embedding"] = report.dim_embedding;
  metadata["k"] = report.k;
  metadata["seed"] = report.seed;
  metadata["mc_count"] = report.mc_count;
  metadata["cvms"] = report.cvms;
  metadata["k_list"] = report.k_list;
  metadata["sigma_list"] = report.sigma_list;
  metadata["hi"] = report.hi;
  metadata["lo"] = report.lo;
  j["metadata"] = std::move(metadata);

  ordered_json ltnc_block;
  for (const auto& [cvm, block] : report.ltnc) {
    ordered_json b;
    b["label_t"] = block.label_t;
    b["label_c"] = block.label_c;
    b["quadrant"] = block.quadrant;
    b["guideline"] = block.guideline;
    b["clm_matrix_x"] = matrix_to_json(block.clm_matrix_x);
    b["clm_matrix_z"] = matrix_to_json(block.clm_matrix_z);
    b["m_fg"] = matrix_to_json(block.m_fg);
    b["m_mg"] = matrix_to_json(block.m_mg);
    ltnc_block[cvm] = std::move(b);
  }
  j["ltnc"] = std::move(ltnc_block);

  ordered_json competitors;
  competitors["trustworthiness"] = report.trustworthiness;
  competitors["continuity"] = report.continuity;
  competitors["mrre_false"] = report.mrre_false;
  competitors["mrre_missing"] = report.mrre_missing;
  competitors["kl"] = report.kl;
  competitors["kl_quality"] = report.kl_quality;
  ordered_json baseline;
  for (const auto& [cvm, score] : report.baseline) baseline[cvm] = score;
  competitors["baseline"] = std::move(baseline);
  // reserved slots for externally computed measures
  competitors["steadiness"] = nullptr;
  competitors["cohesiveness"] = nullptr;
  competitors["ca_trust"] = nullptr;
  competitors["ca_cont"] = nullptr;
  competitors["dtm"] = nullptr;
  j["competitors"] = std::move(competitors);

  if (report.timing) {
    ordered_json timing;
    for (const auto& [name, seconds] : *report.timing) timing[name] = seconds;
    j["timing"] = std::move(timing);
  }

  std::ofstream out = open_out(path);
  out << j.dump(2) << '\n';
  if (!out) raise(ErrorCode::Io, "write failed: " + path);
}

ReportDocument read_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::Io, "cannot open: " + path);
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const std::exception& e) {
    raise(ErrorCode::Parse, path + ": " + e.what());
  }

  try {
    ReportDocument report;
    report.schema_version = j.at("schema_version").get<std::string>();
    const auto& metadata = j.at("metadata");
    report.data_path = metadata.at("data").get<std::string>();
    report.embedding_path = metadata.at("embedding").get<std::string>();
    report.labels_path = metadata.at("labels").get<std::string>();
    report.tool_version = metadata.at("tool_version").get<std::string>();
    report.n = metadata.at("n").get<Index>();
    report.dim_original = metadata.at("dim_original").get<Index>();
    report.dim_embedding = metadata.at("dim_embedding").get<Index>();
    report.k = metadata.at("k").get<int>();
    report.seed = metadata.at("seed").get<std::uint64_t>();
    report.mc_count = metadata.at("mc_count").get<int>();
    report.cvms = metadata.at("cvms").get<std::vector<std::string>>();
    report.k_list = metadata.at("k_list").get<std::vector<int>>();
    report.sigma_list =
        metadata.at("sigma_list").get<std::vector<double>>();
    report.hi = metadata.at("hi").get<double>();
    report.lo = metadata.at("lo").get<double>();

    for (const auto& [cvm, b] : j.at("ltnc").items()) {
      LtncBlock block;
      block.label_t = b.at("label_t").get<double>();
      block.label_c = b.at("label_c").get<double>();
      block.quadrant = b.at("quadrant").get<std::string>();
      block.guideline = b.at("guideline").get<std::string>();
      block.clm_matrix_x = matrix_from_json(b.at("clm_matrix_x"), report.k);
      block.clm_matrix_z = matrix_from_json(b.at("clm_matrix_z"), report.k);
      block.m_fg = matrix_from_json(b.at("m_fg"), report.k);
      block.m_mg = matrix_from_json(b.at("m_mg"), report.k);
      report.ltnc.emplace_back(cvm, std::move(block));
    }

    const auto& competitors = j.at("competitors");
    report.trustworthiness = competitors.at("trustworthiness").get<double>();
    report.continuity = competitors.at("continuity").get<double>();
    report.mrre_false = competitors.at("mrre_false").get<double>();
    report.mrre_missing = competitors.at("mrre_missing").get<double>();
    report.kl = competitors.at("kl").get<double>();
    report.kl_quality = competitors.at("kl_quality").get<double>();
    for (const auto& [cvm, score] : competitors.at("baseline").items())
      report.baseline.emplace_back(cvm, score.get<double>());

    if (j.contains("timing")) {
      std::map<std::string, double> timing;
      for (const auto& [name, seconds] : j.at("timing").items())
        timing[name] = seconds.get<double>();
      report.timing = std::move(timing);
    }
    return report;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    raise(ErrorCode::Parse, path + ": malformed report: " + e.what());
  }
}

void write_curve_csv(const SensitivityCurve& curve, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "step_index,parameter";
  for (const auto& column : curve.columns) out << ',' << column;
  out << '\n';
  for (std::size_t s = 0; s < curve.parameters.size(); ++s) {
    out << s << ',' << format_double(curve.parameters[s]);
    for (double v : curve.values[s]) out << ',' << format_double(v);
    out << '\n';
  }
  if (!out) raise(ErrorCode::Io, "write failed: " + path);
}

void write_curve_json(const SensitivityCurve& curve, const std::string& path) {
  ordered_json j;
  j["schema_version"] = "1";
  j["experiment"] = curve.experiment_id;
  j["parameter_name"] = curve.parameter_name;
  j["columns"] = curve.columns;
  ordered_json steps = ordered_json::array();
  for (std::size_t s = 0; s < curve.parameters.size(); ++s) {
    ordered_json step;
    step["step_index"] = s;
    step["parameter"] = curve.parameters[s];
    ordered_json scores;
    for (std::size_t c = 0; c < curve.columns.size(); ++c)
      scores[curve.columns[c]] = curve.values[s][c];
    step["scores"] = std::move(scores);
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);

  std::ofstream out = open_out(path);
  out << j.dump(2) << '\n';
  if (!out) raise(ErrorCode::Io, "write failed: " + path);
}

SensitivityCurve read_curve_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::Io, "cannot open: " + path);
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const std::exception& e) {
    raise(ErrorCode::Parse, path + ": " + e.what());
  }
  try {
    SensitivityCurve curve;
    curve.experiment_id = j.at("experiment").get<std::string>();
    curve.parameter_name = j.at("parameter_name").get<std::string>();
    curve.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& step : j.at("steps")) {
      curve.parameters.push_back(step.at("parameter").get<double>());
      std::vector<double> row;
      for (const auto& column : curve.columns)
        row.push_back(step.at("scores").at(column).get<double>());
      curve.values.push_back(std::move(row));
    }
    return curve;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    raise(ErrorCode::Parse, path + ": malformed curve: " + e.what());
  }
}

}  // namespace ltnc
