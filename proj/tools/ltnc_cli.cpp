// Command-line front end: evaluate embeddings, run sensitivity benchmarks,
// generate their datasets, derive clustering labels, and check CVM axioms.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "ltnc/decomp.hpp"
#include "ltnc/io.hpp"
#include "ltnc/parallel.hpp"

namespace fs = std::filesystem;
using namespace ltnc;

namespace {

constexpr const char* kToolVersion = "1.0.0";

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Io:
    case ErrorCode::Parse:
    case ErrorCode::RaggedRows:
    case ErrorCode::NonFinite:
    case ErrorCode::SizeMismatch:
    case ErrorCode::LabelMismatch:
    case ErrorCode::DegenerateLabels:
      return 2;
    default:
      return 3;
  }
}

int default_threads() {
  if (const char* env = std::getenv("LTNC_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed >= 1) return parsed;
  }
  return 1;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

struct EvalOptions {
  std::string data_path;
  std::string embedding_path;
  std::string labels_path;
  bool header = false;
  std::vector<std::string> cvms;
  int mc_count = 200;
  std::uint64_t seed = 42;
  std::vector<int> k_list = {5, 10, 15, 20, 25};
  std::vector<double> sigma_list = {0.01, 0.1, 1.0};
  double hi = 0.9;
  double lo = 0.7;
  int threads = default_threads();
  std::string out_path = "ltnc_report.json";
  bool timing = false;
};

int run_eval(const EvalOptions& opt) {
  set_max_threads(opt.threads);

  const Matrix x = read_matrix_csv(opt.data_path, opt.header);
  const Matrix z = read_matrix_csv(opt.embedding_path, opt.header);
  const LabelVector labels = read_labels(opt.labels_path);
  const EvalPair pair =
      validate_pair(make_dataset(x, labels), make_dataset(z, labels));

  ReportDocument report;
  report.data_path = opt.data_path;
  report.embedding_path = opt.embedding_path;
  report.labels_path = opt.labels_path;
  report.tool_version = kToolVersion;
  report.n = pair.original.n();
  report.dim_original = pair.original.dims();
  report.dim_embedding = pair.embedding.dims();
  report.k = pair.original.k;
  report.seed = opt.seed;
  report.mc_count = opt.mc_count;
  report.cvms = opt.cvms;
  report.k_list = opt.k_list;
  report.sigma_list = opt.sigma_list;
  report.hi = opt.hi;
  report.lo = opt.lo;

  std::map<std::string, double> timing;
  const InterpretThresholds thresholds{opt.hi, opt.lo};

  for (const auto& cvm : opt.cvms) {
    CvmConfig config{cvm, opt.mc_count, opt.seed};
    const auto start = std::chrono::steady_clock::now();
    const DistortionReport d = label_tnc(pair, config, thresholds);
    timing["label_tnc[" + cvm + "]"] = seconds_since(start);

    LtncBlock block;
    block.label_t = d.label_t;
    block.label_c = d.label_c;
    block.quadrant = quadrant_name(d.quadrant);
    block.guideline = d.guideline;
    block.clm_matrix_x = d.clm_x.values;
    block.clm_matrix_z = d.clm_z.values;
    block.m_fg = d.m_fg;
    block.m_mg = d.m_mg;
    report.ltnc.emplace_back(cvm, std::move(block));

    std::cout << "label_t[" << cvm << "] = " << std::fixed
              << std::setprecision(3) << d.label_t << "  label_c[" << cvm
              << "] = " << d.label_c << "  quadrant "
              << quadrant_name(d.quadrant) << "\n";
  }

  const NeighborConfig neighbors{opt.k_list, opt.sigma_list};
  {
    const auto start = std::chrono::steady_clock::now();
    const TrustContResult tc = trust_cont(pair, neighbors);
    timing["trust_cont"] = seconds_since(start);
    report.trustworthiness = tc.trustworthiness;
    report.continuity = tc.continuity;
    std::cout << "trustworthiness = " << std::fixed << std::setprecision(3)
              << tc.trustworthiness << "\n"
              << "continuity = " << tc.continuity << "\n";
  }
  {
    const auto start = std::chrono::steady_clock::now();
    const MrreResult mr = mrre(pair, neighbors);
    timing["mrre"] = seconds_since(start);
    report.mrre_false = mr.mrre_false;
    report.mrre_missing = mr.mrre_missing;
    std::cout << "mrre_false = " << std::fixed << std::setprecision(3)
              << mr.mrre_false << "\n"
              << "mrre_missing = " << mr.mrre_missing << "\n";
  }
  {
    const auto start = std::chrono::steady_clock::now();
    const KlResult kl = kl_density(pair, neighbors);
    timing["kl"] = seconds_since(start);
    report.kl = kl.kl;
    report.kl_quality = kl.quality;
    std::cout << "kl = " << std::fixed << std::setprecision(3) << kl.kl
              << "  kl_quality = " << kl.quality << "\n";
  }
  for (const auto& cvm : opt.cvms) {
    CvmConfig config{cvm, opt.mc_count, opt.seed};
    const auto start = std::chrono::steady_clock::now();
    const CvmResult base = label_baseline(pair.embedding, config);
    timing["baseline[" + cvm + "]"] = seconds_since(start);
    report.baseline.emplace_back(cvm, base.score);
    std::cout << "baseline[" << cvm << "] = " << std::fixed
              << std::setprecision(3) << base.score << "\n";
  }

  for (const auto& [name, secs] : timing)
    std::cerr << "# " << name << ": " << secs << " s\n";
  if (opt.timing) report.timing = timing;

  write_report(report, opt.out_path);
  std::cout << "report written to " << opt.out_path << "\n";
  return 0;
}

struct BenchOptions {
  std::string experiment;
  int n_per_cluster = 100;
  std::uint64_t seed = 42;
  std::string data_path;
  std::string embedding_path;
  std::string labels_path;
  bool header = false;
  bool synthetic_fallback = false;
  std::vector<std::string> measures = {"label_tnc[dsc]",
                                       "label_tnc[ch_btwn]"};
  int mc_count = 200;
  std::vector<int> k_list = {5, 10, 15, 20, 25};
  std::vector<double> sigma_list = {0.01, 0.1, 1.0};
  int threads = default_threads();
  std::string out_dir = ".";
};

LabeledDataset bench_input_dataset(const BenchOptions& opt) {
  if (!opt.data_path.empty() && !opt.labels_path.empty()) {
    const Matrix x = read_matrix_csv(opt.data_path, opt.header);
    return make_dataset(x, read_labels(opt.labels_path));
  }
  if (!opt.synthetic_fallback)
    raise(ErrorCode::InvalidK,
          "experiment " + opt.experiment +
              " needs --data/--labels or --synthetic-fallback");
  return gaussian_mixture_fallback(opt.n_per_cluster, opt.seed);
}

EvalPair bench_base_pair(const BenchOptions& opt) {
  if (!opt.data_path.empty() && !opt.embedding_path.empty() &&
      !opt.labels_path.empty()) {
    const Matrix x = read_matrix_csv(opt.data_path, opt.header);
    const Matrix z = read_matrix_csv(opt.embedding_path, opt.header);
    const LabelVector labels = read_labels(opt.labels_path);
    return validate_pair(make_dataset(x, labels), make_dataset(z, labels));
  }
  if (!opt.synthetic_fallback)
    raise(ErrorCode::InvalidK,
          "experiment " + opt.experiment +
              " needs --data/--embedding/--labels or --synthetic-fallback");
  return fallback_pair(opt.n_per_cluster, opt.seed);
}

ExperimentSchedule bench_schedule(const BenchOptions& opt) {
  const std::string& e = opt.experiment;
  if (e == "a")
    return schedule_randomize("embedding", bench_base_pair(opt), opt.seed);
  if (e == "b1") return schedule_b("B1", opt.n_per_cluster, opt.seed);
  if (e == "b2") return schedule_b("B2", opt.n_per_cluster, opt.seed);
  if (e == "c") return schedule_pca("C", bench_input_dataset(opt));
  if (e == "d")
    return schedule_randomize("original", bench_base_pair(opt), opt.seed);
  if (e == "e") return schedule_e(opt.n_per_cluster, opt.seed);
  if (e == "f") return schedule_pca("F", bench_input_dataset(opt));
  raise(ErrorCode::InvalidK, "unknown experiment: " + e);
}

int run_bench(const BenchOptions& opt) {
  set_max_threads(opt.threads);
  const ExperimentSchedule schedule = bench_schedule(opt);
  const CvmConfig cvm_base{"dsc", opt.mc_count, opt.seed};
  const NeighborConfig neighbors{opt.k_list, opt.sigma_list};
  const SensitivityCurve curve =
      run_experiment(schedule, opt.measures, cvm_base, neighbors);

  fs::create_directories(opt.out_dir);
  const std::string base =
      (fs::path(opt.out_dir) / ("experiment_" + opt.experiment)).string();
  write_curve_csv(curve, base + ".csv");
  write_curve_json(curve, base + ".json");
  std::cout << "wrote " << base << ".csv\n"
            << "wrote " << base << ".json\n";
  return 0;
}

int run_generate(const BenchOptions& opt) {
  set_max_threads(opt.threads);
  const ExperimentSchedule schedule = bench_schedule(opt);

  const fs::path dir = fs::path(opt.out_dir) / opt.experiment;
  fs::create_directories(dir);

  write_labels(schedule.steps.front().pair.original.labels,
               (dir / "labels.txt").string());

  // the fixed side is bitwise constant across steps; write it once
  const bool original_fixed =
      opt.experiment == "a" || opt.experiment == "b1" ||
      opt.experiment == "b2" || opt.experiment == "c";
  if (original_fixed)
    write_matrix_csv(schedule.steps.front().pair.original.points,
                     (dir / "x.csv").string());
  else
    write_matrix_csv(schedule.steps.front().pair.embedding.points,
                     (dir / "z.csv").string());

  SensitivityCurve manifest;  // reuse the curve JSON as a step manifest
  manifest.experiment_id = schedule.experiment_id;
  manifest.parameter_name = schedule.parameter_name;
  for (std::size_t s = 0; s < schedule.steps.size(); ++s) {
    std::ostringstream name;
    name << (original_fixed ? "z_" : "x_") << std::setw(3)
         << std::setfill('0') << s << ".csv";
    const LabeledDataset& variable = original_fixed
                                         ? schedule.steps[s].pair.embedding
                                         : schedule.steps[s].pair.original;
    write_matrix_csv(variable.points, (dir / name.str()).string());
    manifest.parameters.push_back(schedule.steps[s].parameter);
    manifest.values.push_back({});
  }
  write_curve_json(manifest, (dir / "schedule.json").string());
  std::cout << "wrote " << schedule.steps.size() << " steps to "
            << dir.string() << "\n";
  return 0;
}

struct ClusterLabelsOptions {
  std::string data_path;
  bool header = false;
  int levels = 20;
  std::string linkage = "ward";
  bool from_zero = false;
  std::string out_dir = ".";
  int threads = default_threads();
};

int run_cluster_labels(const ClusterLabelsOptions& opt) {
  set_max_threads(opt.threads);
  if (opt.linkage != "ward")
    raise(ErrorCode::InvalidK, "only ward linkage is supported");

  const Matrix data = read_matrix_csv(opt.data_path, opt.header);
  const Dendrogram tree = ward_dendrogram(data);
  const std::vector<CutLevel> cuts =
      cut_levels(tree, opt.levels, opt.from_zero);

  fs::create_directories(opt.out_dir);
  int written = 0;
  for (std::size_t level = 0; level < cuts.size(); ++level) {
    const CutLevel& cut = cuts[level];
    if (!cut.usable) {
      std::cout << "level " << level + 1 << ": k=" << cut.k
                << " (unusable, skipped)\n";
      continue;
    }
    std::ostringstream name;
    name << "labels_level_" << std::setw(2) << std::setfill('0') << level + 1
         << ".txt";
    const std::string path = (fs::path(opt.out_dir) / name.str()).string();
    write_labels(cut.labels, path);
    std::cout << "level " << level + 1 << ": k=" << cut.k << " -> " << path
              << "\n";
    ++written;
  }
  std::cout << written << " usable level(s) of " << cuts.size() << "\n";
  return 0;
}

struct AxiomOptions {
  std::string cvm = "dsc";
  int trials = 100;
  std::uint64_t seed = 42;
  int mc_count = 1000;
  bool strict = false;
  int threads = default_threads();
};

int run_axioms(const AxiomOptions& opt) {
  set_max_threads(opt.threads);
  const CvmConfig config{opt.cvm, opt.mc_count, opt.seed};
  const AxiomReport report = check_axioms(config, opt.trials, opt.seed);

  std::cout << "axiom check: " << report.cvm_id << " (trials=" << opt.trials
            << ", seed=" << opt.seed << ", mc_count=" << opt.mc_count
            << ")\n";
  for (const auto& check : report.checks) {
    std::cout << "  " << std::left << std::setw(15) << check.axiom
              << (check.passed ? "PASS" : "FAIL")
              << "  max delta = " << check.max_delta << "\n";
    if (!check.note.empty()) std::cout << "    " << check.note << "\n";
    if (!check.passed) {
      const AxiomWitness& w = check.witness;
      std::cout << "    witness: trial " << w.trial << ", n=" << w.n
                << ", dims=" << w.dims << ", separation=" << w.separation
                << ", alpha=" << w.alpha << ", beta=" << w.beta << ", score "
                << w.score_base << " -> " << w.score_transformed
                << " (delta " << w.delta << ")\n";
    }
  }
  if (report.all_passed()) {
    std::cout << "all axioms passed\n";
    return 0;
  }
  std::cout << "axiom failures reported\n";
  return opt.strict ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Label-Trustworthiness & Label-Continuity: evaluates how reliably a "
      "dimensionality-reduction embedding preserves cluster-label matching."};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  EvalOptions eval_opt;
  auto* eval = app.add_subcommand(
      "eval", "Evaluate an embedding against its original data");
  eval->add_option("--data", eval_opt.data_path, "Original data CSV (N x D)")
      ->required();
  eval->add_option("--embedding", eval_opt.embedding_path,
                   "Embedding CSV (N x d)")
      ->required();
  eval->add_option("--labels", eval_opt.labels_path,
                   "Class labels, one integer per line")
      ->required();
  eval->add_flag("--header", eval_opt.header, "Skip the first CSV line");
  eval->add_option("--cvm", eval_opt.cvms, "CVM to evaluate with (repeatable)")
      ->check(CLI::IsMember({"dsc", "ch_btwn", "silhouette"}));
  eval->add_option("--mc-count", eval_opt.mc_count,
                   "Permutations for the ch_btwn null")
      ->check(CLI::PositiveNumber);
  eval->add_option("--seed", eval_opt.seed, "RNG seed");
  eval->add_option("--k-list", eval_opt.k_list,
                   "Neighborhood sizes for rank measures")
      ->delimiter(',');
  eval->add_option("--sigma-list", eval_opt.sigma_list,
                   "Gaussian kernel widths for kl")
      ->delimiter(',');
  eval->add_option("--hi", eval_opt.hi, "High threshold for quadrants");
  eval->add_option("--lo", eval_opt.lo, "Low threshold for quadrants");
  eval->add_option("--threads", eval_opt.threads,
                   "Worker threads (env LTNC_THREADS)");
  eval->add_option("--out", eval_opt.out_path, "Report output path");
  eval->add_flag("--timing", eval_opt.timing,
                 "Include wall times in the report (breaks byte "
                 "reproducibility across runs)");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand(
      "bench", "Run a sensitivity experiment and write score curves");
  auto add_bench_options = [](CLI::App* cmd, BenchOptions& opt) {
    cmd->add_option("--experiment", opt.experiment,
                    "One of a, b1, b2, c, d, e, f")
        ->required()
        ->check(CLI::IsMember({"a", "b1", "b2", "c", "d", "e", "f"}));
    cmd->add_option("--n-per-cluster", opt.n_per_cluster,
                    "Points per synthetic cluster")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opt.seed, "RNG seed");
    cmd->add_option("--data", opt.data_path,
                    "Original data CSV (experiments a, c, d, f)");
    cmd->add_option("--embedding", opt.embedding_path,
                    "Base embedding CSV (experiments a, d)");
    cmd->add_option("--labels", opt.labels_path, "Class labels file");
    cmd->add_flag("--header", opt.header, "Skip the first CSV line");
    cmd->add_flag("--synthetic-fallback", opt.synthetic_fallback,
                  "Use the built-in 6-Gaussian 200-D dataset");
    cmd->add_option("--mc-count", opt.mc_count,
                    "Permutations for the ch_btwn null")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", opt.threads,
                    "Worker threads (env LTNC_THREADS)");
    cmd->add_option("--out", opt.out_dir, "Output directory");
  };
  add_bench_options(bench, bench_opt);
  bench
      ->add_option("--measures", bench_opt.measures,
                   "Measures to evaluate at every step")
      ->delimiter(',');
  bench->add_option("--k-list", bench_opt.k_list, "Neighborhood sizes")
      ->delimiter(',');
  bench->add_option("--sigma-list", bench_opt.sigma_list, "Kernel widths")
      ->delimiter(',');

  BenchOptions generate_opt;
  auto* generate =
      app.add_subcommand("generate", "Write an experiment's datasets to files");
  add_bench_options(generate, generate_opt);

  ClusterLabelsOptions cluster_opt;
  auto* cluster = app.add_subcommand(
      "cluster-labels",
      "Derive multi-granularity labels from Ward-linkage clustering");
  cluster->add_option("--data", cluster_opt.data_path, "Data CSV")->required();
  cluster->add_flag("--header", cluster_opt.header, "Skip the first CSV line");
  cluster->add_option("--levels", cluster_opt.levels,
                      "Number of threshold levels")
      ->check(CLI::PositiveNumber);
  cluster->add_option("--linkage", cluster_opt.linkage, "Linkage criterion")
      ->check(CLI::IsMember({"ward"}));
  cluster->add_flag("--threshold-from-zero", cluster_opt.from_zero,
                    "Anchor thresholds at 0 instead of the first merge "
                    "height");
  cluster->add_option("--out", cluster_opt.out_dir, "Output directory");
  cluster->add_option("--threads", cluster_opt.threads,
                      "Worker threads (env LTNC_THREADS)");

  AxiomOptions axiom_opt;
  auto* axioms =
      app.add_subcommand("axioms", "Check the CVM requirements empirically");
  axioms->add_option("--cvm", axiom_opt.cvm, "CVM to check")
      ->check(CLI::IsMember({"dsc", "ch_btwn", "silhouette"}));
  axioms->add_option("--trials", axiom_opt.trials, "Random trials")
      ->check(CLI::PositiveNumber);
  axioms->add_option("--seed", axiom_opt.seed, "RNG seed");
  axioms->add_option("--mc-count", axiom_opt.mc_count,
                     "Permutations for the ch_btwn null")
      ->check(CLI::PositiveNumber);
  axioms->add_flag("--strict", axiom_opt.strict, "Exit 4 when an axiom fails");
  axioms->add_option("--threads", axiom_opt.threads,
                     "Worker threads (env LTNC_THREADS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (eval_opt.cvms.empty()) eval_opt.cvms = {"dsc", "ch_btwn"};

  try {
    if (eval->parsed()) return run_eval(eval_opt);
    if (bench->parsed()) return run_bench(bench_opt);
    if (generate->parsed()) return run_generate(generate_opt);
    if (cluster->parsed()) return run_cluster_labels(cluster_opt);
    if (axioms->parsed()) return run_axioms(axiom_opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
