#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "piqc/hamiltonian_io.hpp"
#include "piqc/piqc.hpp"
#include "piqc/spsa.hpp"
#include "piqc/trace.hpp"

namespace piqc::bench {

enum class Algorithm { piqc_pulse, piqc_gate, spsa };

std::string_view algorithm_name(Algorithm algorithm) noexcept;
Algorithm parse_algorithm(std::string_view name);

struct AlgorithmSpec {
  Algorithm algorithm = Algorithm::piqc_gate;
  std::string label;  // file-name tag; defaults to the algorithm name
  AnnealingSchedule schedule;
  AISConfig ais;
  SPSAConfig spsa;
  int pulse_segments = 11;
  int sse_substeps = 200;

  /// Total energy evaluations: N_traj * n_s * n_D for PiQC, 2 * I for SPSA.
  std::uint64_t q_eval() const noexcept;
};

struct AnsatzSettings {
  int layers = 9;
  std::vector<Axis> axes{Axis::Z, Axis::X, Axis::Z};
  double tau_g = 1.0;        // ms
  double tau_v = 10.0;       // ms
  double interaction = 0.1;  // kHz, V = c6 / r^6
};

/// A problem file or a built-in transverse-field Ising chain.
struct ProblemSource {
  std::optional<std::filesystem::path> file;
  int tfim_sites = 0;
  double tfim_coupling = 1.0;
  double tfim_field = 1.0;

  std::string label() const;
};

struct ExperimentConfig {
  ProblemSource problem;
  std::vector<AlgorithmSpec> algorithms;
  AnsatzSettings ansatz;
  std::vector<std::uint64_t> seeds;
  std::optional<std::uint64_t> q_eval_budget;
  int workers = 1;
  std::vector<double> fixed_noise_levels;  // compare-anneal; empty = defaults
  std::string source_text;                 // normalized config document, echoed in outputs
};

/// Parses the JSON experiment document. Relative problem paths resolve
/// against `base_dir`. Throws ParseError for malformed documents and
/// ConfigError for unequal budgets.
ExperimentConfig parse_experiment_config(std::string_view text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Returns `text` with "seeds" and/or "workers" replaced (command-line
/// overrides), so the echoed config matches what ran.
std::string apply_overrides(std::string_view text, const std::vector<std::uint64_t>& seeds,
                            std::optional<int> workers);

std::string read_text_file(const std::filesystem::path& path);

/// Throws ConfigError unless every algorithm's q_eval() equals the budget
/// (or, without an explicit budget, each other).
void validate_budget(const ExperimentConfig& config);

struct LoadedProblem {
  std::string label;
  io::Problem problem;
  double reference_energy = 0.0;
  std::string reference_source;  // "metadata" or "exact_diagonalization"
};

LoadedProblem load_problem(const ProblemSource& source);

struct SeedRun {
  std::uint64_t seed = 0;
  OptimizationTrace trace;
  double error = 0.0;  // final_energy - E0; NaN if diverged
};

struct AggregateResult {
  double median_error = 0.0;
  double min_error = 0.0;
  double max_error = 0.0;
  std::size_t n_seeds = 0;
  bool within_chemical_accuracy = false;  // max_error < 1.6e-3
};

AggregateResult aggregate_errors(std::span<const double> errors);

struct AlgorithmResult {
  AlgorithmSpec spec;
  std::vector<SeedRun> runs;
  std::optional<AggregateResult> aggregate;  // empty without finite errors
};

struct ExperimentResult {
  LoadedProblem problem;
  std::vector<AlgorithmResult> algorithms;

  bool any_diverged() const noexcept;
};

/// Builds the per-seed problems for one algorithm. Gate-based runs and SPSA
/// share the ansatz and the seed's initial angles; pulse runs start from zero
/// controls over T = L (tau_g + tau_v).
GateProblem make_gate_problem(const LoadedProblem& problem, const AnsatzSettings& settings, std::uint64_t seed);
PulseProblem make_pulse_problem(const LoadedProblem& problem, const AnsatzSettings& settings,
                                const AlgorithmSpec& spec);

OptimizationTrace run_single(const LoadedProblem& problem, const ExperimentConfig& config, const AlgorithmSpec& spec,
                             std::uint64_t seed);

/// Runs every (algorithm, seed) pair, up to `workers` concurrently, and
/// aggregates errors against the reference energy.
ExperimentResult run_experiment(const ExperimentConfig& config);
ExperimentResult run_experiment(const ExperimentConfig& config, const LoadedProblem& problem);

/// One point on a sweep axis.
struct SweepPoint {
  std::string label;
  ExperimentConfig config;
  LoadedProblem problem;
};

/// Expands the document's "sweep" block: either {"problems": [...]} or
/// {"pointer": "/json/pointer", "values": [...]}. Every point is parsed (and
/// its problem loaded) before anything runs.
std::vector<SweepPoint> expand_sweep(std::string_view text, const std::filesystem::path& base_dir = {});

struct SweepResult {
  std::vector<std::string> labels;
  std::vector<ExperimentResult> points;
};

SweepResult sweep(const std::vector<SweepPoint>& points);

/// Annealed run against fixed-D runs with the same total iterations.
struct AnnealComparison {
  LoadedProblem problem;
  std::vector<std::string> columns;            // "annealed", then "D=<value>"
  std::vector<double> noise_levels;            // NaN for the annealed column
  std::vector<std::vector<SeedRun>> runs;      // [column][seed]
  std::vector<std::vector<double>> median_error;  // [iteration][column], energy_min - E0
  std::vector<double> final_median_error;      // per column
};

/// Uses the first PiQC algorithm of `config`. Default fixed levels are
/// {d_init, 1e-8, 1e-10, d_final}.
AnnealComparison compare_anneal(const ExperimentConfig& config);

}  // namespace piqc::bench
