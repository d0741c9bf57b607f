#include "piqc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "piqc/eigensolver.hpp"
#include "piqc/errors.hpp"
#include "piqc/models.hpp"
#include "piqc/presets.hpp"

namespace piqc::bench {

namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) throw ParseError(where.empty() ? key : where + "." + key, "unknown field");
  }
}

double get_number(const json& obj, const char* key, double fallback, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number()) throw ParseError(where + "." + key, "expected a number");
  return it->get<double>();
}

long long get_integer(const json& obj, const char* key, long long fallback, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) throw ParseError(where + "." + key, "expected an integer");
  return it->get<long long>();
}

int get_int(const json& obj, const char* key, int fallback, const std::string& where) {
  const long long v = get_integer(obj, key, fallback, where);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw ParseError(where + "." + key, "integer out of range");
  }
  return static_cast<int>(v);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column), "malformed document");
  }
}

ProblemSource parse_problem(const json& p, const std::filesystem::path& base_dir) {
  ProblemSource src;
  if (p.is_string()) {
    std::filesystem::path file = p.get<std::string>();
    src.file = file.is_absolute() || base_dir.empty() ? file : base_dir / file;
    return src;
  }
  if (!p.is_object()) throw ParseError("problem", "expected a file path or a model object");
  reject_unknown_keys(p, {"model", "sites", "coupling", "field"}, "problem");
  const auto model = p.find("model");
  if (model == p.end() || !model->is_string() || model->get<std::string>() != "tfim") {
    throw ParseError("problem.model", "only \"tfim\" is built in");
  }
  src.tfim_sites = get_int(p, "sites", 0, "problem");
  if (src.tfim_sites < 1 || src.tfim_sites > kMaxDenseQubits) throw ParseError("problem.sites", "out of range");
  src.tfim_coupling = get_number(p, "coupling", 1.0, "problem");
  src.tfim_field = get_number(p, "field", 1.0, "problem");
  return src;
}

AlgorithmSpec parse_algorithm_spec(const json& a, std::size_t index, const std::optional<MoleculePreset>& preset,
                                   std::optional<std::uint64_t> budget) {
  const std::string where = "algorithms[" + std::to_string(index) + "]";
  if (!a.is_object()) throw ParseError(where, "expected an object");
  const auto name = a.find("name");
  if (name == a.end() || !name->is_string()) throw ParseError(where + ".name", "missing algorithm name");

  AlgorithmSpec spec;
  try {
    spec.algorithm = parse_algorithm(name->get<std::string>());
  } catch (const InputError& e) {
    throw ParseError(where + ".name", e.what());
  }
  spec.label = std::string(algorithm_name(spec.algorithm));
  if (const auto l = a.find("label"); l != a.end()) {
    if (!l->is_string() || l->get<std::string>().empty()) throw ParseError(where + ".label", "expected a non-empty string");
    spec.label = l->get<std::string>();
  }

  if (spec.algorithm == Algorithm::spsa) {
    reject_unknown_keys(a, {"name", "label", "learning_rate", "perturbation", "iterations"}, where);
    spec.spsa.learning_rate = get_number(a, "learning_rate", preset ? preset->spsa_learning_rate : kNaN, where);
    spec.spsa.perturbation = get_number(a, "perturbation", preset ? preset->spsa_perturbation : kNaN, where);
    if (std::isnan(spec.spsa.learning_rate) || std::isnan(spec.spsa.perturbation)) {
      throw ParseError(where, "SPSA needs learning_rate and perturbation (or a preset)");
    }
    const long long fallback = budget ? static_cast<long long>(*budget / 2) : -1;
    const long long iters = get_integer(a, "iterations", fallback, where);
    if (iters < 0) throw ParseError(where + ".iterations", "missing (no q_eval_budget to derive it from)");
    spec.spsa.iterations = static_cast<int>(iters);
    try {
      spec.spsa.validate();
    } catch (const InputError& e) {
      throw ParseError(where, e.what());
    }
    return spec;
  }

  reject_unknown_keys(a, {"name", "label", "n_traj", "q_weight", "r_weight", "d_init", "d_final", "n_d", "n_s",
                          "segments", "substeps"},
                      where);
  spec.ais.n_traj = get_int(a, "n_traj", kPresetNTraj, where);
  spec.ais.q_weight = get_number(a, "q_weight", spec.ais.q_weight, where);
  spec.ais.r_weight = get_number(a, "r_weight", spec.ais.r_weight, where);
  spec.schedule.d_init = get_number(a, "d_init", kPresetDInit, where);
  spec.schedule.d_final = get_number(a, "d_final", preset ? preset->d_final : spec.schedule.d_final, where);
  spec.schedule.n_d = get_int(a, "n_d", preset ? preset->n_d : spec.schedule.n_d, where);
  spec.schedule.n_s = get_int(a, "n_s", preset ? preset->n_s : spec.schedule.n_s, where);
  if (spec.algorithm == Algorithm::piqc_pulse) {
    spec.pulse_segments = get_int(a, "segments", spec.pulse_segments, where);
    spec.sse_substeps = get_int(a, "substeps", spec.sse_substeps, where);
    if (spec.pulse_segments < 1 || spec.sse_substeps < 1) throw ParseError(where, "segments and substeps must be >= 1");
  } else if (a.contains("segments") || a.contains("substeps")) {
    throw ParseError(where, "segments/substeps apply to piqc-pulse only");
  }
  try {
    spec.schedule.validate();
    spec.ais.validate();
  } catch (const InputError& e) {
    throw ParseError(where, e.what());
  }
  return spec;
}

ExperimentConfig parse_config_json(const json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) throw ParseError("", "config must be an object");
  reject_unknown_keys(doc, {"problem", "preset", "ansatz", "algorithms", "seeds", "seed_count", "q_eval_budget",
                            "workers", "fixed_noise_levels", "sweep", "description"},
                      "");
  ExperimentConfig cfg;

  const auto problem = doc.find("problem");
  if (problem == doc.end()) throw ParseError("problem", "missing field");
  cfg.problem = parse_problem(*problem, base_dir);

  std::optional<MoleculePreset> preset;
  if (const auto p = doc.find("preset"); p != doc.end()) {
    if (!p->is_string()) throw ParseError("preset", "expected a string");
    preset = find_preset(p->get<std::string>());
    if (!preset) throw ParseError("preset", "unknown molecule preset \"" + p->get<std::string>() + "\"");
  }

  if (const auto a = doc.find("ansatz"); a != doc.end()) {
    if (!a->is_object()) throw ParseError("ansatz", "expected an object");
    reject_unknown_keys(*a, {"layers", "axes", "tau_g", "tau_v", "interaction"}, "ansatz");
    cfg.ansatz.layers = get_int(*a, "layers", cfg.ansatz.layers, "ansatz");
    if (cfg.ansatz.layers < 1) throw ParseError("ansatz.layers", "must be >= 1");
    if (const auto ax = a->find("axes"); ax != a->end()) {
      if (!ax->is_string() || ax->get<std::string>().empty()) throw ParseError("ansatz.axes", "expected e.g. \"ZXZ\"");
      cfg.ansatz.axes.clear();
      try {
        for (char c : ax->get<std::string>()) cfg.ansatz.axes.push_back(parse_axis(c));
      } catch (const InputError& e) {
        throw ParseError("ansatz.axes", e.what());
      }
    }
    cfg.ansatz.tau_g = get_number(*a, "tau_g", cfg.ansatz.tau_g, "ansatz");
    cfg.ansatz.tau_v = get_number(*a, "tau_v", cfg.ansatz.tau_v, "ansatz");
    cfg.ansatz.interaction = get_number(*a, "interaction", cfg.ansatz.interaction, "ansatz");
    if (!(cfg.ansatz.tau_g > 0.0) || !(cfg.ansatz.tau_v > 0.0)) throw ParseError("ansatz", "tau_g and tau_v must be > 0");
  }

  if (const auto b = doc.find("q_eval_budget"); b != doc.end()) {
    if (!b->is_number_integer() || b->get<long long>() < 0) throw ParseError("q_eval_budget", "expected a non-negative integer");
    cfg.q_eval_budget = b->get<std::uint64_t>();
  }

  const auto algos = doc.find("algorithms");
  if (algos == doc.end() || !algos->is_array() || algos->empty()) {
    throw ParseError("algorithms", "expected a non-empty array");
  }
  std::set<std::string> labels;
  for (std::size_t i = 0; i < algos->size(); ++i) {
    cfg.algorithms.push_back(parse_algorithm_spec((*algos)[i], i, preset, cfg.q_eval_budget));
    if (!labels.insert(cfg.algorithms.back().label).second) {
      throw ParseError("algorithms[" + std::to_string(i) + "].label", "duplicate label; set distinct labels");
    }
  }

  if (doc.contains("seeds") && doc.contains("seed_count")) throw ParseError("seeds", "give seeds or seed_count, not both");
  if (const auto s = doc.find("seeds"); s != doc.end()) {
    if (!s->is_array()) throw ParseError("seeds", "expected an array of integers");
    for (std::size_t i = 0; i < s->size(); ++i) {
      if (!(*s)[i].is_number_unsigned()) throw ParseError("seeds[" + std::to_string(i) + "]", "expected a non-negative integer");
      cfg.seeds.push_back((*s)[i].get<std::uint64_t>());
    }
  } else {
    const long long count = get_integer(doc, "seed_count", 20, "");
    if (count < 0) throw ParseError("seed_count", "must be >= 0");
    for (long long i = 0; i < count; ++i) cfg.seeds.push_back(static_cast<std::uint64_t>(i));
  }

  cfg.workers = get_int(doc, "workers", 1, "");
  if (cfg.workers < 1) throw ParseError("workers", "must be >= 1");

  if (const auto f = doc.find("fixed_noise_levels"); f != doc.end()) {
    if (!f->is_array()) throw ParseError("fixed_noise_levels", "expected an array of numbers");
    for (const auto& v : *f) {
      if (!v.is_number() || !(v.get<double>() > 0.0)) throw ParseError("fixed_noise_levels", "levels must be positive numbers");
      cfg.fixed_noise_levels.push_back(v.get<double>());
    }
  }

  json echo = doc;
  echo.erase("sweep");
  cfg.source_text = echo.dump();
  validate_budget(cfg);
  return cfg;
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

StateVector initial_state_for(const LoadedProblem& p) {
  const int n = p.problem.hamiltonian.n_qubits();
  if (p.problem.metadata.initial_state) {
    return StateVector::basis(n, io::basis_index_from_label(*p.problem.metadata.initial_state));
  }
  return StateVector(n);
}

double checked_error(double energy, const LoadedProblem& p) {
  const double error = energy - p.reference_energy;
  if (error < -1e-9 * std::max(1.0, std::abs(p.reference_energy))) {
    std::ostringstream os;
    os.precision(17);
    os << "energy " << energy << " lies below the reference ground energy " << p.reference_energy << " ("
       << p.reference_source << ")";
    throw ConsistencyError(os.str());
  }
  return error;
}

// Runs jobs [0, n) on up to `workers` threads; rethrows the first failure by index.
template <class Job>
void run_parallel(std::size_t n, int workers, Job job) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto n_threads = static_cast<std::size_t>(std::max(1, workers));
  if (n_threads == 1 || n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(n_threads, n); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::string_view algorithm_name(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::piqc_pulse: return "piqc-pulse";
    case Algorithm::piqc_gate: return "piqc-gate";
    case Algorithm::spsa: return "spsa";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "piqc-pulse") return Algorithm::piqc_pulse;
  if (name == "piqc-gate") return Algorithm::piqc_gate;
  if (name == "spsa") return Algorithm::spsa;
  throw InputError("unknown algorithm \"" + std::string(name) + "\" (expected piqc-pulse, piqc-gate or spsa)");
}

std::uint64_t AlgorithmSpec::q_eval() const noexcept {
  if (algorithm == Algorithm::spsa) return 2 * static_cast<std::uint64_t>(spsa.iterations);
  return static_cast<std::uint64_t>(ais.n_traj) * schedule.total_iterations();
}

std::string ProblemSource::label() const {
  if (file) return file->stem().string();
  char buf[96];
  std::snprintf(buf, sizeof buf, "tfim_n%d_j%g_h%g", tfim_sites, tfim_coupling, tfim_field);
  return buf;
}

ExperimentConfig parse_experiment_config(std::string_view text, const std::filesystem::path& base_dir) {
  return parse_config_json(parse_json(text), base_dir);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  return parse_experiment_config(read_text_file(path), path.parent_path());
}

std::string apply_overrides(std::string_view text, const std::vector<std::uint64_t>& seeds,
                            std::optional<int> workers) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("", "config must be an object");
  if (!seeds.empty()) {
    doc.erase("seed_count");
    doc["seeds"] = seeds;
  }
  if (workers) doc["workers"] = *workers;
  return doc.dump(2);
}

void validate_budget(const ExperimentConfig& config) {
  if (config.algorithms.empty()) return;
  const std::uint64_t expected = config.q_eval_budget.value_or(config.algorithms.front().q_eval());
  for (const auto& a : config.algorithms) {
    if (a.q_eval() != expected) {
      throw ConfigError("evaluation budget mismatch: " + a.label + " uses " + std::to_string(a.q_eval()) +
                        " energy evaluations, expected " + std::to_string(expected));
    }
  }
}

LoadedProblem load_problem(const ProblemSource& source) {
  LoadedProblem out{source.label(), io::Problem{PauliSum(1), {}}, 0.0, {}};
  if (source.file) {
    out.problem = io::load_pauli_sum(*source.file);
  } else {
    out.problem.hamiltonian = build_tfim(source.tfim_sites, source.tfim_coupling, source.tfim_field);
  }
  if (out.problem.metadata.reference_ground_energy) {
    out.reference_energy = *out.problem.metadata.reference_ground_energy;
    out.reference_source = "metadata";
  } else {
    out.reference_energy = exact_ground_state(out.problem.hamiltonian).ground_energy();
    out.reference_source = "exact_diagonalization";
  }
  return out;
}

AggregateResult aggregate_errors(std::span<const double> errors) {
  std::vector<double> finite;
  for (double e : errors)
    if (std::isfinite(e)) finite.push_back(e);
  if (finite.empty()) throw InputError("no finite errors to aggregate");
  AggregateResult r;
  r.n_seeds = finite.size();
  r.min_error = *std::min_element(finite.begin(), finite.end());
  r.max_error = *std::max_element(finite.begin(), finite.end());
  r.median_error = median_of(finite);
  r.within_chemical_accuracy = r.max_error < kChemicalAccuracy;
  return r;
}

bool ExperimentResult::any_diverged() const noexcept {
  for (const auto& a : algorithms)
    for (const auto& r : a.runs)
      if (r.trace.diverged) return true;
  return false;
}

GateProblem make_gate_problem(const LoadedProblem& problem, const AnsatzSettings& settings, std::uint64_t seed) {
  const int n = problem.problem.hamiltonian.n_qubits();
  AnsatzSpec ansatz =
      hardware_efficient_ansatz(n, settings.layers, settings.interaction, settings.tau_v, settings.tau_g, settings.axes);
  NoiseStream init(seed, 0, static_cast<std::uint64_t>(StreamDomain::init));
  CircuitParams theta0 = random_initial_angles(ansatz, init);
  return GateProblem{problem.problem.hamiltonian, initial_state_for(problem), std::move(ansatz), std::move(theta0)};
}

PulseProblem make_pulse_problem(const LoadedProblem& problem, const AnsatzSettings& settings,
                                const AlgorithmSpec& spec) {
  const int n = problem.problem.hamiltonian.n_qubits();
  const double horizon = settings.layers * (settings.tau_g + settings.tau_v);
  return PulseProblem{problem.problem.hamiltonian,
                      initial_state_for(problem),
                      build_drift_hamiltonian({n, settings.interaction, 1.0}),
                      rydberg_channels(n),
                      PulseSchedule::uniform(horizon, spec.pulse_segments, 2 * n),
                      spec.sse_substeps};
}

OptimizationTrace run_single(const LoadedProblem& problem, const ExperimentConfig& config, const AlgorithmSpec& spec,
                             std::uint64_t seed) {
  switch (spec.algorithm) {
    case Algorithm::piqc_gate: {
      AISConfig ais = spec.ais;
      ais.master_seed = seed;
      auto trace = run_piqc(make_gate_problem(problem, config.ansatz, seed), spec.schedule, ais);
      trace.algorithm = spec.label;
      return trace;
    }
    case Algorithm::piqc_pulse: {
      AISConfig ais = spec.ais;
      ais.master_seed = seed;
      auto trace = run_piqc(make_pulse_problem(problem, config.ansatz, spec), spec.schedule, ais);
      trace.algorithm = spec.label;
      return trace;
    }
    case Algorithm::spsa: {
      SPSAConfig cfg = spec.spsa;
      cfg.master_seed = seed;
      auto trace = run_spsa(make_gate_problem(problem, config.ansatz, seed), cfg);
      trace.algorithm = spec.label;
      return trace;
    }
  }
  throw InputError("unknown algorithm");
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  return run_experiment(config, load_problem(config.problem));
}

ExperimentResult run_experiment(const ExperimentConfig& config, const LoadedProblem& problem) {
  validate_budget(config);
  ExperimentResult result{problem, {}};
  const std::size_t n_seeds = config.seeds.size();
  for (const auto& spec : config.algorithms) {
    AlgorithmResult ar{spec, std::vector<SeedRun>(n_seeds), std::nullopt};
    result.algorithms.push_back(std::move(ar));
  }

  run_parallel(config.algorithms.size() * n_seeds, config.workers, [&](std::size_t job) {
    const std::size_t a = job / n_seeds, s = job % n_seeds;
    SeedRun& run = result.algorithms[a].runs[s];
    run.seed = config.seeds[s];
    run.trace = run_single(problem, config, config.algorithms[a], run.seed);
    run.error = run.trace.diverged ? kNaN : checked_error(run.trace.final_energy, problem);
  });

  for (auto& ar : result.algorithms) {
    std::vector<double> errors;
    for (const auto& r : ar.runs) errors.push_back(r.error);
    if (std::any_of(errors.begin(), errors.end(), [](double e) { return std::isfinite(e); })) {
      ar.aggregate = aggregate_errors(errors);
    }
  }
  return result;
}

std::vector<SweepPoint> expand_sweep(std::string_view text, const std::filesystem::path& base_dir) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("", "config must be an object");
  const auto sw = doc.find("sweep");
  if (sw == doc.end() || !sw->is_object()) throw ParseError("sweep", "missing sweep block");
  reject_unknown_keys(*sw, {"problems", "pointer", "values"}, "sweep");

  std::vector<std::pair<std::string, json>> docs;
  if (const auto probs = sw->find("problems"); probs != sw->end()) {
    if (sw->contains("pointer")) throw ParseError("sweep", "give problems or pointer/values, not both");
    if (!probs->is_array() || probs->empty()) throw ParseError("sweep.problems", "expected a non-empty array");
    for (const auto& p : *probs) {
      json d = doc;
      d["problem"] = p;
      docs.emplace_back(std::string{}, std::move(d));
    }
  } else {
    const auto ptr = sw->find("pointer");
    const auto vals = sw->find("values");
    if (ptr == sw->end() || !ptr->is_string()) throw ParseError("sweep.pointer", "expected a JSON pointer string");
    if (vals == sw->end() || !vals->is_array() || vals->empty()) throw ParseError("sweep.values", "expected a non-empty array");
    json::json_pointer pointer;
    try {
      pointer = json::json_pointer(ptr->get<std::string>());
    } catch (const json::exception& e) {
      throw ParseError("sweep.pointer", e.what());
    }
    for (const auto& v : *vals) {
      json d = doc;
      try {
        d[pointer] = v;
      } catch (const json::exception& e) {
        throw ParseError("sweep.pointer", e.what());
      }
      docs.emplace_back(ptr->get<std::string>() + "=" + v.dump(), std::move(d));
    }
  }

  std::vector<SweepPoint> points;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    auto& [label, d] = docs[i];
    d.erase("sweep");
    ExperimentConfig cfg;
    try {
      cfg = parse_config_json(d, base_dir);
    } catch (const ParseError& e) {
      throw ParseError("sweep point " + std::to_string(i) + (e.where().empty() ? "" : ": " + e.where()), e.message());
    }
    LoadedProblem problem = load_problem(cfg.problem);
    points.push_back(SweepPoint{label.empty() ? problem.label : label, std::move(cfg), std::move(problem)});
  }
  return points;
}

SweepResult sweep(const std::vector<SweepPoint>& points) {
  if (points.empty()) throw InputError("sweep needs at least one point");
  SweepResult out;
  for (const auto& p : points) {
    out.labels.push_back(p.label);
    out.points.push_back(run_experiment(p.config, p.problem));
  }
  return out;
}

AnnealComparison compare_anneal(const ExperimentConfig& config) {
  const auto it = std::find_if(config.algorithms.begin(), config.algorithms.end(),
                               [](const AlgorithmSpec& a) { return a.algorithm != Algorithm::spsa; });
  if (it == config.algorithms.end()) throw ConfigError("compare-anneal needs a PiQC algorithm in the config");
  const AlgorithmSpec base = *it;

  AnnealComparison out;
  out.problem = load_problem(config.problem);

  std::vector<double> levels = config.fixed_noise_levels;
  if (levels.empty()) levels = {base.schedule.d_init, 1e-8, 1e-10, base.schedule.d_final};

  std::vector<AlgorithmSpec> specs{base};
  out.columns.push_back("annealed");
  out.noise_levels.push_back(kNaN);
  for (double d : levels) {
    AlgorithmSpec fixed = base;
    fixed.schedule = AnnealingSchedule::fixed(d, base.schedule.n_d, base.schedule.n_s);
    char buf[48];
    std::snprintf(buf, sizeof buf, "D=%.3g", d);
    fixed.label = base.label + "-fixed-" + std::string(buf + 2);
    specs.push_back(fixed);
    out.columns.emplace_back(buf);
    out.noise_levels.push_back(d);
  }

  const std::size_t n_seeds = config.seeds.size();
  out.runs.assign(specs.size(), std::vector<SeedRun>(n_seeds));
  run_parallel(specs.size() * n_seeds, config.workers, [&](std::size_t job) {
    const std::size_t c = job / n_seeds, s = job % n_seeds;
    SeedRun& run = out.runs[c][s];
    run.seed = config.seeds[s];
    run.trace = run_single(out.problem, config, specs[c], run.seed);
    run.error = run.trace.diverged ? kNaN : checked_error(run.trace.final_energy, out.problem);
  });

  const std::uint64_t n_iter = base.schedule.total_iterations();
  out.median_error.assign(n_iter, std::vector<double>(specs.size(), kNaN));
  for (std::size_t c = 0; c < specs.size(); ++c) {
    for (std::uint64_t i = 0; i < n_iter; ++i) {
      std::vector<double> errs;
      for (const auto& run : out.runs[c])
        if (i < run.trace.rows.size()) errs.push_back(run.trace.rows[i].energy_min - out.problem.reference_energy);
      if (!errs.empty()) out.median_error[i][c] = median_of(errs);
    }
    std::vector<double> finals;
    for (const auto& run : out.runs[c])
      if (std::isfinite(run.error)) finals.push_back(run.error);
    out.final_median_error.push_back(finals.empty() ? kNaN : median_of(finals));
  }
  return out;
}

}  // namespace piqc::bench
