// Acceptance gate. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. Pass criterion numbers as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "piqc/eigensolver.hpp"
#include "piqc/errors.hpp"
#include "piqc/experiment.hpp"
#include "piqc/lindblad.hpp"
#include "piqc/models.hpp"
#include "piqc/outputs.hpp"
#include "piqc/pauli.hpp"
#include "piqc/piqc.hpp"
#include "piqc/presets.hpp"
#include "piqc/spsa.hpp"

namespace {

using namespace piqc;
using namespace piqc::bench;
namespace fs = std::filesystem;

constexpr double kPi = std::numbers::pi;
const fs::path kSourceDir = PIQC_SOURCE_DIR;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

NoiseStream rng_for(std::uint64_t stream) { return NoiseStream(2024, stream, static_cast<std::uint64_t>(StreamDomain::test)); }

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// 1. Every statevector operation against dense oracles, n <= 3.
Outcome oracle_equivalence() {
  auto rng = rng_for(1);
  double worst = 0.0;
  std::size_t checks = 0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::string> strings{""};
    for (int q = 0; q < n; ++q) {
      std::vector<std::string> next;
      for (const auto& s : strings)
        for (char c : std::string("IXYZ")) next.push_back(s + c);
      strings = std::move(next);
    }
    for (int trial = 0; trial < 5; ++trial) {
      const auto psi = testing::random_state(n, rng);
      const Eigen::VectorXcd v = testing::to_eigen(psi);
      PauliSum h(n);
      for (const auto& axes : strings) {
        const double c = rng.uniform(-1.0, 1.0);
        h.add(c, axes);
        worst = std::max(worst, testing::max_abs_diff(apply_pauli_term(psi, {c, axes}), c * testing::kron_string(axes) * v));
        ++checks;
      }
      const double dense_e = (v.adjoint() * to_dense(h) * v)(0).real();
      worst = std::max(worst, std::abs(expectation(psi, h) - dense_e));
      for (int q = 0; q < n; ++q)
        for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
          const double angle = rng.uniform(-4 * kPi, 4 * kPi);
          worst = std::max(worst, testing::max_abs_diff(apply_rotation(psi, q, axis, angle),
                                                        testing::dense_rotation(n, q, axis, angle) * v));
          ++checks;
        }
      std::vector<double> phases(psi.dim());
      Eigen::VectorXcd expected = v;
      for (std::size_t k = 0; k < phases.size(); ++k) {
        phases[k] = rng.uniform(-20.0, 20.0);
        expected(static_cast<Eigen::Index>(k)) *= std::exp(Complex(0.0, -phases[k]));
      }
      worst = std::max(worst, testing::max_abs_diff(apply_diagonal_unitary(psi, phases), expected));
      const auto ansatz = hardware_efficient_ansatz(n, 2);
      const auto theta = random_initial_angles(ansatz, rng);
      const auto noise = sample_noise(ansatz, 0.1, rng);
      worst = std::max(worst, testing::max_abs_diff(run_randomized_circuit(psi, ansatz, theta, noise),
                                                    testing::dense_circuit(psi, ansatz, theta, noise.increments)));
      checks += 3;
    }
  }
  return {worst <= 1e-12, fmt("%zu checks, max amplitude deviation %.3e (tolerance 1e-12)", checks, worst)};
}

// 2. Continuous randomized dynamics on a shared Wiener path against the
// randomized circuit.
Outcome continuous_limit() {
  const auto ansatz = hardware_efficient_ansatz(2, 2);
  const double noise = 0.05;
  const int n_paths = 3;
  bool pass = true;
  std::string detail;
  double worst_final = 1.0;
  for (int p = 0; p < n_paths; ++p) {
    auto rng = rng_for(100 + static_cast<std::uint64_t>(p));
    const auto theta = random_initial_angles(ansatz, rng);
    const auto psi0 = testing::random_state(2, rng);
    const auto fine = testing::sample_fine_path(ansatz, 10000, noise, rng);
    const NoiseRealization dw{theta.shape(), testing::interval_increments(ansatz, fine), 0};
    const auto circuit = run_randomized_circuit(psi0, ansatz, theta, dw);
    std::vector<double> errors;
    for (int factor : {100, 10, 1}) {
      const auto path = factor == 1 ? fine : testing::coarsen(fine, factor);
      const auto sse = testing::euler_maruyama_circuit(psi0, ansatz, theta, path, noise);
      errors.push_back(distance(sse, StateVector(circuit)));
      if (factor == 1) worst_final = std::min(worst_final, fidelity(sse, circuit));
    }
    const bool decreasing = errors[0] > errors[1] && errors[1] > errors[2];
    const double rate = std::log10(errors[0] / errors[2]) / 2.0;
    pass = pass && decreasing && rate >= 0.5;
    detail += fmt("path %d: err(1e-2,1e-3,1e-4) = %.2e, %.2e, %.2e, rate %.2f; ", p, errors[0], errors[1], errors[2], rate);
  }
  pass = pass && worst_final >= 1.0 - 1e-3;
  return {pass, detail + fmt("min fidelity at dt=1e-4 %.9f (need >= 0.999)", worst_final)};
}

// 3. Mean of 1e4 SSE trajectory projectors against the Lindblad solution.
Outcome unraveling() {
  const double u = 0.3, d = 0.05;
  const int n_traj = 10000;
  auto schedule = PulseSchedule::uniform(1.0, 1, 1);
  schedule.value(0, 0) = u;
  const std::vector<ControlChannel> channels{{0, Axis::X}};
  const std::vector<double> drift{0.5, -0.5};
  double sum[3] = {0, 0, 0}, sum2[3] = {0, 0, 0};
  for (int i = 0; i < n_traj; ++i) {
    NoiseStream rng(3, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(StreamDomain::test));
    const auto psi = integrate_sse(StateVector(1), drift, schedule, channels, sample_wiener_path(schedule, 200, d, rng));
    const Complex a = psi[0], b = psi[1];
    const double bloch[3] = {2.0 * (std::conj(a) * b).real(), 2.0 * (std::conj(a) * b).imag(),
                             std::norm(a) - std::norm(b)};
    for (int c = 0; c < 3; ++c) {
      sum[c] += bloch[c];
      sum2[c] += bloch[c] * bloch[c];
    }
  }
  double mean[3], se2 = 0.0;
  for (int c = 0; c < 3; ++c) {
    mean[c] = sum[c] / n_traj;
    se2 += (sum2[c] / n_traj - mean[c] * mean[c]) / n_traj;
  }
  const std::vector<PauliTerm> ops{{1.0, "X"}};
  const auto rho = lindblad_propagate(DensityMatrix::pure(StateVector(1)), PauliSum(1, {{0.5, "Z"}}), schedule, ops, d);
  const Complex off = rho.entries()(0, 1);
  const double ref[3] = {2.0 * off.real(), -2.0 * off.imag(), (rho.entries()(0, 0) - rho.entries()(1, 1)).real()};
  double diff2 = 0.0;
  for (int c = 0; c < 3; ++c) diff2 += (mean[c] - ref[c]) * (mean[c] - ref[c]);
  const double td = 0.5 * std::sqrt(diff2);
  const double sigma = 0.5 * std::sqrt(se2);
  return {td <= 3.0 * sigma, fmt("trace distance %.3e, estimator std %.3e, bound 3 std = %.3e (N = %d)", td, sigma,
                                 3.0 * sigma, n_traj)};
}

GateProblem tfim2_problem(std::uint64_t seed, int layers) {
  const auto ansatz = hardware_efficient_ansatz(2, layers);
  NoiseStream init(seed, 0, static_cast<std::uint64_t>(StreamDomain::init));
  return GateProblem{build_tfim(2, 1.0, 1.0), StateVector(2), ansatz, random_initial_angles(ansatz, init)};
}

constexpr int kTfimLayers = 3;
const AnnealingSchedule kConvergenceSchedule{1e-2, 1e-10, 50, 100};

// 4. Gate-mode PiQC convergence on -Z and the 2-site TFIM.
Outcome piqc_convergence() {
  std::vector<double> z_err, tfim_err;
  std::uint64_t evals = 0;
  const double tfim_e0 = exact_ground_state(build_tfim(2, 1.0, 1.0)).ground_energy();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    AISConfig cfg;
    cfg.master_seed = seed;
    AnsatzSpec one{1, 1, {Axis::X}, {0.0, 0.0}, 10.0, 1.0};
    NoiseStream init(seed, 0, static_cast<std::uint64_t>(StreamDomain::init));
    const GateProblem z{PauliSum(1, {{-1.0, "Z"}}), StateVector(1), one, random_initial_angles(one, init)};
    const auto tz = run_piqc(z, kConvergenceSchedule, cfg);
    z_err.push_back(tz.final_energy + 1.0);
    const auto tt = run_piqc(tfim2_problem(seed, kTfimLayers), kConvergenceSchedule, cfg);
    tfim_err.push_back(tt.final_energy - tfim_e0);
    evals = std::max({evals, tz.q_eval_total(), tt.q_eval_total()});
  }
  const double mz = median(z_err), mt = median(tfim_err);
  return {mz < 1e-4 && mt < 1e-4 && evals <= 50000,
          fmt("median error -Z %.3e, TFIM(2) %.3e (need < 1e-4), evaluations %llu (limit 50000)", mz, mt,
              static_cast<unsigned long long>(evals))};
}

// 5. Annealed against fixed noise at equal iterations on the 2-site TFIM.
Outcome annealing_advantage() {
  const double e0 = exact_ground_state(build_tfim(2, 1.0, 1.0)).ground_energy();
  const std::vector<double> fixed_levels{1e-2, 1e-4, 1e-6, 1e-8, 1e-10};
  std::vector<double> annealed, best_fixed_by_level(fixed_levels.size());
  std::vector<std::vector<double>> fixed(fixed_levels.size());
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    AISConfig cfg;
    cfg.master_seed = seed;
    const auto problem = tfim2_problem(seed, kTfimLayers);
    annealed.push_back(run_piqc(problem, kConvergenceSchedule, cfg).final_energy - e0);
    for (std::size_t i = 0; i < fixed_levels.size(); ++i) {
      const auto s = AnnealingSchedule::fixed(fixed_levels[i], kConvergenceSchedule.n_d, kConvergenceSchedule.n_s);
      fixed[i].push_back(run_piqc(problem, s, cfg).final_energy - e0);
    }
  }
  const double ma = median(annealed);
  double best = INFINITY;
  std::string levels;
  for (std::size_t i = 0; i < fixed_levels.size(); ++i) {
    const double m = median(fixed[i]);
    best = std::min(best, m);
    levels += fmt("D=%.0e: %.2e; ", fixed_levels[i], m);
  }
  const double at_final = median(fixed.back());
  const bool pass = ma <= best && at_final >= 10.0 * ma;
  return {pass, fmt("annealed median %.3e; fixed medians ", ma) + levels +
                    fmt("need annealed <= best fixed (%.3e) and fixed D_final >= 10x annealed", best)};
}

// 6. H2 preset hyperparameters on the shipped 2-qubit problem.
Outcome h2_preset_replay() {
  const std::string text = R"({"problem": "problems/h2_0735.json", "preset": "H2",
      "algorithms": [{"name": "piqc-gate"}], "q_eval_budget": 64000, "seeds": [0, 1, 2, 3, 4]})";
  const auto cfg = parse_experiment_config(text, kSourceDir);
  const auto result = run_experiment(cfg);
  const auto& ar = result.algorithms[0];
  std::string per_seed;
  for (const auto& r : ar.runs) per_seed += fmt("%.2e ", r.error);
  const bool pass = ar.aggregate && ar.aggregate->n_seeds == 5 && ar.aggregate->max_error < kChemicalAccuracy &&
                    ar.spec.q_eval() == 64000;
  return {pass, fmt("Q_eval %llu, per-seed errors [ ", static_cast<unsigned long long>(ar.spec.q_eval())) + per_seed +
                    fmt("], worst %.3e (need < 1.6e-3)", ar.aggregate ? ar.aggregate->max_error : std::nan(""))};
}

// 7. SPSA contraction on a quadratic; preset SPSA table.
Outcome spsa_sanity() {
  const EnergyFunction quad = [](std::span<const double> t) {
    double s = 0.0;
    for (double x : t) s += x * x;
    return s;
  };
  const std::vector<double> theta0{0.8, -1.1, 0.3, 2.0};
  const auto trace = minimize_spsa(quad, theta0, SPSAConfig{0.1, 0.01, 500, 0});
  double n0 = 0.0, n1 = 0.0;
  for (double x : theta0) n0 += x * x;
  for (double x : trace.final_controls) n1 += x * x;
  const double ratio = std::sqrt(n0) / std::max(std::sqrt(n1), 1e-300);
  struct Row {
    const char* name;
    double a, c;
  };
  const Row table[] = {{"H2", 0.001, 0.00005}, {"LiH", 0.01, 0.0005}, {"BeH2", 0.001, 0.00005}, {"H4", 0.001, 0.00005}};
  bool table_ok = true;
  for (const auto& row : table) {
    const auto p = find_preset(row.name);
    table_ok = table_ok && p && p->spsa_learning_rate == row.a && p->spsa_perturbation == row.c;
  }
  return {ratio >= 100.0 && table_ok,
          fmt("norm contraction %.3e x in 500 iterations (need >= 100x); presets %s", ratio, table_ok ? "exact" : "WRONG")};
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(PIQC_BENCH_EXE) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::uint64_t last_q_eval(const fs::path& csv) {
  std::ifstream in(csv);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return std::stoull(last.substr(last.rfind(',') + 1));
}

// 8. Emitted evaluation totals across a three-way comparison.
Outcome budget_audit() {
  const fs::path config = kSourceDir / "configs" / "budget_audit.json";
  const auto cfg = load_experiment_config(config);
  const fs::path out = fs::temp_directory_path() / "piqc_acceptance_budget";
  fs::remove_all(out);
  const int rc = run_cli("run " + config.string() + " --out-dir " + out.string());
  bool pass = rc == 0;
  std::string detail = fmt("exit %d; ", rc);
  const std::uint64_t budget = *cfg.q_eval_budget;
  for (const auto& a : cfg.algorithms) {
    const std::uint64_t expected = a.algorithm == bench::Algorithm::spsa
                                       ? 2 * static_cast<std::uint64_t>(a.spsa.iterations)
                                       : static_cast<std::uint64_t>(a.ais.n_traj) * a.schedule.total_iterations();
    for (auto seed : cfg.seeds) {
      const auto file = out / ("trace_" + a.label + "_" + std::to_string(seed) + ".csv");
      const std::uint64_t q = fs::exists(file) ? last_q_eval(file) : 0;
      pass = pass && q == budget && q == expected;
    }
    detail += fmt("%s %llu; ", a.label.c_str(), static_cast<unsigned long long>(expected));
  }
  // A mismatched comparison must be refused up front.
  const fs::path bad = out / "mismatch.json";
  std::ofstream(bad) << R"({"problem": {"model": "tfim", "sites": 2}, "seeds": [0],
      "algorithms": [{"name": "piqc-gate", "n_d": 2, "n_s": 5},
                     {"name": "spsa", "learning_rate": 0.01, "perturbation": 0.01, "iterations": 49}]})";
  const int bad_rc = run_cli("run " + bad.string() + " --out-dir " + (out / "bad").string());
  pass = pass && bad_rc == 2 && !fs::exists(out / "bad");
  fs::remove_all(out);
  return {pass, detail + fmt("budget %llu for all; mismatched config exit %d (need 2, nothing written)",
                             static_cast<unsigned long long>(budget), bad_rc)};
}

// 9. Two CLI invocations, byte-identical artifacts.
Outcome determinism() {
  const fs::path config = kSourceDir / "configs" / "budget_audit.json";
  const fs::path a = fs::temp_directory_path() / "piqc_acceptance_det_a";
  const fs::path b = fs::temp_directory_path() / "piqc_acceptance_det_b";
  fs::remove_all(a);
  fs::remove_all(b);
  const int ra = run_cli("run " + config.string() + " --out-dir " + a.string());
  const int rb = run_cli("run " + config.string() + " --out-dir " + b.string());
  std::size_t files = 0, identical = 0;
  if (fs::exists(a)) {
    for (const auto& e : fs::directory_iterator(a)) {
      ++files;
      const auto other = b / e.path().filename();
      if (fs::exists(other) && slurp(e.path()) == slurp(other)) ++identical;
    }
  }
  const bool pass = ra == 0 && rb == 0 && files > 1 && identical == files;
  fs::remove_all(a);
  fs::remove_all(b);
  return {pass, fmt("%zu/%zu files byte-identical across two invocations", identical, files)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence", oracle_equivalence},
      {2, "randomized circuit as continuous dynamics", continuous_limit},
      {3, "unraveling of the master equation", unraveling},
      {4, "PiQC convergence", piqc_convergence},
      {5, "annealing advantage", annealing_advantage},
      {6, "H2 preset replay", h2_preset_replay},
      {7, "SPSA sanity", spsa_sanity},
      {8, "budget audit", budget_audit},
      {9, "determinism", determinism},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
