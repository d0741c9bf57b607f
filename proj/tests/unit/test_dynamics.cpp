#include <cmath>
#include <numbers>

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "oracles.hpp"
#include "piqc/cost.hpp"
#include "piqc/dynamics.hpp"
#include "piqc/errors.hpp"
#include "piqc/lindblad.hpp"
#include "piqc/models.hpp"
#include "piqc/noise.hpp"

namespace piqc {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

NoiseStream test_rng(std::uint64_t stream) { return NoiseStream(11, stream, static_cast<std::uint64_t>(StreamDomain::test)); }

// Noise.

TEST(NoiseStream, DeterministicAndKeyed) {
  NoiseStream a(5, 3, 2), b(5, 3, 2), c(5, 4, 2), d(6, 3, 2), e(5, 3, 1);
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    (void)c();
  }
  EXPECT_NE(NoiseStream(5, 3, 2)(), NoiseStream(5, 4, 2)());
  EXPECT_NE(NoiseStream(5, 3, 2)(), d());
  EXPECT_NE(NoiseStream(5, 3, 2)(), e());
}

TEST(SampleNoise, ZeroNoiseIsExactlyZero) {
  auto rng = test_rng(1);
  const auto ansatz = hardware_efficient_ansatz(2, 3);
  const auto gate = sample_noise(ansatz, 0.0, rng);
  EXPECT_EQ(gate.shape, (std::vector<std::size_t>{3, 3, 2}));
  for (double w : gate.increments) EXPECT_EQ(w, 0.0);
  const auto schedule = PulseSchedule::uniform(10.0, 4, 6);
  const auto pulse = sample_noise(schedule, 0.0, rng);
  EXPECT_EQ(pulse.shape, (std::vector<std::size_t>{4, 6}));
  for (double w : pulse.increments) EXPECT_EQ(w, 0.0);
  EXPECT_THROW(sample_noise(schedule, -1.0, rng), InputError);
}

TEST(SampleNoise, UnitGaussianStatistics) {
  auto rng = test_rng(2);
  const auto schedule = PulseSchedule::uniform(1.0, 1, 1);
  const int n = 100000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double w = sample_noise(schedule, 1.0, rng).increments[0];
    sum += w;
    sum2 += w * w;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  EXPECT_LT(std::abs(mean), 0.02);
  EXPECT_GE(var, 0.97);
  EXPECT_LE(var, 1.03);
}

TEST(SampleNoise, PulseVarianceScalesWithSegmentLength) {
  auto rng = test_rng(3);
  const PulseSchedule schedule({0.0, 0.25, 4.25}, 1);
  const int n = 40000;
  double s0 = 0.0, s1 = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto w = sample_noise(schedule, 0.5, rng);
    s0 += w.increments[0] * w.increments[0];
    s1 += w.increments[1] * w.increments[1];
  }
  EXPECT_NEAR(s0 / n, 0.5 * 0.25, 0.5 * 0.25 * 0.05);
  EXPECT_NEAR(s1 / n, 0.5 * 4.0, 0.5 * 4.0 * 0.05);
}

TEST(SampleNoise, FixedSeedRepeats) {
  const auto ansatz = hardware_efficient_ansatz(2, 2);
  auto r1 = test_rng(4), r2 = test_rng(4);
  EXPECT_EQ(sample_noise(ansatz, 0.3, r1).increments, sample_noise(ansatz, 0.3, r2).increments);
}

TEST(WienerPath, CoarseIncrementsSumTheFinePath) {
  auto rng = test_rng(5);
  const auto schedule = PulseSchedule::uniform(2.0, 3, 2);
  const auto path = sample_wiener_path(schedule, 7, 0.2, rng);
  EXPECT_EQ(path.n_steps(), 21u);
  const auto coarse = coarse_increments(path);
  EXPECT_EQ(coarse.shape, (std::vector<std::size_t>{3, 2}));
  for (int k = 0; k < 3; ++k)
    for (int a = 0; a < 2; ++a) {
      double s = 0.0;
      for (int j = 0; j < 7; ++j) s += path.increments[static_cast<std::size_t>((k * 7 + j) * 2 + a)];
      EXPECT_DOUBLE_EQ(coarse.increments[static_cast<std::size_t>(k * 2 + a)], s);
    }
}

// Ansatz and circuit execution.

TEST(Ansatz, ShapeAndCounts) {
  const auto ansatz = hardware_efficient_ansatz(3, 9);
  EXPECT_EQ(ansatz.rotations_per_layer(), 3);
  EXPECT_EQ(ansatz.n_params(), 81u);
  EXPECT_EQ(ansatz.gate_count(), 9u * (3 * 3 + 1));
  EXPECT_DOUBLE_EQ(ansatz.horizon(), 99.0);
  const auto drift = build_drift_hamiltonian({3, 0.1, 1.0});
  for (std::size_t k = 0; k < drift.size(); ++k) EXPECT_DOUBLE_EQ(ansatz.entangler_phases[k], 10.0 * drift[k]);
}

TEST(Ansatz, RejectsBadSpec) {
  AnsatzSpec bad = hardware_efficient_ansatz(2, 1);
  bad.entangler_phases.pop_back();
  EXPECT_THROW(bad.validate(), InputError);
  bad = hardware_efficient_ansatz(2, 1);
  bad.slot_axes.clear();
  EXPECT_THROW(bad.validate(), InputError);
}

TEST(RandomInitialAngles, WithinRange) {
  auto rng = test_rng(6);
  const auto ansatz = hardware_efficient_ansatz(2, 9);
  const auto theta = random_initial_angles(ansatz, rng);
  EXPECT_TRUE(theta.matches(ansatz));
  double lo = 0.0, hi = 0.0;
  for (double a : theta.angles) {
    EXPECT_GE(a, -2 * kPi);
    EXPECT_LE(a, 2 * kPi);
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  EXPECT_LT(lo, -kPi);
  EXPECT_GT(hi, kPi);
}

TEST(RandomizedCircuit, SingleXRotation) {
  AnsatzSpec ansatz{1, 1, {Axis::X}, {0.0, 0.0}, 10.0, 1.0};
  auto theta = CircuitParams::zeros(ansatz);
  theta.angles[0] = kPi;
  NoiseRealization zero{{1, 1, 1}, {0.0}, 0};
  const auto out = run_randomized_circuit(StateVector(1), ansatz, theta, zero);
  EXPECT_NEAR(std::abs(out[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out[1] - Complex(0.0, -1.0)), 0.0, 1e-15);
}

TEST(RandomizedCircuit, ZeroNoiseEqualsDeterministicCircuit) {
  auto rng = test_rng(7);
  const auto ansatz = hardware_efficient_ansatz(3, 2);
  const auto theta = random_initial_angles(ansatz, rng);
  const auto psi0 = testing::random_state(3, rng);
  const auto zero = sample_noise(ansatz, 0.0, rng);
  const auto noisy = run_randomized_circuit(psi0, ansatz, theta, zero);
  const auto plain = execute_circuit(psi0, ansatz, theta);
  EXPECT_EQ(noisy, plain.state);
}

TEST(RandomizedCircuit, MatchesDenseOracleAndCountsGates) {
  auto rng = test_rng(8);
  for (int n = 1; n <= 3; ++n) {
    for (int layers : {1, 2, 4}) {
      const auto ansatz = hardware_efficient_ansatz(n, layers, 0.1, 10.0, 1.0, {Axis::Z, Axis::X, Axis::Y, Axis::Z});
      const auto theta = random_initial_angles(ansatz, rng);
      const auto noise = sample_noise(ansatz, 0.05, rng);
      const auto psi0 = testing::random_state(n, rng);
      const auto run = execute_circuit(psi0, ansatz, theta, &noise);
      EXPECT_EQ(run.gates_applied, ansatz.gate_count());
      EXPECT_EQ(run.gates_applied, static_cast<std::size_t>(layers * (4 * n + 1)));
      const Eigen::VectorXcd expected = testing::dense_circuit(psi0, ansatz, theta, noise.increments);
      EXPECT_LE(testing::max_abs_diff(run.state, expected), 1e-12);
      EXPECT_LE(std::abs(run.state.norm() - 1.0), 1e-10);
    }
  }
}

TEST(RandomizedCircuit, RejectsShapeMismatch) {
  const auto ansatz = hardware_efficient_ansatz(2, 2);
  const auto other = hardware_efficient_ansatz(2, 3);
  auto rng = test_rng(9);
  const auto theta = CircuitParams::zeros(ansatz);
  EXPECT_THROW(run_randomized_circuit(StateVector(2), ansatz, theta, sample_noise(other, 0.1, rng)), InputError);
  EXPECT_THROW(execute_circuit(StateVector(2), ansatz, CircuitParams::zeros(other)), InputError);
  EXPECT_THROW(execute_circuit(StateVector(3), ansatz, theta), InputError);
}

TEST(RandomizedCircuit, EulerMaruyamaOracleConvergesForThreeQubits) {
  // Same check as the acceptance run, on a smaller path, for n = 1 and 3.
  for (int n : {1, 3}) {
    auto rng = test_rng(20 + static_cast<std::uint64_t>(n));
    const auto ansatz = hardware_efficient_ansatz(n, 1);
    auto theta = CircuitParams::zeros(ansatz);
    for (auto& a : theta.angles) a = rng.uniform(-kPi, kPi);
    const double d = 0.01;
    const auto path = testing::sample_fine_path(ansatz, 2000, d, rng);
    const auto dw = testing::interval_increments(ansatz, path);
    const NoiseRealization noise{theta.shape(), dw, 0};
    const auto circuit = run_randomized_circuit(StateVector(n), ansatz, theta, noise);
    const auto em = testing::euler_maruyama_circuit(StateVector(n), ansatz, theta, path, d);
    EXPECT_GE(fidelity(em, circuit), 1.0 - 10.0 / 2000.0);
  }
}

// SSE integration.

TEST(IntegrateSse, ZeroNoiseSingleChannelIsExactRotation) {
  auto rng = test_rng(10);
  const double u = 0.37, t = 2.0;
  auto schedule = PulseSchedule::uniform(t, 1, 1);
  schedule.value(0, 0) = u;
  const std::vector<ControlChannel> channels{{0, Axis::X}};
  const std::vector<double> drift{0.0, 0.0};
  const auto path = sample_wiener_path(schedule, 200, 0.0, rng);
  const auto psi0 = testing::random_state(1, rng);
  const auto out = integrate_sse(psi0, drift, schedule, channels, path);
  const Eigen::MatrixXcd exact = (-kI * u * t * testing::kron_string("X")).exp();
  EXPECT_LE(testing::max_abs_diff(out, exact * testing::to_eigen(psi0)), 1e-12);
}

TEST(IntegrateSse, DriftOnlyPhase) {
  auto rng = test_rng(11);
  const double v = 0.1, t = 3.0;
  const auto drift = build_drift_hamiltonian({2, v, 1.0});
  const auto schedule = PulseSchedule::uniform(t, 2, 4);
  const auto channels = rydberg_channels(2);
  const auto path = sample_wiener_path(schedule, 50, 0.0, rng);
  const auto out = integrate_sse(StateVector::basis(2, 3), drift, schedule, channels, path);
  EXPECT_NEAR(std::abs(out[3] - std::exp(-kI * v * t)), 0.0, 1e-12);
}

TEST(IntegrateSse, PiecewiseControlsMatchProductOfExponentials) {
  // D = 0, two qubits, all four channels, drift on: compare with a fine
  // product of exact dense exponentials of the full segment Hamiltonian.
  auto rng = test_rng(12);
  const auto channels = rydberg_channels(2);
  auto schedule = PulseSchedule::uniform(4.0, 2, 4);
  for (auto& v : schedule.values()) v = rng.uniform(-0.5, 0.5);
  const auto drift = build_drift_hamiltonian({2, 0.3, 1.0});
  const int sub = 4000;
  const auto path = sample_wiener_path(schedule, sub, 0.0, rng);
  const auto psi0 = testing::random_state(2, rng);
  const auto out = integrate_sse(psi0, drift, schedule, channels, path);

  Eigen::VectorXcd psi = testing::to_eigen(psi0);
  for (int k = 0; k < 2; ++k) {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(4, 4);
    for (int i = 0; i < 4; ++i) h(i, i) = drift[static_cast<std::size_t>(i)];
    h += schedule.value(k, 0) * testing::kron_string("XI") + schedule.value(k, 1) * testing::kron_string("YI") +
         schedule.value(k, 2) * testing::kron_string("IX") + schedule.value(k, 3) * testing::kron_string("IY");
    psi = (-kI * schedule.segment_length(k) * h).exp() * psi;
  }
  // First-order splitting error is O(dt).
  EXPECT_GE(fidelity(out, testing::from_eigen(2, psi)), 1.0 - 1e-5);
}

TEST(IntegrateSse, NormStaysUnitUnderNoise) {
  auto rng = test_rng(13);
  const auto channels = rydberg_channels(2);
  auto schedule = PulseSchedule::uniform(5.0, 5, 4);
  for (auto& v : schedule.values()) v = rng.uniform(-1.0, 1.0);
  const auto drift = build_drift_hamiltonian({2, 0.1, 1.0});
  const auto path = sample_wiener_path(schedule, 100, 0.05, rng);
  const auto out = integrate_sse(StateVector(2), drift, schedule, channels, path);
  EXPECT_LE(std::abs(out.norm() - 1.0), 1e-10);
}

TEST(IntegrateSse, RejectsMismatchedPath) {
  auto rng = test_rng(14);
  const auto schedule = PulseSchedule::uniform(1.0, 2, 2);
  const auto other = PulseSchedule::uniform(1.0, 3, 2);
  const auto channels = rydberg_channels(1);
  const std::vector<double> drift{0.0, 0.0};
  EXPECT_THROW(integrate_sse(StateVector(1), drift, schedule, channels, sample_wiener_path(other, 5, 0.1, rng)),
               InputError);
  EXPECT_THROW(integrate_sse(StateVector(1), std::vector<double>{0.0}, schedule, channels,
                             sample_wiener_path(schedule, 5, 0.1, rng)),
               InputError);
}

TEST(IntegrateSse, UnravelsTheLindbladEquationAtOneThousandTrajectories) {
  const double u = 0.3, d = 0.05;
  auto schedule = PulseSchedule::uniform(1.0, 1, 1);
  schedule.value(0, 0) = u;
  const std::vector<ControlChannel> channels{{0, Axis::X}};
  const std::vector<double> drift{0.5, -0.5};
  const int n_traj = 1000;
  Eigen::Matrix2cd mean = Eigen::Matrix2cd::Zero();
  for (int i = 0; i < n_traj; ++i) {
    NoiseStream rng(1, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(StreamDomain::test));
    const auto psi = integrate_sse(StateVector(1), drift, schedule, channels, sample_wiener_path(schedule, 200, d, rng));
    const Eigen::VectorXcd v = testing::to_eigen(psi);
    mean += v * v.adjoint();
  }
  mean /= n_traj;
  const std::vector<PauliTerm> ops{{1.0, "X"}};
  const auto rho = lindblad_propagate(DensityMatrix::pure(StateVector(1)), PauliSum(1, {{0.5, "Z"}}), schedule, ops, d);
  EXPECT_LE(trace_distance(DensityMatrix(1, mean), rho), 3.0 / std::sqrt(static_cast<double>(n_traj)));
}

// Stochastic cost.

TEST(StochasticCost, FluenceFreeIsHalfQTimesEnergy) {
  const auto schedule = PulseSchedule::uniform(3.0, 3, 2);
  NoiseRealization zero{{3, 2}, std::vector<double>(6, 0.0), 0};
  EXPECT_DOUBLE_EQ(stochastic_cost(-0.8, schedule, zero, {10.0, 1.0}), 5.0 * -0.8);
  const PauliSum h(1, {{1.0, "Z"}});
  EXPECT_DOUBLE_EQ(stochastic_cost(StateVector(1), h, schedule, zero, CostWeights{4.0, 1.0}), 2.0);
}

TEST(StochasticCost, GateFormExample) {
  CircuitParams theta{1, 1, 2, {1.0, 0.0}};
  NoiseRealization noise{{1, 1, 2}, {0.5, 0.0}, 0};
  EXPECT_DOUBLE_EQ(stochastic_cost(123.0, theta, noise, {0.0, 1.0}), 0.75);
}

TEST(StochasticCost, PulseFormByHand) {
  PulseSchedule schedule({0.0, 1.0, 3.0}, 1);
  schedule.value(0, 0) = 2.0;
  schedule.value(1, 0) = -1.0;
  NoiseRealization noise{{2, 1}, {0.1, 0.2}, 0};
  // Q/2 E = 1 * 0.5; R/2 sum u^2 dt = 1.5 (4 + 2); R/2 sum u dW = 1.5 (0.2 - 0.2).
  EXPECT_NEAR(stochastic_cost(0.5, schedule, noise, {2.0, 3.0}), 0.5 + 9.0 + 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(fluence(schedule, 3.0), 9.0);
}

TEST(StochasticCost, RejectsShapeMismatch) {
  const auto schedule = PulseSchedule::uniform(3.0, 3, 2);
  NoiseRealization wrong{{2, 2}, std::vector<double>(4, 0.0), 0};
  EXPECT_THROW(stochastic_cost(0.0, schedule, wrong, {}), InputError);
}

TEST(StochasticCost, MeanMatchesDeterministicCost) {
  // E[S] = (Q/2) Tr(rho(T) H) + fluence, with rho from the Lindblad oracle;
  // the Ito term has zero mean.
  const double u = 0.4, d = 0.02;
  const CostWeights w{3.0, 1.0};
  auto schedule = PulseSchedule::uniform(1.0, 1, 1);
  schedule.value(0, 0) = u;
  const std::vector<ControlChannel> channels{{0, Axis::X}};
  const std::vector<double> drift{0.0, 0.0};
  const PauliSum h(1, {{1.0, "Z"}});
  const int n = 10000;
  double sum = 0.0, sum2 = 0.0, ito = 0.0, ito2 = 0.0;
  for (int i = 0; i < n; ++i) {
    NoiseStream rng(2, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(StreamDomain::test));
    const auto path = sample_wiener_path(schedule, 50, d, rng);
    const auto noise = coarse_increments(path);
    const auto psi = integrate_sse(StateVector(1), drift, schedule, channels, path);
    const double s = stochastic_cost(psi, h, schedule, noise, w);
    sum += s;
    sum2 += s * s;
    const double it = 0.5 * w.r * u * noise.increments[0];
    ito += it;
    ito2 += it * it;
  }
  const double mean = sum / n, se = std::sqrt((sum2 / n - mean * mean) / n);
  const std::vector<PauliTerm> ops{{1.0, "X"}};
  const auto rho = lindblad_propagate(DensityMatrix::pure(StateVector(1)), PauliSum(1), schedule, ops, d);
  const double expected = 0.5 * w.q * (rho.entries()(0, 0) - rho.entries()(1, 1)).real() + fluence(schedule, w.r);
  EXPECT_LE(std::abs(mean - expected), 3.0 * se);
  const double ito_mean = ito / n, ito_sd = std::sqrt(ito2 / n - ito_mean * ito_mean);
  EXPECT_LE(std::abs(ito_mean), 5.0 * ito_sd / std::sqrt(static_cast<double>(n)));
}

}  // namespace
}  // namespace piqc
