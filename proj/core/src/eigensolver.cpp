#include "piqc/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "piqc/errors.hpp"

namespace piqc {

namespace {

double off_diagonal_norm(const Eigen::MatrixXcd& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

}  // namespace

HermitianEigen jacobi_eigensolve(const Eigen::MatrixXcd& matrix, double relative_tolerance, int max_sweeps) {
  const Eigen::Index n = matrix.rows();
  if (n == 0 || matrix.cols() != n) throw InputError("eigensolver needs a non-empty square matrix");
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, matrix.cwiseAbs().maxCoeff())) {
    throw InputError("eigensolver input is not Hermitian");
  }

  Eigen::MatrixXcd a = 0.5 * (matrix + matrix.adjoint());
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);
  const double frob = a.norm();
  const double target = relative_tolerance * frob;

  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweep == max_sweeps) throw ConsistencyError("Jacobi eigensolver did not converge");
    ++sweep;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        // Phase d = e^{-i arg a_pq} on column q makes the pivot real, then a real
        // rotation zeroes it. U = diag(1, d) * [[c, s], [-s, c]].
        const Complex d = std::conj(apq) / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex u_pp = c, u_pq = s, u_qp = -s * d, u_qq = c * d;

        // A <- A U (columns), then A <- U^H A (rows).
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * u_pp + akq * u_qp;
          a(k, q) = akp * u_pq + akq * u_qq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
          a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * u_pp + vkq * u_qp;
          v(k, q) = vkp * u_pq + vkq * u_qq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen out;
  out.sweeps = sweep;
  out.eigenvalues.reserve(order.size());
  out.eigenvectors.resize(n, n);
  for (std::size_t k = 0; k < order.size(); ++k) {
    out.eigenvalues.push_back(a(order[k], order[k]).real());
    out.eigenvectors.col(static_cast<Eigen::Index>(k)) = v.col(order[k]);
  }
  return out;
}

Spectrum exact_ground_state(const PauliSum& h) {
  if (h.n_qubits() > kMaxDenseQubits) {
    throw CapabilityError("dense diagonalization supports at most " + std::to_string(kMaxDenseQubits) +
                          " qubits, got " + std::to_string(h.n_qubits()));
  }
  const HermitianEigen eig = jacobi_eigensolve(to_dense(h));
  std::vector<Complex> ground(eig.eigenvectors.col(0).data(),
                              eig.eigenvectors.col(0).data() + eig.eigenvectors.rows());
  StateVector g(h.n_qubits(), std::move(ground));
  g.normalize();
  return Spectrum{eig.eigenvalues, std::move(g)};
}

}  // namespace piqc
