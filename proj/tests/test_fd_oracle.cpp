#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "nanobeam/errors.hpp"
#include "nanobeam/fd_oracle.hpp"
#include "nanobeam/modal_assembly.hpp"

using namespace nanobeam;

TEST_CASE("Neumann Laplacian: symmetric, D D^T, second-order eigenvalues") {
  const double l = std::numbers::pi;
  double prev[4] = {};
  for (int M : {32, 64, 128}) {
    const double h = l / M;
    const auto A = neumann_laplacian(M, h);
    const auto D = staggered_gradient(M, h);
    const Eigen::MatrixXd Ad(A);
    CHECK((Ad - Ad.transpose()).norm() == 0.0);
    CHECK((Ad - Eigen::MatrixXd(D * D.transpose())).norm() <= 1e-12 * Ad.norm());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Ad);
    CHECK(std::abs(es.eigenvalues()(0)) <= 1e-10);
    for (int n = 1; n <= 3; ++n) {
      const double err = std::abs(es.eigenvalues()(n) - n * n);
      if (prev[n] > 0) CHECK(prev[n] / err == doctest::Approx(4.0).epsilon(0.02));
      prev[n] = err;
    }
  }
}

TEST_CASE("fractional Laplacian endpoints") {
  const int M = 24;
  const double h = std::numbers::pi / M;
  const Eigen::MatrixXd E(mean_free_basis(M));
  const Eigen::MatrixXd A(neumann_laplacian(M, h));
  CHECK((fractional_laplacian(M, h, 1.0) * E - A * E).norm() <= 1e-10 * A.norm());
  CHECK((fractional_laplacian(M, h, 0.0) * E - E).norm() <= 1e-12);
  const Eigen::MatrixXd half = fractional_laplacian(M, h, 0.5);
  CHECK((half * half * E - A * E).norm() <= 1e-10 * A.norm());
}

TEST_CASE("FD generator dissipative in the discrete energy") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> normal;
  for (double a : {0.0, 0.5, 1.0}) {
    BeamParams p;
    p.alpha = a;
    p.beta = 1.0 - a;
    p.m = 2.0;
    const FdOperator op = build_fd(p, 16);
    const Eigen::MatrixXd B = fd_dense_generator(op);
    const Eigen::MatrixXd H(op.energy), D(op.dissipation);
    CHECK((H - H.transpose()).norm() <= 1e-12 * H.norm());
    for (int t = 0; t < 1000; ++t) {
      Eigen::VectorXd x(op.dim());
      for (int i = 0; i < x.size(); ++i) x[i] = normal(rng);
      const double hb = x.dot(H * (B * x)), d = x.dot(D * x);
      CHECK(hb <= 1e-12 * x.dot(H * x));
      CHECK(hb + d == doctest::Approx(0.0).scale(x.dot(H * x) * B.norm()).epsilon(1e-12));
    }
  }
}

TEST_CASE("FD energy is non-increasing along FD trajectories") {
  BeamParams p;
  p.alpha = 0.5;
  const FdOperator op = build_fd(p, 12);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  Eigen::VectorXd x(op.dim());
  for (int i = 0; i < x.size(); ++i) x[i] = normal(rng);
  std::vector<double> times;
  for (int k = 0; k <= 200; ++k) times.push_back(0.02 * k);
  const auto e = fd_energy_trajectory(op, x, times);
  CHECK(e.front() == doctest::Approx(fd_energy(op, x)).epsilon(1e-14));
  for (std::size_t k = 1; k < e.size(); ++k) CHECK(e[k] <= e[k - 1] * (1 + 1e-12));
  CHECK(e.back() < 0.5 * e.front());
}

TEST_CASE("grid size precondition") {
  CHECK_THROWS_AS(build_fd(BeamParams{}, 7), ValidationError);
  CHECK(build_fd(BeamParams{}, 8).dim() == 56);
}

TEST_CASE("pure discrete modes have unit signature") {
  const FdOperator op = build_fd(BeamParams{}, 40);
  const int nb = op.block;
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(op.dim());
  for (int j = 1; j < op.M; ++j) x(j - 1) = std::sin(3 * std::numbers::pi * j / op.M);
  CHECK(mode_signature(op, x, 3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mode_signature(op, x, 2) <= 1e-12);
  // cosine on cells written in the mean-free basis: w_k = sum_{i<=k} c_i
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(op.dim());
  std::complex<double> acc = 0;
  for (int k = 0; k < nb; ++k) {
    acc += std::cos(2 * std::numbers::pi * (k + 0.5) / op.M);
    y(fd_block::z_t * nb + k) = acc;
  }
  CHECK(mode_signature(op, y, 2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("FD spectrum converges to the modal spectrum at second order") {
  BeamParams p;
  p.alpha = p.beta = 1.0;
  const auto a = compare_spectra(p, 100, 3);
  const auto b = compare_spectra(p, 200, 3);
  CHECK(a.matches.size() == b.matches.size());
  CHECK(a.max_rel_error / b.max_rel_error == doctest::Approx(4.0).epsilon(0.1));
  CHECK(b.mode1_rel_error <= 1e-4);
  for (const auto& m : b.matches) CHECK(m.signature >= 0.9);
}

TEST_CASE("fractional exponents converge too") {
  BeamParams p;
  p.alpha = 0.5;
  p.beta = 0.25;
  const auto a = compare_spectra(p, 50, 2);
  const auto b = compare_spectra(p, 100, 2);
  CHECK(a.max_rel_error / b.max_rel_error == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("decoupled FD operator splits into two beams") {
  BeamParams p;
  p.m = 0.0;
  p.alpha = 1.0;
  const FdOperator op = build_fd(p, 20);
  const Eigen::MatrixXd K(op.stiffness);
  const int half = 4 * op.block;
  CHECK(K.topRightCorner(half, half).isZero(0.0));
  CHECK(K.bottomLeftCorner(half, half).isZero(0.0));
  const auto rep = compare_spectra(p, 100, 2);
  CHECK(rep.max_rel_error <= 1e-3);
}

TEST_CASE("compare_spectra preconditions") {
  CHECK_THROWS_AS(compare_spectra(BeamParams{}, 20, 10), ValidationError);
  CHECK_THROWS_AS(compare_spectra(BeamParams{}, 100, 0), ValidationError);
}
