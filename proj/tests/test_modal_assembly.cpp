#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "nanobeam/modal_assembly.hpp"

using namespace nanobeam;
using CVec = Eigen::Matrix<std::complex<double>, kStateSize, 1>;

namespace {

CVec random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CVec x;
  for (int i = 0; i < kStateSize; ++i) x[i] = {normal(rng), normal(rng)};
  return x;
}

}  // namespace

TEST_CASE("reference entries for the all-ones configuration") {
  BeamParams p;
  p.alpha = 1.0;
  const ModeBlock b = assemble_block(p, 1);
  CHECK(b.sigma == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(b.B(slot::v_t, slot::v_t) == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(b.B(slot::u_t, slot::y) == 1.0);
  CHECK(b.H(slot::u, slot::y) == -1.0);
  CHECK(b.H(slot::y, slot::u) == -1.0);
}

TEST_CASE("first-order rows select the velocities") {
  BeamParams p;
  p.rho2 = 3.0;
  p.m = 0.2;
  for (int n : {1, 5, 40}) {
    const ModeBlock b = assemble_block(p, n);
    for (int pos : {slot::u, slot::v, slot::y, slot::z}) {
      for (int j = 0; j < kStateSize; ++j) CHECK(b.B(pos, j) == (j == pos + 1 ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("dissipativity identity on random complex vectors") {
  std::mt19937_64 rng(2024);
  for (double a : {0.0, 0.5, 1.0})
    for (double be : {0.0, 0.5, 1.0}) {
      BeamParams p;
      p.alpha = a;
      p.beta = be;
      double worst = 0.0;
      for (int n = 1; n <= 64; ++n) {
        const ModeBlock b = assemble_block(p, n);
        const ModeBlock::Matrix HB = b.H * b.B;
        for (int t = 0; t < 1000; ++t) {
          const CVec x = random_complex(rng);
          const double lhs = (x.adjoint() * HB * x)(0).real();
          const double d = (x.adjoint() * b.D * x)(0).real();
          worst = std::max(worst, std::abs(lhs + d) / (x.squaredNorm() * HB.norm()));
        }
      }
      CHECK(worst <= 1e-12);
    }
}

TEST_CASE("Gram definiteness") {
  BeamParams p;
  p.m = 4.0;
  p.alpha = 0.0;
  for (int n : {1, 2, 17, 256}) {
    const GramPair g = gram_block(p, n);
    CHECK((g.H - g.H.transpose()).norm() == 0.0);
    CHECK((g.D - g.D.transpose()).norm() == 0.0);
    Eigen::SelfAdjointEigenSolver<ModeBlock::Matrix> eh(g.H), ed(g.D);
    CHECK(eh.eigenvalues()(0) > 0.0);
    CHECK(ed.eigenvalues()(0) >= -1e-12 * ed.eigenvalues()(kStateSize - 1));
  }
}

TEST_CASE("Timoshenko blocks are the m = 0 sub-blocks") {
  BeamParams p;
  p.m = 0.0;
  p.rho1 = 1.3;
  p.b2 = 0.7;
  p.gamma4 = 2.0;
  p.alpha = 0.25;
  p.beta = 0.75;
  for (int n = 1; n <= 32; ++n) {
    const ModeBlock full = assemble_block(p, n);
    const TimoshenkoBlock inner = timoshenko_block(p, n, Beam::inner);
    const TimoshenkoBlock outer = timoshenko_block(p, n, Beam::outer);
    CHECK(inner.B == full.B.topLeftCorner<4, 4>());
    CHECK(outer.B == full.B.bottomRightCorner<4, 4>());
    CHECK(inner.H == full.H.topLeftCorner<4, 4>());
    CHECK(outer.D == full.D.bottomRightCorner<4, 4>());
    CHECK(full.B.topRightCorner<4, 4>().isZero(0.0));
    CHECK(full.B.bottomLeftCorner<4, 4>().isZero(0.0));
  }
}

TEST_CASE("eigenvalues sorted and closed under conjugation") {
  const BeamParams p;
  for (int n : {1, 3, 50}) {
    const auto e = block_eigenvalues(assemble_block(p, n));
    for (int i = 1; i < e.size(); ++i) CHECK(e(i - 1).real() >= e(i).real());
    for (int i = 0; i < e.size(); ++i) {
      double best = INFINITY;
      for (int j = 0; j < e.size(); ++j) best = std::min(best, std::abs(e(j) - std::conj(e(i))));
      CHECK(best <= 1e-10 * std::abs(e(i)));
    }
  }
}

TEST_CASE("mode 1 spectrum does not depend on the exponents when sigma = 1") {
  BeamParams a, b;
  a.alpha = a.beta = 0.0;
  b.alpha = b.beta = 1.0;
  const auto ea = block_eigenvalues(assemble_block(a, 1));
  const auto eb = block_eigenvalues(assemble_block(b, 1));
  CHECK((ea - eb).norm() <= 1e-12);
  CHECK(ea(0).real() == doctest::Approx(-0.19098300562505258).epsilon(1e-12));
}

TEST_CASE("parallel assembly matches per-mode assembly and generator action") {
  BeamParams p;
  p.alpha = 0.4;
  const auto blocks = assemble_blocks(p, 100);
  REQUIRE(blocks.size() == 100);
  std::mt19937_64 rng(9);
  ComplexModalState s(100);
  for (int n = 1; n <= 100; ++n) {
    CHECK(blocks[n - 1].B == assemble_block(p, n).B);
    s.mode(n) = random_complex(rng);
  }
  const auto bs = apply_generator(p, s);
  for (int n = 1; n <= 100; n += 9) CHECK((bs.mode(n) - blocks[n - 1].B * s.mode(n)).norm() == 0.0);
}
